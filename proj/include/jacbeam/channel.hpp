// SPDX-License-Identifier: Apache-2.0
//
// jacbeam - near-field beam training simulation for uniform linear arrays
// Copyright (C) 2026 the jacbeam contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#ifndef JACBEAM_CHANNEL_HPP
#define JACBEAM_CHANNEL_HPP

#include <complex>
#include <cstdint>
#include <vector>

#include "jacbeam/geometry.hpp"
#include "jacbeam/rng.hpp"

namespace jacbeam
{

enum class ChannelModel
{
    exact_spherical,
    quadratic,
    far_field
};

// Length-N complex array response. Noiseless samples are unit-modulus
// phasors scaled by gain.
struct ChannelVector
{
    std::vector<std::complex<double>> samples;
    ChannelModel model = ChannelModel::exact_spherical;
    double gain = 1.0; // rho, amplitude of each noiseless sample

    int size() const { return static_cast<int>(samples.size()); }
};

// Noise description for snapshots and training measurements.
// snr_db = +infinity is the noiseless sentinel. The per-element variance
// follows sigma^2 = tx_power * N / snr_linear, so the combined array SNR
// at the receiver equals snr_db when all N elements are summed coherently.
struct NoiseSpec
{
    double snr_db = 0.0;
    double tx_power = 1.0; // P_t [W]
    std::uint64_t seed = 0;

    bool noiseless() const;
    double snr_linear() const;
    // Per-element noise variance for an N-element array
    double noise_variance(int n_antennas) const;
};

// Exact spherical-wave response: samples[n] = exp(jk(|p - x_n| - |p|)).
// Throws std::domain_error when the position is inside the Fresnel lower
// bound, where the radiating near-field model stops being meaningful.
ChannelVector exact_channel(const ArrayConfig &cfg, const UserPosition &pos);

// Quadratic-phase approximation: samples[n] = exp(jk(p1 x_n^2 / 2 + p2 x_n)).
// Throws std::invalid_argument unless p1 >= 0 and |p2| <= 1.
ChannelVector quadratic_channel(const ArrayConfig &cfg, const NearFieldParams &params);

// Far-field plane wave from angle theta: samples[n] = exp(-jk x_n sin(theta)).
// Throws std::invalid_argument unless |theta| < pi/2.
ChannelVector far_field_channel(const ArrayConfig &cfg, double theta);

// Largest per-element phase discrepancy [rad] between the exact spherical
// response and the quadratic approximation at the given position.
double phase_error_quadratic(const ArrayConfig &cfg, const UserPosition &pos);

// sqrt(P_t) * samples + w, with w i.i.d. circularly symmetric complex
// Gaussian of variance noise_variance(N) per element. Deterministic given
// noise.seed; the stream is derived from the snapshot tag so it never
// collides with sweep measurement noise.
ChannelVector add_noise(const ChannelVector &ch, const NoiseSpec &noise);

// Same, drawing from an explicit stream (parallel Monte-Carlo callers
// derive one stream per trial).
ChannelVector add_noise(const ChannelVector &ch, const NoiseSpec &noise, Rng &rng);

// Far-field spectral projection: entry m = (1/N)|sum_n exp(jk x_n u_m) ch[n]|
// over the N-point grid u_m = -1 + 2(m-1)/N, m = 1..N (this grid contains
// sin(theta) = 0 for even N). With half-wavelength spacing the projection of
// a grid-aligned far-field channel is an exact indicator.
std::vector<double> spatial_spectrum(const ArrayConfig &cfg, const ChannelVector &ch);

} // namespace jacbeam

#endif

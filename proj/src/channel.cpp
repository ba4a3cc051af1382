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

#include "jacbeam/channel.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>

namespace jacbeam
{

bool NoiseSpec::noiseless() const
{
    return std::isinf(snr_db) && snr_db > 0.0;
}

double NoiseSpec::snr_linear() const
{
    return std::pow(10.0, snr_db / 10.0);
}

double NoiseSpec::noise_variance(int n_antennas) const
{
    if (n_antennas < 1)
        throw std::invalid_argument("noise_variance: n_antennas must be >= 1");
    if (noiseless())
        return 0.0;
    return tx_power * static_cast<double>(n_antennas) / snr_linear();
}

ChannelVector exact_channel(const ArrayConfig &cfg, const UserPosition &pos)
{
    double r = pos.radius();
    double bound = fresnel_lower_bound(cfg);
    if (r < bound)
        throw std::domain_error("exact_channel: radius " + std::to_string(r) +
                                " m is inside the Fresnel lower bound " + std::to_string(bound) + " m");

    int n_ant = cfg.n_antennas;
    double k = cfg.wavenumber();
    ChannelVector ch;
    ch.samples.resize(n_ant);
    ch.model = ChannelModel::exact_spherical;
    for (int n = 1; n <= n_ant; n++)
    {
        double xn = antenna_position(cfg, n);
        // |p - x_n| - |p| evaluated as (x_n^2 - 2 p_x x_n) / (|p - x_n| + |p|)
        // to avoid cancellation between two nearly equal distances
        double dist = std::hypot(pos.x - xn, pos.z);
        double delta = (xn * xn - 2.0 * pos.x * xn) / (dist + r);
        ch.samples[static_cast<size_t>(n - 1)] = std::polar(1.0, k * delta);
    }
    return ch;
}

ChannelVector quadratic_channel(const ArrayConfig &cfg, const NearFieldParams &params)
{
    if (!(params.p1 >= 0.0) || !std::isfinite(params.p1))
        throw std::invalid_argument("quadratic_channel: p1 must be finite and >= 0");
    if (!(std::fabs(params.p2) <= 1.0))
        throw std::invalid_argument("quadratic_channel: |p2| must be <= 1");

    int n_ant = cfg.n_antennas;
    double k = cfg.wavenumber();
    ChannelVector ch;
    ch.samples.resize(n_ant);
    ch.model = ChannelModel::quadratic;
    for (int n = 1; n <= n_ant; n++)
    {
        double xn = antenna_position(cfg, n);
        double phase = k * (0.5 * params.p1 * xn * xn + params.p2 * xn);
        ch.samples[static_cast<size_t>(n - 1)] = std::polar(1.0, phase);
    }
    return ch;
}

ChannelVector far_field_channel(const ArrayConfig &cfg, double theta)
{
    if (!(std::fabs(theta) < 0.5 * std::numbers::pi))
        throw std::invalid_argument("far_field_channel: |theta| must be < pi/2");

    int n_ant = cfg.n_antennas;
    double k = cfg.wavenumber();
    // Phase written as k * (p2 * x_n) with p2 = -sin(theta): the identical
    // expression quadratic_channel uses at p1 = 0, so the two models
    // degenerate onto each other bit for bit.
    double p2 = -std::sin(theta);
    ChannelVector ch;
    ch.samples.resize(n_ant);
    ch.model = ChannelModel::far_field;
    for (int n = 1; n <= n_ant; n++)
    {
        double xn = antenna_position(cfg, n);
        ch.samples[static_cast<size_t>(n - 1)] = std::polar(1.0, k * (p2 * xn));
    }
    return ch;
}

double phase_error_quadratic(const ArrayConfig &cfg, const UserPosition &pos)
{
    double r = pos.radius();
    if (!(r > 0.0))
        throw std::invalid_argument("phase_error_quadratic: radius must be positive");

    NearFieldParams params = params_from_position(pos);
    double k = cfg.wavenumber();
    double worst = 0.0;
    for (int n = 1; n <= cfg.n_antennas; n++)
    {
        double xn = antenna_position(cfg, n);
        double dist = std::hypot(pos.x - xn, pos.z);
        double exact_phase = k * (xn * xn - 2.0 * pos.x * xn) / (dist + r);
        double quad_phase = k * (0.5 * params.p1 * xn * xn + params.p2 * xn);
        double err = std::fabs(exact_phase - quad_phase);
        if (err > worst)
            worst = err;
    }
    return worst;
}

ChannelVector add_noise(const ChannelVector &ch, const NoiseSpec &noise)
{
    Rng rng(derive_stream(noise.seed, stream_snapshot));
    return add_noise(ch, noise, rng);
}

ChannelVector add_noise(const ChannelVector &ch, const NoiseSpec &noise, Rng &rng)
{
    double amp = std::sqrt(noise.tx_power);
    ChannelVector out = ch;
    for (auto &s : out.samples)
        s *= amp;
    out.gain = ch.gain * amp;
    if (noise.noiseless())
        return out;

    double var = noise.noise_variance(ch.size());
    for (auto &s : out.samples)
        s += rng.complex_gaussian(var);
    return out;
}

std::vector<double> spatial_spectrum(const ArrayConfig &cfg, const ChannelVector &ch)
{
    if (ch.size() != cfg.n_antennas)
        throw std::invalid_argument("spatial_spectrum: channel length does not match array size");

    int n_ant = cfg.n_antennas;
    double k = cfg.wavenumber();
    std::vector<double> spectrum(static_cast<size_t>(n_ant));
    for (int m = 1; m <= n_ant; m++)
    {
        double u = -1.0 + 2.0 * static_cast<double>(m - 1) / static_cast<double>(n_ant);
        std::complex<double> acc = 0.0;
        for (int n = 1; n <= n_ant; n++)
        {
            double xn = antenna_position(cfg, n);
            acc += std::polar(1.0, k * xn * u) * ch.samples[static_cast<size_t>(n - 1)];
        }
        spectrum[static_cast<size_t>(m - 1)] = std::abs(acc) / static_cast<double>(n_ant);
    }
    return spectrum;
}

} // namespace jacbeam

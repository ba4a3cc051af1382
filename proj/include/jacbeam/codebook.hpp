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

#ifndef JACBEAM_CODEBOOK_HPP
#define JACBEAM_CODEBOOK_HPP

#include <complex>
#include <string>
#include <vector>

#include "jacbeam/channel.hpp"
#include "jacbeam/geometry.hpp"

namespace jacbeam
{

enum class Scheme
{
    dft,
    polar,
    jac
};

std::string scheme_name(Scheme s);
Scheme scheme_from_name(const std::string &name);

// Quadratic-phase curvature template: samples[n] = exp(jk p1 x_n^2 / 2).
struct ShapingVector
{
    std::vector<std::complex<double>> samples;
    double p1 = 0.0;
};

// One training beam. Every element has modulus exactly 1/N so a perfectly
// matched channel reaches |w^T h| = 1. The beam steers toward sin(theta) = u
// (angle_index on the codebook grid) with curvature compensation p1
// (ring_index; always ring 0 for DFT).
struct Codeword
{
    std::vector<std::complex<double>> weights;
    int angle_index = 0; // 0-based position on the sin(theta) grid
    double u = 0.0;      // grid value, u = -1 + (2m-1)/N for angle_index m-1
    int ring_index = 0;  // 0-based curvature ring (polar only; 0 otherwise)
    double p1 = 0.0;     // curvature compensated by this codeword [1/m]
};

struct Codebook
{
    Scheme scheme = Scheme::dft;
    std::vector<Codeword> codewords;
    int overhead = 0; // training slots this codebook costs end to end

    int size() const { return static_cast<int>(codewords.size()); }
};

// Throws std::invalid_argument when p1 < 0.
ShapingVector shaping_vector(const ArrayConfig &cfg, double p1);

// N codewords on the angular grid u_m = -1 + (2m-1)/N, m = 1..N;
// weights[n] = (1/N) exp(jk x_n u_m). Overhead N.
Codebook dft_codebook(const ArrayConfig &cfg);

// DFT codebook composed element-wise with the conjugated shaping vector for
// p1_hat. Degenerates to the DFT codebook bit for bit at p1_hat = 0.
// Overhead N + 1 (the extra slot pays for the snapshot that estimated p1).
Codebook jac_codebook(const ArrayConfig &cfg, double p1_hat);

// S curvature rings per angle, rings uniform in p1 over [0, p1_max]
// (uniform in reciprocal distance at fixed angle). S = 1 reproduces the
// DFT codebook. Overhead S * N.
Codebook polar_codebook(const ArrayConfig &cfg, int n_rings, double p1_max);

// The ring curvature values polar_codebook uses: n_rings values uniform in
// p1 over [0, p1_max], or just {0} when n_rings = 1.
std::vector<double> polar_ring_p1(int n_rings, double p1_max);

// Element-wise product of ch with conj(shaping_vector(p1_hat)); maps a
// quadratic channel with matching p1 exactly onto its far-field twin.
ChannelVector de_shape(const ArrayConfig &cfg, const ChannelVector &ch, double p1_hat);

} // namespace jacbeam

#endif

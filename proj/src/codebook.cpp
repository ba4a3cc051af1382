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

#include "jacbeam/codebook.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

namespace jacbeam
{

std::string scheme_name(Scheme s)
{
    switch (s)
    {
    case Scheme::dft:
        return "dft";
    case Scheme::polar:
        return "polar";
    case Scheme::jac:
        return "jac";
    }
    throw std::logic_error("scheme_name: unreachable");
}

Scheme scheme_from_name(const std::string &name)
{
    if (name == "dft")
        return Scheme::dft;
    if (name == "polar")
        return Scheme::polar;
    if (name == "jac")
        return Scheme::jac;
    throw std::invalid_argument("unknown scheme '" + name + "' (expected dft, polar or jac)");
}

ShapingVector shaping_vector(const ArrayConfig &cfg, double p1)
{
    if (!(p1 >= 0.0) || !std::isfinite(p1))
        throw std::invalid_argument("shaping_vector: p1 must be finite and >= 0");

    double k = cfg.wavenumber();
    ShapingVector s;
    s.p1 = p1;
    s.samples.resize(cfg.n_antennas);
    for (int n = 1; n <= cfg.n_antennas; n++)
    {
        double xn = antenna_position(cfg, n);
        s.samples[static_cast<size_t>(n - 1)] = std::polar(1.0, k * 0.5 * p1 * xn * xn);
    }
    return s;
}

Codebook dft_codebook(const ArrayConfig &cfg)
{
    int n_ant = cfg.n_antennas;
    double k = cfg.wavenumber();
    double scale = 1.0 / static_cast<double>(n_ant);

    Codebook book;
    book.scheme = Scheme::dft;
    book.overhead = n_ant;
    book.codewords.resize(n_ant);
    for (int m = 1; m <= n_ant; m++)
    {
        Codeword &w = book.codewords[static_cast<size_t>(m - 1)];
        w.angle_index = m - 1;
        w.u = -1.0 + (2.0 * static_cast<double>(m) - 1.0) / static_cast<double>(n_ant);
        w.ring_index = 0;
        w.p1 = 0.0;
        w.weights.resize(n_ant);
        for (int n = 1; n <= n_ant; n++)
        {
            double xn = antenna_position(cfg, n);
            w.weights[static_cast<size_t>(n - 1)] = scale * std::polar(1.0, k * xn * w.u);
        }
    }
    return book;
}

namespace
{

// Compose a base codebook with conj(shaping(p1)). Zero curvature is a
// no-op so the base weights pass through bit for bit.
void apply_shaping(Codebook &book, const ArrayConfig &cfg, double p1)
{
    for (auto &w : book.codewords)
        w.p1 = p1;
    if (p1 == 0.0)
        return;
    ShapingVector s = shaping_vector(cfg, p1);
    for (auto &w : book.codewords)
        for (size_t n = 0; n < w.weights.size(); n++)
            w.weights[n] *= std::conj(s.samples[n]);
}

} // namespace

Codebook jac_codebook(const ArrayConfig &cfg, double p1_hat)
{
    if (!(p1_hat >= 0.0) || !std::isfinite(p1_hat))
        throw std::invalid_argument("jac_codebook: p1_hat must be finite and >= 0");

    Codebook book = dft_codebook(cfg);
    book.scheme = Scheme::jac;
    book.overhead = cfg.n_antennas + 1; // +1 for the estimation snapshot
    apply_shaping(book, cfg, p1_hat);
    return book;
}

std::vector<double> polar_ring_p1(int n_rings, double p1_max)
{
    if (n_rings < 1)
        throw std::invalid_argument("polar_ring_p1: n_rings must be >= 1");
    if (!(p1_max > 0.0) || !std::isfinite(p1_max))
        throw std::invalid_argument("polar_ring_p1: p1_max must be finite and > 0");
    std::vector<double> rings(static_cast<size_t>(n_rings), 0.0);
    for (int ring = 1; ring < n_rings; ring++)
        rings[static_cast<size_t>(ring)] = p1_max * static_cast<double>(ring) / static_cast<double>(n_rings - 1);
    return rings;
}

Codebook polar_codebook(const ArrayConfig &cfg, int n_rings, double p1_max)
{
    std::vector<double> rings = polar_ring_p1(n_rings, p1_max);
    if (static_cast<long long>(n_rings) * cfg.n_antennas > 50'000'000ll)
        throw std::invalid_argument("polar_codebook: n_rings * n_antennas too large");

    Codebook book;
    book.scheme = Scheme::polar;
    book.overhead = n_rings * cfg.n_antennas;
    book.codewords.reserve(static_cast<size_t>(n_rings) * static_cast<size_t>(cfg.n_antennas));

    Codebook base = dft_codebook(cfg);
    for (int ring = 0; ring < n_rings; ring++)
    {
        Codebook shaped = base;
        apply_shaping(shaped, cfg, rings[static_cast<size_t>(ring)]);
        for (auto &w : shaped.codewords)
        {
            w.ring_index = ring;
            book.codewords.push_back(std::move(w));
        }
    }
    return book;
}

ChannelVector de_shape(const ArrayConfig &cfg, const ChannelVector &ch, double p1_hat)
{
    if (ch.size() != cfg.n_antennas)
        throw std::invalid_argument("de_shape: channel length does not match array size");
    if (p1_hat == 0.0)
        return ch; // zero curvature de-shapes to the identity

    ShapingVector s = shaping_vector(cfg, p1_hat);
    ChannelVector out = ch;
    for (size_t n = 0; n < out.samples.size(); n++)
        out.samples[n] *= std::conj(s.samples[n]);
    return out;
}

} // namespace jacbeam

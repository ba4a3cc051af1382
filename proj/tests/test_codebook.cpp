// SPDX-License-Identifier: Apache-2.0
// jacbeam - near-field beam training simulation for uniform linear arrays
// Copyright (C) 2026 the jacbeam contributors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
// ------------------------------------------------------------------------

#include "doctest.h"

#include "jacbeam/channel.hpp"
#include "jacbeam/codebook.hpp"
#include "jacbeam/geometry.hpp"
#include "jacbeam/rng.hpp"

#include <cmath>
#include <complex>
#include <vector>

using namespace jacbeam;
using cd = std::complex<double>;

namespace
{
    // Unnormalized steering response of one codeword toward a channel vector.
    cd contract(const Codeword &w, const ChannelVector &ch)
    {
        cd acc(0.0, 0.0);
        for (size_t n = 0; n < w.weights.size(); n++)
            acc += w.weights[n] * ch.samples[n];
        return acc;
    }

    bool bitwise_equal(const std::vector<cd> &a, const std::vector<cd> &b)
    {
        if (a.size() != b.size())
            return false;
        for (size_t n = 0; n < a.size(); n++)
            if (a[n].real() != b[n].real() || a[n].imag() != b[n].imag())
                return false;
        return true;
    }
}

TEST_CASE("dft codebook angular grid for a 4 element array")
{
    ArrayConfig cfg = ArrayConfig::half_wavelength(4, 60.0e9);
    Codebook book = dft_codebook(cfg);

    REQUIRE(book.size() == 4);
    CHECK(book.scheme == Scheme::dft);
    CHECK(book.overhead == 4);

    CHECK(book.codewords[0].u == -0.75);
    CHECK(book.codewords[1].u == -0.25);
    CHECK(book.codewords[2].u == 0.25);
    CHECK(book.codewords[3].u == 0.75);

    for (int m = 0; m < 4; m++)
    {
        CHECK(book.codewords[m].angle_index == m);
        CHECK(book.codewords[m].ring_index == 0);
        CHECK(book.codewords[m].p1 == 0.0);
    }
}

TEST_CASE("dft codeword near the middle of the large reference array")
{
    ArrayConfig cfg = ArrayConfig::half_wavelength(800, 60.0e9);
    Codebook book = dft_codebook(cfg);

    REQUIRE(book.size() == 800);
    // m = 400 (1-based): u = -1 + 799/800
    CHECK(book.codewords[399].u == doctest::Approx(-0.00125).epsilon(1e-15));
}

TEST_CASE("codeword entries have constant modulus 1/N")
{
    ArrayConfig cfg = ArrayConfig::half_wavelength(16, 28.0e9);

    std::vector<Codebook> books;
    books.push_back(dft_codebook(cfg));
    books.push_back(jac_codebook(cfg, 0.02));
    books.push_back(polar_codebook(cfg, 3, 0.05));

    for (const Codebook &book : books)
    {
        for (const Codeword &w : book.codewords)
        {
            REQUIRE((int)w.weights.size() == cfg.n_antennas);
            for (const cd &v : w.weights)
                CHECK(std::abs(v) == doctest::Approx(1.0 / 16.0).epsilon(1e-14));
        }
    }
}

TEST_CASE("dft codewords are orthogonal after rescaling")
{
    ArrayConfig cfg = ArrayConfig::half_wavelength(64, 60.0e9);
    Codebook book = dft_codebook(cfg);
    const int n = cfg.n_antennas;

    for (int i = 0; i < n; i += 7)
    {
        for (int j = 0; j < n; j += 9)
        {
            cd acc(0.0, 0.0);
            for (int a = 0; a < n; a++)
                acc += (double)n * book.codewords[i].weights[a] *
                       std::conj((double)n * book.codewords[j].weights[a]);
            if (i == j)
                CHECK(std::abs(acc) == doctest::Approx((double)n).epsilon(1e-12));
            else
                CHECK(std::abs(acc) < 1e-9 * n);
        }
    }
}

TEST_CASE("shaping vector basics")
{
    ArrayConfig cfg = ArrayConfig::half_wavelength(8, 60.0e9);

    SUBCASE("zero curvature gives the all-ones vector exactly")
    {
        ShapingVector s = shaping_vector(cfg, 0.0);
        REQUIRE((int)s.samples.size() == 8);
        for (const cd &v : s.samples)
        {
            CHECK(v.real() == 1.0);
            CHECK(v.imag() == 0.0);
        }
    }

    SUBCASE("entries match the quadratic phase profile")
    {
        const double p1 = 0.01;
        ShapingVector s = shaping_vector(cfg, p1);
        const double k = cfg.wavenumber();
        for (int n = 1; n <= 8; n++)
        {
            const double xn = antenna_position(cfg, n);
            const cd want = std::polar(1.0, k * (0.5 * p1 * xn * xn));
            CHECK(std::abs(s.samples[n - 1] - want) < 1e-14);
        }
    }

    SUBCASE("doubling the curvature doubles every phase")
    {
        ShapingVector s1 = shaping_vector(cfg, 0.013);
        ShapingVector s2 = shaping_vector(cfg, 0.026);
        for (int n = 0; n < 8; n++)
            CHECK(std::abs(s2.samples[n] - s1.samples[n] * s1.samples[n]) < 1e-12);
    }

    SUBCASE("negative curvature is rejected")
    {
        CHECK_THROWS_AS(shaping_vector(cfg, -1e-6), std::invalid_argument);
    }
}

TEST_CASE("jac codebook with zero curvature is the dft codebook bit for bit")
{
    ArrayConfig cfg = ArrayConfig::half_wavelength(32, 60.0e9);
    Codebook dft = dft_codebook(cfg);
    Codebook jac = jac_codebook(cfg, 0.0);

    REQUIRE(jac.size() == dft.size());
    CHECK(jac.scheme == Scheme::jac);
    CHECK(jac.overhead == 33);
    for (int m = 0; m < dft.size(); m++)
    {
        CHECK(bitwise_equal(jac.codewords[m].weights, dft.codewords[m].weights));
        CHECK(jac.codewords[m].u == dft.codewords[m].u);
        CHECK(jac.codewords[m].p1 == 0.0);
    }
}

TEST_CASE("jac codeword is matched to the quadratic channel it targets")
{
    ArrayConfig cfg = ArrayConfig::half_wavelength(64, 60.0e9);
    const double p1 = 0.4;
    Codebook book = jac_codebook(cfg, p1);

    SUBCASE("on-grid channel gives unit response")
    {
        // Codeword m grids sin(theta) = u_m; the channel of that user has
        // p2 = -u_m, and the plain-transpose contraction cancels exactly.
        for (int m = 0; m < book.size(); m += 11)
        {
            NearFieldParams par{p1, -book.codewords[m].u};
            ChannelVector ch = quadratic_channel(cfg, par);
            CHECK(std::abs(contract(book.codewords[m], ch)) ==
                  doctest::Approx(1.0).epsilon(1e-12));
        }
    }

    SUBCASE("argmax over the codebook recovers the targeted grid index")
    {
        Rng rng(77);
        for (int trial = 0; trial < 100; trial++)
        {
            const double p1_t = 1.0 * rng.uniform();
            const int m = (int)(rng.uniform() * 64.0);
            Codebook b = jac_codebook(cfg, p1_t);
            ChannelVector ch = quadratic_channel(cfg, NearFieldParams{p1_t, -b.codewords[m].u});

            int best = -1;
            double best_pow = -1.0;
            for (int i = 0; i < b.size(); i++)
            {
                const double p = std::norm(contract(b.codewords[i], ch));
                if (p > best_pow)
                {
                    best_pow = p;
                    best = i;
                }
            }
            CHECK(best == m);
        }
    }
}

TEST_CASE("shaped codebook response equals dft response of the de-shaped channel")
{
    // Fundamental factorization: conj-shaping inside the codeword can be moved
    // onto the channel, element by element, with no approximation.
    ArrayConfig cfg = ArrayConfig::half_wavelength(64, 60.0e9);
    const double p1 = 0.7;
    Codebook dft = dft_codebook(cfg);
    Codebook jac = jac_codebook(cfg, p1);

    ChannelVector ch = quadratic_channel(cfg, NearFieldParams{0.9, 0.31});
    ChannelVector flat = de_shape(cfg, ch, p1);

    for (int m = 0; m < 64; m += 5)
    {
        const cd a = contract(jac.codewords[m], ch);
        const cd b = contract(dft.codewords[m], flat);
        CHECK(std::abs(a - b) < 1e-12);
    }
}

TEST_CASE("polar codebook structure")
{
    ArrayConfig cfg = ArrayConfig::half_wavelength(8, 60.0e9);

    SUBCASE("ring curvatures are uniform from zero to the maximum")
    {
        std::vector<double> rings = polar_ring_p1(5, 0.08);
        REQUIRE(rings.size() == 5);
        CHECK(rings[0] == 0.0);
        CHECK(rings[4] == doctest::Approx(0.08).epsilon(1e-15));
        CHECK(rings[1] == doctest::Approx(0.02).epsilon(1e-15));
        CHECK(rings[3] - rings[2] == doctest::Approx(0.02).epsilon(1e-12));
    }

    SUBCASE("a single ring degenerates to the dft codebook bit for bit")
    {
        std::vector<double> rings = polar_ring_p1(1, 0.08);
        REQUIRE(rings.size() == 1);
        CHECK(rings[0] == 0.0);

        Codebook dft = dft_codebook(cfg);
        Codebook polar = polar_codebook(cfg, 1, 0.08);
        REQUIRE(polar.size() == 8);
        CHECK(polar.overhead == 8);
        for (int m = 0; m < 8; m++)
            CHECK(bitwise_equal(polar.codewords[m].weights, dft.codewords[m].weights));
    }

    SUBCASE("ring-major layout with four rings")
    {
        Codebook book = polar_codebook(cfg, 4, 0.1);
        REQUIRE(book.size() == 32);
        CHECK(book.overhead == 32);
        for (int s = 0; s < 4; s++)
        {
            for (int m = 0; m < 8; m++)
            {
                const Codeword &w = book.codewords[s * 8 + m];
                CHECK(w.ring_index == s);
                CHECK(w.angle_index == m);
                CHECK(w.p1 == doctest::Approx(s * 0.1 / 3.0).epsilon(1e-14));
            }
        }
    }

    SUBCASE("invalid shapes are rejected")
    {
        CHECK_THROWS_AS(polar_codebook(cfg, 0, 0.1), std::invalid_argument);
        CHECK_THROWS_AS(polar_codebook(cfg, 2, -0.1), std::invalid_argument);
        CHECK_THROWS_AS(polar_ring_p1(2, 0.0), std::invalid_argument);
    }
}

TEST_CASE("adjacent polar rings are resolvable at the default spacing")
{
    ArrayConfig cfg = ArrayConfig::half_wavelength(800, 60.0e9);
    const double p1_max = 1.0 / fresnel_lower_bound(cfg);
    Codebook book = polar_codebook(cfg, 8, p1_max);
    const int n = cfg.n_antennas;

    // Normalized cross-correlation between same-angle codewords on adjacent
    // rings. The value is independent of the angle index, so one column is
    // representative.
    for (int s = 0; s + 1 < 8; s++)
    {
        const Codeword &a = book.codewords[s * n];
        const Codeword &b = book.codewords[(s + 1) * n];
        cd acc(0.0, 0.0);
        for (int i = 0; i < n; i++)
            acc += (double)n * a.weights[i] * std::conj((double)n * b.weights[i]);
        const double corr = std::abs(acc) / n;
        CHECK(corr < 0.7);
    }
}

TEST_CASE("de-shaping by the true curvature flattens a quadratic channel")
{
    ArrayConfig cfg = ArrayConfig::half_wavelength(128, 60.0e9);
    const double p1 = 0.35;
    const double p2 = -0.42;

    ChannelVector curved = quadratic_channel(cfg, NearFieldParams{p1, p2});
    ChannelVector flat = de_shape(cfg, curved, p1);
    ChannelVector want = quadratic_channel(cfg, NearFieldParams{0.0, p2});

    double sup = 0.0;
    for (int n = 0; n < 128; n++)
        sup = std::max(sup, std::abs(flat.samples[n] - want.samples[n]));
    CHECK(sup < 1e-12);
}

TEST_CASE("de-shaping with zero curvature leaves the channel untouched")
{
    ArrayConfig cfg = ArrayConfig::half_wavelength(16, 60.0e9);
    ChannelVector ch = exact_channel(cfg, UserPosition{0.3, 1.4});
    ChannelVector out = de_shape(cfg, ch, 0.0);
    CHECK(bitwise_equal(out.samples, ch.samples));
}

TEST_CASE("de-shape followed by re-shaping is an involution")
{
    ArrayConfig cfg = ArrayConfig::half_wavelength(64, 60.0e9);
    const double p1 = 0.22;
    ChannelVector ch = exact_channel(cfg, UserPosition{1.0, 3.0});
    ChannelVector flat = de_shape(cfg, ch, p1);

    ShapingVector s = shaping_vector(cfg, p1);
    double sup = 0.0;
    for (int n = 0; n < 64; n++)
        sup = std::max(sup, std::abs(flat.samples[n] * s.samples[n] - ch.samples[n]));
    CHECK(sup < 1e-15);
}

TEST_CASE("training overhead bookkeeping per scheme")
{
    ArrayConfig cfg = ArrayConfig::half_wavelength(800, 60.0e9);
    CHECK(dft_codebook(cfg).overhead == 800);
    CHECK(jac_codebook(cfg, 0.01).overhead == 801);
    CHECK(polar_codebook(cfg, 8, 0.04).overhead == 6400);
}

TEST_CASE("scheme names round trip")
{
    CHECK(scheme_name(Scheme::dft) == "dft");
    CHECK(scheme_name(Scheme::polar) == "polar");
    CHECK(scheme_name(Scheme::jac) == "jac");
    CHECK(scheme_from_name("dft") == Scheme::dft);
    CHECK(scheme_from_name("polar") == Scheme::polar);
    CHECK(scheme_from_name("jac") == Scheme::jac);
    CHECK_THROWS_AS(scheme_from_name("fft"), std::invalid_argument);
}

TEST_CASE("codebook input validation")
{
    ArrayConfig cfg = ArrayConfig::half_wavelength(8, 60.0e9);
    CHECK_THROWS_AS(jac_codebook(cfg, -0.01), std::invalid_argument);
    CHECK_THROWS_AS(de_shape(cfg, quadratic_channel(ArrayConfig::half_wavelength(4, 60.0e9),
                                                    NearFieldParams{0.0, 0.0}),
                             0.01),
                    std::invalid_argument);
}

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
#include "jacbeam/experiments.hpp"
#include "jacbeam/geometry.hpp"
#include "jacbeam/rng.hpp"
#include "jacbeam/training.hpp"

#include <cmath>
#include <limits>
#include <map>
#include <vector>

using namespace jacbeam;

namespace
{
    ExperimentSpec small_spec()
    {
        ExperimentSpec spec;
        spec.array = ArrayConfig::half_wavelength(64, 60.0e9);
        spec.schemes = {Scheme::dft, Scheme::polar, Scheme::jac};
        spec.snr_db = {10.0, 30.0};
        spec.user_count = 10;
        spec.r_min = 2.0;
        spec.r_max = 8.0;
        spec.polar_rings = 4;
        spec.seed = 7;
        return spec;
    }
}

TEST_CASE("achievable rate formula")
{
    CHECK(achievable_rate(1.0, 0.0) == 1.0);
    CHECK(achievable_rate(0.0, 25.0) == 0.0);
    CHECK(achievable_rate(0.5, 30.0) == doctest::Approx(std::log2(501.0)).epsilon(1e-12));

    // Tiny rounding slack above 1 is clamped, real violations throw.
    CHECK(achievable_rate(1.0 + 1e-10, 10.0) == achievable_rate(1.0, 10.0));
    CHECK_THROWS_AS(achievable_rate(-0.1, 10.0), std::invalid_argument);
    CHECK_THROWS_AS(achievable_rate(1.1, 10.0), std::invalid_argument);
}

TEST_CASE("radius range resolution against the fresnel bound")
{
    ExperimentSpec spec; // reference 800-element array
    const double bound = fresnel_lower_bound(spec.array);

    SUBCASE("default range clamps up to the bound")
    {
        RadiusRange range = resolve_radius_range(spec);
        CHECK(range.clamped);
        CHECK(range.r_min == bound);
        CHECK(range.r_max == 100.0);
    }

    SUBCASE("range already above the bound is untouched")
    {
        spec.r_min = 30.0;
        RadiusRange range = resolve_radius_range(spec);
        CHECK(!range.clamped);
        CHECK(range.r_min == 30.0);
    }

    SUBCASE("clamp disabled turns a low minimum into an error")
    {
        spec.allow_r_clamp = false;
        CHECK_THROWS_AS(resolve_radius_range(spec), std::domain_error);
    }

    SUBCASE("clamp that empties the range is an error")
    {
        spec.r_max = 10.0;
        CHECK_THROWS_AS(resolve_radius_range(spec), std::domain_error);
    }
}

TEST_CASE("polar curvature ceiling defaults to the reciprocal fresnel bound")
{
    ExperimentSpec spec;
    CHECK(resolve_polar_p1_max(spec) ==
          doctest::Approx(1.0 / fresnel_lower_bound(spec.array)).epsilon(1e-15));
    spec.polar_p1_max = 0.03;
    CHECK(resolve_polar_p1_max(spec) == 0.03);
}

TEST_CASE("rate experiment record layout and invariants")
{
    ExperimentSpec spec = small_spec();
    std::vector<RateRecord> records = rate_vs_snr(spec);

    // One row per scheme per snr, plus one upper-bound row per snr.
    REQUIRE(records.size() == 3 * 2 + 2);

    std::map<std::pair<std::string, double>, RateRecord> by_key;
    for (const RateRecord &r : records)
        by_key[{r.scheme, r.snr_db}] = r;

    for (double snr : spec.snr_db)
    {
        REQUIRE(by_key.count({"upper_bound", snr}) == 1);
        const double ub = by_key[{"upper_bound", snr}].mean_rate;
        CHECK(ub == doctest::Approx(std::log2(1.0 + std::pow(10.0, snr / 10.0))).epsilon(1e-12));
        CHECK(by_key[{"upper_bound", snr}].ci95 == 0.0);
        CHECK(by_key[{"upper_bound", snr}].slots_used == 0);

        for (const char *scheme : {"dft", "polar", "jac"})
        {
            REQUIRE(by_key.count({scheme, snr}) == 1);
            const RateRecord &r = by_key[{scheme, snr}];
            CHECK(r.mean_rate >= 0.0);
            CHECK(r.mean_rate <= ub + 1e-9);
            CHECK(r.ci95 >= 0.0);
            CHECK((int)r.samples.size() == spec.user_count);
            double acc = 0.0;
            for (double s : r.samples)
                acc += s;
            CHECK(r.mean_rate == doctest::Approx(acc / spec.user_count).epsilon(1e-12));
        }
    }

    CHECK(by_key[{"dft", 10.0}].slots_used == 64);
    CHECK(by_key[{"polar", 10.0}].slots_used == 4 * 64);
    CHECK(by_key[{"jac", 10.0}].slots_used == 65);
}

TEST_CASE("rate experiment is deterministic in the seed")
{
    ExperimentSpec spec = small_spec();
    std::vector<RateRecord> a = rate_vs_snr(spec);
    std::vector<RateRecord> b = rate_vs_snr(spec);

    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); i++)
    {
        CHECK(a[i].scheme == b[i].scheme);
        CHECK(a[i].snr_db == b[i].snr_db);
        CHECK(a[i].mean_rate == b[i].mean_rate);
        CHECK(a[i].ci95 == b[i].ci95);
        REQUIRE(a[i].samples.size() == b[i].samples.size());
        for (size_t j = 0; j < a[i].samples.size(); j++)
            CHECK(a[i].samples[j] == b[i].samples[j]);
    }

    ExperimentSpec other = spec;
    other.seed = 8;
    std::vector<RateRecord> c = rate_vs_snr(other);
    bool any_diff = false;
    for (size_t i = 0; i < a.size(); i++)
        any_diff = any_diff || a[i].mean_rate != c[i].mean_rate;
    CHECK(any_diff);
}

TEST_CASE("noiseless two-stage training sits near the rate bound")
{
    // Users on exact codebook angles, noiseless measurements: the residual
    // gap at 40 db comes only from curvature quantization and estimator
    // bias, and stays under 0.2 bit.
    ArrayConfig cfg = ArrayConfig::half_wavelength(800, 60.0e9);
    EstimatorConfig est;
    Codebook probe = dft_codebook(cfg);
    NoiseSpec clean;
    clean.snr_db = std::numeric_limits<double>::infinity();

    const double ub = achievable_rate(1.0, 40.0);
    Rng rng(11);
    double acc = 0.0;
    const int users = 5;
    for (int u = 0; u < users; u++)
    {
        const double r = 50.0 + 50.0 * rng.uniform();
        const int m = 100 + (int)(rng.uniform() * 600.0);
        const double u_angle = probe.codewords[m].u;
        // User at sin(theta) = u_m: the angle codeword m points at.
        UserPosition pos{r * u_angle, r * std::sqrt(1.0 - u_angle * u_angle)};
        ChannelVector ch = exact_channel(cfg, pos);
        TrainingResult out = jac_train(ch, ch, cfg, est, clean);
        acc += achievable_rate(out.best_power, 40.0);
    }
    CHECK(ub - acc / users < 0.2);
}

TEST_CASE("coverage heatmap layout and schemes")
{
    ExperimentSpec spec;
    spec.array = ArrayConfig::half_wavelength(64, 60.0e9);
    spec.schemes = {Scheme::dft, Scheme::polar, Scheme::jac};
    spec.polar_rings = 2;
    spec.grid.x_min = 2.0;
    spec.grid.x_max = 6.0;
    spec.grid.z_min = -2.0;
    spec.grid.z_max = 2.0;
    spec.grid.step = 2.0;

    std::vector<CoverageRecord> records = coverage_heatmap(spec);
    REQUIRE(records.size() == 3u * 3u * 3u);

    // Scheme-major ordering, x before z.
    CHECK(records[0].scheme == "dft");
    CHECK(records[0].x == 2.0);
    CHECK(records[0].z == -2.0);
    CHECK(records[1].z == 0.0);
    CHECK(records[3].x == 4.0);
    CHECK(records[9].scheme == "polar");
    CHECK(records[18].scheme == "jac");

    std::map<std::pair<double, double>, std::map<std::string, double>> by_point;
    for (const CoverageRecord &r : records)
    {
        CHECK(r.r_cover >= 0.0);
        CHECK(r.r_cover <= 64.0 + 1e-9);
        by_point[{r.x, r.z}][r.scheme] = r.r_cover;
    }

    // Ring zero of the polar codebook is the dft codebook, so polar
    // coverage dominates dft coverage pointwise.
    for (const auto &[pt, per_scheme] : by_point)
    {
        REQUIRE(per_scheme.size() == 3);
        CHECK(per_scheme.at("polar") >= per_scheme.at("dft") - 1e-12);
    }
}

TEST_CASE("coverage heatmap is deterministic")
{
    ExperimentSpec spec;
    spec.array = ArrayConfig::half_wavelength(64, 60.0e9);
    spec.schemes = {Scheme::jac};
    spec.grid.x_min = 3.0;
    spec.grid.x_max = 5.0;
    spec.grid.z_min = -1.0;
    spec.grid.z_max = 1.0;
    spec.grid.step = 1.0;

    std::vector<CoverageRecord> a = coverage_heatmap(spec);
    std::vector<CoverageRecord> b = coverage_heatmap(spec);
    REQUIRE(a.size() == b.size());
    for (size_t i = 0; i < a.size(); i++)
        CHECK(a[i].r_cover == b[i].r_cover);
}

TEST_CASE("far grid points make the two-stage scheme match dft coverage")
{
    // Deep in the far field the estimator declares zero curvature, so the
    // de-shaped channel is the channel itself and jac equals dft exactly.
    ExperimentSpec spec;
    spec.array = ArrayConfig::half_wavelength(64, 60.0e9);
    spec.schemes = {Scheme::dft, Scheme::jac};
    spec.grid.x_min = 100.0;
    spec.grid.x_max = 102.0;
    spec.grid.z_min = -1.0;
    spec.grid.z_max = 1.0;
    spec.grid.step = 1.0;

    std::vector<CoverageRecord> records = coverage_heatmap(spec);
    std::map<std::pair<double, double>, std::map<std::string, double>> by_point;
    for (const CoverageRecord &r : records)
        by_point[{r.x, r.z}][r.scheme] = r.r_cover;
    for (const auto &[pt, per_scheme] : by_point)
        CHECK(per_scheme.at("jac") == per_scheme.at("dft"));
}

TEST_CASE("overhead table reads the instrumented slot counters")
{
    ExperimentSpec spec; // reference array, 8 rings
    std::vector<OverheadRecord> records = overhead_table(spec);

    REQUIRE(records.size() == 3);
    CHECK(records[0].scheme == "dft");
    CHECK(records[0].slots_used == 800);
    CHECK(records[1].scheme == "polar");
    CHECK(records[1].slots_used == 6400);
    CHECK(records[2].scheme == "jac");
    CHECK(records[2].slots_used == 801);
}

TEST_CASE("experiment validation")
{
    SUBCASE("empty scheme list")
    {
        ExperimentSpec spec = small_spec();
        spec.schemes.clear();
        CHECK_THROWS_AS(rate_vs_snr(spec), std::invalid_argument);
    }

    SUBCASE("nonpositive user count")
    {
        ExperimentSpec spec = small_spec();
        spec.user_count = 0;
        CHECK_THROWS_AS(rate_vs_snr(spec), std::invalid_argument);
    }

    SUBCASE("bad angle window")
    {
        ExperimentSpec spec = small_spec();
        spec.theta_min = 0.5;
        spec.theta_max = -0.5;
        CHECK_THROWS_AS(rate_vs_snr(spec), std::invalid_argument);
        spec.theta_min = -0.5;
        spec.theta_max = 1.6;
        CHECK_THROWS_AS(rate_vs_snr(spec), std::invalid_argument);
    }

    SUBCASE("nonpositive grid step")
    {
        ExperimentSpec spec = small_spec();
        spec.grid.step = 0.0;
        CHECK_THROWS_AS(coverage_heatmap(spec), std::invalid_argument);
    }
}

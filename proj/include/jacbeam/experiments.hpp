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

#ifndef JACBEAM_EXPERIMENTS_HPP
#define JACBEAM_EXPERIMENTS_HPP

#include <cstdint>
#include <numbers>
#include <string>
#include <vector>

#include "jacbeam/coa.hpp"
#include "jacbeam/codebook.hpp"
#include "jacbeam/geometry.hpp"

namespace jacbeam
{

// Rectangular evaluation window for coverage maps. The x axis is the
// boresight (propagation) direction and the z axis runs along the array,
// matching the usual heatmap presentation; coverage_heatmap converts to
// array-plane coordinates internally.
struct GridSpec
{
    double x_min = 100.0;
    double x_max = 200.0;
    double z_min = -50.0;
    double z_max = 50.0;
    double step = 2.0;
};

struct ExperimentSpec
{
    ArrayConfig array = ArrayConfig::half_wavelength(800, 60.0e9);
    std::vector<Scheme> schemes{Scheme::dft, Scheme::polar, Scheme::jac};
    std::vector<double> snr_db{0.0, 10.0, 20.0, 30.0, 40.0};
    int user_count = 100;
    double r_min = 5.0; // clamped up to the Fresnel lower bound when allowed
    double r_max = 100.0;
    double theta_min = -std::numbers::pi / 3.0;
    double theta_max = std::numbers::pi / 3.0;
    GridSpec grid{};
    std::uint64_t seed = 1;
    EstimatorConfig estimator{};
    int polar_rings = 8;
    double polar_p1_max = 0.0; // 0 selects 1 / fresnel_lower_bound(array)
    double tx_power = 1.0;
    bool allow_r_clamp = true;
};

// One row of the rate experiment; scheme is "dft", "polar", "jac" or
// "upper_bound". samples holds the per-user rates behind mean_rate.
struct RateRecord
{
    std::string scheme;
    double snr_db = 0.0;
    double mean_rate = 0.0;
    double ci95 = 0.0;
    int slots_used = 0;
    std::vector<double> samples;
};

struct CoverageRecord
{
    double x = 0.0;
    double z = 0.0;
    std::string scheme;
    double r_cover = 0.0;
};

struct OverheadRecord
{
    std::string scheme;
    int slots_used = 0;
};

struct RadiusRange
{
    double r_min = 0.0;
    double r_max = 0.0;
    bool clamped = false;
};

// Validates the user radius range against the Fresnel lower bound.
// Clamps r_min up to the bound when allow_r_clamp is set; throws
// std::domain_error otherwise.
RadiusRange resolve_radius_range(const ExperimentSpec &spec);

// Effective polar-codebook curvature ceiling (the configured value, or the
// reciprocal Fresnel bound default).
double resolve_polar_p1_max(const ExperimentSpec &spec);

// log2(1 + snr_linear * best_power). best_power must lie in [0, 1] up to
// rounding slack.
double achievable_rate(double best_power, double snr_db);

// Mean achievable rate per scheme and SNR over randomly placed users,
// plus the upper-bound rows log2(1 + snr_linear). Fully deterministic in
// spec.seed.
std::vector<RateRecord> rate_vs_snr(const ExperimentSpec &spec);

// Noiseless coverage R_cover = N * max_w |w^T h|^2 on the grid, one record
// per scheme and grid point.
std::vector<CoverageRecord> coverage_heatmap(const ExperimentSpec &spec);

// Instrumented training-slot counts (read back from TrainingResult
// counters, not recomputed from formulas).
std::vector<OverheadRecord> overhead_table(const ExperimentSpec &spec);

} // namespace jacbeam

#endif

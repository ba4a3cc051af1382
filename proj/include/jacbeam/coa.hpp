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

#ifndef JACBEAM_COA_HPP
#define JACBEAM_COA_HPP

#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "jacbeam/channel.hpp"
#include "jacbeam/geometry.hpp"

namespace jacbeam
{

// Spatial autocorrelation magnitudes of one snapshot, indexed by lag.
// values[v-1] holds lag v = 1..nu_max:
//   values[v-1] = |sum_{n=1}^{N-v} r[n] conj(r[n+v])|
// normalized[v-1] divides by the window length (N - v).
struct AutocorrSequence
{
    std::vector<double> values;
    std::vector<double> normalized;

    int nu_max() const { return static_cast<int>(values.size()); }
};

struct EstimatorConfig
{
    double eta = 0.5;   // crossing threshold, in (0, 1); 0.5 = half power
    int nu_max = 0;     // max lag searched; 0 means N - 1
    // Normalized-autocorrelation floor at nu_max separating "flat, hence
    // far field" (above) from "still decaying, crossing beyond nu_max"
    // (below, reported as an error)
    double far_field_decision = 0.9;
    int snapshots = 1;  // snapshots averaged by the multi-snapshot overload
};

struct CoaEstimate
{
    double p1_hat = 0.0;              // estimated curvature [1/m]; 0 = far field
    std::optional<int> crossing_lag;  // first integer lag at or below eta
    double fractional_lag = 0.0;      // interpolated crossing lag (lags)
    double kernel_root = 0.0;         // phi0 solving the kernel equation [rad]
};

// Raised when the autocorrelation is still above eta at nu_max but has
// decayed below the far-field decision floor: the crossing exists but
// nu_max is too small to bracket it.
class crossing_not_bracketed : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Throws std::invalid_argument unless 1 <= nu_max <= N - 1.
AutocorrSequence autocorrelation(const ChannelVector &r, int nu_max);

// |sin(M phi / 2) / sin(phi / 2)|, with the removable singularity at
// phi = 0 (and any multiple of 2 pi) evaluating to M.
double dirichlet_kernel(int m_window, double phi);

// The unique phi0 in (0, 2 pi / M) with dirichlet_kernel(M, phi0) / M = eta,
// by bisection to 1e-12 relative tolerance. The normalized kernel is
// monotone decreasing on the main lobe, so the root is unique.
double invert_kernel(int m_window, double eta);

// Threshold estimator for the curvature p1 from one snapshot:
// normalize the autocorrelation by its lag-1 value, find the first lag at
// or below eta, refine by linear interpolation, then invert the Dirichlet
// kernel at the window length of the crossing lag. No crossing and a flat
// sequence means far field (p1_hat = 0); no crossing while the sequence is
// already decaying throws crossing_not_bracketed.
CoaEstimate estimate_p1(const ChannelVector &r, const ArrayConfig &cfg, const EstimatorConfig &est);

// Same estimator on the mean autocorrelation of several snapshots.
CoaEstimate estimate_p1(std::span<const ChannelVector> snapshots, const ArrayConfig &cfg, const EstimatorConfig &est);

// Brute-force reference estimator: fits the squared autocorrelation to the
// closed-form Dirichlet model plus a flat noise floor (linear least squares
// in the two amplitudes) and returns the grid p1 with the smallest residual.
// Slower but threshold-free; used to cross-check estimate_p1.
double oracle_p1(const ChannelVector &r, const ArrayConfig &cfg, std::span<const double> grid);

} // namespace jacbeam

#endif

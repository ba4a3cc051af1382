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

#ifndef JACBEAM_TRAINING_HPP
#define JACBEAM_TRAINING_HPP

#include <optional>
#include <vector>

#include "jacbeam/coa.hpp"
#include "jacbeam/codebook.hpp"

namespace jacbeam
{

// Outcome of one training procedure.
//
// best_index is chosen on the measured (noisy) per-slot powers; best_power
// is the noiseless |w^T h|^2 of that chosen codeword, so rates derived from
// it never exceed the beamforming upper bound. In a noiseless run with
// tx_power = 1 the two views coincide and best_power equals the maximum
// recorded power.
struct TrainingResult
{
    int best_index = 0;
    double best_power = 0.0;              // |w^T h_clean|^2 of the chosen beam
    int slots_used = 0;
    std::optional<double> p1_hat;         // two-stage pipeline only
    std::optional<std::vector<double>> per_codeword_power; // measured powers
};

// |sum_n w[n] ch[n]|^2, plain transpose contraction (codeword construction
// already carries the conjugation). Throws on length mismatch.
double matched_filter_power(const ChannelVector &ch, const Codeword &w);

// Exhaustive sweep. Per slot m the receiver measures
//   |w_m^T (sqrt(P_t) h) + e_m|^2,  e_m ~ CN(0, sigma^2 / N) i.i.d.
// (post-combining noise: one measurement per slot made after the N-element
// combiner, hence the 1/N). Ties break toward the lowest index.
// slots_used = number of codewords swept.
TrainingResult sweep(const ChannelVector &ch_clean, const Codebook &book, const NoiseSpec &noise,
                     bool record_powers = false);

// Two-stage pipeline: estimate p1 from the (noisy) snapshot, then sweep the
// curvature-compensated codebook against the clean channel with fresh
// per-slot noise. slots_used = N + 1 (snapshot + sweep). A far-field
// declaration (p1_hat = 0) makes stage two an ordinary DFT sweep with the
// identical noise stream, so the result matches sweep() bit for bit.
TrainingResult jac_train(const ChannelVector &snapshot, const ChannelVector &ch_clean, const ArrayConfig &cfg,
                         const EstimatorConfig &est, const NoiseSpec &noise);

// Noiseless argmax of matched_filter_power over the codebook; returns the
// best power and optionally the best index.
double best_matched_power(const ChannelVector &ch, const Codebook &book, int *best_index = nullptr);

} // namespace jacbeam

#endif

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

#include "jacbeam/training.hpp"

#include <cmath>
#include <stdexcept>

namespace jacbeam
{

namespace
{

std::complex<double> contract(const ChannelVector &ch, const Codeword &w)
{
    if (w.weights.size() != ch.samples.size())
        throw std::invalid_argument("matched filter: codeword and channel lengths differ");
    std::complex<double> acc = 0.0;
    for (size_t n = 0; n < w.weights.size(); n++)
        acc += w.weights[n] * ch.samples[n];
    return acc;
}

} // namespace

double matched_filter_power(const ChannelVector &ch, const Codeword &w)
{
    return std::norm(contract(ch, w));
}

TrainingResult sweep(const ChannelVector &ch_clean, const Codebook &book, const NoiseSpec &noise, bool record_powers)
{
    if (book.codewords.empty())
        throw std::invalid_argument("sweep: codebook is empty");
    if (book.codewords.front().weights.size() != ch_clean.samples.size())
        throw std::invalid_argument("sweep: codeword and channel lengths differ");

    int n_ant = ch_clean.size();
    double amp = std::sqrt(noise.tx_power);
    // One measurement per slot, taken after combining: variance sigma^2 / N
    double slot_var = noise.noise_variance(n_ant) / static_cast<double>(n_ant);
    Rng rng(derive_stream(noise.seed, stream_sweep));

    int best = 0;
    double best_measured = -1.0;
    std::vector<double> measured;
    if (record_powers)
        measured.reserve(book.codewords.size());

    for (int m = 0; m < book.size(); m++)
    {
        std::complex<double> y = amp * contract(ch_clean, book.codewords[static_cast<size_t>(m)]);
        if (!noise.noiseless())
            y += rng.complex_gaussian(slot_var);
        double p = std::norm(y);
        if (record_powers)
            measured.push_back(p);
        if (p > best_measured)
        {
            best_measured = p;
            best = m;
        }
    }

    TrainingResult out;
    out.best_index = best;
    out.best_power = matched_filter_power(ch_clean, book.codewords[static_cast<size_t>(best)]);
    out.slots_used = book.size();
    if (record_powers)
        out.per_codeword_power = std::move(measured);
    return out;
}

TrainingResult jac_train(const ChannelVector &snapshot, const ChannelVector &ch_clean, const ArrayConfig &cfg,
                         const EstimatorConfig &est, const NoiseSpec &noise)
{
    CoaEstimate stage1 = estimate_p1(snapshot, cfg, est);
    Codebook book = jac_codebook(cfg, stage1.p1_hat);
    TrainingResult out = sweep(ch_clean, book, noise);
    out.slots_used = cfg.n_antennas + 1; // sweep plus the estimation snapshot
    out.p1_hat = stage1.p1_hat;
    return out;
}

double best_matched_power(const ChannelVector &ch, const Codebook &book, int *best_index)
{
    if (book.codewords.empty())
        throw std::invalid_argument("best_matched_power: codebook is empty");
    int best = 0;
    double best_power = -1.0;
    for (int m = 0; m < book.size(); m++)
    {
        double p = matched_filter_power(ch, book.codewords[static_cast<size_t>(m)]);
        if (p > best_power)
        {
            best_power = p;
            best = m;
        }
    }
    if (best_index != nullptr)
        *best_index = best;
    return best_power;
}

} // namespace jacbeam

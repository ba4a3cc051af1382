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

#include "jacbeam/experiments.hpp"

#include <cmath>
#include <limits>
#include <stdexcept>

#include "jacbeam/rng.hpp"
#include "jacbeam/training.hpp"

namespace jacbeam
{

namespace
{

void validate_common(const ExperimentSpec &spec)
{
    if (spec.user_count < 1)
        throw std::invalid_argument("experiment: user_count must be >= 1");
    if (spec.schemes.empty())
        throw std::invalid_argument("experiment: scheme set must be nonempty");
    if (spec.polar_rings < 1)
        throw std::invalid_argument("experiment: polar_rings must be >= 1");
    if (!(spec.tx_power > 0.0))
        throw std::invalid_argument("experiment: tx_power must be positive");
    if (!(spec.theta_max > spec.theta_min))
        throw std::invalid_argument("experiment: empty angle range");
    if (std::fabs(spec.theta_min) >= 0.5 * std::numbers::pi || std::fabs(spec.theta_max) >= 0.5 * std::numbers::pi)
        throw std::invalid_argument("experiment: angles must lie inside (-pi/2, pi/2)");
}

// Grid coordinates with inclusive endpoints (tolerant of rounding in the
// repeated addition).
std::vector<double> grid_axis(double lo, double hi, double step)
{
    if (!(step > 0.0))
        throw std::invalid_argument("experiment: grid step must be positive");
    if (!(hi >= lo))
        throw std::invalid_argument("experiment: empty grid range");
    std::vector<double> axis;
    int count = static_cast<int>(std::floor((hi - lo) / step + 1.0 + 1e-9));
    axis.reserve(static_cast<size_t>(count));
    for (int i = 0; i < count; i++)
        axis.push_back(lo + step * static_cast<double>(i));
    return axis;
}

double mean_of(const std::vector<double> &v)
{
    double acc = 0.0;
    for (double x : v)
        acc += x;
    return acc / static_cast<double>(v.size());
}

double ci95_of(const std::vector<double> &v, double mean)
{
    if (v.size() < 2)
        return 0.0;
    double acc = 0.0;
    for (double x : v)
        acc += (x - mean) * (x - mean);
    double sd = std::sqrt(acc / static_cast<double>(v.size() - 1));
    return 1.96 * sd / std::sqrt(static_cast<double>(v.size()));
}

} // namespace

RadiusRange resolve_radius_range(const ExperimentSpec &spec)
{
    double bound = fresnel_lower_bound(spec.array);
    RadiusRange range{spec.r_min, spec.r_max, false};
    if (range.r_min < bound)
    {
        if (!spec.allow_r_clamp)
            throw std::domain_error("experiment: r_min " + std::to_string(spec.r_min) +
                                    " m is inside the Fresnel lower bound " + std::to_string(bound) +
                                    " m and clamping is disabled");
        range.r_min = bound;
        range.clamped = true;
    }
    if (!(range.r_max > range.r_min))
        throw std::domain_error("experiment: empty radius range after Fresnel clamp (r_max " +
                                std::to_string(range.r_max) + " m <= r_min " + std::to_string(range.r_min) + " m)");
    return range;
}

double resolve_polar_p1_max(const ExperimentSpec &spec)
{
    if (spec.polar_p1_max < 0.0)
        throw std::invalid_argument("experiment: polar_p1_max must be >= 0");
    if (spec.polar_p1_max > 0.0)
        return spec.polar_p1_max;
    return 1.0 / fresnel_lower_bound(spec.array);
}

double achievable_rate(double best_power, double snr_db)
{
    if (!(best_power >= -1e-12) || !(best_power <= 1.0 + 1e-9))
        throw std::invalid_argument("achievable_rate: best_power must lie in [0, 1]");
    double p = best_power < 0.0 ? 0.0 : (best_power > 1.0 ? 1.0 : best_power);
    return std::log2(1.0 + std::pow(10.0, snr_db / 10.0) * p);
}

std::vector<RateRecord> rate_vs_snr(const ExperimentSpec &spec)
{
    validate_common(spec);
    if (spec.snr_db.empty())
        throw std::invalid_argument("experiment: snr_db list must be nonempty");
    RadiusRange range = resolve_radius_range(spec);
    const ArrayConfig &cfg = spec.array;

    // All schemes and SNR points see the same user set.
    Rng users(derive_stream(spec.seed, stream_users));
    std::vector<UserPosition> positions;
    positions.reserve(static_cast<size_t>(spec.user_count));
    for (int u = 0; u < spec.user_count; u++)
    {
        double r = range.r_min + (range.r_max - range.r_min) * users.uniform();
        double theta = spec.theta_min + (spec.theta_max - spec.theta_min) * users.uniform();
        positions.push_back(UserPosition{r * std::sin(theta), r * std::cos(theta)});
    }
    std::vector<ChannelVector> channels;
    channels.reserve(positions.size());
    for (const auto &pos : positions)
        channels.push_back(exact_channel(cfg, pos));

    Codebook dft_book = dft_codebook(cfg);
    Codebook polar_book;
    bool want_polar = false;
    for (Scheme s : spec.schemes)
        want_polar = want_polar || s == Scheme::polar;
    if (want_polar)
        polar_book = polar_codebook(cfg, spec.polar_rings, resolve_polar_p1_max(spec));

    std::uint64_t rate_stream = derive_stream(spec.seed, 0x72617465ull); // "rate"

    std::vector<RateRecord> records;
    for (size_t si = 0; si < spec.schemes.size(); si++)
    {
        Scheme scheme = spec.schemes[si];
        std::uint64_t scheme_stream = derive_stream(rate_stream, static_cast<std::uint64_t>(si));
        for (size_t qi = 0; qi < spec.snr_db.size(); qi++)
        {
            double snr = spec.snr_db[qi];
            std::uint64_t snr_stream = derive_stream(scheme_stream, static_cast<std::uint64_t>(qi));

            RateRecord rec;
            rec.scheme = scheme_name(scheme);
            rec.snr_db = snr;
            rec.samples.reserve(positions.size());
            for (int u = 0; u < spec.user_count; u++)
            {
                NoiseSpec noise;
                noise.snr_db = snr;
                noise.tx_power = spec.tx_power;
                noise.seed = derive_stream(snr_stream, static_cast<std::uint64_t>(u));

                const ChannelVector &ch = channels[static_cast<size_t>(u)];
                TrainingResult result;
                switch (scheme)
                {
                case Scheme::dft:
                    result = sweep(ch, dft_book, noise);
                    break;
                case Scheme::polar:
                    result = sweep(ch, polar_book, noise);
                    break;
                case Scheme::jac:
                    try
                    {
                        result = jac_train(add_noise(ch, noise), ch, cfg, spec.estimator, noise);
                    }
                    catch (const crossing_not_bracketed &)
                    {
                        // The snapshot was too noisy to bracket the eta
                        // crossing. Training still has to pick a beam within
                        // its slot budget, so stage two falls back to the
                        // zero-curvature sweep, identical to a far-field
                        // declaration (same noise stream, same codebook).
                        result = sweep(ch, dft_book, noise);
                        result.slots_used = cfg.n_antennas + 1;
                        result.p1_hat = 0.0;
                    }
                    break;
                }
                rec.slots_used = result.slots_used;
                rec.samples.push_back(achievable_rate(result.best_power, snr));
            }
            rec.mean_rate = mean_of(rec.samples);
            rec.ci95 = ci95_of(rec.samples, rec.mean_rate);
            records.push_back(std::move(rec));
        }
    }

    for (double snr : spec.snr_db)
    {
        RateRecord rec;
        rec.scheme = "upper_bound";
        rec.snr_db = snr;
        rec.mean_rate = std::log2(1.0 + std::pow(10.0, snr / 10.0));
        rec.ci95 = 0.0;
        rec.slots_used = 0;
        records.push_back(std::move(rec));
    }
    return records;
}

std::vector<CoverageRecord> coverage_heatmap(const ExperimentSpec &spec)
{
    validate_common(spec);
    const ArrayConfig &cfg = spec.array;
    std::vector<double> xs = grid_axis(spec.grid.x_min, spec.grid.x_max, spec.grid.step);
    std::vector<double> zs = grid_axis(spec.grid.z_min, spec.grid.z_max, spec.grid.step);
    double n_ant = static_cast<double>(cfg.n_antennas);

    // All three schemes reduce to angular sweeps of curvature-compensated
    // channels, so one DFT codebook serves every scheme: a codeword with
    // curvature p1 applied to h equals the plain DFT codeword applied to
    // de_shape(h, p1).
    Codebook dft_book = dft_codebook(cfg);
    std::vector<double> rings;
    for (Scheme s : spec.schemes)
        if (s == Scheme::polar)
            rings = polar_ring_p1(spec.polar_rings, resolve_polar_p1_max(spec));

    std::vector<CoverageRecord> records;
    records.reserve(spec.schemes.size() * xs.size() * zs.size());
    for (Scheme scheme : spec.schemes)
    {
        for (double gx : xs)
        {
            for (double gz : zs)
            {
                // Grid x is the boresight distance, grid z the transverse
                // offset along the array axis.
                UserPosition pos{gz, gx};
                ChannelVector ch = exact_channel(cfg, pos);

                double best = 0.0;
                switch (scheme)
                {
                case Scheme::dft:
                    best = best_matched_power(ch, dft_book);
                    break;
                case Scheme::polar:
                    for (double p1 : rings)
                    {
                        double p = best_matched_power(de_shape(cfg, ch, p1), dft_book);
                        if (p > best)
                            best = p;
                    }
                    break;
                case Scheme::jac:
                {
                    CoaEstimate est = estimate_p1(ch, cfg, spec.estimator);
                    best = best_matched_power(de_shape(cfg, ch, est.p1_hat), dft_book);
                    break;
                }
                }
                records.push_back(CoverageRecord{gx, gz, scheme_name(scheme), n_ant * best});
            }
        }
    }
    return records;
}

std::vector<OverheadRecord> overhead_table(const ExperimentSpec &spec)
{
    validate_common(spec);
    const ArrayConfig &cfg = spec.array;

    // Counters are read back from actual training runs on a representative
    // in-region user, not recomputed from the codebook-size formulas.
    double r = 2.0 * fresnel_lower_bound(cfg);
    double theta = 0.3;
    UserPosition pos{r * std::sin(theta), r * std::cos(theta)};
    ChannelVector ch = exact_channel(cfg, pos);

    NoiseSpec noiseless;
    noiseless.snr_db = std::numeric_limits<double>::infinity();
    noiseless.tx_power = spec.tx_power;
    noiseless.seed = spec.seed;

    std::vector<OverheadRecord> rows;
    for (Scheme scheme : spec.schemes)
    {
        TrainingResult result;
        switch (scheme)
        {
        case Scheme::dft:
            result = sweep(ch, dft_codebook(cfg), noiseless);
            break;
        case Scheme::polar:
            result = sweep(ch, polar_codebook(cfg, spec.polar_rings, resolve_polar_p1_max(spec)), noiseless);
            break;
        case Scheme::jac:
            result = jac_train(ch, ch, cfg, spec.estimator, noiseless);
            break;
        }
        rows.push_back(OverheadRecord{scheme_name(scheme), result.slots_used});
    }
    return rows;
}

} // namespace jacbeam

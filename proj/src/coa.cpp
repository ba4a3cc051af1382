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

#include "jacbeam/coa.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace jacbeam
{

AutocorrSequence autocorrelation(const ChannelVector &r, int nu_max)
{
    int n = r.size();
    if (nu_max < 1 || nu_max > n - 1)
        throw std::invalid_argument("autocorrelation: nu_max " + std::to_string(nu_max) + " outside 1.." +
                                    std::to_string(n - 1));

    AutocorrSequence seq;
    seq.values.resize(static_cast<size_t>(nu_max));
    seq.normalized.resize(static_cast<size_t>(nu_max));
    for (int v = 1; v <= nu_max; v++)
    {
        std::complex<double> acc = 0.0;
        for (int i = 0; i < n - v; i++)
            acc += r.samples[static_cast<size_t>(i)] * std::conj(r.samples[static_cast<size_t>(i + v)]);
        double mag = std::abs(acc);
        seq.values[static_cast<size_t>(v - 1)] = mag;
        seq.normalized[static_cast<size_t>(v - 1)] = mag / static_cast<double>(n - v);
    }
    return seq;
}

double dirichlet_kernel(int m_window, double phi)
{
    if (m_window < 1)
        throw std::invalid_argument("dirichlet_kernel: window must be >= 1");

    double den = std::sin(0.5 * phi);
    // Near a multiple of 2 pi both sines vanish; the ratio tends to M.
    // The guard band is far above double rounding noise and far below any
    // argument where the ratio deviates from M by more than ~M eps.
    if (std::fabs(den) < 1e-9)
        return static_cast<double>(m_window);
    return std::fabs(std::sin(0.5 * static_cast<double>(m_window) * phi) / den);
}

double invert_kernel(int m_window, double eta)
{
    // A window of 1 has a flat normalized kernel, so no root exists.
    if (m_window < 2)
        throw std::invalid_argument("invert_kernel: window must be >= 2");
    if (!(eta > 0.0) || !(eta < 1.0))
        throw std::invalid_argument("invert_kernel: eta must be in (0, 1)");

    double m = static_cast<double>(m_window);
    double lo = 0.0;
    double hi = 2.0 * std::numbers::pi / m;
    // Bisection on the main lobe; the normalized kernel falls monotonically
    // from 1 at phi = 0 to 0 at the first null.
    for (int it = 0; it < 200; it++)
    {
        double mid = 0.5 * (lo + hi);
        double val = dirichlet_kernel(m_window, mid) / m;
        if (val > eta)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 1e-12 * hi)
            break;
    }
    return 0.5 * (lo + hi);
}

namespace
{

CoaEstimate estimate_from_sequence(const AutocorrSequence &seq, const ArrayConfig &cfg, const EstimatorConfig &est)
{
    if (!(est.eta > 0.0) || !(est.eta < 1.0))
        throw std::invalid_argument("estimate_p1: eta must be in (0, 1)");

    int nu_max = seq.nu_max();
    double a_ref = seq.normalized[0]; // gain^2 proxy: lag-1 value over window N-1
    if (!(a_ref > 0.0))
        throw std::invalid_argument("estimate_p1: degenerate snapshot (zero lag-1 autocorrelation)");

    int crossing = 0;
    for (int v = 1; v <= nu_max; v++)
    {
        if (seq.normalized[static_cast<size_t>(v - 1)] / a_ref <= est.eta)
        {
            crossing = v;
            break;
        }
    }

    if (crossing == 0)
    {
        double tail = seq.normalized[static_cast<size_t>(nu_max - 1)] / a_ref;
        if (tail >= est.far_field_decision)
            return CoaEstimate{}; // flat autocorrelation: far field
        throw crossing_not_bracketed("estimate_p1: no eta crossing by lag " + std::to_string(nu_max) +
                                     " but the sequence has decayed to " + std::to_string(tail) +
                                     "; increase nu_max");
    }

    // b(1) = 1 > eta always, so the crossing has a predecessor to
    // interpolate against.
    double b_prev = seq.normalized[static_cast<size_t>(crossing - 2)] / a_ref;
    double b_cur = seq.normalized[static_cast<size_t>(crossing - 1)] / a_ref;
    double frac = static_cast<double>(crossing - 1) + (b_prev - est.eta) / (b_prev - b_cur);

    int m_window = cfg.n_antennas - crossing;
    if (m_window < 2)
        throw crossing_not_bracketed("estimate_p1: crossing at the last lag leaves no kernel window to invert; "
                                     "average more snapshots or raise the snr");
    double root = invert_kernel(m_window, est.eta);
    double k = cfg.wavenumber();
    double p1 = root / (k * frac * cfg.spacing * cfg.spacing);

    CoaEstimate out;
    out.p1_hat = p1;
    out.crossing_lag = crossing;
    out.fractional_lag = frac;
    out.kernel_root = root;
    return out;
}

int effective_nu_max(const ChannelVector &r, const EstimatorConfig &est)
{
    int n = r.size();
    if (n < 4)
        throw std::invalid_argument("estimate_p1: snapshot length must be >= 4");
    int nu_max = est.nu_max == 0 ? n - 1 : est.nu_max;
    if (nu_max < 1 || nu_max > n - 1)
        throw std::invalid_argument("estimate_p1: nu_max " + std::to_string(nu_max) + " outside 1.." +
                                    std::to_string(n - 1));
    return nu_max;
}

void check_not_all_zero(const ChannelVector &r)
{
    for (const auto &s : r.samples)
        if (s != std::complex<double>(0.0, 0.0))
            return;
    throw std::invalid_argument("estimate_p1: degenerate snapshot (all-zero)");
}

} // namespace

CoaEstimate estimate_p1(const ChannelVector &r, const ArrayConfig &cfg, const EstimatorConfig &est)
{
    if (r.size() != cfg.n_antennas)
        throw std::invalid_argument("estimate_p1: snapshot length does not match array size");
    check_not_all_zero(r);
    return estimate_from_sequence(autocorrelation(r, effective_nu_max(r, est)), cfg, est);
}

CoaEstimate estimate_p1(std::span<const ChannelVector> snapshots, const ArrayConfig &cfg, const EstimatorConfig &est)
{
    if (snapshots.empty())
        throw std::invalid_argument("estimate_p1: need at least one snapshot");
    for (const auto &r : snapshots)
    {
        if (r.size() != cfg.n_antennas)
            throw std::invalid_argument("estimate_p1: snapshot length does not match array size");
        check_not_all_zero(r);
    }

    int nu_max = effective_nu_max(snapshots.front(), est);
    AutocorrSequence mean = autocorrelation(snapshots.front(), nu_max);
    for (size_t i = 1; i < snapshots.size(); i++)
    {
        AutocorrSequence cur = autocorrelation(snapshots[i], nu_max);
        for (int v = 0; v < nu_max; v++)
        {
            mean.values[static_cast<size_t>(v)] += cur.values[static_cast<size_t>(v)];
            mean.normalized[static_cast<size_t>(v)] += cur.normalized[static_cast<size_t>(v)];
        }
    }
    double inv = 1.0 / static_cast<double>(snapshots.size());
    for (int v = 0; v < nu_max; v++)
    {
        mean.values[static_cast<size_t>(v)] *= inv;
        mean.normalized[static_cast<size_t>(v)] *= inv;
    }
    return estimate_from_sequence(mean, cfg, est);
}

double oracle_p1(const ChannelVector &r, const ArrayConfig &cfg, std::span<const double> grid)
{
    if (grid.empty())
        throw std::invalid_argument("oracle_p1: grid must be nonempty");
    for (double g : grid)
        if (!(g >= 0.0) || !std::isfinite(g))
            throw std::invalid_argument("oracle_p1: grid values must be finite and >= 0");

    int n = r.size();
    int nu_max = n - 1;
    AutocorrSequence seq = autocorrelation(r, nu_max);

    double k = cfg.wavenumber();
    double d2 = cfg.spacing * cfg.spacing;

    // Fit |c(v)|^2 = A * S(v; p1)^2 + B * (N - v) per candidate p1, where
    // S is the closed-form Dirichlet sequence. The second regressor is the
    // expected flat contribution of white snapshot noise to the squared
    // magnitudes (a sum of N - v independent products), which keeps the fit
    // honest at low SNR; A and B come from a 2x2 linear least-squares solve,
    // clamped to be nonnegative.
    double best_p1 = grid[0];
    double best_residual = std::numeric_limits<double>::infinity();
    std::vector<double> y(static_cast<size_t>(nu_max));
    for (int v = 1; v <= nu_max; v++)
    {
        double c = seq.values[static_cast<size_t>(v - 1)];
        y[static_cast<size_t>(v - 1)] = c * c;
    }

    std::vector<double> s2(static_cast<size_t>(nu_max));
    for (double p1 : grid)
    {
        for (int v = 1; v <= nu_max; v++)
        {
            double phi = k * p1 * static_cast<double>(v) * d2;
            double s = dirichlet_kernel(n - v, phi);
            s2[static_cast<size_t>(v - 1)] = s * s;
        }

        double a11 = 0.0, a12 = 0.0, a22 = 0.0, b1 = 0.0, b2 = 0.0;
        for (int v = 1; v <= nu_max; v++)
        {
            double f = s2[static_cast<size_t>(v - 1)];
            double m = static_cast<double>(n - v);
            double yv = y[static_cast<size_t>(v - 1)];
            a11 += f * f;
            a12 += f * m;
            a22 += m * m;
            b1 += f * yv;
            b2 += m * yv;
        }
        double det = a11 * a22 - a12 * a12;
        double amp, floor;
        if (std::fabs(det) > 1e-300)
        {
            amp = (b1 * a22 - b2 * a12) / det;
            floor = (a11 * b2 - a12 * b1) / det;
        }
        else
        {
            amp = a11 > 0.0 ? b1 / a11 : 0.0;
            floor = 0.0;
        }
        if (amp < 0.0)
            amp = 0.0;
        if (floor < 0.0)
        {
            floor = 0.0;
            amp = a11 > 0.0 ? b1 / a11 : 0.0;
            if (amp < 0.0)
                amp = 0.0;
        }

        double residual = 0.0;
        for (int v = 1; v <= nu_max; v++)
        {
            double diff = y[static_cast<size_t>(v - 1)] - amp * s2[static_cast<size_t>(v - 1)] -
                          floor * static_cast<double>(n - v);
            residual += diff * diff;
        }
        if (residual < best_residual)
        {
            best_residual = residual;
            best_p1 = p1;
        }
    }
    return best_p1;
}

} // namespace jacbeam

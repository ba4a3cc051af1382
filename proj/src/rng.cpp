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

#include "jacbeam/rng.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace jacbeam
{

double Rng::uniform()
{
    return static_cast<double>(eng_() >> 11) * 0x1.0p-53;
}

double Rng::standard_normal()
{
    if (has_cached_)
    {
        has_cached_ = false;
        return cached_;
    }
    // u1 in (0, 1] so the log is finite
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double mag = std::sqrt(-2.0 * std::log(u1));
    double ang = 2.0 * std::numbers::pi * u2;
    cached_ = mag * std::sin(ang);
    has_cached_ = true;
    return mag * std::cos(ang);
}

std::complex<double> Rng::complex_gaussian(double variance)
{
    if (!(variance >= 0.0) || !std::isfinite(variance))
        throw std::invalid_argument("complex_gaussian: variance must be finite and >= 0");
    has_cached_ = false; // keep complex draws aligned to Box-Muller pairs
    double u1 = 1.0 - uniform();
    double u2 = uniform();
    double mag = std::sqrt(-2.0 * std::log(u1)) * std::sqrt(0.5 * variance);
    double ang = 2.0 * std::numbers::pi * u2;
    return {mag * std::cos(ang), mag * std::sin(ang)};
}

std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag)
{
    // splitmix64 finalizer over the combined words
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ull * (tag + 1ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

} // namespace jacbeam

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

#ifndef JACBEAM_RNG_HPP
#define JACBEAM_RNG_HPP

#include <complex>
#include <cstdint>
#include <random>

namespace jacbeam
{

// Deterministic random stream. All randomness in the library flows through
// this class so that a run is reproducible bit for bit across platforms:
// mt19937_64 has a portable output sequence, and the Gaussian samples are
// produced by an explicit Box-Muller transform instead of the
// implementation-defined std::normal_distribution.
class Rng
{
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    // Uniform double in [0, 1), 53-bit resolution
    double uniform();

    // Standard normal via Box-Muller; one pair of uniforms per pair of
    // normals, second value cached
    double standard_normal();

    // Circularly symmetric complex Gaussian with E|z|^2 = variance.
    // Consumes exactly one Box-Muller pair (real and imaginary parts),
    // regardless of cache state, so complex draws stay aligned.
    std::complex<double> complex_gaussian(double variance);

  private:
    std::mt19937_64 eng_;
    double cached_ = 0.0;
    bool has_cached_ = false;
};

// Derive an independent substream seed from a master seed and a stream tag
// (splitmix64 over the combined words). Distinct tags give statistically
// independent streams for the same master seed.
std::uint64_t derive_stream(std::uint64_t seed, std::uint64_t tag);

// Stream tags used by the library. Keeping snapshot noise and sweep noise
// on separate streams means enabling one never shifts the other.
inline constexpr std::uint64_t stream_snapshot = 0x736e617073686f74ull; // "snapshot"
inline constexpr std::uint64_t stream_sweep = 0x7377656570000000ull;    // "sweep"
inline constexpr std::uint64_t stream_users = 0x7573657273000000ull;    // "users"

} // namespace jacbeam

#endif

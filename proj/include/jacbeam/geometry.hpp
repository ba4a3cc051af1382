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

#ifndef JACBEAM_GEOMETRY_HPP
#define JACBEAM_GEOMETRY_HPP

namespace jacbeam
{

// Speed of light in vacuum [m/s]
inline constexpr double speed_of_light = 299792458.0;

// Uniform linear array on the x-axis, centered at the origin.
// Element n (1-based, n = 1..n_antennas) sits at
//   x_n = (n - (n_antennas + 1) / 2) * spacing.
// Angles are measured from the array broadside (z-axis); a user at
// range r and angle theta is at (x, z) = (r sin(theta), r cos(theta)).
struct ArrayConfig
{
    int n_antennas;      // number of elements N, must be >= 2
    double spacing;      // element spacing d [m], must be > 0
    double carrier_freq; // carrier frequency f [Hz], must be > 0

    ArrayConfig(int n, double d, double f);

    // Half-wavelength spaced array at frequency f
    static ArrayConfig half_wavelength(int n, double f);

    double wavelength() const; // lambda = c / f [m]
    double wavenumber() const; // k = 2 pi / lambda [rad/m]
    double aperture() const;   // D = N * d [m]
};

// Position of element n (1-based) on the x-axis [m].
// Throws std::out_of_range unless 1 <= n <= cfg.n_antennas.
double antenna_position(const ArrayConfig &cfg, int n);

// Rayleigh distance 2 D^2 / lambda [m]; boundary between the radiating
// near field and the far field.
double rayleigh_distance(const ArrayConfig &cfg);

// Fresnel lower bound 0.62 sqrt(D^3 / lambda) [m]; the quadratic phase
// model is only trusted at ranges above this.
double fresnel_lower_bound(const ArrayConfig &cfg);

// User location in the array plane [m]; z > 0 is in front of the array.
struct UserPosition
{
    double x;
    double z;

    double radius() const; // r = sqrt(x^2 + z^2)
    double angle() const;  // theta = atan2(x, z), in (-pi/2, pi/2) for z > 0
};

// Two-parameter description of a near-field wavefront:
//   p1 = cos(theta)^2 / r  [1/m]  (curvature of arrival)
//   p2 = -sin(theta)       [dimensionless]
struct NearFieldParams
{
    double p1;
    double p2;
};

// Map a user position to (p1, p2). Throws std::invalid_argument when
// the radius is zero.
NearFieldParams params_from_position(const UserPosition &pos);

// Inverse of params_from_position for p1 > 0; recovers theta from p2 and
// r from p1. Throws std::domain_error when p1 <= 0 (a far-field wavefront
// has no finite radius) or |p2| >= 1.
UserPosition position_from_params(const NearFieldParams &params);

} // namespace jacbeam

#endif

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

#include "jacbeam/geometry.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace jacbeam
{

ArrayConfig::ArrayConfig(int n, double d, double f) : n_antennas(n), spacing(d), carrier_freq(f)
{
    if (n < 2)
        throw std::invalid_argument("ArrayConfig: n_antennas must be >= 2, got " + std::to_string(n));
    if (!(d > 0.0) || !std::isfinite(d))
        throw std::invalid_argument("ArrayConfig: spacing must be positive and finite");
    if (!(f > 0.0) || !std::isfinite(f))
        throw std::invalid_argument("ArrayConfig: carrier_freq must be positive and finite");
}

ArrayConfig ArrayConfig::half_wavelength(int n, double f)
{
    if (!(f > 0.0) || !std::isfinite(f))
        throw std::invalid_argument("ArrayConfig: carrier_freq must be positive and finite");
    return ArrayConfig(n, 0.5 * speed_of_light / f, f);
}

double ArrayConfig::wavelength() const
{
    return speed_of_light / carrier_freq;
}

double ArrayConfig::wavenumber() const
{
    return 2.0 * std::numbers::pi / wavelength();
}

double ArrayConfig::aperture() const
{
    return static_cast<double>(n_antennas) * spacing;
}

double antenna_position(const ArrayConfig &cfg, int n)
{
    if (n < 1 || n > cfg.n_antennas)
        throw std::out_of_range("antenna_position: element index " + std::to_string(n) + " outside 1.." +
                                std::to_string(cfg.n_antennas));
    return (static_cast<double>(n) - 0.5 * (static_cast<double>(cfg.n_antennas) + 1.0)) * cfg.spacing;
}

double rayleigh_distance(const ArrayConfig &cfg)
{
    double ap = cfg.aperture();
    return 2.0 * ap * ap / cfg.wavelength();
}

double fresnel_lower_bound(const ArrayConfig &cfg)
{
    double ap = cfg.aperture();
    return 0.62 * std::sqrt(ap * ap * ap / cfg.wavelength());
}

double UserPosition::radius() const
{
    return std::hypot(x, z);
}

double UserPosition::angle() const
{
    return std::atan2(x, z);
}

NearFieldParams params_from_position(const UserPosition &pos)
{
    double r = pos.radius();
    if (!(r > 0.0))
        throw std::invalid_argument("params_from_position: radius must be positive");
    double sin_theta = pos.x / r;
    double cos_theta = pos.z / r;
    return NearFieldParams{cos_theta * cos_theta / r, -sin_theta};
}

UserPosition position_from_params(const NearFieldParams &params)
{
    if (!(params.p1 > 0.0))
        throw std::domain_error("position_from_params: p1 must be positive");
    if (!(std::fabs(params.p2) < 1.0))
        throw std::domain_error("position_from_params: |p2| must be < 1");
    double sin_theta = -params.p2;
    double cos2 = 1.0 - sin_theta * sin_theta;
    double r = cos2 / params.p1;
    return UserPosition{r * sin_theta, r * std::sqrt(cos2)};
}

} // namespace jacbeam

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

#include "jacbeam/config.hpp"

#include <cstdint>
#include <fstream>
#include <limits>
#include <sstream>
#include <vector>

namespace jacbeam
{

namespace
{

std::string trim(const std::string &s)
{
    size_t b = s.find_first_not_of(" \t\r");
    if (b == std::string::npos)
        return "";
    size_t e = s.find_last_not_of(" \t\r");
    return s.substr(b, e - b + 1);
}

std::vector<std::string> split_list(const std::string &s)
{
    std::vector<std::string> out;
    std::string cur;
    for (char c : s)
    {
        if (c == ',')
        {
            out.push_back(trim(cur));
            cur.clear();
        }
        else
        {
            cur += c;
        }
    }
    out.push_back(trim(cur));
    return out;
}

double parse_double(const std::string &key, const std::string &value)
{
    if (value == "inf")
        return std::numeric_limits<double>::infinity();
    try
    {
        size_t used = 0;
        double v = std::stod(value, &used);
        if (used != value.size())
            throw std::invalid_argument("");
        return v;
    }
    catch (const std::exception &)
    {
        throw config_error("config key '" + key + "': expected a number, got '" + value + "'");
    }
}

long long parse_int(const std::string &key, const std::string &value)
{
    try
    {
        size_t used = 0;
        long long v = std::stoll(value, &used);
        if (used != value.size())
            throw std::invalid_argument("");
        return v;
    }
    catch (const std::exception &)
    {
        throw config_error("config key '" + key + "': expected an integer, got '" + value + "'");
    }
}

std::uint64_t parse_uint64(const std::string &key, const std::string &value)
{
    try
    {
        size_t used = 0;
        unsigned long long v = std::stoull(value, &used);
        if (used != value.size() || value.front() == '-')
            throw std::invalid_argument("");
        return static_cast<std::uint64_t>(v);
    }
    catch (const std::exception &)
    {
        throw config_error("config key '" + key + "': expected an unsigned integer, got '" + value + "'");
    }
}

bool parse_bool(const std::string &key, const std::string &value)
{
    if (value == "true")
        return true;
    if (value == "false")
        return false;
    throw config_error("config key '" + key + "': expected true or false, got '" + value + "'");
}

} // namespace

std::map<std::string, std::string> parse_key_values(const std::string &text)
{
    std::map<std::string, std::string> pairs;
    std::istringstream stream(text);
    std::string line;
    int lineno = 0;
    while (std::getline(stream, line))
    {
        lineno++;
        size_t hash = line.find('#');
        if (hash != std::string::npos)
            line = line.substr(0, hash);
        line = trim(line);
        if (line.empty())
            continue;
        size_t eq = line.find('=');
        if (eq == std::string::npos)
            throw config_error("config line " + std::to_string(lineno) + ": expected key = value, got '" + line +
                               "'");
        std::string key = trim(line.substr(0, eq));
        std::string value = trim(line.substr(eq + 1));
        if (key.empty())
            throw config_error("config line " + std::to_string(lineno) + ": empty key");
        if (pairs.count(key) != 0)
            throw config_error("config line " + std::to_string(lineno) + ": duplicate key '" + key + "'");
        pairs[key] = value;
    }
    return pairs;
}

ExperimentSpec spec_from_pairs(const std::map<std::string, std::string> &pairs)
{
    // Array geometry first: later keys depend on the finished config.
    int n_antennas = 800;
    double carrier = 60.0e9;
    if (pairs.count("n_antennas"))
        n_antennas = static_cast<int>(parse_int("n_antennas", pairs.at("n_antennas")));
    if (pairs.count("carrier_freq_hz"))
        carrier = parse_double("carrier_freq_hz", pairs.at("carrier_freq_hz"));

    ExperimentSpec spec;
    try
    {
        if (pairs.count("spacing_m"))
            spec.array = ArrayConfig(n_antennas, parse_double("spacing_m", pairs.at("spacing_m")), carrier);
        else
            spec.array = ArrayConfig::half_wavelength(n_antennas, carrier);
    }
    catch (const std::invalid_argument &e)
    {
        throw config_error(std::string("config: ") + e.what());
    }

    for (const auto &[key, value] : pairs)
    {
        if (key == "n_antennas" || key == "carrier_freq_hz" || key == "spacing_m")
            continue;
        if (key == "schemes")
        {
            spec.schemes.clear();
            for (const std::string &name : split_list(value))
            {
                try
                {
                    spec.schemes.push_back(scheme_from_name(name));
                }
                catch (const std::invalid_argument &e)
                {
                    throw config_error(std::string("config key 'schemes': ") + e.what());
                }
            }
        }
        else if (key == "snr_db")
        {
            spec.snr_db.clear();
            for (const std::string &item : split_list(value))
                spec.snr_db.push_back(parse_double(key, item));
        }
        else if (key == "users")
            spec.user_count = static_cast<int>(parse_int(key, value));
        else if (key == "r_min_m")
            spec.r_min = parse_double(key, value);
        else if (key == "r_max_m")
            spec.r_max = parse_double(key, value);
        else if (key == "theta_min_rad")
            spec.theta_min = parse_double(key, value);
        else if (key == "theta_max_rad")
            spec.theta_max = parse_double(key, value);
        else if (key == "grid_x_min_m")
            spec.grid.x_min = parse_double(key, value);
        else if (key == "grid_x_max_m")
            spec.grid.x_max = parse_double(key, value);
        else if (key == "grid_z_min_m")
            spec.grid.z_min = parse_double(key, value);
        else if (key == "grid_z_max_m")
            spec.grid.z_max = parse_double(key, value);
        else if (key == "grid_step_m")
            spec.grid.step = parse_double(key, value);
        else if (key == "seed")
            spec.seed = parse_uint64(key, value);
        else if (key == "eta")
            spec.estimator.eta = parse_double(key, value);
        else if (key == "nu_max")
            spec.estimator.nu_max = static_cast<int>(parse_int(key, value));
        else if (key == "far_field_decision")
            spec.estimator.far_field_decision = parse_double(key, value);
        else if (key == "snapshots")
            spec.estimator.snapshots = static_cast<int>(parse_int(key, value));
        else if (key == "polar_rings")
            spec.polar_rings = static_cast<int>(parse_int(key, value));
        else if (key == "polar_p1_max")
            spec.polar_p1_max = parse_double(key, value);
        else if (key == "tx_power_w")
            spec.tx_power = parse_double(key, value);
        else if (key == "allow_r_clamp")
            spec.allow_r_clamp = parse_bool(key, value);
        else
            throw config_error("unknown config key '" + key + "'");
    }
    return spec;
}

ExperimentSpec load_spec(const std::string &path)
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw io_error("cannot open config file '" + path + "'");
    std::ostringstream text;
    text << file.rdbuf();
    if (file.bad())
        throw io_error("cannot read config file '" + path + "'");
    return spec_from_pairs(parse_key_values(text.str()));
}

} // namespace jacbeam

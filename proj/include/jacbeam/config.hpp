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

#ifndef JACBEAM_CONFIG_HPP
#define JACBEAM_CONFIG_HPP

#include <map>
#include <stdexcept>
#include <string>

#include "jacbeam/experiments.hpp"

namespace jacbeam
{

// Malformed config text, bad value, or unknown key (CLI exit code 2).
class config_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// File-system failure while reading or writing (CLI exit code 4).
class io_error : public std::runtime_error
{
  public:
    using std::runtime_error::runtime_error;
};

// Parse flat "key = value" text: one pair per line, '#' starts a comment,
// blank lines ignored. Duplicate keys are an error.
std::map<std::string, std::string> parse_key_values(const std::string &text);

// Build an ExperimentSpec from parsed pairs. Unknown keys are a hard
// error naming the offending key. All keys are optional; defaults follow
// the reference setup (N = 800 half-wavelength at 60 GHz).
ExperimentSpec spec_from_pairs(const std::map<std::string, std::string> &pairs);

// Load a config file from disk (io_error on filesystem problems,
// config_error on content problems).
ExperimentSpec load_spec(const std::string &path);

} // namespace jacbeam

#endif

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

#ifndef JACBEAM_CSV_HPP
#define JACBEAM_CSV_HPP

#include <string>
#include <vector>

#include "jacbeam/channel.hpp"
#include "jacbeam/codebook.hpp"

namespace jacbeam
{

// 17 significant digits (printf %.17g): enough for the printed form to
// parse back to the identical double.
std::string format_g17(double value);

// Write rows to a CSV file: header first, LF line endings, UTF-8, no
// quoting (fields never contain commas). Throws io_error on failure.
void write_csv(const std::string &path, const std::vector<std::string> &header,
               const std::vector<std::vector<std::string>> &rows);

// Read a CSV written by write_csv. When expected_header is nonempty the
// file's header must match exactly. Returns data rows (header excluded).
std::vector<std::vector<std::string>> read_csv(const std::string &path,
                                               const std::vector<std::string> &expected_header = {});

// Snapshot files carry one antenna element per row: n (1-based), re, im.
void write_snapshot(const std::string &path, const ChannelVector &ch);
ChannelVector read_snapshot(const std::string &path);

// Codebook files carry one weight per row:
// scheme, codeword_index (0-based), ring_index, u, p1, n (1-based), re, im.
// Values round-trip bit for bit through the %.17g formatting.
void write_codebook(const std::string &path, const Codebook &book);
Codebook read_codebook(const std::string &path);

} // namespace jacbeam

#endif

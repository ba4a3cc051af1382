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

#include "jacbeam/csv.hpp"

#include <cstdio>
#include <fstream>
#include <sstream>

#include "jacbeam/config.hpp"

namespace jacbeam
{

namespace
{

std::vector<std::string> split_line(const std::string &line)
{
    std::vector<std::string> fields;
    std::string cur;
    for (char c : line)
    {
        if (c == ',')
        {
            fields.push_back(cur);
            cur.clear();
        }
        else if (c != '\r')
        {
            cur += c;
        }
    }
    fields.push_back(cur);
    return fields;
}

std::string join(const std::vector<std::string> &fields)
{
    std::string line;
    for (size_t i = 0; i < fields.size(); i++)
    {
        if (i != 0)
            line += ',';
        line += fields[i];
    }
    return line;
}

double field_double(const std::string &path, const std::string &field)
{
    try
    {
        size_t used = 0;
        double v = std::stod(field, &used);
        if (used != field.size())
            throw std::invalid_argument("");
        return v;
    }
    catch (const std::exception &)
    {
        throw config_error("'" + path + "': malformed numeric field '" + field + "'");
    }
}

long long field_int(const std::string &path, const std::string &field)
{
    try
    {
        size_t used = 0;
        long long v = std::stoll(field, &used);
        if (used != field.size())
            throw std::invalid_argument("");
        return v;
    }
    catch (const std::exception &)
    {
        throw config_error("'" + path + "': malformed integer field '" + field + "'");
    }
}

} // namespace

std::string format_g17(double value)
{
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_csv(const std::string &path, const std::vector<std::string> &header,
               const std::vector<std::vector<std::string>> &rows)
{
    std::ofstream file(path, std::ios::binary); // binary keeps LF endings everywhere
    if (!file)
        throw io_error("cannot open '" + path + "' for writing");
    file << join(header) << '\n';
    for (const auto &row : rows)
        file << join(row) << '\n';
    file.flush();
    if (!file)
        throw io_error("failed writing '" + path + "'");
}

std::vector<std::vector<std::string>> read_csv(const std::string &path, const std::vector<std::string> &expected_header)
{
    std::ifstream file(path, std::ios::binary);
    if (!file)
        throw io_error("cannot open '" + path + "' for reading");

    std::vector<std::vector<std::string>> rows;
    std::string line;
    bool first = true;
    while (std::getline(file, line))
    {
        if (line.empty())
            continue;
        std::vector<std::string> fields = split_line(line);
        if (first)
        {
            first = false;
            if (!expected_header.empty() && fields != expected_header)
                throw config_error("'" + path + "': unexpected header '" + join(fields) + "' (expected '" +
                                   join(expected_header) + "')");
            continue;
        }
        rows.push_back(std::move(fields));
    }
    if (file.bad())
        throw io_error("failed reading '" + path + "'");
    if (first)
        throw config_error("'" + path + "': empty file");
    return rows;
}

void write_snapshot(const std::string &path, const ChannelVector &ch)
{
    std::vector<std::vector<std::string>> rows;
    rows.reserve(ch.samples.size());
    for (size_t i = 0; i < ch.samples.size(); i++)
        rows.push_back({std::to_string(i + 1), format_g17(ch.samples[i].real()), format_g17(ch.samples[i].imag())});
    write_csv(path, {"n", "re", "im"}, rows);
}

ChannelVector read_snapshot(const std::string &path)
{
    std::vector<std::vector<std::string>> rows = read_csv(path, {"n", "re", "im"});
    ChannelVector ch;
    ch.samples.reserve(rows.size());
    for (size_t i = 0; i < rows.size(); i++)
    {
        const auto &row = rows[i];
        if (row.size() != 3)
            throw config_error("'" + path + "': snapshot rows need 3 fields (n, re, im)");
        long long n = field_int(path, row[0]);
        if (n != static_cast<long long>(i + 1))
            throw config_error("'" + path + "': snapshot rows must run n = 1.." + std::to_string(rows.size()) +
                               " in order");
        ch.samples.emplace_back(field_double(path, row[1]), field_double(path, row[2]));
    }
    if (ch.samples.empty())
        throw config_error("'" + path + "': snapshot has no samples");
    return ch;
}

void write_codebook(const std::string &path, const Codebook &book)
{
    std::vector<std::vector<std::string>> rows;
    rows.reserve(book.codewords.size() * (book.codewords.empty() ? 0 : book.codewords.front().weights.size()));
    std::string scheme = scheme_name(book.scheme);
    for (size_t m = 0; m < book.codewords.size(); m++)
    {
        const Codeword &w = book.codewords[m];
        for (size_t n = 0; n < w.weights.size(); n++)
        {
            rows.push_back({scheme, std::to_string(m), std::to_string(w.ring_index), format_g17(w.u),
                            format_g17(w.p1), std::to_string(n + 1), format_g17(w.weights[n].real()),
                            format_g17(w.weights[n].imag())});
        }
    }
    write_csv(path, {"scheme", "codeword_index", "ring_index", "u", "p1", "n", "re", "im"}, rows);
}

Codebook read_codebook(const std::string &path)
{
    std::vector<std::vector<std::string>> rows =
        read_csv(path, {"scheme", "codeword_index", "ring_index", "u", "p1", "n", "re", "im"});
    if (rows.empty())
        throw config_error("'" + path + "': codebook has no rows");

    Codebook book;
    book.scheme = scheme_from_name(rows.front()[0]);
    for (const auto &row : rows)
    {
        if (row.size() != 8)
            throw config_error("'" + path + "': codebook rows need 8 fields");
        if (row[0] != rows.front()[0])
            throw config_error("'" + path + "': mixed schemes in one codebook file");
        long long m = field_int(path, row[1]);
        long long n = field_int(path, row[5]);
        if (m == static_cast<long long>(book.codewords.size()))
        {
            Codeword w;
            w.ring_index = static_cast<int>(field_int(path, row[2]));
            w.u = field_double(path, row[3]);
            w.p1 = field_double(path, row[4]);
            book.codewords.push_back(std::move(w));
        }
        else if (m + 1 != static_cast<long long>(book.codewords.size()))
        {
            throw config_error("'" + path + "': codeword_index must increase one at a time");
        }
        Codeword &w = book.codewords.back();
        if (n != static_cast<long long>(w.weights.size() + 1))
            throw config_error("'" + path + "': weights must run n = 1..N in order per codeword");
        w.weights.emplace_back(field_double(path, row[6]), field_double(path, row[7]));
    }

    size_t n_ant = book.codewords.front().weights.size();
    for (const auto &w : book.codewords)
        if (w.weights.size() != n_ant)
            throw config_error("'" + path + "': codewords have inconsistent lengths");

    // Angle index on the DFT grid recurs every N codewords (polar stacks
    // rings codeword-major).
    for (size_t m = 0; m < book.codewords.size(); m++)
        book.codewords[m].angle_index = static_cast<int>(m % n_ant);

    int count = static_cast<int>(book.codewords.size());
    book.overhead = book.scheme == Scheme::jac ? count + 1 : count;
    return book;
}

} // namespace jacbeam

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

#include <cstdint>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "jacbeam/config.hpp"
#include "jacbeam/csv.hpp"
#include "jacbeam/experiments.hpp"

namespace
{

namespace fs = std::filesystem;
using namespace jacbeam;

std::string out_path(const std::string &out_dir, const std::string &name)
{
    std::error_code ec;
    fs::create_directories(out_dir, ec);
    if (ec)
        throw io_error("cannot create output directory '" + out_dir + "': " + ec.message());
    return (fs::path(out_dir) / name).string();
}

void report_file(const std::string &path, size_t rows)
{
    std::cout << "wrote " << path << " (" << rows << " rows)\n";
}

int run_rate(const ExperimentSpec &spec, const std::string &out_dir)
{
    RadiusRange range = resolve_radius_range(spec);
    if (range.clamped)
        std::cout << "note: r_min clamped to the Fresnel lower bound " << format_g17(range.r_min) << " m\n";

    std::vector<RateRecord> records = rate_vs_snr(spec);
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const auto &rec : records)
        rows.push_back({rec.scheme, format_g17(rec.snr_db), format_g17(rec.mean_rate), format_g17(rec.ci95)});

    std::string path = out_path(out_dir, "rate_vs_snr.csv");
    write_csv(path, {"scheme", "snr_db", "mean_rate", "ci95"}, rows);
    report_file(path, rows.size());
    return 0;
}

int run_coverage(const ExperimentSpec &spec, const std::string &out_dir)
{
    std::vector<CoverageRecord> records = coverage_heatmap(spec);
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const auto &rec : records)
        rows.push_back({format_g17(rec.x), format_g17(rec.z), rec.scheme, format_g17(rec.r_cover)});

    std::string path = out_path(out_dir, "coverage.csv");
    write_csv(path, {"x", "z", "scheme", "r_cover"}, rows);
    report_file(path, rows.size());
    return 0;
}

int run_overhead(const ExperimentSpec &spec, const std::string &out_dir)
{
    std::vector<OverheadRecord> records = overhead_table(spec);
    std::vector<std::vector<std::string>> rows;
    rows.reserve(records.size());
    for (const auto &rec : records)
        rows.push_back({rec.scheme, std::to_string(rec.slots_used)});

    std::string path = out_path(out_dir, "overhead.csv");
    write_csv(path, {"scheme", "slots_used"}, rows);
    report_file(path, rows.size());
    return 0;
}

int run_estimate(const ExperimentSpec &spec, const std::string &input)
{
    ChannelVector snapshot = read_snapshot(input);
    CoaEstimate est = estimate_p1(snapshot, spec.array, spec.estimator);
    std::cout << "p1_hat = " << format_g17(est.p1_hat) << "\n";
    if (est.crossing_lag)
        std::cout << "crossing_lag = " << *est.crossing_lag << "\n";
    else
        std::cout << "crossing_lag = none\n";
    std::cout << "fractional_lag = " << format_g17(est.fractional_lag) << "\n";
    std::cout << "kernel_root = " << format_g17(est.kernel_root) << "\n";
    return 0;
}

int run_dump(const ExperimentSpec &spec, const std::string &out_dir, const std::string &scheme_str, double p1)
{
    Scheme scheme = scheme_from_name(scheme_str);
    Codebook book;
    switch (scheme)
    {
    case Scheme::dft:
        book = dft_codebook(spec.array);
        break;
    case Scheme::polar:
        book = polar_codebook(spec.array, spec.polar_rings, resolve_polar_p1_max(spec));
        break;
    case Scheme::jac:
        book = jac_codebook(spec.array, p1);
        break;
    }

    std::string path = out_path(out_dir, "codebook_" + scheme_str + ".csv");
    write_codebook(path, book);
    report_file(path, book.codewords.size() * (book.codewords.empty() ? 0 : book.codewords.front().weights.size()));
    return 0;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"near-field beam training simulator for uniform linear arrays"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_dir = ".";
    std::uint64_t seed_override = 0;
    app.add_option("--config", config_path, "experiment config file (key = value lines)");
    app.add_option("--out", out_dir, "output directory for CSV files");
    CLI::Option *seed_opt = app.add_option("--seed", seed_override, "override the config seed");

    CLI::App *rate_cmd = app.add_subcommand("rate-vs-snr", "mean achievable rate per scheme and SNR");
    CLI::App *coverage_cmd = app.add_subcommand("coverage", "noiseless coverage heatmap over the grid");
    CLI::App *overhead_cmd = app.add_subcommand("overhead", "training-slot accounting per scheme");

    CLI::App *estimate_cmd = app.add_subcommand("estimate", "estimate p1 from a snapshot CSV");
    std::string input;
    estimate_cmd->add_option("--input", input, "snapshot CSV with columns n, re, im")->required();

    CLI::App *dump_cmd = app.add_subcommand("codebook-dump", "write codebook weights to CSV");
    std::string dump_scheme;
    double dump_p1 = 0.0;
    dump_cmd->add_option("--scheme", dump_scheme, "dft, polar or jac")->required();
    dump_cmd->add_option("--p1", dump_p1, "curvature for the jac codebook [1/m]");

    try
    {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError &e)
    {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try
    {
        ExperimentSpec spec;
        if (!config_path.empty())
            spec = load_spec(config_path);
        if (seed_opt->count() > 0)
            spec.seed = seed_override;
        std::cout << "seed = " << spec.seed << "\n";

        if (rate_cmd->parsed())
            return run_rate(spec, out_dir);
        if (coverage_cmd->parsed())
            return run_coverage(spec, out_dir);
        if (overhead_cmd->parsed())
            return run_overhead(spec, out_dir);
        if (estimate_cmd->parsed())
            return run_estimate(spec, input);
        if (dump_cmd->parsed())
            return run_dump(spec, out_dir, dump_scheme, dump_p1);
        return 2;
    }
    catch (const config_error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    catch (const io_error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 4;
    }
    catch (const std::invalid_argument &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    catch (const std::domain_error &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    catch (const crossing_not_bracketed &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
    catch (const std::exception &e)
    {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}

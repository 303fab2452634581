//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tools/signedchord.cc
//! \brief Command-line front end over the C interface
//---------------------------------------------------------------------------//
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>
#include <CLI11.hpp>

#include "signedchord/signedchord.h"

namespace
{
//---------------------------------------------------------------------------//
enum ExitCode
{
    exit_ok = 0,
    exit_check_failed = 1,
    exit_error = 2,
};

struct Args
{
    std::string body;
    std::string field;
    std::uint64_t seed{0};
    std::uint64_t samples{0};
    std::size_t bins{0};
    std::vector<double> range;
    std::size_t streams{0};
    std::size_t workers{0};
    std::string phi{"exp:1"};
    std::vector<std::string> methods;
    std::string ell{"cauchy"};
    std::vector<double> mfp;
    std::size_t window{0};
    std::string slope{"fit"};
    bool compare{false};
    std::uint64_t aux_samples{0};
    double nsigma{0};
    std::string output;
    std::string csv_dir;
    bool json{false};
};

template<class T, void (*Free)(T*)>
struct Deleter
{
    void operator()(T* p) const { Free(p); }
};
using BodyPtr = std::unique_ptr<sc_body, Deleter<sc_body, sc_body_free>>;
using FieldPtr = std::unique_ptr<sc_field, Deleter<sc_field, sc_field_free>>;
using ResultPtr = std::unique_ptr<sc_result, Deleter<sc_result, sc_result_free>>;

int report_failure(sc_status status)
{
    std::cerr << "error [" << sc_status_name(status) << "]: " << sc_last_error()
              << '\n';
    return exit_error;
}

void add_options(CLI::App& cmd, Args& a, sc_run_config const& defaults)
{
    a.seed = defaults.seed;
    a.samples = defaults.samples;
    a.bins = defaults.bins;
    a.streams = defaults.streams;
    a.workers = defaults.workers;
    a.window = defaults.window;
    a.nsigma = defaults.nsigma;

    cmd.add_option("--body", a.body, "Body description (JSON)");
    cmd.add_option("--field", a.field, "Density field description (JSON)");
    cmd.add_option("--seed", a.seed, "Master seed")->capture_default_str();
    cmd.add_option("--samples", a.samples, "Lines, rays, pairs or walks")
        ->capture_default_str();
    cmd.add_option("--bins", a.bins, "Histogram bins (>= 8)")->capture_default_str();
    cmd.add_option("--range", a.range, "Histogram range lo,hi")
        ->expected(2)
        ->delimiter(',');
    cmd.add_option("--streams", a.streams, "Independent batches (>= 2)")
        ->capture_default_str();
    cmd.add_option("--workers", a.workers, "Threads; does not change results")
        ->capture_default_str();
    cmd.add_option("--phi", a.phi, "Test function: exp:a, pow:p, ind:l0, table:x=y,...")
        ->capture_default_str();
    cmd.add_option("--methods", a.methods, "Dirac routes: gamma,radii,chords,pairs")
        ->delimiter(',');
    cmd.add_option("--ell", a.ell, "Chord-route length scale")
        ->check(CLI::IsMember({"cauchy", "fourth-moment"}))
        ->capture_default_str();
    cmd.add_option("--mfp", a.mfp, "Walk mean free paths, comma separated")
        ->delimiter(',');
    cmd.add_option("--window", a.window, "Smoothing window (odd)")->capture_default_str();
    cmd.add_option("--slope", a.slope, "gamma'(0) source")
        ->check(CLI::IsMember({"fit", "analytic"}))
        ->capture_default_str();
    cmd.add_flag("--compare", a.compare, "Compare with the decomposition estimate");
    cmd.add_option("--aux-samples",
                   a.aux_samples,
                   "Kink-pair instances (walk) or weighted pairs (optical)");
    cmd.add_option("--nsigma", a.nsigma, "Statistical tolerance in standard errors")
        ->capture_default_str();
    cmd.add_option("--output,-o", a.output, "Write the JSON report here");
    cmd.add_option("--csv-dir", a.csv_dir, "Write CSV tables into this directory");
    cmd.add_flag("--json", a.json, "Print the JSON report even when text exists");
}

bool write_file(std::filesystem::path const& path, std::string const& content)
{
    std::ofstream out(path, std::ios::binary);
    out << content;
    out.close();
    if (!out)
    {
        std::cerr << "error [io]: cannot write " << path.string() << '\n';
        return false;
    }
    return true;
}

int run(std::string const& command, Args const& a, sc_run_config config)
{
    BodyPtr body;
    FieldPtr field;
    if (!a.body.empty())
    {
        sc_body* b = nullptr;
        if (sc_status s = sc_body_load(a.body.c_str(), &b))
            return report_failure(s);
        body.reset(b);
    }
    if (!a.field.empty())
    {
        sc_field* f = nullptr;
        if (sc_status s = sc_field_load(a.field.c_str(), &f))
            return report_failure(s);
        field.reset(f);
    }

    config.seed = a.seed;
    config.samples = a.samples;
    config.bins = a.bins;
    if (!a.range.empty())
    {
        config.has_range = 1;
        config.range_lo = a.range[0];
        config.range_hi = a.range[1];
    }
    config.streams = a.streams;
    config.workers = a.workers;
    config.phi = a.phi.c_str();
    std::string methods;
    for (auto const& m : a.methods)
        methods += (methods.empty() ? "" : ",") + m;
    if (!methods.empty())
        config.methods = methods.c_str();
    config.ell = a.ell.c_str();
    if (!a.mfp.empty())
    {
        config.mfp = a.mfp.data();
        config.mfp_count = a.mfp.size();
    }
    config.window = a.window;
    config.slope = a.slope.c_str();
    config.compare = a.compare;
    config.aux_samples = a.aux_samples;
    config.nsigma = a.nsigma;

    sc_result* r = nullptr;
    if (sc_status s = sc_run(command.c_str(), body.get(), field.get(), &config, &r))
        return report_failure(s);
    ResultPtr result(r);

    std::string const json = sc_result_json(result.get());
    std::string const text = sc_result_text(result.get());
    if (!a.output.empty())
    {
        if (!write_file(a.output, json))
            return exit_error;
    }
    if (!text.empty() && !a.json)
        std::cout << text;
    else if (a.output.empty())
        std::cout << json;

    if (!a.csv_dir.empty())
    {
        std::error_code ec;
        std::filesystem::create_directories(a.csv_dir, ec);
        for (std::size_t i = 0; i < sc_result_table_count(result.get()); ++i)
        {
            auto const path = std::filesystem::path(a.csv_dir)
                              / (std::string(sc_result_table_name(result.get(), i))
                                 + ".csv");
            if (!write_file(path, sc_result_table_csv(result.get(), i)))
                return exit_error;
        }
    }

    if (!sc_result_passed(result.get()))
    {
        std::cerr << command << ": one or more checks failed (see report)\n";
        return exit_check_failed;
    }
    return exit_ok;
}

//---------------------------------------------------------------------------//
}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Signed chord length distributions by Monte Carlo sampling"};
    app.set_version_flag("--version", std::string(sc_version()));
    app.require_subcommand(1);

    sc_run_config defaults;
    sc_run_config_init(&defaults);

    Args args;
    std::string chosen;
    for (std::size_t i = 0; i < sc_command_count(); ++i)
    {
        std::string const name = sc_command_name(i);
        CLI::App* cmd = app.add_subcommand(name);
        add_options(*cmd, args, defaults);
        cmd->callback([&chosen, name] { chosen = name; });
    }

    try
    {
        app.parse(argc, argv);
    }
    catch (CLI::Success const& e)
    {
        return app.exit(e);
    }
    catch (CLI::ParseError const& e)
    {
        app.exit(e);
        return exit_error;
    }
    return run(chosen, args, defaults);
}

//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file tests/acceptance/acceptance.cc
//! \brief Desk-scale acceptance suite: one PASS/FAIL line per criterion
//---------------------------------------------------------------------------//
#include <chrono>
#include <cstdarg>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <vector>

#include "signedchord/Check.hh"
#include "signedchord/dirac/Dirac.hh"
#include "signedchord/estimators/Decompose.hh"
#include "signedchord/estimators/Estimators.hh"
#include "signedchord/nonuniform/Optical.hh"
#include "signedchord/paths/Paths.hh"
#include "signedchord/signedhist/TwoSample.hh"

#include "../unit/TestUtils.hh"

using namespace signedchord;
using namespace signedchord::test;

namespace
{
//---------------------------------------------------------------------------//
// Pinned sample sizes and tolerances
constexpr std::uint64_t n_lines = 1'000'000;
constexpr std::uint64_t n_rays = 1'000'000;
constexpr std::uint64_t n_exact = 100'000;
constexpr std::uint64_t n_dirac = 1'000'000;
constexpr std::uint64_t n_curvature_pairs = 20'000'000;
constexpr std::uint64_t n_optical = 1'000'000;
constexpr std::uint64_t n_b3_pairs = 20'000'000;
constexpr std::uint64_t n_walks = 1'000'000;
constexpr std::uint64_t n_kinks = 10'000;
constexpr int n_oracle_sets = 500;

constexpr double nsigma = 4;
constexpr double min_bin_fraction = 0.99;
constexpr double mean_chord_rel = 0.005;
constexpr double moment_rel = 0.01;
constexpr double exact_rel = 1e-9;
constexpr double oracle_rel = 1e-6;
constexpr double normalization_abs = 1e-12;
constexpr double curvature_fraction = 0.95;
constexpr std::size_t curvature_bins = 64;
constexpr std::size_t curvature_window = 7;
constexpr double min_p_value = 0.001;
constexpr double constant_rel = 0.02;

BatchPlan const plan{20240917, 64, 1};

//---------------------------------------------------------------------------//
struct Criterion
{
    int number;
    std::string name;
    std::function<bool(std::ostringstream&)> run;
};

double rel(double value, double ref)
{
    return std::fabs(value - ref) / std::fabs(ref);
}

//! Append a formatted detail and return the condition
bool report(std::ostringstream& os, bool ok, char const* fmt, ...)
    __attribute__((format(printf, 3, 4)));

bool report(std::ostringstream& os, bool ok, char const* fmt, ...)
{
    char buf[512];
    va_list args;
    va_start(args, fmt);
    std::vsnprintf(buf, sizeof(buf), fmt, args);
    va_end(args);
    os << (os.tellp() > 0 ? "; " : "") << buf << (ok ? "" : " [X]");
    return ok;
}

bool report_check(std::ostringstream& os, CheckRecord const& c)
{
    return report(os,
                  c.passed,
                  "%s=%.6g+-%.2g ref %.6g z=%.2f",
                  c.name.c_str(),
                  c.value,
                  c.error,
                  c.reference,
                  c.z);
}

//---------------------------------------------------------------------------//
// CRITERIA
//---------------------------------------------------------------------------//
bool sphere_cld(std::ostringstream& os)
{
    auto est = estimate_chords(unit_sphere(), plan, n_lines, {0, 2, 64});
    std::size_t ok = 0;
    auto const& mu = est.mu_signed;
    for (std::size_t i = 0; i < mu.size(); ++i)
    {
        // Bin average of l / 2
        double const ref = (mu.grid.edge(i) + mu.grid.edge(i + 1)) / 4;
        if (std::fabs(mu.density[i] - ref) <= nsigma * mu.error[i])
            ++ok;
    }
    double const frac = double(ok) / mu.size();
    bool pass = report(os, frac >= min_bin_fraction, "bins_within_4sigma=%zu/%zu", ok, mu.size());
    double const mean = est.mean_signed[1].value;
    pass &= report(os, rel(mean, 4.0 / 3) <= mean_chord_rel,
                   "<l>=%.6f rel_err=%.2e (tol %.1e)", mean, rel(mean, 4.0 / 3), mean_chord_rel);
    return pass;
}

bool sphere_fourth_moment(std::ostringstream& os)
{
    auto est = estimate_chords(unit_sphere(), plan, n_lines, {0, 2, 64});
    double const m4 = est.mean_signed[4].value;
    return report(os, rel(m4, 16.0 / 3) <= moment_rel, "<l^4>=%.6f ref %.6f rel_err=%.2e (tol %.0e)",
                  m4, 16.0 / 3, rel(m4, 16.0 / 3), moment_rel);
}

bool exact_identities(std::ostringstream& os)
{
    Body shell = unit_shell();
    auto ch = estimate_chords(shell, plan, n_exact, {0, 2, 64});
    auto ra = estimate_radii(shell, plan, n_exact, {0, 2, 64});
    bool pass = report(os, ch.max_sq_identity_error <= exact_rel,
                       "chords=%llu worst_rel(sum q l^2 vs ocd^2)=%.2e",
                       (unsigned long long)ch.lines_hit, ch.max_sq_identity_error);
    pass &= report(os, ra.max_sum_identity_error <= exact_rel,
                   "rays=%llu worst_rel(sum sign R vs osd)=%.2e",
                   (unsigned long long)ra.rays, ra.max_sum_identity_error);
    return pass;
}

bool oracle_equivalence(std::ostringstream& os)
{
    struct Kernel
    {
        char const* text;
        std::function<double(double)> f;
    };
    std::vector<Kernel> kernels{{"pow:0", [](double) { return 1.0; }},
                                {"pow:1", [](double x) { return x; }},
                                {"exp:1", [](double x) { return std::exp(-x); }}};
    RandomSource rng(plan.seed, 0);
    std::vector<IntervalSet> sets;
    for (int i = 0; i < n_oracle_sets; ++i)
        sets.push_back(random_intervals(rng, 4));
    bool pass = true;
    for (auto const& k : kernels)
    {
        TestFunction const phi = TestFunction::parse(k.text);
        double worst = 0;
        for (auto const& s : sets)
        {
            double sum = 0;
            for (auto const& p : chord_decompose(s).pieces)
                sum += p.charge * phi.lambda(p.length);
            worst = std::max(worst, rel(sum, pair_integral(s, k.f)));
        }
        pass &= report(os, worst <= oracle_rel, "%s worst_rel=%.2e", k.text, worst);
    }
    return pass;
}

bool shell_suite(std::ostringstream& os)
{
    Body shell = unit_shell();
    auto const m = shell.metrics();
    auto est = estimate_chords(shell, plan, n_lines, {0, 2, 256});
    double const cm = est.c_m.value;
    bool pass = report(os, rel(cm, 1.25) <= moment_rel, "c_M=%.5f rel_err=%.2e", cm, rel(cm, 1.25));
    double const mean = est.mean_signed[1].value;
    pass &= report(os, rel(mean, 14.0 / 15) <= moment_rel, "<l>=%.5f rel_err=%.2e", mean,
                   rel(mean, 14.0 / 15));
    pass &= report_check(os, check_agree("<l>_O/<l>_vs_c_M", est.ratio_first, est.c_m, nsigma));
    pass &= report_check(os, check_agree("<l2>_O/<l2>_vs_c_M", est.ratio_second, est.c_m, nsigma));
    double const ell = ell_from_fourth_moment(est, m.volume).value;
    pass &= report(os, rel(ell, m.mean_chord()) <= moment_rel, "pi<l^4>/3V=%.5f rel_err=%.2e", ell,
                   rel(ell, m.mean_chord()));
    return pass;
}

bool normalizations(std::ostringstream& os)
{
    auto ra = estimate_radii(unit_shell(), plan, n_rays, {0, 2, 256});
    bool pass = report(os, std::fabs(ra.integral_signed - 1) <= normalization_abs,
                       "int iota=%.15f", ra.integral_signed);
    pass &= report_check(os, check_agree("int_iota+_vs_int_iota-", ra.integral_positive,
                                         ra.integral_negative, nsigma));
    double const d = rel(ra.mean_signed.value, ra.mean_one.value);
    pass &= report(os, d <= normalization_abs, "first_moment iota=%.12f iota_O=%.12f rel=%.1e",
                   ra.mean_signed.value, ra.mean_one.value, d);
    return pass;
}

bool dirac_cross_check(std::ostringstream& os)
{
    Body shell = unit_shell();
    DiracOptions opts;
    opts.methods = {"gamma", "radii", "chords"};
    opts.samples = n_dirac;
    opts.grid = {0, 2, 256};
    bool pass = true;
    auto e = cross_check(shell, TestFunction::parse("exp:1"), plan, opts);
    for (auto const& c : e.checks)
        pass &= report_check(os, c);
    auto v = cross_check(shell, TestFunction::parse("pow:2:4pi"), plan, opts);
    for (auto const& c : v.checks)
    {
        if (c.name.find("_equals_volume") != std::string::npos)
            pass &= report_check(os, c);
    }
    return pass;
}

bool curvature_route(std::ostringstream& os)
{
    Body shell = unit_shell();
    HistogramGrid const grid{0, 2, curvature_bins};
    auto dist = estimate_distances(shell, plan, n_curvature_pairs, grid);
    auto cld = signed_cld_from_gamma(dist.gamma, curvature_window);
    auto chords = estimate_chords(shell, plan, n_lines, grid);
    auto cmp = compare_signed_cld(cld, chords.mu_signed, nsigma);
    bool pass = report(os, cmp.fraction() >= curvature_fraction,
                       "bins_within=%zu/%zu (need %.0f%%)", cmp.bins_within, cmp.bins_used,
                       100 * curvature_fraction);
    report(os, true, "gamma'(0)=%.4f+-%.3f ref %.4f", cld.slope0.value, cld.slope0.error,
           -shell.metrics().surface / (4 * shell.metrics().volume));
    return pass;
}

bool nonuniform(std::ostringstream& os)
{
    DensityField shell_field(Solid::sphere({0, 0, 0}, 1),
                             {{Solid::sphere({0, 0, 0}, 1), 1},
                              {Solid::sphere({0, 0, 0}, 0.5), 0}});
    HistogramGrid const grid{0, 2, 128};
    auto mt = estimate_mu_tilde(shell_field, plan, n_optical, grid);
    BatchPlan other = plan;
    other.seed = plan.seed + 1;
    auto ch = estimate_chords(unit_shell(), other, n_optical, grid);
    auto chi = chi_square_two_sample(mt.mu_tilde.charge, ch.mu_one.charge);
    bool pass = report(os, chi.p_value > min_p_value, "mu~ vs mu_O chi2=%.1f dof=%d p=%.3f",
                       chi.statistic, chi.dof, chi.p_value);

    auto dop = dirac_optical(shell_field, TestFunction::parse("exp:1"), plan, n_optical);
    pass &= report_check(os, check_sigma("optical_dirac_lhs-rhs", dop.difference, 0, nsigma));

    DensityField ball(Solid::sphere({0, 0, 0}, 1), {{Solid::sphere({0, 0, 0}, 1), 1}});
    auto bd = dirac_optical(ball, TestFunction::parse("exp:1"), plan, n_optical);
    pass &= report(os, rel(bd.c_tilde.value, pi) <= constant_rel, "C~=%.4f+-%.4f rel_err=%.2e",
                   bd.c_tilde.value, bd.c_tilde.error, rel(bd.c_tilde.value, pi));
    B3Options b3;
    b3.pairs = n_b3_pairs;
    auto r = check_B3(ball, plan, b3);
    pass &= report(os, rel(r.c_dot.value, pi) <= constant_rel, "C.=%.4f+-%.4f rel_err=%.2e",
                   r.c_dot.value, r.c_dot.error, rel(r.c_dot.value, pi));
    return pass;
}

bool paths(std::ostringstream& os)
{
    std::vector<WalkConfig> configs;
    for (double mfp : {0.25, 0.5, 1.0, 2.0, 4.0})
    {
        WalkConfig c;
        c.mean_free_path = mfp;
        configs.push_back(c);
    }
    bool pass = true;
    for (auto const& [name, body] : {std::pair{"sphere", unit_sphere()},
                                     std::pair{"box", unit_cube()}})
    {
        for (auto const& row : mean_path_report(body, configs, plan, n_walks))
        {
            pass &= report(os, row.passed && !row.truncation_flagged, "%s mfp=%g z=%.2f", name,
                           row.mean_free_path, row.z);
        }
        auto k = kink_pair_check(body, plan, n_kinks);
        pass &= report(os, k.passed() && k.instances == n_kinks, "%s kinks=%llu worst=%.1e",
                       name, (unsigned long long)k.instances, k.max_relative_error);
    }
    return pass;
}

//---------------------------------------------------------------------------//
std::string slurp(std::filesystem::path const& p)
{
    std::ifstream in(p, std::ios::binary);
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

int run_cli(std::string const& args)
{
    std::string const cmd = std::string(SIGNEDCHORD_CLI) + " " + args + " >/dev/null 2>&1";
    int const status = std::system(cmd.c_str());
    return WIFEXITED(status) ? WEXITSTATUS(status) : -1;
}

bool reproducibility(std::ostringstream& os)
{
    auto const base = std::filesystem::temp_directory_path() / "signedchord_acceptance_repro";
    std::filesystem::remove_all(base);
    std::string const data = SIGNEDCHORD_DATA_DIR;
    std::vector<std::pair<std::string, std::string>> commands{
        {"identities", "--body " + data + "/shell.json --samples 100000"},
        {"signed-cld", "--body " + data + "/shell.json --samples 200000 --bins 64 --compare"},
        {"walk", "--body " + data + "/box.json --samples 50000 --aux-samples 1000"},
        {"optical", "--field " + data + "/shell_field.json --samples 50000 --aux-samples 200000"},
    };
    bool pass = true;
    for (auto const& [cmd, args] : commands)
    {
        std::vector<std::filesystem::path> dirs;
        for (auto const& [tag, workers] : {std::pair{"a", 1}, std::pair{"b", 1}, std::pair{"c", 3}})
        {
            auto const dir = base / cmd / tag;
            std::filesystem::create_directories(dir);
            int const status = run_cli(cmd + " " + args + " --workers " + std::to_string(workers)
                                       + " -o " + (dir / "report.json").string() + " --csv-dir "
                                       + dir.string());
            if (status != 0)
            {
                pass &= report(os, false, "%s exit=%d", cmd.c_str(), status);
            }
            dirs.push_back(dir);
        }
        std::size_t files = 0;
        bool same = true;
        for (auto const& entry : std::filesystem::directory_iterator(dirs[0]))
        {
            ++files;
            auto const name = entry.path().filename();
            std::string const ref = slurp(entry.path());
            same = same && ref == slurp(dirs[1] / name) && ref == slurp(dirs[2] / name);
        }
        pass &= report(os, same && files > 1, "%s files=%zu identical(runs,workers 1/3)=%s",
                       cmd.c_str(), files, same ? "yes" : "no");
    }
    std::filesystem::remove_all(base);
    return pass;
}

//---------------------------------------------------------------------------//
}  // namespace

int main()
{
    std::vector<Criterion> criteria{
        {1, "sphere_chord_length_distribution", sphere_cld},
        {2, "sphere_fourth_moment", sphere_fourth_moment},
        {3, "exact_per_sample_identities", exact_identities},
        {4, "decomposition_vs_pair_quadrature", oracle_equivalence},
        {5, "shell_identity_suite", shell_suite},
        {6, "radii_normalizations", normalizations},
        {7, "dirac_cross_check", dirac_cross_check},
        {8, "curvature_route", curvature_route},
        {9, "nonuniform_optical", nonuniform},
        {10, "random_walk_mean_path", paths},
        {11, "byte_reproducibility", reproducibility},
    };
    int failures = 0;
    for (auto const& c : criteria)
    {
        std::ostringstream detail;
        auto const start = std::chrono::steady_clock::now();
        bool ok = false;
        try
        {
            ok = c.run(detail);
        }
        catch (std::exception const& e)
        {
            detail << (detail.tellp() > 0 ? "; " : "") << "exception: " << e.what();
        }
        double const secs
            = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d %s (%.1fs): %s\n", ok ? "PASS" : "FAIL", c.number, c.name.c_str(),
                    secs, detail.str().c_str());
        std::fflush(stdout);
        failures += ok ? 0 : 1;
    }
    std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failures,
                criteria.size());
    return failures ? 1 : 0;
}

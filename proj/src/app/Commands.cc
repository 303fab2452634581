//----------------------------------*-C++-*----------------------------------//
// Copyright 2026 signedchord developers.
// SPDX-License-Identifier: Apache-2.0
//---------------------------------------------------------------------------//
//! \file app/Commands.cc
//---------------------------------------------------------------------------//
#include "signedchord/app/Commands.hh"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>

#include "signedchord/Check.hh"
#include "signedchord/Error.hh"
#include "signedchord/dirac/Dirac.hh"
#include "signedchord/estimators/Estimators.hh"
#include "signedchord/nonuniform/Optical.hh"
#include "signedchord/paths/Paths.hh"
#include "signedchord/sampling/Sampling.hh"
#include "signedchord/signedhist/TwoSample.hh"

namespace signedchord
{
namespace
{
using nlohmann::json;

//---------------------------------------------------------------------------//
// FORMATTING
//---------------------------------------------------------------------------//
std::string fmt(double v, char const* spec = "%.9g")
{
    char buf[48];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

json number(double v)
{
    return std::isfinite(v) ? json(v) : json(nullptr);
}

json to_json(Estimate e)
{
    return {{"value", number(e.value)}, {"stderr", number(e.error)}};
}

json to_json(CheckRecord const& c)
{
    json j{{"name", c.name},
           {"value", number(c.value)},
           {"stderr", number(c.error)},
           {"reference", number(c.reference)},
           {"tolerance", number(c.tolerance)},
           {"z", number(c.z)},
           {"pass", c.passed},
           {"advisory", c.advisory}};
    if (!c.note.empty())
        j["note"] = c.note;
    return j;
}

std::string csv(DensityTable const& table, std::uint64_t seed)
{
    std::ostringstream os;
    write_csv(os, table, seed);
    return os.str();
}

std::string gamma_csv(GammaTable const& g, std::uint64_t seed)
{
    std::ostringstream os;
    os << "bin_lo,bin_hi,l,gamma,stderr\n";
    for (std::size_t i = 0; i < g.gamma.size(); ++i)
    {
        os << fmt(g.grid.edge(i)) << ',' << fmt(g.grid.edge(i + 1)) << ','
           << fmt(g.grid.center(i)) << ',' << fmt(g.gamma[i]) << ','
           << fmt(g.error[i]) << '\n';
    }
    os << "# gamma0=" << fmt(g.gamma0) << '\n' << "# seed=" << seed << '\n';
    return os.str();
}

//---------------------------------------------------------------------------//
// SETUP
//---------------------------------------------------------------------------//
BatchPlan plan_for(RunOptions const& o)
{
    BatchPlan plan;
    plan.seed = o.seed;
    plan.streams = o.streams;
    plan.workers = o.workers;
    validate(plan);
    return plan;
}

HistogramGrid grid_for(BoundingSphere const& bounds, RunOptions const& o)
{
    if (o.bins < 8)
        throw Error(ErrorCode::config, "bins must be at least 8");
    HistogramGrid grid{o.range_lo.value_or(0.0),
                       o.range_hi.value_or(2 * bounds.radius),
                       o.bins};
    if (!(grid.lo >= 0) || !(grid.lo < grid.hi))
        throw Error(ErrorCode::config, "bin range must satisfy 0 <= lo < hi");
    return grid;
}

json config_json(std::string const& command, RunOptions const& o, HistogramGrid const& grid)
{
    return {{"command", command},
            {"seed", o.seed},
            {"samples", o.samples},
            {"bins", grid.bins},
            {"range", {grid.lo, grid.hi}},
            {"streams", o.streams}};
}

Body const& need_body(Body const* body, std::string const& command)
{
    if (!body)
        throw Error(ErrorCode::config, command + " needs a body (--body)");
    return *body;
}

//! Collects checks and keeps the overall verdict
struct Checks
{
    std::vector<CheckRecord> records;

    void add(CheckRecord c) { records.push_back(std::move(c)); }
    void add(CheckRecord c, std::string note)
    {
        c.note = std::move(note);
        records.push_back(std::move(c));
    }
    void add_all(std::vector<CheckRecord> const& cs)
    {
        records.insert(records.end(), cs.begin(), cs.end());
    }
    json to_json() const
    {
        json arr = json::array();
        for (auto const& c : records)
            arr.push_back(signedchord::to_json(c));
        return arr;
    }
    bool passed() const { return all_passed(records); }
};

CheckRecord exact(std::string name, double value, double reference, double tol)
{
    return check_sigma(std::move(name), {value, 0}, reference, 0, tol);
}

json metrics_json(BodyMetrics const& m)
{
    return {{"volume", m.volume},
            {"surface", m.surface},
            {"hull_surface", m.hull_surface ? json(*m.hull_surface) : json(nullptr)},
            {"mean_chord_cauchy", m.mean_chord()},
            {"bounding_center",
             {m.bounding_center.x, m.bounding_center.y, m.bounding_center.z}},
            {"bounding_radius", m.bounding_radius}};
}

//---------------------------------------------------------------------------//
// SHARED SECTIONS
//---------------------------------------------------------------------------//
json chord_results(ChordEstimate const& e)
{
    json moments = json::array(), one = json::array();
    for (int k = 0; k <= 4; ++k)
    {
        moments.push_back(to_json(e.mean_signed[k]));
        one.push_back(to_json(e.mean_one[k]));
    }
    return {{"lines_tried", e.lines_tried},
            {"lines_hit", e.lines_hit},
            {"total_charge", e.total_charge},
            {"c_M", to_json(e.c_m)},
            {"signed_moments", moments},
            {"one_chord_moments", one},
            {"mean_multi_chord", to_json(e.mean_multi)},
            {"ratio_first_moment", to_json(e.ratio_first)},
            {"ratio_second_moment", to_json(e.ratio_second)},
            {"surface_crofton", to_json(e.surface_crofton)},
            {"hull_surface_crofton", to_json(e.hull_surface_crofton)},
            {"min_overlap", e.min_overlap},
            {"min_signed_density", e.min_signed_density},
            {"max_square_identity_error", e.max_sq_identity_error}};
}

void chord_tables(ChordEstimate const& e, std::uint64_t seed, RunResult& r)
{
    r.tables.emplace_back("mu_signed", csv(e.mu_signed, seed));
    r.tables.emplace_back("mu_multi", csv(e.mu_multi, seed));
    r.tables.emplace_back("mu_one", csv(e.mu_one, seed));
    r.tables.emplace_back("mu_segments", csv(e.mu_segments, seed));
    r.tables.emplace_back("mu_positive", csv(e.mu_positive, seed));
    r.tables.emplace_back("mu_negative", csv(e.mu_negative, seed));
}

json radii_results(RadiiEstimate const& e)
{
    return {{"rays", e.rays},
            {"integral_signed", e.integral_signed},
            {"integral_positive", to_json(e.integral_positive)},
            {"integral_negative", to_json(e.integral_negative)},
            {"mean_signed", to_json(e.mean_signed)},
            {"mean_one_segment", to_json(e.mean_one)},
            {"min_overlap", e.min_overlap},
            {"max_sum_identity_error", e.max_sum_identity_error}};
}

void radii_checks(RadiiEstimate const& e, Checks& checks, double nsigma)
{
    checks.add(exact("radii_total_charge_per_ray", e.integral_signed, 1.0, 1e-12),
               "signed count of boundary radii is one per ray");
    checks.add(exact("radii_signed_sum_equals_osd", e.max_sum_identity_error, 0, 1e-9),
               "worst relative per-ray deviation");
    checks.add(check_agree("radii_positive_equals_negative",
                           e.integral_positive,
                           e.integral_negative,
                           nsigma));
    double const scale = std::fabs(e.mean_one.value);
    checks.add(exact("radii_first_moment_signed_equals_osd",
                     e.mean_signed.value,
                     e.mean_one.value,
                     1e-12 * std::fmax(scale, 1.0)));
}

json dirac_json(DiracReport const& d)
{
    json est = json::array();
    for (auto const& e : d.estimates)
    {
        est.push_back({{"method", e.method},
                       {"value", number(e.value)},
                       {"stderr", number(e.error)},
                       {"n_samples", e.n_samples}});
    }
    json skipped = json::array();
    for (auto const& s : d.skipped)
        skipped.push_back(s);
    return {{"estimates", est}, {"skipped", skipped}};
}

DiracOptions dirac_options(RunOptions const& o, HistogramGrid const& grid)
{
    DiracOptions d;
    d.methods = o.methods;
    d.samples = o.samples;
    d.grid = grid;
    if (o.ell == "cauchy")
        d.ell = EllMode::cauchy;
    else if (o.ell == "fourth-moment")
        d.ell = EllMode::fourth_moment;
    else
        throw Error(ErrorCode::config, "--ell must be 'cauchy' or 'fourth-moment'");
    return d;
}

//---------------------------------------------------------------------------//
// COMMANDS
//---------------------------------------------------------------------------//
RunResult cmd_describe(Body const& body, RunOptions const& o)
{
    RunResult r;
    HistogramGrid const grid = grid_for(body.bounds(), o);
    r.report = config_json("describe", o, grid);
    json res{{"convex", body.convex()},
             {"bounding_radius", body.bounds().radius},
             {"tolerance", body.tolerance()}};

    RandomSource rng(o.seed, 0);
    Estimate const vmc = estimate_volume_mc(body, rng, o.samples);
    res["volume_mc"] = to_json(vmc);

    Checks checks;
    std::ostringstream text;
    if (body.has_metrics())
    {
        BodyMetrics const m = body.metrics();
        res["metrics"] = metrics_json(m);
        text << "V=" << fmt(m.volume, "%.5f") << '\n'
             << "S=" << fmt(m.surface, "%.5f") << '\n';
        if (m.hull_surface)
            text << "S*=" << fmt(*m.hull_surface, "%.5f") << '\n';
        text << "<l>_Cauchy=" << fmt(m.mean_chord(), "%.5f") << '\n';
        checks.add(check_sigma("volume_mc_matches_metrics", vmc, m.volume, o.nsigma));
    }
    else
    {
        res["metrics"] = nullptr;
        text << "V_mc=" << fmt(vmc.value, "%.5f") << " +- "
             << fmt(vmc.error, "%.5f") << '\n'
             << "metrics unavailable: supply a metrics block\n";
    }
    r.report["results"] = res;
    r.report["checks"] = checks.to_json();
    r.passed = checks.passed();
    r.text = text.str();
    return r;
}

RunResult cmd_sample_chords(Body const& body, RunOptions const& o)
{
    RunResult r;
    HistogramGrid const grid = grid_for(body.bounds(), o);
    auto const est = estimate_chords(body, plan_for(o), o.samples, grid);
    r.report = config_json("sample-chords", o, grid);
    r.report["results"] = chord_results(est);
    Checks checks;
    checks.add(exact("chord_square_sum_identity", est.max_sq_identity_error, 0, 1e-9),
               "worst relative per-chord deviation of sum q l^2 from (sum of segments)^2");
    r.report["checks"] = checks.to_json();
    r.passed = checks.passed();
    chord_tables(est, o.seed, r);
    return r;
}

RunResult cmd_sample_radii(Body const& body, RunOptions const& o)
{
    RunResult r;
    HistogramGrid const grid = grid_for(body.bounds(), o);
    auto const est = estimate_radii(body, plan_for(o), o.samples, grid);
    r.report = config_json("sample-radii", o, grid);
    r.report["results"] = radii_results(est);
    Checks checks;
    radii_checks(est, checks, o.nsigma);
    r.report["checks"] = checks.to_json();
    r.passed = checks.passed();
    r.tables.emplace_back("iota_signed", csv(est.iota_signed, o.seed));
    r.tables.emplace_back("iota_first", csv(est.iota_first, o.seed));
    r.tables.emplace_back("iota_positive", csv(est.iota_positive, o.seed));
    r.tables.emplace_back("iota_negative", csv(est.iota_negative, o.seed));
    r.tables.emplace_back("iota_one", csv(est.iota_one, o.seed));
    return r;
}

RunResult cmd_sample_distances(Body const& body, RunOptions const& o)
{
    RunResult r;
    HistogramGrid const grid = grid_for(body.bounds(), o);
    auto const est = estimate_distances(body, plan_for(o), o.samples, grid);
    r.report = config_json("sample-distances", o, grid);
    Estimate const slope = gamma_slope_at_zero(est.gamma);
    BodyMetrics const m = body.metrics();
    r.report["results"] = {{"mean_distance", to_json(est.mean_distance)},
                           {"gamma0", est.gamma.gamma0},
                           {"gamma_slope_at_zero", to_json(slope)}};
    Checks checks;
    CheckRecord c = check_sigma(
        "gamma_slope_equals_minus_S_over_4V", slope, -m.surface / (4 * m.volume), o.nsigma);
    c.advisory = true;
    checks.add(c, "fit over the first populated bins; noisy for fine grids");
    checks.add(exact("eta_normalization", integral(est.eta), 1.0, 1e-12));
    r.report["checks"] = checks.to_json();
    r.passed = checks.passed();
    r.tables.emplace_back("eta", csv(est.eta, o.seed));
    r.tables.emplace_back("gamma", gamma_csv(est.gamma, o.seed));
    return r;
}

RunResult cmd_signed_cld(Body const& body, RunOptions const& o)
{
    RunResult r;
    HistogramGrid const grid = grid_for(body.bounds(), o);
    BatchPlan const plan = plan_for(o);
    auto const dist = estimate_distances(body, plan, o.samples, grid);
    BodyMetrics const m = body.metrics();
    std::optional<double> slope;
    if (o.slope == "analytic")
        slope = -m.surface / (4 * m.volume);
    else if (o.slope != "fit")
        throw Error(ErrorCode::config, "--slope must be 'fit' or 'analytic'");
    auto const cld = signed_cld_from_gamma(dist.gamma, o.window, slope);

    r.report = config_json("signed-cld", o, grid);
    r.report["results"] = {{"window", o.window},
                           {"slope_source", o.slope},
                           {"gamma_slope_at_zero", to_json(cld.slope0)},
                           {"reference_slope", -m.surface / (4 * m.volume)}};
    Checks checks;
    if (!slope)
    {
        CheckRecord c = check_sigma("gamma_slope_equals_minus_S_over_4V",
                                    cld.slope0,
                                    -m.surface / (4 * m.volume),
                                    o.nsigma);
        c.advisory = true;
        checks.add(c);
    }

    std::ostringstream os;
    os << "bin_lo,bin_hi,l,mu_dot,stderr\n";
    for (std::size_t i = 0; i < cld.values.size(); ++i)
    {
        os << fmt(grid.edge(i)) << ',' << fmt(grid.edge(i + 1)) << ','
           << fmt(grid.center(i)) << ',' << fmt(cld.values[i]) << ','
           << fmt(cld.error[i]) << '\n';
    }
    os << "# window=" << o.window << '\n' << "# seed=" << o.seed << '\n';
    r.tables.emplace_back("mu_dot", os.str());
    r.tables.emplace_back("gamma", gamma_csv(dist.gamma, o.seed));

    if (o.compare)
    {
        auto const chords = estimate_chords(body, plan, o.samples, grid);
        auto const cmp = compare_signed_cld(cld, chords.mu_signed, o.nsigma);
        CheckRecord c = check_sigma(
            "curvature_route_bins_within_tolerance", {cmp.fraction(), 0}, 1.0, 0, 0.05);
        c.note = "fraction of bins where gamma''/|gamma'(0)| matches the "
                 "decomposition density within nsigma plus smoothing bias; "
                 "must be at least 0.95";
        checks.add(c);
        r.report["results"]["comparison"] = {{"bins_used", cmp.bins_used},
                                             {"bins_within", cmp.bins_within}};
        std::ostringstream cs;
        cs << "l,mu_dot,mu_dot_stderr,mu_signed,mu_signed_stderr,bias,tolerance,"
              "within\n";
        for (std::size_t i = 0; i < cld.values.size(); ++i)
        {
            cs << fmt(grid.center(i)) << ',' << fmt(cld.values[i]) << ','
               << fmt(cld.error[i]) << ',' << fmt(chords.mu_signed.density[i])
               << ',' << fmt(chords.mu_signed.error[i]) << ','
               << fmt(cmp.bias[i]) << ',' << fmt(cmp.tolerance[i]) << ','
               << (cmp.within[i] ? 1 : 0) << '\n';
        }
        cs << "# seed=" << o.seed << '\n';
        r.tables.emplace_back("comparison", cs.str());
    }
    r.report["checks"] = checks.to_json();
    r.passed = checks.passed();
    return r;
}

RunResult cmd_dirac(Body const& body, RunOptions const& o)
{
    RunResult r;
    HistogramGrid const grid = grid_for(body.bounds(), o);
    TestFunction const phi = TestFunction::parse(o.phi);
    BatchPlan const plan = plan_for(o);
    DiracOptions const opts = dirac_options(o, grid);
    if (opts.methods == std::vector<std::string>{"pairs"} && !phi.bounded_pair_weight())
    {
        throw Error(ErrorCode::unbounded_weight,
                    "pair route needs a bounded weight phi(x)/(4 pi x^2); '"
                        + phi.to_string() + "' is unbounded at the origin");
    }
    DiracReport const d = cross_check(body, phi, plan, opts);
    r.report = config_json("dirac", o, grid);
    r.report["config"] = {{"phi", phi.to_string()}, {"ell", o.ell}};
    r.report["results"] = dirac_json(d);
    Checks checks;
    checks.add_all(d.checks);
    r.report["checks"] = checks.to_json();
    r.passed = checks.passed();
    return r;
}

RunResult cmd_optical(Body const* body, DensityField const* field, RunOptions const& o)
{
    if (!field)
        throw Error(ErrorCode::config, "optical needs a density field (--field)");
    RunResult r;
    HistogramGrid const grid = grid_for(field->hull().bounds(), o);
    BatchPlan const plan = plan_for(o);
    TestFunction const phi = TestFunction::parse(o.phi);

    auto const mt = estimate_mu_tilde(*field, plan, o.samples, grid);
    auto const g = estimate_G(*field, plan, o.samples);
    auto const dop = dirac_optical(*field, phi, plan, o.samples);

    r.report = config_json("optical", o, grid);
    r.report["config"] = {{"phi", phi.to_string()}};
    json res{{"mu_tilde",
              {{"lines_hit", mt.lines_hit},
               {"lines_tried", mt.lines_tried},
               {"mean", to_json(mt.mean)},
               {"mean_square", to_json(mt.mean_square)}}},
             {"G", to_json(g.value)},
             {"G_normalized", to_json(g.normalized)},
             {"rho_squared_integral", to_json(g.rho_squared_integral)},
             {"dirac_optical",
              {{"lhs", to_json(dop.lhs)},
               {"rhs", to_json(dop.rhs)},
               {"difference", to_json(dop.difference)},
               {"c_tilde", to_json(dop.c_tilde)}}}};
    Checks checks;
    checks.add_all(dop.checks);

    B3Options b3opt;
    if (o.aux_samples)
        b3opt.pairs = o.aux_samples;
    auto const b3 = check_B3(*field, plan, b3opt);
    res["B3"] = {{"degenerate", b3.degenerate},
                 {"mass", to_json(b3.mass)},
                 {"mass_analytic", b3.mass_analytic},
                 {"gamma_slope_at_zero", to_json(b3.slope0)},
                 {"fourth_moment", to_json(b3.fourth_moment)},
                 {"c_dot", to_json(b3.c_dot)}};
    checks.add_all(b3.checks);

    if (body)
    {
        // Compare with the one-chord distribution of a uniform body
        BatchPlan other = plan;
        other.seed = o.seed ^ 0x9e3779b97f4a7c15ULL;
        auto const chords = estimate_chords(*body, other, o.samples, grid);
        auto const test = chi_square_two_sample(mt.mu_tilde.charge, chords.mu_one.charge);
        CheckRecord c;
        c.name = "mu_tilde_matches_body_one_chord";
        c.value = test.p_value;
        c.reference = 0.001;
        c.passed = test.p_value > 0.001;
        c.note = "chi-square two-sample p-value must exceed 0.001 (statistic "
                 + fmt(test.statistic, "%.6g") + ", dof " + std::to_string(test.dof)
                 + ")";
        checks.add(c);
        r.tables.emplace_back("mu_one_body", csv(chords.mu_one, other.seed));
    }
    r.report["results"] = res;
    r.report["checks"] = checks.to_json();
    r.passed = checks.passed();
    r.tables.emplace_back("mu_tilde", csv(mt.mu_tilde, o.seed));
    return r;
}

RunResult cmd_walk(Body const& body, RunOptions const& o)
{
    RunResult r;
    HistogramGrid const grid = grid_for(body.bounds(), o);
    BatchPlan const plan = plan_for(o);
    std::vector<WalkConfig> configs;
    for (double m : o.mfp)
    {
        WalkConfig c;
        c.mean_free_path = m;
        configs.push_back(c);
    }
    auto const rows = mean_path_report(body, configs, plan, o.samples);

    r.report = config_json("walk", o, grid);
    Checks checks;
    json jrows = json::array();
    std::ostringstream os;
    os << "mean_free_path,walks,mean,stderr,reference,z,truncated_fraction,"
          "mean_scatters,pass\n";
    for (auto const& row : rows)
    {
        jrows.push_back({{"mean_free_path", number(row.mean_free_path)},
                         {"walks", row.walks},
                         {"mean", to_json(row.mean)},
                         {"reference", row.reference},
                         {"z", row.z},
                         {"truncated_fraction", row.truncated_fraction},
                         {"mean_scatters", row.mean_scatters},
                         {"truncation_flagged", row.truncation_flagged},
                         {"pass", row.passed}});
        os << fmt(row.mean_free_path) << ',' << row.walks << ','
           << fmt(row.mean.value) << ',' << fmt(row.mean.error) << ','
           << fmt(row.reference) << ',' << fmt(row.z) << ','
           << fmt(row.truncated_fraction) << ',' << fmt(row.mean_scatters)
           << ',' << (row.passed ? 1 : 0) << '\n';
        CheckRecord c = check_sigma("mean_path_mfp_" + fmt(row.mean_free_path, "%g"),
                                    row.mean,
                                    row.reference,
                                    o.nsigma);
        c.passed = c.passed && !row.truncation_flagged;
        c.advisory = row.advisory;
        if (row.advisory)
            c.note = "nonconvex body: reported only";
        checks.add(c);
    }
    os << "# seed=" << o.seed << '\n';
    json res{{"walks", jrows}};

    if (body.convex())
    {
        std::uint64_t const n = o.aux_samples ? o.aux_samples : 10'000;
        auto const k = kink_pair_check(body, plan, n);
        res["kink_pairs"] = {{"instances", k.instances},
                             {"failures", k.failures},
                             {"max_relative_error", k.max_relative_error}};
        checks.add(exact("kink_pair_identity", k.max_relative_error, 0, k.tolerance),
                   "worst relative deviation over all instances");
    }
    r.report["results"] = res;
    r.report["checks"] = checks.to_json();
    r.passed = checks.passed();
    r.tables.emplace_back("walks", os.str());
    return r;
}

RunResult cmd_identities(Body const& body, RunOptions const& o)
{
    RunResult r;
    BodyMetrics const m = body.metrics();
    HistogramGrid const grid = grid_for(body.bounds(), o);
    BatchPlan const plan = plan_for(o);
    double const ns = o.nsigma;
    Checks checks;
    json res;

    // Chords
    auto const ch = estimate_chords(body, plan, o.samples, grid);
    res["chords"] = chord_results(ch);
    checks.add(exact("chord_square_sum_identity", ch.max_sq_identity_error, 0, 1e-9),
               "per-chord sum q l^2 = (sum of segments)^2");
    checks.add(check_sigma("mean_signed_chord_equals_4V_over_S",
                           ch.mean_signed[1],
                           m.mean_chord(),
                           ns));
    checks.add(check_agree("ratio_first_moment_equals_c_M", ch.ratio_first, ch.c_m, ns));
    checks.add(check_agree("ratio_second_moment_equals_c_M", ch.ratio_second, ch.c_m, ns));
    checks.add(check_sigma("ell_fourth_moment_equals_4V_over_S",
                           ell_from_fourth_moment(ch, m.volume),
                           m.mean_chord(),
                           ns));
    checks.add(check_sigma("surface_crofton_equals_S", ch.surface_crofton, m.surface, ns));
    if (m.hull_surface)
    {
        CheckRecord c = check_sigma(
            "c_M_equals_S_over_S_hull", ch.c_m, m.surface / *m.hull_surface, ns);
        if (!body.convex_with_convex_holes())
        {
            c.advisory = true;
            c.note = "body is not a convex body with convex holes";
        }
        checks.add(c);
    }
    res["overlap"] = {{"chord_min_overlap", ch.min_overlap},
                      {"chord_min_signed_density", ch.min_signed_density}};

    // Radii
    auto const ra = estimate_radii(body, plan, o.samples, grid);
    res["radii"] = radii_results(ra);
    radii_checks(ra, checks, ns);
    res["overlap"]["radii_min_overlap"] = ra.min_overlap;

    // Line measures
    if (body.convex())
    {
        auto const rr = check_randomness_relations(body, plan, o.samples, grid);
        res["randomness"] = {{"nu_bins_within", rr.nu_bins_within},
                             {"lambda_bins_within", rr.lambda_bins_within},
                             {"fourth_moment", to_json(rr.fourth_moment)}};
        checks.add_all(rr.checks);
    }

    // Dirac chain for the requested kernel and for 4 pi x^2
    DiracOptions dopts = dirac_options(o, grid);
    json dir = json::object();
    for (std::string const& text : {o.phi, std::string("pow:2:4pi")})
    {
        TestFunction const phi = TestFunction::parse(text);
        DiracReport const d = cross_check(body, phi, plan, dopts);
        dir[phi.to_string()] = dirac_json(d);
        for (CheckRecord c : d.checks)
        {
            c.name = "dirac_" + phi.to_string() + "_" + c.name;
            checks.add(c);
        }
    }
    res["dirac"] = dir;

    r.report = config_json("identities", o, grid);
    r.report["metrics"] = metrics_json(m);
    r.report["results"] = res;
    r.report["checks"] = checks.to_json();
    r.passed = checks.passed();
    r.tables.emplace_back("mu_signed", csv(ch.mu_signed, o.seed));
    r.tables.emplace_back("iota_signed", csv(ra.iota_signed, o.seed));
    return r;
}

//---------------------------------------------------------------------------//
}  // namespace

//---------------------------------------------------------------------------//
std::vector<std::string> const& command_names()
{
    static std::vector<std::string> const names{"describe",
                                                "sample-chords",
                                                "sample-radii",
                                                "sample-distances",
                                                "signed-cld",
                                                "dirac",
                                                "optical",
                                                "walk",
                                                "identities"};
    return names;
}

//---------------------------------------------------------------------------//
RunResult run_command(std::string const& command,
                      Body const* body,
                      DensityField const* field,
                      RunOptions const& options)
{
    if (options.samples == 0)
        throw Error(ErrorCode::config, "--samples must be at least 1");
    RunResult r;
    if (command == "optical")
        r = cmd_optical(body, field, options);
    else if (command == "describe")
        r = cmd_describe(need_body(body, command), options);
    else if (command == "sample-chords")
        r = cmd_sample_chords(need_body(body, command), options);
    else if (command == "sample-radii")
        r = cmd_sample_radii(need_body(body, command), options);
    else if (command == "sample-distances")
        r = cmd_sample_distances(need_body(body, command), options);
    else if (command == "signed-cld")
        r = cmd_signed_cld(need_body(body, command), options);
    else if (command == "dirac")
        r = cmd_dirac(need_body(body, command), options);
    else if (command == "walk")
        r = cmd_walk(need_body(body, command), options);
    else if (command == "identities")
        r = cmd_identities(need_body(body, command), options);
    else
        throw Error(ErrorCode::config, "unknown command '" + command + "'");
    r.report["passed"] = r.passed;
    return r;
}

//---------------------------------------------------------------------------//
std::string dump_report(nlohmann::json const& report)
{
    return report.dump(2) + "\n";
}

//---------------------------------------------------------------------------//
}  // namespace signedchord

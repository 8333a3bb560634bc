// SPDX-License-Identifier: Apache-2.0
//
// cogregions - rate regions of the Gaussian cognitive interference channel
// Copyright (C) 2026 The cogregions Authors
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

// Command-line front end: classify, region, compare, verify, fig3, sweep.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cogregions/cogregions.hpp>

namespace fs = std::filesystem;
using nlohmann::json;
using namespace cogregions;

namespace {

struct RunConfig {
    double a = 0.0;
    double b = 3.0;
    double p1 = 1.0;
    double p2 = 1.0;
    std::string bound = "unifying";
    std::size_t alpha_grid = 1001;
    std::size_t beta_grid = 1001;
    std::string split_grid = "21";
    std::size_t frontier_grid = 2001;
    std::size_t samples = 1000000;
    std::uint64_t seed = 20260101;
    std::string format = "csv";
    std::string out;
    std::optional<double> tol;

    [[nodiscard]] ChannelParams channel() const { return ChannelParams(a, b, p1, p2); }
    [[nodiscard]] Grid1D alphas() const { return Grid1D{alpha_grid}; }
    [[nodiscard]] Grid1D betas() const { return Grid1D{beta_grid}; }
    [[nodiscard]] FrontierGrid fgrid() const { return FrontierGrid{frontier_grid, true}; }
    [[nodiscard]] Format fmt() const { return parse_format(format); }

    [[nodiscard]] SplitGrid splits() const
    {
        std::vector<std::size_t> n;
        std::stringstream ss(split_grid);
        for (std::string tok; std::getline(ss, tok, ',');) {
            try {
                n.push_back(static_cast<std::size_t>(std::stoul(tok)));
            } catch (const std::exception&) {
                throw PreconditionError("--split-grid expects N or N1,N2,N3,N4");
            }
        }
        if (n.size() == 1) return SplitGrid::cube(n[0]);
        if (n.size() == 4) return SplitGrid{n[0], n[1], n[2], n[3]};
        throw PreconditionError("--split-grid expects N or N1,N2,N3,N4");
    }

    void validate() const
    {
        if (alpha_grid < 2 || beta_grid < 2 || frontier_grid < 2) throw PreconditionError("grid resolutions must be >= 2");
        if (samples < 1) throw PreconditionError("sample count must be >= 1");
        splits().validate();
        (void)fmt();
        (void)channel();
    }
};

struct Computed {
    std::string status = "computed";
    std::string description;
    Frontier frontier;                ///< the region, or the outer frontier when open
    std::optional<Frontier> inner;    ///< only for an open capacity region
};

const char* describe(const std::string& bound)
{
    if (bound == "unifying") return "unifying outer bound, raw union over the power split alpha";
    if (bound == "cor2") return "Z-channel degraded-message-set outer bound, raw union over alpha";
    if (bound == "bcdms") return "degraded-message-set broadcast region over Gaussian covariance splits (concave hull)";
    if (bound == "th1") return "degraded-message-set region intersected with the unifying bound";
    if (bound == "bcpr") return "private-rates broadcast region (both DPC orders) intersected with the unifying bound";
    if (bound == "bergmans") return "degraded broadcast channel region, raw union over alpha";
    if (bound == "schemeE") return "superposition coding inner bound, concavified union over beta";
    if (bound == "capacity") return "capacity region where known, else inner and outer frontiers";
    throw PreconditionError("unknown bound '" + bound +
                            "' (expected unifying|cor2|bcdms|th1|bcpr|bergmans|schemeE|capacity)");
}

Computed compute(const std::string& bound, const RunConfig& cfg)
{
    const char* desc = describe(bound);
    const ChannelParams ch = cfg.channel();
    auto done = [&](Frontier f) { return Computed{"computed", desc, std::move(f), std::nullopt}; };
    if (bound == "unifying") return done(unifying_region(ch, cfg.alphas(), cfg.fgrid()));
    if (bound == "cor2") return done(cor2_region(ch, cfg.alphas(), cfg.fgrid()));
    if (bound == "bcdms") return done(bc_dms_region(ch, cfg.splits()));
    if (bound == "th1") return done(th1_bound(ch, cfg.splits(), cfg.alphas(), cfg.fgrid()));
    if (bound == "bcpr") return done(bc_pr_bound(ch, cfg.splits(), cfg.alphas(), cfg.fgrid()));
    if (bound == "bergmans") return done(bergmans_frontier(ch.p1(), ch.b(), cfg.alphas(), cfg.fgrid()));
    if (bound == "schemeE") return done(scheme_e_region(ch, cfg.betas(), cfg.fgrid()));

    CapacityOptions opt{cfg.alphas(), cfg.betas(), cfg.splits(), cfg.fgrid()};
    CapacityResult cap = capacity_region(ch, opt);
    if (cap.status == CapacityStatus::exact)
        return Computed{"exact:" + cap.regime, desc, std::move(*cap.exact), std::nullopt};
    return Computed{"open", desc, std::move(*cap.outer), std::move(cap.inner)};
}

json grids_json(const RunConfig& cfg)
{
    const SplitGrid s = cfg.splits();
    return {{"alpha", cfg.alpha_grid},
            {"beta", cfg.beta_grid},
            {"split", {s.alpha1, s.alpha2, s.rho1, s.rho2}},
            {"frontier", cfg.frontier_grid}};
}

fs::path sibling(const fs::path& out, const std::string& suffix, const std::string& ext)
{
    return out.parent_path() / (out.stem().string() + suffix + ext);
}

void write_file(const fs::path& path, const Frontier& f, Format format)
{
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open " + path.string() + " for writing");
    write_frontier(os, f, format);
}

void write_meta(const fs::path& out, json meta)
{
    std::ofstream os(sibling(out, ".meta", ".json"));
    if (!os) throw std::runtime_error("cannot write metadata next to " + out.string());
    os << meta.dump(2) << '\n';
}

json base_meta(const std::string& bound, const RunConfig& cfg, const Computed& c)
{
    return {{"bound", bound},          {"description", c.description}, {"params", to_json(cfg.channel())},
            {"grids", grids_json(cfg)}, {"status", c.status},           {"format", cfg.format},
            {"points", c.frontier.size()}};
}

int cmd_classify(const RunConfig& cfg)
{
    json j = to_json(classify(cfg.channel()));
    j["params"] = to_json(cfg.channel());
    std::cout << j.dump(2) << '\n';
    return 0;
}

int cmd_region(const RunConfig& cfg)
{
    const Computed c = compute(cfg.bound, cfg);
    const Format format = cfg.fmt();
    if (cfg.out.empty()) {
        if (c.inner && format == Format::json) {
            std::ostringstream o, i;
            write_frontier(o, c.frontier, format);
            write_frontier(i, *c.inner, format);
            std::cout << json{{"status", c.status}, {"outer", json::parse(o.str())}, {"inner", json::parse(i.str())}}.dump()
                      << '\n';
            return 0;
        }
        write_frontier(std::cout, c.frontier, format);
        if (c.inner) std::cerr << "note: capacity is open here; stdout holds the outer frontier, use --out for both\n";
        return 0;
    }
    const fs::path out(cfg.out);
    write_file(out, c.frontier, format);
    json meta = base_meta(cfg.bound, cfg, c);
    if (c.inner) {
        const fs::path inner = sibling(out, "_inner", out.extension().string());
        write_file(inner, *c.inner, format);
        meta["role"] = "outer";
        meta["inner_file"] = inner.filename().string();
        meta["inner_points"] = c.inner->size();
    }
    write_meta(out, meta);
    return 0;
}

const Frontier& pick(const Computed& c, bool as_inner)
{
    return as_inner && c.inner ? *c.inner : c.frontier;
}

int cmd_compare(const RunConfig& cfg, const std::string& inner_sel, const std::string& outer_sel)
{
    const Computed ci = compute(inner_sel, cfg);
    const Computed co = compute(outer_sel, cfg);
    const Frontier& inner = pick(ci, true);
    const Frontier& outer = pick(co, false);
    const double tol = cfg.tol.value_or(1e-9);
    const VerificationReport rep = contains(outer, inner, tol);
    const GapReport gap = frontier_gap(outer, inner);
    json j{{"inner", inner_sel},          {"outer", outer_sel},   {"params", to_json(cfg.channel())},
           {"containment", to_json(rep)}, {"gap", to_json(gap)}};
    std::cout << j.dump(2) << '\n';
    return rep.passed ? 0 : 1;
}

int cmd_verify(const RunConfig& cfg, const std::string& suite)
{
    const ChannelParams ch = cfg.channel();
    const bool all = suite == "all";
    if (!all && suite != "mc" && suite != "degradedness" && suite != "condition5" && suite != "condition6" &&
        suite != "capacity")
        throw PreconditionError("unknown suite '" + suite + "' (expected mc|degradedness|condition5|condition6|capacity|all)");
    const Grid1D fine{cfg.alpha_grid, Spacing::cosine};
    const Grid1D fine_beta{cfg.beta_grid, Spacing::cosine};
    std::vector<VerificationReport> reports;
    if (all || suite == "mc")
        for (auto& r : rate_formula_checks(ch.p1(), ch.p2(), ch.b(), 0.5, 0.5, cfg.samples, cfg.seed))
            reports.push_back(std::move(r));
    if ((all && ch.b() >= 1.0) || suite == "degradedness") {
        reports.push_back(degradedness_check(ch, 0.0, cfg.samples, cfg.seed));
        reports.push_back(degradedness_check(ch, 0.7, cfg.samples, cfg.seed + 1));
    }
    if ((all && ch.b() >= 1.0) || suite == "condition5") {
        reports.push_back(verify_condition5(ch.p1(), ch.p2(), ch.b(), fine, DominanceForm::nominal));
        reports.push_back(verify_condition5(ch.p1(), ch.p2(), ch.b(), fine, DominanceForm::exact));
    }
    if ((all && ch.b() >= 1.0) || suite == "condition6")
        reports.push_back(verify_condition6(ch.p1(), ch.p2(), ch.b(), fine_beta));
    const bool th3 = ch.a() == 0.0 && superposition_capacity_condition(ch.p1(), ch.p2(), ch.b());
    if ((all && th3) || suite == "capacity") {
        if (ch.a() != 0.0) throw PreconditionError("capacity check requires a = 0");
        reports.push_back(verify_th3_capacity(ch.p1(), ch.p2(), ch.b(), cfg.alphas(), cfg.fgrid()));
    }
    bool ok = true;
    for (const auto& r : reports) {
        std::cout << to_json(r).dump() << '\n';
        ok = ok && r.passed;
    }
    return ok ? 0 : 1;
}

int cmd_fig3(RunConfig cfg)
{
    if (cfg.out.empty()) cfg.out = "fig3." + cfg.format;
    const ChannelParams ch = cfg.channel();
    SplitGrid split = cfg.splits();
    split.alpha1 = cfg.beta_grid; // every superposition split is then on the outer grid
    const Frontier outer = th1_bound(ch, split, cfg.alphas(), cfg.fgrid());
    const Frontier inner = scheme_e_region(ch, cfg.betas(), cfg.fgrid());
    const double tol = cfg.tol.value_or(0.1);

    const fs::path out(cfg.out);
    const Format format = cfg.fmt();
    const std::string ext = out.extension().string();
    const fs::path outer_path = sibling(out, "_outer", ext);
    const fs::path inner_path = sibling(out, "_inner", ext);
    write_file(outer_path, outer, format);
    write_file(inner_path, inner, format);

    const VerificationReport dom = contains(outer, inner, 1e-9);
    const GapReport gap = frontier_gap(outer, inner);
    const double r2_floor = std::min(outer.value_at(gap.common_r1_max), inner.value_at(gap.common_r1_max));
    RunConfig grid_cfg = cfg;
    grid_cfg.split_grid = std::to_string(split.alpha1) + "," + std::to_string(split.alpha2) + "," +
                          std::to_string(split.rho1) + "," + std::to_string(split.rho2);
    const json report{{"params", to_json(ch)},
                      {"grids", grids_json(grid_cfg)},
                      {"outer_file", outer_path.filename().string()},
                      {"inner_file", inner_path.filename().string()},
                      {"dominance", to_json(dom)},
                      {"gap", to_json(gap)},
                      {"gap_tolerance", tol},
                      {"gap_within_tolerance", gap.max_gap <= tol},
                      {"min_r2_on_common_range", r2_floor},
                      {"note", "inner frontier is the superposition scheme with receiver 1 treating the primary "
                               "codeword as noise; the tolerance reflects that simpler inner bound"}};
    write_meta(out, report);
    std::cout << report.dump(2) << '\n';
    return dom.passed && gap.max_gap <= tol ? 0 : 1;
}

int cmd_sweep(const RunConfig& cfg, const std::string& param, double from, double to, std::size_t steps)
{
    if (steps < 2) throw PreconditionError("--steps must be >= 2");
    if (param != "a" && param != "b" && param != "p1" && param != "p2")
        throw PreconditionError("--param must be one of a, b, p1, p2");
    std::ofstream file;
    if (!cfg.out.empty()) {
        file.open(cfg.out);
        if (!file) throw std::runtime_error("cannot open " + cfg.out + " for writing");
    }
    std::ostream& os = cfg.out.empty() ? std::cout : file;
    os << "a,b,p1,p2,interference_class,z_channel,pdc_capacity_known,cor2_dominates,cor2_dominates_exact,"
          "th3_capacity,open_regime,thr_primary_decodes,thr_r2_dominance,thr_r2_dominance_exact,thr_superposition\n";
    for (double x : Grid1D{steps}.nodes(from, to)) {
        RunConfig c = cfg;
        (param == "a" ? c.a : param == "b" ? c.b : param == "p1" ? c.p1 : c.p2) = x;
        const ChannelParams ch = c.channel();
        const RegimeReport r = classify(ch);
        auto flag = [](bool v) { return v ? "true" : "false"; };
        os << format_number(ch.a()) << ',' << format_number(ch.b()) << ',' << format_number(ch.p1()) << ','
           << format_number(ch.p2()) << ',' << to_string(r.interference_class) << ',' << to_string(r.z_channel) << ','
           << flag(r.pdc_capacity_known) << ',' << flag(r.cor2_dominates) << ',' << flag(r.cor2_dominates_exact) << ','
           << flag(r.th3_capacity) << ',' << flag(r.open_regime) << ',' << format_number(r.thresholds.primary_decodes)
           << ',' << format_number(r.thresholds.r2_dominance) << ',' << format_number(r.thresholds.r2_dominance_exact)
           << ',' << format_number(r.thresholds.superposition) << '\n';
    }
    return 0;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Rate regions of the Gaussian cognitive interference channel"};
    app.require_subcommand(1);
    app.set_config("--config", "", "TOML/INI file whose keys mirror the flags; flags win");

    RunConfig cfg;
    app.add_option("--a", cfg.a, "cross gain from transmitter 2 to receiver 1");
    app.add_option("--b", cfg.b, "cross gain from transmitter 1 to receiver 2 (>= 0)");
    app.add_option("--p1", cfg.p1, "power of the cognitive transmitter");
    app.add_option("--p2", cfg.p2, "power of the primary transmitter");
    app.add_option("--bound", cfg.bound, "unifying|cor2|bcdms|th1|bcpr|bergmans|schemeE|capacity");
    app.add_option("--alpha-grid", cfg.alpha_grid, "points on the alpha grid");
    app.add_option("--beta-grid", cfg.beta_grid, "points on the beta grid");
    app.add_option("--split-grid", cfg.split_grid, "covariance split grid: N or N1,N2,N3,N4");
    app.add_option("--frontier-grid", cfg.frontier_grid, "uniform r1 samples per frontier");
    app.add_option("--samples", cfg.samples, "Monte Carlo samples");
    app.add_option("--seed", cfg.seed, "master seed");
    app.add_option("--format", cfg.format, "csv|json");
    app.add_option("--out", cfg.out, "output path (stdout if omitted)");
    app.add_option("--tol", cfg.tol, "tolerance in bits");

    auto* classify_cmd = app.add_subcommand("classify", "print the regime report as JSON");
    auto* region_cmd = app.add_subcommand("region", "compute and export one region");
    auto* compare_cmd = app.add_subcommand("compare", "containment and gap between two regions");
    std::string inner_sel = "schemeE", outer_sel = "cor2";
    compare_cmd->add_option("--inner", inner_sel, "selector of the contained region");
    compare_cmd->add_option("--outer", outer_sel, "selector of the containing region");
    auto* verify_cmd = app.add_subcommand("verify", "run verification suites, one JSON line per check");
    std::string suite = "all";
    verify_cmd->add_option("--suite", suite, "mc|degradedness|condition5|condition6|capacity|all");
    auto* fig3_cmd = app.add_subcommand("fig3", "outer and inner frontiers at a=0.01, b=10, p1=p2=5 and their gap");
    auto* sweep_cmd = app.add_subcommand("sweep", "regime flags and thresholds along one parameter");
    std::string param = "b";
    double from = 1.0, to = 15.0;
    std::size_t steps = 57;
    sweep_cmd->add_option("--param", param, "a|b|p1|p2");
    sweep_cmd->add_option("--from", from);
    sweep_cmd->add_option("--to", to);
    sweep_cmd->add_option("--steps", steps);
    for (auto* sub : {classify_cmd, region_cmd, compare_cmd, verify_cmd, fig3_cmd, sweep_cmd}) sub->fallthrough();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e);
    }

    try {
        if (*fig3_cmd) {
            auto explicit_flag = [&](const char* name) { return app.get_option(name)->count() > 0; };
            if (!explicit_flag("--a")) cfg.a = 0.01;
            if (!explicit_flag("--b")) cfg.b = 10.0;
            if (!explicit_flag("--p1")) cfg.p1 = 5.0;
            if (!explicit_flag("--p2")) cfg.p2 = 5.0;
        }
        cfg.validate();
        if (*classify_cmd) return cmd_classify(cfg);
        if (*region_cmd) return cmd_region(cfg);
        if (*compare_cmd) return cmd_compare(cfg, inner_sel, outer_sel);
        if (*verify_cmd) return cmd_verify(cfg, suite);
        if (*fig3_cmd) return cmd_fig3(cfg);
        if (*sweep_cmd) return cmd_sweep(cfg, param, from, to, steps);
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    }
    return 2;
}

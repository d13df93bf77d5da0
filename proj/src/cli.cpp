#include "icrf/cli.hpp"

#include <CLI11.hpp>
#include <cstdio>
#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>

#include "icrf/errors.hpp"
#include "icrf/oracle.hpp"
#include "icrf/scenario_io.hpp"

namespace icrf {

namespace {

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        size_t pos = 0;
        const double v = std::stod(item, &pos);
        if (pos != item.size()) throw ScenarioParseError("bad number '" + item + "'");
        out.push_back(v);
    }
    return out;
}

std::vector<FeedbackConfig> parse_config_list(const std::string& csv) {
    std::vector<FeedbackConfig> out;
    std::stringstream ss(csv);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (!item.empty()) out.push_back(feedback_config_from_string(item));
    }
    return out;
}

void write_file(const std::string& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ScenarioParseError("cannot write '" + path + "'");
    f.write(text.data(), static_cast<std::streamsize>(text.size()));
}

void write_file(const std::string& path, const std::vector<std::uint8_t>& bytes) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ScenarioParseError("cannot write '" + path + "'");
    f.write(reinterpret_cast<const char*>(bytes.data()),
            static_cast<std::streamsize>(bytes.size()));
}

struct GlobalOpts {
    std::uint64_t seed = 0;
    long long samples = 100000;
    double tol = 1e-9;
    bool quiet = false;

    McSettings mc() const { return {samples, seed, 0}; }
    RegimeSettings regime() const { return {tol, mc()}; }
    RegionSettings region() const { return {tol, mc(), regime()}; }
};

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return dispatch(args, out, err);
    } catch (const RegimeMismatchError& e) {
        err << "regime mismatch: " << e.what() << "\n";
        return 3;
    } catch (const ConditionNotMetError& e) {
        err << "condition not met: " << e.what() << "\n";
        return 3;
    } catch (const ScenarioParseError& e) {
        err << "input error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

namespace {

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"capacity regions, regime reports, and relay placement maps for fading "
                 "interference channels with a relay"};
    app.name("icrf");
    app.fallthrough();
    app.require_subcommand(1);

    GlobalOpts g;
    app.add_option("--seed", g.seed, "seed for every Monte Carlo stream");
    app.add_option("--samples", g.samples, "Monte Carlo sample count")->check(CLI::PositiveNumber);
    app.add_option("--tol", g.tol, "margin tolerance for deterministic comparisons");
    app.add_flag("--quiet", g.quiet, "suppress informational output");

    std::string scenario_path, term_name, config_name = "full_to_relay";
    std::string regime_name = "auto", bound_name = "auto", suite;
    std::string csv_path, out_prefix, bbox_csv, configs_csv, kind_name = "vsi";
    std::string model_name = "phase", snr_csv, out_path;
    bool force = false;
    int resolution = 100, n_cov = 100;
    long long n_override = -1;
    double a_exp = 3, b_exp = 3, alpha12 = 1, alpha21 = 1;

    CLI::App* eval = app.add_subcommand("eval", "evaluate one mutual-information term");
    eval->add_option("--scenario", scenario_path, "scenario JSON file")->required();
    eval->add_option("--term", term_name, "term name, e.g. desired_with_relay_1")->required();

    CLI::App* regime = app.add_subcommand("regime", "classify a scenario and report conditions");
    regime->add_option("--scenario", scenario_path)->required();
    regime->add_option("--config", config_name, "feedback configuration tag");

    CLI::App* region = app.add_subcommand("region", "compute a rate region");
    region->add_option("--scenario", scenario_path)->required();
    region->add_option("--config", config_name);
    region->add_option("--regime", regime_name, "vsi|si|auto");
    region->add_option("--bound", bound_name, "inner|outer|auto (tx-feedback configs)");
    region->add_flag("--force", force, "build even when the regime conditions fail");
    region->add_option("--csv", csv_path, "also write the vertices as CSV");

    CLI::App* map = app.add_subcommand("map", "relay placement classification map");
    map->add_option("--scenario", scenario_path, "scenario JSON with a layout")->required();
    map->add_option("--bbox", bbox_csv, "xmin,xmax,ymin,ymax (default: 3x node extent)");
    map->add_option("--res", resolution, "cells per axis")->check(CLI::Range(2, 4096));
    map->add_option("--configs", configs_csv,
                    "comma list of feedback configs (or the scenario's map block)");
    map->add_option("--kind", kind_name, "vsi|si condition family");
    map->add_option("--out", out_prefix, "output prefix for CSV and PGM files")->required();

    CLI::App* verify = app.add_subcommand("verify", "run a Monte Carlo verification suite");
    verify->add_option("--suite", suite, "independence|psd|crosscheck|nesting")->required();
    verify->add_option("--scenario", scenario_path, "scenario for scenario-bound suites");
    verify->add_option("--n", n_override, "draws (or scenarios for nesting)");
    verify->add_option("--model", model_name, "model for the nesting suite");
    verify->add_option("--covariances", n_cov, "sampled covariances (independence suite)");

    CLI::App* asym = app.add_subcommand("asymptote", "high-SNR sum-rate ratio sweep");
    asym->add_option("--a", a_exp, "interference exponent at Rx1");
    asym->add_option("--b", b_exp, "interference exponent at Rx2");
    asym->add_option("--snr", snr_csv, "comma list of SNR values")->required();
    asym->add_option("--alpha12", alpha12);
    asym->add_option("--alpha21", alpha21);
    asym->add_option("--out", out_path, "write the CSV here instead of stdout");

    std::vector<std::string> argv_rev(args.rbegin(), args.rend());
    try {
        app.parse(argv_rev);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return 2;
    }

    if (eval->parsed()) {
        const Scenario s = load_scenario_file(scenario_path);
        const MITerm t = term_from_string(term_name);
        MIEstimate est;
        if (s.model == FadingModel::Phase) {
            try {
                est = phase_mi(t, s.params);
            } catch (const UnsupportedTermError&) {
                est = mc_mi(t, s.model, s.params,
                            InputCovariance::independent(s.params.p1, s.params.p2, s.params.p3),
                            g.mc());
            }
        } else {
            est = rayleigh_mi(t, s.params, g.mc());
        }
        ordered_json j = to_json(est);
        j["term"] = term_name;
        j["model"] = to_string(s.model);
        if (est.method == MIMethod::MonteCarlo) j["seed"] = g.seed;
        out << dump_json_12sig(j);
        return 0;
    }

    if (regime->parsed()) {
        const Scenario s = load_scenario_file(scenario_path);
        const FeedbackConfig config = feedback_config_from_string(config_name);
        const FeedbackConfig base = condition_config(config);
        const Regime r = classify(config, s.model, s.params, g.regime());
        ConditionReport rep;
        if (config == FeedbackConfig::FullToRelayPlusCorrespondingTx) {
            rep = check_txfb(s.params, s.model, g.regime());
        } else if (config == FeedbackConfig::PartialRx1ToRelayPlusTx1) {
            rep = check_txfb_partial(s.params, s.model, g.regime());
        } else if (r == Regime::SINotVSI) {
            rep = check_si(base, s.model, s.params, g.regime());
        } else {
            rep = check_vsi(base, s.model, s.params, g.regime());
        }
        rep.config = config;
        ordered_json j = report_to_json(rep, r);
        for (const auto& e : rep.entries)
            if (e.method == MIMethod::MonteCarlo) {
                j["seed"] = g.seed;
                break;
            }
        out << dump_json_12sig(j);
        return 0;
    }

    if (region->parsed()) {
        const Scenario s = load_scenario_file(scenario_path);
        const FeedbackConfig config = feedback_config_from_string(config_name);
        if (bound_name != "auto" && bound_name != "inner" && bound_name != "outer")
            throw ScenarioParseError("bad --bound '" + bound_name + "'");
        if (bound_name == "outer" && config != FeedbackConfig::FullToRelayPlusCorrespondingTx)
            throw ScenarioParseError(
                "--bound outer applies to the full_plus_corresponding_tx configuration");
        RateRegion r;
        if (bound_name == "outer") {
            r = region_txfb_outer(s.model, s.params, g.region());
        } else {
            Regime target;
            if (regime_name == "auto") {
                target = classify(config, s.model, s.params, g.regime());
                if (target == Regime::Neither)
                    throw RegimeMismatchError(
                        "scenario is neither VSI nor SI; pass --regime with --force to build");
            } else if (regime_name == "vsi") {
                target = Regime::VSI;
            } else if (regime_name == "si") {
                target = Regime::SINotVSI;
            } else {
                throw ScenarioParseError("bad --regime '" + regime_name + "'");
            }
            r = build_region(config, target, s.model, s.params, force, g.region());
        }
        if (!csv_path.empty()) write_file(csv_path, region_vertices_csv(r));
        ordered_json j = region_to_json(r);
        for (const auto& h : r.constraints)
            if (h.cap_std_error > 0) {
                j["meta"]["seed"] = g.seed;
                break;
            }
        out << dump_json_12sig(j);
        return 0;
    }

    if (map->parsed()) {
        const Scenario s = load_scenario_file(scenario_path);
        if (!s.layout)
            throw ScenarioParseError("map needs a scenario with a 'layout' (relay is scanned)");
        // flags override the scenario's embedded map block
        std::vector<FeedbackConfig> configs;
        if (map->count("--configs"))
            configs = parse_config_list(configs_csv);
        else if (s.map)
            configs = s.map->configs;
        if (configs.empty()) throw ScenarioParseError("empty configs list");
        BBox bbox = default_bbox(*s.layout);
        if (s.map && s.map->bbox) bbox = *s.map->bbox;
        if (!bbox_csv.empty()) {
            const std::vector<double> b = parse_double_list(bbox_csv);
            if (b.size() != 4) throw ScenarioParseError("--bbox needs xmin,xmax,ymin,ymax");
            bbox = {b[0], b[1], b[2], b[3]};
        }
        if (!map->count("--res") && s.map && s.map->resolution) resolution = *s.map->resolution;
        RegimeKind kind;
        if (!map->count("--kind") && s.map && s.map->kind) {
            kind = *s.map->kind;
        } else if (kind_name == "vsi") {
            kind = RegimeKind::VSI;
        } else if (kind_name == "si") {
            kind = RegimeKind::SI;
        } else {
            throw ScenarioParseError("bad --kind '" + kind_name + "'");
        }
        PlacementSettings ps;
        ps.regime = g.regime();
        const PlacementGrid grid = scan_placement(*s.layout, s.params.p1, s.params.p2,
                                                  s.params.p3, s.model, configs, kind, bbox,
                                                  resolution, ps);
        write_file(out_prefix + ".csv", export_map_csv(grid));
        for (FeedbackConfig c : configs)
            write_file(out_prefix + "_" + to_string(c) + ".pgm", export_map_pgm(grid, c));
        if (!g.quiet) out << dump_json_12sig(grid_summary_json(grid));
        return 0;
    }

    if (verify->parsed()) {
        OracleReport rep;
        if (suite == "psd") {
            rep = verify_psd_inequality(n_override > 0 ? n_override : 100000, g.seed);
        } else if (suite == "nesting") {
            rep = verify_regime_nesting(fading_model_from_string(model_name),
                                        n_override > 0 ? static_cast<int>(n_override) : 1000,
                                        g.seed);
        } else if (suite == "independence" || suite == "crosscheck") {
            if (scenario_path.empty())
                throw ScenarioParseError("--scenario is required for suite '" + suite + "'");
            const Scenario s = load_scenario_file(scenario_path);
            if (suite == "independence")
                rep = verify_independence_optimal(s.model, s.params, cutset_terms(), n_cov,
                                                  n_override > 0 ? n_override : 10000, g.seed);
            else
                rep = crosscheck_closed_forms(s.model, s.params,
                                              n_override > 0 ? n_override : 100000, g.seed);
        } else {
            throw ScenarioParseError("unknown suite '" + suite + "'");
        }
        out << dump_json_12sig(to_json(rep));
        return rep.pass ? 0 : 1;
    }

    if (asym->parsed()) {
        NetworkParams fixed;
        fixed.a11 = fixed.a13 = fixed.a22 = fixed.a23 = fixed.a31 = fixed.a32 = 1.0;
        if (!scenario_path.empty()) fixed = load_scenario_file(scenario_path).params;
        const std::vector<double> snrs = parse_double_list(snr_csv);
        const std::vector<SweepPoint> pts =
            sumrate_ratio_sweep(alpha12, alpha21, fixed, a_exp, b_exp, snrs, g.mc());
        std::ostringstream csv;
        csv << "snr,c_fb_tx,c_fb,ratio\n";
        char buf[128];
        for (const auto& p : pts) {
            std::snprintf(buf, sizeof buf, "%.12g,%.12g,%.12g,%.12g\n", p.snr, p.c_fb_tx, p.c_fb,
                          p.ratio);
            csv << buf;
        }
        if (out_path.empty())
            out << csv.str();
        else
            write_file(out_path, csv.str());
        return 0;
    }

    err << "no subcommand given\n";
    return 2;
}

}  // namespace

}  // namespace icrf

// Acceptance suite: one line per criterion, nonzero exit on any failure.
// Every tolerance is pinned here, not configurable.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "../common/test_support.hpp"
#include "icrf/exp_integral.hpp"
#include "icrf/oracle.hpp"
#include "icrf/placement.hpp"
#include "icrf/prng.hpp"
#include "icrf/regimes.hpp"
#include "icrf/regions.hpp"

using namespace icrf;
using icrf::test::example_si_params;
using icrf::test::example_txfb_params;
using icrf::test::example_vsi_params;
using icrf::test::oracle_e1_scaled;

namespace {

int failures = 0;

struct Criterion {
    std::string label;
    double limit_seconds;
    std::function<bool(std::string&)> body;
};

void run(const Criterion& c, int index) {
    std::string detail;
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    try {
        ok = c.body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs < c.limit_seconds;
    if (!in_time) detail += (detail.empty() ? "" : "; ") + std::string("over time budget");
    const bool pass = ok && in_time;
    if (!pass) ++failures;
    std::printf("[%d] %-4s %-34s (%.2fs / limit %.0fs)%s%s\n", index, pass ? "PASS" : "FAIL",
                c.label.c_str(), secs, c.limit_seconds, detail.empty() ? "" : " -- ",
                detail.c_str());
    std::fflush(stdout);
}

bool close(double a, double b, double tol) { return std::fabs(a - b) <= tol; }

bool region_corner_criterion(std::string& detail) {
    const NetworkParams vsi = example_vsi_params();
    if (classify(FeedbackConfig::FullToRelay, FadingModel::Phase, vsi) != Regime::VSI) {
        detail = "strong-cross scenario did not classify as VSI";
        return false;
    }
    const RateRegion rect =
        build_region(FeedbackConfig::FullToRelay, Regime::VSI, FadingModel::Phase, vsi);
    if (rect.vertices.size() != 4 || !close(rect.vertices[2][0], 1.7824, 1e-3) ||
        !close(rect.vertices[2][1], 0.7866, 1e-3)) {
        detail = "rectangle corner off";
        return false;
    }

    const NetworkParams si = example_si_params();
    if (classify(FeedbackConfig::FullToRelay, FadingModel::Phase, si) != Regime::SINotVSI) {
        detail = "weaker-cross scenario did not classify as SI-not-VSI";
        return false;
    }
    const RateRegion pent =
        build_region(FeedbackConfig::FullToRelay, Regime::SINotVSI, FadingModel::Phase, si);
    double sum_cap = 1e300;
    for (const auto& h : pent.constraints)
        if (h.w1 == 1 && h.w2 == 1) sum_cap = std::min(sum_cap, h.c);
    if (!close(sum_cap, 2.1808, 1e-3)) {
        detail = "sum cap off: " + std::to_string(sum_cap);
        return false;
    }
    const double expect[5][2] = {{0, 0},
                                 {1.7824, 0},
                                 {1.7824, 0.3984},
                                 {1.3942, 0.7866},
                                 {0, 0.7866}};
    if (pent.vertices.size() != 5) {
        detail = "pentagon vertex count " + std::to_string(pent.vertices.size());
        return false;
    }
    for (int i = 0; i < 5; ++i)
        if (!close(pent.vertices[i][0], expect[i][0], 1e-3) ||
            !close(pent.vertices[i][1], expect[i][1], 1e-3)) {
            detail = "pentagon vertex " + std::to_string(i) + " off";
            return false;
        }
    return true;
}

bool placement_topology_criterion(std::string& detail) {
    const Layout l = Layout::reference();
    const std::vector<FeedbackConfig> configs = {FeedbackConfig::NoFeedback,
                                                 FeedbackConfig::PartialRx1ToRelay,
                                                 FeedbackConfig::FullToRelay};
    const PlacementGrid g = scan_placement(l, 10, 10, 3, FadingModel::Phase, configs,
                                           RegimeKind::VSI, default_bbox(l), 100);
    long nofb = 0, partial = 0, full = 0;
    for (int row = 0; row < 100; ++row)
        for (int col = 0; col < 100; ++col) {
            const bool c0 = g.at(0, row, col) == CellClass::VSI;
            const bool c1 = g.at(1, row, col) == CellClass::VSI;
            const bool c2 = g.at(2, row, col) == CellClass::VSI;
            if ((c0 && !c1) || (c1 && !c2)) {
                detail = "feasibility sets fail to nest";
                return false;
            }
            nofb += c0;
            partial += c1;
            full += c2;
        }
    if (!(nofb < partial && partial < full)) {
        detail = "containments not strict: " + std::to_string(nofb) + "/" +
                 std::to_string(partial) + "/" + std::to_string(full);
        return false;
    }
    // a cell far outside the node cluster
    const NetworkParams far = attenuation_from_geometry(l, {100, 100}, 10, 10, 3);
    if (!check_vsi(FeedbackConfig::FullToRelay, FadingModel::Phase, far).satisfied()) {
        detail = "far-field cell lost full-feedback feasibility";
        return false;
    }
    if (classify(FeedbackConfig::NoFeedback, FadingModel::Phase, far) != Regime::Neither) {
        detail = "far-field cell kept no-feedback feasibility";
        return false;
    }
    detail = "cells " + std::to_string(nofb) + " < " + std::to_string(partial) + " < " +
             std::to_string(full);
    return true;
}

bool independence_criterion(std::string& detail) {
    for (FadingModel m : {FadingModel::Phase, FadingModel::Rayleigh}) {
        const OracleReport r =
            verify_independence_optimal(m, example_si_params(), cutset_terms(), 100, 10000, 11);
        for (const auto& c : r.checks)
            if (c.violations != 0) {
                detail = to_string(m) + " " + c.name + " violated";
                return false;
            }
    }
    return true;
}

bool psd_criterion(std::string& detail) {
    const OracleReport r = verify_psd_inequality(100000, 7);
    for (const auto& c : r.checks)
        if (c.violations != 0) {
            detail = c.name + " violated";
            return false;
        }
    return true;
}

bool crosscheck_criterion(std::string& detail) {
    const OracleReport phase =
        crosscheck_closed_forms(FadingModel::Phase, example_si_params(), 100000, 13);
    if (!phase.pass) {
        detail = "phase closed form disagreed with Monte Carlo";
        return false;
    }
    // single-exponential Rayleigh expectation against the scaled-E1 identity
    NetworkParams unit;
    unit.a12 = 1.0;
    unit.p1 = 1.0;
    unit.p2 = unit.p3 = 1.0;
    const MIEstimate ident = rayleigh_mi(MITerm::source_at_opp_conditioned(1, 2), unit);
    if (!close(ident.value, 0.8604, 2e-4)) {
        detail = "scaled-E1 identity value off";
        return false;
    }
    McSettings mc;
    mc.samples = 100000;
    mc.seed = 13;
    const MIEstimate sampled =
        mc_mi(MITerm::source_at_opp_conditioned(1, 2), FadingModel::Rayleigh, unit,
              InputCovariance::independent(1, 1, 1), mc);
    if (std::fabs(sampled.value - ident.value) > 3 * sampled.std_error) {
        detail = "identity vs Monte Carlo out of band";
        return false;
    }
    const OracleReport ray =
        crosscheck_closed_forms(FadingModel::Rayleigh, example_si_params(), 100000, 13);
    if (!ray.pass) {
        detail = "rayleigh quadrature disagreed with Monte Carlo";
        return false;
    }
    return true;
}

bool e1_criterion(std::string& detail) {
    for (double x : {1e-3, 1e-2, 1e-1, 1.0, 1e1, 1e2, 1e3}) {
        const double ref = oracle_e1_scaled(x);
        if (std::fabs(e1_scaled(x) - ref) > 1e-9 * ref) {
            detail = "scaled value off at x=" + std::to_string(x);
            return false;
        }
        if (x <= 500.0) {
            const double ref_unscaled = std::exp(-x) * ref;
            if (std::fabs(e1(x) - ref_unscaled) > 1e-9 * ref_unscaled) {
                detail = "unscaled value off at x=" + std::to_string(x);
                return false;
            }
        }
    }
    UniformStream u(2026, 0, 7);
    for (int i = 0; i < 10000; ++i) {
        const double x = 1e-6 * std::exp(u.next() * std::log(1e12));
        const double v = e1_scaled(x);
        if (v < 0.5 * std::log1p(2.0 / x) || v > std::log1p(1.0 / x)) {
            detail = "bracketing failed at x=" + std::to_string(x);
            return false;
        }
    }
    return true;
}

bool asymptote_criterion(std::string& detail) {
    NetworkParams fixed;
    fixed.a11 = fixed.a13 = fixed.a22 = fixed.a23 = fixed.a31 = fixed.a32 = 1.0;
    McSettings mc;
    mc.samples = 100000;
    mc.seed = 23;
    const std::vector<double> snrs = {1e2, 1e3, 1e4, 1e5, 1e6};
    const auto pts = sumrate_ratio_sweep(1.0, 1.0, fixed, 3.0, 3.0, snrs, mc);
    const double last = pts.back().ratio;
    if (std::fabs(last - 1.5) > 0.15 * 1.5) {
        detail = "ratio at SNR 1e6 is " + std::to_string(last);
        return false;
    }
    for (size_t i = pts.size() - 2; i < pts.size(); ++i) {
        const double prev = std::fabs(pts[i - 1].ratio - 1.5);
        const double cur = std::fabs(pts[i].ratio - 1.5);
        if (cur > prev) {
            detail = "distance to 1.5 grew at point " + std::to_string(i);
            return false;
        }
    }
    detail = "ratio sequence ends at " + std::to_string(last);
    return true;
}

bool nesting_criterion(std::string& detail) {
    for (FadingModel m : {FadingModel::Phase, FadingModel::Rayleigh}) {
        const OracleReport r = verify_regime_nesting(m, 1000, 29);
        for (const auto& c : r.checks)
            if (c.violations != 0) {
                detail = to_string(m) + " " + c.name + " violated";
                return false;
            }
    }
    return true;
}

bool txfb_bounds_criterion(std::string& detail) {
    const NetworkParams p = example_txfb_params();
    RegionSettings st;
    st.mc.samples = 100000;
    st.mc.seed = 31;
    const RateRegion outer = region_txfb_outer(FadingModel::Phase, p, st);
    const RateRegion inner = region_txfb_inner(FadingModel::Phase, p, /*force=*/true, st);
    for (const auto& v : inner.vertices)
        if (!contains(outer, v[0], v[1], 1e-9)) {
            detail = "outer bound lost an inner vertex";
            return false;
        }
    const double s1 = phase_mi(MITerm::sum_all(1), p).value;
    const double s2 = phase_mi(MITerm::sum_all(2), p).value;
    if (contains(outer, s1, s2, 1e-9)) {
        detail = "outer bound failed to exclude the double-sum point";
        return false;
    }
    if (!close(inner.vertices[1][0], 1.1564, 1e-3) || inner.vertices[1][1] != 0.0) {
        detail = "point B off";
        return false;
    }
    const ConditionReport txfb = check_txfb(p, FadingModel::Phase);
    if (txfb.entries[0].status != EntryStatus::Satisfied ||
        !close(txfb.entries[0].lhs, 1.1564, 1e-3) || !close(txfb.entries[0].rhs, 1.5538, 1e-3)) {
        detail = "point-B condition entry off";
        return false;
    }
    return true;
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"region reproduction (two regimes)", 1, region_corner_criterion},
        {"placement topology 100x100", 30, placement_topology_criterion},
        {"independent-input dominance", 300, independence_criterion},
        {"product-magnitude inequality", 5, psd_criterion},
        {"closed forms vs Monte Carlo", 120, crosscheck_criterion},
        {"exponential-integral quality", 30, e1_criterion},
        {"high-SNR sum-rate ratio sweep", 120, asymptote_criterion},
        {"regime nesting on random scenarios", 300, nesting_criterion},
        {"transmitter-feedback bounds", 60, txfb_bounds_criterion},
    };
    for (size_t i = 0; i < criteria.size(); ++i) run(criteria[i], static_cast<int>(i) + 1);
    if (failures) std::printf("%d criterion(s) FAILED\n", failures);
    else std::printf("all %zu criteria passed\n", criteria.size());
    return failures == 0 ? 0 : 1;
}

#include "icrf/regions.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "icrf/errors.hpp"
#include "icrf/prng.hpp"

namespace icrf {

namespace {

struct Pt {
    double x, y;
};

bool feasible(const std::vector<HalfPlane>& cs, Pt p, double tol) {
    if (p.x < -tol || p.y < -tol) return false;
    for (const auto& h : cs)
        if (h.w1 * p.x + h.w2 * p.y > h.c + tol) return false;
    return true;
}

// Intersection of two boundary lines; lines include the two axes.
bool line_cross(const HalfPlane& a, const HalfPlane& b, Pt& out) {
    const double det = a.w1 * b.w2 - a.w2 * b.w1;
    const double scale = std::max({std::fabs(a.w1), std::fabs(a.w2), std::fabs(b.w1),
                                   std::fabs(b.w2), 1e-30});
    if (std::fabs(det) < 1e-12 * scale * scale) return false;
    out.x = (a.c * b.w2 - a.w2 * b.c) / det;
    out.y = (a.w1 * b.c - a.c * b.w1) / det;
    return true;
}

std::vector<std::array<double, 2>> enumerate_vertices(const std::vector<HalfPlane>& cs,
                                                      double tol) {
    std::vector<HalfPlane> lines = cs;
    lines.push_back({1, 0, 0, 0});  // R1 >= 0 as boundary line R1 = 0
    lines.push_back({0, 1, 0, 0});  // R2 >= 0
    std::vector<Pt> cand;
    for (size_t i = 0; i < lines.size(); ++i)
        for (size_t j = i + 1; j < lines.size(); ++j) {
            Pt p;
            if (line_cross(lines[i], lines[j], p) && feasible(cs, p, 10 * tol))
                cand.push_back({std::max(p.x, 0.0) + 0.0, std::max(p.y, 0.0) + 0.0});
        }
    if (cand.empty()) return {};
    // dedupe
    std::sort(cand.begin(), cand.end(), [](Pt a, Pt b) {
        return a.x < b.x || (a.x == b.x && a.y < b.y);
    });
    std::vector<Pt> uniq;
    for (const Pt& p : cand) {
        if (!uniq.empty() && std::fabs(uniq.back().x - p.x) <= 100 * tol &&
            std::fabs(uniq.back().y - p.y) <= 100 * tol)
            continue;
        uniq.push_back(p);
    }
    // Monotone-chain hull keeps only the extreme points, CCW.
    auto cross = [](Pt o, Pt a, Pt b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<Pt> hull;
    if (uniq.size() <= 2) {
        hull = uniq;
    } else {
        std::vector<Pt> lower, upper;
        for (const Pt& p : uniq) {
            while (lower.size() >= 2 &&
                   cross(lower[lower.size() - 2], lower.back(), p) <= 1e-12)
                lower.pop_back();
            lower.push_back(p);
        }
        for (auto it = uniq.rbegin(); it != uniq.rend(); ++it) {
            while (upper.size() >= 2 &&
                   cross(upper[upper.size() - 2], upper.back(), *it) <= 1e-12)
                upper.pop_back();
            upper.push_back(*it);
        }
        lower.pop_back();
        upper.pop_back();
        hull = lower;
        hull.insert(hull.end(), upper.begin(), upper.end());
    }
    // rotate so the lexicographically smallest point (normally the origin)
    // comes first; CCW order is preserved
    size_t start = 0;
    for (size_t i = 1; i < hull.size(); ++i)
        if (hull[i].x < hull[start].x || (hull[i].x == hull[start].x && hull[i].y < hull[start].y))
            start = i;
    std::vector<std::array<double, 2>> out;
    out.reserve(hull.size());
    for (size_t i = 0; i < hull.size(); ++i) {
        const Pt& p = hull[(start + i) % hull.size()];
        out.push_back({p.x, p.y});
    }
    return out;
}

void check_bounded(const std::vector<HalfPlane>& cs) {
    bool capped1 = false, capped2 = false;
    for (const auto& h : cs) {
        if (h.w1 < 0 || h.w2 < 0) throw std::invalid_argument("half-plane weights must be >= 0");
        if (h.w1 > 0) capped1 = true;
        if (h.w2 > 0) capped2 = true;
    }
    if (!capped1 || !capped2)
        throw std::invalid_argument("rate region is unbounded: both rates need a cap");
}

double cap_slack(const HalfPlane& h, double tol) { return tol + 3 * h.cap_std_error; }

}  // namespace

RateRegion make_region(std::vector<HalfPlane> constraints, RegionMeta meta, double tol) {
    check_bounded(constraints);
    RateRegion r;
    r.constraints = std::move(constraints);
    r.meta = std::move(meta);
    r.vertices = enumerate_vertices(r.constraints, tol);
    return r;
}

RateRegion region_from_points(const std::vector<std::array<double, 2>>& pts, RegionMeta meta,
                              double tol) {
    // Constraints from the upper-right hull edges plus per-axis caps; the
    // origin-adjacent axis edges need no constraint of their own.
    double max1 = 0, max2 = 0;
    for (const auto& p : pts) {
        max1 = std::max(max1, p[0]);
        max2 = std::max(max2, p[1]);
    }
    std::vector<HalfPlane> cs;
    cs.push_back({1, 0, max1, 0});
    cs.push_back({0, 1, max2, 0});
    // hull edges with outward normal in the positive quadrant
    std::vector<Pt> h;
    for (const auto& p : pts) h.push_back({p[0], p[1]});
    std::sort(h.begin(), h.end(),
              [](Pt a, Pt b) { return a.x < b.x || (a.x == b.x && a.y < b.y); });
    auto cross = [](Pt o, Pt a, Pt b) {
        return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
    };
    std::vector<Pt> upper;
    for (auto it = h.rbegin(); it != h.rend(); ++it) {
        while (upper.size() >= 2 && cross(upper[upper.size() - 2], upper.back(), *it) <= 0)
            upper.pop_back();
        upper.push_back(*it);
    }
    for (size_t i = 0; i + 1 < upper.size(); ++i) {
        const Pt a = upper[i], b = upper[i + 1];  // decreasing x along the upper hull
        const double w1 = b.y - a.y;              // outward normal points up-right
        const double w2 = a.x - b.x;
        if (w1 > tol && w2 > tol) cs.push_back({w1, w2, w1 * a.x + w2 * a.y, 0});
    }
    return make_region(std::move(cs), std::move(meta), tol);
}

RateRegion intersect(const RateRegion& a, const RateRegion& b, double tol) {
    std::vector<HalfPlane> cs = a.constraints;
    cs.insert(cs.end(), b.constraints.begin(), b.constraints.end());
    RegionMeta meta = a.meta;
    meta.is_capacity = a.meta.is_capacity && b.meta.is_capacity;
    meta.note = "intersection";
    return make_region(std::move(cs), std::move(meta), tol);
}

bool contains(const RateRegion& r, double r1, double r2, double tol) {
    if (r1 < -tol || r2 < -tol) return false;
    for (const auto& h : r.constraints)
        if (h.w1 * r1 + h.w2 * r2 > h.c + cap_slack(h, tol)) return false;
    return true;
}

namespace {

MIEstimate eval_term(const MITerm& t, FadingModel model, const NetworkParams& p,
                     const RegionSettings& st) {
    if (model == FadingModel::Phase) {
        if (t.kind == MITermKind::SumAtRxPair)
            return mc_mi(t, model, p, InputCovariance::independent(p.p1, p.p2, p.p3), st.mc);
        return phase_mi(t, p);
    }
    return rayleigh_mi(t, p, st.mc);
}

HalfPlane cap1(const MIEstimate& e) { return {1, 0, e.value, e.std_error}; }
HalfPlane cap2(const MIEstimate& e) { return {0, 1, e.value, e.std_error}; }
HalfPlane cap_sum(const MIEstimate& e) { return {1, 1, e.value, e.std_error}; }

MIEstimate min_est(const MIEstimate& a, const MIEstimate& b) {
    return a.value <= b.value ? a : b;
}

RateRegion vsi_rectangle(FeedbackConfig config, FadingModel model, const NetworkParams& p,
                         const RegionSettings& st, bool capacity) {
    const MIEstimate c1 = eval_term(MITerm::desired_with_relay(1), model, p, st);
    const MIEstimate c2 = eval_term(MITerm::desired_with_relay(2), model, p, st);
    RegionMeta meta{config, model, Regime::VSI, capacity, ""};
    return make_region({cap1(c1), cap2(c2)}, meta, st.tol);
}

RateRegion si_pentagon(FeedbackConfig config, FadingModel model, const NetworkParams& p,
                       const RegionSettings& st, bool capacity) {
    const MIEstimate c1 = eval_term(MITerm::desired_with_relay(1), model, p, st);
    const MIEstimate c2 = eval_term(MITerm::desired_with_relay(2), model, p, st);
    const MIEstimate s =
        min_est(eval_term(MITerm::sum_all(1), model, p, st), eval_term(MITerm::sum_all(2), model, p, st));
    RegionMeta meta{config, model, Regime::SINotVSI, capacity, ""};
    return make_region({cap1(c1), cap2(c2), cap_sum(s)}, meta, st.tol);
}

// Time-sharing polygon between corner A = (a1, a2) and an axis sum point:
// (b1, 0) when on the R1 axis, (0, b2) otherwise.
RateRegion timeshare_region(double a1, double a2, double b, bool on_r1_axis, RegionMeta meta,
                            double tol) {
    std::vector<std::array<double, 2>> pts = {{0, 0}, {a1, a2}};
    if (on_r1_axis) {
        pts.push_back({b, 0});
        pts.push_back({0, a2});
    } else {
        pts.push_back({0, b});
        pts.push_back({a1, 0});
    }
    return region_from_points(pts, std::move(meta), tol);
}

}  // namespace

RateRegion region_txfb_inner(FadingModel model, const NetworkParams& p, bool force,
                             const RegionSettings& st) {
    if (!force && !check_txfb(p, model, st.regime).satisfied())
        throw ConditionNotMetError(
            "transmitter-feedback inner region requires the point-B and VSI conditions");
    const double a1 = eval_term(MITerm::desired_with_relay(1), model, p, st).value;
    const double a2 = eval_term(MITerm::desired_with_relay(2), model, p, st).value;
    const double b1 = eval_term(MITerm::sum_all(1), model, p, st).value;
    RegionMeta meta{FeedbackConfig::FullToRelayPlusCorrespondingTx, model, Regime::VSI, false,
                    "inner_bound"};
    return timeshare_region(a1, a2, b1, true, meta, st.tol);
}

RateRegion region_txfb_outer(FadingModel model, const NetworkParams& p,
                             const RegionSettings& st) {
    const InputCovariance cov = InputCovariance::independent(p.p1, p.p2, p.p3);
    const MIEstimate m1 = eval_term(MITerm::source_to_all(1), model, p, st);
    const MIEstimate m2 = eval_term(MITerm::source_to_all(2), model, p, st);
    const MIEstimate ms = eval_term(MITerm::joint_to_all(), model, p, st);
    // joint-receiver-pair caps have no closed form; Monte Carlo only
    const MIEstimate o1 = mc_mi(SubsetSpec{{0, 2}, {1}, {0, 1}}, model, p, cov, st.mc);
    const MIEstimate o2 = mc_mi(SubsetSpec{{1, 2}, {0}, {0, 1}}, model, p, cov, st.mc);
    const MIEstimate os = mc_mi(MITerm::sum_at_rx_pair(), model, p, cov, st.mc);
    RegionMeta meta{FeedbackConfig::FullToRelayPlusCorrespondingTx, model, Regime::VSI, false,
                    "outer_bound"};
    return make_region({cap1(m1), cap2(m2), cap_sum(ms), cap1(o1), cap2(o2), cap_sum(os)}, meta,
                       st.tol);
}

RateRegion build_region(FeedbackConfig config, Regime regime, FadingModel model,
                        const NetworkParams& p, bool force, const RegionSettings& st) {
    p.validate();
    if (regime == Regime::Neither)
        throw std::invalid_argument("no rate region is defined for the 'neither' regime");
    if (!force) {
        const Regime actual = classify(config, model, p, st.regime);
        if (actual != regime)
            throw RegimeMismatchError("scenario classifies as " + to_string(actual) + ", not " +
                                      to_string(regime) + " (pass force to build anyway)");
    }
    const bool capacity = !force;

    switch (config) {
        case FeedbackConfig::NoFeedback:
        case FeedbackConfig::FullToRelay:
        case FeedbackConfig::PartialRx1ToRelay:
            return regime == Regime::VSI ? vsi_rectangle(config, model, p, st, capacity)
                                         : si_pentagon(config, model, p, st, capacity);
        case FeedbackConfig::FullToRelayPlusOppositeTx: {
            // opposite-transmitter links provably add nothing in VSI; in SI
            // the relay-feedback region is achievable but not a converse
            if (regime == Regime::VSI) return vsi_rectangle(config, model, p, st, capacity);
            RateRegion r = si_pentagon(config, model, p, st, false);
            r.meta.note = "inner_bound";
            return r;
        }
        case FeedbackConfig::FullToRelayPlusCorrespondingTx: {
            if (regime == Regime::VSI) return region_txfb_inner(model, p, force, st);
            // SI: time share the pentagon with the point-B rate pair
            if (!force) {
                const ConditionReport r = check_txfb(p, model, st.regime);
                if (r.entries.empty() || r.entries[0].status != EntryStatus::Satisfied)
                    throw ConditionNotMetError(
                        "point-B condition fails; pass force to time-share anyway");
            }
            RateRegion pent = si_pentagon(config, model, p, st, false);
            const double b1 = eval_term(MITerm::sum_all(1), model, p, st).value;
            std::vector<std::array<double, 2>> pts = pent.vertices;
            pts.push_back({b1, 0});
            RegionMeta meta{config, model, regime, false, "inner_bound"};
            return region_from_points(pts, meta, st.tol);
        }
        case FeedbackConfig::PartialRx1ToRelayPlusTx1: {
            // Mirror construction: Tx1 relays the pair-2 message, so the
            // time-share point sits on the R2 axis at the Rx2 sum rate.
            if (regime != Regime::VSI) {
                // no enlargement is claimed in the strong-only regime;
                // fall back to the partial-feedback region
                RateRegion r = si_pentagon(config, model, p, st, false);
                r.meta.note = "inner_bound";
                return r;
            }
            if (!force && !check_txfb_partial(p, model, st.regime).satisfied())
                throw ConditionNotMetError(
                    "partial transmitter-link conditions fail; pass force to build anyway");
            const double a1 = eval_term(MITerm::desired_with_relay(1), model, p, st).value;
            const double a2 = eval_term(MITerm::desired_with_relay(2), model, p, st).value;
            const double b2 = eval_term(MITerm::sum_all(2), model, p, st).value;
            RegionMeta meta{config, model, regime, false, "inner_bound"};
            return timeshare_region(a1, a2, b2, false, meta, st.tol);
        }
    }
    throw std::invalid_argument("bad FeedbackConfig");
}

std::string to_string(ComponentChannel c) {
    switch (c) {
        case ComponentChannel::Emarc1: return "emarc1";
        case ComponentChannel::Emarc2: return "emarc2";
        case ComponentChannel::Marcf: return "marcf";
        case ComponentChannel::Pemarc: return "pemarc";
    }
    return "?";
}

RateRegion region_emarc(ComponentChannel which, FadingModel model, const NetworkParams& p,
                        const RegionSettings& st) {
    p.validate();
    const bool full_fb = which == ComponentChannel::Emarc1 || which == ComponentChannel::Emarc2;
    const int m = (which == ComponentChannel::Emarc1 || which == ComponentChannel::Marcf) ? 1 : 2;
    auto relay_cut_single = [&](int k) {
        return full_fb ? eval_term(MITerm::source_to_all(k), model, p, st)
                       : eval_term(MITerm::source_to_rx1_relay(k), model, p, st);
    };
    const MIEstimate relay_sum = full_fb ? eval_term(MITerm::joint_to_all(), model, p, st)
                                         : eval_term(MITerm::joint_to_rx1_relay(), model, p, st);
    auto dest_single = [&](int k) {
        return k == m ? eval_term(MITerm::desired_with_relay(k), model, p, st)
                      : eval_term(MITerm::cross_with_relay(k, m), model, p, st);
    };
    const HalfPlane r1 = cap1(min_est(relay_cut_single(1), dest_single(1)));
    const HalfPlane r2 = cap2(min_est(relay_cut_single(2), dest_single(2)));
    const HalfPlane rs = cap_sum(min_est(relay_sum, eval_term(MITerm::sum_all(m), model, p, st)));
    RegionMeta meta{full_fb ? FeedbackConfig::FullToRelay : FeedbackConfig::PartialRx1ToRelay,
                    model, Regime::SINotVSI, true, to_string(which)};
    return make_region({r1, r2, rs}, meta, st.tol);
}

std::vector<SweepPoint> sumrate_ratio_sweep(double alpha12, double alpha21,
                                            const NetworkParams& fixed, double a_exp,
                                            double b_exp, const std::vector<double>& snr_list,
                                            const McSettings& mc) {
    if (!(b_exp >= a_exp && a_exp > 2))
        throw std::invalid_argument("sweep requires interference exponents b >= a > 2");
    for (size_t i = 0; i < snr_list.size(); ++i)
        if (!(snr_list[i] > 0) || (i > 0 && snr_list[i] <= snr_list[i - 1]))
            throw std::invalid_argument("snr_list must be positive and increasing");

    std::vector<SweepPoint> out;
    for (size_t i = 0; i < snr_list.size(); ++i) {
        const double snr = snr_list[i];
        NetworkParams p = fixed;
        p.p1 = p.p2 = p.p3 = snr;
        p.a12 = alpha12 * std::pow(snr, (b_exp - 1) / 2);
        p.a21 = alpha21 * std::pow(snr, (a_exp - 1) / 2);
        McSettings point_mc = mc;
        const PhiloxBlock blk = philox4x32(mc.seed, i, /*stream=*/9, 0);
        point_mc.seed = (static_cast<std::uint64_t>(blk.v[0]) << 32) | blk.v[1];
        SweepPoint sp;
        sp.snr = snr;
        sp.c_fb_tx = rayleigh_mi(MITerm::sum_all(1), p, point_mc).value;
        sp.c_fb = rayleigh_mi(MITerm::desired_with_relay(1), p).value +
                  rayleigh_mi(MITerm::desired_with_relay(2), p).value;
        sp.ratio = sp.c_fb > 0 ? sp.c_fb_tx / sp.c_fb : 0;
        out.push_back(sp);
    }
    return out;
}

}  // namespace icrf

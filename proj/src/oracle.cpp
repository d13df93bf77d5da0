#include "icrf/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "icrf/errors.hpp"
#include "icrf/prng.hpp"
#include "icrf/regimes.hpp"
#include "icrf/regions.hpp"

namespace icrf {

namespace {

constexpr std::uint32_t kStreamCovariance = 2;
constexpr std::uint32_t kStreamPsd = 3;
constexpr std::uint32_t kStreamScenario = 4;
constexpr double kTwoPi = 6.283185307179586476925286766559;

cplx std_complex_normal(UniformStream& u) {
    const double r = std::sqrt(-std::log1p(-u.next()));
    const double theta = kTwoPi * u.next();
    return cplx(r * std::cos(theta), r * std::sin(theta));
}

// Random Hermitian psd covariance with diagonal exactly (p1, p2, p3).
InputCovariance random_covariance(double p1, double p2, double p3, std::uint64_t seed,
                                  std::uint64_t index) {
    UniformStream u(seed, index, kStreamCovariance);
    Eigen::Matrix3cd g;
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) g(r, c) = std_complex_normal(u);
    Eigen::Matrix3cd m = g * g.adjoint();
    const double p[3] = {p1, p2, p3};
    Eigen::Vector3d s;
    for (int i = 0; i < 3; ++i) {
        const double d = m(i, i).real();
        s(i) = d > 0 ? std::sqrt(p[i] / d) : 0.0;
    }
    for (int r = 0; r < 3; ++r)
        for (int c = 0; c < 3; ++c) m(r, c) *= s(r) * s(c);
    for (int i = 0; i < 3; ++i) m(i, i) = p[i];
    return InputCovariance(m);
}

struct DiffStat {
    double mean = 0;
    double se = 0;
};

// Paired mean of eval(diag) - eval(cov) over common channel draws.
DiffStat paired_difference(FadingModel model, const NetworkParams& params,
                           const PreparedCondMI& diag, const PreparedCondMI& corr,
                           long long n, std::uint64_t seed) {
    double sum = 0, sumsq = 0;
    for (long long i = 0; i < n; ++i) {
        const ChannelDraw d = sample_channel(model, params, seed, static_cast<std::uint64_t>(i));
        const double diff = eval_cond_mi(d, diag) - eval_cond_mi(d, corr);
        sum += diff;
        sumsq += diff * diff;
    }
    DiffStat s;
    s.mean = sum / n;
    const double var = n > 1 ? std::max(0.0, (sumsq - n * s.mean * s.mean) / (n - 1)) : 0.0;
    s.se = std::sqrt(var / n);
    return s;
}

}  // namespace

std::vector<MITerm> cutset_terms() {
    return {MITerm::source_to_all(1), MITerm::desired_with_relay(1), MITerm::source_to_all(2),
            MITerm::desired_with_relay(2), MITerm::joint_to_all()};
}

OracleReport verify_independence_optimal(FadingModel model, const NetworkParams& params,
                                         const std::vector<MITerm>& terms, int n_cov,
                                         long long n_draws, std::uint64_t seed) {
    params.validate();
    if (n_cov < 20) throw std::invalid_argument("n_cov must be >= 20");
    if (n_draws < 10000) throw std::invalid_argument("n_draws must be >= 10^4");
    const std::vector<MITerm> use = terms.empty() ? cutset_terms() : terms;
    const InputCovariance diag_cov =
        InputCovariance::independent(params.p1, params.p2, params.p3);

    OracleReport rep;
    rep.suite = "independence";
    rep.seed = seed;
    for (const MITerm& t : use) {
        const SubsetSpec spec = subset_for_term(t);
        const PreparedCondMI diag = prepare_cond_mi(diag_cov, spec);
        CheckOutcome out;
        out.name = to_string(t);
        out.n_checked = n_cov;
        out.worst_margin = std::numeric_limits<double>::infinity();
        for (int c = 0; c < n_cov; ++c) {
            const InputCovariance cov =
                random_covariance(params.p1, params.p2, params.p3, seed, c);
            const PreparedCondMI corr = prepare_cond_mi(cov, spec);
            DiffStat s = paired_difference(model, params, diag, corr, n_draws, seed);
            if (s.mean < 0 && std::fabs(s.mean) <= 3 * s.se) {
                // near the band: one escalation before giving a verdict
                s = paired_difference(model, params, diag, corr, 10 * n_draws, seed);
            }
            out.worst_margin = std::min(out.worst_margin, s.mean);
            if (s.mean < -3 * s.se)
                ++out.violations;
            else if (s.mean < 0)
                ++out.indeterminate;
        }
        out.pass = out.violations == 0;
        rep.checks.push_back(out);
    }
    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckOutcome& c) { return c.pass; });
    return rep;
}

OracleReport verify_psd_inequality(long long n_draws, std::uint64_t seed) {
    if (n_draws < 10000) throw std::invalid_argument("n_draws must be >= 10^4");
    OracleReport rep;
    rep.suite = "psd";
    rep.seed = seed;
    CheckOutcome outs[3];
    for (int v = 0; v < 3; ++v) {
        outs[v].name = "product_magnitude_v" + std::to_string(v + 1);
        outs[v].n_checked = n_draws;
        outs[v].worst_margin = std::numeric_limits<double>::infinity();
    }
    for (long long i = 0; i < n_draws; ++i) {
        UniformStream u(seed, static_cast<std::uint64_t>(i), kStreamPsd);
        const cplx h11 = std_complex_normal(u), h12 = std_complex_normal(u);
        const cplx h13 = std_complex_normal(u), h21 = std_complex_normal(u);
        const cplx h22 = std_complex_normal(u), h23 = std_complex_normal(u);
        const cplx ab[3][2] = {{h11 * h22, h12 * h21}, {h12 * h23, h13 * h22},
                               {h13 * h21, h11 * h23}};
        for (int v = 0; v < 3; ++v) {
            const double a2 = std::norm(ab[v][0]);
            const double b2 = std::norm(ab[v][1]);
            const double diff = a2 + b2 - 2 * (ab[v][0] * std::conj(ab[v][1])).real();
            const double slack = 1e-12 * std::max(a2 + b2, 1.0);
            outs[v].worst_margin = std::min(outs[v].worst_margin, diff);
            if (diff < -slack) ++outs[v].violations;
        }
    }
    for (int v = 0; v < 3; ++v) {
        outs[v].pass = outs[v].violations == 0;
        rep.checks.push_back(outs[v]);
    }
    rep.pass = rep.checks[0].pass && rep.checks[1].pass && rep.checks[2].pass;
    return rep;
}

OracleReport crosscheck_closed_forms(FadingModel model, const NetworkParams& params,
                                     long long n_draws, std::uint64_t seed) {
    params.validate();
    if (n_draws < 100000) throw std::invalid_argument("n_draws must be >= 10^5");
    const InputCovariance cov = InputCovariance::independent(params.p1, params.p2, params.p3);
    OracleReport rep;
    rep.suite = "crosscheck";
    rep.seed = seed;
    McSettings mc;
    mc.samples = n_draws;
    mc.seed = seed;
    for (const MITerm& t : all_terms()) {
        MIEstimate det_est;
        if (model == FadingModel::Phase) {
            if (t.kind == MITermKind::SumAtRxPair) continue;  // Monte Carlo only
            det_est = phase_mi(t, params);
        } else {
            det_est = rayleigh_mi(t, params, mc);
            if (det_est.method == MIMethod::MonteCarlo) continue;
        }
        const MIEstimate mc_est = mc_mi(t, model, params, cov, mc);
        CheckOutcome out;
        out.name = to_string(t);
        out.n_checked = 1;
        // floor keeps zero-variance phase terms from tripping on rounding
        out.worst_margin = 3 * mc_est.std_error + 1e-9 - std::fabs(det_est.value - mc_est.value);
        if (out.worst_margin < 0) ++out.violations;
        out.pass = out.violations == 0;
        rep.checks.push_back(out);
    }
    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckOutcome& c) { return c.pass; });
    return rep;
}

namespace {

NetworkParams random_scenario(std::uint64_t seed, std::uint64_t index) {
    UniformStream u(seed, index, kStreamScenario);
    auto log_uniform = [&](double lo, double hi) {
        return lo * std::exp(u.next() * std::log(hi / lo));
    };
    NetworkParams p;
    p.a11 = log_uniform(1e-2, 2);
    p.a12 = log_uniform(1e-2, 2);
    p.a13 = log_uniform(1e-2, 2);
    p.a21 = log_uniform(1e-2, 2);
    p.a22 = log_uniform(1e-2, 2);
    p.a23 = log_uniform(1e-2, 2);
    p.a31 = log_uniform(1e-2, 2);
    p.a32 = log_uniform(1e-2, 2);
    p.p1 = log_uniform(0.1, 100);
    p.p2 = log_uniform(0.1, 100);
    p.p3 = log_uniform(0.1, 100);
    return p;
}

}  // namespace

OracleReport verify_regime_nesting(FadingModel model, int n_scenarios, std::uint64_t seed) {
    if (n_scenarios < 100) throw std::invalid_argument("n_scenarios must be >= 100");
    OracleReport rep;
    rep.suite = "nesting";
    rep.seed = seed;
    CheckOutcome vsi_si, part_full, nofb_full, region_nest;
    vsi_si.name = "vsi_implies_si";
    part_full.name = "partial_vsi_implies_full_vsi";
    nofb_full.name = "nofb_vsi_implies_full_vsi";
    region_nest.name = "si_region_within_vsi_rectangle";
    for (CheckOutcome* c : {&vsi_si, &part_full, &nofb_full, &region_nest})
        c->worst_margin = std::numeric_limits<double>::infinity();

    RegimeSettings st;
    // kept small: region caps only guard the polygon algebra here
    RegionSettings region_st;
    region_st.mc.samples = 4000;
    region_st.mc.seed = seed;
    const int region_checks = model == FadingModel::Phase ? n_scenarios : 50;

    auto implication = [](CheckOutcome& out, const ConditionReport& a, const ConditionReport& b) {
        ++out.n_checked;
        if (!a.satisfied()) return;
        double min_margin = std::numeric_limits<double>::infinity();
        for (const auto& e : b.entries) min_margin = std::min(min_margin, e.margin());
        out.worst_margin = std::min(out.worst_margin, min_margin);
        if (b.overall == EntryStatus::Unsatisfied)
            ++out.violations;
        else if (b.overall == EntryStatus::Indeterminate)
            ++out.indeterminate;
    };

    for (int i = 0; i < n_scenarios; ++i) {
        const NetworkParams p = random_scenario(seed, i);
        const ConditionReport full_vsi = check_vsi(FeedbackConfig::FullToRelay, model, p, st);
        const ConditionReport full_si = check_si(FeedbackConfig::FullToRelay, model, p, st);
        const ConditionReport part_vsi =
            check_vsi(FeedbackConfig::PartialRx1ToRelay, model, p, st);
        const ConditionReport nofb_vsi = check_vsi(FeedbackConfig::NoFeedback, model, p, st);
        implication(vsi_si, full_vsi, full_si);
        implication(part_full, part_vsi, full_vsi);
        implication(nofb_full, nofb_vsi, full_vsi);

        if (i < region_checks) {
            ++region_nest.n_checked;
            const RateRegion rect = build_region(FeedbackConfig::FullToRelay, Regime::VSI, model,
                                                 p, /*force=*/true, region_st);
            const RateRegion pent = build_region(FeedbackConfig::FullToRelay, Regime::SINotVSI,
                                                 model, p, /*force=*/true, region_st);
            for (const auto& v : pent.vertices) {
                if (!contains(rect, v[0], v[1], 1e-9)) ++region_nest.violations;
                for (const auto& h : rect.constraints)
                    region_nest.worst_margin = std::min(
                        region_nest.worst_margin, h.c - (h.w1 * v[0] + h.w2 * v[1]));
            }
        }
    }
    for (CheckOutcome* c : {&vsi_si, &part_full, &nofb_full, &region_nest}) {
        c->pass = c->violations == 0;
        rep.checks.push_back(*c);
    }
    rep.pass = std::all_of(rep.checks.begin(), rep.checks.end(),
                           [](const CheckOutcome& c) { return c.pass; });
    return rep;
}

}  // namespace icrf

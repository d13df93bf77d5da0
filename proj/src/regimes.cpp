#include "icrf/regimes.hpp"

#include <cmath>

#include "icrf/errors.hpp"
#include "icrf/exp_integral.hpp"

namespace icrf {

std::string to_string(Regime r) {
    switch (r) {
        case Regime::VSI: return "vsi";
        case Regime::SINotVSI: return "si_not_vsi";
        case Regime::Neither: return "neither";
    }
    return "?";
}

std::string to_string(EntryStatus s) {
    switch (s) {
        case EntryStatus::Satisfied: return "satisfied";
        case EntryStatus::Unsatisfied: return "unsatisfied";
        case EntryStatus::Indeterminate: return "indeterminate";
    }
    return "?";
}

EntryStatus entry_status(double margin, double std_error, double tol) {
    if (std_error > 0) {
        if (margin > 3 * std_error) return EntryStatus::Satisfied;
        if (margin < -3 * std_error) return EntryStatus::Unsatisfied;
        return EntryStatus::Indeterminate;
    }
    return margin >= -tol ? EntryStatus::Satisfied : EntryStatus::Unsatisfied;
}

namespace {

struct Snr {
    // s(l,k) = a_lk^2 P_l
    double v[3][3];
    double s(int l, int k) const { return v[l - 1][k - 1]; }
};

Snr snr_table(const NetworkParams& p) {
    Snr t{};
    t.v[0][0] = p.a11 * p.a11 * p.p1;
    t.v[0][1] = p.a12 * p.a12 * p.p1;
    t.v[0][2] = p.a13 * p.a13 * p.p1;
    t.v[1][0] = p.a21 * p.a21 * p.p2;
    t.v[1][1] = p.a22 * p.a22 * p.p2;
    t.v[1][2] = p.a23 * p.a23 * p.p2;
    t.v[2][0] = p.a31 * p.a31 * p.p3;
    t.v[2][1] = p.a32 * p.a32 * p.p3;
    t.v[2][2] = 0;
    return t;
}

// c / (e^{1/c} E1(1/c)): the effective interference SNR floor of the
// Rayleigh conditions. Tends to 1 from above as c -> 0.
double snr_over_e1(double c) {
    if (c < 1e-250) return 1.0 + c;
    return c / e1_scaled(1.0 / c);
}

ConditionEntry det_entry(std::string name, double lhs, double rhs, MIMethod method, double tol) {
    ConditionEntry e;
    e.name = std::move(name);
    e.lhs = lhs;
    e.rhs = rhs;
    e.method = method;
    e.status = entry_status(e.margin(), 0.0, tol);
    return e;
}

ConditionEntry est_entry(std::string name, const MIEstimate& lhs, const MIEstimate& rhs,
                         double tol) {
    ConditionEntry e;
    e.name = std::move(name);
    e.lhs = lhs.value;
    e.rhs = rhs.value;
    e.std_error = std::sqrt(lhs.std_error * lhs.std_error + rhs.std_error * rhs.std_error);
    e.method = (lhs.method == MIMethod::MonteCarlo || rhs.method == MIMethod::MonteCarlo)
                   ? MIMethod::MonteCarlo
                   : MIMethod::Quadrature;
    e.status = entry_status(e.margin(), e.std_error, tol);
    return e;
}

EntryStatus combine(const std::vector<ConditionEntry>& entries) {
    EntryStatus overall = EntryStatus::Satisfied;
    for (const auto& e : entries) {
        if (e.status == EntryStatus::Unsatisfied) return EntryStatus::Unsatisfied;
        if (e.status == EntryStatus::Indeterminate) overall = EntryStatus::Indeterminate;
    }
    return overall;
}

void require_relay_config(FeedbackConfig config) {
    if (config != FeedbackConfig::NoFeedback && config != FeedbackConfig::FullToRelay &&
        config != FeedbackConfig::PartialRx1ToRelay)
        throw UnsupportedConfigError("regime check expects " + to_string(config) +
                                     " to be reduced via condition_config() first");
}

// Relay-decoding coefficient set required without feedback (VSI flavour).
void append_no_feedback_vsi(std::vector<ConditionEntry>& es, const Snr& c, double tol) {
    es.push_back(det_entry("nofb_relay_decodes_tx1", c.s(1, 1) + c.s(3, 1), c.s(1, 3),
                           MIMethod::ClosedForm, tol));
    es.push_back(det_entry("nofb_relay_decodes_tx2", c.s(2, 2) + c.s(3, 2), c.s(2, 3),
                           MIMethod::ClosedForm, tol));
    es.push_back(det_entry("nofb_relay_decodes_sum",
                           (1 + c.s(1, 1) + c.s(3, 1)) * (1 + c.s(2, 2) + c.s(3, 2)),
                           1 + c.s(1, 3) + c.s(2, 3), MIMethod::ClosedForm, tol));
}

// Relay-decoding coefficient sets D_1 and D_2 required without feedback in SI.
void append_no_feedback_si(std::vector<ConditionEntry>& es, const Snr& c, double tol) {
    for (int k = 1; k <= 2; ++k) {
        const std::string d = "nofb_d" + std::to_string(k) + "_";
        es.push_back(det_entry(d + "relay_decodes_tx1", c.s(1, k) + c.s(3, k), c.s(1, 3),
                               MIMethod::ClosedForm, tol));
        es.push_back(det_entry(d + "relay_decodes_tx2", c.s(2, k) + c.s(3, k), c.s(2, 3),
                               MIMethod::ClosedForm, tol));
        es.push_back(det_entry(d + "relay_decodes_sum", c.s(1, k) + c.s(2, k) + c.s(3, k),
                               c.s(1, 3) + c.s(2, 3), MIMethod::ClosedForm, tol));
    }
}

}  // namespace

FeedbackConfig condition_config(FeedbackConfig config) {
    switch (config) {
        case FeedbackConfig::FullToRelayPlusOppositeTx:
        case FeedbackConfig::FullToRelayPlusCorrespondingTx:
            return FeedbackConfig::FullToRelay;
        case FeedbackConfig::PartialRx1ToRelayPlusTx1:
            return FeedbackConfig::PartialRx1ToRelay;
        default:
            return config;
    }
}

ConditionReport check_vsi(FeedbackConfig config, FadingModel model, const NetworkParams& p,
                          const RegimeSettings& st) {
    require_relay_config(config);
    p.validate();
    const Snr c = snr_table(p);
    ConditionReport rep;
    rep.config = config;
    rep.model = model;

    if (model == FadingModel::Phase) {
        rep.entries.push_back(det_entry("vsi_rx2_decodes_tx1", c.s(1, 1) + c.s(3, 1),
                                        c.s(1, 2) / (1 + c.s(2, 2) + c.s(3, 2)),
                                        MIMethod::ClosedForm, st.tol));
        rep.entries.push_back(det_entry("vsi_rx1_decodes_tx2", c.s(2, 2) + c.s(3, 2),
                                        c.s(2, 1) / (1 + c.s(1, 1) + c.s(3, 1)),
                                        MIMethod::ClosedForm, st.tol));
        if (config == FeedbackConfig::PartialRx1ToRelay)
            rep.entries.push_back(det_entry("vsi_relay_decodes_tx1", c.s(1, 1) + c.s(3, 1),
                                            c.s(1, 1) + c.s(1, 3), MIMethod::ClosedForm, st.tol));
    } else {
        rep.entries.push_back(det_entry("vsi_rx2_decodes_tx1", 1 + c.s(1, 1) + c.s(3, 1),
                                        snr_over_e1(c.s(1, 2) / (1 + c.s(2, 2) + c.s(3, 2))),
                                        MIMethod::ClosedForm, st.tol));
        rep.entries.push_back(det_entry("vsi_rx1_decodes_tx2", 1 + c.s(2, 2) + c.s(3, 2),
                                        snr_over_e1(c.s(2, 1) / (1 + c.s(1, 1) + c.s(3, 1))),
                                        MIMethod::ClosedForm, st.tol));
        if (config == FeedbackConfig::PartialRx1ToRelay)
            rep.entries.push_back(
                est_entry("vsi_relay_decodes_tx1", rayleigh_mi(MITerm::desired_with_relay(1), p),
                          rayleigh_mi(MITerm::source_to_rx1_relay(1), p), st.tol));
    }
    if (config == FeedbackConfig::NoFeedback) append_no_feedback_vsi(rep.entries, c, st.tol);
    rep.overall = combine(rep.entries);
    return rep;
}

ConditionReport check_si(FeedbackConfig config, FadingModel model, const NetworkParams& p,
                         const RegimeSettings& st) {
    require_relay_config(config);
    p.validate();
    const Snr c = snr_table(p);
    ConditionReport rep;
    rep.config = config;
    rep.model = model;

    if (model == FadingModel::Phase) {
        rep.entries.push_back(det_entry("si_rx2_decodes_tx1", c.s(1, 1) + c.s(3, 1),
                                        c.s(1, 2) / (1 + c.s(3, 2)), MIMethod::ClosedForm,
                                        st.tol));
        rep.entries.push_back(det_entry("si_rx1_decodes_tx2", c.s(2, 2) + c.s(3, 2),
                                        c.s(2, 1) / (1 + c.s(3, 1)), MIMethod::ClosedForm,
                                        st.tol));
    } else {
        rep.entries.push_back(det_entry("si_rx2_decodes_tx1", 1 + c.s(1, 1) + c.s(3, 1),
                                        snr_over_e1(c.s(1, 2) / (1 + c.s(3, 2))),
                                        MIMethod::ClosedForm, st.tol));
        rep.entries.push_back(det_entry("si_rx1_decodes_tx2", 1 + c.s(2, 2) + c.s(3, 2),
                                        snr_over_e1(c.s(2, 1) / (1 + c.s(3, 1))),
                                        MIMethod::ClosedForm, st.tol));
    }

    if (config == FeedbackConfig::PartialRx1ToRelay) {
        // With feedback only from Rx1 the relay must decode both messages
        // from (Y1, Y3); three extra cuts against the component channels.
        if (model == FadingModel::Phase) {
            rep.entries.push_back(det_entry("si_relay_decodes_tx1", c.s(1, 2) + c.s(3, 2),
                                            c.s(1, 1) + c.s(1, 3), MIMethod::ClosedForm, st.tol));
            rep.entries.push_back(det_entry("si_relay_decodes_tx2", c.s(2, 1) + c.s(3, 1),
                                            c.s(2, 1) + c.s(2, 3), MIMethod::ClosedForm, st.tol));
            rep.entries.push_back(est_entry("si_relay_decodes_sum",
                                            phase_mi(MITerm::sum_all(2), p),
                                            phase_mi(MITerm::joint_to_rx1_relay(), p), st.tol));
        } else {
            rep.entries.push_back(
                est_entry("si_relay_decodes_tx1", rayleigh_mi(MITerm::cross_with_relay(1, 2), p),
                          rayleigh_mi(MITerm::source_to_rx1_relay(1), p), st.tol));
            rep.entries.push_back(
                est_entry("si_relay_decodes_tx2", rayleigh_mi(MITerm::cross_with_relay(2, 1), p),
                          rayleigh_mi(MITerm::source_to_rx1_relay(2), p), st.tol));
            rep.entries.push_back(
                est_entry("si_relay_decodes_sum", rayleigh_mi(MITerm::sum_all(2), p, st.mc),
                          rayleigh_mi(MITerm::joint_to_rx1_relay(), p, st.mc), st.tol));
        }
    }
    if (config == FeedbackConfig::NoFeedback) append_no_feedback_si(rep.entries, c, st.tol);
    rep.overall = combine(rep.entries);
    return rep;
}

ConditionReport check_txfb(const NetworkParams& p, FadingModel model, const RegimeSettings& st) {
    p.validate();
    ConditionReport rep;
    rep.config = FeedbackConfig::FullToRelayPlusCorrespondingTx;
    rep.model = model;
    if (model == FadingModel::Phase) {
        rep.entries.push_back(est_entry("txfb_point_b", phase_mi(MITerm::sum_all(1), p),
                                        phase_mi(MITerm::source_at_opp_conditioned(1, 2), p),
                                        st.tol));
    } else {
        rep.entries.push_back(
            est_entry("txfb_point_b", rayleigh_mi(MITerm::sum_all(1), p, st.mc),
                      rayleigh_mi(MITerm::source_at_opp_conditioned(1, 2), p), st.tol));
    }
    const ConditionReport vsi = check_vsi(FeedbackConfig::FullToRelay, model, p, st);
    rep.entries.insert(rep.entries.end(), vsi.entries.begin(), vsi.entries.end());
    rep.overall = combine(rep.entries);
    return rep;
}

ConditionReport check_txfb_partial(const NetworkParams& p, FadingModel model,
                                   const RegimeSettings& st) {
    p.validate();
    ConditionReport rep;
    rep.config = FeedbackConfig::PartialRx1ToRelayPlusTx1;
    rep.model = model;
    if (model == FadingModel::Phase) {
        rep.entries.push_back(est_entry("txfb_point_b2", phase_mi(MITerm::sum_all(2), p),
                                        phase_mi(MITerm::interf_as_noise(2, 1), p), st.tol));
    } else {
        rep.entries.push_back(
            est_entry("txfb_point_b2", rayleigh_mi(MITerm::sum_all(2), p, st.mc),
                      rayleigh_mi(MITerm::interf_as_noise(2, 1), p), st.tol));
    }
    const ConditionReport vsi = check_vsi(FeedbackConfig::PartialRx1ToRelay, model, p, st);
    rep.entries.insert(rep.entries.end(), vsi.entries.begin(), vsi.entries.end());
    rep.overall = combine(rep.entries);
    return rep;
}

Regime classify(FeedbackConfig config, FadingModel model, const NetworkParams& p,
                const RegimeSettings& st) {
    const FeedbackConfig base = condition_config(config);
    if (check_vsi(base, model, p, st).satisfied()) return Regime::VSI;
    if (check_si(base, model, p, st).satisfied()) return Regime::SINotVSI;
    return Regime::Neither;
}

}  // namespace icrf

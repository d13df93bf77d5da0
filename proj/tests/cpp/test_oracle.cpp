#include <doctest.h>

#include <cmath>

#include "../common/test_support.hpp"
#include "icrf/oracle.hpp"
#include "icrf/regimes.hpp"

using namespace icrf;
using icrf::test::example_si_params;
using icrf::test::example_vsi_params;

TEST_CASE("product-magnitude inequality holds on random complex draws") {
    const OracleReport r = verify_psd_inequality(20000, 1);
    CHECK(r.pass);
    REQUIRE(r.checks.size() == 3);
    for (const auto& c : r.checks) {
        CHECK(c.violations == 0);
        CHECK(c.n_checked == 20000);
        CHECK(c.worst_margin >= -1e-10);
    }
}

TEST_CASE("oracle reports are bit-reproducible for a fixed seed") {
    const OracleReport a = verify_psd_inequality(15000, 77);
    const OracleReport b = verify_psd_inequality(15000, 77);
    REQUIRE(a.checks.size() == b.checks.size());
    for (size_t i = 0; i < a.checks.size(); ++i)
        CHECK(a.checks[i].worst_margin == b.checks[i].worst_margin);
    const OracleReport c = verify_psd_inequality(15000, 78);
    CHECK(a.checks[0].worst_margin != c.checks[0].worst_margin);
}

TEST_CASE("independent max-power inputs dominate sampled covariances") {
    for (FadingModel m : {FadingModel::Phase, FadingModel::Rayleigh}) {
        const OracleReport r =
            verify_independence_optimal(m, example_si_params(), {}, 25, 10000, 3);
        INFO("model ", to_string(m));
        CHECK(r.pass);
        CHECK(r.checks.size() == cutset_terms().size());
        for (const auto& c : r.checks) CHECK(c.violations == 0);
    }
}

TEST_CASE("dominance extends to every term without treated-as-noise inputs") {
    // terms whose interest and conditioned sets cover all inputs, plus the
    // all-interest sums; the treated-as-noise terms are excluded on purpose
    const std::vector<MITerm> stray_free = {
        MITerm::sum_all(1),           MITerm::sum_all(2),
        MITerm::sum_at_rx_pair(),     MITerm::source_to_rx1_relay(1),
        MITerm::source_to_rx1_relay(2), MITerm::cross_with_relay(1, 2),
        MITerm::cross_with_relay(2, 1), MITerm::source_at_opp_conditioned(1, 2),
        MITerm::joint_to_rx1_relay()};
    const OracleReport r = verify_independence_optimal(FadingModel::Phase, example_si_params(),
                                                       stray_free, 20, 10000, 21);
    CHECK(r.pass);
}

TEST_CASE("correlating with the relay genuinely helps interference decoding") {
    // the dominance claim must not be extended to treated-as-noise terms:
    // a source-relay correlation boosts the interference-to-noise ratio
    const NetworkParams p = example_si_params();
    Eigen::Matrix3cd c = Eigen::Matrix3cd::Zero();
    c(0, 0) = p.p1;
    c(1, 1) = p.p2;
    c(2, 2) = p.p3;
    c(1, 2) = c(2, 1) = 0.95 * std::sqrt(p.p2 * p.p3);  // Tx2 aligned with the relay
    McSettings mc;
    mc.samples = 20000;
    mc.seed = 23;
    const MIEstimate diag = mc_mi(MITerm::interf_as_noise(2, 1), FadingModel::Phase, p,
                                  InputCovariance::independent(p.p1, p.p2, p.p3), mc);
    const MIEstimate corr =
        mc_mi(MITerm::interf_as_noise(2, 1), FadingModel::Phase, p, InputCovariance(c), mc);
    CHECK(corr.value - diag.value >
          3 * std::sqrt(diag.std_error * diag.std_error + corr.std_error * corr.std_error));
}

TEST_CASE("zero-power scenarios give exactly zero either way") {
    NetworkParams p = example_si_params();
    p.p1 = p.p2 = p.p3 = 0;
    McSettings mc;
    mc.samples = 2000;
    const MIEstimate est = mc_mi(MITerm::sum_all(1), FadingModel::Rayleigh, p,
                                 InputCovariance::independent(0, 0, 0), mc);
    CHECK(est.value == 0.0);
    CHECK(est.std_error == 0.0);
    CHECK(phase_mi(MITerm::sum_all(1), p).value == 0.0);
}

TEST_CASE("a fully correlated covariance strictly loses on the joint cut") {
    const NetworkParams p = example_si_params();
    Eigen::Matrix3cd c;
    const double pw[3] = {p.p1, p.p2, p.p3};
    for (int i = 0; i < 3; ++i)
        for (int l = 0; l < 3; ++l) c(i, l) = std::sqrt(pw[i] * pw[l]);
    McSettings mc;
    mc.samples = 20000;
    mc.seed = 9;
    const MIEstimate diag = mc_mi(MITerm::joint_to_all(), FadingModel::Phase, p,
                                  InputCovariance::independent(p.p1, p.p2, p.p3), mc);
    const MIEstimate corr =
        mc_mi(MITerm::joint_to_all(), FadingModel::Phase, p, InputCovariance(c), mc);
    CHECK(diag.value - corr.value >
          3 * std::sqrt(diag.std_error * diag.std_error + corr.std_error * corr.std_error));
}

TEST_CASE("deterministic routes agree with monte carlo on both models") {
    const NetworkParams p = example_si_params();
    const OracleReport phase = crosscheck_closed_forms(FadingModel::Phase, p, 100000, 5);
    CHECK(phase.pass);
    CHECK(phase.checks.size() >= 16);
    const OracleReport ray = crosscheck_closed_forms(FadingModel::Rayleigh, p, 100000, 5);
    CHECK(ray.pass);
    CHECK(ray.checks.size() >= 10);
}

TEST_CASE("regime nesting holds over random scenarios") {
    const OracleReport phase = verify_regime_nesting(FadingModel::Phase, 300, 17);
    CHECK(phase.pass);
    for (const auto& c : phase.checks) CHECK(c.violations == 0);
    const OracleReport ray = verify_regime_nesting(FadingModel::Rayleigh, 150, 17);
    CHECK(ray.pass);
}

TEST_CASE("failing strong interference implies failing very strong interference") {
    // contrapositive of the nesting chain on the reference scenarios
    const NetworkParams p = example_vsi_params();
    NetworkParams weak = p;
    weak.a12 = weak.a21 = 0.05;
    CHECK_FALSE(check_si(FeedbackConfig::FullToRelay, FadingModel::Phase, weak).satisfied());
    CHECK_FALSE(check_vsi(FeedbackConfig::FullToRelay, FadingModel::Phase, weak).satisfied());
}

TEST_CASE("oracle preconditions reject tiny runs") {
    CHECK_THROWS_AS(verify_psd_inequality(100, 0), std::invalid_argument);
    CHECK_THROWS_AS(verify_independence_optimal(FadingModel::Phase, example_si_params(), {}, 5,
                                                10000, 0),
                    std::invalid_argument);
    CHECK_THROWS_AS(verify_regime_nesting(FadingModel::Phase, 10, 0), std::invalid_argument);
    CHECK_THROWS_AS(crosscheck_closed_forms(FadingModel::Phase, example_si_params(), 1000, 0),
                    std::invalid_argument);
}

#include <doctest.h>

#include <cmath>

#include "../common/test_support.hpp"
#include "icrf/errors.hpp"
#include "icrf/regimes.hpp"

using namespace icrf;
using icrf::test::example_partial_params;
using icrf::test::example_si_params;
using icrf::test::example_txfb_params;
using icrf::test::example_vsi_params;

TEST_CASE("strong cross links satisfy the very-strong conditions") {
    const ConditionReport r =
        check_vsi(FeedbackConfig::FullToRelay, FadingModel::Phase, example_vsi_params());
    REQUIRE(r.entries.size() == 2);
    CHECK(r.satisfied());
    CHECK(r.entries[0].lhs == doctest::Approx(2.44).epsilon(1e-6));
    CHECK(r.entries[0].rhs == doctest::Approx(2.8406).epsilon(1e-4));
    CHECK(r.entries[1].lhs == doctest::Approx(0.725).epsilon(1e-6));
    CHECK(r.entries[1].rhs == doctest::Approx(1.4244).epsilon(1e-4));
}

TEST_CASE("weaker cross links drop to strong-only") {
    const NetworkParams p = example_si_params();
    const ConditionReport vsi = check_vsi(FeedbackConfig::FullToRelay, FadingModel::Phase, p);
    CHECK_FALSE(vsi.satisfied());
    CHECK(vsi.entries[1].rhs == doctest::Approx(0.3767).epsilon(1e-3));

    const ConditionReport si = check_si(FeedbackConfig::FullToRelay, FadingModel::Phase, p);
    CHECK(si.satisfied());
    CHECK(si.entries[0].lhs == doctest::Approx(2.44).epsilon(1e-6));
    CHECK(si.entries[0].rhs == doctest::Approx(2.5536).epsilon(1e-4));
    CHECK(si.entries[1].rhs == doctest::Approx(0.7733).epsilon(1e-4));

    CHECK(classify(FeedbackConfig::FullToRelay, FadingModel::Phase, p) == Regime::SINotVSI);
    CHECK(classify(FeedbackConfig::FullToRelay, FadingModel::Phase, example_vsi_params()) ==
          Regime::VSI);
}

TEST_CASE("very strong implies strong on the same scenario") {
    const NetworkParams p = example_vsi_params();
    CHECK(check_vsi(FeedbackConfig::FullToRelay, FadingModel::Phase, p).satisfied());
    CHECK(check_si(FeedbackConfig::FullToRelay, FadingModel::Phase, p).satisfied());
}

TEST_CASE("no cross links means no strong interference") {
    NetworkParams p = example_vsi_params();
    p.a12 = p.a21 = 0;
    CHECK(classify(FeedbackConfig::FullToRelay, FadingModel::Phase, p) == Regime::Neither);
    // the Rayleigh floor tends to one, so a nonzero direct link still fails
    CHECK(classify(FeedbackConfig::FullToRelay, FadingModel::Rayleigh, p) == Regime::Neither);
}

TEST_CASE("partial feedback adds the relay-decoding cut") {
    const NetworkParams p = example_partial_params();
    const ConditionReport r =
        check_vsi(FeedbackConfig::PartialRx1ToRelay, FadingModel::Phase, p);
    REQUIRE(r.entries.size() == 3);
    CHECK(r.entries[2].name == "vsi_relay_decodes_tx1");
    CHECK(r.entries[2].lhs == doctest::Approx(0.5).epsilon(1e-9));
    CHECK(r.entries[2].rhs == doctest::Approx(1.3).epsilon(1e-9));
    CHECK(r.entries[2].status == EntryStatus::Satisfied);
}

TEST_CASE("partial entries are a superset of the full-feedback entries") {
    const NetworkParams p = example_si_params();
    for (FadingModel m : {FadingModel::Phase, FadingModel::Rayleigh}) {
        const ConditionReport full = check_vsi(FeedbackConfig::FullToRelay, m, p);
        const ConditionReport part = check_vsi(FeedbackConfig::PartialRx1ToRelay, m, p);
        REQUIRE(part.entries.size() == full.entries.size() + 1);
        for (size_t i = 0; i < full.entries.size(); ++i) {
            CHECK(part.entries[i].name == full.entries[i].name);
            CHECK(part.entries[i].lhs == full.entries[i].lhs);
            CHECK(part.entries[i].rhs == full.entries[i].rhs);
        }
    }
}

TEST_CASE("no-feedback checks append the relay-decoding coefficient sets") {
    const NetworkParams p = example_vsi_params();
    const ConditionReport vsi = check_vsi(FeedbackConfig::NoFeedback, FadingModel::Phase, p);
    CHECK(vsi.entries.size() == 5);  // 2 + the three-coefficient set
    const ConditionReport si = check_si(FeedbackConfig::NoFeedback, FadingModel::Phase, p);
    CHECK(si.entries.size() == 8);  // 2 + two three-entry sets

    // a13 = a23 = 0.5 at P = 10 decodes easily here
    CHECK(vsi.satisfied());
    NetworkParams far = p;
    far.a13 = far.a23 = 1e-4;
    CHECK_FALSE(check_vsi(FeedbackConfig::NoFeedback, FadingModel::Phase, far).satisfied());
    CHECK(check_vsi(FeedbackConfig::FullToRelay, FadingModel::Phase, far).satisfied());
}

TEST_CASE("transmitter-feedback point-B condition at the reference scenario") {
    const NetworkParams p = example_txfb_params();
    const ConditionReport r = check_txfb(p, FadingModel::Phase);
    REQUIRE(!r.entries.empty());
    CHECK(r.entries[0].name == "txfb_point_b");
    CHECK(r.entries[0].lhs == doctest::Approx(1.1564).epsilon(1e-4));
    CHECK(r.entries[0].rhs == doctest::Approx(1.5538).epsilon(1e-4));
    CHECK(r.entries[0].status == EntryStatus::Satisfied);
    // the second VSI inequality misses by a hair for these parameters
    CHECK(r.entries[2].name == "vsi_rx1_decodes_tx2");
    CHECK(r.entries[2].lhs == doctest::Approx(0.500).epsilon(1e-6));
    CHECK(r.entries[2].rhs == doctest::Approx(0.486).epsilon(1e-3));
    CHECK(r.entries[2].status == EntryStatus::Unsatisfied);
    CHECK_FALSE(r.satisfied());
}

TEST_CASE("point-B condition fails without the cross link") {
    NetworkParams p = example_txfb_params();
    p.a12 = 0;
    const ConditionReport r = check_txfb(p, FadingModel::Phase);
    CHECK(r.entries[0].status == EntryStatus::Unsatisfied);
}

TEST_CASE("mirrored point-B check through the pair swap") {
    const NetworkParams p = example_txfb_params();
    const ConditionReport r = check_txfb(p.swapped(), FadingModel::Phase);
    const double lhs = std::log2(1 + p.a12 * p.a12 * p.p1 + p.a22 * p.a22 * p.p2 +
                                 p.a32 * p.a32 * p.p3);
    const double rhs = std::log2(1 + p.a21 * p.a21 * p.p2);
    CHECK(r.entries[0].lhs == doctest::Approx(lhs).epsilon(1e-12));
    CHECK(r.entries[0].rhs == doctest::Approx(rhs).epsilon(1e-12));
}

TEST_CASE("transmitter-feedback configurations are not direct check targets") {
    const NetworkParams p = example_vsi_params();
    CHECK_THROWS_AS(check_vsi(FeedbackConfig::FullToRelayPlusCorrespondingTx, FadingModel::Phase,
                              p),
                    UnsupportedConfigError);
    CHECK_THROWS_AS(check_si(FeedbackConfig::PartialRx1ToRelayPlusTx1, FadingModel::Phase, p),
                    UnsupportedConfigError);
    // classify reduces them to their relay-feedback base configuration
    CHECK(classify(FeedbackConfig::FullToRelayPlusOppositeTx, FadingModel::Phase, p) ==
          Regime::VSI);
    CHECK(condition_config(FeedbackConfig::PartialRx1ToRelayPlusTx1) ==
          FeedbackConfig::PartialRx1ToRelay);
}

TEST_CASE("raising a cross link never breaks its satisfied condition") {
    NetworkParams p = example_si_params();
    bool was_satisfied = false;
    for (double a12 = 0.3; a12 < 1.5; a12 += 0.05) {
        p.a12 = a12;
        const ConditionReport r = check_vsi(FeedbackConfig::FullToRelay, FadingModel::Phase, p);
        const bool ok = r.entries[0].status == EntryStatus::Satisfied;
        if (was_satisfied) CHECK(ok);
        was_satisfied = was_satisfied || ok;
    }
    CHECK(was_satisfied);
}

TEST_CASE("rayleigh conditions classify a strong-cross-link scenario") {
    NetworkParams p = example_vsi_params();
    p.a12 = p.a21 = 4.0;  // strong enough to clear the scaled-E1 floor
    CHECK(check_vsi(FeedbackConfig::FullToRelay, FadingModel::Rayleigh, p).satisfied());
    CHECK(check_si(FeedbackConfig::FullToRelay, FadingModel::Rayleigh, p).satisfied());
    CHECK(classify(FeedbackConfig::FullToRelay, FadingModel::Rayleigh, p) == Regime::VSI);
}

TEST_CASE("monte carlo margins classify into three states") {
    CHECK(entry_status(1e-2, 1e-3, 1e-9) == EntryStatus::Satisfied);
    CHECK(entry_status(-1e-2, 1e-3, 1e-9) == EntryStatus::Unsatisfied);
    CHECK(entry_status(1e-4, 1e-3, 1e-9) == EntryStatus::Indeterminate);
    CHECK(entry_status(-1e-4, 1e-3, 1e-9) == EntryStatus::Indeterminate);
    // deterministic margins are two-state with tolerance
    CHECK(entry_status(-1e-10, 0, 1e-9) == EntryStatus::Satisfied);
    CHECK(entry_status(-1e-8, 0, 1e-9) == EntryStatus::Unsatisfied);
}

TEST_CASE("partial strong-interference report for rayleigh mixes methods") {
    RegimeSettings st;
    st.mc.samples = 5000;
    st.mc.seed = 2;
    const ConditionReport r =
        check_si(FeedbackConfig::PartialRx1ToRelay, FadingModel::Rayleigh,
                 example_partial_params(), st);
    REQUIRE(r.entries.size() == 5);
    CHECK(r.entries[4].name == "si_relay_decodes_sum");
    CHECK(r.entries[4].method == MIMethod::MonteCarlo);
    CHECK(r.entries[4].std_error > 0);
}

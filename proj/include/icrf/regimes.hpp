#pragma once

#include <string>
#include <vector>

#include "icrf/channel.hpp"
#include "icrf/mutual_info.hpp"

// Interference-regime condition checks. A scenario is very-strong (VSI)
// when each receiver can decode the interfering message while treating
// everything else as noise, strong (SI) when it can decode it after
// removing its own signal. Every check returns the full per-inequality
// evidence, not just a boolean.

namespace icrf {

enum class Regime { VSI, SINotVSI, Neither };
std::string to_string(Regime r);

enum class EntryStatus { Satisfied, Unsatisfied, Indeterminate };
std::string to_string(EntryStatus s);

struct ConditionEntry {
    std::string name;
    double lhs = 0;
    double rhs = 0;        // satisfied means lhs <= rhs
    double std_error = 0;  // combined Monte Carlo error of the margin, 0 otherwise
    EntryStatus status = EntryStatus::Unsatisfied;
    MIMethod method = MIMethod::ClosedForm;

    double margin() const { return rhs - lhs; }
};

struct ConditionReport {
    FeedbackConfig config = FeedbackConfig::FullToRelay;
    FadingModel model = FadingModel::Phase;
    std::vector<ConditionEntry> entries;
    EntryStatus overall = EntryStatus::Unsatisfied;

    bool satisfied() const { return overall == EntryStatus::Satisfied; }
};

struct RegimeSettings {
    double tol = 1e-9;  // slack on deterministic margins
    McSettings mc;      // used only by entries that need Monte Carlo
};

// Deterministic margins: satisfied iff margin >= -tol. Monte Carlo margins:
// satisfied iff margin > 3 sigma, unsatisfied iff margin < -3 sigma,
// Indeterminate in between.
EntryStatus entry_status(double margin, double std_error, double tol);

// VSI conditions. Covers NoFeedback (adds the relay-decoding coefficient
// set), FullToRelay, and PartialRx1ToRelay (adds the relay-decoding cut).
// Other configurations throw UnsupportedConfigError; mirror scenarios are
// checked through NetworkParams::swapped().
ConditionReport check_vsi(FeedbackConfig config, FadingModel model, const NetworkParams& params,
                          const RegimeSettings& settings = {});

// SI conditions for the same three configurations.
ConditionReport check_si(FeedbackConfig config, FadingModel model, const NetworkParams& params,
                         const RegimeSettings& settings = {});

// Feedback to the corresponding transmitter: the single-receiver sum rate
// must be decodable at the opposite transmitter (point-B condition), on
// top of the full-feedback VSI conditions.
ConditionReport check_txfb(const NetworkParams& params, FadingModel model,
                           const RegimeSettings& settings = {});

// Partial-feedback variant with the extra link Rx1 -> Tx1, which lets Tx1
// relay the pair-2 message: the full Rx2 sum rate must be decodable at
// Rx1, on top of the partial-feedback VSI conditions.
ConditionReport check_txfb_partial(const NetworkParams& params, FadingModel model,
                                   const RegimeSettings& settings = {});

// Strongest satisfied regime; Indeterminate checks demote conservatively.
Regime classify(FeedbackConfig config, FadingModel model, const NetworkParams& params,
                const RegimeSettings& settings = {});

// Configuration whose regime conditions govern `config` (feedback links to
// transmitters never alter the VSI/SI conditions themselves).
FeedbackConfig condition_config(FeedbackConfig config);

}  // namespace icrf

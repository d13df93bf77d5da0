#pragma once

#include <stdexcept>
#include <string>

namespace icrf {

// Relay position (or a grid cell) coincides with one of the fixed nodes.
struct DegenerateGeometryError : std::runtime_error {
    explicit DegenerateGeometryError(const std::string& what) : std::runtime_error(what) {}
};

// Argument outside the mathematical domain of a special function.
struct DomainError : std::runtime_error {
    explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// (term, fading model) pairing with no closed-form or quadrature path.
struct UnsupportedTermError : std::runtime_error {
    explicit UnsupportedTermError(const std::string& what) : std::runtime_error(what) {}
};

// Condition check requested for a feedback configuration it does not cover.
struct UnsupportedConfigError : std::runtime_error {
    explicit UnsupportedConfigError(const std::string& what) : std::runtime_error(what) {}
};

// Region requested for a regime the scenario does not classify into.
struct RegimeMismatchError : std::runtime_error {
    explicit RegimeMismatchError(const std::string& what) : std::runtime_error(what) {}
};

// Precondition inequality of a bound construction fails.
struct ConditionNotMetError : std::runtime_error {
    explicit ConditionNotMetError(const std::string& what) : std::runtime_error(what) {}
};

// Malformed scenario / job description input.
struct ScenarioParseError : std::runtime_error {
    explicit ScenarioParseError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace icrf

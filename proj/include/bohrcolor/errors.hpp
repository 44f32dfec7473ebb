#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace bohrcolor {

// Ambient truncation bounds of two points do not match.
struct DimensionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// The truncation m cannot host a member of S_m; carries the minimal m that can.
struct CapacityError : std::runtime_error {
    std::uint64_t min_m;
    CapacityError(const std::string& msg, std::uint64_t min_m_)
        : std::runtime_error(msg), min_m(min_m_) {}
};

// The cluster scan exhausted the dual matrix; carries a pigeonhole-sufficient bound.
struct NeedLargerM : std::runtime_error {
    std::uint64_t required_m;
    NeedLargerM(const std::string& msg, std::uint64_t required_m_)
        : std::runtime_error(msg), required_m(required_m_) {}
};

// A quantity the construction guarantees fell outside its proven window.
// Must never fire for validated parameters; if it does, the run is invalid.
struct ConstructionViolation : std::logic_error {
    using std::logic_error::logic_error;
};

// Bad run configuration (scan bound vs. schedule tail, missing fields, ...).
struct ConfigError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace bohrcolor

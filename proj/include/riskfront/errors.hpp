#pragma once

#include <stdexcept>
#include <string>

namespace riskfront {

// Malformed input data: dimension mismatches, bad rows, broken files.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A scenario or solver configuration that violates its invariants.
class ConfigError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// The requested enumeration exceeds the exhaustive-search guard.
class CapacityError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// No feasible distribution exists for the scenario.
class InfeasibleError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

// A lookup fell outside the hull of an interpolation grid.
class ExtrapolationError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

} // namespace riskfront

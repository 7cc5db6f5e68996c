#pragma once

#include <stdexcept>
#include <string>

namespace gentime {

/// Shape mismatch between values that should share a lattice or space.
struct structural_error : std::runtime_error {
    explicit structural_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Rejected input: a space description or collection that violates its invariants.
struct validation_error : std::runtime_error {
    explicit validation_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Internal cross-check failed (parity violation, negative h1, oracle disagreement).
/// Signals a bug or a malformed lattice, never a bad user input.
struct integrity_error : std::runtime_error {
    explicit integrity_error(const std::string& msg) : std::runtime_error(msg) {}
};

/// Request outside the supported range of an engine.
struct unsupported_error : std::runtime_error {
    explicit unsupported_error(const std::string& msg) : std::runtime_error(msg) {}
};

} // namespace gentime

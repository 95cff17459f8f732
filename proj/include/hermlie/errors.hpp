#pragma once

#include <stdexcept>
#include <string>

namespace hermlie {

struct UnsupportedCase : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct RangeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// A weight fails dominance against a named simple root.
struct DominanceError : std::domain_error {
    std::string simple_root;
    DominanceError(const std::string& msg, std::string root)
        : std::domain_error(msg), simple_root(std::move(root)) {}
};

struct ConstraintError : std::domain_error {
    using std::domain_error::domain_error;
};

struct AmbientMismatch : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct PartitionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Gamma factor diverges; carries which factor.
struct PoleError : std::domain_error {
    std::string factor;
    PoleError(const std::string& msg, std::string which)
        : std::domain_error(msg), factor(std::move(which)) {}
};

/// Growth-exponent fit did not stabilize; message carries diagnostics.
struct InconclusiveFit : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A computation contradicts an identity the library asserts.
struct ConsistencyError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace hermlie

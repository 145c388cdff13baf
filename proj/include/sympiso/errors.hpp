#pragma once

#include <stdexcept>
#include <string>

namespace sympiso {

// Thrown when an exhaustive enumeration would exceed the configured cap.
struct cap_exceeded : std::runtime_error {
    explicit cap_exceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown on unparsable files, strings or malformed CLI inputs.
struct malformed_input : std::runtime_error {
    explicit malformed_input(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when an operation's precondition does not hold (wrong ring,
// non-self-orthogonal code, mismatched dimensions, ...).
struct domain_error : std::runtime_error {
    explicit domain_error(const std::string& what) : std::runtime_error(what) {}
};

// Inverse of a zero divisor.
struct non_invertible : domain_error {
    explicit non_invertible(const std::string& what) : domain_error(what) {}
};

// Projector rank disagrees with d^(n-k); bad phase convention or input.
struct rank_mismatch : std::runtime_error {
    explicit rank_mismatch(const std::string& what) : std::runtime_error(what) {}
};

// Exact integer arithmetic left the representable range.
struct arithmetic_overflow : std::runtime_error {
    explicit arithmetic_overflow(const std::string& what) : std::runtime_error(what) {}
};

} // namespace sympiso

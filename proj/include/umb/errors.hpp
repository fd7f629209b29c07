#pragma once

#include <stdexcept>
#include <string>

namespace umb {

// Domain errors (bad argument, precondition violation) use std::domain_error
// directly. The two cases below get their own types so callers can tell a
// consumed digit source or an unusable estimation window apart from bad input.

// A finite digit source ran out of digits.
struct state_error : std::runtime_error {
    explicit state_error(const std::string& what) : std::runtime_error(what) {}
};

// An estimator was given data it cannot fit (window too short, zero
// distances, non-power-of-two values where integer exponents are required).
struct estimation_error : std::runtime_error {
    explicit estimation_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace umb

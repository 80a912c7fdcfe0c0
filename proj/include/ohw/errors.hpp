#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace ohw {

// Error taxonomy. The CLI maps each class to a distinct exit code.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ParseError : Error {
    using Error::Error;
};

struct BackendMismatch : Error {
    using Error::Error;
};

struct DivisionByZero : Error {
    using Error::Error;
};

// Raised when a sign or group coordinate is requested for a cyclotomic
// element that is not fixed by complex conjugation.
struct NonRealError : Error {
    using Error::Error;
};

struct BudgetExceeded : Error {
    using Error::Error;
};

// A d-subset that fails to span a hyperplane. Carries the offending
// point indices when the caller knows them.
struct DegenerateSubset : Error {
    std::vector<int> subset;
    explicit DegenerateSubset(std::string msg, std::vector<int> witness = {})
        : Error(std::move(msg)), subset(std::move(witness)) {}
};

struct ProjectionUndefined : Error {
    using Error::Error;
};

// Operation applied to a projection center outside its supported class
// (e.g. Sylvester decomposition of a smooth center).
struct UnsupportedCenter : Error {
    using Error::Error;
};

// Violated internal invariant; always a bug, never a user error.
struct InternalError : Error {
    using Error::Error;
};

}  // namespace ohw

#pragma once

#include <stdexcept>

namespace samsched {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Construction-time invariant violations (bad parameters, malformed data).
struct ValidationError : Error {
    using Error::Error;
};

// pdf()/quantile() on a distribution that has no density.
struct NoDensity : Error {
    using Error::Error;
};

// delta() called against the priority order.
struct OrderViolation : Error {
    using Error::Error;
};

// relative optimality gap requested while L == H.
struct DegenerateInstance : Error {
    using Error::Error;
};

// adaptive integration exhausted its subdivision budget.
struct QuadratureFailure : Error {
    using Error::Error;
};

struct NonPositivePriority : Error {
    using Error::Error;
};

// enumeration budget exceeded.
struct TooLarge : Error {
    using Error::Error;
};

struct NotDiscrete : Error {
    using Error::Error;
};

// unreadable or malformed instance files, unknown names.
struct ParseError : Error {
    using Error::Error;
};

}  // namespace samsched

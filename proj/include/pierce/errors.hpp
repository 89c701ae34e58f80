#pragma once

#include <stdexcept>
#include <string>

namespace pierce {

// Base class for every domain error raised by the toolkit.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A member set is empty, so no transversal exists.
struct Infeasible : Error {
    using Error::Error;
};

// A set index passed to a solver is out of range or repeated.
struct InvalidIndex : Error {
    using Error::Error;
};

// A polygon region violates its own invariants (self-intersection,
// wrong orientation, hole outside the outer ring, ...).
struct MalformedRegion : Error {
    using Error::Error;
};

// The family fails the strict general-position precondition.
struct GeneralPositionViolation : Error {
    using Error::Error;
};

// crossing_parity was given coincident or touching curves.
struct Degenerate : Error {
    using Error::Error;
};

// A generator could not produce a valid family within its attempt budget.
struct RejectionBudgetExhausted : Error {
    using Error::Error;
};

// An input file does not match the expected JSON schema.
struct SchemaError : Error {
    using Error::Error;
};

} // namespace pierce

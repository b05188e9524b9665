#pragma once

#include <stdexcept>
#include <string>

namespace ramseykit {

struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Source and target (or operand pair) disagree on signature.
struct SignatureMismatchError : Error {
    using Error::Error;
};

// Malformed input file or serialized object.
struct ParseError : Error {
    using Error::Error;
};

// Name not present in the builtin-class / predicate / fixture registry.
struct UnknownNameError : Error {
    using Error::Error;
};

// Operation precondition violated by the caller (e.g. A0 not a member of K0).
struct PreconditionError : Error {
    using Error::Error;
};

// A hard resource cap was hit (group element cap, point cap, enumeration cap).
// Distinct from INCONCLUSIVE verdicts, which are ordinary results.
struct CapExceededError : Error {
    using Error::Error;
};

// Two independent computations of the same quantity disagreed. Always a bug.
struct AuditMismatchError : std::logic_error {
    using std::logic_error::logic_error;
};

} // namespace ramseykit

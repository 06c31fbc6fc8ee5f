#pragma once

#include <stdexcept>
#include <string>

namespace braidquot {

// Base of every error thrown by this library.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed word text (bad token, misplaced separator, unparsable exponent).
struct SyntaxError : Error {
  using Error::Error;
};

// Generator or pair index outside the valid range for the strand count.
struct IndexError : Error {
  using Error::Error;
};

// Operands live on different strand counts.
struct SizeMismatch : Error {
  using Error::Error;
};

// Pure-element operation applied to an element with nontrivial permutation.
struct NotPure : Error {
  using Error::Error;
};

// Fiber operation applied to elements with different underlying permutations.
struct FiberMismatch : Error {
  using Error::Error;
};

// Permutation passed as a centralizer element does not commute with theta.
struct NotInCentralizer : Error {
  using Error::Error;
};

// Precondition on argument values violated (bad p/k/r ranges and the like).
struct DomainError : Error {
  using Error::Error;
};

// A postcondition that is guaranteed by the theory failed at runtime.
// Seeing this means a convention drifted; it is a bug, not user error.
struct InternalError : Error {
  using Error::Error;
};

}  // namespace braidquot

#pragma once

#include <stdexcept>
#include <string>

namespace twistlap {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Malformed rational / polynomial text input.
struct ParseError : Error {
  using Error::Error;
};

// Weight family or curvature does not match the requested operation.
struct DomainMismatchError : Error {
  using Error::Error;
};

// Parameter validity or index-range violation (invalid kappa/nu, m beyond the
// Landau bound, n beyond the level spectrum, convention violations).
struct RangeError : Error {
  using Error::Error;
};

// The Gamma-ratio normalization constant degenerates (Pochhammer factor zero).
struct DegenerateConstantError : Error {
  using Error::Error;
};

// A construction whose weight must cancel exactly failed to cancel.
struct InternalConsistencyError : Error {
  using Error::Error;
};

// Floating-point evaluation outside the surface chart.
struct EvalDomainError : Error {
  using Error::Error;
};

}  // namespace twistlap

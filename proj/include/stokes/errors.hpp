#pragma once

#include <stdexcept>

namespace stokes {

// Shared error taxonomy. The CLI maps content-level violations
// (NotHermitian, BadTrace, NotADensity, ConstraintViolation) to exit
// code 2 and everything else user-facing to exit code 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct NotHermitian : Error { using Error::Error; };
struct BadDimension : Error { using Error::Error; };
struct DimensionMismatch : Error { using Error::Error; };
struct BadTrace : Error { using Error::Error; };
struct IndexOutOfRange : Error { using Error::Error; };
struct BadSubset : Error { using Error::Error; };
struct BadPosition : Error { using Error::Error; };
struct BadPartition : Error { using Error::Error; };
struct NotADensity : Error { using Error::Error; };
struct BadWeight : Error { using Error::Error; };
struct WeightNotNormalized : Error { using Error::Error; };
struct NegativeParameter : Error { using Error::Error; };
struct OutOfRange : Error { using Error::Error; };
struct EmptyGrid : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };
struct ConstraintViolation : Error { using Error::Error; };

}  // namespace stokes

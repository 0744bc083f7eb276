// Error types shared across the library.
#pragma once

#include "reals/rational.hpp"

#include <cstddef>
#include <stdexcept>

namespace reals {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Raised when a derived computation cannot commit the requested digit within
// its lookahead budget. Carries the rational enclosure of the underlying
// value established so far.
struct UnresolvedPrecision : Error {
  int requested;
  int reached;
  Rational lo;
  Rational hi;

  UnresolvedPrecision(int requested_, int reached_, Rational lo_, Rational hi_);
};

// A reciprocal/division positivity witness turned out to be false.
struct InvalidWitness : Error {
  using Error::Error;
};

// A declared property (monotonicity, stabilization consistency, oracle
// totality) was observed to fail.
struct ContractViolation : Error {
  using Error::Error;
};

struct ParseError : Error {
  std::size_t position;
  ParseError(std::size_t position_, const std::string& what_);
};

}  // namespace reals

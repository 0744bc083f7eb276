// Derived streams for addition, multiplication, reciprocal and division.
// Truncations of a derived stream are committed from interval enclosures of
// the operand truncations; exactly-backed operands take an exact fast path
// that also settles which class representative (nines tail or terminating)
// the limit construction produces.
#pragma once

#include "reals/stream.hpp"

namespace reals {

struct ResolutionBudget {
  LookaheadPolicy policy{};
  int lookahead() const { return policy.max_extra_digits; }
};

// x + y as the limit of truncation sums. Boundary values that a grid point
// approaches from one side resolve only on the exact fast path; black-box
// operands raise UnresolvedPrecision there, carrying the enclosure
// [ [x]_k + [y]_k , [x]_k + [y]_k + 2*10^-k ].
DecimalStream add(const DecimalStream& x, const DecimalStream& y,
                  const ResolutionBudget& budget = {});

// Psi^(sign x + sign y) applied to the limit of |x|,|y| truncation products.
DecimalStream mul(const DecimalStream& x, const DecimalStream& y,
                  const ResolutionBudget& budget = {});

// Psi^(sign x) applied to the greatest lower bound of 1/[|x|]_k. The caller
// certifies 10^-witness <= |x|; a violated witness is detected and rejected.
DecimalStream reciprocal(const DecimalStream& x, int witness,
                         const ResolutionBudget& budget = {});

DecimalStream divide(const DecimalStream& x, const DecimalStream& y, int witness,
                     const ResolutionBudget& budget = {});

}  // namespace reals

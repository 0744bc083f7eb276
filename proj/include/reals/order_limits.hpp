// Suprema and infima of finite stream families, limits of monotone stream
// sequences with stabilization detection, and labeled finite-horizon
// approximations of upper/lower limits.
#pragma once

#include "reals/arithmetic.hpp"

namespace reals {

struct StreamSequence {
  enum class Monotone { None, Increasing, Decreasing };

  std::function<DecimalStream(int)> term;
  Monotone monotone = Monotone::None;
  std::optional<DecimalStream> bound;
  std::function<int(int)> modulus;  // may be empty

  bool has_modulus() const { return static_cast<bool>(modulus); }
};

// Pointwise truncation maximum over a non-empty family; coincides with the
// digitwise survivor construction of the least upper bound.
DecimalStream sup_finite(const std::vector<DecimalStream>& xs);

// Dual of sup_finite through the nines complement: inf W = psi(sup psi(W)).
DecimalStream inf_finite(const std::vector<DecimalStream>& xs);

// Limit of a flagged monotone bounded sequence. At each precision the term
// truncations are scanned until they repeat for `window` consecutive indices
// (within `horizon_factor * (m+1)` terms); stabilization on sequences without
// a modulus is advisory, and any later inconsistency or monotonicity
// violation raises ContractViolation.
DecimalStream monotone_limit(const StreamSequence& seq, const ResolutionBudget& budget = {},
                             int window = 3, int horizon_factor = 10);

// Enclosure of sup{ term(i) | start <= i < start+horizon } at precision k.
// An explicitly finite-horizon approximation of the upper limit; never
// claimed to equal the true one.
IntervalEnclosure approx_limsup(const StreamSequence& seq, int start, int horizon, int k);

// Psi-dual of approx_limsup.
IntervalEnclosure approx_liminf(const StreamSequence& seq, int start, int horizon, int k);

}  // namespace reals

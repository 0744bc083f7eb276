// Dedekind-cut and Cauchy-sequence constructions: the maps into decimal
// streams, cut/sequence arithmetic, and the isomorphism-check harness.
#pragma once

#include "reals/order_limits.hpp"

#include <cstdint>

namespace reals {

enum class CutSide { A, B, Unresolved };

// Three-valued rational membership oracle with one witness on each side.
// User-supplied cuts must answer A or B for every rational; only derived
// cuts may answer Unresolved.
struct DedekindCut {
  std::function<CutSide(const Rational&)> member;
  Rational witness_a;
  Rational witness_b;
};

// The cut at a rational boundary g: A = {q < g}, B = {q >= g}.
DedekindCut rational_cut(const Rational& g);

// Rational sequence with a convergence modulus: |term(m) - term(n)| < 10^-k
// for all m, n >= modulus(k).
struct CauchySequence {
  std::function<Rational(int)> term;
  std::function<int(int)> modulus;
};

// sup A as a decimal stream, located by bisection between the witnesses.
// Grid points are settled by querying the cut itself: a B-side boundary makes
// the supremum the nines-tail representative. Unresolved membership at a
// straddled grid point surfaces as UnresolvedPrecision.
DecimalStream tau(const DedekindCut& cut, const ResolutionBudget& budget = {});

// The cut {q : q < x} / {q : q >= x}. Exact for exactly-backed streams; for
// black-box streams membership is decided by comparison at increasing
// precision and may come back Unresolved within the budget.
DedekindCut cut_of_stream(const DecimalStream& x, const ResolutionBudget& budget = {});

DedekindCut cut_add(const DedekindCut& c1, const DedekindCut& c2,
                    const ResolutionBudget& budget = {});
DedekindCut cut_mul(const DedekindCut& c1, const DedekindCut& c2,
                    const ResolutionBudget& budget = {});
ComparisonOutcome cut_leq(const DedekindCut& c1, const DedekindCut& c2, int k,
                          const ResolutionBudget& budget = {});

// Limit of the sequence as a decimal stream, from the modulus enclosure
// term(N(j)) +- 10^-j with one guard digit past the requested precision.
DecimalStream kappa(const CauchySequence& seq, const ResolutionBudget& budget = {});

CauchySequence seq_add(const CauchySequence& s1, const CauchySequence& s2);
CauchySequence seq_mul(const CauchySequence& s1, const CauchySequence& s2);

struct SeqEquivalence {
  bool equivalent;       // no refutation found up to k_max
  int refuted_at = 0;    // meaningful when !equivalent
  Rational max_gap;      // largest sampled |term1(n) - term2(n)| at the checked indices
};

// Refutes equivalence when the kappa truncations separate by two grid steps
// at some k <= k_max; otherwise reports equivalent-up-to-k_max.
SeqEquivalence seq_equiv(const CauchySequence& s1, const CauchySequence& s2, int k_max,
                         const ResolutionBudget& budget = {});

ComparisonOutcome seq_leq(const CauchySequence& s1, const CauchySequence& s2, int k,
                          const ResolutionBudget& budget = {});

enum class IsoKind { Dedekind, Cauchy };

struct LawResult {
  std::string name;
  bool pass = true;
  BigInt max_deviation;  // grid steps at the checked precision
};

struct HomomorphismReport {
  IsoKind kind;
  int trials = 0;
  int precision = 0;
  std::uint64_t seed = 0;
  std::vector<LawResult> laws;

  bool all_pass() const {
    for (const auto& l : laws)
      if (!l.pass) return false;
    return true;
  }
};

// Randomized check of the add/mul/order homomorphism laws for tau or kappa on
// rational-backed instances, at one-grid-step tolerance. Deterministic given
// the seed.
HomomorphismReport iso_report(IsoKind kind, int trials, int precision, std::uint64_t seed);

}  // namespace reals

// Executable property suites: the complete-ordered-field axiom checks with
// tolerances taken from the corresponding proofs, and the adapter isomorphism
// reports.
#pragma once

#include "reals/adapters.hpp"
#include "reals/eval.hpp"

namespace reals {

struct CheckLine {
  std::string name;
  bool pass;
  std::string detail;
};

struct SuiteResult {
  std::string suite;
  int trials = 0;
  int precision = 0;
  std::uint64_t seed = 0;
  std::vector<CheckLine> checks;

  bool passed() const {
    for (const auto& c : checks)
      if (!c.pass) return false;
    return true;
  }
};

SuiteResult run_axioms(int trials, int precision, std::uint64_t seed);
SuiteResult run_iso(IsoKind kind, int trials, int precision, std::uint64_t seed);

// Human-readable lines followed by a machine-readable key=value block.
std::string format_report(const SuiteResult& r);

}  // namespace reals

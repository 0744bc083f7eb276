// Expression evaluation and digit rendering.
#pragma once

#include "reals/adapters.hpp"
#include "reals/parser.hpp"

#include <map>

namespace reals {

struct RenderConfig {
  enum class Format { SignMagnitude, FloorDigits };
  int digits = 10;
  Format format = Format::SignMagnitude;
  LookaheadPolicy::OnUnresolved on_unresolved = LookaheadPolicy::OnUnresolved::RaiseError;
};

using Environment = std::map<std::string, DecimalStream>;

// Evaluate to a decimal stream; cmp(...) is only meaningful at top level and
// is rejected here.
DecimalStream evaluate_stream(const ExprPtr& e, const ResolutionBudget& budget,
                              const Environment& env = {});

// Truncation rendering. Sign-magnitude prints the scaled value the way a
// calculator would (-13.34); floor-digits prints the negative-integer-part
// notation ((-14).66).
std::string render_truncation(const Truncation& t, RenderConfig::Format format);

// Canonical form of a terminating decimal, e.g. "1", "-2.5".
std::string render_finite_decimal(const Rational& v);

// Digits at the configured precision, annotated with the canonical class
// representative when the stream is an exactly-backed nines tail; under the
// interval policy an unresolved query renders the enclosure instead of
// raising.
std::string render_stream(const DecimalStream& s, const RenderConfig& cfg);

// Parse + evaluate + render in one step.
std::string eval_to_text(const std::string& input, const RenderConfig& cfg,
                         const ResolutionBudget& budget = {}, const Environment& env = {});

}  // namespace reals

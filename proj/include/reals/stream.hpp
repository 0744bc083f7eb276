// Decimal streams: elements of the ambient space as truncation oracles, plus
// the unary structure maps (nines complement, sign, absolute value), order
// comparison and equivalence testing.
#pragma once

#include "reals/errors.hpp"
#include "reals/truncation.hpp"

#include <functional>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <vector>

namespace reals {

// Closed rational interval known to contain a derived value.
struct IntervalEnclosure {
  Rational lo;
  Rational hi;
  Rational width() const { return hi - lo; }
};

// How far a derived stream may refine its operands past the requested
// precision, and what to do when that is not enough. The policy's unresolved
// mode is honored by renderers; library queries always raise and carry the
// enclosure either way.
struct LookaheadPolicy {
  enum class OnUnresolved { RaiseError, ReturnInterval };
  int max_extra_digits = 40;
  OnUnresolved on_unresolved = OnUnresolved::RaiseError;
};

// All integers D with D <= [x]_k.scaled <= hi; a singleton when the query
// resolved, a two-wide band when only an enclosure is known. Comparisons work
// on ranges so that verdicts stay sound near representation boundaries.
struct TruncationRange {
  int precision = 0;
  BigInt lo;
  BigInt hi;
  bool exact() const { return lo == hi; }
};

struct ComparisonOutcome {
  enum class Kind { StrictlyLess, StrictlyGreater, Tied };
  Kind kind;
  int precision;  // TiedAt(k): |[x]_k - [y]_k| <= 10^-k

  bool strictly_less() const { return kind == Kind::StrictlyLess; }
  bool strictly_greater() const { return kind == Kind::StrictlyGreater; }
  bool tied() const { return kind == Kind::Tied; }
};

enum class Tail { QF, R9, Other };

// Exactly known value together with which representative of its equivalence
// class the stream denotes. The nines variant exists only for terminating
// decimals; its truncation at k is ceil(v*10^k) - 1 instead of floor.
struct ExactBacking {
  Rational value;
  bool nines = false;

  ExactBacking() = default;
  ExactBacking(Rational v, bool nines_variant);

  BigInt truncate_scaled(int k) const;
  Truncation truncate(int k) const { return Truncation{k, truncate_scaled(k)}; }
  ExactBacking psi() const;

  // True when the truncation deficit v - [v]_k is eventually zero, i.e. the
  // expansion is attained at a finite grid.
  bool deficit_vanishes() const { return !nines && value.is_finite_decimal(); }
};

namespace detail {

class StreamImpl {
public:
  virtual ~StreamImpl() = default;

  Truncation query(int k);
  TruncationRange query_range(int k);

  virtual std::optional<ExactBacking> exact() const { return std::nullopt; }
  // When set: this stream is non-negative, its square is exactly this
  // rational, and every truncation strictly undershoots the value.
  virtual std::optional<Rational> exact_square() const { return std::nullopt; }
  virtual std::optional<std::vector<int>> declared_tail() const { return std::nullopt; }
  virtual std::string describe() const = 0;

protected:
  // Compute the truncation at k; `best` is the deepest truncation already
  // cached (for incremental digit searches). Must be deterministic and agree
  // with nesting across precisions.
  virtual Truncation compute(int k, const std::optional<Truncation>& best) = 0;

private:
  std::mutex mu_;
  std::optional<Truncation> best_;
};

}  // namespace detail

// Value-semantic handle to a shared, memoized stream.
class DecimalStream {
public:
  DecimalStream() = default;
  explicit DecimalStream(std::shared_ptr<detail::StreamImpl> impl) : impl_(std::move(impl)) {}

  bool valid() const { return impl_ != nullptr; }

  Truncation truncation(int k) const { return impl_->query(k); }
  TruncationRange truncation_range(int k) const { return impl_->query_range(k); }

  std::optional<ExactBacking> exact() const { return impl_->exact(); }
  std::optional<Rational> exact_square() const { return impl_->exact_square(); }
  std::optional<std::vector<int>> declared_tail() const { return impl_->declared_tail(); }
  std::string describe() const { return impl_->describe(); }

  const std::shared_ptr<detail::StreamImpl>& impl() const { return impl_; }

private:
  std::shared_ptr<detail::StreamImpl> impl_;
};

// Constructors.
DecimalStream from_rational(const Rational& r);
DecimalStream from_exact(const ExactBacking& backing, const std::string& tag);
DecimalStream from_digit_function(const BigInt& x0, std::function<int(int)> digits,
                                  std::optional<std::vector<int>> declared_period = std::nullopt);
// Positive square root digits of integer n >= 1; the truncations satisfy
// [a]_k^2 < n <= ([a]_k + 10^-k)^2, so perfect squares come out as nines
// tails (sqrt_stream(4) is 1.999999...).
DecimalStream sqrt_stream(const BigInt& n);
// Stream with value sqrt(c) for positive non-square rational c; used by the
// arithmetic fast paths to keep products and reciprocals of roots exact.
DecimalStream surd_stream(const Rational& c);

// Operations.
Truncation truncate(const DecimalStream& x, int k);
DecimalStream psi(const DecimalStream& x);
int sign(const DecimalStream& x);  // 0 iff integer part >= 0
DecimalStream abs(const DecimalStream& x);

// Value enclosure at precision k: the sandwich [ [x]_k, [x]_k + 10^-k ] when
// the query resolves, the enclosure carried by the failure otherwise.
IntervalEnclosure stream_enclosure(const DecimalStream& x, int k);

// Verdict at precision k. Strict outcomes need a two-grid-step separation and
// therefore hold for the underlying reals as well; Tied means the truncations
// are within one grid step. Sound under unresolved queries via ranges; raises
// UnresolvedPrecision in the rare indeterminate case.
ComparisonOutcome compare_upto(const DecimalStream& x, const DecimalStream& y, int k);

// Exact equivalence decision for exactly-backed streams (class equality).
bool decide_equiv_rational(const DecimalStream& x, const DecimalStream& y);

// QF / R9 / Other for streams whose tail is known (exact backing or declared
// period); rejects black-box digit streams.
Tail classify_tail(const DecimalStream& x);

}  // namespace reals

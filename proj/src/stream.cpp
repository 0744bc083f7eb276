#include "reals/stream.hpp"

#include <sstream>

namespace reals {

UnresolvedPrecision::UnresolvedPrecision(int requested_, int reached_, Rational lo_, Rational hi_)
    : Error("unresolved precision at digit " + std::to_string(requested_) + " (refined to " +
            std::to_string(reached_) + "): value in [" + lo_.to_string() + ", " +
            hi_.to_string() + "]"),
      requested(requested_),
      reached(reached_),
      lo(std::move(lo_)),
      hi(std::move(hi_)) {}

ParseError::ParseError(std::size_t position_, const std::string& what_)
    : Error("parse error at " + std::to_string(position_) + ": " + what_), position(position_) {}

ExactBacking::ExactBacking(Rational v, bool nines_variant) : value(std::move(v)), nines(nines_variant) {
  if (nines && !value.is_finite_decimal())
    throw std::invalid_argument("ExactBacking: nines variant requires a terminating decimal");
}

BigInt ExactBacking::truncate_scaled(int k) const {
  if (k < 0) throw std::invalid_argument("truncate_scaled: negative precision");
  if (nines) return ceil_scaled(value, k) - 1;
  return floor_scaled(value, k);
}

ExactBacking ExactBacking::psi() const {
  bool flip = value.is_finite_decimal() ? !nines : false;
  return ExactBacking(-value, flip);
}

namespace detail {

Truncation StreamImpl::query(int k) {
  if (k < 0) throw std::invalid_argument("query: negative precision");
  std::lock_guard<std::mutex> lock(mu_);
  if (best_ && best_->precision >= k) return best_->refine_down(k);
  Truncation t = compute(k, best_);
  if (t.precision != k) throw ContractViolation("stream returned wrong precision");
  if (best_ && t.refine_down(best_->precision).scaled != best_->scaled)
    throw ContractViolation("stream violated nesting consistency at precision " +
                            std::to_string(k));
  best_ = t;
  return t;
}

TruncationRange StreamImpl::query_range(int k) {
  try {
    Truncation t = query(k);
    return TruncationRange{k, t.scaled, t.scaled};
  } catch (const UnresolvedPrecision& e) {
    return TruncationRange{k, floor_scaled(e.lo, k), floor_scaled(e.hi, k)};
  }
}

namespace {

class ExactImpl final : public StreamImpl {
public:
  ExactImpl(ExactBacking backing, std::string tag)
      : backing_(std::move(backing)), tag_(std::move(tag)) {}

  std::optional<ExactBacking> exact() const override { return backing_; }
  std::string describe() const override { return tag_; }

protected:
  Truncation compute(int k, const std::optional<Truncation>&) override {
    return backing_.truncate(k);
  }

private:
  ExactBacking backing_;
  std::string tag_;
};

class DigitFunctionImpl final : public StreamImpl {
public:
  DigitFunctionImpl(BigInt x0, std::function<int(int)> digits, std::optional<std::vector<int>> tail)
      : x0_(std::move(x0)), digits_(std::move(digits)), tail_(std::move(tail)) {}

  std::optional<std::vector<int>> declared_tail() const override { return tail_; }
  std::string describe() const override { return "digit-defined"; }

protected:
  Truncation compute(int k, const std::optional<Truncation>& best) override {
    BigInt scaled;
    int from;
    if (best) {
      scaled = best->scaled;
      from = best->precision + 1;
    } else {
      scaled = x0_;
      from = 1;
    }
    for (int i = from; i <= k; ++i) {
      int d = digits_(i);
      if (d < 0 || d > 9)
        throw std::invalid_argument("digit function returned " + std::to_string(d) +
                                    " at position " + std::to_string(i));
      scaled = scaled * 10 + d;
    }
    return Truncation{k, scaled};
  }

private:
  BigInt x0_;
  std::function<int(int)> digits_;
  std::optional<std::vector<int>> tail_;
};

class SqrtImpl final : public StreamImpl {
public:
  explicit SqrtImpl(BigInt n) : n_(std::move(n)) {}

  std::optional<ExactBacking> exact() const override {
    BigInt root = isqrt(n_);
    if (root * root == n_) return ExactBacking(Rational(root), true);
    return std::nullopt;
  }
  std::optional<Rational> exact_square() const override { return Rational(n_); }
  std::string describe() const override { return "sqrt(" + n_.str() + ")"; }

protected:
  // Digit-by-digit search, keeping the defining strict inequality
  // scaled^2 < n * 10^(2k) at every step.
  Truncation compute(int k, const std::optional<Truncation>& best) override {
    BigInt scaled;
    int from;
    if (best) {
      scaled = best->scaled;
      from = best->precision + 1;
    } else {
      BigInt lo = 0, hi = n_;  // integer part: largest a with a^2 < n
      while (lo < hi) {
        BigInt mid = (lo + hi + 1) / 2;
        if (mid * mid < n_)
          lo = mid;
        else
          hi = mid - 1;
      }
      scaled = lo;
      from = 1;
    }
    BigInt target = n_ * pow10(2 * (best ? best->precision : 0));
    for (int i = from; i <= k; ++i) {
      target *= 100;
      scaled *= 10;
      for (int d = 9; d >= 1; --d) {
        BigInt cand = scaled + d;
        if (cand * cand < target) {
          scaled = cand;
          break;
        }
      }
    }
    return Truncation{k, scaled};
  }

private:
  BigInt n_;
};

class SurdImpl final : public StreamImpl {
public:
  explicit SurdImpl(Rational c) : c_(std::move(c)) {}

  std::optional<Rational> exact_square() const override { return c_; }
  std::string describe() const override { return "sqrt(" + c_.to_string() + ")"; }

protected:
  Truncation compute(int k, const std::optional<Truncation>&) override {
    // floor(sqrt(p/q)) == isqrt(floor(p/q)), applied at scale 10^(2k).
    return Truncation{k, isqrt(floor_div(c_.num() * pow10(2 * k), c_.den()))};
  }

private:
  Rational c_;
};

class PsiImpl final : public StreamImpl {
public:
  explicit PsiImpl(DecimalStream operand) : operand_(std::move(operand)) {}

  const DecimalStream& operand() const { return operand_; }

  std::optional<ExactBacking> exact() const override {
    if (auto e = operand_.exact()) return e->psi();
    return std::nullopt;
  }
  std::optional<std::vector<int>> declared_tail() const override {
    if (auto t = operand_.declared_tail()) {
      for (int& d : *t) d = 9 - d;
      return t;
    }
    return std::nullopt;
  }
  std::string describe() const override { return "psi(" + operand_.describe() + ")"; }

protected:
  Truncation compute(int k, const std::optional<Truncation>&) override {
    try {
      return trunc_psi(operand_.truncation(k));
    } catch (const UnresolvedPrecision& e) {
      throw UnresolvedPrecision(k, e.reached, -e.hi, -e.lo);
    }
  }

private:
  DecimalStream operand_;
};

}  // namespace
}  // namespace detail

DecimalStream from_rational(const Rational& r) {
  return from_exact(ExactBacking(r, false), "rational " + r.to_string());
}

DecimalStream from_exact(const ExactBacking& backing, const std::string& tag) {
  return DecimalStream(std::make_shared<detail::ExactImpl>(backing, tag));
}

DecimalStream from_digit_function(const BigInt& x0, std::function<int(int)> digits,
                                  std::optional<std::vector<int>> declared_period) {
  if (declared_period && declared_period->empty())
    throw std::invalid_argument("from_digit_function: declared period must be non-empty");
  return DecimalStream(
      std::make_shared<detail::DigitFunctionImpl>(x0, std::move(digits), std::move(declared_period)));
}

DecimalStream sqrt_stream(const BigInt& n) {
  if (n < 1) throw std::invalid_argument("sqrt_stream: n must be >= 1");
  return DecimalStream(std::make_shared<detail::SqrtImpl>(n));
}

DecimalStream surd_stream(const Rational& c) {
  if (!(c > Rational(0))) throw std::invalid_argument("surd_stream: argument must be positive");
  return DecimalStream(std::make_shared<detail::SurdImpl>(c));
}

Truncation truncate(const DecimalStream& x, int k) { return x.truncation(k); }

IntervalEnclosure stream_enclosure(const DecimalStream& x, int k) {
  try {
    Rational v = x.truncation(k).value();
    return IntervalEnclosure{v, v + Rational(1, pow10(k))};
  } catch (const UnresolvedPrecision& e) {
    return IntervalEnclosure{e.lo, e.hi};
  }
}

DecimalStream psi(const DecimalStream& x) {
  // Involution: unwrap a double application so psi(psi(x)) is x itself.
  if (auto* p = dynamic_cast<detail::PsiImpl*>(x.impl().get())) return p->operand();
  return DecimalStream(std::make_shared<detail::PsiImpl>(x));
}

int sign(const DecimalStream& x) {
  TruncationRange r = x.truncation_range(0);
  if (r.lo >= 0) return 0;
  if (r.hi <= -1) return 1;
  // Integer part straddles -1/0: the value is within a grid step of zero and
  // its sign is not observable at this budget.
  throw UnresolvedPrecision(0, 0, Rational(r.lo), Rational(r.hi + 1));
}

DecimalStream abs(const DecimalStream& x) { return sign(x) == 0 ? x : psi(x); }

ComparisonOutcome compare_upto(const DecimalStream& x, const DecimalStream& y, int k) {
  TruncationRange rx = x.truncation_range(k);
  TruncationRange ry = y.truncation_range(k);
  if (ry.lo - rx.hi >= 2) return {ComparisonOutcome::Kind::StrictlyLess, k};
  if (rx.lo - ry.hi >= 2) return {ComparisonOutcome::Kind::StrictlyGreater, k};
  if (rx.hi - ry.lo <= 1 && ry.hi - rx.lo <= 1) return {ComparisonOutcome::Kind::Tied, k};
  throw UnresolvedPrecision(k, k, Rational(rx.lo, pow10(k)), Rational(rx.hi + 1, pow10(k)));
}

bool decide_equiv_rational(const DecimalStream& x, const DecimalStream& y) {
  auto ex = x.exact();
  auto ey = y.exact();
  if (!ex || !ey)
    throw std::invalid_argument(
        "decide_equiv_rational: needs exactly-backed streams; use compare_upto");
  return ex->value == ey->value;
}

Tail classify_tail(const DecimalStream& x) {
  if (auto e = x.exact()) {
    if (e->nines) return Tail::R9;
    PeriodicDecimal p = detect_period(e->value);
    if (p.period.size() == 1 && p.period[0] == 0) return Tail::QF;
    return Tail::Other;
  }
  if (auto t = x.declared_tail()) {
    bool all9 = true, all0 = true;
    for (int d : *t) {
      all9 = all9 && d == 9;
      all0 = all0 && d == 0;
    }
    if (all9) return Tail::R9;
    if (all0) return Tail::QF;
    return Tail::Other;
  }
  throw std::invalid_argument("classify_tail: no tail information on this stream");
}

}  // namespace reals

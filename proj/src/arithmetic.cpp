#include "reals/arithmetic.hpp"

namespace reals {
namespace {

using detail::StreamImpl;

// Representative produced by a monotone-from-below limit with value v:
// the terminating representative when some partial attains v, otherwise the
// nines tail (which only exists for terminating decimals).
ExactBacking limit_from_below(const Rational& v, bool attained) {
  if (attained) return ExactBacking(v, false);
  return ExactBacking(v, v.is_finite_decimal());
}

// Commit the floor of the derived value at precision m: sound iff both
// enclosure endpoints land in the same grid cell. This never commits across a
// grid point approached from below, which is exactly what the limit
// representation requires.
std::optional<BigInt> shared_floor(const IntervalEnclosure& e, int m) {
  BigInt dlo = floor_scaled(e.lo, m);
  if (dlo == floor_scaled(e.hi, m)) return dlo;
  return std::nullopt;
}

class AddImpl final : public StreamImpl {
public:
  AddImpl(DecimalStream x, DecimalStream y, int lookahead)
      : x_(std::move(x)), y_(std::move(y)), lookahead_(lookahead) {}

  std::string describe() const override {
    return "(" + x_.describe() + " + " + y_.describe() + ")";
  }

protected:
  Truncation compute(int m, const std::optional<Truncation>&) override {
    IntervalEnclosure e;
    int k = m;
    for (; k <= m + lookahead_; ++k) {
      IntervalEnclosure ex = stream_enclosure(x_, k);
      IntervalEnclosure ey = stream_enclosure(y_, k);
      e = IntervalEnclosure{ex.lo + ey.lo, ex.hi + ey.hi};
      if (auto d = shared_floor(e, m)) return Truncation{m, *d};
    }
    throw UnresolvedPrecision(m, k - 1, e.lo, e.hi);
  }

private:
  DecimalStream x_, y_;
  int lookahead_;
};

// Product of two non-negative streams; the sign wrap lives outside.
class MulAbsImpl final : public StreamImpl {
public:
  MulAbsImpl(DecimalStream a, DecimalStream b, int lookahead)
      : a_(std::move(a)), b_(std::move(b)), lookahead_(lookahead) {}

  std::string describe() const override {
    return "(" + a_.describe() + " * " + b_.describe() + ")";
  }

protected:
  Truncation compute(int m, const std::optional<Truncation>&) override {
    IntervalEnclosure e;
    int k = m;
    for (; k <= m + lookahead_; ++k) {
      IntervalEnclosure ea = stream_enclosure(a_, k);
      IntervalEnclosure eb = stream_enclosure(b_, k);
      if (ea.lo.is_negative()) ea.lo = Rational(0);
      if (eb.lo.is_negative()) eb.lo = Rational(0);
      e = IntervalEnclosure{ea.lo * eb.lo, ea.hi * eb.hi};
      if (auto d = shared_floor(e, m)) return Truncation{m, *d};
    }
    throw UnresolvedPrecision(m, k - 1, e.lo, e.hi);
  }

private:
  DecimalStream a_, b_;
  int lookahead_;
};

// Greatest lower bound of 1/[a]_n for a non-negative stream a certified to
// stay at or above 10^-witness.
class RecipAbsImpl final : public StreamImpl {
public:
  RecipAbsImpl(DecimalStream a, int witness, int lookahead)
      : a_(std::move(a)), witness_(witness), lookahead_(lookahead) {}

  std::string describe() const override { return "recip(" + a_.describe() + ")"; }

protected:
  Truncation compute(int m, const std::optional<Truncation>&) override {
    Rational floor_bound(1, pow10(witness_));
    IntervalEnclosure e;
    int start = m > witness_ ? m : witness_;
    int n = start;
    for (; n <= start + lookahead_; ++n) {
      IntervalEnclosure ea = stream_enclosure(a_, n);
      if (ea.hi < floor_bound)
        throw InvalidWitness("reciprocal: |x| fell below the certified bound");
      if (ea.lo < floor_bound) ea.lo = floor_bound;
      e = IntervalEnclosure{ea.hi.reciprocal(), ea.lo.reciprocal()};
      if (auto d = shared_floor(e, m)) return Truncation{m, *d};
    }
    throw UnresolvedPrecision(m, n - 1, e.lo, e.hi);
  }

private:
  DecimalStream a_;
  int witness_;
  int lookahead_;
};

// Rational r with r^2 == c, if any.
std::optional<Rational> rational_sqrt(const Rational& c) {
  if (c.is_negative()) return std::nullopt;
  BigInt rn = isqrt(c.num());
  BigInt rd = isqrt(c.den());
  if (rn * rn == c.num() && rd * rd == c.den()) return Rational(rn, rd);
  return std::nullopt;
}

// Inner product of two non-negative streams: exact/surd fast paths, interval
// path otherwise.
DecimalStream mul_abs(const DecimalStream& a, const DecimalStream& b,
                      const ResolutionBudget& budget) {
  auto ea = a.exact();
  auto eb = b.exact();
  if (ea && eb) {
    bool attained = (ea->deficit_vanishes() && eb->deficit_vanishes()) ||
                    (ea->deficit_vanishes() && ea->value.is_zero()) ||
                    (eb->deficit_vanishes() && eb->value.is_zero());
    return from_exact(limit_from_below(ea->value * eb->value, attained),
                      "(" + a.describe() + " * " + b.describe() + ")");
  }
  if (ea && ea->deficit_vanishes() && ea->value.is_zero())
    return from_exact(ExactBacking(Rational(0), false), "zero product");
  if (eb && eb->deficit_vanishes() && eb->value.is_zero())
    return from_exact(ExactBacking(Rational(0), false), "zero product");

  auto sa = a.exact_square();
  auto sb = b.exact_square();
  if (sa && sb && !ea && !eb) {
    // Both operands are strict-undershoot roots, so the product sequence
    // stays strictly below sqrt(sa*sb).
    Rational prod = *sa * *sb;
    if (auto r = rational_sqrt(prod)) return from_exact(limit_from_below(*r, false), "root product");
    return surd_stream(prod);
  }
  if (sa && eb && !eb->value.is_zero()) return surd_stream(eb->value * eb->value * *sa);
  if (sb && ea && !ea->value.is_zero()) return surd_stream(ea->value * ea->value * *sb);

  return DecimalStream(std::make_shared<MulAbsImpl>(a, b, budget.lookahead()));
}

}  // namespace

DecimalStream add(const DecimalStream& x, const DecimalStream& y, const ResolutionBudget& budget) {
  auto ex = x.exact();
  auto ey = y.exact();
  if (ex && ey) {
    bool attained = ex->deficit_vanishes() && ey->deficit_vanishes();
    return from_exact(limit_from_below(ex->value + ey->value, attained),
                      "(" + x.describe() + " + " + y.describe() + ")");
  }
  return DecimalStream(std::make_shared<AddImpl>(x, y, budget.lookahead()));
}

DecimalStream mul(const DecimalStream& x, const DecimalStream& y, const ResolutionBudget& budget) {
  int sigma = (sign(x) + sign(y)) % 2;
  DecimalStream inner = mul_abs(abs(x), abs(y), budget);
  return sigma == 0 ? inner : psi(inner);
}

DecimalStream reciprocal(const DecimalStream& x, int witness, const ResolutionBudget& budget) {
  if (witness < 0) throw std::invalid_argument("reciprocal: witness must be >= 0");
  int s = sign(x);
  DecimalStream a = abs(x);
  if (a.truncation(witness).scaled < 1)
    throw InvalidWitness("reciprocal: |x| is below 10^-" + std::to_string(witness) +
                         " at the certified precision");
  DecimalStream inner;
  if (auto ea = a.exact()) {
    // Approached from above, the greatest lower bound is always the
    // terminating representative of 1/|x|.
    inner = from_exact(ExactBacking(ea->value.reciprocal(), false),
                       "recip(" + a.describe() + ")");
  } else if (auto sa = a.exact_square()) {
    inner = surd_stream(sa->reciprocal());
  } else {
    inner = DecimalStream(std::make_shared<RecipAbsImpl>(a, witness, budget.lookahead()));
  }
  return s == 0 ? inner : psi(inner);
}

DecimalStream divide(const DecimalStream& x, const DecimalStream& y, int witness,
                     const ResolutionBudget& budget) {
  return mul(x, reciprocal(y, witness, budget), budget);
}

}  // namespace reals

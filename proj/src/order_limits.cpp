#include "reals/order_limits.hpp"

namespace reals {
namespace {

using detail::StreamImpl;

class SupImpl final : public StreamImpl {
public:
  explicit SupImpl(std::vector<DecimalStream> xs) : xs_(std::move(xs)) {}

  std::optional<ExactBacking> exact() const override {
    // With every member exactly backed, the lexicographic maximum is itself a
    // member; nines sorts below the terminating representative of the same
    // value.
    std::optional<ExactBacking> best;
    for (const auto& x : xs_) {
      auto e = x.exact();
      if (!e) return std::nullopt;
      if (!best || best->value < e->value || (best->value == e->value && best->nines && !e->nines))
        best = e;
    }
    return best;
  }

  std::string describe() const override { return "sup"; }

protected:
  Truncation compute(int k, const std::optional<Truncation>&) override {
    try {
      BigInt m = xs_.front().truncation(k).scaled;
      for (std::size_t i = 1; i < xs_.size(); ++i) {
        BigInt s = xs_[i].truncation(k).scaled;
        if (s > m) m = s;
      }
      return Truncation{k, m};
    } catch (const UnresolvedPrecision&) {
      IntervalEnclosure e = stream_enclosure(xs_.front(), k);
      for (std::size_t i = 1; i < xs_.size(); ++i) {
        IntervalEnclosure ei = stream_enclosure(xs_[i], k);
        if (ei.lo > e.lo) e.lo = ei.lo;
        if (ei.hi > e.hi) e.hi = ei.hi;
      }
      throw UnresolvedPrecision(k, k, e.lo, e.hi);
    }
  }

private:
  std::vector<DecimalStream> xs_;
};

class MonotoneLimitImpl final : public StreamImpl {
public:
  MonotoneLimitImpl(StreamSequence seq, int window, int horizon_factor)
      : seq_(std::move(seq)), window_(window), horizon_factor_(horizon_factor) {}

  std::string describe() const override { return "monotone-limit"; }

protected:
  Truncation compute(int m, const std::optional<Truncation>&) override {
    int horizon = horizon_factor_ * (m + 1);
    std::optional<BigInt> prev;
    int streak = 0;
    for (int n = 0; n < horizon; ++n) {
      BigInt t;
      try {
        t = seq_.term(n).truncation(m).scaled;
      } catch (const UnresolvedPrecision& e) {
        Rational cap = seq_.bound->truncation(m).value() + Rational(1, pow10(m));
        if (seq_.monotone == StreamSequence::Monotone::Increasing)
          throw UnresolvedPrecision(m, m, e.lo, cap);
        throw UnresolvedPrecision(m, m, seq_.bound->truncation(m).value(), e.hi);
      }
      if (prev) {
        if (seq_.monotone == StreamSequence::Monotone::Increasing && t < *prev)
          throw ContractViolation("monotone_limit: sequence decreased at index " +
                                  std::to_string(n));
        if (seq_.monotone == StreamSequence::Monotone::Decreasing && t > *prev)
          throw ContractViolation("monotone_limit: sequence increased at index " +
                                  std::to_string(n));
        streak = (t == *prev) ? streak + 1 : 1;
      } else {
        streak = 1;
      }
      prev = t;
      if (streak >= window_) return Truncation{m, t};
    }
    Rational last(*prev, pow10(m));
    Rational grid(1, pow10(m));
    if (seq_.monotone == StreamSequence::Monotone::Increasing) {
      Rational cap = seq_.bound->truncation(m).value() + grid;
      throw UnresolvedPrecision(m, m, last, cap);
    }
    throw UnresolvedPrecision(m, m, seq_.bound->truncation(m).value(), last + grid);
  }

private:
  StreamSequence seq_;
  int window_;
  int horizon_factor_;
};

}  // namespace

DecimalStream sup_finite(const std::vector<DecimalStream>& xs) {
  if (xs.empty()) throw std::invalid_argument("sup_finite: empty family");
  return DecimalStream(std::make_shared<SupImpl>(xs));
}

DecimalStream inf_finite(const std::vector<DecimalStream>& xs) {
  if (xs.empty()) throw std::invalid_argument("inf_finite: empty family");
  std::vector<DecimalStream> flipped;
  flipped.reserve(xs.size());
  for (const auto& x : xs) flipped.push_back(psi(x));
  return psi(sup_finite(flipped));
}

DecimalStream monotone_limit(const StreamSequence& seq, const ResolutionBudget&, int window,
                             int horizon_factor) {
  if (seq.monotone == StreamSequence::Monotone::None)
    throw std::invalid_argument("monotone_limit: sequence must be flagged monotone");
  if (!seq.bound) throw std::invalid_argument("monotone_limit: bound required");
  if (window < 1 || horizon_factor < 1)
    throw std::invalid_argument("monotone_limit: bad window/horizon");
  return DecimalStream(std::make_shared<MonotoneLimitImpl>(seq, window, horizon_factor));
}

IntervalEnclosure approx_limsup(const StreamSequence& seq, int start, int horizon, int k) {
  if (horizon < 1) throw std::invalid_argument("approx_limsup: horizon must be >= 1");
  BigInt m = seq.term(start).truncation(k).scaled;
  for (int i = 1; i < horizon; ++i) {
    BigInt s = seq.term(start + i).truncation(k).scaled;
    if (s > m) m = s;
  }
  Rational lo(m, pow10(k));
  return IntervalEnclosure{lo, lo + Rational(1, pow10(k))};
}

IntervalEnclosure approx_liminf(const StreamSequence& seq, int start, int horizon, int k) {
  if (horizon < 1) throw std::invalid_argument("approx_liminf: horizon must be >= 1");
  BigInt m = seq.term(start).truncation(k).scaled;
  for (int i = 1; i < horizon; ++i) {
    BigInt s = seq.term(start + i).truncation(k).scaled;
    if (s < m) m = s;
  }
  Rational lo(m, pow10(k));
  return IntervalEnclosure{lo, lo + Rational(1, pow10(k))};
}

}  // namespace reals

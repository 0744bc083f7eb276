// Finite suprema/infima, monotone limits with stabilization, and
// finite-horizon upper/lower limit enclosures.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reals/generators.hpp"
#include "reals/order_limits.hpp"

using namespace reals;

namespace {

// Independent oracle: the digitwise survivor construction of the least upper
// bound, run directly on stream truncations. At each precision the survivors
// are the members still matching every digit chosen so far.
BigInt survivor_sup_scaled(const std::vector<DecimalStream>& w, int k) {
  std::vector<const DecimalStream*> survivors;
  for (const auto& x : w) survivors.push_back(&x);
  BigInt chosen = 0;
  for (int j = 0; j <= k; ++j) {
    bool first = true;
    BigInt best;
    for (const auto* x : survivors) {
      BigInt s = x->truncation(j).scaled;
      if (first || s > best) {
        best = s;
        first = false;
      }
    }
    chosen = best;
    std::vector<const DecimalStream*> next;
    for (const auto* x : survivors)
      if (x->truncation(j).scaled == chosen) next.push_back(x);
    survivors = next;
  }
  return chosen;
}

DecimalStream nines() {
  return from_digit_function(0, [](int) { return 9; }, std::vector<int>{9});
}

}  // namespace

TEST_CASE("sup_finite: worked examples") {
  DecimalStream s = sup_finite({nines(), from_rational(Rational(1))});
  for (int k = 0; k <= 15; ++k) CHECK(s.truncation(k).scaled == pow10(k));

  DecimalStream x = sqrt_stream(2);
  DecimalStream single = sup_finite({x});
  for (int k = 0; k <= 15; ++k) CHECK(single.truncation(k) == x.truncation(k));
}

TEST_CASE("sup_finite equals the survivor-construction oracle") {
  RationalGen gen(101);
  for (int trial = 0; trial < 60; ++trial) {
    std::vector<DecimalStream> fam;
    int n = 2 + static_cast<int>(gen.raw() % 5);
    for (int i = 0; i < n; ++i) fam.push_back(from_rational(gen.next()));
    if (trial % 3 == 0) fam.push_back(sqrt_stream(1 + trial));
    DecimalStream s = sup_finite(fam);
    for (int k = 0; k <= 30; k += 6) CHECK(s.truncation(k).scaled == survivor_sup_scaled(fam, k));
  }
  CHECK_THROWS_AS(sup_finite({}), std::invalid_argument);
}

TEST_CASE("inf_finite is the psi-dual and handles worked examples") {
  DecimalStream i = inf_finite({from_rational(Rational(1, 3)), from_rational(Rational(2, 3))});
  for (int k = 1; k <= 12; ++k) CHECK(i.truncation(k).scaled == (pow10(k) - 1) / 3);

  RationalGen gen(103);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<DecimalStream> fam = {from_rational(gen.next()), from_rational(gen.next()),
                                      from_rational(gen.next())};
    std::vector<DecimalStream> flipped;
    for (const auto& x : fam) flipped.push_back(psi(x));
    DecimalStream lhs = inf_finite(fam);
    DecimalStream rhs = psi(sup_finite(flipped));
    for (int k : {0, 7, 13}) CHECK(lhs.truncation(k) == rhs.truncation(k));
    // lemma: inf <= sup at every truncation
    DecimalStream s = sup_finite(fam);
    for (int k : {0, 7, 13}) CHECK(lhs.truncation(k).scaled <= s.truncation(k).scaled);
  }
}

TEST_CASE("sup/inf monotone under family extension") {
  RationalGen gen(107);
  for (int trial = 0; trial < 40; ++trial) {
    std::vector<DecimalStream> small = {from_rational(gen.next()), from_rational(gen.next())};
    std::vector<DecimalStream> large = small;
    large.push_back(from_rational(gen.next()));
    for (int k : {0, 6}) {
      CHECK(sup_finite(small).truncation(k).scaled <= sup_finite(large).truncation(k).scaled);
      CHECK(inf_finite(small).truncation(k).scaled >= inf_finite(large).truncation(k).scaled);
    }
  }
}

TEST_CASE("monotone_limit: truncation sequence of x converges to x") {
  DecimalStream x = sqrt_stream(2);
  StreamSequence seq;
  seq.term = [x](int n) { return from_rational(x.truncation(n).value()); };
  seq.monotone = StreamSequence::Monotone::Increasing;
  seq.bound = from_rational(Rational(2));
  DecimalStream lim = monotone_limit(seq);
  for (int m = 0; m <= 12; ++m) CHECK(lim.truncation(m) == x.truncation(m));
}

TEST_CASE("monotone_limit: constants, nines tails, and contract violations") {
  StreamSequence constant;
  constant.term = [](int) { return from_rational(Rational(5, 2)); };
  constant.monotone = StreamSequence::Monotone::Increasing;
  constant.bound = from_rational(Rational(3));
  DecimalStream c = monotone_limit(constant);
  for (int m = 0; m <= 10; ++m) CHECK(c.truncation(m).scaled == floor_scaled(Rational(5, 2), m));

  // term(n) = 1 - 10^-n increases to the nines representative of 1
  StreamSequence toward_one;
  toward_one.term = [](int n) { return from_rational(Rational(pow10(n) - 1, pow10(n))); };
  toward_one.monotone = StreamSequence::Monotone::Increasing;
  toward_one.bound = from_rational(Rational(1));
  DecimalStream n1 = monotone_limit(toward_one);
  for (int m = 0; m <= 10; ++m) CHECK(n1.truncation(m).scaled == pow10(m) - 1);

  StreamSequence lying;
  lying.term = [](int n) { return from_rational(Rational(n % 2 ? 1 : 2)); };
  lying.monotone = StreamSequence::Monotone::Increasing;
  lying.bound = from_rational(Rational(3));
  CHECK_THROWS_AS(monotone_limit(lying).truncation(2), ContractViolation);

  StreamSequence unflagged;
  unflagged.term = [](int) { return from_rational(Rational(1)); };
  CHECK_THROWS_AS(monotone_limit(unflagged), std::invalid_argument);
}

TEST_CASE("monotone_limit reports unresolved when stabilization is out of reach") {
  // 1 - 1/(n+2) crawls upward too slowly to stabilize 3 digits within the
  // default horizon.
  StreamSequence slow;
  slow.term = [](int n) { return from_rational(Rational(1) - Rational(1, n + 2)); };
  slow.monotone = StreamSequence::Monotone::Increasing;
  slow.bound = from_rational(Rational(1));
  DecimalStream lim = monotone_limit(slow);
  CHECK_THROWS_AS(lim.truncation(3), UnresolvedPrecision);
}

TEST_CASE("approx_limsup/liminf: worked enclosures and duality") {
  StreamSequence constant;
  constant.term = [](int) { return from_rational(Rational(5, 2)); };
  IntervalEnclosure e = approx_limsup(constant, 0, 5, 3);
  CHECK(e.lo == Rational(5, 2));
  CHECK(e.hi == Rational(5, 2) + Rational(1, 1000));

  StreamSequence alternating;
  alternating.term = [](int n) { return from_rational(Rational(n % 2 ? -1 : 1)); };
  e = approx_limsup(alternating, 0, 4, 2);
  CHECK(e.lo == Rational(1));
  IntervalEnclosure lo = approx_liminf(alternating, 0, 4, 2);
  CHECK(lo.lo == Rational(-1));

  StreamSequence harmonic;
  harmonic.term = [](int n) { return from_rational(Rational(1, n)); };
  e = approx_limsup(harmonic, 1, 10, 2);
  CHECK(e.lo == Rational(1));
  CHECK(e.hi == Rational(101, 100));

  // psi-duality at matched window: liminf(xs) = -limsup(psi xs) as intervals
  RationalGen gen(113);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> vals;
    for (int i = 0; i < 6; ++i) vals.push_back(gen.next());
    StreamSequence seq;
    seq.term = [vals](int n) { return from_rational(vals[n % vals.size()]); };
    StreamSequence flipped;
    flipped.term = [vals](int n) { return psi(from_rational(vals[n % vals.size()])); };
    int k = 4;
    IntervalEnclosure a = approx_liminf(seq, 0, 6, k);
    IntervalEnclosure b = approx_limsup(flipped, 0, 6, k);
    CHECK(a.lo == -b.hi);
    CHECK(a.hi == -b.lo);
  }
}

TEST_CASE("pointwise order carries to limsup/liminf windows") {
  RationalGen gen(127);
  for (int trial = 0; trial < 30; ++trial) {
    std::vector<Rational> base;
    for (int i = 0; i < 5; ++i) base.push_back(gen.next());
    StreamSequence low, high;
    low.term = [base](int n) { return from_rational(base[n % base.size()]); };
    high.term = [base](int n) { return from_rational(base[n % base.size()] + Rational(1, 7)); };
    IntervalEnclosure a = approx_limsup(low, 0, 5, 3);
    IntervalEnclosure b = approx_limsup(high, 0, 5, 3);
    CHECK(a.lo <= b.lo);
    IntervalEnclosure c = approx_liminf(low, 0, 5, 3);
    IntervalEnclosure d = approx_liminf(high, 0, 5, 3);
    CHECK(c.lo <= d.lo);
  }
}

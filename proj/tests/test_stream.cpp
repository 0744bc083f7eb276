// Stream constructors, the psi/sign/abs structure maps, comparison and
// equivalence testing.
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "reals/generators.hpp"
#include "reals/stream.hpp"

#include <thread>

using namespace reals;

namespace {

DecimalStream nines_digits() {
  return from_digit_function(0, [](int) { return 9; }, std::vector<int>{9});
}

bool is_triangular(int n) {
  int s = 0;
  for (int i = 1; s < n; ++i) s += i;
  return s == n;
}

// Independent square root oracle: floor(sqrt(n * 10^(2k))).
BigInt sqrt_oracle(const BigInt& n, int k) { return isqrt(n * pow10(2 * k)); }

}  // namespace

TEST_CASE("from_rational matches long division truncations") {
  DecimalStream x = from_rational(Rational(5, 2));
  CHECK(x.truncation(3).scaled == 2500);
  CHECK(from_rational(Rational(0)).truncation(6).scaled == 0);
  CHECK(from_rational(Rational(-40, 3)).truncation(2).scaled == -1334);

  RationalGen gen(11);
  for (int i = 0; i < 100; ++i) {
    Rational r = gen.next();
    DecimalStream s = from_rational(r);
    for (int k : {0, 3, 11}) CHECK(s.truncation(k) == long_division_truncate(r, k));
  }
}

TEST_CASE("from_digit_function assembles digits and validates them") {
  DecimalStream n9 = nines_digits();
  for (int k = 1; k <= 10; ++k) CHECK(n9.truncation(k).scaled == pow10(k) - 1);

  DecimalStream one = from_digit_function(1, [](int) { return 0; });
  CHECK(one.truncation(5).scaled == 100000);

  DecimalStream bad = from_digit_function(0, [](int i) { return i == 3 ? 12 : 0; });
  CHECK_NOTHROW(bad.truncation(2));
  CHECK_THROWS_AS(bad.truncation(5), std::invalid_argument);
}

TEST_CASE("a non-periodic digit stream: ones at triangular positions") {
  DecimalStream t = from_digit_function(0, [](int i) { return is_triangular(i) ? 1 : 0; });
  Truncation tr = t.truncation(15);
  std::string digits;
  for (int i = 1; i <= 15; ++i) digits += static_cast<char>('0' + tr.digit(i));
  CHECK(digits == "101001000100001");

  // No (pre, per) window with pre <= 8, per <= 8 explains the first 60 digits.
  Truncation deep = t.truncation(60);
  for (int pre = 0; pre <= 8; ++pre) {
    for (int per = 1; per <= 8; ++per) {
      bool periodic = true;
      for (int i = pre + 1; i + per <= 60 && periodic; ++i)
        periodic = deep.digit(i) == deep.digit(i + per);
      CHECK_FALSE(periodic);
    }
  }
}

TEST_CASE("sqrt_stream digits match the integer square root oracle") {
  DecimalStream r2 = sqrt_stream(2);
  CHECK(r2.truncation(0).scaled == 1);
  CHECK(r2.truncation(4).scaled == 14142);
  CHECK(r2.truncation(8).scaled == 141421356);
  for (int k = 0; k <= 40; ++k) CHECK(r2.truncation(k).scaled == sqrt_oracle(2, k));

  for (BigInt n : {BigInt(3), BigInt(5), BigInt(7), BigInt(123456789)}) {
    DecimalStream s = sqrt_stream(n);
    for (int k = 0; k <= 25; ++k) {
      BigInt scaled = s.truncation(k).scaled;
      CHECK(scaled == sqrt_oracle(n, k));
      // defining inequality: scaled^2 < n*10^2k <= (scaled+1)^2
      CHECK(scaled * scaled < n * pow10(2 * k));
      CHECK(n * pow10(2 * k) <= (scaled + 1) * (scaled + 1));
    }
  }
}

TEST_CASE("sqrt_stream of a perfect square is the nines tail") {
  DecimalStream r4 = sqrt_stream(4);
  for (int k = 0; k <= 20; ++k) CHECK(r4.truncation(k).scaled == 2 * pow10(k) - 1);
  DecimalStream r1 = sqrt_stream(1);
  for (int k = 1; k <= 20; ++k) CHECK(r1.truncation(k).scaled == pow10(k) - 1);
  auto e = r4.exact();
  REQUIRE(e.has_value());
  CHECK(e->value == Rational(2));
  CHECK(e->nines);
}

TEST_CASE("psi: truncation identity, involution, worked values") {
  DecimalStream z = from_rational(Rational(0));
  DecimalStream pz = psi(z);
  for (int k = 0; k <= 10; ++k) {
    CHECK(pz.truncation(k).scaled == -1);  // (-1).999...
  }

  CHECK(psi(from_rational(Rational(5, 2))).truncation(2).scaled == -251);

  RationalGen gen(5);
  std::vector<DecimalStream> pool = {from_rational(gen.next()), sqrt_stream(2), nines_digits()};
  for (const auto& x : pool) {
    DecimalStream ppx = psi(psi(x));
    for (int k = 0; k <= 12; ++k) {
      CHECK(psi(x).truncation(k).scaled == -x.truncation(k).scaled - 1);
      CHECK(ppx.truncation(k) == x.truncation(k));
    }
  }
}

TEST_CASE("sign and abs") {
  CHECK(sign(from_rational(Rational(0))) == 0);
  CHECK(sign(psi(from_rational(Rational(0)))) == 1);  // (-1).999...
  CHECK(sign(from_rational(Rational(-1, 2))) == 1);
  CHECK(sign(sqrt_stream(2)) == 0);

  // abs((-1).999...) = 0.000...
  DecimalStream a = abs(psi(from_rational(Rational(0))));
  for (int k = 0; k <= 8; ++k) CHECK(a.truncation(k).scaled == 0);

  RationalGen gen(17);
  for (int i = 0; i < 100; ++i) {
    DecimalStream x = from_rational(gen.next());
    CHECK(sign(psi(x)) == 1 - sign(x));
    // ||psi(x)|| == ||x||, truncation for truncation
    DecimalStream a1 = abs(x), a2 = abs(psi(x));
    for (int k : {0, 5, 9}) CHECK(a1.truncation(k) == a2.truncation(k));
    // Psi^(sign x)(||x||) == x
    DecimalStream back = sign(x) == 0 ? abs(x) : psi(abs(x));
    for (int k : {0, 5, 9}) CHECK(back.truncation(k) == x.truncation(k));
  }
}

TEST_CASE("compare_upto: worked examples and order reversal") {
  DecimalStream n9 = nines_digits();
  DecimalStream one = from_rational(Rational(1));
  for (int k = 0; k <= 50; ++k) CHECK(compare_upto(n9, one, k).tied());

  CHECK(compare_upto(from_rational(Rational(1, 3)), from_rational(Rational(2, 3)), 1)
            .strictly_less());
  CHECK(compare_upto(sqrt_stream(2), sqrt_stream(2), 7).tied());

  RationalGen gen(23);
  for (int i = 0; i < 150; ++i) {
    DecimalStream x = from_rational(gen.next());
    DecimalStream y = from_rational(gen.next());
    for (int k : {2, 8}) {
      ComparisonOutcome c = compare_upto(x, y, k);
      ComparisonOutcome d = compare_upto(psi(y), psi(x), k);
      CHECK(c.kind == d.kind);
    }
  }
}

TEST_CASE("decide_equiv_rational") {
  CHECK(decide_equiv_rational(from_rational(Rational(5, 2)), from_rational(Rational(5, 2))));
  CHECK_FALSE(decide_equiv_rational(from_rational(Rational(1, 3)), from_rational(Rational(2, 3))));
  CHECK(decide_equiv_rational(from_rational(Rational(23, 99)),
                              from_rational(from_periodic(PeriodicDecimal{0, {}, {2, 3}}))));
  CHECK_THROWS_AS(decide_equiv_rational(nines_digits(), from_rational(Rational(1))),
                  std::invalid_argument);

  // soundness: equivalent rationals stay tied at every precision
  RationalGen gen(41);
  for (int i = 0; i < 20; ++i) {
    Rational r = gen.next();
    DecimalStream x = from_rational(r), y = from_rational(r);
    for (int k = 0; k <= 50; k += 5) CHECK(compare_upto(x, y, k).tied());
  }
}

TEST_CASE("classify_tail") {
  CHECK(classify_tail(from_rational(Rational(5, 2))) == Tail::QF);
  CHECK(classify_tail(from_rational(Rational(1, 3))) == Tail::Other);
  CHECK(classify_tail(nines_digits()) == Tail::R9);
  CHECK(classify_tail(from_digit_function(0, [](int) { return 0; }, std::vector<int>{0})) ==
        Tail::QF);
  CHECK(classify_tail(from_digit_function(0, [](int) { return 3; }, std::vector<int>{3})) ==
        Tail::Other);
  CHECK_THROWS_AS(classify_tail(from_digit_function(0, [](int) { return 3; })),
                  std::invalid_argument);
  // psi flips a declared tail
  CHECK(classify_tail(psi(nines_digits())) == Tail::QF);
}

TEST_CASE("no-gap pairs with declared tails classify as R9/QF") {
  // 0.4999... and 0.5000... are tied at every precision; their tails differ.
  DecimalStream low = from_digit_function(0, [](int i) { return i == 1 ? 4 : 9; },
                                          std::vector<int>{9});
  DecimalStream high = from_digit_function(0, [](int i) { return i == 1 ? 5 : 0; },
                                           std::vector<int>{0});
  for (int k = 0; k <= 50; ++k) CHECK(compare_upto(low, high, k).tied());
  CHECK(classify_tail(low) == Tail::R9);
  CHECK(classify_tail(high) == Tail::QF);
}

TEST_CASE("nesting holds across constructors at sampled precisions") {
  RationalGen gen(61);
  std::vector<DecimalStream> pool;
  for (int i = 0; i < 40; ++i) pool.push_back(from_rational(gen.next()));
  pool.push_back(sqrt_stream(2));
  pool.push_back(sqrt_stream(31));
  pool.push_back(nines_digits());
  pool.push_back(psi(sqrt_stream(5)));
  pool.push_back(from_digit_function(3, [](int i) { return (i * 7) % 10; }));

  int samples = 0;
  for (const auto& x : pool) {
    for (int k = 0; k < 23; ++k) {
      CHECK(floor_div(x.truncation(k + 1).scaled, 10) == x.truncation(k).scaled);
      ++samples;
    }
  }
  CHECK(samples >= 1000);
}

TEST_CASE("queries are deterministic and safe under concurrent use") {
  DecimalStream s = sqrt_stream(7);
  BigInt expect = s.truncation(30).scaled;
  std::vector<std::thread> threads;
  std::vector<BigInt> results(4);
  for (int t = 0; t < 4; ++t)
    threads.emplace_back([&, t] { results[t] = sqrt_stream(7).truncation(30).scaled; });
  for (auto& th : threads) th.join();
  for (const auto& r : results) CHECK(r == expect);

  // hammer one shared stream
  DecimalStream shared = sqrt_stream(13);
  std::vector<std::thread> hammer;
  std::array<bool, 4> ok{};
  for (int t = 0; t < 4; ++t)
    hammer.emplace_back([&, t] {
      bool good = true;
      for (int k = 0; k <= 40; ++k)
        good = good && shared.truncation(k).scaled == sqrt_oracle(13, k);
      ok[t] = good;
    });
  for (auto& th : hammer) th.join();
  for (bool b : ok) CHECK(b);
}

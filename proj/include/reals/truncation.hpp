// Finite decimal truncations (scaled integers, floor semantics) and
// eventually-periodic decimal expansions of rationals.
#pragma once

#include "reals/rational.hpp"

#include <vector>

namespace reals {

// Value = scaled / 10^precision. The integer part may be negative while the
// fractional digits stay in 0..9, so -40/3 truncates to (-14).66 rather than
// -13.34 at two digits.
struct Truncation {
  int precision = 0;
  BigInt scaled;

  Rational value() const { return Rational(scaled, pow10(precision)); }
  BigInt integer_part() const { return floor_div(scaled, pow10(precision)); }

  // i-th fractional digit, 1 <= i <= precision.
  int digit(int i) const;

  // Drop to a coarser precision m <= precision.
  Truncation refine_down(int m) const;

  friend bool operator==(const Truncation& a, const Truncation& b) {
    return a.precision == b.precision && a.scaled == b.scaled;
  }
};

// floor(r * 10^k) / 10^k; agrees with the classical long-division digit
// recursion.
Truncation long_division_truncate(const Rational& r, int k);

// Exact sum at a common precision; mismatched precisions are rejected.
Truncation trunc_add(const Truncation& a, const Truncation& b);

// Nines complement at fixed precision: scaled -> -scaled - 1. Digitwise this
// is (-1-x0).(9-x1)(9-x2)...
Truncation trunc_psi(const Truncation& a);

struct PeriodicDecimal {
  BigInt integer_part;
  std::vector<int> preperiod;
  std::vector<int> period;  // non-empty; "0" marks a terminating expansion

  std::string to_string() const;  // e.g. "0.(142857)", "2.5(0)", "(-14).(6)"
};

// Minimal pre-period and minimal period of r's expansion, found at the first
// repeated long-division remainder. The period never exceeds the denominator
// and is never an all-nines block.
PeriodicDecimal detect_period(const Rational& r);

// Exact rational described by the expansion. All-nines periods are rejected:
// no rational has a nines tail.
Rational from_periodic(const PeriodicDecimal& p);

}  // namespace reals

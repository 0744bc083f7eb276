#include "reals/truncation.hpp"

#include <map>
#include <sstream>

namespace reals {

int Truncation::digit(int i) const {
  if (i < 1 || i > precision) throw std::invalid_argument("Truncation::digit: index out of range");
  BigInt d = floor_div(scaled, pow10(precision - i)) % 10;
  if (d < 0) d += 10;
  return static_cast<int>(d);
}

Truncation Truncation::refine_down(int m) const {
  if (m < 0 || m > precision) throw std::invalid_argument("refine_down: bad precision");
  return Truncation{m, floor_div(scaled, pow10(precision - m))};
}

Truncation long_division_truncate(const Rational& r, int k) {
  if (k < 0) throw std::invalid_argument("long_division_truncate: negative precision");
  return Truncation{k, floor_scaled(r, k)};
}

Truncation trunc_add(const Truncation& a, const Truncation& b) {
  if (a.precision != b.precision)
    throw std::invalid_argument("trunc_add: precision mismatch");
  return Truncation{a.precision, a.scaled + b.scaled};
}

Truncation trunc_psi(const Truncation& a) { return Truncation{a.precision, -a.scaled - 1}; }

std::string PeriodicDecimal::to_string() const {
  std::ostringstream os;
  if (integer_part < 0)
    os << "(" << integer_part.str() << ")";
  else
    os << integer_part.str();
  os << ".";
  for (int d : preperiod) os << d;
  os << "(";
  for (int d : period) os << d;
  os << ")";
  return os.str();
}

PeriodicDecimal detect_period(const Rational& r) {
  PeriodicDecimal out;
  out.integer_part = r.floor();
  // beta_i are the long-division remainders, 0 <= beta < den; the digit after
  // position i is floor(10*beta_i / den). The remainder sequence is a path
  // into a cycle, so the first repeat pins both minimal tail and block.
  BigInt den = r.den();
  BigInt beta = r.num() - out.integer_part * den;
  std::map<BigInt, int> seen;
  std::vector<int> digits;
  int pos = 0;
  while (true) {
    auto it = seen.find(beta);
    if (it != seen.end()) {
      int start = it->second;
      out.preperiod.assign(digits.begin(), digits.begin() + start);
      out.period.assign(digits.begin() + start, digits.end());
      return out;
    }
    seen.emplace(beta, pos);
    beta *= 10;
    BigInt d = beta / den;
    beta -= d * den;
    digits.push_back(static_cast<int>(d));
    ++pos;
  }
}

Rational from_periodic(const PeriodicDecimal& p) {
  if (p.period.empty()) throw std::invalid_argument("from_periodic: empty period");
  bool all_nines = true;
  for (int d : p.period) {
    if (d < 0 || d > 9) throw std::invalid_argument("from_periodic: digit out of range");
    if (d != 9) all_nines = false;
  }
  for (int d : p.preperiod)
    if (d < 0 || d > 9) throw std::invalid_argument("from_periodic: digit out of range");
  if (all_nines)
    throw std::invalid_argument("from_periodic: all-nines period denotes no rational");

  int k = static_cast<int>(p.preperiod.size());
  int s = static_cast<int>(p.period.size());
  BigInt pre = 0;
  for (int d : p.preperiod) pre = pre * 10 + d;
  BigInt per = 0;
  for (int d : p.period) per = per * 10 + d;
  // z = [x]_k + (1/10^k) * per / (10^s - 1), with [x]_k = integer_part + pre/10^k.
  BigInt tenk = pow10(k);
  BigInt tens1 = pow10(s) - 1;
  return Rational((p.integer_part * tenk + pre) * tens1 + per, tenk * tens1);
}

}  // namespace reals

#include "reals/rational.hpp"

namespace reals {

BigInt pow10(int k) {
  if (k < 0) throw std::invalid_argument("pow10: negative exponent");
  BigInt r = 1;
  BigInt base = 10;
  while (k > 0) {
    if (k & 1) r *= base;
    base *= base;
    k >>= 1;
  }
  return r;
}

BigInt floor_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::invalid_argument("floor_div: divisor must be positive");
  BigInt q = a / b;  // truncates toward zero
  if (a % b != 0 && a < 0) --q;
  return q;
}

BigInt ceil_div(const BigInt& a, const BigInt& b) {
  if (b <= 0) throw std::invalid_argument("ceil_div: divisor must be positive");
  BigInt q = a / b;
  if (a % b != 0 && a > 0) ++q;
  return q;
}

BigInt isqrt(const BigInt& n) {
  if (n < 0) throw std::invalid_argument("isqrt: negative argument");
  return boost::multiprecision::sqrt(n);
}

Rational::Rational(BigInt num, BigInt den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_ == 0) throw std::invalid_argument("Rational: zero denominator");
  if (den_ < 0) {
    num_ = -num_;
    den_ = -den_;
  }
  BigInt g = boost::multiprecision::gcd(num_ < 0 ? BigInt(-num_) : num_, den_);
  if (g > 1) {
    num_ /= g;
    den_ /= g;
  }
}

bool Rational::is_finite_decimal() const {
  BigInt d = den_;
  while (d % 2 == 0) d /= 2;
  while (d % 5 == 0) d /= 5;
  return d == 1;
}

int Rational::finite_decimal_exponent() const {
  BigInt d = den_;
  int twos = 0, fives = 0;
  while (d % 2 == 0) {
    d /= 2;
    ++twos;
  }
  while (d % 5 == 0) {
    d /= 5;
    ++fives;
  }
  if (d != 1) throw std::invalid_argument("finite_decimal_exponent: not a terminating decimal");
  return twos > fives ? twos : fives;
}

Rational Rational::abs() const { return num_ < 0 ? Rational(-num_, den_) : *this; }

Rational Rational::reciprocal() const {
  if (num_ == 0) throw std::invalid_argument("reciprocal of zero");
  return Rational(den_, num_);
}

Rational operator+(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

Rational operator-(const Rational& a) { return Rational(-a.num_, a.den_); }

Rational operator*(const Rational& a, const Rational& b) {
  return Rational(a.num_ * b.num_, a.den_ * b.den_);
}

Rational operator/(const Rational& a, const Rational& b) {
  if (b.num_ == 0) throw std::invalid_argument("division by zero");
  return Rational(a.num_ * b.den_, a.den_ * b.num_);
}

std::string Rational::to_string() const {
  if (den_ == 1) return num_.str();
  return num_.str() + "/" + den_.str();
}

Rational make_rational(const BigInt& p, const BigInt& q) { return Rational(p, q); }

BigInt floor_scaled(const Rational& r, int k) {
  return floor_div(r.num() * pow10(k), r.den());
}

BigInt ceil_scaled(const Rational& r, int k) {
  return ceil_div(r.num() * pow10(k), r.den());
}

}  // namespace reals

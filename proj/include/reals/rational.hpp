// Arbitrary-precision integers and exact rationals: the decidable substrate
// everything else reduces to.
#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>
#include <utility>

namespace reals {

using BigInt = boost::multiprecision::cpp_int;

// 10^k for k >= 0.
BigInt pow10(int k);

// Floor division (round toward -infinity). Divisor must be positive.
BigInt floor_div(const BigInt& a, const BigInt& b);

// Ceiling division. Divisor must be positive.
BigInt ceil_div(const BigInt& a, const BigInt& b);

// floor(sqrt(n)) for n >= 0.
BigInt isqrt(const BigInt& n);

// Reduced fraction with positive denominator.
class Rational {
public:
  Rational() : num_(0), den_(1) {}
  Rational(BigInt n) : num_(std::move(n)), den_(1) {}  // NOLINT: implicit from integers is intended
  Rational(long long n) : num_(n), den_(1) {}          // NOLINT
  Rational(BigInt num, BigInt den);

  const BigInt& num() const { return num_; }
  const BigInt& den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_negative() const { return num_ < 0; }
  bool is_integer() const { return den_ == 1; }

  // True when the denominator divides some power of ten (terminating decimal).
  bool is_finite_decimal() const;
  // Least k >= 0 with value * 10^k integral. Precondition: is_finite_decimal().
  int finite_decimal_exponent() const;

  BigInt floor() const { return floor_div(num_, den_); }
  BigInt ceil() const { return ceil_div(num_, den_); }

  Rational abs() const;
  Rational reciprocal() const;

  friend Rational operator+(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a, const Rational& b);
  friend Rational operator-(const Rational& a);
  friend Rational operator*(const Rational& a, const Rational& b);
  friend Rational operator/(const Rational& a, const Rational& b);

  friend bool operator==(const Rational& a, const Rational& b) {
    return a.num_ == b.num_ && a.den_ == b.den_;
  }
  friend bool operator!=(const Rational& a, const Rational& b) { return !(a == b); }
  friend bool operator<(const Rational& a, const Rational& b) {
    return a.num_ * b.den_ < b.num_ * a.den_;
  }
  friend bool operator<=(const Rational& a, const Rational& b) { return !(b < a); }
  friend bool operator>(const Rational& a, const Rational& b) { return b < a; }
  friend bool operator>=(const Rational& a, const Rational& b) { return !(a < b); }

  std::string to_string() const;  // "p/q", or "p" when integral

private:
  BigInt num_;
  BigInt den_;  // > 0
};

// Canonical constructor; rejects q == 0.
Rational make_rational(const BigInt& p, const BigInt& q);

// floor(r * 10^k) and ceil(r * 10^k) as integers.
BigInt floor_scaled(const Rational& r, int k);
BigInt ceil_scaled(const Rational& r, int k);

}  // namespace reals

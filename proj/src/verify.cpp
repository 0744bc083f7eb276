#include "reals/verify.hpp"

#include "reals/generators.hpp"

#include <sstream>

namespace reals {
namespace {

struct Check {
  CheckLine line{"", true, ""};
  BigInt max_dev;

  explicit Check(std::string name) { line.name = std::move(name); }

  // deviation in grid steps at the suite precision
  void observe(const BigInt& dev, const BigInt& tolerance) {
    if (dev > max_dev) max_dev = dev;
    if (dev > tolerance) line.pass = false;
  }

  void require(bool ok, const std::string& why) {
    if (!ok) {
      line.pass = false;
      if (line.detail.empty()) line.detail = why;
    }
  }

  CheckLine finish() {
    if (line.detail.empty()) line.detail = "max_dev=" + max_dev.str();
    return line;
  }
};

BigInt abs_diff(const BigInt& a, const BigInt& b) { return a > b ? a - b : b - a; }

// Integer bound M >= |x| for all streams in the trial, per the proofs.
BigInt value_bound(std::initializer_list<Rational> vs) {
  BigInt m = 1;
  for (const auto& v : vs) {
    BigInt c = v.abs().ceil();
    if (c > m) m = c;
  }
  return m + 1;
}

}  // namespace

SuiteResult run_axioms(int trials, int precision, std::uint64_t seed) {
  SuiteResult out{"axioms", trials, precision, seed, {}};
  const int k = precision;
  RationalGen gen(seed);

  Check add_comm("add_commutative");
  Check add_assoc("add_associative");
  Check add_unit("add_unit");
  Check add_inv("add_inverse");
  Check mul_comm("mul_commutative");
  Check mul_assoc("mul_associative");
  Check mul_unit("mul_unit");
  Check mul_inv("mul_inverse");
  Check distrib("distributive");
  Check order_total("order_total");
  Check order_add("order_add_compatible");
  Check order_mul("order_mul_compatible");
  Check lub("least_upper_bound");

  DecimalStream zero = from_rational(Rational(0));
  DecimalStream one = from_rational(Rational(1));

  for (int t = 0; t < trials; ++t) {
    Rational rx = gen.next(), ry = gen.next(), rz = gen.next();
    DecimalStream x = from_rational(rx), y = from_rational(ry), z = from_rational(rz);

    // Commutativity is exact, truncation for truncation.
    add_comm.observe(abs_diff(add(x, y).truncation(k).scaled, add(y, x).truncation(k).scaled), 0);
    mul_comm.observe(abs_diff(mul(x, y).truncation(k).scaled, mul(y, x).truncation(k).scaled), 0);

    // Associativity of addition within 3 grid steps.
    add_assoc.observe(abs_diff(add(add(x, y), z).truncation(k).scaled,
                               add(x, add(y, z)).truncation(k).scaled),
                      3);

    // Units are exact.
    add_unit.observe(abs_diff(add(x, zero).truncation(k).scaled, x.truncation(k).scaled), 0);
    mul_unit.observe(abs_diff(mul(x, one).truncation(k).scaled, x.truncation(k).scaled), 0);

    // x + psi(x) is exactly (-1).999..., whose truncation is always -1.
    add_inv.require(add(x, psi(x)).truncation(k).scaled == -1, "additive inverse not nines");

    BigInt m_bound = value_bound({rx, ry, rz});

    // Associativity of multiplication within 4M^2+1 grid steps.
    mul_assoc.observe(abs_diff(mul(mul(x, y), z).truncation(k).scaled,
                               mul(x, mul(y, z)).truncation(k).scaled),
                      4 * m_bound * m_bound + 1);

    // Distributivity within 6M+1 grid steps.
    distrib.observe(abs_diff(mul(add(x, y), z).truncation(k).scaled,
                             add(mul(x, z), mul(y, z)).truncation(k).scaled),
                    6 * m_bound + 1);

    // Multiplicative inverse within one grid step of 1 at s <= 20.
    if (!rx.is_zero()) {
      int w = 0;
      while (rx.abs() < Rational(1, pow10(w))) ++w;
      int s = k < 20 ? k : 20;
      TruncationRange r = mul(x, reciprocal(x, w)).truncation_range(s);
      mul_inv.observe(abs_diff(r.lo, pow10(s)) > abs_diff(r.hi, pow10(s))
                          ? abs_diff(r.lo, pow10(s))
                          : abs_diff(r.hi, pow10(s)),
                      1);
    }

    // Order: verdicts coherent with the rational order.
    ComparisonOutcome c = compare_upto(x, y, k);
    if (c.strictly_less()) order_total.require(rx < ry, "strict verdict disagrees");
    if (c.strictly_greater()) order_total.require(rx > ry, "strict verdict disagrees");
    if (c.tied())
      order_total.require((rx - ry).abs() <= Rational(3, pow10(k)), "tied but separated");

    // x <= y implies x+z <= y+z and, for z >= 0, xz <= yz at the truncation level.
    const Rational& lo_r = rx <= ry ? rx : ry;
    const Rational& hi_r = rx <= ry ? ry : rx;
    DecimalStream lo_s = from_rational(lo_r), hi_s = from_rational(hi_r);
    order_add.require(
        add(lo_s, z).truncation(k).scaled <= add(hi_s, z).truncation(k).scaled,
        "addition broke order");
    DecimalStream za = from_rational(rz.abs());
    order_mul.require(
        mul(lo_s, za).truncation(k).scaled <= mul(hi_s, za).truncation(k).scaled,
        "multiplication by non-negative broke order");

    // Least upper bound of a finite family: truncation maximum, an upper
    // bound, and below every rational upper bound.
    std::vector<DecimalStream> fam = {x, y, z};
    DecimalStream s = sup_finite(fam);
    BigInt expected = x.truncation(k).scaled;
    for (const auto& f : fam)
      if (f.truncation(k).scaled > expected) expected = f.truncation(k).scaled;
    lub.require(s.truncation(k).scaled == expected, "sup truncation law failed");
    Rational ub = (rx > ry ? rx : ry) > rz ? (rx > ry ? rx : ry) : rz;
    lub.require(s.truncation(k).scaled <= floor_scaled(ub, k), "sup exceeded an upper bound");
  }

  for (Check* c : {&add_comm, &add_assoc, &add_unit, &add_inv, &mul_comm, &mul_assoc, &mul_unit,
                   &mul_inv, &distrib, &order_total, &order_add, &order_mul, &lub})
    out.checks.push_back(c->finish());
  return out;
}

SuiteResult run_iso(IsoKind kind, int trials, int precision, std::uint64_t seed) {
  HomomorphismReport rep = iso_report(kind, trials, precision, seed);
  SuiteResult out{kind == IsoKind::Dedekind ? "iso-dedekind" : "iso-cauchy", trials, precision,
                  seed, {}};
  for (const auto& law : rep.laws)
    out.checks.push_back(
        CheckLine{law.name, law.pass, "max_dev=" + law.max_deviation.str()});
  return out;
}

std::string format_report(const SuiteResult& r) {
  std::ostringstream os;
  for (const auto& c : r.checks)
    os << (c.pass ? "PASS" : "FAIL") << "  " << c.name
       << (c.detail.empty() ? "" : "  (" + c.detail + ")") << "\n";
  os << "suite=" << r.suite << " trials=" << r.trials << " precision=" << r.precision
     << " seed=" << r.seed << " result=" << (r.passed() ? "pass" : "fail") << "\n";
  for (const auto& c : r.checks)
    os << "check=" << c.name << " pass=" << (c.pass ? 1 : 0) << "\n";
  return os.str();
}

}  // namespace reals

#include "reals/adapters.hpp"

#include "reals/generators.hpp"

#include <algorithm>

namespace reals {
namespace {

using detail::StreamImpl;

CutSide flip(CutSide s) {
  if (s == CutSide::A) return CutSide::B;
  if (s == CutSide::B) return CutSide::A;
  return CutSide::Unresolved;
}

// One interval-shrinking step keeping a in the A side and b in the B side.
// Midpoint first; if the cut cannot answer there, nearby split fractions are
// tried before giving up. Returns false when every candidate is unresolved.
bool refine_cut_interval(const DedekindCut& cut, Rational& a, Rational& b) {
  static const std::pair<int, int> fracs[] = {{1, 2}, {1, 4}, {3, 4}, {1, 8}, {7, 8}};
  Rational w = b - a;
  for (auto [p, q] : fracs) {
    Rational c = a + w * Rational(p, q);
    switch (cut.member(c)) {
      case CutSide::A:
        a = c;
        return true;
      case CutSide::B:
        b = c;
        return true;
      case CutSide::Unresolved:
        break;
    }
  }
  return false;
}

class TauImpl final : public StreamImpl {
public:
  TauImpl(DedekindCut cut, int lookahead) : cut_(std::move(cut)), lookahead_(lookahead) {}

  std::string describe() const override { return "tau"; }

protected:
  Truncation compute(int m, const std::optional<Truncation>&) override {
    Rational a = cut_.witness_a;
    Rational b = cut_.witness_b;
    Rational target(1, pow10(m + 1));
    while (b - a >= target) {
      if (!refine_cut_interval(cut_, a, b)) throw UnresolvedPrecision(m, m, a, b);
    }
    // sup A lies in (a, b], whose width is below one half grid cell. Its
    // truncation is ceil(v*10^m) - 1, constant here unless a grid point
    // sits inside; the cut itself settles that point.
    BigInt g_int = floor_scaled(b, m);
    Rational gp(g_int, pow10(m));
    if (gp > a) {
      switch (cut_.member(gp)) {
        case CutSide::B:
          return Truncation{m, g_int - 1};  // sup A is the nines tail at gp
        case CutSide::A:
          return Truncation{m, g_int};
        case CutSide::Unresolved:
          throw UnresolvedPrecision(m, m, a, b);
      }
    }
    return Truncation{m, floor_scaled(a, m)};
  }

private:
  DedekindCut cut_;
  int lookahead_;
};

class KappaImpl final : public StreamImpl {
public:
  KappaImpl(CauchySequence seq, int lookahead) : seq_(std::move(seq)), lookahead_(lookahead) {}

  std::string describe() const override { return "kappa"; }

protected:
  Truncation compute(int m, const std::optional<Truncation>&) override {
    Rational lo, hi;
    bool have = false;
    int j = m + 2;  // one guard digit past the proof's enclosure width
    for (; j <= m + 2 + lookahead_; ++j) {
      int n = seq_.modulus(j);
      if (n < 0) throw std::invalid_argument("kappa: modulus returned a negative index");
      Rational t = seq_.term(n);
      Rational eps(1, pow10(j));
      Rational l = t - eps, h = t + eps;
      if (have) {
        if (l > lo) lo = l;
        if (h < hi) hi = h;
        if (lo > hi)
          throw ContractViolation("kappa: modulus enclosures are inconsistent");
      } else {
        lo = l;
        hi = h;
        have = true;
      }
      BigInt dlo = floor_scaled(lo, m);
      if (dlo == floor_scaled(hi, m)) return Truncation{m, dlo};
    }
    throw UnresolvedPrecision(m, j - 1, lo, hi);
  }

private:
  CauchySequence seq_;
  int lookahead_;
};

// Theta: 1 iff the B side contains a negative rational, i.e. the boundary is
// strictly negative. Boundaries within 10^-lookahead of zero saturate to 0.
int cut_theta(const DedekindCut& cut, int lookahead) {
  CutSide at0 = cut.member(Rational(0));
  if (at0 != CutSide::B) return 0;  // boundary > 0, or pinned near 0
  if (cut.witness_b < Rational(0)) return 1;
  Rational a = cut.witness_a;
  Rational b = 0;
  Rational eps(1, pow10(lookahead));
  while (b - a >= eps) {
    Rational c = a + (b - a) * Rational(1, 2);
    switch (cut.member(c)) {
      case CutSide::B:
        return 1;
      case CutSide::A:
        a = c;
        break;
      case CutSide::Unresolved:
        return 0;  // boundary indistinguishable from 0 at this budget
    }
  }
  return 0;
}

DedekindCut psi_tilde(const DedekindCut& cut) {
  auto member = cut.member;
  return DedekindCut{
      [member](const Rational& q) { return flip(member(-q)); },
      -cut.witness_b,
      -cut.witness_a,
  };
}

}  // namespace

DedekindCut rational_cut(const Rational& g) {
  return DedekindCut{
      [g](const Rational& q) { return q < g ? CutSide::A : CutSide::B; },
      g - Rational(1),
      g + Rational(1),
  };
}

DecimalStream tau(const DedekindCut& cut, const ResolutionBudget& budget) {
  return DecimalStream(std::make_shared<TauImpl>(cut, budget.lookahead()));
}

DedekindCut cut_of_stream(const DecimalStream& x, const ResolutionBudget& budget) {
  if (auto e = x.exact()) {
    Rational v = e->value;
    return DedekindCut{
        [v](const Rational& q) { return q < v ? CutSide::A : CutSide::B; },
        v - Rational(1),
        v + Rational(1),
    };
  }
  int lookahead = budget.lookahead();
  TruncationRange r0 = x.truncation_range(0);
  auto member = [x, lookahead](const Rational& q) {
    for (int k = 0; k <= lookahead; ++k) {
      BigInt nq = floor_scaled(q, k);
      TruncationRange rx = x.truncation_range(k);
      if (rx.lo - nq >= 2) return CutSide::A;  // q strictly below x
      if (nq - rx.hi >= 2) return CutSide::B;
    }
    return CutSide::Unresolved;
  };
  return DedekindCut{member, Rational(r0.lo - 1), Rational(r0.hi + 2)};
}

DedekindCut cut_add(const DedekindCut& c1, const DedekindCut& c2, const ResolutionBudget& budget) {
  Rational eps(1, pow10(budget.lookahead()));
  auto member = [c1, c2, eps](const Rational& q) {
    Rational a1 = c1.witness_a, b1 = c1.witness_b;
    Rational a2 = c2.witness_a, b2 = c2.witness_b;
    for (;;) {
      if (q >= b1 + b2) return CutSide::B;  // q is a witnessed sum of B elements
      if (q <= a1 + a2) return CutSide::A;
      if ((b1 - a1) + (b2 - a2) < eps) return CutSide::Unresolved;
      bool p1 = refine_cut_interval(c1, a1, b1);
      bool p2 = refine_cut_interval(c2, a2, b2);
      if (!p1 && !p2) return CutSide::Unresolved;
    }
  };
  return DedekindCut{member, c1.witness_a + c2.witness_a, c1.witness_b + c2.witness_b};
}

DedekindCut cut_mul(const DedekindCut& c1, const DedekindCut& c2, const ResolutionBudget& budget) {
  int t1 = cut_theta(c1, budget.lookahead());
  int t2 = cut_theta(c2, budget.lookahead());
  DedekindCut abs1 = t1 ? psi_tilde(c1) : c1;
  DedekindCut abs2 = t2 ? psi_tilde(c2) : c2;
  int sigma = (t1 + t2) % 2;
  Rational eps(1, pow10(budget.lookahead()));

  auto abs_member = [abs1, abs2, eps](const Rational& q) {
    if (q < Rational(0)) return CutSide::A;
    Rational a1 = abs1.witness_a, b1 = abs1.witness_b;
    Rational a2 = abs2.witness_a, b2 = abs2.witness_b;
    for (;;) {
      Rational lo1 = a1 < Rational(0) ? Rational(0) : a1;
      Rational lo2 = a2 < Rational(0) ? Rational(0) : a2;
      if (q >= b1 * b2) return CutSide::B;
      if (q <= lo1 * lo2) return CutSide::A;
      if ((b1 - a1) + (b2 - a2) < eps) return CutSide::Unresolved;
      bool p1 = refine_cut_interval(abs1, a1, b1);
      bool p2 = refine_cut_interval(abs2, a2, b2);
      if (!p1 && !p2) return CutSide::Unresolved;
    }
  };

  Rational wb = abs1.witness_b * abs2.witness_b;
  if (sigma == 0) return DedekindCut{abs_member, Rational(-1), wb};
  return DedekindCut{
      [abs_member](const Rational& q) { return flip(abs_member(-q)); },
      -wb,
      Rational(1),
  };
}

ComparisonOutcome cut_leq(const DedekindCut& c1, const DedekindCut& c2, int k,
                          const ResolutionBudget& budget) {
  return compare_upto(tau(c1, budget), tau(c2, budget), k);
}

DecimalStream kappa(const CauchySequence& seq, const ResolutionBudget& budget) {
  return DecimalStream(std::make_shared<KappaImpl>(seq, budget.lookahead()));
}

CauchySequence seq_add(const CauchySequence& s1, const CauchySequence& s2) {
  auto t1 = s1.term, t2 = s2.term;
  auto m1 = s1.modulus, m2 = s2.modulus;
  return CauchySequence{
      [t1, t2](int n) { return t1(n) + t2(n); },
      [m1, m2](int k) { return std::max(m1(k + 1), m2(k + 1)); },
  };
}

CauchySequence seq_mul(const CauchySequence& s1, const CauchySequence& s2) {
  auto t1 = s1.term, t2 = s2.term;
  auto m1 = s1.modulus, m2 = s2.modulus;
  int n0 = std::max(m1(0), m2(0));
  // Any common bound past the modulus-0 index works; the proof only needs
  // some effective z.
  Rational z = t1(n0).abs();
  if (t2(n0).abs() > z) z = t2(n0).abs();
  z = z + Rational(2);
  int lg = 0;
  while (Rational(pow10(lg)) < Rational(2) * z) ++lg;
  return CauchySequence{
      [t1, t2](int n) { return t1(n) * t2(n); },
      [m1, m2, n0, lg](int k) {
        return std::max({m1(k + lg + 1), m2(k + lg + 1), n0});
      },
  };
}

SeqEquivalence seq_equiv(const CauchySequence& s1, const CauchySequence& s2, int k_max,
                         const ResolutionBudget& budget) {
  DecimalStream x1 = kappa(s1, budget);
  DecimalStream x2 = kappa(s2, budget);
  SeqEquivalence out{true, 0, Rational(0)};
  for (int k = 1; k <= k_max; ++k) {
    int n0 = std::max(s1.modulus(k), s2.modulus(k));
    for (int n = n0; n < n0 + 5; ++n) {
      Rational gap = (s1.term(n) - s2.term(n)).abs();
      if (gap > out.max_gap) out.max_gap = gap;
    }
    TruncationRange r1 = x1.truncation_range(k);
    TruncationRange r2 = x2.truncation_range(k);
    if (r2.lo - r1.hi >= 2 || r1.lo - r2.hi >= 2) {
      out.equivalent = false;
      out.refuted_at = k;
      return out;
    }
  }
  return out;
}

ComparisonOutcome seq_leq(const CauchySequence& s1, const CauchySequence& s2, int k,
                          const ResolutionBudget& budget) {
  return compare_upto(kappa(s1, budget), kappa(s2, budget), k);
}

namespace {

BigInt range_gap(const TruncationRange& a, const TruncationRange& b) {
  BigInt d1 = a.hi - b.lo;
  BigInt d2 = b.hi - a.lo;
  BigInt worst = d1 > d2 ? d1 : d2;
  return worst > 0 ? worst : BigInt(0);
}

void record(LawResult& law, const BigInt& dev, const BigInt& tolerance) {
  if (dev > law.max_deviation) law.max_deviation = dev;
  if (dev > tolerance) law.pass = false;
}

CauchySequence jittered_sequence(const Rational& g, std::uint64_t salt) {
  return CauchySequence{
      [g, salt](int n) {
        auto h = static_cast<std::int64_t>(splitmix64(salt ^ (0x51ed2701ULL + n)) % 9) - 4;
        return g + Rational(h, pow10(n + 1));
      },
      [](int k) { return k + 1; },
  };
}

}  // namespace

HomomorphismReport iso_report(IsoKind kind, int trials, int precision, std::uint64_t seed) {
  HomomorphismReport report{kind, trials, precision, seed, {}};
  report.laws = {LawResult{"add", true, 0}, LawResult{"mul", true, 0},
                 LawResult{"order", true, 0}};
  LawResult& law_add = report.laws[0];
  LawResult& law_mul = report.laws[1];
  LawResult& law_order = report.laws[2];

  RationalGen gen(seed);
  ResolutionBudget budget{};
  int k = precision;

  for (int t = 0; t < trials; ++t) {
    // Nonzero targets: the sign of a black-box stream indistinguishable from
    // zero is not observable, so a zero target cannot exercise the mul law.
    Rational g1 = gen.next_nonzero();
    Rational g2 = gen.next_nonzero();

    DecimalStream lhs_add, rhs_add, lhs_mul, rhs_mul;
    ComparisonOutcome order{ComparisonOutcome::Kind::Tied, k};
    if (kind == IsoKind::Dedekind) {
      DedekindCut c1 = rational_cut(g1);
      DedekindCut c2 = rational_cut(g2);
      lhs_add = tau(cut_add(c1, c2, budget), budget);
      rhs_add = add(tau(c1, budget), tau(c2, budget), budget);
      lhs_mul = tau(cut_mul(c1, c2, budget), budget);
      rhs_mul = mul(tau(c1, budget), tau(c2, budget), budget);
      order = cut_leq(c1, c2, k, budget);
    } else {
      CauchySequence s1 = jittered_sequence(g1, seed + 2 * t);
      CauchySequence s2 = jittered_sequence(g2, seed + 2 * t + 1);
      lhs_add = kappa(seq_add(s1, s2), budget);
      rhs_add = add(kappa(s1, budget), kappa(s2, budget), budget);
      lhs_mul = kappa(seq_mul(s1, s2), budget);
      rhs_mul = mul(kappa(s1, budget), kappa(s2, budget), budget);
      order = seq_leq(s1, s2, k, budget);
    }

    record(law_add, range_gap(lhs_add.truncation_range(k), rhs_add.truncation_range(k)), 1);
    record(law_mul, range_gap(lhs_mul.truncation_range(k), rhs_mul.truncation_range(k)), 1);

    Rational sep = (g1 - g2).abs();
    Rational coarse(3, pow10(k));
    if (order.strictly_less() && !(g1 < g2)) law_order.pass = false;
    if (order.strictly_greater() && !(g1 > g2)) law_order.pass = false;
    if (order.tied() && sep > coarse) law_order.pass = false;
  }
  return report;
}

}  // namespace reals

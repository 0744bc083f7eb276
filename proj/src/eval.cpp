#include "reals/eval.hpp"

#include <sstream>

namespace reals {
namespace {

int witness_for_literal(const Rational& r) {
  Rational a = r.abs();
  int m = 0;
  while (a < Rational(1, pow10(m))) ++m;
  return m;
}

}  // namespace

DecimalStream evaluate_stream(const ExprPtr& e, const ResolutionBudget& budget,
                              const Environment& env) {
  switch (e->kind) {
    case Expr::Kind::Literal:
      return from_rational(e->value);
    case Expr::Kind::Ident: {
      auto it = env.find(e->text);
      if (it == env.end()) throw Error("unbound identifier '" + e->text + "'");
      return it->second;
    }
    case Expr::Kind::Let: {
      Environment inner = env;
      inner.insert_or_assign(e->text, evaluate_stream(e->args[0], budget, env));
      return evaluate_stream(e->args[1], budget, inner);
    }
    case Expr::Kind::Unary: {
      DecimalStream x = evaluate_stream(e->args[0], budget, env);
      if (e->op == Expr::Op::Psi) return psi(x);
      if (e->op == Expr::Op::Abs) return abs(x);
      return from_rational(Rational(sign(x)));
    }
    case Expr::Kind::Binary: {
      DecimalStream l = evaluate_stream(e->args[0], budget, env);
      if (e->op == Expr::Op::Div) {
        // Parser guarantees a nonzero literal divisor.
        const Rational& d = e->args[1]->value;
        return divide(l, from_rational(d), witness_for_literal(d), budget);
      }
      DecimalStream r = evaluate_stream(e->args[1], budget, env);
      if (e->op == Expr::Op::Add) return add(l, r, budget);
      if (e->op == Expr::Op::Sub) return add(l, psi(r), budget);
      return mul(l, r, budget);
    }
    case Expr::Kind::Nary: {
      std::vector<DecimalStream> xs;
      xs.reserve(e->args.size());
      for (const auto& a : e->args) xs.push_back(evaluate_stream(a, budget, env));
      return e->op == Expr::Op::Sup ? sup_finite(xs) : inf_finite(xs);
    }
    case Expr::Kind::Sqrt:
      return sqrt_stream(e->sqrt_arg);
    case Expr::Kind::Recip:
      return reciprocal(evaluate_stream(e->args[0], budget, env), e->witness, budget);
    case Expr::Kind::Cmp:
      throw Error("cmp(...) can only appear at top level");
  }
  throw Error("unreachable expression kind");
}

std::string render_truncation(const Truncation& t, RenderConfig::Format format) {
  std::ostringstream os;
  if (format == RenderConfig::Format::FloorDigits) {
    BigInt x0 = t.integer_part();
    if (x0 < 0)
      os << "(" << x0.str() << ")";
    else
      os << x0.str();
    if (t.precision == 0) return os.str();
    os << ".";
    std::string frac = (t.scaled - x0 * pow10(t.precision)).str();
    os << std::string(t.precision - frac.size(), '0') << frac;
    return os.str();
  }
  BigInt n = t.scaled;
  if (n < 0) {
    os << "-";
    n = -n;
  }
  if (t.precision == 0) {
    os << n.str();
    return os.str();
  }
  BigInt ip = n / pow10(t.precision);
  std::string frac = (n - ip * pow10(t.precision)).str();
  os << ip.str() << "." << std::string(t.precision - frac.size(), '0') << frac;
  return os.str();
}

std::string render_finite_decimal(const Rational& v) {
  int j = v.finite_decimal_exponent();
  return render_truncation(Truncation{j, floor_scaled(v, j)}, RenderConfig::Format::SignMagnitude);
}

std::string render_stream(const DecimalStream& s, const RenderConfig& cfg) {
  try {
    Truncation t = s.truncation(cfg.digits);
    std::string out = render_truncation(t, cfg.format);
    if (auto e = s.exact(); e && e->nines) out += " = " + render_finite_decimal(e->value);
    return out;
  } catch (const UnresolvedPrecision& u) {
    if (cfg.on_unresolved == LookaheadPolicy::OnUnresolved::RaiseError) throw;
    std::ostringstream os;
    os << "unresolved at digit " << u.requested << " (refined to " << u.reached
       << "): value in [" << u.lo.to_string() << ", " << u.hi.to_string() << "]";
    return os.str();
  }
}

std::string eval_to_text(const std::string& input, const RenderConfig& cfg,
                         const ResolutionBudget& budget, const Environment& env) {
  ExprPtr e = parse(input);
  if (e->kind == Expr::Kind::Cmp) {
    ComparisonOutcome c = compare_upto(evaluate_stream(e->args[0], budget, env),
                                       evaluate_stream(e->args[1], budget, env), cfg.digits);
    if (c.strictly_less()) return "StrictlyLess";
    if (c.strictly_greater()) return "StrictlyGreater";
    return "TiedAt(" + std::to_string(c.precision) + ")";
  }
  return render_stream(evaluate_stream(e, budget, env), cfg);
}

}  // namespace reals

// Expression syntax over decimal streams.
//
//   expr    := 'let' ident '=' expr 'in' expr | sum
//   sum     := term (('+'|'-') term)*
//   term    := factor (('*'|'/') factor)*
//   factor  := literal | ident | func '(' args ')' | '(' expr ')'
//   literal := ['-'] digits ['.' digits ['(' digits ')']]
//
// Functions: psi, abs, sign, recip(x, m), sqrt(n), sup(...), inf(...),
// cmp(x, y). Subtraction is additive-inverse sugar: x - y evaluates as
// x + psi(y). An integer-over-integer division folds to a rational literal,
// and every division requires a nonzero literal divisor (the positivity
// witness is inferred from its magnitude); anything else must spell out
// recip(x, m).
#pragma once

#include "reals/stream.hpp"

#include <memory>

namespace reals {

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { Literal, Ident, Let, Unary, Binary, Nary, Sqrt, Recip, Cmp };
  enum class Op { None, Psi, Abs, Sign, Add, Sub, Mul, Div, Sup, Inf };

  explicit Expr(Kind k) : kind(k) {}

  Kind kind;
  Op op = Op::None;
  Rational value;             // Literal
  std::string text;           // Literal spelling, Ident/Let name
  BigInt sqrt_arg;            // Sqrt
  int witness = 0;            // Recip
  std::vector<ExprPtr> args;  // Let: {bound, body}; others: operands
};

ExprPtr parse(const std::string& input);

std::string to_string(const ExprPtr& e);
bool equal_trees(const ExprPtr& a, const ExprPtr& b);

}  // namespace reals

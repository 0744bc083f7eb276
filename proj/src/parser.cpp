#include "reals/parser.hpp"

#include <cctype>
#include <sstream>

namespace reals {
namespace {

struct Token {
  enum class Type { Number, Ident, Symbol, End };
  Type type;
  std::string text;
  std::size_t pos;
};

class Lexer {
public:
  explicit Lexer(const std::string& in) : in_(in) { advance(); }

  const Token& peek() const { return tok_; }

  Token take() {
    Token t = tok_;
    advance();
    return t;
  }

private:
  void advance() {
    while (i_ < in_.size() && std::isspace(static_cast<unsigned char>(in_[i_]))) ++i_;
    std::size_t start = i_;
    if (i_ >= in_.size()) {
      tok_ = {Token::Type::End, "", start};
      return;
    }
    char c = in_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      while (i_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[i_]))) ++i_;
      if (i_ < in_.size() && in_[i_] == '.') {
        ++i_;
        if (i_ >= in_.size() || !std::isdigit(static_cast<unsigned char>(in_[i_])))
          if (!(i_ < in_.size() && in_[i_] == '('))
            throw ParseError(i_, "expected digits after decimal point");
        while (i_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[i_]))) ++i_;
        if (i_ < in_.size() && in_[i_] == '(') {
          ++i_;
          std::size_t block = i_;
          while (i_ < in_.size() && std::isdigit(static_cast<unsigned char>(in_[i_]))) ++i_;
          if (i_ == block) throw ParseError(i_, "empty repeating block");
          if (i_ >= in_.size() || in_[i_] != ')')
            throw ParseError(i_, "unterminated repeating block");
          ++i_;
        }
      }
      tok_ = {Token::Type::Number, in_.substr(start, i_ - start), start};
      return;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      while (i_ < in_.size() &&
             (std::isalnum(static_cast<unsigned char>(in_[i_])) || in_[i_] == '_'))
        ++i_;
      tok_ = {Token::Type::Ident, in_.substr(start, i_ - start), start};
      return;
    }
    if (std::string("+-*/(),=").find(c) != std::string::npos) {
      ++i_;
      tok_ = {Token::Type::Symbol, std::string(1, c), start};
      return;
    }
    throw ParseError(start, std::string("unexpected character '") + c + "'");
  }

  const std::string& in_;
  std::size_t i_ = 0;
  Token tok_{Token::Type::End, "", 0};
};

// "12", "2.5", "0.1(6)" -> exact rational; minus sign handled by the caller.
Rational literal_value(const std::string& text, std::size_t pos) {
  std::size_t dot = text.find('.');
  if (dot == std::string::npos) return Rational(BigInt(text));
  std::size_t par = text.find('(');
  PeriodicDecimal p;
  p.integer_part = BigInt(text.substr(0, dot));
  std::string pre = text.substr(dot + 1, (par == std::string::npos ? text.size() : par) - dot - 1);
  for (char c : pre) p.preperiod.push_back(c - '0');
  if (par == std::string::npos) {
    // Terminating literal: same formula with a zero block.
    p.period = {0};
  } else {
    for (std::size_t i = par + 1; i + 1 < text.size(); ++i) p.period.push_back(text[i] - '0');
  }
  try {
    return from_periodic(p);
  } catch (const std::invalid_argument& e) {
    throw ParseError(pos, e.what());
  }
}

class Parser {
public:
  explicit Parser(const std::string& in) : lex_(in) {}

  ExprPtr parse_all() {
    ExprPtr e = parse_expr();
    if (lex_.peek().type != Token::Type::End)
      throw ParseError(lex_.peek().pos, "trailing input");
    return e;
  }

private:
  static ExprPtr make(Expr e) { return std::make_shared<Expr>(std::move(e)); }

  bool at_symbol(const char* s) const {
    return lex_.peek().type == Token::Type::Symbol && lex_.peek().text == s;
  }

  void expect_symbol(const char* s) {
    if (!at_symbol(s))
      throw ParseError(lex_.peek().pos, std::string("expected '") + s + "'");
    lex_.take();
  }

  ExprPtr parse_expr() {
    if (lex_.peek().type == Token::Type::Ident && lex_.peek().text == "let") {
      lex_.take();
      Token name = lex_.take();
      if (name.type != Token::Type::Ident)
        throw ParseError(name.pos, "expected identifier after 'let'");
      expect_symbol("=");
      ExprPtr bound = parse_expr();
      Token in = lex_.take();
      if (in.type != Token::Type::Ident || in.text != "in")
        throw ParseError(in.pos, "expected 'in'");
      ExprPtr body = parse_expr();
      Expr e{Expr::Kind::Let};
      e.text = name.text;
      e.args = {bound, body};
      return make(std::move(e));
    }
    return parse_sum();
  }

  ExprPtr parse_sum() {
    ExprPtr lhs = parse_term();
    while (at_symbol("+") || at_symbol("-")) {
      bool plus = lex_.take().text == "+";
      ExprPtr rhs = parse_term();
      Expr e{Expr::Kind::Binary};
      e.op = plus ? Expr::Op::Add : Expr::Op::Sub;
      e.args = {lhs, rhs};
      lhs = make(std::move(e));
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_factor();
    while (at_symbol("*") || at_symbol("/")) {
      Token op = lex_.take();
      ExprPtr rhs = parse_factor();
      if (op.text == "/") {
        if (rhs->kind != Expr::Kind::Literal)
          throw ParseError(op.pos,
                           "division needs a nonzero literal divisor; use recip(x, m)");
        if (rhs->value.is_zero()) throw ParseError(op.pos, "division by zero literal");
        if (lhs->kind == Expr::Kind::Literal) {
          Expr e{Expr::Kind::Literal};
          e.value = lhs->value / rhs->value;
          e.text = lhs->text + "/" + rhs->text;
          lhs = make(std::move(e));
          continue;
        }
        Expr e{Expr::Kind::Binary};
        e.op = Expr::Op::Div;
        e.args = {lhs, rhs};
        lhs = make(std::move(e));
      } else {
        Expr e{Expr::Kind::Binary};
        e.op = Expr::Op::Mul;
        e.args = {lhs, rhs};
        lhs = make(std::move(e));
      }
    }
    return lhs;
  }

  ExprPtr parse_factor() {
    const Token& t = lex_.peek();
    if (t.type == Token::Type::Symbol && t.text == "(") {
      lex_.take();
      ExprPtr e = parse_expr();
      expect_symbol(")");
      return e;
    }
    if (t.type == Token::Type::Symbol && t.text == "-") {
      std::size_t pos = t.pos;
      lex_.take();
      Token num = lex_.take();
      if (num.type != Token::Type::Number)
        throw ParseError(pos, "'-' starts a negative literal here; expected digits");
      Expr e{Expr::Kind::Literal};
      e.value = -literal_value(num.text, num.pos);
      e.text = "-" + num.text;
      return make(std::move(e));
    }
    if (t.type == Token::Type::Number) {
      Token num = lex_.take();
      Expr e{Expr::Kind::Literal};
      e.value = literal_value(num.text, num.pos);
      e.text = num.text;
      return make(std::move(e));
    }
    if (t.type == Token::Type::Ident) {
      Token id = lex_.take();
      if (!at_symbol("(")) {
        Expr e{Expr::Kind::Ident};
        e.text = id.text;
        return make(std::move(e));
      }
      lex_.take();
      std::vector<ExprPtr> args;
      if (!at_symbol(")")) {
        args.push_back(parse_expr());
        while (at_symbol(",")) {
          lex_.take();
          args.push_back(parse_expr());
        }
      }
      expect_symbol(")");
      return build_call(id, std::move(args));
    }
    throw ParseError(t.pos, "expected a literal, identifier or '('");
  }

  ExprPtr build_call(const Token& id, std::vector<ExprPtr> args) {
    auto arity = [&](std::size_t n) {
      if (args.size() != n)
        throw ParseError(id.pos, id.text + " expects " + std::to_string(n) + " argument(s)");
    };
    if (id.text == "psi" || id.text == "abs" || id.text == "sign") {
      arity(1);
      Expr e{Expr::Kind::Unary};
      e.op = id.text == "psi" ? Expr::Op::Psi : id.text == "abs" ? Expr::Op::Abs : Expr::Op::Sign;
      e.args = std::move(args);
      return make(std::move(e));
    }
    if (id.text == "sqrt") {
      arity(1);
      const Expr& a = *args[0];
      if (a.kind != Expr::Kind::Literal || !a.value.is_integer() || a.value.num() < 1)
        throw ParseError(id.pos, "sqrt expects a positive integer literal");
      Expr e{Expr::Kind::Sqrt};
      e.sqrt_arg = a.value.num();
      return make(std::move(e));
    }
    if (id.text == "recip") {
      arity(2);
      const Expr& w = *args[1];
      if (w.kind != Expr::Kind::Literal || !w.value.is_integer() || w.value.is_negative())
        throw ParseError(id.pos, "recip expects a non-negative integer witness");
      Expr e{Expr::Kind::Recip};
      e.witness = static_cast<int>(w.value.num());
      e.args = {args[0]};
      return make(std::move(e));
    }
    if (id.text == "sup" || id.text == "inf") {
      if (args.empty()) throw ParseError(id.pos, id.text + " expects at least one argument");
      Expr e{Expr::Kind::Nary};
      e.op = id.text == "sup" ? Expr::Op::Sup : Expr::Op::Inf;
      e.args = std::move(args);
      return make(std::move(e));
    }
    if (id.text == "cmp") {
      arity(2);
      Expr e{Expr::Kind::Cmp};
      e.args = std::move(args);
      return make(std::move(e));
    }
    throw ParseError(id.pos, "unknown function '" + id.text + "'");
  }

  Lexer lex_;
};

void render(const ExprPtr& e, std::ostringstream& os) {
  switch (e->kind) {
    case Expr::Kind::Literal:
      os << e->text;
      return;
    case Expr::Kind::Ident:
      os << e->text;
      return;
    case Expr::Kind::Let:
      os << "let " << e->text << " = ";
      render(e->args[0], os);
      os << " in ";
      render(e->args[1], os);
      return;
    case Expr::Kind::Unary:
      os << (e->op == Expr::Op::Psi ? "psi" : e->op == Expr::Op::Abs ? "abs" : "sign") << "(";
      render(e->args[0], os);
      os << ")";
      return;
    case Expr::Kind::Binary: {
      const char* sym = e->op == Expr::Op::Add   ? " + "
                        : e->op == Expr::Op::Sub ? " - "
                        : e->op == Expr::Op::Mul ? " * "
                                                 : " / ";
      os << "(";
      render(e->args[0], os);
      os << sym;
      render(e->args[1], os);
      os << ")";
      return;
    }
    case Expr::Kind::Nary: {
      os << (e->op == Expr::Op::Sup ? "sup(" : "inf(");
      for (std::size_t i = 0; i < e->args.size(); ++i) {
        if (i) os << ", ";
        render(e->args[i], os);
      }
      os << ")";
      return;
    }
    case Expr::Kind::Sqrt:
      os << "sqrt(" << e->sqrt_arg.str() << ")";
      return;
    case Expr::Kind::Recip:
      os << "recip(";
      render(e->args[0], os);
      os << ", " << e->witness << ")";
      return;
    case Expr::Kind::Cmp:
      os << "cmp(";
      render(e->args[0], os);
      os << ", ";
      render(e->args[1], os);
      os << ")";
      return;
  }
}

}  // namespace

ExprPtr parse(const std::string& input) { return Parser(input).parse_all(); }

std::string to_string(const ExprPtr& e) {
  std::ostringstream os;
  render(e, os);
  return os.str();
}

bool equal_trees(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind != b->kind || a->op != b->op) return false;
  if (a->kind == Expr::Kind::Literal && a->value != b->value) return false;
  if (a->text != b->text || a->sqrt_arg != b->sqrt_arg || a->witness != b->witness) return false;
  if (a->args.size() != b->args.size()) return false;
  for (std::size_t i = 0; i < a->args.size(); ++i)
    if (!equal_trees(a->args[i], b->args[i])) return false;
  return true;
}

}  // namespace reals

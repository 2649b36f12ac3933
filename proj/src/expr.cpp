#include "uqsl2/expr.hpp"

#include <cctype>
#include <optional>

namespace uqsl2 {

bool Expr::is_scalar() const {
  switch (kind) {
    case ExprKind::X:
    case ExprKind::Y:
    case ExprKind::Apply: return false;
    case ExprKind::Number:
    case ExprKind::Q: return true;
    default: break;
  }
  return (!lhs || lhs->is_scalar()) && (!rhs || rhs->is_scalar());
}

bool operator==(const Expr& a, const Expr& b) {
  if (a.kind != b.kind) return false;
  switch (a.kind) {
    case ExprKind::Number: return a.number == b.number;
    case ExprKind::Pow:
      if (a.exponent != b.exponent) return false;
      break;
    case ExprKind::Apply:
      if (a.gen != b.gen) return false;
      break;
    default: break;
  }
  auto same = [](const ExprPtr& u, const ExprPtr& v) { return (!u && !v) || (u && v && *u == *v); };
  return same(a.lhs, b.lhs) && same(a.rhs, b.rhs);
}

namespace {

enum class Tok { Int, Ident, Plus, Minus, Star, Slash, Caret, LParen, RParen, Dot, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

std::vector<Token> lex(const std::string& s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const unsigned char c = static_cast<unsigned char>(s[i]);
    if (std::isspace(c)) {
      ++i;
      continue;
    }
    const std::size_t start = i;
    if (std::isdigit(c)) {
      while (i < s.size() && std::isdigit(static_cast<unsigned char>(s[i]))) ++i;
      out.push_back({Tok::Int, s.substr(start, i - start), start});
      continue;
    }
    if (std::isalpha(c) || c == '_') {
      while (i < s.size() && (std::isalnum(static_cast<unsigned char>(s[i])) || s[i] == '_')) ++i;
      out.push_back({Tok::Ident, s.substr(start, i - start), start});
      continue;
    }
    Tok k;
    switch (c) {
      case '+': k = Tok::Plus; break;
      case '-': k = Tok::Minus; break;
      case '*': k = Tok::Star; break;
      case '/': k = Tok::Slash; break;
      case '^': k = Tok::Caret; break;
      case '(': k = Tok::LParen; break;
      case ')': k = Tok::RParen; break;
      case '.': k = Tok::Dot; break;
      default: throw SyntaxError(std::string("unexpected character '") + s[i] + "'", start);
    }
    out.push_back({k, std::string(1, s[i]), start});
    ++i;
  }
  out.push_back({Tok::End, "", s.size()});
  return out;
}

ExprPtr node(ExprKind k, ExprPtr lhs = nullptr, ExprPtr rhs = nullptr) {
  auto e = std::make_shared<Expr>();
  e->kind = k;
  e->lhs = std::move(lhs);
  e->rhs = std::move(rhs);
  return e;
}

std::optional<Gen> gen_of(const std::string& name) {
  if (name == "k") return Gen::K;
  if (name == "kinv") return Gen::Kinv;
  if (name == "e") return Gen::E;
  if (name == "f") return Gen::F;
  return std::nullopt;
}

class Parser {
 public:
  explicit Parser(const std::string& src) : toks_(lex(src)) {}

  ExprPtr parse() {
    ExprPtr e = expr();
    if (peek().kind != Tok::End) throw SyntaxError("unexpected '" + peek().text + "'", peek().pos);
    return e;
  }

 private:
  const Token& peek() const { return toks_[i_]; }
  const Token& next() { return toks_[i_++]; }
  bool accept(Tok k) {
    if (peek().kind != k) return false;
    ++i_;
    return true;
  }

  ExprPtr expr() {
    ExprPtr e = term();
    for (;;) {
      if (accept(Tok::Plus)) e = node(ExprKind::Add, e, term());
      else if (accept(Tok::Minus)) e = node(ExprKind::Sub, e, term());
      else return e;
    }
  }

  ExprPtr term() {
    ExprPtr e = factor();
    for (;;) {
      if (accept(Tok::Star)) e = node(ExprKind::Mul, e, factor());
      else if (accept(Tok::Slash)) e = node(ExprKind::Div, e, factor());
      else return e;
    }
  }

  ExprPtr factor() {
    if (accept(Tok::Minus)) return node(ExprKind::Neg, factor());
    ExprPtr base = atom();
    if (!accept(Tok::Caret)) return base;
    const std::size_t pos = peek().pos;
    const bool negative = accept(Tok::Minus);
    if (peek().kind != Tok::Int) throw NonIntegerExponent("exponent must be an integer", pos);
    const Token& t = next();
    if (peek().kind == Tok::Dot) throw NonIntegerExponent("exponent must be an integer", pos);
    if (t.text.size() > 9) throw SyntaxError("exponent too large", t.pos);
    long n = std::stol(t.text);
    if (negative) {
      if (!base->is_scalar())
        throw NonIntegerExponent("negative exponent on a non-scalar base", pos);
      n = -n;
    }
    auto e = std::make_shared<Expr>();
    e->kind = ExprKind::Pow;
    e->lhs = base;
    e->exponent = n;
    return e;
  }

  ExprPtr atom() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Int: {
        if (peek().kind == Tok::Dot) throw SyntaxError("decimal literals are not supported", peek().pos);
        auto e = std::make_shared<Expr>();
        e->kind = ExprKind::Number;
        e->number = mpz_class(t.text);
        return e;
      }
      case Tok::LParen: {
        ExprPtr e = expr();
        if (!accept(Tok::RParen)) throw SyntaxError("expected ')'", peek().pos);
        return e;
      }
      case Tok::Ident: {
        if (t.text == "x") return node(ExprKind::X);
        if (t.text == "y") return node(ExprKind::Y);
        if (t.text == "q") return node(ExprKind::Q);
        const auto g = gen_of(t.text);
        if (!g) throw SyntaxError("unknown name '" + t.text + "'", t.pos);
        if (!accept(Tok::LParen)) throw SyntaxError("expected '(' after " + t.text, peek().pos);
        auto e = std::make_shared<Expr>();
        e->kind = ExprKind::Apply;
        e->gen = *g;
        e->lhs = expr();
        if (!accept(Tok::RParen)) throw SyntaxError("expected ')'", peek().pos);
        return e;
      }
      case Tok::End: throw SyntaxError("unexpected end of input", t.pos);
      default: throw SyntaxError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> toks_;
  std::size_t i_ = 0;
};

int precedence(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Add:
    case ExprKind::Sub: return 1;
    case ExprKind::Mul:
    case ExprKind::Div: return 2;
    case ExprKind::Neg: return 3;
    case ExprKind::Pow: return 4;
    default: return 5;
  }
}

std::string wrap(const Expr& e, bool parens) { return parens ? "(" + render(e) + ")" : render(e); }

}  // namespace

ExprPtr parse_expression(const std::string& src) { return Parser(src).parse(); }

std::string render(const Expr& e) {
  switch (e.kind) {
    case ExprKind::Number: return e.number.get_str();
    case ExprKind::Q: return "q";
    case ExprKind::X: return "x";
    case ExprKind::Y: return "y";
    case ExprKind::Neg: return "-" + wrap(*e.lhs, precedence(*e.lhs) < 3);
    case ExprKind::Add:
    case ExprKind::Sub:
      return wrap(*e.lhs, false) + (e.kind == ExprKind::Add ? " + " : " - ") +
             wrap(*e.rhs, precedence(*e.rhs) <= 1);
    case ExprKind::Mul:
    case ExprKind::Div:
      return wrap(*e.lhs, precedence(*e.lhs) < 2) + (e.kind == ExprKind::Mul ? "*" : "/") +
             wrap(*e.rhs, precedence(*e.rhs) <= 2);
    case ExprKind::Pow: return wrap(*e.lhs, precedence(*e.lhs) < 5) + "^" + std::to_string(e.exponent);
    case ExprKind::Apply: return std::string(gen_name(e.gen)) + "(" + render(*e.lhs) + ")";
  }
  return "?";
}

namespace {

std::optional<Scalar> as_constant(const PlanePoly& p) {
  if (p.is_zero()) return Scalar(0);
  if (p.terms().size() != 1 || p.terms().begin()->first.degree() != 0) return std::nullopt;
  return p.terms().begin()->second;
}

PlanePoly eval(const Expr& e, std::optional<ActionEngine>& engine, const Action* action) {
  switch (e.kind) {
    case ExprKind::Number: return Scalar(mpq_class(e.number));
    case ExprKind::Q: return Scalar::q();
    case ExprKind::X: return PlanePoly::x();
    case ExprKind::Y: return PlanePoly::y();
    case ExprKind::Neg: return -eval(*e.lhs, engine, action);
    case ExprKind::Add: return eval(*e.lhs, engine, action) + eval(*e.rhs, engine, action);
    case ExprKind::Sub: return eval(*e.lhs, engine, action) - eval(*e.rhs, engine, action);
    case ExprKind::Mul: return eval(*e.lhs, engine, action) * eval(*e.rhs, engine, action);
    case ExprKind::Div: {
      const PlanePoly num = eval(*e.lhs, engine, action);
      const auto den = as_constant(eval(*e.rhs, engine, action));
      if (!den) throw EvalError("can only divide by a scalar");
      if (den->is_zero()) throw DivisionByZero();
      return den->inverse() * num;
    }
    case ExprKind::Pow: {
      const PlanePoly base = eval(*e.lhs, engine, action);
      if (e.exponent < 0) {
        const auto c = as_constant(base);
        if (!c) throw EvalError("negative exponent on a non-scalar");
        return c->pow(e.exponent);
      }
      PlanePoly r(1);
      for (long i = 0; i < e.exponent; ++i) r = r * base;
      return r;
    }
    case ExprKind::Apply: {
      if (!action) throw EvalError(std::string("no action bound for ") + gen_name(e.gen) + "(...)");
      if (!engine) engine.emplace(*action);
      const PlanePoly arg = eval(*e.lhs, engine, action);
      return engine->apply(e.gen, arg);
    }
  }
  return {};
}

}  // namespace

PlanePoly evaluate(const Expr& e, const Action* action) {
  std::optional<ActionEngine> engine;
  return eval(e, engine, action);
}

Scalar parse_scalar(const std::string& src) {
  const ExprPtr e = parse_expression(src);
  const auto c = as_constant(evaluate(*e));
  if (!c) throw EvalError("'" + src + "' is not a scalar");
  return *c;
}

}  // namespace uqsl2

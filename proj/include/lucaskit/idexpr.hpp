#pragma once

// Identity-expression language.
//
//   decl    := name ":" "n" ">=" int ":" expr "==" expr
//   expr    := term (("+"|"-") term)*
//   term    := factor (("*"|"/") factor)*
//   factor  := ("-")? atom ("^" atom)?
//   atom    := int | "x" | "y" | "n" | ident | "(" expr ")"
//            | "C" "(" expr "," expr ")" | "floor" "(" expr "/" expr ")"
//            | "sum" "(" ident "," expr "," expr "," expr ")"
//            | ("F"|"L") "(" expr (";" expr "," expr)? ")"
//
// A leading minus binds looser than "^": -x^2 is -(x^2). An identifier other
// than x, y, n must be bound by an enclosing sum. Files hold one declaration
// per line; "#" starts a comment.

#include "lucaskit/identities.hpp"
#include "lucaskit/lucas.hpp"
#include "lucaskit/parallel.hpp"
#include "lucaskit/ratpoly.hpp"
#include "lucaskit/report.hpp"

#include <cctype>
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lucaskit::idexpr {

struct SourcePos {
  int line = 1;
  int column = 1;

  std::string to_string() const { return std::to_string(line) + ":" + std::to_string(column); }
};

class ParseError : public std::runtime_error {
 public:
  ParseError(SourcePos pos, const std::string& message, std::vector<std::string> expected = {})
      : std::runtime_error(format(pos, message, expected)), pos_(pos), expected_(std::move(expected)) {}

  SourcePos pos() const { return pos_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  static std::string format(SourcePos pos, const std::string& message, const std::vector<std::string>& expected) {
    std::string out = pos.to_string() + ": " + message;
    if (!expected.empty()) {
      out += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        out += (i == 0 ? "" : ", ") + expected[i];
      }
      out += ")";
    }
    return out;
  }

  SourcePos pos_;
  std::vector<std::string> expected_;
};

class EvalError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Expr;
using ExprPtr = std::shared_ptr<const Expr>;

struct Expr {
  enum class Kind { IntLit, Var, Neg, Add, Sub, Mul, Div, Pow, Binom, FloorDiv, Sum, Fib, Luc };

  Kind kind;
  SourcePos pos;
  Integer value;              // IntLit
  std::string name;           // Var, and the index of Sum
  std::vector<ExprPtr> args;  // Sum: lower, upper, body. Fib/Luc: index [, px, py].
};

/// Structural equality; source positions are ignored.
inline bool same_structure(const Expr& a, const Expr& b) {
  if (a.kind != b.kind || a.value != b.value || a.name != b.name || a.args.size() != b.args.size()) {
    return false;
  }
  for (std::size_t i = 0; i < a.args.size(); ++i) {
    if (!same_structure(*a.args[i], *b.args[i])) {
      return false;
    }
  }
  return true;
}

struct IdentityDecl {
  std::string name;
  long min_n = 0;
  ExprPtr lhs;
  ExprPtr rhs;
};

namespace detail {

enum class Tok { Int, Ident, Colon, GreaterEq, EqEq, Plus, Minus, Star, Slash, Caret, LParen, RParen, Comma, Semi, End };

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

inline std::string describe(const Token& t) {
  if (t.kind == Tok::End) {
    return "end of input";
  }
  return "'" + t.text + "'";
}

inline std::vector<Token> tokenize(std::string_view src, int line) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto pos_at = [line](std::size_t offset) { return SourcePos{line, static_cast<int>(offset) + 1}; };
  while (i < src.size()) {
    const char c = src[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const SourcePos pos = pos_at(i);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < src.size() && std::isdigit(static_cast<unsigned char>(src[j]))) {
        ++j;
      }
      out.push_back({Tok::Int, std::string(src.substr(i, j - i)), pos});
      i = j;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t j = i;
      while (j < src.size() && (std::isalnum(static_cast<unsigned char>(src[j])) || src[j] == '_')) {
        ++j;
      }
      out.push_back({Tok::Ident, std::string(src.substr(i, j - i)), pos});
      i = j;
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == ">=") {
      out.push_back({Tok::GreaterEq, ">=", pos});
      i += 2;
      continue;
    }
    if (two == "==") {
      out.push_back({Tok::EqEq, "==", pos});
      i += 2;
      continue;
    }
    Tok kind;
    switch (c) {
      case ':': kind = Tok::Colon; break;
      case '+': kind = Tok::Plus; break;
      case '-': kind = Tok::Minus; break;
      case '*': kind = Tok::Star; break;
      case '/': kind = Tok::Slash; break;
      case '^': kind = Tok::Caret; break;
      case '(': kind = Tok::LParen; break;
      case ')': kind = Tok::RParen; break;
      case ',': kind = Tok::Comma; break;
      case ';': kind = Tok::Semi; break;
      default: throw ParseError(pos, std::string("unexpected character '") + c + "'");
    }
    out.push_back({kind, std::string(1, c), pos});
    ++i;
  }
  out.push_back({Tok::End, "", pos_at(src.size())});
  return out;
}

inline bool is_reserved(std::string_view name) {
  return name == "C" || name == "F" || name == "L" || name == "floor" || name == "sum";
}

inline ExprPtr node(Expr::Kind kind, SourcePos pos, std::vector<ExprPtr> args = {}) {
  auto e = std::make_shared<Expr>();
  e->kind = kind;
  e->pos = pos;
  e->args = std::move(args);
  return e;
}

class Parser {
 public:
  Parser(std::string_view src, int line) : toks_(tokenize(src, line)) {}

  IdentityDecl declaration() {
    IdentityDecl d;
    d.name = expect(Tok::Ident, "identity name").text;
    expect(Tok::Colon, "':'");
    const Token& var = expect(Tok::Ident, "'n'");
    if (var.text != "n") {
      throw ParseError(var.pos, "constraint must be on n, found " + describe(var), {"'n'"});
    }
    expect(Tok::GreaterEq, "'>='");
    bool negative = accept(Tok::Minus);
    const Token& bound = expect(Tok::Int, "integer");
    Integer value(bound.text);
    if (negative) {
      value = -value;
    }
    if (!value.fits_slong_p()) {
      throw ParseError(bound.pos, "constraint bound out of range");
    }
    d.min_n = value.get_si();
    expect(Tok::Colon, "':'");
    d.lhs = expr();
    expect(Tok::EqEq, "'=='", {"'+'", "'-'", "'*'", "'/'", "'^'"});
    d.rhs = expr();
    finish();
    return d;
  }

  ExprPtr standalone_expression() {
    ExprPtr e = expr();
    finish();
    return e;
  }

 private:
  const Token& peek() const { return toks_[at_]; }

  bool accept(Tok kind) {
    if (peek().kind == kind) {
      ++at_;
      return true;
    }
    return false;
  }

  const Token& expect(Tok kind, const std::string& what, std::vector<std::string> also = {}) {
    if (peek().kind != kind) {
      also.insert(also.begin(), what);
      throw ParseError(peek().pos, "unexpected " + describe(peek()), std::move(also));
    }
    return toks_[at_++];
  }

  void finish() {
    if (peek().kind != Tok::End) {
      throw ParseError(peek().pos, "unexpected " + describe(peek()), {"end of input"});
    }
  }

  ExprPtr expr() {
    ExprPtr lhs = term();
    for (;;) {
      const SourcePos pos = peek().pos;
      if (accept(Tok::Plus)) {
        lhs = node(Expr::Kind::Add, pos, {lhs, term()});
      } else if (accept(Tok::Minus)) {
        lhs = node(Expr::Kind::Sub, pos, {lhs, term()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr term() {
    ExprPtr lhs = factor();
    for (;;) {
      const SourcePos pos = peek().pos;
      if (accept(Tok::Star)) {
        lhs = node(Expr::Kind::Mul, pos, {lhs, factor()});
      } else if (accept(Tok::Slash)) {
        lhs = node(Expr::Kind::Div, pos, {lhs, factor()});
      } else {
        return lhs;
      }
    }
  }

  ExprPtr factor() {
    const SourcePos pos = peek().pos;
    const bool negate = accept(Tok::Minus);
    ExprPtr base = atom();
    const SourcePos caret = peek().pos;
    if (accept(Tok::Caret)) {
      base = node(Expr::Kind::Pow, caret, {base, atom()});
    }
    return negate ? node(Expr::Kind::Neg, pos, {base}) : base;
  }

  ExprPtr atom() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::Int: {
        ++at_;
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::IntLit;
        e->pos = t.pos;
        e->value = Integer(t.text);
        return e;
      }
      case Tok::LParen: {
        ++at_;
        ExprPtr inner = expr();
        expect(Tok::RParen, "')'", {"'+'", "'-'", "'*'", "'/'"});
        return inner;
      }
      case Tok::Ident: {
        ++at_;
        if (is_reserved(t.text)) {
          return call(t);
        }
        if (t.text != "x" && t.text != "y" && t.text != "n" && !bound(t.text)) {
          throw ParseError(t.pos, "unbound variable '" + t.text + "'");
        }
        auto e = std::make_shared<Expr>();
        e->kind = Expr::Kind::Var;
        e->pos = t.pos;
        e->name = t.text;
        return e;
      }
      default:
        throw ParseError(t.pos, "unexpected " + describe(t),
                         {"integer", "variable", "'('", "'C'", "'F'", "'L'", "'floor'", "'sum'"});
    }
  }

  // Arguments separated by ',' or ';'; the separators are returned so callers
  // can check the shape of F(e; a, b).
  struct ArgList {
    std::vector<ExprPtr> args;
    std::vector<Tok> separators;
  };

  ArgList arguments() {
    ArgList list;
    list.args.push_back(expr());
    for (;;) {
      if (accept(Tok::Comma)) {
        list.separators.push_back(Tok::Comma);
      } else if (accept(Tok::Semi)) {
        list.separators.push_back(Tok::Semi);
      } else {
        break;
      }
      list.args.push_back(expr());
    }
    expect(Tok::RParen, "')'", {"','", "'+'", "'-'", "'*'", "'/'"});
    return list;
  }

  ExprPtr call(const Token& head) {
    expect(Tok::LParen, "'('");
    if (head.text == "sum") {
      return sum(head);
    }
    ArgList list = arguments();
    if (head.text == "C") {
      if (list.args.size() != 2 || list.separators[0] != Tok::Comma) {
        throw ParseError(head.pos, "C takes 2 arguments, got " + std::to_string(list.args.size()));
      }
      return node(Expr::Kind::Binom, head.pos, std::move(list.args));
    }
    if (head.text == "floor") {
      if (list.args.size() != 1 || list.args[0]->kind != Expr::Kind::Div) {
        throw ParseError(head.pos, "floor takes a single quotient a/b");
      }
      return node(Expr::Kind::FloorDiv, head.pos, list.args[0]->args);
    }
    // F or L
    const bool plain = list.args.size() == 1;
    const bool substituted =
        list.args.size() == 3 && list.separators[0] == Tok::Semi && list.separators[1] == Tok::Comma;
    if (!plain && !substituted) {
      throw ParseError(head.pos, head.text + " takes an index and optionally '; px, py', got " +
                                     std::to_string(list.args.size()) + " arguments");
    }
    return node(head.text == "F" ? Expr::Kind::Fib : Expr::Kind::Luc, head.pos, std::move(list.args));
  }

  ExprPtr sum(const Token& head) {
    const Token& index = expect(Tok::Ident, "index variable");
    if (index.text == "x" || index.text == "y" || index.text == "n" || is_reserved(index.text)) {
      throw ParseError(index.pos, "'" + index.text + "' cannot be a summation index");
    }
    expect(Tok::Comma, "','");
    ExprPtr lower = expr();
    expect(Tok::Comma, "','", {"'+'", "'-'", "'*'", "'/'"});
    ExprPtr upper = expr();
    expect(Tok::Comma, "','", {"'+'", "'-'", "'*'", "'/'"});
    scopes_.push_back(index.text);
    ExprPtr body = expr();
    scopes_.pop_back();
    if (peek().kind == Tok::Comma) {
      throw ParseError(head.pos, "sum takes 4 arguments (index, lower, upper, body)");
    }
    expect(Tok::RParen, "')'", {"'+'", "'-'", "'*'", "'/'"});
    auto e = node(Expr::Kind::Sum, head.pos, {lower, upper, body});
    std::const_pointer_cast<Expr>(e)->name = index.text;
    return e;
  }

  bool bound(const std::string& name) const {
    for (const auto& s : scopes_) {
      if (s == name) {
        return true;
      }
    }
    return false;
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
  std::vector<std::string> scopes_;
};

}  // namespace detail

/// Parses one declaration. `line` is used for diagnostics only.
inline IdentityDecl parse_identity(std::string_view text, int line = 1) {
  return detail::Parser(text, line).declaration();
}

/// Parses a bare expression in n, x, y.
inline ExprPtr parse_expression(std::string_view text) { return detail::Parser(text, 1).standalone_expression(); }

/// Parses a file of declarations, one per line, "#" comments and blank lines
/// skipped.
inline std::vector<IdentityDecl> parse_identity_file(std::string_view text) {
  std::vector<IdentityDecl> decls;
  int line_no = 0;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) {
      end = text.size();
    }
    ++line_no;
    std::string_view line = text.substr(start, end - start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) {
      line = line.substr(0, hash);
    }
    if (line.find_first_not_of(" \t\r") != std::string_view::npos) {
      decls.push_back(parse_identity(line, line_no));
    }
    start = end + 1;
  }
  return decls;
}

// ---------------------------------------------------------------------------
// Rendering

namespace detail {

inline int precedence(Expr::Kind kind) {
  switch (kind) {
    case Expr::Kind::Add:
    case Expr::Kind::Sub: return 1;
    case Expr::Kind::Mul:
    case Expr::Kind::Div: return 2;
    case Expr::Kind::Neg: return 3;
    case Expr::Kind::Pow: return 4;
    default: return 5;
  }
}

inline std::string render(const Expr& e, int min_prec) {
  std::string s;
  auto sub = [](const ExprPtr& p, int prec) { return render(*p, prec); };
  switch (e.kind) {
    case Expr::Kind::IntLit: s = e.value.get_str(); break;
    case Expr::Kind::Var: s = e.name; break;
    case Expr::Kind::Neg: s = "-" + sub(e.args[0], 4); break;
    case Expr::Kind::Add: s = sub(e.args[0], 1) + " + " + sub(e.args[1], 2); break;
    case Expr::Kind::Sub: s = sub(e.args[0], 1) + " - " + sub(e.args[1], 2); break;
    case Expr::Kind::Mul: s = sub(e.args[0], 2) + "*" + sub(e.args[1], 3); break;
    case Expr::Kind::Div: s = sub(e.args[0], 2) + "/" + sub(e.args[1], 3); break;
    case Expr::Kind::Pow: s = sub(e.args[0], 5) + "^" + sub(e.args[1], 5); break;
    case Expr::Kind::Binom: s = "C(" + sub(e.args[0], 1) + ", " + sub(e.args[1], 1) + ")"; break;
    case Expr::Kind::FloorDiv: s = "floor(" + sub(e.args[0], 2) + "/" + sub(e.args[1], 3) + ")"; break;
    case Expr::Kind::Sum:
      s = "sum(" + e.name + ", " + sub(e.args[0], 1) + ", " + sub(e.args[1], 1) + ", " + sub(e.args[2], 1) + ")";
      break;
    case Expr::Kind::Fib:
    case Expr::Kind::Luc:
      s = (e.kind == Expr::Kind::Fib ? "F(" : "L(") + sub(e.args[0], 1);
      if (e.args.size() == 3) {
        s += "; " + sub(e.args[1], 1) + ", " + sub(e.args[2], 1);
      }
      s += ")";
      break;
  }
  return precedence(e.kind) < min_prec ? "(" + s + ")" : s;
}

}  // namespace detail

inline std::string to_string(const Expr& e) { return detail::render(e, 1); }

inline std::string to_string(const IdentityDecl& d) {
  return d.name + " : n>=" + std::to_string(d.min_n) + " : " + to_string(*d.lhs) + " == " + to_string(*d.rhs);
}

// ---------------------------------------------------------------------------
// Evaluation

namespace detail {

class Evaluator {
 public:
  explicit Evaluator(long n) : n_(n) {}

  RatPoly eval(const Expr& e) {
    switch (e.kind) {
      case Expr::Kind::IntLit: return RatPoly(Rational(e.value));
      case Expr::Kind::Var: return variable(e);
      case Expr::Kind::Neg: return -eval(*e.args[0]);
      case Expr::Kind::Add: return eval(*e.args[0]) + eval(*e.args[1]);
      case Expr::Kind::Sub: return eval(*e.args[0]) - eval(*e.args[1]);
      case Expr::Kind::Mul: return eval(*e.args[0]) * eval(*e.args[1]);
      case Expr::Kind::Div: {
        RatPoly num = eval(*e.args[0]);
        RatPoly den = eval(*e.args[1]);
        if (den.is_zero()) {
          throw EvalError(e.pos.to_string() + ": division by zero");
        }
        auto c = den.constant_value();
        if (!c) {
          throw EvalError(e.pos.to_string() + ": division by non-constant polynomial " + den.to_string());
        }
        return num.scaled(1 / *c);
      }
      case Expr::Kind::Pow: {
        RatPoly base = eval(*e.args[0]);
        const long exponent = integer(*e.args[1]);
        if (exponent >= 0) {
          return base.pow(static_cast<unsigned long>(exponent));
        }
        auto c = base.constant_value();
        if (!c || *c == 0) {
          throw EvalError(e.pos.to_string() + ": negative exponent " + std::to_string(exponent) +
                          " on non-constant or zero base " + base.to_string());
        }
        return RatPoly(rational_pow(*c, exponent));
      }
      case Expr::Kind::Binom:
        return RatPoly(Rational(binomial(integer(*e.args[0]), integer(*e.args[1]))));
      case Expr::Kind::FloorDiv: {
        const long a = integer(*e.args[0]);
        const long b = integer(*e.args[1]);
        if (b == 0) {
          throw EvalError(e.pos.to_string() + ": division by zero in floor");
        }
        return RatPoly(floor_div(a, b));
      }
      case Expr::Kind::Sum: {
        const long lo = integer(*e.args[0]);
        const long hi = integer(*e.args[1]);
        RatPoly acc;
        bindings_.emplace_back(e.name, 0);
        for (long k = lo; k <= hi; ++k) {
          bindings_.back().second = k;
          acc += eval(*e.args[2]);
        }
        bindings_.pop_back();
        return acc;
      }
      case Expr::Kind::Fib:
      case Expr::Kind::Luc: {
        const long index = integer(*e.args[0]);
        if (index < 0) {
          throw EvalError(e.pos.to_string() + ": negative sequence index " + std::to_string(index));
        }
        RatPoly p = e.kind == Expr::Kind::Fib ? fib(index) : luc(index);
        if (e.args.size() == 3) {
          p = p.subst(eval(*e.args[1]), eval(*e.args[2]));
        }
        return p;
      }
    }
    throw EvalError("unknown expression node");
  }

 private:
  RatPoly variable(const Expr& e) const {
    if (e.name == "x") {
      return RatPoly::x();
    }
    if (e.name == "y") {
      return RatPoly::y();
    }
    if (e.name == "n") {
      return RatPoly(n_);
    }
    for (auto it = bindings_.rbegin(); it != bindings_.rend(); ++it) {
      if (it->first == e.name) {
        return RatPoly(it->second);
      }
    }
    throw EvalError(e.pos.to_string() + ": unbound variable '" + e.name + "'");
  }

  long integer(const Expr& e) {
    const RatPoly p = eval(e);
    auto c = p.constant_value();
    if (!c || !is_integral(*c)) {
      throw EvalError(e.pos.to_string() + ": integer required, got " + p.to_string());
    }
    if (!c->get_num().fits_slong_p()) {
      throw EvalError(e.pos.to_string() + ": integer out of range");
    }
    return c->get_num().get_si();
  }

  long n_;
  std::vector<std::pair<std::string, long>> bindings_;
};

}  // namespace detail

/// Exact value of `e` with n bound to n_value.
inline RatPoly eval_expr(const Expr& e, long n_value) { return detail::Evaluator(n_value).eval(e); }

/// One report per n in [max(n_from, decl.min_n), n_to]. Evaluation failures
/// are rethrown as EvalError naming the declaration and n.
inline std::vector<IdentityReport> verify_identity(const IdentityDecl& decl, long n_from, long n_to,
                                                   unsigned threads = 1) {
  const long first = std::max(n_from, decl.min_n);
  const std::size_t count = n_to < first ? 0 : static_cast<std::size_t>(n_to - first + 1);
  return parallel_map(count, threads, [&](std::size_t i) {
    const long n = first + static_cast<long>(i);
    try {
      return make_report(decl.name, n, std::nullopt, eval_expr(*decl.lhs, n), eval_expr(*decl.rhs, n));
    } catch (const EvalError& err) {
      throw EvalError(decl.name + " at n=" + std::to_string(n) + ": " + err.what());
    } catch (const std::domain_error& err) {
      throw EvalError(decl.name + " at n=" + std::to_string(n) + ": " + err.what());
    }
  });
}

}  // namespace lucaskit::idexpr

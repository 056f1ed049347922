#pragma once

// Expression language: lexer, recursive-descent parser and evaluator.
//
//   program = { "let" ident "=" expr ";" } expr [ ";" ]
//   expr    = term { ("+" | "-") term }
//   term    = unary { "*" unary }
//   unary   = "-" unary | scaled
//   scaled  = number [ wedge ] | wedge        (number juxtaposed = scalar multiple)
//   wedge   = primary { "^" primary }
//   primary = number | generator | ident | call | "(" expr ")"
//   call    = name "(" [ args ";" ] [ args ] ")"
//
// `*` is the geometric product; octonionic products are only available as calls.

#include "octoclif/genprod.hpp"
#include "octoclif/inverse.hpp"

#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace octoclif {

struct SourcePos {
  int line = 1;
  int col = 1;
};

/// Every failure of parse or eval. `kind` is one of SyntaxError,
/// UnknownFunction, ArityError, UnboundVariable, Redefinition, TypeMismatch,
/// Singular, OneSidedOnly, Degenerate, NotOnS7, DomainError.
class ExprError : public std::runtime_error {
 public:
  ExprError(std::string kind, SourcePos pos, const std::string& message)
      : std::runtime_error(message), kind_(std::move(kind)), pos_(pos) {}
  const std::string& kind() const { return kind_; }
  SourcePos pos() const { return pos_; }

  /// `<kind> at <line>:<col>: <message>`
  std::string diagnostic() const {
    return kind_ + " at " + std::to_string(pos_.line) + ":" + std::to_string(pos_.col) + ": " + what();
  }

 private:
  std::string kind_;
  SourcePos pos_;
};

// ---------------------------------------------------------------------------
// Lexer

enum class Tok { number, ident, kw_let, plus, minus, star, caret, lparen, rparen, comma, semicolon, equals, end };

inline const char* describe(Tok t) {
  switch (t) {
    case Tok::number: return "number";
    case Tok::ident: return "identifier";
    case Tok::kw_let: return "'let'";
    case Tok::plus: return "'+'";
    case Tok::minus: return "'-'";
    case Tok::star: return "'*'";
    case Tok::caret: return "'^'";
    case Tok::lparen: return "'('";
    case Tok::rparen: return "')'";
    case Tok::comma: return "','";
    case Tok::semicolon: return "';'";
    case Tok::equals: return "'='";
    case Tok::end: return "end of input";
  }
  return "?";
}

struct Token {
  Tok kind;
  std::string text;
  SourcePos pos;
};

inline std::vector<Token> tokenize(std::string_view src) {
  std::vector<Token> out;
  SourcePos pos;
  std::size_t i = 0;
  auto advance = [&] {
    if (src[i] == '\n') {
      ++pos.line;
      pos.col = 1;
    } else if ((static_cast<unsigned char>(src[i]) & 0xC0) != 0x80) {
      ++pos.col;
    }
    ++i;
  };
  auto is_digit = [](char c) { return c >= '0' && c <= '9'; };
  auto is_ident_start = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || c == '_'; };
  while (i < src.size()) {
    const char c = src[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      advance();
      continue;
    }
    const SourcePos start = pos;
    if (is_digit(c)) {
      std::string text;
      while (i < src.size() && is_digit(src[i])) text += src[i], advance();
      if (i + 1 < src.size() && src[i] == '/' && is_digit(src[i + 1])) {
        text += '/';
        advance();
        while (i < src.size() && is_digit(src[i])) text += src[i], advance();
      }
      out.push_back({Tok::number, text, start});
      continue;
    }
    if (is_ident_start(c)) {
      std::string text;
      while (i < src.size() && (is_ident_start(src[i]) || is_digit(src[i]))) text += src[i], advance();
      out.push_back({text == "let" ? Tok::kw_let : Tok::ident, text, start});
      continue;
    }
    Tok kind;
    switch (c) {
      case '+': kind = Tok::plus; break;
      case '-': kind = Tok::minus; break;
      case '*': kind = Tok::star; break;
      case '^': kind = Tok::caret; break;
      case '(': kind = Tok::lparen; break;
      case ')': kind = Tok::rparen; break;
      case ',': kind = Tok::comma; break;
      case ';': kind = Tok::semicolon; break;
      case '=': kind = Tok::equals; break;
      default: {
        std::string shown(1, c);
        if (static_cast<unsigned char>(c) >= 0x80) {
          std::size_t j = i + 1;
          while (j < src.size() && (static_cast<unsigned char>(src[j]) & 0xC0) == 0x80) ++j;
          shown = std::string(src.substr(i, j - i));
        }
        throw ExprError("SyntaxError", start, "unexpected character '" + shown + "'");
      }
    }
    out.push_back({kind, std::string(1, c), start});
    advance();
  }
  out.push_back({Tok::end, "", pos});
  return out;
}

// ---------------------------------------------------------------------------
// AST

struct Expr;
using ExprPtr = std::unique_ptr<Expr>;

struct NumberLit {
  Rational value;
};
struct GeneratorRef {
  int index;  // 0..7, 0 is the scalar 1
};
struct VarRef {
  std::string name;
};
struct Negate {
  ExprPtr operand;
};
struct Binary {
  char op;  // '+', '-', '*', '^'
  ExprPtr lhs, rhs;
};
struct Call {
  std::string name;
  std::vector<ExprPtr> config;  // before ';'
  std::vector<ExprPtr> args;
};

struct Expr {
  SourcePos pos;
  std::variant<NumberLit, GeneratorRef, VarRef, Negate, Binary, Call> node;
};

struct Binding {
  std::string name;
  SourcePos pos;
  ExprPtr value;
};

struct Program {
  std::vector<Binding> bindings;
  ExprPtr body;
};

/// Call signature: number of config arguments (before ';') and of ordinary
/// arguments. The call site must use the ';' exactly when config > 0.
struct Signature {
  int config;
  int args;
  const char* usage;
};

inline const std::map<std::string, Signature>& builtins() {
  static const std::map<std::string, Signature> table = {
      {"circ", {0, 2, "circ(A, B)"}},
      {"bulL", {0, 2, "bulL(A, u)"}},
      {"bulR", {0, 2, "bulR(u, A)"}},
      {"odotL", {0, 2, "odotL(u, v)"}},
      {"odotR", {0, 2, "odotR(u, v)"}},
      {"circU", {1, 2, "circU(u; A, B)"}},
      {"circ1U", {1, 2, "circ1U(u; A, B)"}},
      {"circUV", {2, 2, "circUV(u, v; A, B)"}},
      {"circUC", {2, 2, "circUC(u, C; A, B)"}},
      {"makeC", {0, 2, "makeC(u, v)"}},
      {"rev", {0, 1, "rev(x)"}},
      {"hat", {0, 1, "hat(x)"}},
      {"bar", {0, 1, "bar(x)"}},
      {"inv", {0, 1, "inv(x)"}},
      {"grade", {0, 2, "grade(x, k)"}},
      {"psi", {0, 0, "psi()"}},
      {"eunits", {1, 1, "eunits(u; k)"}},
  };
  return table;
}

/// e0..e7
inline std::optional<int> generator_index(std::string_view name) {
  if (name.size() == 2 && name[0] == 'e' && name[1] >= '0' && name[1] <= '7') return name[1] - '0';
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Parser

class Parser {
 public:
  explicit Parser(std::string_view src) : toks_(tokenize(src)) {}

  Program parse_program() {
    Program p;
    while (peek().kind == Tok::kw_let) {
      const Token let = take();
      const Token name = expect({Tok::ident});
      if (generator_index(name.text) || builtins().count(name.text))
        throw ExprError("Redefinition", name.pos, "'" + name.text + "' is reserved and cannot be bound");
      expect({Tok::equals});
      ExprPtr value = parse_expr();
      expect({Tok::semicolon});
      p.bindings.push_back({name.text, name.pos, std::move(value)});
      (void)let;
    }
    p.body = parse_expr();
    if (peek().kind == Tok::semicolon) {
      take();
      expect({Tok::end});
    } else {
      expect({Tok::semicolon, Tok::end});
    }
    return p;
  }

 private:
  const Token& peek() const { return toks_[at_]; }

  // True when the previous token closed an operand, so binary operators
  // could have continued the expression.
  bool after_operand() const {
    if (at_ == 0) return false;
    const Tok prev = toks_[at_ - 1].kind;
    return prev == Tok::number || prev == Tok::ident || prev == Tok::rparen;
  }
  Token take() { return toks_[at_++]; }

  [[noreturn]] void unexpected(std::set<Tok> expected) const {
    const Token& t = peek();
    std::string list;
    for (Tok k : expected) list += (list.empty() ? "" : ", ") + std::string(describe(k));
    const std::string found = t.kind == Tok::end ? "end of input" : "'" + t.text + "'";
    throw ExprError("SyntaxError", t.pos, "expected one of {" + list + "}, found " + found);
  }

  Token expect(std::set<Tok> kinds) {
    if (!kinds.count(peek().kind)) {
      // Everything that could legally continue an expression at this point.
      if (after_operand()) kinds.insert({Tok::plus, Tok::minus, Tok::star, Tok::caret});
      unexpected(kinds);
    }
    return take();
  }

  static ExprPtr make(SourcePos pos, auto node) {
    auto e = std::make_unique<Expr>();
    e->pos = pos;
    e->node = std::move(node);
    return e;
  }

  ExprPtr parse_expr() {
    ExprPtr lhs = parse_term();
    while (peek().kind == Tok::plus || peek().kind == Tok::minus) {
      const Token op = take();
      ExprPtr rhs = parse_term();
      lhs = make(op.pos, Binary{op.text[0], std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr parse_term() {
    ExprPtr lhs = parse_unary();
    while (peek().kind == Tok::star) {
      const Token op = take();
      ExprPtr rhs = parse_unary();
      lhs = make(op.pos, Binary{'*', std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  ExprPtr parse_unary() {
    if (peek().kind == Tok::minus) {
      const Token op = take();
      return make(op.pos, Negate{parse_unary()});
    }
    if (peek().kind == Tok::number) {
      const Token num = take();
      ExprPtr lit = make(num.pos, NumberLit{parse_number(num)});
      const Tok next = peek().kind;
      if (next == Tok::ident || next == Tok::lparen) {
        ExprPtr rhs = parse_wedge();
        return make(num.pos, Binary{'*', std::move(lit), std::move(rhs)});
      }
      if (next == Tok::caret) {
        // 2^e1 is a wedge with a scalar left factor.
        return parse_wedge_rest(std::move(lit));
      }
      return lit;
    }
    return parse_wedge();
  }

  ExprPtr parse_wedge() { return parse_wedge_rest(parse_primary()); }

  ExprPtr parse_wedge_rest(ExprPtr lhs) {
    while (peek().kind == Tok::caret) {
      const Token op = take();
      ExprPtr rhs = parse_primary();
      lhs = make(op.pos, Binary{'^', std::move(lhs), std::move(rhs)});
    }
    return lhs;
  }

  static Rational parse_number(const Token& t) {
    try {
      return parse_rational(t.text);
    } catch (const RationalParseError& e) {
      throw ExprError("SyntaxError", t.pos, e.what());
    }
  }

  ExprPtr parse_primary() {
    const Token& t = peek();
    switch (t.kind) {
      case Tok::number: {
        const Token num = take();
        return make(num.pos, NumberLit{parse_number(num)});
      }
      case Tok::lparen: {
        take();
        ExprPtr inner = parse_expr();
        expect({Tok::rparen});
        return inner;
      }
      case Tok::ident: {
        const Token id = take();
        if (peek().kind == Tok::lparen) return parse_call(id);
        if (auto g = generator_index(id.text)) return make(id.pos, GeneratorRef{*g});
        return make(id.pos, VarRef{id.text});
      }
      default:
        unexpected({Tok::number, Tok::ident, Tok::lparen, Tok::minus});
    }
  }

  ExprPtr parse_call(const Token& name) {
    auto it = builtins().find(name.text);
    if (it == builtins().end()) throw ExprError("UnknownFunction", name.pos, "unknown function '" + name.text + "'");
    take();  // '('
    Call call{name.text, {}, {}};
    bool saw_semicolon = false;
    std::vector<ExprPtr> current;
    if (peek().kind != Tok::rparen) {
      for (;;) {
        if (peek().kind == Tok::semicolon && !saw_semicolon) {
          take();
          saw_semicolon = true;
          call.config = std::move(current);
          current.clear();
          if (peek().kind == Tok::rparen) break;
          continue;
        }
        current.push_back(parse_expr());
        if (peek().kind == Tok::comma) {
          take();
          continue;
        }
        if (peek().kind == Tok::semicolon && !saw_semicolon) continue;
        break;
      }
    }
    std::set<Tok> closers = {Tok::rparen, Tok::comma};
    if (!saw_semicolon) closers.insert(Tok::semicolon);
    expect(closers);
    call.args = std::move(current);
    const Signature& sig = it->second;
    if (static_cast<int>(call.config.size()) != sig.config || static_cast<int>(call.args.size()) != sig.args ||
        (sig.config == 0 && saw_semicolon))
      throw ExprError("ArityError", name.pos,
                      "'" + name.text + "' takes " + sig.usage + ", got " + std::to_string(call.config.size()) +
                          (saw_semicolon ? "; " : " config, ") + std::to_string(call.args.size()) + " argument(s)");
    return make(name.pos, std::move(call));
  }

  std::vector<Token> toks_;
  std::size_t at_ = 0;
};

inline Program parse(std::string_view src) { return Parser(src).parse_program(); }

// ---------------------------------------------------------------------------
// Evaluator

class Env {
 public:
  explicit Env(Conventions conv = {}) : conv_(conv) {}

  const Conventions& conventions() const { return conv_; }

  void bind(const std::string& name, Multivector value, SourcePos pos = {}) {
    if (!vars_.emplace(name, std::move(value)).second)
      throw ExprError("Redefinition", pos, "'" + name + "' is already bound");
  }
  const Multivector* lookup(const std::string& name) const {
    auto it = vars_.find(name);
    return it == vars_.end() ? nullptr : &it->second;
  }

 private:
  Conventions conv_;
  std::map<std::string, Multivector> vars_;
};

namespace detail {

class Evaluator {
 public:
  explicit Evaluator(Env& env) : env_(env) {}

  Multivector eval(const Expr& e) {
    return std::visit([&](const auto& n) { return eval_node(n, e.pos); }, e.node);
  }

 private:
  Multivector eval_node(const NumberLit& n, SourcePos) { return Multivector::scalar(n.value); }
  Multivector eval_node(const GeneratorRef& g, SourcePos) { return Multivector::generator(g.index); }
  Multivector eval_node(const VarRef& v, SourcePos pos) {
    if (const Multivector* m = env_.lookup(v.name)) return *m;
    throw ExprError("UnboundVariable", pos, "'" + v.name + "' is not bound");
  }
  Multivector eval_node(const Negate& n, SourcePos) { return -eval(*n.operand); }
  Multivector eval_node(const Binary& b, SourcePos) {
    const Multivector l = eval(*b.lhs), r = eval(*b.rhs);
    switch (b.op) {
      case '+': return l + r;
      case '-': return l - r;
      case '*': return gp(l, r);
      case '^': return outer(l, r);
    }
    throw std::logic_error("bad operator");
  }

  static Octonion paravector(const Multivector& x, const std::string& fn, const char* role, SourcePos pos) {
    if (!x.is_paravector())
      throw ExprError("TypeMismatch", pos,
                      fn + ": " + role + " must be a paravector (grades 0 and 1), got '" + to_text(x) + "'");
    return Octonion::from_multivector(x);
  }

  static int small_integer(const Multivector& x, int lo, int hi, const std::string& fn, SourcePos pos) {
    if (x.is_zero() && lo <= 0 && 0 <= hi) return 0;
    const Rational s = x.scalar_part();
    if (!x.is_scalar() || boost::multiprecision::denominator(s) != 1 || s < lo || s > hi)
      throw ExprError("TypeMismatch", pos,
                      fn + ": expected an integer in " + std::to_string(lo) + ".." + std::to_string(hi) + ", got '" +
                          to_text(x) + "'");
    return static_cast<int>(s);
  }

  Multivector eval_node(const Call& c, SourcePos pos) {
    std::vector<Multivector> cfg, args;
    for (const auto& a : c.config) cfg.push_back(eval(*a));
    for (const auto& a : c.args) args.push_back(eval(*a));
    try {
      return dispatch(c.name, cfg, args, pos);
    } catch (const AlgebraError& e) {
      throw ExprError(e.kind(), pos, c.name + ": " + e.what());
    }
  }

  Multivector dispatch(const std::string& fn, const std::vector<Multivector>& cfg,
                       const std::vector<Multivector>& args, SourcePos pos) {
    const Conventions& conv = env_.conventions();
    auto oct = [&](std::size_t i, const char* role) { return paravector(args[i], fn, role, pos); };
    if (fn == "circ") return circ(oct(0, "A"), oct(1, "B")).to_multivector();
    if (fn == "bulL") return bullet_left(oct(0, "A"), args[1], conv.fold).to_multivector();
    if (fn == "bulR") return bullet_right(args[0], oct(1, "A"), conv.fold).to_multivector();
    if (fn == "odotL") return odot_left(args[0], args[1], conv.fold).to_multivector();
    if (fn == "odotR") return odot_right(args[0], args[1], conv.fold).to_multivector();
    if (fn == "circU") return circ_u(cfg[0], args[0], args[1], conv).to_multivector();
    if (fn == "circ1U") return circ_1u(cfg[0], args[0], args[1], conv).to_multivector();
    if (fn == "circUV") return circ_uv(cfg[0], cfg[1], args[0], args[1], conv).to_multivector();
    if (fn == "circUC") {
      const Octonion c = paravector(cfg[1], fn, "C", pos);
      return circ_uC(cfg[0], c, oct(0, "A"), oct(1, "B"), conv).to_multivector();
    }
    if (fn == "makeC") return make_C(args[0], args[1], conv).to_multivector();
    if (fn == "rev") return reversion(args[0]);
    if (fn == "hat") return grade_involution(args[0]);
    if (fn == "bar") return conjugation(args[0]);
    if (fn == "inv") return inverse(args[0]);
    if (fn == "grade") return grade_project(args[0], small_integer(args[1], 0, 7, fn, pos));
    if (fn == "psi") return psi();
    if (fn == "eunits") {
      const int k = small_integer(args[0], 1, 7, fn, pos);
      return e_units(cfg[0], conv.e7, conv.fold)[k - 1].to_multivector();
    }
    throw ExprError("UnknownFunction", pos, "unknown function '" + fn + "'");
  }

  Env& env_;
};

}  // namespace detail

/// Evaluates the bindings in order, then the body.
inline Multivector evaluate(const Program& p, Env& env) {
  detail::Evaluator ev(env);
  for (const auto& b : p.bindings) {
    Multivector v = ev.eval(*b.value);
    env.bind(b.name, std::move(v), b.pos);
  }
  return ev.eval(*p.body);
}

inline Multivector evaluate(std::string_view src, const Conventions& conv = {}) {
  Env env(conv);
  return evaluate(parse(src), env);
}

}  // namespace octoclif

#include "posetops/expr.hpp"

#include <cctype>
#include <map>

namespace posetops {

namespace {

constexpr std::string_view kMetaChars = "&|!\\(){},#";

struct Arity {
  std::size_t min;
  std::size_t max;
};

const std::map<std::string, Arity, std::less<>>& functions() {
  static const std::map<std::string, Arity, std::less<>> table = {
      {"meetall", {1, SIZE_MAX}}, {"joinall", {1, SIZE_MAX}}, {"max", {1, 1}},    {"min", {1, 1}},
      {"maxht", {1, 1}},          {"minht", {1, 1}},          {"meet1", {2, 2}},  {"meet2", {2, 2}},
      {"join1", {2, 2}},          {"join2", {2, 2}},          {"neg1", {1, 1}},   {"ht", {1, 1}},
      {"P", {1, 1}},              {"Pmu", {1, 1}},            {"mu", {1, 1}},     {"indep1", {2, 2}},
      {"indep2", {2, 3}},
  };
  return table;
}

enum class Tok { Ident, Op, LParen, RParen, LBrace, RBrace, Comma, End };

struct Token {
  Tok kind = Tok::End;
  std::string text;
  char op = 0;
  int primes = 0;
  std::size_t pos = 0;
};

std::vector<Token> lex(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  auto fail = [&](std::size_t pos, const std::string& what) {
    throw Error(Errc::SyntaxError, "column " + std::to_string(pos + 1) + ": " + what);
  };
  while (i < s.size()) {
    char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    Token t;
    t.pos = i;
    switch (c) {
    case '&':
    case '|':
    case '!':
    case '\\': {
      t.kind = Tok::Op;
      t.op = c;
      ++i;
      while (i < s.size() && s[i] == '\'') {
        ++t.primes;
        ++i;
      }
      if (t.primes > 2)
        fail(t.pos, "at most two primes on an operator");
      break;
    }
    case '(': t.kind = Tok::LParen; ++i; break;
    case ')': t.kind = Tok::RParen; ++i; break;
    case '{': t.kind = Tok::LBrace; ++i; break;
    case '}': t.kind = Tok::RBrace; ++i; break;
    case ',': t.kind = Tok::Comma; ++i; break;
    case '#': fail(i, "unexpected '#'"); break;
    case '\'': fail(i, "unexpected prime"); break;
    default: {
      t.kind = Tok::Ident;
      std::size_t start = i;
      while (i < s.size() && !std::isspace(static_cast<unsigned char>(s[i])) &&
             kMetaChars.find(s[i]) == std::string_view::npos)
        ++i;
      t.text = std::string(s.substr(start, i - start));
    }
    }
    out.push_back(std::move(t));
  }
  Token end;
  end.pos = s.size();
  out.push_back(end);
  return out;
}

Variant variant_of(int primes) {
  return primes == 0 ? Variant::Raw : primes == 1 ? Variant::Prime : Variant::HtPrime;
}

std::string primes_of(Variant v) {
  return v == Variant::Raw ? "" : v == Variant::Prime ? "'" : "''";
}

class Parser {
public:
  explicit Parser(std::string_view text) : toks_(lex(text)) {}

  Expr parse() {
    Expr e = expr();
    if (peek().kind != Tok::End)
      fail("unexpected trailing input");
    return e;
  }

private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& advance() { return toks_[pos_++]; }

  [[noreturn]] void fail(const std::string& what) const {
    throw Error(Errc::SyntaxError, "column " + std::to_string(peek().pos + 1) + ": " + what);
  }

  void expect(Tok kind, const char* what) {
    if (peek().kind != kind)
      fail(std::string("expected ") + what);
    ++pos_;
  }

  bool at_op(char c) const { return peek().kind == Tok::Op && peek().op == c; }

  Expr binary(Expr lhs, const Token& op, Expr rhs) {
    Expr e;
    e.kind = ExprKind::Binary;
    e.op = op.op == '&' ? BinOp::Meet : op.op == '|' ? BinOp::Join : BinOp::Minus;
    e.variant = variant_of(op.primes);
    e.args.push_back(std::move(lhs));
    e.args.push_back(std::move(rhs));
    return e;
  }

  Expr expr() {
    Expr lhs = term();
    while (at_op('|')) {
      const Token op = advance();
      lhs = binary(std::move(lhs), op, term());
    }
    return lhs;
  }

  Expr term() {
    Expr lhs = unary();
    while (at_op('&') || at_op('\\')) {
      const Token op = advance();
      lhs = binary(std::move(lhs), op, unary());
    }
    return lhs;
  }

  Expr unary() {
    if (at_op('!')) {
      const Token op = advance();
      Expr e;
      e.kind = ExprKind::Not;
      e.variant = variant_of(op.primes);
      e.args.push_back(unary());
      return e;
    }
    return primary();
  }

  std::vector<std::string> label_list() {
    expect(Tok::LBrace, "'{'");
    std::vector<std::string> labels;
    if (peek().kind == Tok::RBrace) {
      ++pos_;
      return labels;
    }
    for (;;) {
      if (peek().kind != Tok::Ident)
        fail("expected a label");
      labels.push_back(advance().text);
      if (peek().kind == Tok::Comma) {
        ++pos_;
        continue;
      }
      expect(Tok::RBrace, "',' or '}'");
      return labels;
    }
  }

  Expr primary() {
    const Token& t = peek();
    if (t.kind == Tok::LParen) {
      ++pos_;
      Expr e = expr();
      expect(Tok::RParen, "')'");
      return e;
    }
    if (t.kind == Tok::LBrace) {
      Expr e;
      e.kind = ExprKind::SetLit;
      e.labels = label_list();
      return e;
    }
    if (t.kind != Tok::Ident)
      fail("expected an operand");
    const Token ident = advance();
    if ((ident.text == "sup" || ident.text == "inf") && peek().kind == Tok::LBrace) {
      Expr e;
      e.kind = ExprKind::SignedLit;
      e.sign = ident.text == "sup" ? Sign::Sup : Sign::Inf;
      e.labels = label_list();
      return e;
    }
    if (peek().kind == Tok::LParen) {
      auto fn = functions().find(ident.text);
      if (fn == functions().end())
        throw Error(Errc::SyntaxError,
                    "column " + std::to_string(ident.pos + 1) + ": unknown function '" + ident.text + "'");
      ++pos_;
      Expr e;
      e.kind = ExprKind::Call;
      e.name = ident.text;
      if (peek().kind != Tok::RParen) {
        e.args.push_back(expr());
        while (peek().kind == Tok::Comma) {
          ++pos_;
          e.args.push_back(expr());
        }
      }
      expect(Tok::RParen, "',' or ')'");
      if (e.args.size() < fn->second.min || e.args.size() > fn->second.max)
        throw Error(Errc::ArityError, "'" + e.name + "' does not take " + std::to_string(e.args.size()) +
                                          " argument" + (e.args.size() == 1 ? "" : "s"));
      return e;
    }
    Expr e;
    e.kind = ExprKind::Ident;
    e.name = ident.text;
    return e;
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

std::string join_labels(const std::vector<std::string>& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i)
    out += (i ? "," : "") + labels[i];
  return out + "}";
}

std::string print(const Expr& e, bool outer) {
  switch (e.kind) {
  case ExprKind::Ident:
    return e.name;
  case ExprKind::SetLit:
    return join_labels(e.labels);
  case ExprKind::SignedLit:
    return std::string(to_string(e.sign)) + join_labels(e.labels);
  case ExprKind::Not:
    return "!" + primes_of(e.variant) + print(e.args[0], false);
  case ExprKind::Binary: {
    const char* sym = e.op == BinOp::Meet ? "&" : e.op == BinOp::Join ? "|" : "\\";
    auto body = print(e.args[0], false) + " " + sym + primes_of(e.variant) + " " + print(e.args[1], false);
    return outer ? body : "(" + body + ")";
  }
  case ExprKind::Call: {
    std::string out = e.name + "(";
    for (std::size_t i = 0; i < e.args.size(); ++i)
      out += (i ? ", " : "") + print(e.args[i], true);
    return out + ")";
  }
  }
  return {};
}

// ---------------------------------------------------------------------------

class Evaluator {
public:
  Evaluator(const Poset& p, const EvalOptions& options) : p_(p), options_(options) {}

  Value eval(const Expr& e) {
    switch (e.kind) {
    case ExprKind::Ident:
      return ElemSet{p_.id(e.name)};
    case ExprKind::SetLit:
      return p_.set_of(std::span<const std::string>(e.labels));
    case ExprKind::SignedLit:
      return signed_literal(e);
    case ExprKind::Not:
      return negation(e);
    case ExprKind::Binary:
      return binary(e);
    case ExprKind::Call:
      return call(e);
    }
    throw Error(Errc::InvalidArgument, "unhandled expression");
  }

private:
  SignedSet signed_literal(const Expr& e) {
    return make_signed(p_, e.sign, p_.set_of(std::span<const std::string>(e.labels)));
  }

  ElemSet set_arg(const Expr& e) {
    if (e.kind == ExprKind::SignedLit)
      throw Error(Errc::SignedMisuse, "signed literal " + print(e, true) + " must be a direct operand of &, | or !");
    Value v = eval(e);
    if (auto* s = std::get_if<ElemSet>(&v))
      return *s;
    if (std::holds_alternative<SignedSet>(v))
      throw Error(Errc::SignedMisuse, "signed value used where a set is expected");
    throw Error(Errc::InvalidArgument, "expected a set, got " + format_value(p_, v));
  }

  Value negation(const Expr& e) {
    const Expr& arg = e.args[0];
    if (arg.kind == ExprKind::SignedLit)
      return refine_down(p_, signed_neg(p_, signed_literal(arg)), e.variant);
    return neg_set(p_, set_arg(arg), e.variant);
  }

  Value binary(const Expr& e) {
    const Expr& l = e.args[0];
    const Expr& r = e.args[1];
    const bool ls = l.kind == ExprKind::SignedLit;
    const bool rs = r.kind == ExprKind::SignedLit;
    if (ls && rs)
      throw Error(Errc::SignedMisuse, "both operands of " + print(e, true) + " are signed");
    if (ls || rs) {
      if (e.op == BinOp::Minus)
        throw Error(Errc::SignedMisuse, "difference is not defined for signed operands");
      const SignedSet s = signed_literal(ls ? l : r);
      const ElemSet other = set_arg(ls ? r : l);
      if (other.size() != 1)
        throw Error(Errc::SignedMisuse, "a signed operand must be combined with a single element");
      return e.op == BinOp::Meet ? refine_down(p_, signed_meet(p_, other.front(), s), e.variant)
                                 : refine_up(p_, signed_join(p_, other.front(), s), e.variant);
    }
    const ElemSet X = set_arg(l);
    const ElemSet Y = set_arg(r);
    switch (e.op) {
    case BinOp::Meet: return set_meet(p_, X, Y, e.variant);
    case BinOp::Join: return set_join(p_, X, Y, e.variant);
    case BinOp::Minus: return set_minus(p_, X, Y, e.variant);
    }
    throw Error(Errc::InvalidArgument, "unhandled operator");
  }

  Number signed_number(int value, bool is_probability, const SignedSet& s) {
    const int top = p_.height(p_.top());
    Number n;
    n.out_of_range = value < 0 || value > top;
    if (is_probability) {
      n.value = prob_signed(p_, s);
      n.raw = RawRatio{value, top};
    } else {
      n.value = value;
      n.integral = true;
    }
    return n;
  }

  Value call(const Expr& e) {
    const std::string& f = e.name;
    const auto& a = e.args;
    if (f == "ht" || f == "P") {
      if (a[0].kind == ExprKind::SignedLit) {
        const SignedSet s = signed_literal(a[0]);
        return signed_number(signed_height(p_, s), f == "P", s);
      }
      if (f == "ht")
        return Number{ht_of_set(p_, set_arg(a[0])), std::nullopt, true, false};
      return value_probability(p_, set_arg(a[0]), MeasureKind::MaxHeight);
    }
    if (f == "Pmu")
      return value_probability(p_, set_arg(a[0]), MeasureKind::SumHeight);
    if (f == "mu")
      return Number{mu(p_, set_arg(a[0])), std::nullopt, true, false};
    if (f == "meetall" || f == "joinall") {
      ElemSet all;
      for (const auto& arg : a)
        all = set_union(all, set_arg(arg));
      return f == "meetall" ? meet_all(p_, all, Variant::Raw) : join_all(p_, all, Variant::Raw);
    }
    if (f == "max")
      return extremes(p_, set_arg(a[0]), Extreme::Max);
    if (f == "min")
      return extremes(p_, set_arg(a[0]), Extreme::Min);
    if (f == "maxht")
      return extremes_by_height(p_, set_arg(a[0]), HeightExtreme::MaxHt);
    if (f == "minht")
      return extremes_by_height(p_, set_arg(a[0]), HeightExtreme::MinHt);
    if (f == "meet1" || f == "meet2")
      return alt_meet(p_, set_arg(a[0]), set_arg(a[1]), f == "meet1" ? AltKind::Pairwise : AltKind::UnionBased);
    if (f == "join1" || f == "join2")
      return alt_join(p_, set_arg(a[0]), set_arg(a[1]), f == "join1" ? AltKind::Pairwise : AltKind::UnionBased);
    if (f == "neg1")
      return alt_neg1(p_, set_arg(a[0]));
    if (f == "indep1")
      return indep_product(p_, set_arg(a[0]), set_arg(a[1]), options_.measure);
    if (f == "indep2") {
      std::optional<Rational> alpha;
      if (a.size() == 3) {
        if (a[2].kind == ExprKind::Ident)
          alpha = parse_rational(a[2].name);
        if (!alpha)
          throw Error(Errc::InvalidArgument, "indep2 threshold must be a fraction p/q, got " + print(a[2], true));
      }
      return indep_threshold(p_, set_arg(a[0]), set_arg(a[1]), alpha, options_.measure);
    }
    throw Error(Errc::SyntaxError, "unknown function '" + f + "'");
  }

  const Poset& p_;
  EvalOptions options_;
};

} // namespace

Expr parse_expr(std::string_view text) {
  return Parser(text).parse();
}

std::string print_expr(const Expr& e) {
  return print(e, true);
}

Value eval_expr(const Poset& p, const Expr& e, const EvalOptions& options) {
  return Evaluator(p, options).eval(e);
}

Number value_probability(const Poset& p, const Value& v, MeasureKind m) {
  if (const auto* s = std::get_if<ElemSet>(&v)) {
    Number n;
    n.raw = prob_parts(p, *s, m);
    n.value = n.raw->value();
    return n;
  }
  if (const auto* s = std::get_if<SignedSet>(&v)) {
    if (m != MeasureKind::MaxHeight)
      throw Error(Errc::SignedMisuse, "signed sets only have a max-height probability");
    Number n;
    const int top = p.height(p.top());
    const int h = signed_height(p, *s);
    n.raw = RawRatio{h, top};
    n.value = n.raw->value();
    n.out_of_range = !in_unit_interval(n.value);
    return n;
  }
  throw Error(Errc::InvalidArgument, "probability needs a set, got " + format_value(p, v));
}

std::string format_value(const Poset& p, const Value& v) {
  return std::visit(
      [&](const auto& x) -> std::string {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, ElemSet>) {
          return format_set(p, x);
        } else if constexpr (std::is_same_v<T, SignedSet>) {
          return format_signed(p, x);
        } else if constexpr (std::is_same_v<T, bool>) {
          return x ? "true" : "false";
        } else {
          std::string out = format_rational(x.value);
          if (x.raw && (x.raw->numerator != x.value.numerator() || x.raw->denominator != x.value.denominator()))
            out += " (" + std::to_string(x.raw->numerator) + "/" + std::to_string(x.raw->denominator) + ")";
          if (x.out_of_range)
            out += " [out of range]";
          return out;
        }
      },
      v);
}

} // namespace posetops

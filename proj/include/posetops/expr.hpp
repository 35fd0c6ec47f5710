#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "posetops/measure.hpp"

namespace posetops {

enum class ExprKind { Ident, SetLit, SignedLit, Not, Binary, Call };
enum class BinOp { Meet, Join, Minus };

/// Expression tree. Operators carry their refinement variant: `&` Raw,
/// `&'` Prime, `&''` HtPrime, likewise for `|`, `\` and `!`.
struct Expr {
  ExprKind kind = ExprKind::Ident;
  std::string name;                ///< identifier or function name
  std::vector<std::string> labels; ///< set and signed literals
  Sign sign = Sign::Sup;
  BinOp op = BinOp::Meet;
  Variant variant = Variant::Raw;
  std::vector<Expr> args; ///< operands or call arguments

  friend bool operator==(const Expr&, const Expr&) = default;
};

/// Precedence, tightest first: unary `!` family, then `&` and `\` families,
/// then `|` family; binary operators associate to the left. `{a,b}` is a set
/// literal, `sup{..}`/`inf{..}` a signed literal, a bare identifier a
/// singleton. Throws SyntaxError or ArityError.
Expr parse_expr(std::string_view text);

/// Canonical text; parse_expr(print_expr(e)) == e.
std::string print_expr(const Expr& e);

/// Integer or rational result. `raw` keeps the unreduced ratio of a
/// probability; `out_of_range` flags signed heights and probabilities that
/// leave [0, ht(top)] or [0, 1].
struct Number {
  Rational value;
  std::optional<RawRatio> raw;
  bool integral = false;
  bool out_of_range = false;

  friend bool operator==(const Number& a, const Number& b) {
    return a.value == b.value && a.integral == b.integral && a.out_of_range == b.out_of_range;
  }
};

using Value = std::variant<ElemSet, SignedSet, Number, bool>;

struct EvalOptions {
  /// Measure used by indep1/indep2 and by the `prob` command.
  MeasureKind measure = MeasureKind::MaxHeight;
};

/// Throws UnknownLabel, EmptyInput, SignedMisuse, DegenerateConditional or
/// InvalidArgument.
Value eval_expr(const Poset& p, const Expr& e, const EvalOptions& options = {});

/// Probability of an evaluated value under `m`. Sets keep their unreduced
/// ratio; signed sets use the signed height (max-height measure only).
Number value_probability(const Poset& p, const Value& v, MeasureKind m);

std::string format_value(const Poset& p, const Value& v);

} // namespace posetops

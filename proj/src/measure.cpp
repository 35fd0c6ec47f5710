#include "posetops/measure.hpp"

#include <algorithm>
#include <charconv>

namespace posetops {

std::string_view to_string(MeasureKind m) {
  return m == MeasureKind::MaxHeight ? "max" : "sum";
}

std::string format_rational(const Rational& r) {
  if (r.denominator() == 1)
    return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

std::optional<Rational> parse_rational(std::string_view text) {
  auto parse_int = [](std::string_view s) -> std::optional<std::int64_t> {
    std::int64_t v = 0;
    auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
    if (ec != std::errc() || ptr != s.data() + s.size() || s.empty())
      return std::nullopt;
    return v;
  };
  auto slash = text.find('/');
  auto num = parse_int(text.substr(0, slash));
  if (!num)
    return std::nullopt;
  if (slash == std::string_view::npos)
    return Rational(*num);
  auto den = parse_int(text.substr(slash + 1));
  if (!den || *den <= 0)
    return std::nullopt;
  return Rational(*num, *den);
}

bool in_unit_interval(const Rational& r) {
  return r >= 0 && r <= 1;
}

int ht_of_set(const Poset& p, const ElemSet& xs) {
  if (xs.empty())
    throw Error(Errc::EmptyInput, "height of an empty set");
  p.check_members(xs);
  int best = 0;
  for (ElemId x : xs)
    best = std::max(best, p.height(x));
  return best;
}

std::int64_t mu(const Poset& p, const ElemSet& xs) {
  p.check_members(xs);
  std::int64_t total = 0;
  for (ElemId x : xs)
    total += p.height(x);
  return total;
}

RawRatio prob_parts(const Poset& p, const ElemSet& xs, MeasureKind m) {
  if (m == MeasureKind::MaxHeight)
    return {ht_of_set(p, xs), p.height(p.top())};
  return {mu(p, xs), mu(p, p.all())};
}

Rational probability(const Poset& p, const ElemSet& xs, MeasureKind m) {
  return prob_parts(p, xs, m).value();
}

Rational prob_max(const Poset& p, const ElemSet& xs) {
  return probability(p, xs, MeasureKind::MaxHeight);
}

Rational prob_sum(const Poset& p, const ElemSet& xs) {
  return probability(p, xs, MeasureKind::SumHeight);
}

Rational prob_signed(const Poset& p, const SignedSet& s) {
  return {signed_height(p, s), p.height(p.top())};
}

bool indep_product(const Poset& p, const ElemSet& a, const ElemSet& b, MeasureKind m) {
  auto both = set_meet(p, a, b, Variant::Raw);
  return probability(p, both, m) == probability(p, a, m) * probability(p, b, m);
}

bool indep_threshold(const Poset& p, const ElemSet& a, const ElemSet& b, std::optional<Rational> alpha,
                     MeasureKind m) {
  auto not_a = neg_set(p, a, Variant::Raw);
  Rational pa = probability(p, a, m);
  Rational pna = probability(p, not_a, m);
  if (pa.numerator() == 0)
    throw Error(Errc::DegenerateConditional, "conditioning event has probability 0");
  if (pna.numerator() == 0)
    throw Error(Errc::DegenerateConditional, "negated conditioning event has probability 0");
  Rational threshold = alpha ? *alpha : probability(p, b, m);
  Rational r = probability(p, set_meet(p, a, b, Variant::Raw), m) / pa;
  Rational r_neg = probability(p, set_meet(p, not_a, b, Variant::Raw), m) / pna;
  return r == threshold || (r < threshold && r_neg >= threshold) || (r > threshold && r_neg <= threshold);
}

} // namespace posetops

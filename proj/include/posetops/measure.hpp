#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include <boost/rational.hpp>

#include "posetops/signed_set.hpp"

namespace posetops {

/// Exact fraction, always in lowest terms with a positive denominator.
using Rational = boost::rational<std::int64_t>;

/// MaxHeight: P(X) = ht(X) / ht(top).  SumHeight: P(X) = mu(X) / mu(all).
enum class MeasureKind { MaxHeight, SumHeight };

std::string_view to_string(MeasureKind m);

/// "3/4", or just "2" for whole numbers.
std::string format_rational(const Rational& r);
/// Parses "p/q" or an integer.
std::optional<Rational> parse_rational(std::string_view text);

bool in_unit_interval(const Rational& r);

/// Numerator and denominator before reduction, e.g. 3 and 9 for mu-based
/// probabilities whose printed form should show the original total.
struct RawRatio {
  std::int64_t numerator = 0;
  std::int64_t denominator = 1;

  Rational value() const { return {numerator, denominator}; }
};

/// Largest element height in xs.
int ht_of_set(const Poset& p, const ElemSet& xs);

/// Sum of the element heights; mu of the empty set is 0.
std::int64_t mu(const Poset& p, const ElemSet& xs);

Rational prob_max(const Poset& p, const ElemSet& xs);
Rational prob_sum(const Poset& p, const ElemSet& xs);
/// signed_height(s) / ht(top); may fall outside [0, 1].
Rational prob_signed(const Poset& p, const SignedSet& s);

RawRatio prob_parts(const Poset& p, const ElemSet& xs, MeasureKind m);
Rational probability(const Poset& p, const ElemSet& xs, MeasureKind m);

/// P(A meet B) == P(A) * P(B), with the raw meet.
bool indep_product(const Poset& p, const ElemSet& a, const ElemSet& b, MeasureKind m);

/// Threshold independence. With r = P(A meet B)/P(A) and
/// r' = P(negA meet B)/P(negA), independent iff r == alpha, or r < alpha and
/// r' >= alpha, or r > alpha and r' <= alpha. alpha defaults to P(B).
/// Throws DegenerateConditional when P(A) or P(negA) is zero.
bool indep_threshold(const Poset& p, const ElemSet& a, const ElemSet& b, std::optional<Rational> alpha,
                     MeasureKind m);

} // namespace posetops

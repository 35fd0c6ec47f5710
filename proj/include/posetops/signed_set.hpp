#pragma once

#include "posetops/bool_ops.hpp"

namespace posetops {

/// Whether a result set stands for its (possibly nonexistent) supremum or
/// infimum.
enum class Sign { Sup, Inf };

std::string_view to_string(Sign s);

struct SignedSet {
  Sign sign = Sign::Sup;
  ElemSet carrier;

  friend bool operator==(const SignedSet&, const SignedSet&) = default;
};

/// Builds a signed set, rejecting empty carriers.
SignedSet make_signed(const Poset& p, Sign sign, ElemSet carrier);

/// Sup-labelled max of the common lower bounds.
SignedSet signed_meet_of(const Poset& p, ElemId x, ElemId y);
/// Inf-labelled min of the common upper bounds.
SignedSet signed_join_of(const Poset& p, ElemId x, ElemId y);
/// Sup-labelled max of the orthogonal elements.
SignedSet signed_neg_of(const Poset& p, ElemId x);

/// Sup: {z <= y : z <= some s}.  Inf: {z <= y : z <= every s}.
ElemSet signed_meet(const Poset& p, ElemId y, const SignedSet& s);
/// Sup: {z >= y : z >= every s}.  Inf: {z >= y : z >= some s}.
ElemSet signed_join(const Poset& p, ElemId y, const SignedSet& s);
/// Sup: orthogonal to every s.  Inf: orthogonal to some s.
ElemSet signed_neg(const Poset& p, const SignedSet& s);

/// Sup: max carrier height + 1.  Inf: min carrier height - 1. Not clamped,
/// so the value can be -1 or height(top) + 1.
int signed_height(const Poset& p, const SignedSet& s);

std::string format_signed(const Poset& p, const SignedSet& s);

} // namespace posetops

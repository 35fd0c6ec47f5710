#pragma once

#include <span>

#include "posetops/poset.hpp"

namespace posetops {

/// Raw: the full set of bounds. Prime: its max (min for joins).
/// HtPrime: its maxht (minht for joins); lossy, prefer Prime.
enum class Variant { Raw, Prime, HtPrime };

/// Pairwise: intersection of the pairwise results. UnionBased: bounds of
/// the union of both operands.
enum class AltKind { Pairwise, UnionBased };

std::string_view to_string(Variant v);
std::string_view to_string(AltKind k);

/// Filters a raw meet/negation/difference result according to `v`.
ElemSet refine_down(const Poset& p, const ElemSet& raw, Variant v);
/// Filters a raw join result according to `v`.
ElemSet refine_up(const Poset& p, const ElemSet& raw, Variant v);

/// Common lower bounds of every x in xs.
ElemSet meet_all(const Poset& p, std::span<const ElemId> xs, Variant v);
ElemSet meet_all(const Poset& p, const ElemSet& xs, Variant v);
/// Common upper bounds of every x in xs.
ElemSet join_all(const Poset& p, std::span<const ElemId> xs, Variant v);
ElemSet join_all(const Poset& p, const ElemSet& xs, Variant v);

/// Elements orthogonal to every member of xs. A singleton gives the element
/// negation.
ElemSet neg_set(const Poset& p, const ElemSet& xs, Variant v);

/// {a : a <= x and a orthogonal to y}
ElemSet minus(const Poset& p, ElemId x, ElemId y, Variant v);

/// Union of the pairwise meets, then refined.
ElemSet set_meet(const Poset& p, const ElemSet& xs, const ElemSet& ys, Variant v);
/// Union of the pairwise joins, then refined.
ElemSet set_join(const Poset& p, const ElemSet& xs, const ElemSet& ys, Variant v);
/// xs meet (raw negation of ys).
ElemSet set_minus(const Poset& p, const ElemSet& xs, const ElemSet& ys, Variant v);

ElemSet alt_meet(const Poset& p, const ElemSet& xs, const ElemSet& ys, AltKind kind);
ElemSet alt_join(const Poset& p, const ElemSet& xs, const ElemSet& ys, AltKind kind);
/// Elements orthogonal to at least one member of xs.
ElemSet alt_neg1(const Poset& p, const ElemSet& xs);

} // namespace posetops

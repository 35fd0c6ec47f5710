#include "posetops/bool_ops.hpp"

#include <algorithm>

namespace posetops {

namespace {

void require_nonempty(const ElemSet& xs, const char* what) {
  if (xs.empty())
    throw Error(Errc::EmptyInput, std::string(what) + " needs a nonempty operand");
}

template <class Pred>
ElemSet collect(const Poset& p, Pred pred) {
  std::vector<ElemId> out;
  for (ElemId a = 0; a < p.size(); ++a)
    if (pred(a))
      out.push_back(a);
  return ElemSet(std::move(out));
}

} // namespace

std::string_view to_string(Variant v) {
  switch (v) {
  case Variant::Raw: return "Raw";
  case Variant::Prime: return "Prime";
  case Variant::HtPrime: return "HtPrime";
  }
  return "?";
}

std::string_view to_string(AltKind k) {
  return k == AltKind::Pairwise ? "Pairwise" : "UnionBased";
}

ElemSet refine_down(const Poset& p, const ElemSet& raw, Variant v) {
  switch (v) {
  case Variant::Raw: return raw;
  case Variant::Prime: return extremes(p, raw, Extreme::Max);
  case Variant::HtPrime: return extremes_by_height(p, raw, HeightExtreme::MaxHt);
  }
  return raw;
}

ElemSet refine_up(const Poset& p, const ElemSet& raw, Variant v) {
  switch (v) {
  case Variant::Raw: return raw;
  case Variant::Prime: return extremes(p, raw, Extreme::Min);
  case Variant::HtPrime: return extremes_by_height(p, raw, HeightExtreme::MinHt);
  }
  return raw;
}

ElemSet meet_all(const Poset& p, std::span<const ElemId> xs, Variant v) {
  if (xs.empty())
    throw Error(Errc::EmptyInput, "meet over an empty list");
  for (ElemId x : xs)
    p.check_member(x);
  auto raw = collect(p, [&](ElemId a) {
    return std::all_of(xs.begin(), xs.end(), [&](ElemId x) { return p.leq(a, x); });
  });
  return refine_down(p, raw, v);
}

ElemSet meet_all(const Poset& p, const ElemSet& xs, Variant v) {
  return meet_all(p, std::span<const ElemId>(xs.ids()), v);
}

ElemSet join_all(const Poset& p, std::span<const ElemId> xs, Variant v) {
  if (xs.empty())
    throw Error(Errc::EmptyInput, "join over an empty list");
  for (ElemId x : xs)
    p.check_member(x);
  auto raw = collect(p, [&](ElemId a) {
    return std::all_of(xs.begin(), xs.end(), [&](ElemId x) { return p.leq(x, a); });
  });
  return refine_up(p, raw, v);
}

ElemSet join_all(const Poset& p, const ElemSet& xs, Variant v) {
  return join_all(p, std::span<const ElemId>(xs.ids()), v);
}

ElemSet neg_set(const Poset& p, const ElemSet& xs, Variant v) {
  require_nonempty(xs, "negation");
  p.check_members(xs);
  auto raw = collect(p, [&](ElemId a) {
    return std::all_of(xs.begin(), xs.end(), [&](ElemId x) { return orthogonal(p, a, x); });
  });
  return refine_down(p, raw, v);
}

ElemSet minus(const Poset& p, ElemId x, ElemId y, Variant v) {
  p.check_member(x);
  p.check_member(y);
  auto raw = collect(p, [&](ElemId a) { return p.leq(a, x) && orthogonal(p, a, y); });
  return refine_down(p, raw, v);
}

ElemSet set_meet(const Poset& p, const ElemSet& xs, const ElemSet& ys, Variant v) {
  require_nonempty(xs, "meet");
  require_nonempty(ys, "meet");
  ElemSet raw;
  for (ElemId x : xs)
    for (ElemId y : ys) {
      const ElemId pair[] = {x, y};
      raw = set_union(raw, meet_all(p, pair, Variant::Raw));
    }
  return refine_down(p, raw, v);
}

ElemSet set_join(const Poset& p, const ElemSet& xs, const ElemSet& ys, Variant v) {
  require_nonempty(xs, "join");
  require_nonempty(ys, "join");
  ElemSet raw;
  for (ElemId x : xs)
    for (ElemId y : ys) {
      const ElemId pair[] = {x, y};
      raw = set_union(raw, join_all(p, pair, Variant::Raw));
    }
  return refine_up(p, raw, v);
}

ElemSet set_minus(const Poset& p, const ElemSet& xs, const ElemSet& ys, Variant v) {
  require_nonempty(xs, "difference");
  return set_meet(p, xs, neg_set(p, ys, Variant::Raw), v);
}

ElemSet alt_meet(const Poset& p, const ElemSet& xs, const ElemSet& ys, AltKind kind) {
  require_nonempty(xs, "alternative meet");
  require_nonempty(ys, "alternative meet");
  if (kind == AltKind::UnionBased)
    return meet_all(p, set_union(xs, ys), Variant::Raw);
  std::optional<ElemSet> acc;
  for (ElemId x : xs)
    for (ElemId y : ys) {
      const ElemId pair[] = {x, y};
      auto m = meet_all(p, pair, Variant::Raw);
      acc = acc ? set_intersection(*acc, m) : m;
    }
  return *acc;
}

ElemSet alt_join(const Poset& p, const ElemSet& xs, const ElemSet& ys, AltKind kind) {
  require_nonempty(xs, "alternative join");
  require_nonempty(ys, "alternative join");
  if (kind == AltKind::UnionBased)
    return join_all(p, set_union(xs, ys), Variant::Raw);
  std::optional<ElemSet> acc;
  for (ElemId x : xs)
    for (ElemId y : ys) {
      const ElemId pair[] = {x, y};
      auto j = join_all(p, pair, Variant::Raw);
      acc = acc ? set_intersection(*acc, j) : j;
    }
  return *acc;
}

ElemSet alt_neg1(const Poset& p, const ElemSet& xs) {
  require_nonempty(xs, "alternative negation");
  p.check_members(xs);
  return collect(p, [&](ElemId a) {
    return std::any_of(xs.begin(), xs.end(), [&](ElemId x) { return orthogonal(p, a, x); });
  });
}

} // namespace posetops

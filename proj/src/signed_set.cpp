#include "posetops/signed_set.hpp"

#include <algorithm>

namespace posetops {

namespace {

void check_signed(const Poset& p, const SignedSet& s) {
  if (s.carrier.empty())
    throw Error(Errc::EmptyInput, "signed set with an empty carrier");
  p.check_members(s.carrier);
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

std::string_view to_string(Sign s) {
  return s == Sign::Sup ? "sup" : "inf";
}

SignedSet make_signed(const Poset& p, Sign sign, ElemSet carrier) {
  SignedSet s{sign, std::move(carrier)};
  check_signed(p, s);
  return s;
}

SignedSet signed_meet_of(const Poset& p, ElemId x, ElemId y) {
  const ElemId pair[] = {x, y};
  return {Sign::Sup, meet_all(p, pair, Variant::Prime)};
}

SignedSet signed_join_of(const Poset& p, ElemId x, ElemId y) {
  const ElemId pair[] = {x, y};
  return {Sign::Inf, join_all(p, pair, Variant::Prime)};
}

SignedSet signed_neg_of(const Poset& p, ElemId x) {
  return {Sign::Sup, neg_set(p, ElemSet{x}, Variant::Prime)};
}

ElemSet signed_meet(const Poset& p, ElemId y, const SignedSet& s) {
  p.check_member(y);
  check_signed(p, s);
  const auto& c = s.carrier;
  return collect(p, [&](ElemId z) {
    if (!p.leq(z, y))
      return false;
    auto below = [&](ElemId t) { return p.leq(z, t); };
    return s.sign == Sign::Sup ? std::any_of(c.begin(), c.end(), below) : std::all_of(c.begin(), c.end(), below);
  });
}

ElemSet signed_join(const Poset& p, ElemId y, const SignedSet& s) {
  p.check_member(y);
  check_signed(p, s);
  const auto& c = s.carrier;
  return collect(p, [&](ElemId z) {
    if (!p.leq(y, z))
      return false;
    auto above = [&](ElemId t) { return p.leq(t, z); };
    return s.sign == Sign::Sup ? std::all_of(c.begin(), c.end(), above) : std::any_of(c.begin(), c.end(), above);
  });
}

ElemSet signed_neg(const Poset& p, const SignedSet& s) {
  check_signed(p, s);
  const auto& c = s.carrier;
  return collect(p, [&](ElemId a) {
    auto orth = [&](ElemId t) { return orthogonal(p, a, t); };
    return s.sign == Sign::Sup ? std::all_of(c.begin(), c.end(), orth) : std::any_of(c.begin(), c.end(), orth);
  });
}

int signed_height(const Poset& p, const SignedSet& s) {
  check_signed(p, s);
  int hi = p.height(s.carrier.front());
  int lo = hi;
  for (ElemId x : s.carrier) {
    hi = std::max(hi, p.height(x));
    lo = std::min(lo, p.height(x));
  }
  return s.sign == Sign::Sup ? hi + 1 : lo - 1;
}

std::string format_signed(const Poset& p, const SignedSet& s) {
  return std::string(to_string(s.sign)) + format_set(p, s.carrier);
}

} // namespace posetops

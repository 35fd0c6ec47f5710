#include "posetops/oracle.hpp"

#include <algorithm>
#include <array>

#include "posetops/builders.hpp"

namespace posetops {

namespace {

constexpr std::array<std::string_view, kOpTagCount> kOpNames = {
    "order_rel",      "orthogonal",     "extremes",      "below_filter",  "set_compare",  "height",
    "extremes_by_height", "meet_all",   "join_all",      "neg_set",       "minus",        "set_meet",
    "set_join",       "set_minus",      "alt_meet",      "alt_join",      "alt_neg1",     "signed_meet_of",
    "signed_join_of", "signed_neg_of",  "signed_meet",   "signed_join",   "signed_neg",   "signed_height",
    "ht_of_set",      "prob_max",       "mu",            "prob_sum",      "prob_signed",  "indep_product",
    "indep_threshold",
};

std::uint64_t next_random(std::uint64_t& state) {
  // splitmix64
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

std::uint64_t pick(std::uint64_t& state, std::uint64_t bound) {
  return next_random(state) % bound;
}

ElemSet random_subset(const Poset& p, std::uint64_t& state, std::size_t max_size) {
  std::size_t k = 1 + pick(state, max_size);
  std::vector<ElemId> ids;
  for (std::size_t i = 0; i < k; ++i)
    ids.push_back(static_cast<ElemId>(pick(state, p.size())));
  return ElemSet(std::move(ids));
}

std::string_view mode_name(CompareMode m) {
  switch (m) {
  case CompareMode::Leq: return "Leq";
  case CompareMode::Lt: return "Lt";
  case CompareMode::Leq1: return "Leq1";
  }
  return "?";
}

// ---------------------------------------------------------------------------
// Naive path. Shares nothing with Poset's cached closure, covers or heights.

class Naive {
public:
  explicit Naive(const Poset& p) : p_(p), n_(p.size()), succ_(n_), pred_(n_), ht_memo_(n_, -1) {
    for (auto [from, to] : p.generators()) {
      succ_[from].push_back(to);
      pred_[to].push_back(from);
    }
  }

  std::size_t size() const { return n_; }
  ElemId bottom() const { return p_.bottom(); }
  ElemId top() const { return p_.top(); }

  // a < b: some generator path of length >= 1.
  bool lt(ElemId a, ElemId b) const {
    std::vector<char> seen(n_, 0);
    std::vector<ElemId> stack(succ_[a].begin(), succ_[a].end());
    while (!stack.empty()) {
      ElemId v = stack.back();
      stack.pop_back();
      if (v == b)
        return true;
      if (seen[v])
        continue;
      seen[v] = 1;
      for (ElemId w : succ_[v])
        stack.push_back(w);
    }
    return false;
  }

  bool le(ElemId a, ElemId b) const { return a == b || lt(a, b); }

  bool orth(ElemId a, ElemId b) const {
    for (ElemId z = 0; z < n_; ++z)
      if (le(z, a) && le(z, b) && z != bottom())
        return false;
    return true;
  }

  // Longest generator path ending at x; every element sits above bottom.
  int ht(ElemId x) const {
    if (ht_memo_[x] >= 0)
      return ht_memo_[x];
    int best = 0;
    for (ElemId w : pred_[x])
      best = std::max(best, ht(w) + 1);
    return ht_memo_[x] = best;
  }

  template <class Pred>
  ElemSet all_where(Pred pred) const {
    ElemSet out;
    for (ElemId a = 0; a < n_; ++a)
      if (pred(a))
        out.insert(a);
    return out;
  }

  ElemSet max_of(const ElemSet& s) const {
    nonempty(s);
    ElemSet out;
    for (ElemId a : s)
      if (std::none_of(s.begin(), s.end(), [&](ElemId b) { return lt(a, b); }))
        out.insert(a);
    return out;
  }

  ElemSet min_of(const ElemSet& s) const {
    nonempty(s);
    ElemSet out;
    for (ElemId a : s)
      if (std::none_of(s.begin(), s.end(), [&](ElemId b) { return lt(b, a); }))
        out.insert(a);
    return out;
  }

  ElemSet ht_pick(const ElemSet& s, bool largest) const {
    nonempty(s);
    ElemSet out;
    for (ElemId a : s) {
      bool ok = std::all_of(s.begin(), s.end(), [&](ElemId b) { return largest ? ht(a) >= ht(b) : ht(a) <= ht(b); });
      if (ok)
        out.insert(a);
    }
    return out;
  }

  ElemSet down(const ElemSet& raw, Variant v) const {
    if (v == Variant::Prime)
      return max_of(raw);
    if (v == Variant::HtPrime)
      return ht_pick(raw, true);
    return raw;
  }

  ElemSet up(const ElemSet& raw, Variant v) const {
    if (v == Variant::Prime)
      return min_of(raw);
    if (v == Variant::HtPrime)
      return ht_pick(raw, false);
    return raw;
  }

  ElemSet lower_bounds(const ElemSet& xs) const {
    nonempty(xs);
    return all_where([&](ElemId a) { return std::all_of(xs.begin(), xs.end(), [&](ElemId x) { return le(a, x); }); });
  }

  ElemSet upper_bounds(const ElemSet& xs) const {
    nonempty(xs);
    return all_where([&](ElemId a) { return std::all_of(xs.begin(), xs.end(), [&](ElemId x) { return le(x, a); }); });
  }

  ElemSet neg(const ElemSet& xs) const {
    nonempty(xs);
    return all_where([&](ElemId a) { return std::all_of(xs.begin(), xs.end(), [&](ElemId x) { return orth(a, x); }); });
  }

  ElemSet meet_raw(const ElemSet& xs, const ElemSet& ys) const {
    nonempty(xs);
    nonempty(ys);
    return all_where([&](ElemId a) {
      for (ElemId x : xs)
        for (ElemId y : ys)
          if (le(a, x) && le(a, y))
            return true;
      return false;
    });
  }

  ElemSet join_raw(const ElemSet& xs, const ElemSet& ys) const {
    nonempty(xs);
    nonempty(ys);
    return all_where([&](ElemId a) {
      for (ElemId x : xs)
        for (ElemId y : ys)
          if (le(x, a) && le(y, a))
            return true;
      return false;
    });
  }

  int set_ht(const ElemSet& xs) const {
    nonempty(xs);
    int best = 0;
    for (ElemId x : xs)
      best = std::max(best, ht(x));
    return best;
  }

  std::int64_t mu(const ElemSet& xs) const {
    std::int64_t total = 0;
    for (ElemId x : xs)
      total += ht(x);
    return total;
  }

  Rational prob(const ElemSet& xs, MeasureKind m) const {
    if (m == MeasureKind::MaxHeight)
      return Rational(set_ht(xs), ht(top()));
    std::int64_t whole = 0;
    for (ElemId a = 0; a < n_; ++a)
      whole += ht(a);
    return Rational(mu(xs), whole);
  }

  int signed_ht(Sign sign, const ElemSet& carrier) const {
    nonempty(carrier);
    int hi = -1;
    int lo = 1 << 30;
    for (ElemId c : carrier) {
      hi = std::max(hi, ht(c));
      lo = std::min(lo, ht(c));
    }
    return sign == Sign::Sup ? hi + 1 : lo - 1;
  }

  static void nonempty(const ElemSet& s) {
    if (s.empty())
      throw Error(Errc::EmptyInput, "empty operand");
  }

private:
  const Poset& p_;
  std::size_t n_;
  std::vector<std::vector<ElemId>> succ_;
  std::vector<std::vector<ElemId>> pred_;
  mutable std::vector<int> ht_memo_;
};

QueryResult naive_dispatch(const Poset& p, const Query& q) {
  Naive o(p);
  auto check = [&](ElemId e) {
    if (e >= o.size())
      throw Error(Errc::UnknownLabel, "unknown element");
  };
  auto check_set = [&](const ElemSet& s) {
    for (ElemId e : s)
      check(e);
  };
  check_set(q.xs);
  check_set(q.ys);
  const ElemSet X = q.xs;
  const ElemSet Y = q.ys;
  auto pair = [&] { return ElemSet{q.x, q.y}; };

  switch (q.op) {
  case OpTag::OrderRel:
    check(q.x), check(q.y);
    if (q.x == q.y)
      return Relation::Eq;
    if (o.lt(q.x, q.y))
      return Relation::Lt;
    if (o.lt(q.y, q.x))
      return Relation::Gt;
    return Relation::Incomparable;
  case OpTag::Orthogonal:
    check(q.x), check(q.y);
    return o.orth(q.x, q.y);
  case OpTag::Extremes:
    return q.extreme == Extreme::Max ? o.max_of(X) : o.min_of(X);
  case OpTag::BelowFilter:
    check(q.y);
    return o.all_where([&](ElemId a) { return X.contains(a) && o.le(a, q.y); });
  case OpTag::SetCompare: {
    Naive::nonempty(X);
    Naive::nonempty(Y);
    auto forall_exists = [&](const ElemSet& outer, const ElemSet& inner, bool outer_is_x) {
      for (ElemId u : outer) {
        bool found = false;
        for (ElemId w : inner)
          if (outer_is_x ? o.le(u, w) : o.le(w, u))
            found = true;
        if (!found)
          return false;
      }
      return true;
    };
    if (q.mode == CompareMode::Leq1)
      return forall_exists(Y, X, false);
    bool leq = forall_exists(X, Y, true);
    if (q.mode == CompareMode::Leq)
      return leq;
    bool witness = false;
    for (ElemId y : Y) {
      bool all_strict = true;
      for (ElemId x : X)
        if (o.le(x, y) && !o.lt(x, y))
          all_strict = false;
      witness = witness || all_strict;
    }
    return leq && witness;
  }
  case OpTag::Height:
    check(q.x);
    return static_cast<std::int64_t>(o.ht(q.x));
  case OpTag::ExtremesByHeight:
    return o.ht_pick(X, q.height_extreme == HeightExtreme::MaxHt);
  case OpTag::MeetAll:
    return o.down(o.lower_bounds(X), q.variant);
  case OpTag::JoinAll:
    return o.up(o.upper_bounds(X), q.variant);
  case OpTag::NegSet:
    return o.down(o.neg(X), q.variant);
  case OpTag::Minus:
    check(q.x), check(q.y);
    return o.down(o.all_where([&](ElemId a) { return o.le(a, q.x) && o.orth(a, q.y); }), q.variant);
  case OpTag::SetMeet:
    return o.down(o.meet_raw(X, Y), q.variant);
  case OpTag::SetJoin:
    return o.up(o.join_raw(X, Y), q.variant);
  case OpTag::SetMinus:
    return o.down(o.meet_raw(X, o.neg(Y)), q.variant);
  case OpTag::AltMeet:
  case OpTag::AltJoin: {
    Naive::nonempty(X);
    Naive::nonempty(Y);
    bool meet = q.op == OpTag::AltMeet;
    auto bound = [&](ElemId a, ElemId x) { return meet ? o.le(a, x) : o.le(x, a); };
    if (q.alt == AltKind::UnionBased)
      return o.all_where([&](ElemId a) {
        return std::all_of(X.begin(), X.end(), [&](ElemId x) { return bound(a, x); }) &&
               std::all_of(Y.begin(), Y.end(), [&](ElemId y) { return bound(a, y); });
      });
    return o.all_where([&](ElemId a) {
      for (ElemId x : X)
        for (ElemId y : Y)
          if (!(bound(a, x) && bound(a, y)))
            return false;
      return true;
    });
  }
  case OpTag::AltNeg1:
    Naive::nonempty(X);
    return o.all_where([&](ElemId a) { return std::any_of(X.begin(), X.end(), [&](ElemId x) { return o.orth(a, x); }); });
  case OpTag::SignedMeetOf:
    check(q.x), check(q.y);
    return SignedSet{Sign::Sup, o.max_of(o.lower_bounds(pair()))};
  case OpTag::SignedJoinOf:
    check(q.x), check(q.y);
    return SignedSet{Sign::Inf, o.min_of(o.upper_bounds(pair()))};
  case OpTag::SignedNegOf:
    check(q.x);
    return SignedSet{Sign::Sup, o.max_of(o.neg(ElemSet{q.x}))};
  case OpTag::SignedMeet:
  case OpTag::SignedJoin: {
    check(q.y);
    Naive::nonempty(X);
    bool meet = q.op == OpTag::SignedMeet;
    return o.all_where([&](ElemId z) {
      if (meet ? !o.le(z, q.y) : !o.le(q.y, z))
        return false;
      std::size_t hits = 0;
      for (ElemId s : X)
        if (meet ? o.le(z, s) : o.le(s, z))
          ++hits;
      // meet: Sup needs one carrier element, Inf all; join the other way.
      bool need_all = (q.sign == Sign::Inf) == meet;
      return need_all ? hits == X.size() : hits > 0;
    });
  }
  case OpTag::SignedNeg:
    Naive::nonempty(X);
    return o.all_where([&](ElemId a) {
      std::size_t hits = 0;
      for (ElemId s : X)
        if (o.orth(a, s))
          ++hits;
      return q.sign == Sign::Sup ? hits == X.size() : hits > 0;
    });
  case OpTag::SignedHeight:
    return static_cast<std::int64_t>(o.signed_ht(q.sign, X));
  case OpTag::HtOfSet:
    return static_cast<std::int64_t>(o.set_ht(X));
  case OpTag::ProbMax:
    return o.prob(X, MeasureKind::MaxHeight);
  case OpTag::Mu:
    return o.mu(X);
  case OpTag::ProbSum:
    return o.prob(X, MeasureKind::SumHeight);
  case OpTag::ProbSigned:
    return Rational(o.signed_ht(q.sign, X), o.ht(o.top()));
  case OpTag::IndepProduct:
    return o.prob(o.meet_raw(X, Y), q.measure) == o.prob(X, q.measure) * o.prob(Y, q.measure);
  case OpTag::IndepThreshold: {
    auto not_x = o.neg(X);
    Rational px = o.prob(X, q.measure);
    Rational pnx = o.prob(not_x, q.measure);
    if (px.numerator() == 0 || pnx.numerator() == 0)
      throw Error(Errc::DegenerateConditional, "zero conditioning probability");
    Rational alpha = q.alpha ? *q.alpha : o.prob(Y, q.measure);
    Rational r = o.prob(o.meet_raw(X, Y), q.measure) / px;
    Rational rn = o.prob(o.meet_raw(not_x, Y), q.measure) / pnx;
    if (r == alpha)
      return true;
    if (r < alpha)
      return rn >= alpha;
    return rn <= alpha;
  }
  }
  throw Error(Errc::InvalidArgument, "unhandled query");
}

QueryResult main_dispatch(const Poset& p, const Query& q) {
  const ElemSet& X = q.xs;
  const ElemSet& Y = q.ys;
  switch (q.op) {
  case OpTag::OrderRel: return order_rel(p, q.x, q.y);
  case OpTag::Orthogonal: return orthogonal(p, q.x, q.y);
  case OpTag::Extremes: return extremes(p, X, q.extreme);
  case OpTag::BelowFilter: return below_filter(p, X, q.y);
  case OpTag::SetCompare: return set_compare(p, X, Y, q.mode);
  case OpTag::Height: return static_cast<std::int64_t>(height(p, q.x));
  case OpTag::ExtremesByHeight: return extremes_by_height(p, X, q.height_extreme);
  case OpTag::MeetAll: return meet_all(p, X, q.variant);
  case OpTag::JoinAll: return join_all(p, X, q.variant);
  case OpTag::NegSet: return neg_set(p, X, q.variant);
  case OpTag::Minus: return minus(p, q.x, q.y, q.variant);
  case OpTag::SetMeet: return set_meet(p, X, Y, q.variant);
  case OpTag::SetJoin: return set_join(p, X, Y, q.variant);
  case OpTag::SetMinus: return set_minus(p, X, Y, q.variant);
  case OpTag::AltMeet: return alt_meet(p, X, Y, q.alt);
  case OpTag::AltJoin: return alt_join(p, X, Y, q.alt);
  case OpTag::AltNeg1: return alt_neg1(p, X);
  case OpTag::SignedMeetOf: return signed_meet_of(p, q.x, q.y);
  case OpTag::SignedJoinOf: return signed_join_of(p, q.x, q.y);
  case OpTag::SignedNegOf: return signed_neg_of(p, q.x);
  case OpTag::SignedMeet: return signed_meet(p, q.y, SignedSet{q.sign, X});
  case OpTag::SignedJoin: return signed_join(p, q.y, SignedSet{q.sign, X});
  case OpTag::SignedNeg: return signed_neg(p, SignedSet{q.sign, X});
  case OpTag::SignedHeight: return static_cast<std::int64_t>(signed_height(p, SignedSet{q.sign, X}));
  case OpTag::HtOfSet: return static_cast<std::int64_t>(ht_of_set(p, X));
  case OpTag::ProbMax: return prob_max(p, X);
  case OpTag::Mu: return mu(p, X);
  case OpTag::ProbSum: return prob_sum(p, X);
  case OpTag::ProbSigned: return prob_signed(p, SignedSet{q.sign, X});
  case OpTag::IndepProduct: return indep_product(p, X, Y, q.measure);
  case OpTag::IndepThreshold: return indep_threshold(p, X, Y, q.alpha, q.measure);
  }
  throw Error(Errc::InvalidArgument, "unhandled query");
}

template <class F>
QueryResult capture(F&& f) {
  try {
    return f();
  } catch (const Error& e) {
    return e.code();
  }
}

// ---------------------------------------------------------------------------
// Law suite helpers.

class LawRecorder {
public:
  LawRecorder(const Poset& p, Report& r) : p_(p), r_(r) {}

  void sets_equal(std::string_view law, const std::string& args, const ElemSet& lhs, const ElemSet& rhs) {
    ++r_.cases;
    if (lhs != rhs)
      r_.mismatches.push_back({std::string(law) + " " + args, format_set(p_, lhs), format_set(p_, rhs)});
  }

  void subset(std::string_view law, const std::string& args, const ElemSet& lhs, const ElemSet& rhs) {
    ++r_.cases;
    if (!lhs.is_subset_of(rhs))
      r_.mismatches.push_back({std::string(law) + " " + args, format_set(p_, lhs), "superset of " + format_set(p_, rhs)});
  }

  void holds(std::string_view law, const std::string& args, bool ok, const std::string& detail = {}) {
    ++r_.cases;
    if (!ok)
      r_.mismatches.push_back({std::string(law) + " " + args, detail.empty() ? "false" : detail, "true"});
  }

  std::string s(const ElemSet& x) const { return format_set(p_, x); }
  std::string e(ElemId x) const { return p_.label(x); }

private:
  const Poset& p_;
  Report& r_;
};

void algebra_laws(const Poset& p, LawRecorder& rec, const std::vector<std::pair<ElemSet, ElemSet>>& samples) {
  const auto n = static_cast<ElemId>(p.size());
  const ElemSet bot{p.bottom()};
  const Variant variants[] = {Variant::Raw, Variant::Prime, Variant::HtPrime};

  for (const auto& [X, Y] : samples) {
    const auto args = "(" + rec.s(X) + ", " + rec.s(Y) + ")";
    for (Variant v : variants) {
      rec.sets_equal("meet commutes", args, set_meet(p, X, Y, v), set_meet(p, Y, X, v));
      rec.sets_equal("join commutes", args, set_join(p, X, Y, v), set_join(p, Y, X, v));
    }
    rec.sets_equal("X meet negX = {bottom}", rec.s(X), set_meet(p, X, neg_set(p, X, Variant::Raw), Variant::Raw), bot);
    auto wider = set_union(X, Y);
    rec.subset("negation antitone", args, neg_set(p, wider, Variant::Raw), neg_set(p, X, Variant::Raw));
    rec.subset("X within negnegX", rec.s(X), X, neg_set(p, neg_set(p, X, Variant::Raw), Variant::Raw));
  }

  for (ElemId x = 0; x < n; ++x) {
    const ElemSet sx{x};
    rec.sets_equal("x meet negx = {bottom}", rec.e(x), set_meet(p, sx, neg_set(p, sx, Variant::Raw), Variant::Raw), bot);
    rec.sets_equal("x minus x = {bottom}", rec.e(x), minus(p, x, x, Variant::Raw), bot);
    for (ElemId y = 0; y < n; ++y) {
      const ElemSet sy{y};
      const auto args = "(" + rec.e(x) + ", " + rec.e(y) + ")";
      rec.sets_equal("x meet negy = x minus y", args, set_meet(p, sx, neg_set(p, sy, Variant::Raw), Variant::Raw),
                     minus(p, x, y, Variant::Raw));
      for (Variant v : variants)
        rec.sets_equal("set_minus agrees with minus", args, set_minus(p, sx, sy, v), minus(p, x, y, v));
    }
  }

  auto triple = [&](ElemId x, ElemId y, ElemId z) {
    const auto args = "(" + rec.e(x) + ", " + rec.e(y) + ", " + rec.e(z) + ")";
    const ElemId xyz[] = {x, y, z};
    const ElemId yz[] = {y, z};
    const ElemSet sx{x};
    for (Variant v : {Variant::Raw, Variant::Prime}) {
      rec.sets_equal("meet associative", args, meet_all(p, xyz, v), set_meet(p, sx, meet_all(p, yz, v), v));
      rec.sets_equal("join associative", args, join_all(p, xyz, v), set_join(p, sx, join_all(p, yz, v), v));
    }
  };
  if (n <= 16) {
    for (ElemId x = 0; x < n; ++x)
      for (ElemId y = 0; y < n; ++y)
        for (ElemId z = 0; z < n; ++z)
          triple(x, y, z);
  } else {
    std::uint64_t state = n;
    for (int i = 0; i < 2000; ++i)
      triple(static_cast<ElemId>(pick(state, n)), static_cast<ElemId>(pick(state, n)),
             static_cast<ElemId>(pick(state, n)));
  }
}

void height_laws(const Poset& p, LawRecorder& rec, const std::vector<std::pair<ElemSet, ElemSet>>& samples) {
  const auto n = static_cast<ElemId>(p.size());
  const int top_ht = p.height(p.top());
  rec.holds("ht(bottom) = 0", "", p.height(p.bottom()) == 0, std::to_string(p.height(p.bottom())));
  rec.holds("ht(top) > 0", "", top_ht > 0, std::to_string(top_ht));
  for (ElemId x = 0; x < n; ++x) {
    rec.holds("ht(x) <= ht(top)", rec.e(x), p.height(x) <= top_ht);
    for (ElemId y = 0; y < n; ++y) {
      if (p.lt(x, y))
        rec.holds("x < y implies ht(x) < ht(y)", "(" + rec.e(x) + ", " + rec.e(y) + ")", p.height(x) < p.height(y));
      if (!orthogonal(p, x, y))
        continue;
      for (ElemId w = 0; w < n; ++w)
        if (p.leq(w, x))
          rec.holds("orthogonality downward closed", "(" + rec.e(w) + " <= " + rec.e(x) + ", " + rec.e(y) + ")",
                    orthogonal(p, w, y));
    }
  }
  for (const auto& [X, Y] : samples) {
    (void)Y;
    const auto mx = extremes(p, X, Extreme::Max);
    const auto mn = extremes(p, X, Extreme::Min);
    const auto maxht = extremes_by_height(p, X, HeightExtreme::MaxHt);
    const auto minht = extremes_by_height(p, X, HeightExtreme::MinHt);
    rec.sets_equal("maxht(X) = maxht(max(X))", rec.s(X), maxht, extremes_by_height(p, mx, HeightExtreme::MaxHt));
    rec.sets_equal("minht(X) = minht(min(X))", rec.s(X), minht, extremes_by_height(p, mn, HeightExtreme::MinHt));
    rec.subset("maxht(X) within max(X)", rec.s(X), maxht, mx);
    rec.subset("minht(X) within min(X)", rec.s(X), minht, mn);
  }
}

void schnitt_laws(const Poset& p, LawRecorder& rec, const std::vector<std::pair<ElemSet, ElemSet>>& samples) {
  for (const auto& [X, Y] : samples) {
    const auto args = "(" + rec.s(X) + ", " + rec.s(Y) + ")";
    const int hx = ht_of_set(p, X);
    const int hy = ht_of_set(p, Y);
    const int hm = ht_of_set(p, set_meet(p, X, Y, Variant::Raw));
    const int hj = ht_of_set(p, set_join(p, X, Y, Variant::Raw));
    rec.holds("ht(X meet Y) <= min", args, hm <= std::min(hx, hy), std::to_string(hm));
    rec.holds("ht(X join Y) >= max", args, hj >= std::max(hx, hy), std::to_string(hj));
  }
}

void measure_laws(const Poset& p, LawRecorder& rec, const std::vector<std::pair<ElemSet, ElemSet>>& samples) {
  const auto everything = p.all();
  rec.holds("prob_sum(all) = 1", "", prob_sum(p, everything) == Rational(1));
  rec.holds("prob_max(all) = 1", "", prob_max(p, everything) == Rational(1));
  for (const auto& [X, Y] : samples) {
    const auto wide = set_union(X, Y);
    const auto args = "(" + rec.s(X) + " within " + rec.s(wide) + ")";
    rec.holds("ht monotone", args, ht_of_set(p, X) <= ht_of_set(p, wide));
    rec.holds("mu monotone", args, mu(p, X) <= mu(p, wide));
    rec.holds("prob_max monotone", args, prob_max(p, X) <= prob_max(p, wide));
    rec.holds("prob_sum monotone", args, prob_sum(p, X) <= prob_sum(p, wide));
    rec.holds("prob_max in [0,1]", rec.s(X), in_unit_interval(prob_max(p, X)));
    rec.holds("prob_sum in [0,1]", rec.s(X), in_unit_interval(prob_sum(p, X)));
  }
  for (ElemId x = 0; x < p.size(); ++x) {
    const ElemSet sx{x};
    const auto total = prob_sum(p, sx) + prob_sum(p, neg_set(p, sx, Variant::Raw));
    if (x == p.bottom())
      rec.holds("P(bottom) + P(neg bottom) = 1", rec.e(x), total == Rational(1), format_rational(total));
    else if (x != p.top())
      rec.holds("P(x) + P(neg x) < 1", rec.e(x), total < 1, format_rational(total));
  }
}

void signed_laws(const Poset& p, LawRecorder& rec, const std::vector<std::pair<ElemSet, ElemSet>>& samples) {
  const auto n = static_cast<ElemId>(p.size());
  for (const auto& [X, Y] : samples) {
    (void)Y;
    const SignedSet sup{Sign::Sup, X};
    const SignedSet inf{Sign::Inf, X};
    rec.subset("signed_neg sup within inf", rec.s(X), signed_neg(p, sup), signed_neg(p, inf));
    for (ElemId y = 0; y < n; ++y) {
      const auto args = "(" + rec.e(y) + ", " + rec.s(X) + ")";
      const auto meet_inf = signed_meet(p, y, inf);
      rec.subset("signed_meet inf within sup", args, meet_inf, signed_meet(p, y, sup));
      rec.subset("signed_join sup within inf", args, signed_join(p, y, sup), signed_join(p, y, inf));
      for (ElemId z : meet_inf)
        rec.holds("inf meet is a common lower bound", args,
                  std::all_of(X.begin(), X.end(), [&](ElemId s) { return p.leq(z, s); }), rec.e(z));
    }
  }
  for (ElemId y = 0; y < n; ++y)
    for (ElemId s = 0; s < n; ++s) {
      const auto args = "(" + rec.e(y) + ", " + rec.e(s) + ")";
      const ElemId ys[] = {y, s};
      for (Sign sign : {Sign::Sup, Sign::Inf}) {
        const SignedSet single{sign, ElemSet{s}};
        rec.sets_equal("singleton signed_meet", args, signed_meet(p, y, single), meet_all(p, ys, Variant::Raw));
        rec.sets_equal("singleton signed_join", args, signed_join(p, y, single), join_all(p, ys, Variant::Raw));
        rec.sets_equal("singleton signed_neg", args, signed_neg(p, single), neg_set(p, ElemSet{s}, Variant::Raw));
      }
    }
}

} // namespace

std::string_view to_string(OpTag op) {
  return kOpNames.at(static_cast<std::size_t>(op));
}

void Report::merge(const Report& other) {
  cases += other.cases;
  mismatches.insert(mismatches.end(), other.mismatches.begin(), other.mismatches.end());
}

std::string describe(const Poset& p, const Query& q) {
  auto e = [&](ElemId x) { return x < p.size() ? p.label(x) : "#" + std::to_string(x); };
  auto s = [&](const ElemSet& x) {
    std::string out = "{";
    for (ElemId id : x)
      out += (out.size() > 1 ? "," : "") + e(id);
    return out + "}";
  };
  auto signed_arg = [&] { return std::string(to_string(q.sign)) + s(q.xs); };
  std::string args;
  switch (q.op) {
  case OpTag::OrderRel:
  case OpTag::Orthogonal:
  case OpTag::SignedMeetOf:
  case OpTag::SignedJoinOf:
    args = e(q.x) + ", " + e(q.y);
    break;
  case OpTag::Height:
  case OpTag::SignedNegOf:
    args = e(q.x);
    break;
  case OpTag::Extremes:
    args = s(q.xs) + (q.extreme == Extreme::Max ? ", Max" : ", Min");
    break;
  case OpTag::ExtremesByHeight:
    args = s(q.xs) + (q.height_extreme == HeightExtreme::MaxHt ? ", MaxHt" : ", MinHt");
    break;
  case OpTag::BelowFilter:
    args = s(q.xs) + ", " + e(q.y);
    break;
  case OpTag::SetCompare:
    args = s(q.xs) + ", " + s(q.ys) + ", " + std::string(mode_name(q.mode));
    break;
  case OpTag::MeetAll:
  case OpTag::JoinAll:
  case OpTag::NegSet:
    args = s(q.xs) + ", " + std::string(to_string(q.variant));
    break;
  case OpTag::Minus:
    args = e(q.x) + ", " + e(q.y) + ", " + std::string(to_string(q.variant));
    break;
  case OpTag::SetMeet:
  case OpTag::SetJoin:
  case OpTag::SetMinus:
    args = s(q.xs) + ", " + s(q.ys) + ", " + std::string(to_string(q.variant));
    break;
  case OpTag::AltMeet:
  case OpTag::AltJoin:
    args = s(q.xs) + ", " + s(q.ys) + ", " + std::string(to_string(q.alt));
    break;
  case OpTag::AltNeg1:
  case OpTag::HtOfSet:
  case OpTag::ProbMax:
  case OpTag::Mu:
  case OpTag::ProbSum:
    args = s(q.xs);
    break;
  case OpTag::SignedMeet:
  case OpTag::SignedJoin:
    args = e(q.y) + ", " + signed_arg();
    break;
  case OpTag::SignedNeg:
  case OpTag::SignedHeight:
  case OpTag::ProbSigned:
    args = signed_arg();
    break;
  case OpTag::IndepProduct:
    args = s(q.xs) + ", " + s(q.ys) + ", " + std::string(to_string(q.measure));
    break;
  case OpTag::IndepThreshold:
    args = s(q.xs) + ", " + s(q.ys) + ", " + (q.alpha ? format_rational(*q.alpha) : "P(B)") + ", " +
           std::string(to_string(q.measure));
    break;
  }
  return std::string(to_string(q.op)) + "(" + args + ")";
}

std::string format_result(const Poset& p, const QueryResult& r) {
  return std::visit(
      [&](const auto& v) -> std::string {
        using T = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<T, Errc>)
          return "error " + std::string(to_string(v));
        else if constexpr (std::is_same_v<T, ElemSet>)
          return format_set(p, v);
        else if constexpr (std::is_same_v<T, SignedSet>)
          return format_signed(p, v);
        else if constexpr (std::is_same_v<T, Rational>)
          return format_rational(v);
        else if constexpr (std::is_same_v<T, bool>)
          return v ? "true" : "false";
        else if constexpr (std::is_same_v<T, std::int64_t>)
          return std::to_string(v);
        else
          return std::string(to_string(v));
      },
      r);
}

QueryResult main_eval(const Poset& p, const Query& q) {
  return capture([&] { return main_dispatch(p, q); });
}

QueryResult naive_eval(const Poset& p, const Query& q) {
  return capture([&] { return naive_dispatch(p, q); });
}

Query random_query(const Poset& p, std::uint64_t& state) {
  Query q;
  q.op = static_cast<OpTag>(pick(state, kOpTagCount));
  q.variant = static_cast<Variant>(pick(state, 3));
  q.alt = static_cast<AltKind>(pick(state, 2));
  q.mode = static_cast<CompareMode>(pick(state, 3));
  q.extreme = static_cast<Extreme>(pick(state, 2));
  q.height_extreme = static_cast<HeightExtreme>(pick(state, 2));
  q.sign = static_cast<Sign>(pick(state, 2));
  q.measure = static_cast<MeasureKind>(pick(state, 2));
  q.x = static_cast<ElemId>(pick(state, p.size()));
  q.y = static_cast<ElemId>(pick(state, p.size()));
  q.xs = random_subset(p, state, 3);
  q.ys = random_subset(p, state, 3);
  if (pick(state, 2) == 0)
    q.alpha = Rational(static_cast<std::int64_t>(pick(state, 5)), 4);
  return q;
}

Report differential_check(const Poset& p, std::uint64_t seed, std::size_t cases, const Evaluator& main) {
  Report report;
  std::uint64_t state = seed;
  for (std::size_t i = 0; i < cases; ++i) {
    Query q = random_query(p, state);
    auto lhs = main(p, q);
    auto rhs = naive_eval(p, q);
    ++report.cases;
    if (lhs != rhs)
      report.mismatches.push_back({describe(p, q), format_result(p, lhs), format_result(p, rhs)});
  }
  return report;
}

Report lattice_oracle_check(const std::vector<std::string>& atoms) {
  if (atoms.size() > 4)
    throw Error(Errc::TooManyAtoms, "lattice oracle check limited to 4 atoms");
  const Poset p = powerset_lattice(atoms);
  const std::uint32_t full = (1u << atoms.size()) - 1;
  auto node = [&](std::uint32_t mask) {
    std::set<std::string> subset;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask & (1u << i))
        subset.insert(atoms[i]);
    return p.id(subset_label(subset));
  };
  Report report;
  for (std::uint32_t u = 0; u <= full; ++u)
    for (std::uint32_t v = 0; v <= full; ++v) {
      ++report.cases;
      const ElemSet su{node(u)};
      const ElemSet sv{node(v)};
      const auto args = "(" + format_set(p, su) + ", " + format_set(p, sv) + ")";
      auto compare = [&](std::string_view what, const ElemSet& got, std::uint32_t expected) {
        const ElemSet want{node(expected)};
        if (got != want)
          report.mismatches.push_back({std::string(what) + args, format_set(p, got), format_set(p, want)});
      };
      compare("meet' = intersection", set_meet(p, su, sv, Variant::Prime), u & v);
      compare("join' = union", set_join(p, su, sv, Variant::Prime), u | v);
      compare("neg' = complement", neg_set(p, su, Variant::Prime), full & ~u);
    }
  return report;
}

Report law_check(const Poset& p, std::uint64_t seed, unsigned groups, std::size_t samples) {
  std::vector<std::pair<ElemSet, ElemSet>> pairs;
  std::uint64_t state = seed;
  for (std::size_t i = 0; i < samples; ++i) {
    auto X = random_subset(p, state, 4);
    auto Y = random_subset(p, state, 4);
    pairs.emplace_back(std::move(X), std::move(Y));
  }
  Report report;
  LawRecorder rec(p, report);
  if (groups & kLawAlgebra)
    algebra_laws(p, rec, pairs);
  if (groups & kLawHeight)
    height_laws(p, rec, pairs);
  if (groups & kLawSchnitt)
    schnitt_laws(p, rec, pairs);
  if (groups & kLawMeasure)
    measure_laws(p, rec, pairs);
  if (groups & kLawSigned)
    signed_laws(p, rec, pairs);
  return report;
}

} // namespace posetops

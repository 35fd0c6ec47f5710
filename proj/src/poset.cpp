#include "posetops/poset.hpp"

#include <algorithm>
#include <cctype>
#include <deque>
#include <set>

namespace posetops {

namespace {

constexpr std::string_view kMetaChars = "&|!\\(){},#";

} // namespace

bool valid_label(std::string_view label) {
  if (label.empty() || label.front() == '_' || label.front() == '\'')
    return false;
  return std::none_of(label.begin(), label.end(), [](char c) {
    return std::isspace(static_cast<unsigned char>(c)) || kMetaChars.find(c) != std::string_view::npos;
  });
}

std::optional<ElemId> Poset::find(std::string_view label) const {
  if (label == kSynthBottom)
    return bottom();
  if (label == kSynthTop)
    return top();
  auto it = index_.find(label);
  if (it == index_.end())
    return std::nullopt;
  return it->second;
}

ElemId Poset::id(std::string_view label) const {
  if (auto found = find(label))
    return *found;
  throw Error(Errc::UnknownLabel, "unknown label '" + std::string(label) + "' in poset '" + name_ + "'",
              std::string(label));
}

ElemSet Poset::set_of(std::span<const std::string> labels) const {
  std::vector<ElemId> ids;
  ids.reserve(labels.size());
  for (const auto& l : labels)
    ids.push_back(id(l));
  return ElemSet(std::move(ids));
}

ElemSet Poset::set_of(std::initializer_list<std::string_view> labels) const {
  std::vector<ElemId> ids;
  for (auto l : labels)
    ids.push_back(id(l));
  return ElemSet(std::move(ids));
}

ElemSet Poset::all() const {
  std::vector<ElemId> ids(size());
  for (ElemId i = 0; i < size(); ++i)
    ids[i] = i;
  return ElemSet(std::move(ids));
}

ElemSet Poset::down_set(ElemId x) const {
  check_member(x);
  std::vector<ElemId> ids;
  for (ElemId a = 0; a < size(); ++a)
    if (leq(a, x))
      ids.push_back(a);
  return ElemSet(std::move(ids));
}

ElemSet Poset::up_set(ElemId x) const {
  check_member(x);
  std::vector<ElemId> ids;
  for (ElemId a = 0; a < size(); ++a)
    if (leq(x, a))
      ids.push_back(a);
  return ElemSet(std::move(ids));
}

void Poset::check_member(ElemId x) const {
  if (x >= size())
    throw Error(Errc::UnknownLabel, "element id " + std::to_string(x) + " is not in poset '" + name_ + "'");
}

void Poset::check_members(const ElemSet& xs) const {
  for (ElemId x : xs)
    check_member(x);
}

Poset build_poset(std::string name, std::vector<std::string> elems, std::vector<LabelPair> generators,
                  std::optional<std::string> bottom, std::optional<std::string> top) {
  std::set<std::string, std::less<>> seen;
  for (const auto& l : elems) {
    if (!valid_label(l))
      throw Error(Errc::InvalidLabel, "invalid element label '" + l + "'", l);
    if (!seen.insert(l).second)
      throw Error(Errc::DuplicateLabel, "duplicate element label '" + l + "'", l);
  }
  for (const auto* bound : {&bottom, &top}) {
    if (!*bound)
      continue;
    if (!valid_label(**bound))
      throw Error(Errc::InvalidLabel, "invalid bound label '" + **bound + "'", **bound);
    seen.insert(**bound);
  }

  std::size_t total = seen.size() + (bottom ? 0 : 1) + (top ? 0 : 1);
  if (total < 2)
    throw Error(Errc::TooSmall, "poset '" + name + "' needs at least two elements");
  if (bottom && top && *bottom == *top)
    throw Error(Errc::BoundsViolation, "bottom and top must differ", *bottom);

  Poset p;
  p.name_ = std::move(name);
  p.bottom_synth_ = !bottom;
  p.top_synth_ = !top;

  // Canonical order: bottom, sorted inner labels, top.
  p.labels_.push_back(bottom ? *bottom : std::string(kSynthBottom));
  for (const auto& l : seen)
    if (l != p.labels_.front() && (!top || l != *top))
      p.labels_.push_back(l);
  p.labels_.push_back(top ? *top : std::string(kSynthTop));

  const std::size_t n = p.labels_.size();
  for (ElemId i = 0; i < n; ++i)
    p.index_.emplace(p.labels_[i], i);

  auto resolve = [&](const std::string& l) {
    auto it = p.index_.find(l);
    if (it == p.index_.end())
      throw Error(Errc::UnknownLabel, "generator mentions undeclared label '" + l + "'", l);
    return it->second;
  };
  for (const auto& [from, to] : generators)
    p.generators_.emplace_back(resolve(from), resolve(to));
  if (p.bottom_synth_)
    for (ElemId i = 1; i < n; ++i)
      p.generators_.emplace_back(p.bottom(), i);
  if (p.top_synth_)
    for (ElemId i = 0; i + 1 < n; ++i)
      p.generators_.emplace_back(i, p.top());

  auto& less = p.less_;
  less.assign(n * n, 0);
  for (auto [from, to] : p.generators_)
    less[from * n + to] = 1;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (less[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (less[k * n + j])
            less[i * n + j] = 1;

  for (ElemId i = 0; i < n; ++i)
    if (less[i * n + i])
      throw Error(Errc::CycleDetected, "order generators form a cycle through '" + p.labels_[i] + "'",
                  p.labels_[i]);

  for (ElemId i = 1; i < n; ++i)
    if (!less[p.bottom() * n + i])
      throw Error(Errc::BoundsViolation,
                  "declared bottom '" + p.labels_.front() + "' is not below '" + p.labels_[i] + "'",
                  p.labels_.front());
  for (ElemId i = 0; i + 1 < n; ++i)
    if (!less[i * n + p.top()])
      throw Error(Errc::BoundsViolation,
                  "declared top '" + p.labels_.back() + "' is not above '" + p.labels_[i] + "'",
                  p.labels_.back());

  for (ElemId x = 0; x < n; ++x)
    for (ElemId y = 0; y < n; ++y) {
      if (!less[x * n + y])
        continue;
      bool covered = true;
      for (ElemId z = 0; z < n && covered; ++z)
        if (less[x * n + z] && less[z * n + y])
          covered = false;
      if (covered)
        p.covers_.emplace_back(x, y);
    }

  // Longest path from bottom over the cover graph, in topological order.
  std::vector<std::vector<ElemId>> succ(n);
  std::vector<std::size_t> indegree(n, 0);
  for (auto [from, to] : p.covers_) {
    succ[from].push_back(to);
    ++indegree[to];
  }
  p.heights_.assign(n, 0);
  std::deque<ElemId> ready;
  for (ElemId i = 0; i < n; ++i)
    if (indegree[i] == 0)
      ready.push_back(i);
  while (!ready.empty()) {
    ElemId x = ready.front();
    ready.pop_front();
    for (ElemId y : succ[x]) {
      p.heights_[y] = std::max(p.heights_[y], p.heights_[x] + 1);
      if (--indegree[y] == 0)
        ready.push_back(y);
    }
  }
  return p;
}

std::string_view to_string(Relation r) {
  switch (r) {
  case Relation::Lt: return "Lt";
  case Relation::Gt: return "Gt";
  case Relation::Eq: return "Eq";
  case Relation::Incomparable: return "Incomparable";
  }
  return "?";
}

Relation order_rel(const Poset& p, ElemId x, ElemId y) {
  p.check_member(x);
  p.check_member(y);
  if (x == y)
    return Relation::Eq;
  if (p.lt(x, y))
    return Relation::Lt;
  if (p.lt(y, x))
    return Relation::Gt;
  return Relation::Incomparable;
}

bool orthogonal(const Poset& p, ElemId x, ElemId y) {
  p.check_member(x);
  p.check_member(y);
  for (ElemId a = 0; a < p.size(); ++a)
    if (a != p.bottom() && p.leq(a, x) && p.leq(a, y))
      return false;
  return true;
}

ElemSet extremes(const Poset& p, const ElemSet& xs, Extreme which) {
  if (xs.empty())
    throw Error(Errc::EmptyInput, which == Extreme::Min ? "min of an empty set" : "max of an empty set");
  p.check_members(xs);
  std::vector<ElemId> out;
  for (ElemId x : xs) {
    bool dominated = std::any_of(xs.begin(), xs.end(), [&](ElemId other) {
      return which == Extreme::Min ? p.lt(other, x) : p.lt(x, other);
    });
    if (!dominated)
      out.push_back(x);
  }
  return ElemSet(std::move(out));
}

ElemSet below_filter(const Poset& p, const ElemSet& xs, ElemId y) {
  p.check_member(y);
  p.check_members(xs);
  std::vector<ElemId> out;
  for (ElemId x : xs)
    if (p.leq(x, y))
      out.push_back(x);
  return ElemSet(std::move(out));
}

bool set_compare(const Poset& p, const ElemSet& xs, const ElemSet& ys, CompareMode mode) {
  if (xs.empty() || ys.empty())
    throw Error(Errc::EmptyInput, "set comparison needs two nonempty sets");
  p.check_members(xs);
  p.check_members(ys);
  auto leq = [&] {
    return std::all_of(xs.begin(), xs.end(), [&](ElemId x) {
      return std::any_of(ys.begin(), ys.end(), [&](ElemId y) { return p.leq(x, y); });
    });
  };
  switch (mode) {
  case CompareMode::Leq:
    return leq();
  case CompareMode::Leq1:
    return std::all_of(ys.begin(), ys.end(), [&](ElemId y) {
      return std::any_of(xs.begin(), xs.end(), [&](ElemId x) { return p.leq(x, y); });
    });
  case CompareMode::Lt:
    return leq() && std::any_of(ys.begin(), ys.end(), [&](ElemId y) {
             auto below = below_filter(p, xs, y);
             return std::all_of(below.begin(), below.end(), [&](ElemId x) { return p.lt(x, y); });
           });
  }
  return false;
}

int height(const Poset& p, ElemId x) {
  p.check_member(x);
  return p.height(x);
}

ElemSet extremes_by_height(const Poset& p, const ElemSet& xs, HeightExtreme which) {
  if (xs.empty())
    throw Error(Errc::EmptyInput, "height extremes of an empty set");
  p.check_members(xs);
  int best = p.height(xs.front());
  for (ElemId x : xs)
    best = which == HeightExtreme::MaxHt ? std::max(best, p.height(x)) : std::min(best, p.height(x));
  std::vector<ElemId> out;
  for (ElemId x : xs)
    if (p.height(x) == best)
      out.push_back(x);
  return ElemSet(std::move(out));
}

std::string format_set(const Poset& p, const ElemSet& xs) {
  std::string out = "{";
  bool first = true;
  for (ElemId x : xs) {
    if (!first)
      out += ',';
    out += p.label(x);
    first = false;
  }
  out += '}';
  return out;
}

} // namespace posetops

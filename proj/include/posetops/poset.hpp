#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "posetops/elem_set.hpp"
#include "posetops/error.hpp"

namespace posetops {

inline constexpr std::string_view kSynthBottom = "_bot";
inline constexpr std::string_view kSynthTop = "_top";

using LabelPair = std::pair<std::string, std::string>;
using Edge = std::pair<ElemId, ElemId>;

/// Finite strict order with distinguished bottom and top.
///
/// Built once by build_poset() and immutable afterwards. The strict order is
/// stored transitively closed; the transitive reduction (cover relation) and
/// the height of every element are computed at build time.
class Poset {
public:
  const std::string& name() const noexcept { return name_; }
  std::size_t size() const noexcept { return labels_.size(); }

  ElemId bottom() const noexcept { return 0; }
  ElemId top() const noexcept { return static_cast<ElemId>(labels_.size() - 1); }
  bool bottom_synthesized() const noexcept { return bottom_synth_; }
  bool top_synthesized() const noexcept { return top_synth_; }
  bool synthesized(ElemId x) const noexcept {
    return (x == bottom() && bottom_synth_) || (x == top() && top_synth_);
  }

  const std::string& label(ElemId x) const { return labels_.at(x); }
  const std::vector<std::string>& labels() const noexcept { return labels_; }

  /// Resolves a label. The reserved spellings "_bot"/"_top" always name the
  /// bounds, whatever their declared labels are.
  std::optional<ElemId> find(std::string_view label) const;
  /// Like find(), but throws UnknownLabel.
  ElemId id(std::string_view label) const;
  ElemSet set_of(std::span<const std::string> labels) const;
  ElemSet set_of(std::initializer_list<std::string_view> labels) const;

  bool lt(ElemId x, ElemId y) const { return less_[x * size() + y] != 0; }
  bool leq(ElemId x, ElemId y) const { return x == y || lt(x, y); }

  int height(ElemId x) const { return heights_.at(x); }

  ElemSet all() const;
  /// {a : a <= x}
  ElemSet down_set(ElemId x) const;
  /// {a : a >= x}
  ElemSet up_set(ElemId x) const;

  /// Edges of the transitive reduction, sorted.
  const std::vector<Edge>& covers() const noexcept { return covers_; }
  /// The generator pairs the poset was built from, plus the edges that tie
  /// synthesized bounds to every other element. Not closed.
  const std::vector<Edge>& generators() const noexcept { return generators_; }

  /// Throws UnknownLabel unless every member is an element of this poset.
  void check_members(const ElemSet& xs) const;
  void check_member(ElemId x) const;

private:
  friend Poset build_poset(std::string, std::vector<std::string>, std::vector<LabelPair>,
                           std::optional<std::string>, std::optional<std::string>);
  Poset() = default;

  std::string name_;
  std::vector<std::string> labels_;
  std::map<std::string, ElemId, std::less<>> index_;
  std::vector<unsigned char> less_;
  std::vector<int> heights_;
  std::vector<Edge> covers_;
  std::vector<Edge> generators_;
  bool bottom_synth_ = false;
  bool top_synth_ = false;
};

/// Builds and validates a poset from arbitrary order generators (x, y)
/// meaning x < y. Missing bounds are synthesized as "_bot"/"_top"; declared
/// bounds must already be strictly least/greatest in the generated order.
/// A declared bound may, but need not, also appear in `elems`.
Poset build_poset(std::string name, std::vector<std::string> elems,
                  std::vector<LabelPair> generators,
                  std::optional<std::string> bottom = std::nullopt,
                  std::optional<std::string> top = std::nullopt);

/// True when `label` is acceptable as a user-supplied element label.
bool valid_label(std::string_view label);

enum class Relation { Lt, Gt, Eq, Incomparable };
enum class Extreme { Min, Max };
enum class HeightExtreme { MaxHt, MinHt };
enum class CompareMode { Leq, Lt, Leq1 };

std::string_view to_string(Relation r);

Relation order_rel(const Poset& p, ElemId x, ElemId y);

/// x and y are orthogonal when bottom is their only common lower bound.
bool orthogonal(const Poset& p, ElemId x, ElemId y);

ElemSet extremes(const Poset& p, const ElemSet& xs, Extreme which);

/// {x in xs : x <= y}
ElemSet below_filter(const Poset& p, const ElemSet& xs, ElemId y);

/// Leq:  every x has some y with x <= y.
/// Leq1: every y has some x with x <= y.
/// Lt:   Leq, and some y is strictly above every x in the below-filter of y
///       (the existential reading of the quantifier order).
bool set_compare(const Poset& p, const ElemSet& xs, const ElemSet& ys, CompareMode mode);

int height(const Poset& p, ElemId x);

/// Members of xs attaining the largest (MaxHt) or smallest (MinHt) height.
/// Ties are kept.
ElemSet extremes_by_height(const Poset& p, const ElemSet& xs, HeightExtreme which);

/// "{a,b,_top}" in canonical order.
std::string format_set(const Poset& p, const ElemSet& xs);

} // namespace posetops

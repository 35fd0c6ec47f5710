#pragma once

#include <compare>
#include <cstdint>
#include <initializer_list>
#include <vector>

namespace posetops {

/// Index of an element inside its poset. Ids follow the poset's canonical
/// order: bottom first, then the remaining labels sorted, top last.
using ElemId = std::uint32_t;

/// A finite subset of a poset's ground set, kept sorted by id.
class ElemSet {
public:
  using const_iterator = std::vector<ElemId>::const_iterator;

  ElemSet() = default;
  ElemSet(std::initializer_list<ElemId> ids);
  explicit ElemSet(std::vector<ElemId> ids);

  static ElemSet singleton(ElemId id) { return ElemSet{id}; }

  bool contains(ElemId id) const;
  void insert(ElemId id);

  std::size_t size() const noexcept { return ids_.size(); }
  bool empty() const noexcept { return ids_.empty(); }
  const_iterator begin() const noexcept { return ids_.begin(); }
  const_iterator end() const noexcept { return ids_.end(); }
  ElemId front() const { return ids_.front(); }
  const std::vector<ElemId>& ids() const noexcept { return ids_; }

  bool is_subset_of(const ElemSet& other) const;

  friend auto operator<=>(const ElemSet&, const ElemSet&) = default;

private:
  std::vector<ElemId> ids_;
};

ElemSet set_union(const ElemSet& a, const ElemSet& b);
ElemSet set_intersection(const ElemSet& a, const ElemSet& b);
ElemSet set_difference(const ElemSet& a, const ElemSet& b);

} // namespace posetops

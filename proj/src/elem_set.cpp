#include "posetops/elem_set.hpp"

#include <algorithm>
#include <iterator>

namespace posetops {

ElemSet::ElemSet(std::initializer_list<ElemId> ids) : ElemSet(std::vector<ElemId>(ids)) {}

ElemSet::ElemSet(std::vector<ElemId> ids) : ids_(std::move(ids)) {
  std::sort(ids_.begin(), ids_.end());
  ids_.erase(std::unique(ids_.begin(), ids_.end()), ids_.end());
}

bool ElemSet::contains(ElemId id) const {
  return std::binary_search(ids_.begin(), ids_.end(), id);
}

void ElemSet::insert(ElemId id) {
  auto it = std::lower_bound(ids_.begin(), ids_.end(), id);
  if (it == ids_.end() || *it != id)
    ids_.insert(it, id);
}

bool ElemSet::is_subset_of(const ElemSet& other) const {
  return std::includes(other.ids_.begin(), other.ids_.end(), ids_.begin(), ids_.end());
}

ElemSet set_union(const ElemSet& a, const ElemSet& b) {
  std::vector<ElemId> out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ElemSet(std::move(out));
}

ElemSet set_intersection(const ElemSet& a, const ElemSet& b) {
  std::vector<ElemId> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ElemSet(std::move(out));
}

ElemSet set_difference(const ElemSet& a, const ElemSet& b) {
  std::vector<ElemId> out;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return ElemSet(std::move(out));
}

} // namespace posetops

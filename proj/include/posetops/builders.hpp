#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "posetops/measure.hpp"

namespace posetops {

inline constexpr std::size_t kMaxPowersetAtoms = 5;

/// One coordinate of a valued product: a chain of labels ordered by value.
struct ValuedFactor {
  std::vector<std::string> labels;
  std::map<std::string, std::int64_t> value_of;
};

/// The worked example posets.
enum class FixtureName {
  v1, alt, dist, nn, orth, htv, supinf, schnitt1, schnitt2,
  eq1a, eq1b, eq1c, pprime, seq_unit, seq_weighted, remark_ss,
};

const std::vector<FixtureName>& all_fixtures();
std::string_view to_string(FixtureName f);
/// Throws UnknownFixture.
FixtureName parse_fixture_name(std::string_view name);

/// Label used for a subset of atoms: the sorted atoms concatenated, or
/// "empty" for the empty set.
std::string subset_label(const std::set<std::string>& atoms);

/// All subsets of 1..5 atoms ordered by proper inclusion.
Poset powerset_lattice(const std::vector<std::string>& atoms);

/// The given family of atom sets ordered by proper inclusion. A least or
/// greatest member becomes the declared bottom/top; missing bounds are
/// synthesized.
Poset subset_family_poset(const std::vector<std::set<std::string>>& family, std::string name = "family");

/// Pairs ordered by the sum of their values. Pair labels are "l1.l2".
/// Throws AmbiguousBounds when the least or greatest sum is not unique.
Poset valued_product(const ValuedFactor& f1, const ValuedFactor& f2, std::string name = "product");

/// Factor whose labels and values are given in increasing value order.
ValuedFactor make_factor(const std::vector<std::pair<std::string, std::int64_t>>& entries);

Poset paper_fixture(FixtureName name);
Poset paper_fixture(std::string_view name);

/// n inner elements "v0".."v{n-1}" (zero padded); each forward pair (i, j),
/// i < j, becomes a generator with probability `density`. Deterministic in
/// (n, density, seed). Requires n >= 2 and 0 <= density <= 1.
Poset random_poset(int n, Rational density, std::uint64_t seed);

} // namespace posetops

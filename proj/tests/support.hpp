#pragma once

#include <algorithm>
#include <functional>
#include <map>
#include <ostream>
#include <set>
#include <string>
#include <vector>

#include <doctest.h>

#include "posetops/bool_ops.hpp"
#include "posetops/builders.hpp"
#include "posetops/measure.hpp"
#include "posetops/poset.hpp"
#include "posetops/signed_set.hpp"

namespace doctest {
template <>
struct StringMaker<posetops::ElemSet> {
  static String convert(const posetops::ElemSet& s) {
    std::string out = "{";
    for (auto id : s)
      out += (out.size() > 1 ? "," : "") + std::to_string(id);
    return (out + "}").c_str();
  }
};
template <>
struct StringMaker<posetops::Rational> {
  static String convert(const posetops::Rational& r) { return posetops::format_rational(r).c_str(); }
};
} // namespace doctest

namespace testing {

using namespace posetops;

inline ElemSet S(const Poset& p, std::initializer_list<std::string_view> labels) {
  return p.set_of(labels);
}

inline ElemId E(const Poset& p, std::string_view label) {
  return p.id(label);
}

/// Brute-force order facts recomputed from the generator list alone, for
/// checking derived values without touching the poset's own caches.
struct Reference {
  std::vector<std::string> labels;
  std::map<std::string, std::vector<std::string>> up;

  Reference(std::vector<std::string> elems, const std::vector<std::pair<std::string, std::string>>& gens,
            bool synth_bounds = true) {
    labels = elems;
    for (const auto& [a, b] : gens)
      up[a].push_back(b);
    if (synth_bounds) {
      for (const auto& l : elems) {
        up["_bot"].push_back(l);
        up[l].push_back("_top");
      }
      labels.push_back("_bot");
      labels.push_back("_top");
    }
  }

  bool reaches(const std::string& a, const std::string& b) const {
    std::set<std::string> seen;
    std::vector<std::string> stack{a};
    while (!stack.empty()) {
      auto cur = stack.back();
      stack.pop_back();
      auto it = up.find(cur);
      if (it == up.end())
        continue;
      for (const auto& n : it->second) {
        if (n == b)
          return true;
        if (seen.insert(n).second)
          stack.push_back(n);
      }
    }
    return false;
  }

  bool leq(const std::string& a, const std::string& b) const { return a == b || reaches(a, b); }

  /// Longest chain from `from` to `to`, by exhaustive path enumeration.
  int longest(const std::string& from, const std::string& to) const {
    if (from == to)
      return 0;
    int best = -1;
    auto it = up.find(from);
    if (it == up.end())
      return -1;
    for (const auto& n : it->second) {
      int rest = longest(n, to);
      if (rest >= 0)
        best = std::max(best, rest + 1);
    }
    return best;
  }
};

} // namespace testing

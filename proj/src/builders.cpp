#include "posetops/builders.hpp"

#include <algorithm>
#include <array>
#include <random>

namespace posetops {

namespace {

constexpr std::array<std::string_view, 16> kFixtureNames = {
    "v1",   "alt",  "dist", "nn",    "orth",   "htv",      "supinf",       "schnitt1",
    "schnitt2", "eq1a", "eq1b", "eq1c", "pprime", "seq_unit", "seq_weighted", "remark_ss",
};

Poset simple(std::string name, std::vector<std::string> elems, std::vector<LabelPair> lts = {}) {
  return build_poset(std::move(name), std::move(elems), std::move(lts));
}

Poset supinf_fixture() {
  // Chains as listed under the diagram; bounds are synthesized because the
  // diagram's bottom and top differ from e and f.
  std::vector<std::vector<std::string>> chains = {
      {"e", "c", "x", "a", "f"},
      {"e", "d", "x'", "b", "f"},
      {"c", "x'", "a"},
      {"d", "x", "b"},
      {"e", "y", "f"},
      {"e'", "x'", "f'"},
      {"e'", "y", "f'"},
  };
  std::vector<LabelPair> lts;
  for (const auto& chain : chains)
    for (std::size_t i = 0; i + 1 < chain.size(); ++i)
      lts.emplace_back(chain[i], chain[i + 1]);
  return simple("supinf", {"a", "b", "c", "d", "x", "x'", "y", "e", "e'", "f", "f'"}, std::move(lts));
}

using Family = std::vector<std::set<std::string>>;

} // namespace

const std::vector<FixtureName>& all_fixtures() {
  static const std::vector<FixtureName> names = [] {
    std::vector<FixtureName> v;
    for (std::size_t i = 0; i < kFixtureNames.size(); ++i)
      v.push_back(static_cast<FixtureName>(i));
    return v;
  }();
  return names;
}

std::string_view to_string(FixtureName f) {
  return kFixtureNames.at(static_cast<std::size_t>(f));
}

FixtureName parse_fixture_name(std::string_view name) {
  auto it = std::find(kFixtureNames.begin(), kFixtureNames.end(), name);
  if (it == kFixtureNames.end())
    throw Error(Errc::UnknownFixture, "unknown fixture '" + std::string(name) + "'", std::string(name));
  return static_cast<FixtureName>(it - kFixtureNames.begin());
}

std::string subset_label(const std::set<std::string>& atoms) {
  if (atoms.empty())
    return "empty";
  std::string out;
  for (const auto& a : atoms)
    out += a;
  return out;
}

Poset powerset_lattice(const std::vector<std::string>& atoms) {
  if (atoms.empty())
    throw Error(Errc::EmptyInput, "powerset of no atoms");
  if (atoms.size() > kMaxPowersetAtoms)
    throw Error(Errc::TooManyAtoms, "powerset limited to " + std::to_string(kMaxPowersetAtoms) + " atoms");
  std::set<std::string> unique(atoms.begin(), atoms.end());
  if (unique.size() != atoms.size())
    throw Error(Errc::DuplicateLabel, "duplicate atom in powerset");
  Family family;
  for (std::uint32_t mask = 0; mask < (1u << atoms.size()); ++mask) {
    std::set<std::string> subset;
    for (std::size_t i = 0; i < atoms.size(); ++i)
      if (mask & (1u << i))
        subset.insert(atoms[i]);
    family.push_back(std::move(subset));
  }
  return subset_family_poset(family, "powerset");
}

Poset subset_family_poset(const Family& family, std::string name) {
  if (family.empty())
    throw Error(Errc::EmptyInput, "empty subset family");
  std::vector<std::string> labels;
  for (const auto& s : family)
    labels.push_back(subset_label(s));

  auto proper_subset = [](const std::set<std::string>& a, const std::set<std::string>& b) {
    return a.size() < b.size() && std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  std::vector<LabelPair> lts;
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = 0; j < family.size(); ++j)
      if (proper_subset(family[i], family[j]))
        lts.emplace_back(labels[i], labels[j]);

  auto bound = [&](auto below) -> std::optional<std::string> {
    for (std::size_t i = 0; i < family.size(); ++i) {
      bool extreme = true;
      for (std::size_t j = 0; j < family.size() && extreme; ++j)
        if (i != j && !below(family[i], family[j]))
          extreme = false;
      if (extreme && family.size() > 1)
        return labels[i];
    }
    return std::nullopt;
  };
  auto bottom = bound([&](const auto& a, const auto& b) { return proper_subset(a, b); });
  auto top = bound([&](const auto& a, const auto& b) { return proper_subset(b, a); });
  return build_poset(std::move(name), std::move(labels), std::move(lts), bottom, top);
}

ValuedFactor make_factor(const std::vector<std::pair<std::string, std::int64_t>>& entries) {
  ValuedFactor f;
  for (const auto& [label, value] : entries) {
    f.labels.push_back(label);
    f.value_of[label] = value;
  }
  return f;
}

Poset valued_product(const ValuedFactor& f1, const ValuedFactor& f2, std::string name) {
  for (const auto* f : {&f1, &f2}) {
    if (f->labels.empty())
      throw Error(Errc::EmptyInput, "valued product factor has no labels");
    for (std::size_t i = 0; i < f->labels.size(); ++i) {
      auto it = f->value_of.find(f->labels[i]);
      if (it == f->value_of.end())
        throw Error(Errc::InvalidArgument, "factor label '" + f->labels[i] + "' has no value", f->labels[i]);
      if (i > 0 && f->value_of.at(f->labels[i - 1]) >= it->second)
        throw Error(Errc::InvalidArgument, "factor values must increase along the chain", f->labels[i]);
    }
  }
  struct Pair {
    std::string label;
    std::int64_t sum;
  };
  std::vector<Pair> pairs;
  for (const auto& a : f1.labels)
    for (const auto& b : f2.labels)
      pairs.push_back({a + "." + b, f1.value_of.at(a) + f2.value_of.at(b)});

  auto [lo, hi] = std::minmax_element(pairs.begin(), pairs.end(),
                                      [](const Pair& x, const Pair& y) { return x.sum < y.sum; });
  auto count_sum = [&](std::int64_t s) {
    return std::count_if(pairs.begin(), pairs.end(), [&](const Pair& x) { return x.sum == s; });
  };
  if (count_sum(lo->sum) != 1 || count_sum(hi->sum) != 1)
    throw Error(Errc::AmbiguousBounds, "several pairs tie for the least or greatest sum");

  std::vector<std::string> labels;
  std::vector<LabelPair> lts;
  for (const auto& x : pairs) {
    labels.push_back(x.label);
    for (const auto& y : pairs)
      if (x.sum < y.sum)
        lts.emplace_back(x.label, y.label);
  }
  return build_poset(std::move(name), std::move(labels), std::move(lts), lo->label, hi->label);
}

Poset paper_fixture(FixtureName name) {
  switch (name) {
  case FixtureName::v1:
    return simple("v1", {"a", "b"});
  case FixtureName::alt:
    return simple("alt", {"a", "b", "c", "d"}, {{"d", "b"}, {"d", "c"}});
  case FixtureName::dist:
    return simple("dist", {"x", "y", "z"});
  case FixtureName::nn:
    return simple("nn", {"x", "x'", "y"}, {{"x", "x'"}});
  case FixtureName::orth:
    return simple("orth", {"a", "b", "c", "ab"}, {{"a", "ab"}, {"b", "ab"}});
  case FixtureName::htv:
    return simple("htv", {"a", "b", "b'", "c"}, {{"b", "b'"}});
  case FixtureName::supinf:
    return supinf_fixture();
  case FixtureName::schnitt1:
    return subset_family_poset({{},
                                {"a"},
                                {"a", "a'"},
                                {"c"},
                                {"c", "c'"},
                                {"a", "a'", "b"},
                                {"b", "c", "c'"},
                                {"b"},
                                {"a", "a'", "b", "c", "c'"}},
                               "schnitt1");
  case FixtureName::schnitt2:
    return subset_family_poset(
        {{}, {"a", "b"}, {"a", "a'", "b"}, {"a", "a'"}, {"b", "b'"}, {"a", "a'", "b", "b'"}}, "schnitt2");
  case FixtureName::eq1a:
    return simple("eq1a", {"a", "b"});
  case FixtureName::eq1b:
    return subset_family_poset({{}, {"a"}, {"b", "d"}, {"a", "b", "c"}, {"a", "b", "c", "d"}}, "eq1b");
  case FixtureName::eq1c:
    return subset_family_poset({{}, {"a"}, {"a", "a'"}, {"b"}, {"b", "b'"}, {"a", "a'", "b", "b'"}}, "eq1c");
  case FixtureName::pprime:
    return simple("pprime", {"a", "a'", "b", "b'"}, {{"a", "a'"}, {"b", "b'"}});
  case FixtureName::seq_unit:
    return valued_product(make_factor({{"0", 0}, {"1", 1}}), make_factor({{"0'", 0}, {"1'", 1}}), "seq_unit");
  case FixtureName::seq_weighted:
    return valued_product(make_factor({{"0", 0}, {"2", 2}}), make_factor({{"0'", 0}, {"1'", 1}}),
                          "seq_weighted");
  case FixtureName::remark_ss:
    return simple("remark_ss", {"a", "b"}, {{"a", "b"}});
  }
  throw Error(Errc::UnknownFixture, "unknown fixture");
}

Poset paper_fixture(std::string_view name) {
  return paper_fixture(parse_fixture_name(name));
}

Poset random_poset(int n, Rational density, std::uint64_t seed) {
  if (n < 2 || n > 200)
    throw Error(Errc::InvalidArgument, "random_poset needs 2 <= n <= 200");
  if (density < 0 || density > 1)
    throw Error(Errc::InvalidArgument, "random_poset density must lie in [0, 1]");
  const auto width = std::to_string(n - 1).size();
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i) {
    auto digits = std::to_string(i);
    labels.push_back("v" + std::string(width - digits.size(), '0') + digits);
  }
  // Raw engine output keeps the stream identical across standard libraries.
  std::mt19937_64 rng(seed);
  const auto num = static_cast<std::uint64_t>(density.numerator());
  const auto den = static_cast<std::uint64_t>(density.denominator());
  std::vector<LabelPair> lts;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (rng() % den < num)
        lts.emplace_back(labels[i], labels[j]);
  return build_poset("random_" + std::to_string(n) + "_" + format_rational(density) + "_" + std::to_string(seed),
                     std::move(labels), std::move(lts));
}

} // namespace posetops

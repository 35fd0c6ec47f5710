#include "support.hpp"

using namespace testing;

TEST_CASE("every fixture builds and round-trips its name") {
  for (auto f : all_fixtures()) {
    auto p = paper_fixture(f);
    CHECK(p.name() == to_string(f));
    CHECK(parse_fixture_name(to_string(f)) == f);
  }
  CHECK_THROWS_AS(paper_fixture("nope"), Error);
}

TEST_CASE("powerset lattices") {
  auto two = powerset_lattice({"a", "b"});
  CHECK(two.size() == 4);
  CHECK(two.height(two.top()) == 2);
  auto four = powerset_lattice({"a", "b", "c", "d"});
  CHECK(four.size() == 16);
  CHECK(four.height(four.top()) == 4);
  for (ElemId x = 0; x < four.size(); ++x) {
    const auto& l = four.label(x);
    CHECK(four.height(x) == (l == "empty" ? 0 : static_cast<int>(l.size())));
  }
  CHECK(subset_label({}) == "empty");
  CHECK(subset_label({"b", "a'"}) == "a'b");
  CHECK_THROWS_AS(powerset_lattice({}), Error);
  CHECK_THROWS_AS(powerset_lattice({"a", "b", "c", "d", "e", "f"}), Error);
  CHECK(powerset_lattice({"a", "b", "c", "d", "e"}).size() == 32);
}

TEST_CASE("subset families") {
  auto s1 = paper_fixture(FixtureName::schnitt1);
  CHECK(s1.size() == 9);
  CHECK_FALSE(s1.bottom_synthesized());
  CHECK_FALSE(s1.top_synthesized());
  auto chain = subset_family_poset({{}, {"a"}}, "c2");
  CHECK(chain.size() == 2);
  CHECK(chain.height(chain.top()) == 1);
  auto open = subset_family_poset({{"a"}, {"b"}}, "open");
  CHECK(open.bottom_synthesized());
  CHECK(open.top_synthesized());
}

TEST_CASE("valued products") {
  auto u = paper_fixture(FixtureName::seq_unit);
  CHECK(u.height(E(u, "1.1'")) == 2);
  CHECK(order_rel(u, E(u, "0.1'"), E(u, "1.0'")) == Relation::Incomparable);
  CHECK(u.label(u.bottom()) == "0.0'");
  auto w = paper_fixture(FixtureName::seq_weighted);
  CHECK(w.height(E(w, "2.1'")) == 3);
  CHECK(w.lt(E(w, "0.1'"), E(w, "2.0'")));
  CHECK(w.covers().size() == 3);

  auto deg = valued_product(make_factor({{"p", 0}, {"q", 1}, {"r", 2}}), make_factor({{"z", 0}}), "deg");
  CHECK(deg.covers().size() == 2);

  CHECK_THROWS_AS(valued_product(make_factor({{"p", 0}, {"q", 0}}), make_factor({{"z", 0}})), Error);
  CHECK_THROWS_AS(valued_product(make_factor({{"p", 0}, {"q", 1}, {"r", 1}}), make_factor({{"z", 0}})), Error);
}

namespace {

// Exhaustive longest strictly increasing sum chain ending at `target`.
int longest_sum_chain(const std::vector<std::int64_t>& sums, std::int64_t target) {
  int best = 0;
  for (auto s : sums)
    if (s < target)
      best = std::max(best, 1 + longest_sum_chain(sums, s));
  return best;
}

} // namespace

TEST_CASE("product heights match an exhaustive chain search") {
  const std::vector<std::pair<std::string, std::int64_t>> f1 = {{"p", 0}, {"q", 1}, {"r", 3}, {"s", 4}};
  const std::vector<std::pair<std::string, std::int64_t>> f2 = {{"u", 0}, {"v", 2}, {"w", 3}};
  auto p = valued_product(make_factor(f1), make_factor(f2), "prod");
  std::vector<std::int64_t> sums;
  for (auto& [l1, v1] : f1)
    for (auto& [l2, v2] : f2)
      sums.push_back(v1 + v2);
  for (auto& [l1, v1] : f1)
    for (auto& [l2, v2] : f2)
      CHECK_MESSAGE(p.height(E(p, l1 + "." + l2)) == longest_sum_chain(sums, v1 + v2), l1 << "." << l2);
}

TEST_CASE("random posets") {
  auto a = random_poset(8, Rational(1, 3), 42);
  auto b = random_poset(8, Rational(1, 3), 42);
  CHECK(a.labels() == b.labels());
  CHECK(a.covers() == b.covers());
  CHECK(a.name() == "random_8_1/3_42");
  auto anti = random_poset(6, Rational(0), 1);
  CHECK(anti.height(anti.top()) == 2);
  CHECK(anti.size() == 8);
  auto chain = random_poset(6, Rational(1), 1);
  CHECK(chain.height(chain.top()) == 7);
  CHECK_THROWS_AS(random_poset(1, Rational(1, 2), 1), Error);
  CHECK_THROWS_AS(random_poset(5, Rational(3, 2), 1), Error);
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    auto p = random_poset(9, Rational(1, 2), seed);
    for (ElemId x = 0; x < p.size(); ++x)
      for (ElemId y = 0; y < p.size(); ++y)
        if (p.lt(x, y))
          CHECK(p.height(x) < p.height(y));
  }
}

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "posetops/measure.hpp"

namespace posetops {

/// Every public operation of the order, boolean, signed and measure layers.
enum class OpTag {
  OrderRel, Orthogonal, Extremes, BelowFilter, SetCompare, Height, ExtremesByHeight,
  MeetAll, JoinAll, NegSet, Minus, SetMeet, SetJoin, SetMinus, AltMeet, AltJoin, AltNeg1,
  SignedMeetOf, SignedJoinOf, SignedNegOf, SignedMeet, SignedJoin, SignedNeg, SignedHeight,
  HtOfSet, ProbMax, Mu, ProbSum, ProbSigned, IndepProduct, IndepThreshold,
};

inline constexpr int kOpTagCount = static_cast<int>(OpTag::IndepThreshold) + 1;

std::string_view to_string(OpTag op);

/// One operation plus its arguments. Fields an operation does not use are
/// ignored. `xs` doubles as the element list of meet_all/join_all and the
/// carrier of signed operands.
struct Query {
  OpTag op = OpTag::OrderRel;
  Variant variant = Variant::Raw;
  AltKind alt = AltKind::Pairwise;
  CompareMode mode = CompareMode::Leq;
  Extreme extreme = Extreme::Min;
  HeightExtreme height_extreme = HeightExtreme::MaxHt;
  Sign sign = Sign::Sup;
  MeasureKind measure = MeasureKind::MaxHeight;
  ElemId x = 0;
  ElemId y = 0;
  ElemSet xs;
  ElemSet ys;
  std::optional<Rational> alpha;
};

/// Outcome of a query; a failed query yields its error code.
using QueryResult = std::variant<Errc, ElemSet, SignedSet, Rational, bool, std::int64_t, Relation>;

std::string describe(const Poset& p, const Query& q);
std::string format_result(const Poset& p, const QueryResult& r);

using Evaluator = std::function<QueryResult(const Poset&, const Query&)>;

/// Evaluates through the library operations.
QueryResult main_eval(const Poset& p, const Query& q);

/// Evaluates each definition by direct quantifier scan. Reachability and
/// heights are recomputed per query by depth-first search over the poset's
/// generator edges; no closure, cover or height cache is read.
QueryResult naive_eval(const Poset& p, const Query& q);

struct Mismatch {
  std::string query;
  std::string main;
  std::string oracle;
};

struct Report {
  std::size_t cases = 0;
  std::vector<Mismatch> mismatches;

  bool passed() const noexcept { return mismatches.empty(); }
  void merge(const Report& other);
};

/// Random well-formed query, deterministic in the generator state.
Query random_query(const Poset& p, std::uint64_t& state);

/// `cases` random queries over all op tags and variants, main path against
/// the naive path. Deterministic per seed.
Report differential_check(const Poset& p, std::uint64_t seed, std::size_t cases,
                          const Evaluator& main = main_eval);

/// Over the powerset of `atoms` (at most 4): primed meet, join and negation
/// of every pair of subsets must be intersection, union and complement.
Report lattice_oracle_check(const std::vector<std::string>& atoms);

enum LawGroup : unsigned {
  kLawAlgebra = 1u << 0,
  kLawHeight = 1u << 1,
  kLawSchnitt = 1u << 2,
  kLawMeasure = 1u << 3,
  kLawSigned = 1u << 4,
  kLawAll = 0x1f,
};

/// Checks the algebraic, height, measure and signed-set laws on every
/// element, pair and (for small posets) triple, plus `samples` random set
/// pairs drawn from `seed`.
Report law_check(const Poset& p, std::uint64_t seed, unsigned groups = kLawAll, std::size_t samples = 40);

} // namespace posetops

#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "posetops/poset.hpp"

namespace posetops {

/// Parsed poset file. Grammar, one directive per line, "#" starts a comment:
///
///     poset NAME          exactly once
///     bottom LABEL        optional
///     top LABEL           optional
///     elem L1 L2 ...      repeatable
///     lt A B              repeatable, A < B
struct PosetDoc {
  std::string name;
  std::optional<std::string> bottom;
  std::optional<std::string> top;
  std::vector<std::string> elems;
  std::vector<LabelPair> lts;
  /// Line of the first mention of each label, for positioned diagnostics.
  std::map<std::string, int> first_line;

  friend bool operator==(const PosetDoc& a, const PosetDoc& b) {
    return a.name == b.name && a.bottom == b.bottom && a.top == b.top && a.elems == b.elems && a.lts == b.lts;
  }
};

/// Throws SyntaxError with a "line L, column C" prefix.
PosetDoc parse_poset_text(std::string_view text);

/// Builds the poset; build errors about a label are re-raised with the line
/// where that label first appears.
Poset build_from_doc(const PosetDoc& doc);

/// Canonical document for a poset: declared bounds, the remaining
/// non-synthesized labels, and the cover edges between them.
PosetDoc poset_to_doc(const Poset& p);

std::string print_poset_doc(const PosetDoc& doc);
inline std::string print_poset(const Poset& p) { return print_poset_doc(poset_to_doc(p)); }

/// DOT digraph of the transitive reduction, bottom drawn lowest.
std::string render_dot(const Poset& p);

} // namespace posetops

#include "posetops/text_format.hpp"

#include <cctype>
#include <sstream>

namespace posetops {

namespace {

struct Token {
  std::string text;
  int column;
};

std::vector<Token> split_line(std::string_view line) {
  std::vector<Token> tokens;
  std::size_t i = 0;
  while (i < line.size()) {
    if (line[i] == '#')
      break;
    if (std::isspace(static_cast<unsigned char>(line[i]))) {
      ++i;
      continue;
    }
    std::size_t start = i;
    while (i < line.size() && line[i] != '#' && !std::isspace(static_cast<unsigned char>(line[i])))
      ++i;
    tokens.push_back({std::string(line.substr(start, i - start)), static_cast<int>(start) + 1});
  }
  return tokens;
}

[[noreturn]] void syntax_error(int line, int column, const std::string& what) {
  throw Error(Errc::SyntaxError, "line " + std::to_string(line) + ", column " + std::to_string(column) + ": " + what);
}

std::string quoted(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\')
      out += '\\';
    out += c;
  }
  return out + "\"";
}

} // namespace

PosetDoc parse_poset_text(std::string_view text) {
  PosetDoc doc;
  bool have_name = false;
  int line_no = 0;
  std::istringstream in{std::string(text)};
  std::string line;
  auto mention = [&](const std::string& label) { doc.first_line.emplace(label, line_no); };

  while (std::getline(in, line)) {
    ++line_no;
    auto tokens = split_line(line);
    if (tokens.empty())
      continue;
    const auto& head = tokens.front();
    const auto argc = tokens.size() - 1;
    auto expect_args = [&](std::size_t n) {
      if (argc != n)
        syntax_error(line_no, head.column,
                     "'" + head.text + "' takes " + std::to_string(n) + " argument" + (n == 1 ? "" : "s") + ", got " +
                         std::to_string(argc));
    };

    if (head.text == "poset") {
      expect_args(1);
      if (have_name)
        syntax_error(line_no, head.column, "duplicate 'poset' directive");
      doc.name = tokens[1].text;
      have_name = true;
    } else if (head.text == "bottom" || head.text == "top") {
      expect_args(1);
      auto& slot = head.text == "bottom" ? doc.bottom : doc.top;
      if (slot)
        syntax_error(line_no, head.column, "duplicate '" + head.text + "' directive");
      slot = tokens[1].text;
      mention(tokens[1].text);
    } else if (head.text == "elem") {
      if (argc == 0)
        syntax_error(line_no, head.column, "'elem' needs at least one label");
      for (std::size_t i = 1; i < tokens.size(); ++i) {
        doc.elems.push_back(tokens[i].text);
        mention(tokens[i].text);
      }
    } else if (head.text == "lt") {
      expect_args(2);
      doc.lts.emplace_back(tokens[1].text, tokens[2].text);
      mention(tokens[1].text);
      mention(tokens[2].text);
    } else {
      syntax_error(line_no, head.column, "unknown directive '" + head.text + "'");
    }
  }
  if (!have_name)
    syntax_error(line_no == 0 ? 1 : line_no, 1, "missing 'poset NAME' directive");
  return doc;
}

Poset build_from_doc(const PosetDoc& doc) {
  try {
    return build_poset(doc.name, doc.elems, doc.lts, doc.bottom, doc.top);
  } catch (const Error& e) {
    auto it = doc.first_line.find(e.subject());
    if (e.subject().empty() || it == doc.first_line.end())
      throw;
    throw Error(e.code(), "line " + std::to_string(it->second) + ": " + e.what(), e.subject());
  }
}

PosetDoc poset_to_doc(const Poset& p) {
  PosetDoc doc;
  doc.name = p.name();
  if (!p.bottom_synthesized())
    doc.bottom = p.label(p.bottom());
  if (!p.top_synthesized())
    doc.top = p.label(p.top());
  for (ElemId x = 0; x < p.size(); ++x)
    if (x != p.bottom() && x != p.top())
      doc.elems.push_back(p.label(x));
  for (auto [from, to] : p.covers())
    if (!p.synthesized(from) && !p.synthesized(to))
      doc.lts.emplace_back(p.label(from), p.label(to));
  return doc;
}

std::string print_poset_doc(const PosetDoc& doc) {
  std::string out = "poset " + doc.name + "\n";
  if (doc.bottom)
    out += "bottom " + *doc.bottom + "\n";
  if (doc.top)
    out += "top " + *doc.top + "\n";
  if (!doc.elems.empty()) {
    out += "elem";
    for (const auto& e : doc.elems)
      out += " " + e;
    out += "\n";
  }
  for (const auto& [a, b] : doc.lts)
    out += "lt " + a + " " + b + "\n";
  return out;
}

std::string render_dot(const Poset& p) {
  std::string out = "digraph " + quoted(p.name()) + " {\n";
  out += "  rankdir=BT;\n";
  out += "  { rank=source; " + quoted(p.label(p.bottom())) + "; }\n";
  for (ElemId x = 0; x < p.size(); ++x)
    out += "  " + quoted(p.label(x)) + ";\n";
  for (auto [from, to] : p.covers())
    out += "  " + quoted(p.label(from)) + " -> " + quoted(p.label(to)) + ";\n";
  out += "}\n";
  return out;
}

} // namespace posetops

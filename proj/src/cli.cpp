#include "posetops/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "posetops/builders.hpp"
#include "posetops/expr.hpp"
#include "posetops/oracle.hpp"
#include "posetops/text_format.hpp"

namespace posetops {

namespace {

struct Failure {
  std::string message;
};

std::string read_source(const std::string& path, std::istream& in) {
  std::ostringstream buf;
  if (path == "-") {
    buf << in.rdbuf();
    return buf.str();
  }
  std::ifstream file(path);
  if (!file)
    throw Failure{"cannot read '" + path + "'"};
  buf << file.rdbuf();
  return buf.str();
}

Poset load(const std::string& path, std::istream& in) {
  return build_from_doc(parse_poset_text(read_source(path, in)));
}

QueryResult faulty_eval(const Poset& p, const Query& q) {
  Query flipped = q;
  if (flipped.variant == Variant::Prime)
    flipped.variant = Variant::Raw;
  return main_eval(p, flipped);
}

void print_report(std::ostream& out, const char* what, const Report& r) {
  out << what << ": " << r.cases << " cases, " << r.mismatches.size() << " mismatches\n";
  for (const auto& m : r.mismatches)
    out << "  " << m.query << ": got " << m.main << ", expected " << m.oracle << "\n";
}

} // namespace

int run_command(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Generalized boolean operations on finite posets", "posetops"};
  app.require_subcommand(1);

  std::string file;
  std::string expr_text;
  std::vector<std::string> labels;
  std::string measure = "max";
  std::uint64_t seed = 0;
  std::size_t cases = 100;
  bool inject_fault = false;
  std::string fixture;

  auto* validate = app.add_subcommand("validate", "Check a poset file and report its size");
  validate->add_option("FILE", file, "Poset file, - for stdin")->required();

  auto* eval = app.add_subcommand("eval", "Evaluate an expression");
  eval->add_option("FILE", file, "Poset file, - for stdin")->required();
  eval->add_option("EXPR", expr_text, "Expression")->required();

  auto* height = app.add_subcommand("height", "Print element heights");
  height->add_option("FILE", file, "Poset file, - for stdin")->required();
  height->add_option("LABEL", labels, "Elements to report (default all)");

  auto* prob = app.add_subcommand("prob", "Probability of an expression's value");
  prob->add_option("FILE", file, "Poset file, - for stdin")->required();
  prob->add_option("--measure", measure, "max or sum")->check(CLI::IsMember({"max", "sum"}));
  prob->add_option("EXPR", expr_text, "Expression")->required();

  auto* check = app.add_subcommand("check", "Run the law suite and the differential oracle");
  check->add_option("FILE", file, "Poset file, - for stdin")->required();
  check->add_option("--seed", seed, "Random seed");
  check->add_option("--cases", cases, "Number of differential queries");
  check->add_flag("--inject-fault", inject_fault)->group("");

  auto* dot = app.add_subcommand("dot", "Print the Hasse diagram in DOT");
  dot->add_option("FILE", file, "Poset file, - for stdin")->required();

  auto* fix = app.add_subcommand("fixture", "Print a built-in fixture in the poset file format");
  fix->add_option("NAME", fixture, "Fixture name")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (*fix) {
      out << print_poset(paper_fixture(fixture));
    } else if (*validate) {
      const Poset p = load(file, in);
      out << p.name() << ": " << p.size() << " elements, " << p.covers().size() << " covers, height "
          << p.height(p.top()) << "\n";
    } else if (*eval) {
      const Poset p = load(file, in);
      const Expr e = parse_expr(expr_text);
      out << format_value(p, eval_expr(p, e)) << "\n";
    } else if (*prob) {
      const Poset p = load(file, in);
      const MeasureKind m = measure == "sum" ? MeasureKind::SumHeight : MeasureKind::MaxHeight;
      const Expr e = parse_expr(expr_text);
      const Value v = eval_expr(p, e, EvalOptions{m});
      out << format_value(p, value_probability(p, v, m)) << "\n";
    } else if (*height) {
      const Poset p = load(file, in);
      if (labels.empty())
        for (ElemId x = 0; x < p.size(); ++x)
          labels.push_back(p.label(x));
      for (const auto& l : labels)
        out << l << " " << p.height(p.id(l)) << "\n";
    } else if (*check) {
      const Poset p = load(file, in);
      const Report laws = law_check(p, seed);
      const Report diff = differential_check(p, seed, cases, inject_fault ? Evaluator(faulty_eval) : main_eval);
      print_report(out, "laws", laws);
      print_report(out, "differential", diff);
      return laws.passed() && diff.passed() ? 0 : 1;
    } else if (*dot) {
      out << render_dot(load(file, in));
    }
  } catch (const Error& e) {
    err << "error: " << to_string(e.code()) << ": " << e.what() << "\n";
    return 1;
  } catch (const Failure& f) {
    err << "error: " << f.message << "\n";
    return 1;
  }
  return 0;
}

} // namespace posetops

// adinkra: build, verify, analyze, dash, grade and export Adinkra graphs.
//
// Exit codes: 0 success, 1 validation failure, 2 usage or parse errors.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "adinkra/agf.hpp"
#include "adinkra/constructors.hpp"
#include "adinkra/dashing.hpp"
#include "adinkra/gf2.hpp"
#include "adinkra/heights.hpp"
#include "adinkra/representations.hpp"
#include "adinkra/structure.hpp"
#include "adinkra/susy.hpp"
#include "adinkra/verify.hpp"

namespace {

using namespace adinkra;

constexpr int kExitOk = 0;
constexpr int kExitInvalid = 1;
constexpr int kExitUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct ValidationError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return buffer.str();
  }
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

ColoredGraph load_graph(const std::string& path) {
  try {
    return parse_agf(read_input(path));
  } catch (const AgfError& err) {
    throw UsageError(std::string("parse error: ") + err.what());
  }
}

LinearCode load_code(const std::string& path) {
  std::istringstream in(read_input(path));
  try {
    return read_code(in);
  } catch (const std::exception& err) {
    throw UsageError(std::string("code file error: ") + err.what());
  }
}

void write_output(const std::string& path, const std::string& text) {
  if (path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw UsageError("cannot write " + path);
  out << text;
}

std::string describe_exchange(const ExchangeGroupSummary& summary) {
  std::ostringstream out;
  if (!summary.order) {
    out << "order > cap (" << summary.cap << ")";
  } else {
    out << "order " << *summary.order;
  }
  if (summary.elementary_abelian_2) {
    out << ", elementary abelian 2-group";
  } else if (summary.abelian) {
    out << ", abelian";
  } else {
    out << ", non-abelian";
  }
  if (summary.order) {
    out << ", max element order " << summary.max_element_order;
    if (summary.dihedral_like && !summary.elementary_abelian_2) {
      out << ", dihedral-like";
    }
  }
  return out.str();
}

int cmd_build(const std::string& family, int parameter, const std::string& code_path,
              const std::string& output) {
  ColoredGraph g = [&] {
    if (family == "qn") return build_hypercube(parameter);
    if (family == "folded") return build_folded_cube(parameter);
    if (family == "k2n") return build_complete_even(parameter);
    if (family == "knn") return build_complete_bipartite(parameter);
    if (family == "quotient") {
      if (code_path.empty()) throw UsageError("quotient needs --code FILE");
      return build_quotient(parameter, load_code(code_path));
    }
    throw UsageError("unknown family '" + family + "'");
  }();
  write_output(output, serialize_agf(g));
  return kExitOk;
}

int cmd_verify(const std::string& input, const std::string& output) {
  ColoredGraph g = load_graph(input);
  VerifyReport report = run_verify(g);
  std::ostringstream out;
  out << "regular: " << (report.regular ? "yes" : "no") << '\n';
  for (const ColoringViolation& v : report.coloring_violations) {
    out << "violation: vertex " << v.vertex << " color " << v.color << " count "
        << v.count << '\n';
  }
  out << "bipartite: " << (report.bipartite ? "yes" : "no") << '\n';
  out << "quadrilateral: "
      << (report.quadrilateral ? (*report.quadrilateral ? "yes" : "no") : "n/a")
      << '\n';
  if (report.dashing_valid) {
    out << "dashing: " << (*report.dashing_valid ? "valid" : "invalid") << '\n';
    for (const BicolorSquare& sq : report.dashing_violations) {
      out << "violation: even dash count on colors (" << sq.color_i << ','
          << sq.color_j << ") square (" << sq.vertices[0] << ',' << sq.vertices[1]
          << ',' << sq.vertices[2] << ',' << sq.vertices[3] << ")\n";
    }
  } else {
    out << "dashing: " << (g.has_dashes() ? "n/a" : "none") << '\n';
  }
  if (report.heights_valid) {
    out << "heights: " << (*report.heights_valid ? "valid" : "invalid") << '\n';
    if (!report.heights_error.empty()) {
      out << "violation: " << report.heights_error << '\n';
    }
  } else {
    out << "heights: none\n";
  }
  out << "verdict: " << to_string(report.verdict) << '\n';
  write_output(output, out.str());
  return report.all_passed() ? kExitOk : kExitInvalid;
}

int cmd_analyze(const std::string& input, std::uint64_t cap, unsigned seed,
                const std::string& output) {
  ColoredGraph g = load_graph(input);
  std::ostringstream out;
  out << "n: " << g.vertex_count() << '\n';
  out << "colors: " << g.color_count() << '\n';
  if (!validate_regular_coloring(g).empty()) {
    out << "regular: no\n";
    write_output(output, out.str());
    return kExitInvalid;
  }
  BicolorReport report = bicolor_report(g);
  for (const BicolorPair& pair : report.pairs) {
    out << "m(" << pair.color_i << ',' << pair.color_j << ") = " << pair.m
        << "  cycles:";
    for (int len : pair.cycle_lengths) out << ' ' << len;
    out << '\n';
  }
  bool quad = is_quadrilateral(g);
  out << "quadrilateral: " << (quad ? "yes" : "no") << '\n';
  out << "perfect-1-factorization: "
      << (is_perfect_1factorization(g) ? "yes" : "no") << '\n';
  out << "exchange-group: " << describe_exchange(exchange_group(g, cap)) << '\n';
  if (quad && is_connected(g)) {
    out << "extracted-code:\n" << write_code(extract_code(g, 1, seed));
  } else {
    out << "extracted-code: n/a ("
        << (quad ? "graph is disconnected" : "quadrilateral property fails")
        << ")\n";
  }
  write_output(output, out.str());
  return kExitOk;
}

int cmd_extract_code(const std::string& input, unsigned seed,
                     const std::string& output) {
  ColoredGraph g = load_graph(input);
  write_output(output, write_code(extract_code(g, 1, seed)));
  return kExitOk;
}

int cmd_dash(const std::string& input, const std::string& mode,
             const std::string& output) {
  ColoredGraph g = load_graph(input);
  DashingSystem system = solve_dashings(g);
  if (mode == "count") {
    std::ostringstream out;
    if (!system.consistent) {
      out << "no totally odd dashing exists\n";
    } else if (auto count = system.solution_count()) {
      out << *count << '\n';
    } else {
      out << "2^" << system.log2_solution_count() << '\n';
    }
    write_output(output, out.str());
    return kExitOk;
  }
  if (!system.consistent) {
    throw ValidationError("no totally odd dashing exists");
  }
  if (mode == "one") {
    write_output(output, serialize_agf(apply_dashing(g, system.particular)));
    return kExitOk;
  }
  // mode == "all"
  std::vector<std::vector<int>> all;
  try {
    all = enumerate_dashings(system);
  } catch (const std::invalid_argument& err) {
    throw ValidationError(err.what());
  }
  std::ostringstream out;
  out << "# one dashing per line; columns follow the canonical edge order\n";
  for (const auto& signs : all) {
    for (int s : signs) out << (s < 0 ? '-' : '+');
    out << '\n';
  }
  write_output(output, out.str());
  return kExitOk;
}

std::map<int, int> parse_set_expression(const std::string& text) {
  std::map<int, int> given;
  std::istringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) {
      throw UsageError("--set expects v=h pairs separated by commas");
    }
    try {
      int v = std::stoi(item.substr(0, eq));
      int h = std::stoi(item.substr(eq + 1));
      given[v] = h;
    } catch (const std::exception&) {
      throw UsageError("--set expects integer v=h pairs");
    }
  }
  if (given.empty()) throw UsageError("--set expects at least one v=h pair");
  return given;
}

int cmd_heights(const std::string& input, bool use_valise, const std::string& set_expr,
                int lower, int raise, const std::string& output) {
  ColoredGraph g = load_graph(input);
  int modes = (use_valise ? 1 : 0) + (!set_expr.empty() ? 1 : 0) +
              (lower > 0 ? 1 : 0) + (raise > 0 ? 1 : 0);
  if (modes != 1) {
    throw UsageError("choose exactly one of --valise, --set, --lower, --raise");
  }
  HeightAssignment h = [&] {
    if (use_valise) return valise(g);
    if (!set_expr.empty()) return assign_heights(g, parse_set_expression(set_expr));
    HeightAssignment current = heights_of(g);
    int v = lower > 0 ? lower : raise;
    return move_vertex(g, current, v,
                       lower > 0 ? MoveDirection::lower : MoveDirection::raise);
  }();
  write_output(output, serialize_agf(with_heights(g, h)));
  return kExitOk;
}

int cmd_export(const std::string& input, const std::string& format, bool csv,
               const std::string& output) {
  ColoredGraph g = load_graph(input);
  std::string text;
  if (format == "latin") {
    LatinAdjacencyList latin = to_latin(g);
    text = csv ? render_latin_csv(latin) : render_latin(latin);
  } else if (format == "matrix") {
    SemiMagicMatrix matrix = to_matrix(g);
    text = csv ? render_matrix_csv(matrix) : render_matrix(matrix);
  } else if (format == "dot") {
    text = export_dot(g);
  } else if (format == "agf") {
    text = serialize_agf(g);
  } else {
    throw UsageError("unknown format '" + format + "'");
  }
  write_output(output, text);
  return kExitOk;
}

int cmd_emit_susy(const std::string& input, const std::string& color,
                  const std::string& format, const std::string& output) {
  ColoredGraph g = load_graph(input);
  int k = 0;
  if (color != "all") {
    try {
      k = std::stoi(color);
    } catch (const std::exception&) {
      throw UsageError("--color expects a color number or 'all'");
    }
    if (k < 1 || k > g.color_count()) throw UsageError("--color out of range");
  }
  RuleFormat fmt;
  if (format == "text") {
    fmt = RuleFormat::text;
  } else if (format == "latex") {
    fmt = RuleFormat::latex;
  } else {
    throw UsageError("unknown format '" + format + "'");
  }
  write_output(output, render(emit_rules(g), fmt, k));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial engine for Adinkra graphs"};
  app.require_subcommand(1);

  unsigned seed = 0;
  app.add_option("--seed", seed, "seed for randomized self-checks");

  std::string output = "-";
  app.add_option("-o,--output", output, "output path (default stdout)");

  auto* build = app.add_subcommand("build", "construct a colored graph as AGF");
  std::string family;
  int parameter = 0;
  std::string code_path;
  build->add_option("family", family, "qn | folded | k2n | knn | quotient")
      ->required();
  build->add_option("parameter", parameter, "N (or m for k2n, n for knn)")
      ->required();
  build->add_option("--code", code_path, "code file for quotient");

  auto* verify = app.add_subcommand("verify", "check Adinkra conditions");
  std::string verify_input;
  verify->add_option("input", verify_input, "AGF file or -")->required();

  auto* analyze = app.add_subcommand("analyze", "bicolor structure and exchange group");
  std::string analyze_input;
  std::uint64_t cap = 1000000;
  analyze->add_option("input", analyze_input, "AGF file or -")->required();
  analyze->add_option("--cap", cap, "exchange group element cap");

  auto* extract = app.add_subcommand("extract-code", "code of a quadrilateral graph");
  std::string extract_input;
  extract->add_option("input", extract_input, "AGF file or -")->required();

  auto* dash = app.add_subcommand("dash", "solve the totally odd dashing system");
  std::string dash_input;
  bool dash_one = false, dash_count = false, dash_all = false;
  dash->add_option("input", dash_input, "AGF file or -")->required();
  dash->add_flag("--one", dash_one, "emit one dashed AGF (default)");
  dash->add_flag("--count", dash_count, "print the number of dashings");
  dash->add_flag("--all", dash_all, "list all dashings (refuses above 2^20)");

  auto* heights = app.add_subcommand("heights", "assign or move height levels");
  std::string heights_input, set_expr;
  bool use_valise = false;
  int lower = 0, raise = 0;
  heights->add_option("input", heights_input, "AGF file or -")->required();
  heights->add_flag("--valise", use_valise, "bosons at 0, fermions at 1");
  heights->add_option("--set", set_expr, "explicit heights, e.g. 1=0,2=1");
  heights->add_option("--lower", lower, "lower one vertex by 2");
  heights->add_option("--raise", raise, "raise one vertex by 2");

  auto* exp = app.add_subcommand("export", "render as latin | matrix | dot | agf");
  std::string export_input, export_format = "agf";
  bool csv = false;
  exp->add_option("input", export_input, "AGF file or -")->required();
  exp->add_option("--format", export_format, "latin | matrix | dot | agf");
  exp->add_flag("--csv", csv, "CSV instead of aligned text (latin/matrix)");

  auto* susy = app.add_subcommand("emit-susy", "supercharge transformation laws");
  std::string susy_input, susy_color = "all", susy_format = "text";
  susy->add_option("input", susy_input, "AGF file or -")->required();
  susy->add_option("--color", susy_color, "color number or 'all'");
  susy->add_option("--format", susy_format, "text | latex");

  for (CLI::App* sub : app.get_subcommands(nullptr)) {
    sub->fallthrough();  // --seed / -o may follow the subcommand
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& err) {
    if (err.get_exit_code() == 0) return app.exit(err);  // --help
    app.exit(err);
    return kExitUsage;
  }

  try {
    if (build->parsed()) return cmd_build(family, parameter, code_path, output);
    if (verify->parsed()) return cmd_verify(verify_input, output);
    if (analyze->parsed()) return cmd_analyze(analyze_input, cap, seed, output);
    if (extract->parsed()) return cmd_extract_code(extract_input, seed, output);
    if (dash->parsed()) {
      int picked = (dash_one ? 1 : 0) + (dash_count ? 1 : 0) + (dash_all ? 1 : 0);
      if (picked > 1) throw UsageError("choose one of --one, --count, --all");
      std::string mode = dash_count ? "count" : dash_all ? "all" : "one";
      return cmd_dash(dash_input, mode, output);
    }
    if (heights->parsed()) {
      return cmd_heights(heights_input, use_valise, set_expr, lower, raise, output);
    }
    if (exp->parsed()) return cmd_export(export_input, export_format, csv, output);
    if (susy->parsed()) return cmd_emit_susy(susy_input, susy_color, susy_format, output);
    throw UsageError("no subcommand");
  } catch (const UsageError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitUsage;
  } catch (const ValidationError& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInvalid;
  } catch (const std::invalid_argument& err) {
    std::cerr << "error: " << err.what() << '\n';
    return kExitInvalid;
  } catch (const std::exception& err) {
    std::cerr << "internal error: " << err.what() << '\n';
    return kExitInvalid;
  }
}

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <sstream>

#include "adinkra/agf.hpp"
#include "adinkra/constructors.hpp"
#include "adinkra/dashing.hpp"
#include "adinkra/gf2.hpp"
#include "adinkra/heights.hpp"
#include "adinkra/representations.hpp"
#include "adinkra/structure.hpp"
#include "adinkra/susy.hpp"
#include "adinkra/verify.hpp"

namespace py = pybind11;
using namespace adinkra;

namespace {

LinearCode code_from_rows(const std::vector<std::string>& rows, int length) {
  std::vector<BitVector> vectors;
  vectors.reserve(rows.size());
  for (const std::string& row : rows) vectors.push_back(BitVector::parse(row));
  if (length == 0) {
    if (vectors.empty()) {
      throw std::invalid_argument("empty spanning set needs an explicit length");
    }
    length = vectors.front().length();
  }
  return LinearCode::from_span(length, vectors);
}

std::vector<std::string> basis_strings(const LinearCode& code) {
  std::vector<std::string> out;
  for (const BitVector& row : code.basis()) out.push_back(row.str());
  return out;
}

py::dict classify_dict(const LinearCode& code) {
  CodeClass cls = code.classify();
  py::dict out;
  out["has_weight_1_or_2"] = cls.has_weight_1_or_2;
  out["even"] = cls.even;
  out["doubly_even"] = cls.doubly_even;
  return out;
}

py::object parity_string(const ColoredGraph& g) {
  if (!g.has_parity()) return py::none();
  std::string out;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    out += g.parity(v) == Parity::boson ? 'b' : 'f';
  }
  return py::cast(out);
}

}  // namespace

PYBIND11_MODULE(_adinkra, m) {
  m.doc() = "Adinkra combinatorics engine";

  py::class_<BitVector>(m, "BitVector")
      .def(py::init([](const std::string& text) { return BitVector::parse(text); }))
      .def_property_readonly("length", &BitVector::length)
      .def("weight", &BitVector::weight)
      .def("__xor__", &BitVector::operator^)
      .def("__and__", &BitVector::operator&)
      .def("__eq__", [](const BitVector& a, const BitVector& b) { return a == b; })
      .def("__str__", &BitVector::str)
      .def("__repr__",
           [](const BitVector& v) { return "BitVector('" + v.str() + "')"; });

  m.def("weight_sum_identity", [](const std::string& a, const std::string& b) {
    return weight_sum_identity(BitVector::parse(a), BitVector::parse(b));
  });

  py::class_<LinearCode>(m, "LinearCode")
      .def(py::init(&code_from_rows), py::arg("rows"), py::arg("length") = 0)
      .def_static("zero", [](int length) { return LinearCode(length); })
      .def_static("d2n", &LinearCode::d2n_family, py::arg("n"))
      .def_property_readonly("length", &LinearCode::length)
      .def_property_readonly("dimension", &LinearCode::dimension)
      .def_property_readonly("basis", &basis_strings)
      .def("contains",
           [](const LinearCode& c, const std::string& v) {
             return c.contains(BitVector::parse(v));
           })
      .def("codewords",
           [](const LinearCode& c) {
             std::vector<std::string> out;
             for (const BitVector& w : c.codewords()) out.push_back(w.str());
             return out;
           })
      .def("classify", &classify_dict)
      .def("__eq__", [](const LinearCode& a, const LinearCode& b) { return a == b; })
      .def("__repr__", [](const LinearCode& c) {
        std::string out = "LinearCode(length=" + std::to_string(c.length()) + ", basis=[";
        for (int i = 0; i < c.dimension(); ++i) {
          if (i) out += ", ";
          out += c.basis()[static_cast<std::size_t>(i)].str();
        }
        return out + "])";
      });

  py::class_<ColoredGraph>(m, "ColoredGraph")
      .def_static("from_agf", [](const std::string& text) { return parse_agf(text); })
      .def("to_agf", &serialize_agf)
      .def_property_readonly("n", &ColoredGraph::vertex_count)
      .def_property_readonly("colors", &ColoredGraph::color_count)
      .def_property_readonly("edges",
                             [](const ColoredGraph& g) {
                               std::vector<std::tuple<int, int, int, int>> out;
                               for (const Edge& e : g.edges()) {
                                 out.emplace_back(e.u, e.v, e.color, e.sign);
                               }
                               return out;
                             })
      .def_property_readonly("labels", &ColoredGraph::labels)
      .def_property_readonly("parity", &parity_string)
      .def_property_readonly("heights",
                             [](const ColoredGraph& g) -> py::object {
                               if (!g.has_heights()) return py::none();
                               return py::cast(g.heights());
                             })
      .def("__eq__", [](const ColoredGraph& a, const ColoredGraph& b) { return a == b; })
      .def("__repr__", [](const ColoredGraph& g) {
        return "ColoredGraph(n=" + std::to_string(g.vertex_count()) +
               ", colors=" + std::to_string(g.color_count()) + ", edges=" +
               std::to_string(g.edges().size()) + ")";
      });

  m.def("hypercube", &build_hypercube, py::arg("n"));
  m.def("folded_cube", &build_folded_cube, py::arg("n"));
  m.def("complete_even", &build_complete_even, py::arg("m"));
  m.def("complete_bipartite", &build_complete_bipartite, py::arg("n"));
  m.def("quotient", &build_quotient, py::arg("n"), py::arg("code"));

  m.def("validate_regular_coloring", [](const ColoredGraph& g) {
    std::vector<std::tuple<int, int, int>> out;
    for (const ColoringViolation& v : validate_regular_coloring(g)) {
      out.emplace_back(v.vertex, v.color, v.count);
    }
    return out;
  });
  m.def("bipartition", [](const ColoredGraph& g) -> py::object {
    auto parts = bipartition(g);
    if (!parts) return py::none();
    return py::make_tuple(parts->part1, parts->part2);
  });
  m.def("is_connected", &is_connected);
  m.def("color_permutations", [](const ColoredGraph& g) {
    ColorPermutations perms = color_permutations(g);
    std::vector<std::vector<int>> out;
    for (int t = 1; t <= perms.color_count(); ++t) out.push_back(perms.one_line(t));
    return out;
  });

  m.def("bicolor_report", [](const ColoredGraph& g) {
    py::list out;
    for (const BicolorPair& pair : bicolor_report(g).pairs) {
      py::dict entry;
      entry["colors"] = py::make_tuple(pair.color_i, pair.color_j);
      entry["m"] = pair.m;
      entry["cycles"] = pair.cycle_lengths;
      out.append(entry);
    }
    return out;
  });
  m.def("is_quadrilateral", &is_quadrilateral);
  m.def("is_perfect_1factorization", &is_perfect_1factorization);
  m.def(
      "exchange_group",
      [](const ColoredGraph& g, std::uint64_t cap) {
        ExchangeGroupSummary s = exchange_group(g, cap);
        py::dict out;
        out["order"] = s.order ? py::cast(*s.order) : py::none();
        out["abelian"] = s.abelian;
        out["elementary_abelian_2"] = s.elementary_abelian_2;
        out["max_element_order"] = s.max_element_order;
        out["dihedral_like"] = s.dihedral_like;
        out["cap"] = s.cap;
        return out;
      },
      py::arg("g"), py::arg("cap") = 1000000);
  m.def(
      "reduce_walk",
      [](const ColoredGraph& g, const std::vector<int>& walk, int start) {
        return reduce_walk(g, walk, start).str();
      },
      py::arg("g"), py::arg("walk"), py::arg("start") = 1);
  m.def("extract_code", &extract_code, py::arg("g"), py::arg("base") = 1,
        py::arg("seed") = 0);

  m.def("validate_totally_odd", [](const ColoredGraph& g) {
    py::list out;
    for (const BicolorSquare& sq : validate_totally_odd(g)) {
      py::dict entry;
      entry["colors"] = py::make_tuple(sq.color_i, sq.color_j);
      entry["vertices"] = sq.vertices;
      out.append(entry);
    }
    return out;
  });
  m.def("canonical_dashing_hypercube", &canonical_dashing_hypercube, py::arg("n"));

  py::class_<DashingSystem>(m, "DashingSystem")
      .def_readonly("consistent", &DashingSystem::consistent)
      .def_readonly("edge_count", &DashingSystem::edge_count)
      .def_readonly("rank", &DashingSystem::rank)
      .def_readonly("particular", &DashingSystem::particular)
      .def_readonly("nullspace", &DashingSystem::nullspace)
      .def_property_readonly("log2_solution_count", &DashingSystem::log2_solution_count)
      .def_property_readonly("solution_count",
                             [](const DashingSystem& s) -> py::object {
                               auto count = s.solution_count();
                               if (!count) return py::none();
                               return py::cast(*count);
                             });

  m.def("solve_dashings", &solve_dashings);
  m.def("apply_dashing", &apply_dashing);
  m.def("enumerate_dashings", &enumerate_dashings, py::arg("system"),
        py::arg("limit") = (1u << 20));

  py::class_<HeightAssignment>(m, "HeightAssignment")
      .def_readonly("height", &HeightAssignment::height)
      .def_readonly("rank_sequence", &HeightAssignment::rank_sequence)
      .def("__eq__", [](const HeightAssignment& a, const HeightAssignment& b) {
        return a == b;
      });

  m.def("valise", &valise);
  m.def("assign_heights", &assign_heights);
  m.def("heights_of", &heights_of);
  m.def("movable_vertices", [](const ColoredGraph& g, const HeightAssignment& h) {
    MovableVertices mv = movable_vertices(g, h);
    return py::make_tuple(mv.raisable, mv.lowerable);
  });
  m.def(
      "move_vertex",
      [](const ColoredGraph& g, const HeightAssignment& h, int v,
         const std::string& direction) {
        if (direction == "raise") return move_vertex(g, h, v, MoveDirection::raise);
        if (direction == "lower") return move_vertex(g, h, v, MoveDirection::lower);
        throw std::invalid_argument("direction must be 'raise' or 'lower'");
      },
      py::arg("g"), py::arg("h"), py::arg("v"), py::arg("direction"));
  m.def("lexicographic_order", &lexicographic_order);
  m.def("with_heights", &with_heights);

  py::class_<LatinAdjacencyList>(m, "LatinAdjacencyList")
      .def_readonly("colors", &LatinAdjacencyList::colors)
      .def_readonly("column_labels", &LatinAdjacencyList::column_labels)
      .def_readonly("rows", &LatinAdjacencyList::rows)
      .def_readonly("block_sizes", &LatinAdjacencyList::block_sizes);

  m.def("to_latin", &to_latin);
  m.def("latin_properties", [](const LatinAdjacencyList& latin) {
    LatinProperties props = latin_properties(latin);
    py::dict out;
    out["adjacency_ok"] = props.adjacency_ok;
    out["connected"] = props.connected;
    out["bipartite_blocks"] =
        props.bipartite_blocks
            ? py::object(py::make_tuple(props.bipartite_blocks->first,
                                        props.bipartite_blocks->second))
            : py::object(py::none());
    out["quadrilateral"] = props.quadrilateral;
    return out;
  });
  m.def("from_latin", &from_latin);
  m.def("render_latin", &render_latin);
  m.def("render_latin_csv", &render_latin_csv);

  py::class_<SemiMagicMatrix>(m, "SemiMagicMatrix")
      .def_readonly("n", &SemiMagicMatrix::n)
      .def_readonly("colors", &SemiMagicMatrix::colors)
      .def_readonly("line_sum", &SemiMagicMatrix::line_sum)
      .def_readonly("vertex_order", &SemiMagicMatrix::vertex_order)
      .def_readonly("entry", &SemiMagicMatrix::entry)
      .def_readonly("block_sizes", &SemiMagicMatrix::block_sizes);

  m.def("to_matrix", &to_matrix);
  m.def("render_matrix", &render_matrix);
  m.def("render_matrix_csv", &render_matrix_csv);
  m.def("export_dot", &export_dot);

  py::class_<SupermultipletRules>(m, "SupermultipletRules")
      .def_property_readonly("colors", &SupermultipletRules::color_count)
      .def_property_readonly("n", &SupermultipletRules::vertex_count);

  m.def("emit_rules", &emit_rules, py::arg("g"),
        py::arg("require_totally_odd") = true);
  m.def("verify_algebra", [](const SupermultipletRules& rules) {
    AlgebraReport report = verify_algebra(rules);
    py::dict out;
    out["ok"] = report.ok();
    out["checks"] = report.checks;
    std::vector<std::string> failures;
    for (const AlgebraFailure& f : report.failures) failures.push_back(f.detail);
    out["failures"] = failures;
    return out;
  });
  m.def(
      "render_rules",
      [](const SupermultipletRules& rules, const std::string& format, int color) {
        if (format == "text") return render(rules, RuleFormat::text, color);
        if (format == "latex") return render(rules, RuleFormat::latex, color);
        throw std::invalid_argument("format must be 'text' or 'latex'");
      },
      py::arg("rules"), py::arg("format") = "text", py::arg("color") = 0);

  m.def("run_verify", [](const ColoredGraph& g) {
    VerifyReport report = run_verify(g);
    py::dict out;
    out["regular"] = report.regular;
    out["bipartite"] = report.bipartite;
    out["quadrilateral"] = report.quadrilateral ? py::object(py::cast(*report.quadrilateral))
                                                : py::object(py::none());
    out["dashing_valid"] = report.dashing_valid
                               ? py::object(py::cast(*report.dashing_valid))
                               : py::object(py::none());
    out["heights_valid"] = report.heights_valid
                               ? py::object(py::cast(*report.heights_valid))
                               : py::object(py::none());
    out["verdict"] = std::string(to_string(report.verdict));
    return out;
  });
}

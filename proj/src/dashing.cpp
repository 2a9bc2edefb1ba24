#include "adinkra/dashing.hpp"

#include <algorithm>
#include <stdexcept>

#include "adinkra/constructors.hpp"
#include "adinkra/gf2.hpp"
#include "adinkra/gf2solve.hpp"
#include "adinkra/structure.hpp"

namespace adinkra {

std::vector<BicolorSquare> bicolor_squares(const ColoredGraph& g) {
  if (!is_quadrilateral(g)) {
    throw std::invalid_argument("graph does not satisfy the quadrilateral property");
  }
  ColorPermutations perms = color_permutations(g);
  std::vector<BicolorSquare> squares;
  for (int i = 1; i <= g.color_count(); ++i) {
    for (int j = i + 1; j <= g.color_count(); ++j) {
      std::vector<char> seen(static_cast<std::size_t>(g.vertex_count() + 1), 0);
      for (int a = 1; a <= g.vertex_count(); ++a) {
        if (seen[static_cast<std::size_t>(a)]) continue;
        // Square through a: a -i- b -j- d -i- c -j- a.
        int b = perms.apply(i, a);
        int c = perms.apply(j, a);
        int d = perms.apply(j, b);
        seen[static_cast<std::size_t>(a)] = 1;
        seen[static_cast<std::size_t>(b)] = 1;
        seen[static_cast<std::size_t>(c)] = 1;
        seen[static_cast<std::size_t>(d)] = 1;
        BicolorSquare sq;
        sq.color_i = i;
        sq.color_j = j;
        sq.vertices = {a, b, d, c};
        sq.edge_indices = {g.find_edge(a, b), g.find_edge(b, d), g.find_edge(d, c),
                           g.find_edge(c, a)};
        squares.push_back(sq);
      }
    }
  }
  return squares;
}

std::vector<BicolorSquare> validate_totally_odd(const ColoredGraph& g) {
  std::vector<BicolorSquare> violations;
  for (const BicolorSquare& sq : bicolor_squares(g)) {
    int dashes = 0;
    for (int idx : sq.edge_indices) {
      if (g.edges()[static_cast<std::size_t>(idx)].sign < 0) ++dashes;
    }
    if (dashes % 2 == 0) violations.push_back(sq);
  }
  return violations;
}

ColoredGraph canonical_dashing_hypercube(int n_colors) {
  ColoredGraph cube = build_hypercube(n_colors);
  std::vector<int> signs;
  signs.reserve(cube.edges().size());
  for (const Edge& e : cube.edges()) {
    BitVector u = BitVector::parse(cube.label(e.u));
    BitVector v = BitVector::parse(cube.label(e.v));
    BitVector lower = u.bit(e.color) ? v : u;
    int below = 0;
    for (int p = 1; p < e.color; ++p) {
      if (lower.bit(p)) ++below;
    }
    signs.push_back(below % 2 == 0 ? +1 : -1);
  }
  return apply_dashing(cube, signs);
}

std::optional<std::uint64_t> DashingSystem::solution_count() const {
  if (!consistent) return 0;
  int exponent = log2_solution_count();
  if (exponent >= 64) return std::nullopt;
  return 1ull << exponent;
}

DashingSystem solve_dashings(const ColoredGraph& g) {
  std::vector<BicolorSquare> squares = bicolor_squares(g);
  std::vector<std::vector<int>> equations;
  equations.reserve(squares.size());
  for (const BicolorSquare& sq : squares) {
    equations.emplace_back(sq.edge_indices.begin(), sq.edge_indices.end());
  }
  std::vector<int> rhs(squares.size(), 1);
  gf2::Solution solved =
      gf2::solve(static_cast<int>(g.edges().size()), equations, rhs);

  DashingSystem out;
  out.edge_count = static_cast<int>(g.edges().size());
  out.rank = solved.rank;
  out.consistent = solved.consistent;
  if (solved.consistent) {
    out.particular.reserve(solved.particular.size());
    for (std::uint8_t bit : solved.particular) {
      out.particular.push_back(bit ? -1 : +1);
    }
    out.nullspace = std::move(solved.nullspace);
  }
  return out;
}

ColoredGraph apply_dashing(const ColoredGraph& g, const std::vector<int>& signs) {
  if (signs.size() != g.edges().size()) {
    throw std::invalid_argument("sign assignment must cover every edge");
  }
  GraphBuilder builder(g.vertex_count(), g.color_count());
  for (int v = 1; v <= g.vertex_count(); ++v) builder.set_label(v, g.label(v));
  if (g.has_parity()) builder.set_parity(g.parities());
  if (g.has_heights()) builder.set_heights(g.heights());
  for (std::size_t i = 0; i < g.edges().size(); ++i) {
    const Edge& e = g.edges()[i];
    if (signs[i] != 1 && signs[i] != -1) {
      throw std::invalid_argument("edge signs must be +1 or -1");
    }
    builder.add_edge(e.u, e.v, e.color, signs[i]);
  }
  return builder.build();
}

std::vector<std::vector<int>> enumerate_dashings(const DashingSystem& system,
                                                 std::uint64_t limit) {
  if (!system.consistent) return {};
  int free_vars = system.log2_solution_count();
  std::optional<std::uint64_t> count = system.solution_count();
  if (!count || *count > limit) {
    std::string exact = count ? std::to_string(*count)
                              : "2^" + std::to_string(free_vars);
    throw std::invalid_argument("solution space too large to enumerate: " +
                                exact + " dashings");
  }
  std::vector<std::vector<int>> out;
  out.reserve(*count);
  for (std::uint64_t combo = 0; combo < *count; ++combo) {
    std::vector<int> signs = system.particular;
    for (int b = 0; b < free_vars; ++b) {
      if ((combo >> b) & 1u) {
        const auto& flip = system.nullspace[static_cast<std::size_t>(b)];
        for (std::size_t e = 0; e < signs.size(); ++e) {
          if (flip[e]) signs[e] = -signs[e];
        }
      }
    }
    out.push_back(std::move(signs));
  }
  return out;
}

}  // namespace adinkra

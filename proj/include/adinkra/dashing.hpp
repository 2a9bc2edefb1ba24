#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "adinkra/graph.hpp"

namespace adinkra {

// One bicolor 4-cycle.  Vertices are listed in cycle order starting from
// the smallest vertex; edge_indices point into graph.edges() in the same
// cycle order.
struct BicolorSquare {
  int color_i = 0;
  int color_j = 0;
  std::array<int, 4> vertices{};
  std::array<int, 4> edge_indices{};
};

// All bicolor squares, ordered by (i, j, smallest vertex).  Requires the
// quadrilateral property.
std::vector<BicolorSquare> bicolor_squares(const ColoredGraph& g);

// Squares whose dash count is even; empty iff the signs form a totally odd
// dashing.
std::vector<BicolorSquare> validate_totally_odd(const ColoredGraph& g);

// Q_N dashed by the sign group: edge {g, g+e_i} is dashed iff g (the
// endpoint with bit i clear) has an odd number of support positions below
// i.  Reproduces the standard dashing of the cube.
ColoredGraph canonical_dashing_hypercube(int n_colors);

// The totally odd dashing condition as an affine system over GF(2): one
// unknown per edge (1 = dashed), one equation per bicolor square with
// right-hand side 1.  For a quotient by a code C the system is consistent
// iff every codeword weight is 0 or 1 mod 4 (the sign-group obstruction
// (-1)^{w(w-1)/2}); for even codes that is the doubly even condition.
struct DashingSystem {
  bool consistent = false;
  int edge_count = 0;
  int rank = 0;
  std::vector<int> particular;  // signs per edge index, when consistent
  std::vector<std::vector<std::uint8_t>> nullspace;  // flip patterns

  int log2_solution_count() const { return edge_count - rank; }
  // 2^(E - rank) when consistent and it fits in 64 bits.
  std::optional<std::uint64_t> solution_count() const;
};

DashingSystem solve_dashings(const ColoredGraph& g);

// New graph with the given signs, one per edge in edges() order.
ColoredGraph apply_dashing(const ColoredGraph& g, const std::vector<int>& signs);

// All solutions of a consistent system, each as a sign vector, in the order
// induced by the nullspace basis.  Refuses when the count exceeds `limit`.
std::vector<std::vector<int>> enumerate_dashings(const DashingSystem& system,
                                                 std::uint64_t limit = 1u << 20);

}  // namespace adinkra

#pragma once

#include <map>
#include <vector>

#include "adinkra/graph.hpp"

namespace adinkra {

// Height function on a graded graph.  Heights are normalized so the lowest
// level is 0; rank_sequence counts vertices per level bottom-up.
struct HeightAssignment {
  std::vector<int> height;         // height[v-1]
  std::vector<int> rank_sequence;

  friend bool operator==(const HeightAssignment&, const HeightAssignment&) = default;
};

// All bosons at level 0, all fermions at level 1.  Requires parity.
HeightAssignment valise(const ColoredGraph& g);

// Heights from an explicit map.  Vertices missing from the map fall back to
// their valise level (which needs parity); a complete map needs neither
// parity nor bipartiteness beyond the edge condition itself.  Validates
// |h(u) - h(v)| = 1 on every edge and, when parity is present, that each
// level is single-parity.
HeightAssignment assign_heights(const ColoredGraph& g, const std::map<int, int>& given);

// The assignment stored on the graph itself.
HeightAssignment heights_of(const ColoredGraph& g);

struct MovableVertices {
  std::vector<int> raisable;   // all neighbors one level up
  std::vector<int> lowerable;  // all neighbors one level down
};

MovableVertices movable_vertices(const ColoredGraph& g, const HeightAssignment& h);

enum class MoveDirection { raise, lower };

// Pivot a vertex across the adjacent level: h(v) +- 2, then renormalize.
HeightAssignment move_vertex(const ColoredGraph& g, const HeightAssignment& h,
                             int v, MoveDirection direction);

// Vertices sorted by (height, id); the column order used by the
// adjacency-list and matrix representations.
std::vector<int> lexicographic_order(const ColoredGraph& g, const HeightAssignment& h);

// Copy of the graph carrying the assignment.
ColoredGraph with_heights(const ColoredGraph& g, const HeightAssignment& h);

}  // namespace adinkra

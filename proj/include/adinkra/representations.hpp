#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "adinkra/graph.hpp"

namespace adinkra {

// Adjacency list of a regular edge coloring: one row per color holding the
// involution s_t in one-line notation over the column order, dashed edges
// as negative entries.  Together with the column labels this is an
// (N+1) x n Latin rectangle.  Parity and heights ride along so the graph
// can be rebuilt exactly.
struct LatinAdjacencyList {
  int colors = 0;
  std::vector<int> column_labels;      // vertex ids in column order
  std::vector<std::vector<int>> rows;  // rows[color-1][column], signed
  std::vector<int> block_sizes;        // column grouping; sums to n
  std::vector<Parity> parity;          // per vertex, may be empty
  std::vector<int> heights;            // per vertex, may be empty
};

// Columns ordered by (height, id) when heights exist, else by id.  Blocks
// are height levels, or the bipartition when it splits the column order
// into two runs, else one block.
LatinAdjacencyList to_latin(const ColoredGraph& g);

struct LatinProperties {
  bool adjacency_ok = false;  // v in column w iff w in column v, same sign
  bool connected = false;     // columns admit no split into two lists
  std::optional<std::pair<std::vector<int>, std::vector<int>>> bipartite_blocks;
  bool quadrilateral = false;  // inverted-pair rectangles for every row pair
};

// The four readable criteria, evaluated on the rectangle alone.
LatinProperties latin_properties(const LatinAdjacencyList& latin);

// Rebuilds the graph; throws naming the offending cell when the symmetry
// property fails.
ColoredGraph from_latin(const LatinAdjacencyList& latin);

std::string render_latin(const LatinAdjacencyList& latin);
std::string render_latin_csv(const LatinAdjacencyList& latin);

// Adjacency matrix of the coloring: entry +-color for edges (negative when
// dashed), 0 otherwise.  Unsigned row and column sums all equal
// N(N+1)/2.  Rows/columns follow `vertex_order`.
struct SemiMagicMatrix {
  int n = 0;
  int colors = 0;
  int line_sum = 0;
  std::vector<int> vertex_order;
  std::vector<std::vector<int>> entry;  // position-indexed
  std::vector<int> block_sizes;         // height levels, may be empty
};

SemiMagicMatrix to_matrix(const ColoredGraph& g);

std::string render_matrix(const SemiMagicMatrix& matrix);
std::string render_matrix_csv(const SemiMagicMatrix& matrix);

// Graphviz text: palette black/blue/red/green then a fixed continuation,
// dashed edges dashed, fermions filled, height levels as equal ranks.
std::string export_dot(const ColoredGraph& g);

}  // namespace adinkra

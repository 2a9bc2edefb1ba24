#pragma once

#include <optional>
#include <string>
#include <vector>

namespace adinkra {

enum class Parity : unsigned char { boson, fermion };

struct Edge {
  int u = 0;      // 1-based, u < v
  int v = 0;
  int color = 0;  // 1..colors
  int sign = 1;   // +1 plain, -1 dashed

  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple graph with colored, signed edges plus optional boson/fermion
// parity and optional integer heights.  Immutable once built; edges are
// kept sorted by (color, u, v), which is also the canonical order for
// serialization and for dashing-system variables.
class ColoredGraph {
public:
  int vertex_count() const { return n_; }
  int color_count() const { return colors_; }
  const std::vector<Edge>& edges() const { return edges_; }

  const std::string& label(int v) const;
  const std::vector<std::string>& labels() const { return labels_; }

  bool has_parity() const { return !parity_.empty(); }
  Parity parity(int v) const;
  const std::vector<Parity>& parities() const { return parity_; }

  bool has_heights() const { return !heights_.empty(); }
  int height(int v) const;
  const std::vector<int>& heights() const { return heights_; }

  bool has_dashes() const;

  const std::vector<int>& incident_edges(int v) const;
  int find_edge(int u, int v) const;  // index into edges(), -1 when absent
  std::vector<int> neighbors(int v) const;

  // Structural equality: vertex count, colors, edges with signs, parity,
  // heights.  Labels are presentation data and do not participate.
  bool operator==(const ColoredGraph& other) const;

private:
  friend class GraphBuilder;

  int n_ = 0;
  int colors_ = 0;
  std::vector<Edge> edges_;
  std::vector<std::string> labels_;
  std::vector<Parity> parity_;          // empty or size n
  std::vector<int> heights_;            // empty or size n
  std::vector<std::vector<int>> incident_;
};

class GraphBuilder {
public:
  GraphBuilder(int vertex_count, int colors);

  GraphBuilder& add_edge(int u, int v, int color, int sign = +1);
  GraphBuilder& set_label(int v, std::string label);
  GraphBuilder& set_parity(std::vector<Parity> parity);
  GraphBuilder& set_heights(std::vector<int> heights);
  GraphBuilder& clear_heights();

  // Checks the simple-graph, parity and height invariants and produces the
  // finished graph.  Regularity of the coloring is not enforced here; see
  // validate_regular_coloring.
  ColoredGraph build();

private:
  ColoredGraph g_;
};

struct ColoringViolation {
  int vertex = 0;
  int color = 0;
  int count = 0;  // incident edges of that color at the vertex

  friend bool operator==(const ColoringViolation&, const ColoringViolation&) = default;
};

// Empty result iff every vertex meets exactly one edge of every color.
std::vector<ColoringViolation> validate_regular_coloring(const ColoredGraph& g);

// The involutions s_t, one per color: s_t(i) = j when ij is an edge of
// color t.  Only defined for validated regular colorings.
class ColorPermutations {
public:
  ColorPermutations(int degree, std::vector<std::vector<int>> one_line);

  int degree() const { return degree_; }
  int color_count() const { return static_cast<int>(perms_.size()); }
  int apply(int color, int vertex) const;
  const std::vector<int>& one_line(int color) const;

private:
  int degree_ = 0;
  std::vector<std::vector<int>> perms_;  // perms_[t-1][i-1] = s_t(i)
};

ColorPermutations color_permutations(const ColoredGraph& g);

struct Bipartition {
  std::vector<int> part1;  // contains the first vertex of each component
  std::vector<int> part2;
};

// BFS 2-coloring; absent when some cycle has odd length.
std::optional<Bipartition> bipartition(const ColoredGraph& g);

// The color classes; each is a perfect matching of a validated coloring.
std::vector<std::vector<Edge>> perfect_matchings_of(const ColoredGraph& g);

bool is_connected(const ColoredGraph& g);

}  // namespace adinkra

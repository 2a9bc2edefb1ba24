#include "adinkra/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>

namespace adinkra {

namespace {

void check_vertex(int v, int n, const char* what) {
  if (v < 1 || v > n) {
    throw std::invalid_argument(std::string(what) + " vertex " + std::to_string(v) +
                                " out of range 1.." + std::to_string(n));
  }
}

}  // namespace

const std::string& ColoredGraph::label(int v) const {
  check_vertex(v, n_, "label");
  return labels_[static_cast<std::size_t>(v - 1)];
}

Parity ColoredGraph::parity(int v) const {
  check_vertex(v, n_, "parity");
  if (!has_parity()) throw std::logic_error("graph has no parity assignment");
  return parity_[static_cast<std::size_t>(v - 1)];
}

int ColoredGraph::height(int v) const {
  check_vertex(v, n_, "height");
  if (!has_heights()) throw std::logic_error("graph has no height assignment");
  return heights_[static_cast<std::size_t>(v - 1)];
}

bool ColoredGraph::has_dashes() const {
  return std::any_of(edges_.begin(), edges_.end(),
                     [](const Edge& e) { return e.sign < 0; });
}

const std::vector<int>& ColoredGraph::incident_edges(int v) const {
  check_vertex(v, n_, "incident_edges");
  return incident_[static_cast<std::size_t>(v - 1)];
}

int ColoredGraph::find_edge(int u, int v) const {
  check_vertex(u, n_, "find_edge");
  check_vertex(v, n_, "find_edge");
  for (int idx : incident_[static_cast<std::size_t>(u - 1)]) {
    const Edge& e = edges_[static_cast<std::size_t>(idx)];
    if ((e.u == u && e.v == v) || (e.u == v && e.v == u)) return idx;
  }
  return -1;
}

std::vector<int> ColoredGraph::neighbors(int v) const {
  std::vector<int> out;
  for (int idx : incident_edges(v)) {
    const Edge& e = edges_[static_cast<std::size_t>(idx)];
    out.push_back(e.u == v ? e.v : e.u);
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool ColoredGraph::operator==(const ColoredGraph& other) const {
  return n_ == other.n_ && colors_ == other.colors_ && edges_ == other.edges_ &&
         parity_ == other.parity_ && heights_ == other.heights_;
}

GraphBuilder::GraphBuilder(int vertex_count, int colors) {
  if (vertex_count < 1) throw std::invalid_argument("vertex count must be positive");
  if (colors < 1) throw std::invalid_argument("color count must be positive");
  g_.n_ = vertex_count;
  g_.colors_ = colors;
  g_.labels_.resize(static_cast<std::size_t>(vertex_count));
  for (int v = 1; v <= vertex_count; ++v) {
    g_.labels_[static_cast<std::size_t>(v - 1)] = std::to_string(v);
  }
}

GraphBuilder& GraphBuilder::add_edge(int u, int v, int color, int sign) {
  check_vertex(u, g_.n_, "edge");
  check_vertex(v, g_.n_, "edge");
  if (u == v) {
    throw std::invalid_argument("loop at vertex " + std::to_string(u));
  }
  if (color < 1 || color > g_.colors_) {
    throw std::invalid_argument("edge color " + std::to_string(color) +
                                " out of range 1.." + std::to_string(g_.colors_));
  }
  if (sign != 1 && sign != -1) {
    throw std::invalid_argument("edge sign must be +1 or -1");
  }
  if (u > v) std::swap(u, v);
  g_.edges_.push_back(Edge{u, v, color, sign});
  return *this;
}

GraphBuilder& GraphBuilder::set_label(int v, std::string label) {
  check_vertex(v, g_.n_, "label");
  g_.labels_[static_cast<std::size_t>(v - 1)] = std::move(label);
  return *this;
}

GraphBuilder& GraphBuilder::set_parity(std::vector<Parity> parity) {
  if (static_cast<int>(parity.size()) != g_.n_) {
    throw std::invalid_argument("parity vector must cover every vertex");
  }
  g_.parity_ = std::move(parity);
  return *this;
}

GraphBuilder& GraphBuilder::set_heights(std::vector<int> heights) {
  if (static_cast<int>(heights.size()) != g_.n_) {
    throw std::invalid_argument("height vector must cover every vertex");
  }
  g_.heights_ = std::move(heights);
  return *this;
}

GraphBuilder& GraphBuilder::clear_heights() {
  g_.heights_.clear();
  return *this;
}

ColoredGraph GraphBuilder::build() {
  std::sort(g_.edges_.begin(), g_.edges_.end(), [](const Edge& a, const Edge& b) {
    return std::tie(a.color, a.u, a.v) < std::tie(b.color, b.u, b.v);
  });
  std::set<std::pair<int, int>> seen;
  for (const Edge& e : g_.edges_) {
    if (!seen.insert({e.u, e.v}).second) {
      throw std::invalid_argument("multiple edges between vertices " +
                                  std::to_string(e.u) + " and " + std::to_string(e.v));
    }
    if (!g_.parity_.empty() &&
        g_.parity_[static_cast<std::size_t>(e.u - 1)] ==
            g_.parity_[static_cast<std::size_t>(e.v - 1)]) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v) +
                                  " joins two vertices of equal parity");
    }
    if (!g_.heights_.empty()) {
      int dh = g_.heights_[static_cast<std::size_t>(e.u - 1)] -
               g_.heights_[static_cast<std::size_t>(e.v - 1)];
      if (dh != 1 && dh != -1) {
        throw std::invalid_argument("edge " + std::to_string(e.u) + "-" +
                                    std::to_string(e.v) +
                                    " does not span adjacent height levels");
      }
    }
  }
  g_.incident_.assign(static_cast<std::size_t>(g_.n_), {});
  for (std::size_t i = 0; i < g_.edges_.size(); ++i) {
    g_.incident_[static_cast<std::size_t>(g_.edges_[i].u - 1)].push_back(static_cast<int>(i));
    g_.incident_[static_cast<std::size_t>(g_.edges_[i].v - 1)].push_back(static_cast<int>(i));
  }
  return std::move(g_);
}

std::vector<ColoringViolation> validate_regular_coloring(const ColoredGraph& g) {
  int n = g.vertex_count();
  int colors = g.color_count();
  std::vector<int> count(static_cast<std::size_t>(n) * colors, 0);
  for (const Edge& e : g.edges()) {
    ++count[static_cast<std::size_t>(e.u - 1) * colors + (e.color - 1)];
    ++count[static_cast<std::size_t>(e.v - 1) * colors + (e.color - 1)];
  }
  std::vector<ColoringViolation> out;
  for (int v = 1; v <= n; ++v) {
    for (int c = 1; c <= colors; ++c) {
      int k = count[static_cast<std::size_t>(v - 1) * colors + (c - 1)];
      if (k != 1) out.push_back(ColoringViolation{v, c, k});
    }
  }
  return out;
}

ColorPermutations::ColorPermutations(int degree, std::vector<std::vector<int>> one_line)
    : degree_(degree), perms_(std::move(one_line)) {
  for (const auto& p : perms_) {
    if (static_cast<int>(p.size()) != degree_) {
      throw std::invalid_argument("permutation degree mismatch");
    }
    for (int i = 1; i <= degree_; ++i) {
      int image = p[static_cast<std::size_t>(i - 1)];
      if (image < 1 || image > degree_ || image == i ||
          p[static_cast<std::size_t>(image - 1)] != i) {
        throw std::invalid_argument("color class is not a fixed-point-free involution");
      }
    }
  }
}

int ColorPermutations::apply(int color, int vertex) const {
  return perms_.at(static_cast<std::size_t>(color - 1))
      .at(static_cast<std::size_t>(vertex - 1));
}

const std::vector<int>& ColorPermutations::one_line(int color) const {
  return perms_.at(static_cast<std::size_t>(color - 1));
}

ColorPermutations color_permutations(const ColoredGraph& g) {
  if (!validate_regular_coloring(g).empty()) {
    throw std::invalid_argument("coloring is not regular");
  }
  std::vector<std::vector<int>> perms(
      static_cast<std::size_t>(g.color_count()),
      std::vector<int>(static_cast<std::size_t>(g.vertex_count()), 0));
  for (const Edge& e : g.edges()) {
    perms[static_cast<std::size_t>(e.color - 1)][static_cast<std::size_t>(e.u - 1)] = e.v;
    perms[static_cast<std::size_t>(e.color - 1)][static_cast<std::size_t>(e.v - 1)] = e.u;
  }
  return ColorPermutations(g.vertex_count(), std::move(perms));
}

std::optional<Bipartition> bipartition(const ColoredGraph& g) {
  int n = g.vertex_count();
  std::vector<int> side(static_cast<std::size_t>(n + 1), -1);
  Bipartition out;
  for (int start = 1; start <= n; ++start) {
    if (side[static_cast<std::size_t>(start)] != -1) continue;
    side[static_cast<std::size_t>(start)] = 0;
    std::queue<int> q;
    q.push(start);
    while (!q.empty()) {
      int v = q.front();
      q.pop();
      for (int w : g.neighbors(v)) {
        if (side[static_cast<std::size_t>(w)] == -1) {
          side[static_cast<std::size_t>(w)] = 1 - side[static_cast<std::size_t>(v)];
          q.push(w);
        } else if (side[static_cast<std::size_t>(w)] ==
                   side[static_cast<std::size_t>(v)]) {
          return std::nullopt;  // odd cycle
        }
      }
    }
  }
  for (int v = 1; v <= n; ++v) {
    (side[static_cast<std::size_t>(v)] == 0 ? out.part1 : out.part2).push_back(v);
  }
  return out;
}

std::vector<std::vector<Edge>> perfect_matchings_of(const ColoredGraph& g) {
  if (!validate_regular_coloring(g).empty()) {
    throw std::invalid_argument("coloring is not regular");
  }
  std::vector<std::vector<Edge>> out(static_cast<std::size_t>(g.color_count()));
  for (const Edge& e : g.edges()) {
    out[static_cast<std::size_t>(e.color - 1)].push_back(e);
  }
  return out;
}

bool is_connected(const ColoredGraph& g) {
  int n = g.vertex_count();
  std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
  std::queue<int> q;
  q.push(1);
  seen[1] = 1;
  int visited = 1;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int w : g.neighbors(v)) {
      if (!seen[static_cast<std::size_t>(w)]) {
        seen[static_cast<std::size_t>(w)] = 1;
        ++visited;
        q.push(w);
      }
    }
  }
  return visited == n;
}

}  // namespace adinkra

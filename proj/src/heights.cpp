#include "adinkra/heights.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace adinkra {

namespace {

HeightAssignment finish(const ColoredGraph& g, std::vector<int> height) {
  for (const Edge& e : g.edges()) {
    int dh = height[static_cast<std::size_t>(e.u - 1)] -
             height[static_cast<std::size_t>(e.v - 1)];
    if (dh != 1 && dh != -1) {
      throw std::invalid_argument("edge " + std::to_string(e.u) + "-" +
                                  std::to_string(e.v) +
                                  " does not span adjacent levels");
    }
  }
  int min_h = *std::min_element(height.begin(), height.end());
  for (int& h : height) h -= min_h;
  int max_h = *std::max_element(height.begin(), height.end());

  if (g.has_parity()) {
    std::vector<int> level_parity(static_cast<std::size_t>(max_h + 1), -1);
    for (int v = 1; v <= g.vertex_count(); ++v) {
      int level = height[static_cast<std::size_t>(v - 1)];
      int p = g.parity(v) == Parity::boson ? 0 : 1;
      int& lp = level_parity[static_cast<std::size_t>(level)];
      if (lp == -1) {
        lp = p;
      } else if (lp != p) {
        throw std::invalid_argument("level " + std::to_string(level) +
                                    " mixes bosons and fermions");
      }
    }
  }

  HeightAssignment out;
  out.rank_sequence.assign(static_cast<std::size_t>(max_h + 1), 0);
  for (int h : height) ++out.rank_sequence[static_cast<std::size_t>(h)];
  out.height = std::move(height);
  return out;
}

}  // namespace

HeightAssignment valise(const ColoredGraph& g) {
  if (!g.has_parity()) {
    throw std::invalid_argument("valise form needs a parity assignment");
  }
  std::vector<int> height(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 1; v <= g.vertex_count(); ++v) {
    height[static_cast<std::size_t>(v - 1)] = g.parity(v) == Parity::boson ? 0 : 1;
  }
  return finish(g, std::move(height));
}

HeightAssignment assign_heights(const ColoredGraph& g, const std::map<int, int>& given) {
  for (const auto& [v, h] : given) {
    if (v < 1 || v > g.vertex_count()) {
      throw std::invalid_argument("height given for unknown vertex " + std::to_string(v));
    }
    (void)h;
  }
  std::vector<int> height(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 1; v <= g.vertex_count(); ++v) {
    auto it = given.find(v);
    if (it != given.end()) {
      height[static_cast<std::size_t>(v - 1)] = it->second;
    } else if (g.has_parity()) {
      height[static_cast<std::size_t>(v - 1)] =
          g.parity(v) == Parity::boson ? 0 : 1;
    } else {
      throw std::invalid_argument("no height given for vertex " + std::to_string(v) +
                                  " and no parity to fall back on");
    }
  }
  return finish(g, std::move(height));
}

HeightAssignment heights_of(const ColoredGraph& g) {
  if (!g.has_heights()) {
    throw std::invalid_argument("graph carries no heights");
  }
  return finish(g, g.heights());
}

MovableVertices movable_vertices(const ColoredGraph& g, const HeightAssignment& h) {
  MovableVertices out;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    int hv = h.height[static_cast<std::size_t>(v - 1)];
    bool all_above = true;
    bool all_below = true;
    for (int w : g.neighbors(v)) {
      int hw = h.height[static_cast<std::size_t>(w - 1)];
      if (hw != hv + 1) all_above = false;
      if (hw != hv - 1) all_below = false;
    }
    if (all_above) out.raisable.push_back(v);
    if (all_below) out.lowerable.push_back(v);
  }
  return out;
}

HeightAssignment move_vertex(const ColoredGraph& g, const HeightAssignment& h,
                             int v, MoveDirection direction) {
  MovableVertices movable = movable_vertices(g, h);
  const std::vector<int>& allowed =
      direction == MoveDirection::raise ? movable.raisable : movable.lowerable;
  if (std::find(allowed.begin(), allowed.end(), v) == allowed.end()) {
    throw std::invalid_argument(
        "vertex " + std::to_string(v) + " is not " +
        (direction == MoveDirection::raise ? "raisable" : "lowerable"));
  }
  std::vector<int> height = h.height;
  height[static_cast<std::size_t>(v - 1)] += direction == MoveDirection::raise ? 2 : -2;
  return finish(g, std::move(height));
}

std::vector<int> lexicographic_order(const ColoredGraph& g, const HeightAssignment& h) {
  std::vector<int> order(static_cast<std::size_t>(g.vertex_count()));
  for (int v = 1; v <= g.vertex_count(); ++v) order[static_cast<std::size_t>(v - 1)] = v;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return h.height[static_cast<std::size_t>(a - 1)] <
           h.height[static_cast<std::size_t>(b - 1)];
  });
  return order;
}

ColoredGraph with_heights(const ColoredGraph& g, const HeightAssignment& h) {
  GraphBuilder builder(g.vertex_count(), g.color_count());
  for (int v = 1; v <= g.vertex_count(); ++v) builder.set_label(v, g.label(v));
  if (g.has_parity()) builder.set_parity(g.parities());
  builder.set_heights(h.height);
  for (const Edge& e : g.edges()) builder.add_edge(e.u, e.v, e.color, e.sign);
  return builder.build();
}

}  // namespace adinkra

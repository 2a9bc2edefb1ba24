#include "adinkra/structure.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace adinkra {

const BicolorPair& BicolorReport::pair(int i, int j) const {
  if (i > j) std::swap(i, j);
  for (const BicolorPair& p : pairs) {
    if (p.color_i == i && p.color_j == j) return p;
  }
  throw std::out_of_range("no such color pair");
}

BicolorReport bicolor_report(const ColoredGraph& g) {
  ColorPermutations perms = color_permutations(g);
  int n = g.vertex_count();
  BicolorReport report;
  report.vertex_count = n;
  for (int i = 1; i <= g.color_count(); ++i) {
    for (int j = i + 1; j <= g.color_count(); ++j) {
      BicolorPair pair;
      pair.color_i = i;
      pair.color_j = j;
      std::vector<char> seen(static_cast<std::size_t>(n + 1), 0);
      for (int start = 1; start <= n; ++start) {
        if (seen[static_cast<std::size_t>(start)]) continue;
        // Alternate i, j from start until the walk closes.
        int length = 0;
        int v = start;
        int next_color = i;
        do {
          seen[static_cast<std::size_t>(v)] = 1;
          v = perms.apply(next_color, v);
          next_color = next_color == i ? j : i;
          ++length;
        } while (v != start);
        pair.cycle_lengths.push_back(length);
      }
      std::sort(pair.cycle_lengths.begin(), pair.cycle_lengths.end());
      pair.m = 1;
      for (int len : pair.cycle_lengths) {
        pair.m = std::lcm(pair.m, static_cast<long long>(len / 2));
      }
      report.pairs.push_back(std::move(pair));
    }
  }
  return report;
}

bool is_quadrilateral(const ColoredGraph& g) {
  BicolorReport report = bicolor_report(g);
  return std::all_of(report.pairs.begin(), report.pairs.end(),
                     [](const BicolorPair& p) { return p.m == 2; });
}

bool is_perfect_1factorization(const ColoredGraph& g) {
  BicolorReport report = bicolor_report(g);
  return std::all_of(report.pairs.begin(), report.pairs.end(),
                     [&](const BicolorPair& p) {
                       return p.cycle_lengths.size() == 1 &&
                              p.cycle_lengths.front() == g.vertex_count();
                     });
}

namespace {

struct VectorHash {
  std::size_t operator()(const std::vector<int>& v) const {
    std::size_t h = v.size();
    for (int x : v) {
      h ^= static_cast<std::size_t>(x) + 0x9e3779b97f4a7c15ull + (h << 6) + (h >> 2);
    }
    return h;
  }
};

std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  // (a*b)(i) = a(b(i)), 1-based entries
  std::vector<int> out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    out[i] = a[static_cast<std::size_t>(b[i] - 1)];
  }
  return out;
}

std::uint64_t permutation_order(const std::vector<int>& p) {
  std::vector<char> seen(p.size(), 0);
  std::uint64_t order = 1;
  for (std::size_t i = 0; i < p.size(); ++i) {
    if (seen[i]) continue;
    std::uint64_t len = 0;
    std::size_t j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = static_cast<std::size_t>(p[j] - 1);
      ++len;
    }
    order = std::lcm(order, len);
  }
  return order;
}

}  // namespace

ExchangeGroupSummary exchange_group(const ColoredGraph& g, std::uint64_t cap) {
  ColorPermutations perms = color_permutations(g);
  int n = g.vertex_count();
  int colors = g.color_count();

  ExchangeGroupSummary summary;
  summary.cap = cap;

  std::vector<int> identity(static_cast<std::size_t>(n));
  std::iota(identity.begin(), identity.end(), 1);

  summary.abelian = true;
  for (int i = 1; i <= colors && summary.abelian; ++i) {
    for (int j = i + 1; j <= colors; ++j) {
      if (compose(perms.one_line(i), perms.one_line(j)) !=
          compose(perms.one_line(j), perms.one_line(i))) {
        summary.abelian = false;
        break;
      }
    }
  }
  // Generated by involutions, so abelian already forces an elementary
  // abelian 2-group; keep the generator-product check as its own route.
  summary.elementary_abelian_2 = summary.abelian;
  for (int i = 1; i <= colors && summary.elementary_abelian_2; ++i) {
    for (int j = i + 1; j <= colors; ++j) {
      std::vector<int> prod = compose(perms.one_line(i), perms.one_line(j));
      if (compose(prod, prod) != identity) {
        summary.elementary_abelian_2 = false;
        break;
      }
    }
  }
  std::unordered_set<std::vector<int>, VectorHash> elements;
  std::queue<std::vector<int>> frontier;
  elements.insert(identity);
  frontier.push(identity);
  std::uint64_t max_order = 1;
  bool capped = false;
  while (!frontier.empty()) {
    std::vector<int> current = std::move(frontier.front());
    frontier.pop();
    for (int t = 1; t <= colors; ++t) {
      std::vector<int> next = compose(perms.one_line(t), current);
      if (elements.contains(next)) continue;
      if (elements.size() >= cap) {
        capped = true;
        break;
      }
      max_order = std::max(max_order, permutation_order(next));
      elements.insert(next);
      frontier.push(next);
    }
    if (capped) break;
  }

  if (capped) {
    summary.order = std::nullopt;
    summary.max_element_order = 0;
    summary.dihedral_like = false;
    return summary;
  }
  summary.order = elements.size();
  summary.max_element_order = max_order;
  std::uint64_t order = *summary.order;
  if (order % 2 == 0) {
    std::uint64_t half = order / 2;
    for (const auto& e : elements) {
      if (permutation_order(e) == half) {
        summary.dihedral_like = true;
        break;
      }
    }
  }
  return summary;
}

BitVector reduce_walk(const ColoredGraph& g, const std::vector<int>& walk, int from) {
  if (!is_quadrilateral(g)) {
    throw std::invalid_argument("graph does not satisfy the quadrilateral property");
  }
  ColorPermutations perms = color_permutations(g);
  if (from < 1 || from > g.vertex_count()) {
    throw std::invalid_argument("walk start out of range");
  }
  BitVector word = BitVector::zero(g.color_count());
  int v = from;
  for (int color : walk) {
    if (color < 1 || color > g.color_count()) {
      throw std::invalid_argument("walk uses color " + std::to_string(color) +
                                  " outside 1.." + std::to_string(g.color_count()));
    }
    v = perms.apply(color, v);
    word = word ^ BitVector::unit(g.color_count(), color);
  }
  // The reduced word, followed in ascending color order, must land on the
  // same endpoint.
  int check = from;
  for (int color = 1; color <= g.color_count(); ++color) {
    if (word.bit(color)) check = perms.apply(color, check);
  }
  if (check != v) {
    throw std::logic_error("walk reduction changed the endpoint");
  }
  return word;
}

namespace {

LinearCode extract_code_from(const ColoredGraph& g, const ColorPermutations& perms,
                             int base) {
  int n = g.vertex_count();
  int colors = g.color_count();
  std::vector<std::optional<BitVector>> label(static_cast<std::size_t>(n + 1));
  label[static_cast<std::size_t>(base)] = BitVector::zero(colors);
  std::queue<int> q;
  q.push(base);
  std::vector<BitVector> words;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    for (int t = 1; t <= colors; ++t) {
      int w = perms.apply(t, v);
      BitVector step = *label[static_cast<std::size_t>(v)] ^ BitVector::unit(colors, t);
      if (!label[static_cast<std::size_t>(w)]) {
        label[static_cast<std::size_t>(w)] = step;  // tree edge
        q.push(w);
      } else {
        words.push_back(step ^ *label[static_cast<std::size_t>(w)]);
      }
    }
  }
  for (int v = 1; v <= n; ++v) {
    if (!label[static_cast<std::size_t>(v)]) {
      throw std::invalid_argument("graph is not connected");
    }
  }
  return LinearCode::from_span(colors, words);
}

}  // namespace

LinearCode extract_code(const ColoredGraph& g, int base, unsigned seed) {
  if (!is_quadrilateral(g)) {
    throw std::invalid_argument("graph does not satisfy the quadrilateral property");
  }
  ColorPermutations perms = color_permutations(g);
  LinearCode code = extract_code_from(g, perms, base);
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pick(1, g.vertex_count());
  for (int trial = 0; trial < 3; ++trial) {
    if (extract_code_from(g, perms, pick(rng)) != code) {
      throw std::logic_error("extracted code depends on the base point");
    }
  }
  return code;
}

}  // namespace adinkra

#include "adinkra/representations.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <queue>
#include <sstream>
#include <stdexcept>

#include "adinkra/heights.hpp"

namespace adinkra {

namespace {

std::vector<int> column_lookup(const LatinAdjacencyList& latin) {
  // label -> column index
  int max_label = 0;
  for (int label : latin.column_labels) max_label = std::max(max_label, label);
  std::vector<int> col(static_cast<std::size_t>(max_label + 1), -1);
  for (std::size_t c = 0; c < latin.column_labels.size(); ++c) {
    int label = latin.column_labels[c];
    if (label < 1 || col[static_cast<std::size_t>(label)] != -1) {
      throw std::invalid_argument("malformed rectangle: bad column labels");
    }
    col[static_cast<std::size_t>(label)] = static_cast<int>(c);
  }
  return col;
}

void check_shape(const LatinAdjacencyList& latin, const std::vector<int>& col) {
  std::size_t n = latin.column_labels.size();
  if (n == 0 || latin.rows.empty()) {
    throw std::invalid_argument("malformed rectangle: empty");
  }
  for (const auto& row : latin.rows) {
    if (row.size() != n) {
      throw std::invalid_argument("malformed rectangle: ragged row");
    }
    std::vector<char> seen(n, 0);
    for (int entry : row) {
      int magnitude = entry < 0 ? -entry : entry;
      if (magnitude == 0 || magnitude >= static_cast<int>(col.size()) ||
          col[static_cast<std::size_t>(magnitude)] == -1) {
        throw std::invalid_argument("malformed rectangle: entry " +
                                    std::to_string(entry) + " is not a column label");
      }
      int c = col[static_cast<std::size_t>(magnitude)];
      if (seen[static_cast<std::size_t>(c)]) {
        throw std::invalid_argument("malformed rectangle: row repeats " +
                                    std::to_string(magnitude));
      }
      seen[static_cast<std::size_t>(c)] = 1;
    }
  }
}

}  // namespace

LatinAdjacencyList to_latin(const ColoredGraph& g) {
  ColorPermutations perms = color_permutations(g);
  LatinAdjacencyList latin;
  latin.colors = g.color_count();
  latin.parity = g.parities();
  latin.heights = g.heights();

  if (g.has_heights()) {
    HeightAssignment h = heights_of(g);
    latin.column_labels = lexicographic_order(g, h);
    latin.block_sizes = h.rank_sequence;
  } else {
    for (int v = 1; v <= g.vertex_count(); ++v) latin.column_labels.push_back(v);
    latin.block_sizes = {g.vertex_count()};
    if (auto parts = bipartition(g)) {
      // Use the bipartition as blocks when it splits the id order in two.
      std::vector<char> in_part1(static_cast<std::size_t>(g.vertex_count() + 1), 0);
      for (int v : parts->part1) in_part1[static_cast<std::size_t>(v)] = 1;
      int boundary = static_cast<int>(parts->part1.size());
      bool contiguous = true;
      for (int v = 1; v <= g.vertex_count(); ++v) {
        if (in_part1[static_cast<std::size_t>(v)] != (v <= boundary ? 1 : 0)) {
          contiguous = false;
          break;
        }
      }
      if (contiguous && boundary > 0 && boundary < g.vertex_count()) {
        latin.block_sizes = {boundary, g.vertex_count() - boundary};
      }
    }
  }

  for (int t = 1; t <= g.color_count(); ++t) {
    std::vector<int> row;
    row.reserve(latin.column_labels.size());
    for (int v : latin.column_labels) {
      int w = perms.apply(t, v);
      const Edge& e = g.edges()[static_cast<std::size_t>(g.find_edge(v, w))];
      row.push_back(e.sign < 0 ? -w : w);
    }
    latin.rows.push_back(std::move(row));
  }
  return latin;
}

LatinProperties latin_properties(const LatinAdjacencyList& latin) {
  std::vector<int> col = column_lookup(latin);
  check_shape(latin, col);
  int n = static_cast<int>(latin.column_labels.size());

  LatinProperties props;

  props.adjacency_ok = true;
  for (const auto& row : latin.rows) {
    for (int c = 0; c < n && props.adjacency_ok; ++c) {
      int entry = row[static_cast<std::size_t>(c)];
      int w = entry < 0 ? -entry : entry;
      int cw = col[static_cast<std::size_t>(w)];
      int back = row[static_cast<std::size_t>(cw)];
      if (back != (entry < 0 ? -latin.column_labels[static_cast<std::size_t>(c)]
                             : latin.column_labels[static_cast<std::size_t>(c)])) {
        props.adjacency_ok = false;
      }
    }
  }

  // Connectivity and bipartiteness by BFS over column adjacency.
  std::vector<std::vector<int>> adjacent(static_cast<std::size_t>(n));
  for (const auto& row : latin.rows) {
    for (int c = 0; c < n; ++c) {
      int w = row[static_cast<std::size_t>(c)];
      int cw = col[static_cast<std::size_t>(w < 0 ? -w : w)];
      adjacent[static_cast<std::size_t>(c)].push_back(cw);
    }
  }
  std::vector<int> side(static_cast<std::size_t>(n), -1);
  bool odd_cycle = false;
  int reached = 0;
  int components = 0;
  for (int start = 0; start < n; ++start) {
    if (side[static_cast<std::size_t>(start)] != -1) continue;
    ++components;
    side[static_cast<std::size_t>(start)] = 0;
    std::queue<int> q;
    q.push(start);
    ++reached;
    while (!q.empty()) {
      int c = q.front();
      q.pop();
      for (int d : adjacent[static_cast<std::size_t>(c)]) {
        if (side[static_cast<std::size_t>(d)] == -1) {
          side[static_cast<std::size_t>(d)] = 1 - side[static_cast<std::size_t>(c)];
          q.push(d);
          ++reached;
        } else if (side[static_cast<std::size_t>(d)] == side[static_cast<std::size_t>(c)]) {
          odd_cycle = true;
        }
      }
    }
  }
  props.connected = components == 1 && reached == n;
  if (!odd_cycle) {
    std::pair<std::vector<int>, std::vector<int>> blocks;
    for (int c = 0; c < n; ++c) {
      (side[static_cast<std::size_t>(c)] == 0 ? blocks.first : blocks.second)
          .push_back(latin.column_labels[static_cast<std::size_t>(c)]);
    }
    std::sort(blocks.first.begin(), blocks.first.end());
    std::sort(blocks.second.begin(), blocks.second.end());
    props.bipartite_blocks = std::move(blocks);
  }

  // Quadrilateral: for every pair of rows and every column, the two entries
  // recur inverted in the column where the first row shows the second entry.
  props.quadrilateral = true;
  for (std::size_t r1 = 0; r1 + 1 < latin.rows.size() && props.quadrilateral; ++r1) {
    for (std::size_t r2 = r1 + 1; r2 < latin.rows.size() && props.quadrilateral; ++r2) {
      for (int c = 0; c < n; ++c) {
        int a = latin.rows[r1][static_cast<std::size_t>(c)];
        int b = latin.rows[r2][static_cast<std::size_t>(c)];
        int a_mag = a < 0 ? -a : a;
        int b_mag = b < 0 ? -b : b;
        // Column t where row r1 holds b.
        int t = -1;
        for (int d = 0; d < n; ++d) {
          int e = latin.rows[r1][static_cast<std::size_t>(d)];
          if ((e < 0 ? -e : e) == b_mag) {
            t = d;
            break;
          }
        }
        int back = latin.rows[r2][static_cast<std::size_t>(t)];
        if ((back < 0 ? -back : back) != a_mag) {
          props.quadrilateral = false;
          break;
        }
      }
    }
  }
  return props;
}

ColoredGraph from_latin(const LatinAdjacencyList& latin) {
  std::vector<int> col = column_lookup(latin);
  check_shape(latin, col);
  int n = static_cast<int>(latin.column_labels.size());
  int colors = static_cast<int>(latin.rows.size());

  int max_label = 0;
  for (int label : latin.column_labels) max_label = std::max(max_label, label);
  if (max_label != n) {
    throw std::invalid_argument("column labels must be the vertices 1..n");
  }

  for (std::size_t r = 0; r < latin.rows.size(); ++r) {
    for (int c = 0; c < n; ++c) {
      int entry = latin.rows[r][static_cast<std::size_t>(c)];
      int w = entry < 0 ? -entry : entry;
      int cw = col[static_cast<std::size_t>(w)];
      int v = latin.column_labels[static_cast<std::size_t>(c)];
      int back = latin.rows[r][static_cast<std::size_t>(cw)];
      if (back != (entry < 0 ? -v : v)) {
        throw std::invalid_argument(
            "adjacency list property fails at row " + std::to_string(r + 1) +
            ", column for vertex " + std::to_string(w) + ": expected " +
            std::to_string(entry < 0 ? -v : v) + ", found " + std::to_string(back));
      }
    }
  }

  GraphBuilder builder(n, colors);
  if (!latin.parity.empty()) builder.set_parity(latin.parity);
  if (!latin.heights.empty()) builder.set_heights(latin.heights);
  for (std::size_t r = 0; r < latin.rows.size(); ++r) {
    for (int c = 0; c < n; ++c) {
      int v = latin.column_labels[static_cast<std::size_t>(c)];
      int entry = latin.rows[r][static_cast<std::size_t>(c)];
      int w = entry < 0 ? -entry : entry;
      if (v < w) {
        builder.add_edge(v, w, static_cast<int>(r + 1), entry < 0 ? -1 : +1);
      }
    }
  }
  return builder.build();
}

namespace {

std::string pad_left(const std::string& s, std::size_t width) {
  return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
}

std::string pad_right(const std::string& s, std::size_t width) {
  return s + std::string(width > s.size() ? width - s.size() : 0, ' ');
}

std::vector<int> block_starts(const std::vector<int>& sizes) {
  std::vector<int> starts;
  int at = 0;
  for (int size : sizes) {
    starts.push_back(at);
    at += size;
  }
  return starts;
}

}  // namespace

std::string render_latin(const LatinAdjacencyList& latin) {
  int n = static_cast<int>(latin.column_labels.size());
  std::size_t cell = 1;
  for (int label : latin.column_labels) {
    cell = std::max(cell, std::to_string(label).size());
  }
  for (const auto& row : latin.rows) {
    for (int entry : row) cell = std::max(cell, std::to_string(entry).size());
  }
  std::size_t name_width = std::max<std::size_t>(
      1, 1 + std::to_string(latin.rows.size()).size());

  std::vector<int> starts = block_starts(latin.block_sizes);
  auto emit_row = [&](const std::string& name, const std::vector<int>& cells) {
    std::string line = pad_right(name, name_width);
    for (int c = 0; c < n; ++c) {
      if (std::find(starts.begin() + 1, starts.end(), c) != starts.end()) {
        line += " |";
      }
      line += ' ' + pad_left(std::to_string(cells[static_cast<std::size_t>(c)]), cell);
    }
    return line + '\n';
  };

  std::string out = emit_row("V", latin.column_labels);
  for (std::size_t r = 0; r < latin.rows.size(); ++r) {
    out += emit_row("c" + std::to_string(r + 1), latin.rows[r]);
  }
  return out;
}

std::string render_latin_csv(const LatinAdjacencyList& latin) {
  std::ostringstream out;
  out << "V";
  for (int label : latin.column_labels) out << ',' << label;
  out << '\n';
  for (std::size_t r = 0; r < latin.rows.size(); ++r) {
    out << 'c' << r + 1;
    for (int entry : latin.rows[r]) out << ',' << entry;
    out << '\n';
  }
  return out.str();
}

SemiMagicMatrix to_matrix(const ColoredGraph& g) {
  if (!validate_regular_coloring(g).empty()) {
    throw std::invalid_argument("coloring is not regular");
  }
  SemiMagicMatrix matrix;
  matrix.n = g.vertex_count();
  matrix.colors = g.color_count();
  matrix.line_sum = g.color_count() * (g.color_count() + 1) / 2;
  if (g.has_heights()) {
    HeightAssignment h = heights_of(g);
    matrix.vertex_order = lexicographic_order(g, h);
    matrix.block_sizes = h.rank_sequence;
  } else {
    for (int v = 1; v <= g.vertex_count(); ++v) matrix.vertex_order.push_back(v);
  }
  std::vector<int> position(static_cast<std::size_t>(matrix.n + 1), 0);
  for (int p = 0; p < matrix.n; ++p) {
    position[static_cast<std::size_t>(matrix.vertex_order[static_cast<std::size_t>(p)])] = p;
  }
  matrix.entry.assign(static_cast<std::size_t>(matrix.n),
                      std::vector<int>(static_cast<std::size_t>(matrix.n), 0));
  for (const Edge& e : g.edges()) {
    int pu = position[static_cast<std::size_t>(e.u)];
    int pv = position[static_cast<std::size_t>(e.v)];
    int value = e.sign < 0 ? -e.color : e.color;
    matrix.entry[static_cast<std::size_t>(pu)][static_cast<std::size_t>(pv)] = value;
    matrix.entry[static_cast<std::size_t>(pv)][static_cast<std::size_t>(pu)] = value;
  }
  for (int p = 0; p < matrix.n; ++p) {
    int row_sum = 0;
    int col_sum = 0;
    for (int q = 0; q < matrix.n; ++q) {
      row_sum += std::abs(matrix.entry[static_cast<std::size_t>(p)][static_cast<std::size_t>(q)]);
      col_sum += std::abs(matrix.entry[static_cast<std::size_t>(q)][static_cast<std::size_t>(p)]);
    }
    if (row_sum != matrix.line_sum || col_sum != matrix.line_sum) {
      throw std::logic_error("semi-magic line sums failed verification");
    }
  }
  return matrix;
}

std::string render_matrix(const SemiMagicMatrix& matrix) {
  std::size_t cell = 1;
  for (const auto& row : matrix.entry) {
    for (int value : row) cell = std::max(cell, std::to_string(value).size());
  }
  std::vector<int> starts = block_starts(matrix.block_sizes);
  std::vector<std::string> lines;
  std::size_t line_width = 0;
  for (int p = 0; p < matrix.n; ++p) {
    std::string line;
    for (int q = 0; q < matrix.n; ++q) {
      if (std::find(starts.begin() + 1, starts.end(), q) != starts.end()) {
        line += " |";
      }
      if (q > 0) line += ' ';
      line += pad_left(std::to_string(matrix.entry[static_cast<std::size_t>(p)]
                                                  [static_cast<std::size_t>(q)]),
                       cell);
    }
    line_width = std::max(line_width, line.size());
    lines.push_back(std::move(line));
  }
  std::string out;
  for (int p = 0; p < matrix.n; ++p) {
    if (p > 0 && std::find(starts.begin() + 1, starts.end(), p) != starts.end()) {
      out += std::string(line_width, '-') + '\n';
    }
    out += lines[static_cast<std::size_t>(p)] + '\n';
  }
  return out;
}

std::string render_matrix_csv(const SemiMagicMatrix& matrix) {
  std::ostringstream out;
  for (const auto& row : matrix.entry) {
    for (std::size_t q = 0; q < row.size(); ++q) {
      if (q > 0) out << ',';
      out << row[q];
    }
    out << '\n';
  }
  return out.str();
}

std::string export_dot(const ColoredGraph& g) {
  static const char* palette[] = {"black", "blue",    "red",    "green",
                                  "orange", "purple", "brown",  "cyan",
                                  "magenta", "gold",  "pink",   "teal",
                                  "navy",   "olive",  "maroon", "coral"};
  constexpr int palette_size = static_cast<int>(sizeof(palette) / sizeof(palette[0]));

  std::ostringstream out;
  out << "graph adinkra {\n";
  out << "  rankdir=BT;\n";
  out << "  node [shape=circle];\n";
  for (int v = 1; v <= g.vertex_count(); ++v) {
    out << "  n" << v << " [label=\"" << g.label(v) << '"';
    if (g.has_parity() && g.parity(v) == Parity::fermion) {
      out << ", style=filled, fillcolor=black, fontcolor=white";
    }
    out << "];\n";
  }
  if (g.has_heights()) {
    std::map<int, std::vector<int>> levels;
    for (int v = 1; v <= g.vertex_count(); ++v) levels[g.height(v)].push_back(v);
    for (const auto& [level, members] : levels) {
      out << "  { rank=same;";
      for (int v : members) out << " n" << v << ';';
      out << " }\n";
    }
  }
  for (const Edge& e : g.edges()) {
    out << "  n" << e.u << " -- n" << e.v << " [color="
        << (e.color <= palette_size ? palette[e.color - 1] : "gray");
    if (e.sign < 0) out << ", style=dashed";
    out << "];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace adinkra

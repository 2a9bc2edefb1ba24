#include "adinkra/agf.hpp"

#include <istream>
#include <optional>
#include <sstream>
#include <vector>

namespace adinkra {

namespace {

[[noreturn]] void fail(int line_no, const std::string& message) {
  throw AgfError("line " + std::to_string(line_no) + ": " + message);
}

}  // namespace

ColoredGraph parse_agf(std::istream& in) {
  std::optional<int> n;
  std::optional<int> colors;
  std::optional<std::vector<Parity>> parity;
  std::vector<std::pair<int, int>> height_lines;
  struct RawEdge {
    int u, v, color, sign;
  };
  std::vector<RawEdge> raw_edges;

  std::string line;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream tokens(line);
    std::string key;
    if (!(tokens >> key)) continue;

    if (key == "n") {
      if (n) fail(line_no, "duplicate n line");
      int value;
      if (!(tokens >> value) || value < 1) fail(line_no, "n expects a positive count");
      n = value;
    } else if (key == "colors") {
      if (colors) fail(line_no, "duplicate colors line");
      int value;
      if (!(tokens >> value) || value < 1) fail(line_no, "colors expects a positive count");
      colors = value;
    } else if (key == "parity") {
      if (!n) fail(line_no, "parity before n");
      if (parity) fail(line_no, "duplicate parity line");
      std::string text;
      if (!(tokens >> text)) fail(line_no, "parity expects a b/f string");
      if (static_cast<int>(text.size()) != *n) {
        fail(line_no, "parity string must have length n");
      }
      std::vector<Parity> p;
      for (char c : text) {
        if (c == 'b') {
          p.push_back(Parity::boson);
        } else if (c == 'f') {
          p.push_back(Parity::fermion);
        } else {
          fail(line_no, "parity characters must be 'b' or 'f'");
        }
      }
      parity = std::move(p);
    } else if (key == "height") {
      if (!n) fail(line_no, "height before n");
      int v, h;
      if (!(tokens >> v >> h)) fail(line_no, "height expects vertex and level");
      if (v < 1 || v > *n) fail(line_no, "height vertex out of range");
      height_lines.emplace_back(v, h);
    } else if (key == "e") {
      if (!n || !colors) fail(line_no, "edge before n/colors");
      int u, v, color;
      if (!(tokens >> u >> v >> color)) fail(line_no, "edge expects u v color");
      int sign = +1;
      std::string suffix;
      if (tokens >> suffix) {
        if (suffix == "+") {
          sign = +1;
        } else if (suffix == "-") {
          sign = -1;
        } else {
          fail(line_no, "edge sign must be '+' or '-'");
        }
      }
      if (u == v) fail(line_no, "loop edge at vertex " + std::to_string(u));
      if (u < 1 || u > *n || v < 1 || v > *n) fail(line_no, "edge vertex out of range");
      if (color < 1 || color > *colors) fail(line_no, "edge color out of range");
      raw_edges.push_back(RawEdge{u, v, color, sign});
    } else {
      fail(line_no, "unknown directive '" + key + "'");
    }
    std::string extra;
    if (tokens >> extra) fail(line_no, "trailing tokens after directive");
  }

  if (!n) throw AgfError("missing n line");
  if (!colors) throw AgfError("missing colors line");

  GraphBuilder builder(*n, *colors);
  if (parity) builder.set_parity(std::move(*parity));
  if (!height_lines.empty()) {
    std::vector<int> heights(static_cast<std::size_t>(*n), 0);
    std::vector<char> given(static_cast<std::size_t>(*n), 0);
    for (auto [v, h] : height_lines) {
      if (given[static_cast<std::size_t>(v - 1)]) {
        throw AgfError("duplicate height line for vertex " + std::to_string(v));
      }
      given[static_cast<std::size_t>(v - 1)] = 1;
      heights[static_cast<std::size_t>(v - 1)] = h;
    }
    for (int v = 1; v <= *n; ++v) {
      if (!given[static_cast<std::size_t>(v - 1)]) {
        throw AgfError("missing height line for vertex " + std::to_string(v));
      }
    }
    builder.set_heights(std::move(heights));
  }
  for (const auto& e : raw_edges) {
    builder.add_edge(e.u, e.v, e.color, e.sign);
  }
  try {
    return builder.build();
  } catch (const std::invalid_argument& err) {
    throw AgfError(err.what());
  }
}

ColoredGraph parse_agf(const std::string& text) {
  std::istringstream in(text);
  return parse_agf(in);
}

std::string serialize_agf(const ColoredGraph& g) {
  std::ostringstream out;
  out << "n " << g.vertex_count() << '\n';
  out << "colors " << g.color_count() << '\n';
  if (g.has_parity()) {
    out << "parity ";
    for (int v = 1; v <= g.vertex_count(); ++v) {
      out << (g.parity(v) == Parity::boson ? 'b' : 'f');
    }
    out << '\n';
  }
  if (g.has_heights()) {
    for (int v = 1; v <= g.vertex_count(); ++v) {
      out << "height " << v << ' ' << g.height(v) << '\n';
    }
  }
  for (const Edge& e : g.edges()) {
    out << "e " << e.u << ' ' << e.v << ' ' << e.color;
    if (e.sign < 0) out << " -";
    out << '\n';
  }
  return out.str();
}

}  // namespace adinkra

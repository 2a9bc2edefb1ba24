#pragma once

#include <iosfwd>
#include <stdexcept>
#include <string>

#include "adinkra/graph.hpp"

namespace adinkra {

// Adinkra Graph Format, line oriented:
//   n <count>
//   colors <N>
//   parity <b|f>{n}          (optional)
//   height <v> <h>           (optional, one per vertex)
//   e <u> <v> <color> [+|-]
// '#' starts a comment.  serialize_agf emits the canonical form: header,
// parity, heights for vertices 1..n, then edges sorted by (color, u, v)
// with the sign suffix only on dashed edges.
class AgfError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

ColoredGraph parse_agf(std::istream& in);
ColoredGraph parse_agf(const std::string& text);
std::string serialize_agf(const ColoredGraph& g);

}  // namespace adinkra

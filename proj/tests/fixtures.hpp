#pragma once

#include "adinkra/graph.hpp"

namespace adinkra::fixtures {

// K_4 with the rotational coloring: color 1 = {14, 23}, color 2 = {13, 24},
// color 3 = {12, 34}.
ColoredGraph k4();

// The cube on vertices 1..8 with the non-parallel 3-coloring whose bicolor
// cycles are two 4-cycles plus two Hamiltonian 8-cycles (colors 1, 2
// commute; pairs with color 3 do not).
ColoredGraph q3_twisted();

// K_{4,4} on v1..v4 = 1..4, w1..w4 = 5..8 with color(v_i, w_j) =
// ((i + j - 2) mod 4) + 1.
ColoredGraph k44_additive();

// 2m-cycle with two alternating colors; edge {1,2} has color 1.
ColoredGraph bicolor_cycle(int m);

// N=4 Adinkra on 8 vertices: bosons 1, 2, 7, 8, fermions 3..6, dashed per
// its printed adjacency list.  Three height gradings of the same signed
// graph: rank sequences (2,4,2), (3,4,1) with vertex 7 dropped to the
// bottom, and the (4,4) valise.
ColoredGraph adinkra_242();
ColoredGraph adinkra_341();
ColoredGraph adinkra_44();

}  // namespace adinkra::fixtures

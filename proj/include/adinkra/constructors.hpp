#pragma once

#include "adinkra/gf2.hpp"
#include "adinkra/graph.hpp"

namespace adinkra {

// Hypercube Q_N with the parallel edge coloring: vertices are bitstrings of
// length N (id = value + 1), edge {v, v+e_i} has color i, parity by weight
// mod 2 (even = boson).  1 <= N <= 16.
ColoredGraph build_hypercube(int n_colors);

// Quotient Q_C.  Vertices are cosets labeled by their lexicographically
// smallest member, in increasing order.  Rejects codes with a weight-1
// codeword (loop) or weight-2 codeword (multi-edge).  Parity is attached
// iff the code is even.  Requires 2^(N-k) <= 2^16.
ColoredGraph build_quotient(int n_colors, const LinearCode& code);

// Folded cube F_N = Q_N / {0...0, 1...1}.  N >= 3.
ColoredGraph build_folded_cube(int n_colors);

// K_{2m} with the rotational 1-factorization: vertices 1..2m-1 on a regular
// (2m-1)-gon (vertex p+1 at polygon position p) and vertex 2m at the
// center.  Color t = 1..2m-1 holds the radial edge {2m, t} plus the chords
// {a+1, b+1} with a + b = 2(t-1) mod (2m-1).  m >= 2.
ColoredGraph build_complete_even(int m);

// K_{n,n} with v_i = i, w_j = n+j and edge v_i w_j colored
// ((j - i) mod n) + 1.
ColoredGraph build_complete_bipartite(int n);

}  // namespace adinkra

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "adinkra/gf2.hpp"
#include "adinkra/graph.hpp"

namespace adinkra {

struct BicolorPair {
  int color_i = 0;
  int color_j = 0;
  std::vector<int> cycle_lengths;  // vertex counts, ascending; all even
  long long m = 0;                 // lcm of the half-lengths
};

struct BicolorReport {
  int vertex_count = 0;
  std::vector<BicolorPair> pairs;  // lexicographic (i, j), i < j

  const BicolorPair& pair(int i, int j) const;
};

BicolorReport bicolor_report(const ColoredGraph& g);

// Every bicolor cycle is a 4-cycle, i.e. every m_ij = 2.
bool is_quadrilateral(const ColoredGraph& g);

// Every bicolor subgraph is a single Hamiltonian cycle.
bool is_perfect_1factorization(const ColoredGraph& g);

struct ExchangeGroupSummary {
  std::optional<std::uint64_t> order;  // absent when the cap was exceeded
  bool abelian = false;
  bool elementary_abelian_2 = false;
  std::uint64_t max_element_order = 0;  // 0 when the closure was cut short
  bool dihedral_like = false;  // order 2m with an element of order m
  std::uint64_t cap = 0;
};

// Closure of {s_t} under composition, breadth first, halting at `cap`
// elements.  Abelian/elementary flags are decided on the generators and so
// remain valid even when the cap is hit.
ExchangeGroupSummary exchange_group(const ColoredGraph& g,
                                    std::uint64_t cap = 1000000);

// Reduces a color walk modulo the quadrilateral property: the parity of
// each color, as a length-N bitstring.  Also follows the walk and checks
// that the reduced word reaches the same endpoint.
BitVector reduce_walk(const ColoredGraph& g, const std::vector<int>& walk,
                      int from);

// Code of a connected quadrilateral graph: BFS tree labels from `base`,
// one codeword per non-tree edge, RREF of the collection.  The result is
// recomputed from random other base points (seeded) and must agree.
LinearCode extract_code(const ColoredGraph& g, int base = 1, unsigned seed = 0);

}  // namespace adinkra

#include <doctest.h>

#include <algorithm>
#include <stdexcept>
#include <string>
#include <tuple>

#include <map>
#include <random>
#include <set>

#include "adinkra/constructors.hpp"
#include "adinkra/structure.hpp"
#include "fixtures.hpp"

using namespace adinkra;

TEST_CASE("hypercube counts and labels") {
  ColoredGraph q1 = build_hypercube(1);
  CHECK(q1.vertex_count() == 2);
  CHECK(q1.edges().size() == 1);

  ColoredGraph q3 = build_hypercube(3);
  CHECK(q3.vertex_count() == 8);
  CHECK(q3.edges().size() == 12);
  CHECK(q3.label(1) == "000");
  CHECK(q3.label(8) == "111");
  CHECK(q3.parity(1) == Parity::boson);
  CHECK(q3.parity(2) == Parity::fermion);

  ColoredGraph q4 = build_hypercube(4);
  CHECK(q4.vertex_count() == 16);
  CHECK(q4.edges().size() == 32);
  CHECK(validate_regular_coloring(q4).empty());

  CHECK_THROWS_AS(build_hypercube(0), std::invalid_argument);
  CHECK_THROWS_AS(build_hypercube(17), std::invalid_argument);
}

TEST_CASE("hypercube edges join vertices at Hamming distance one") {
  ColoredGraph q4 = build_hypercube(4);
  for (const Edge& e : q4.edges()) {
    BitVector u = BitVector::parse(q4.label(e.u));
    BitVector v = BitVector::parse(q4.label(e.v));
    CHECK((u ^ v) == BitVector::unit(4, e.color));
  }
}

TEST_CASE("quotient by the zero code is the hypercube") {
  CHECK(build_quotient(3, LinearCode(3)) == build_hypercube(3));
}

TEST_CASE("quotient counts") {
  // N=5, C = {00000, 11110}: 16 vertices, 40 edges.
  LinearCode c = LinearCode::from_span(5, {BitVector::parse("11110")});
  ColoredGraph g = build_quotient(5, c);
  CHECK(g.vertex_count() == 16);
  CHECK(g.edges().size() == 40);
  CHECK(g.has_parity());
  CHECK(validate_regular_coloring(g).empty());

  ColoredGraph d6q = build_quotient(6, LinearCode::d2n_family(3));
  CHECK(d6q.vertex_count() == 16);
  CHECK(d6q.edges().size() == 48);
  CHECK(bipartition(d6q).has_value());
  CHECK(is_quadrilateral(d6q));
}

TEST_CASE("quotient rejects short codewords") {
  auto message_of = [](int n, const LinearCode& code) {
    try {
      build_quotient(n, code);
    } catch (const std::invalid_argument& err) {
      return std::string(err.what());
    }
    return std::string();
  };
  LinearCode weight1 = LinearCode::from_span(3, {BitVector::parse("010")});
  CHECK(message_of(3, weight1).find("weight-1 codeword 010") != std::string::npos);
  LinearCode weight2 = LinearCode::from_span(4, {BitVector::parse("0101")});
  CHECK(message_of(4, weight2).find("weight-2 codeword 0101") != std::string::npos);
  CHECK_THROWS_AS(build_quotient(4, LinearCode(3)), std::invalid_argument);
  // Quotient vertex count is capped at 2^16.
  CHECK_THROWS_AS(build_quotient(20, LinearCode(20)), std::invalid_argument);
}

TEST_CASE("quotient is independent of coset representatives") {
  // Recompute edges from random coset members; the rebuilt graph must match.
  LinearCode code = LinearCode::d2n_family(3);
  ColoredGraph g = build_quotient(6, code);
  std::mt19937 rng(3);
  std::vector<BitVector> words = code.codewords();
  std::map<std::uint64_t, int> id_of;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    id_of[BitVector::parse(g.label(v)).value()] = v;
  }
  std::set<std::tuple<int, int, int>> expected;
  for (const Edge& e : g.edges()) expected.insert({e.u, e.v, e.color});
  std::set<std::tuple<int, int, int>> rebuilt;
  for (int v = 1; v <= g.vertex_count(); ++v) {
    BitVector rep = BitVector::parse(g.label(v));
    BitVector member = rep ^ words[rng() % words.size()];
    for (int i = 1; i <= 6; ++i) {
      BitVector neighbor = code.reduce(member ^ BitVector::unit(6, i));
      int w = id_of.at(neighbor.value());
      rebuilt.insert({std::min(v, w), std::max(v, w), i});
    }
  }
  CHECK(rebuilt == expected);
}

TEST_CASE("folded cubes") {
  ColoredGraph f3 = build_folded_cube(3);
  CHECK(f3.vertex_count() == 4);
  CHECK(f3.edges().size() == 6);
  // F_3 is the tetrahedron: every pair adjacent.
  for (int u = 1; u <= 4; ++u) {
    for (int v = u + 1; v <= 4; ++v) CHECK(f3.find_edge(u, v) >= 0);
  }
  CHECK(!bipartition(f3).has_value());
  CHECK(!f3.has_parity());

  ColoredGraph f4 = build_folded_cube(4);
  CHECK(f4.vertex_count() == 8);
  CHECK(f4.edges().size() == 16);
  auto parts = bipartition(f4);
  REQUIRE(parts.has_value());
  CHECK(parts->part1.size() == 4);
  for (int u : parts->part1) {
    for (int v : parts->part2) CHECK(f4.find_edge(u, v) >= 0);
  }

  ColoredGraph f5 = build_folded_cube(5);
  CHECK(f5.vertex_count() == 16);
  CHECK(f5.edges().size() == 40);
  CHECK(!bipartition(f5).has_value());

  CHECK_THROWS_AS(build_folded_cube(2), std::invalid_argument);
}

TEST_CASE("complete graph coloring matches the rotational rule") {
  ColoredGraph k4 = build_complete_even(2);
  CHECK(k4 == fixtures::k4());

  ColoredGraph k6 = build_complete_even(3);
  CHECK(k6.vertex_count() == 6);
  CHECK(k6.color_count() == 5);
  CHECK(validate_regular_coloring(k6).empty());
  for (const auto& matching : perfect_matchings_of(k6)) {
    CHECK(matching.size() == 3);
  }

  for (int m = 2; m <= 5; ++m) {
    ColoredGraph g = build_complete_even(m);
    CHECK(g.color_count() == 2 * m - 1);
    CHECK(validate_regular_coloring(g).empty());
  }
  CHECK_THROWS_AS(build_complete_even(1), std::invalid_argument);
}

TEST_CASE("complete bipartite coloring") {
  ColoredGraph k11 = build_complete_bipartite(1);
  CHECK(k11.vertex_count() == 2);
  CHECK(k11.edges().size() == 1);

  ColoredGraph square = build_complete_bipartite(2);
  CHECK(square.vertex_count() == 4);
  CHECK(square.color_count() == 2);
  CHECK(validate_regular_coloring(square).empty());

  ColoredGraph k44 = build_complete_bipartite(4);
  CHECK(validate_regular_coloring(k44).empty());
  CHECK(k44.edges().size() == 16);

  // Same coloring as the additive K_{4,4} fixture after sending w_j to
  // w_{(2-j) mod 4} and color t to ((1-t) mod 4) + 1.
  ColoredGraph additive = fixtures::k44_additive();
  std::set<std::tuple<int, int, int>> relabeled;
  for (const Edge& e : additive.edges()) {
    int i = e.u;          // v_i
    int j = e.v - 4;      // w_j
    int jj = ((2 - j) % 4 + 4) % 4;
    if (jj == 0) jj = 4;
    int t = ((1 - e.color) % 4 + 4) % 4 + 1;
    relabeled.insert({i, 4 + jj, t});
  }
  std::set<std::tuple<int, int, int>> ours;
  for (const Edge& e : k44.edges()) ours.insert({e.u, e.v, e.color});
  CHECK(relabeled == ours);
}

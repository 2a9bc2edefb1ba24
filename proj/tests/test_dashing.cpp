#include <doctest.h>

#include <stdexcept>

#include <algorithm>
#include <random>
#include <set>
#include <string>
#include <utility>

#include "adinkra/agf.hpp"
#include "adinkra/constructors.hpp"
#include "adinkra/dashing.hpp"
#include "adinkra/structure.hpp"
#include "fixtures.hpp"

using namespace adinkra;

namespace {

// Independent oracle: count totally odd sign assignments by walking all
// 2^E possibilities.
std::uint64_t brute_force_dashings(const ColoredGraph& g) {
  std::size_t e = g.edges().size();
  REQUIRE(e <= 20);
  std::uint64_t valid = 0;
  for (std::uint64_t mask = 0; mask < (1ull << e); ++mask) {
    std::vector<int> signs(e, +1);
    for (std::size_t i = 0; i < e; ++i) {
      if ((mask >> i) & 1u) signs[i] = -1;
    }
    if (validate_totally_odd(apply_dashing(g, signs)).empty()) ++valid;
  }
  return valid;
}

}  // namespace

TEST_CASE("bicolor squares of the cube") {
  ColoredGraph q3 = build_hypercube(3);
  std::vector<BicolorSquare> squares = bicolor_squares(q3);
  CHECK(squares.size() == 6);  // 3 pairs, 8/4 squares each
  for (const BicolorSquare& sq : squares) {
    // Four distinct vertices, alternating colors around the cycle.
    const auto& e = q3.edges();
    CHECK(e[static_cast<std::size_t>(sq.edge_indices[0])].color == sq.color_i);
    CHECK(e[static_cast<std::size_t>(sq.edge_indices[1])].color == sq.color_j);
    CHECK(e[static_cast<std::size_t>(sq.edge_indices[2])].color == sq.color_i);
    CHECK(e[static_cast<std::size_t>(sq.edge_indices[3])].color == sq.color_j);
  }
  CHECK_THROWS_AS(bicolor_squares(fixtures::q3_twisted()), std::invalid_argument);
}

TEST_CASE("validate_totally_odd") {
  CHECK(validate_totally_odd(canonical_dashing_hypercube(3)).empty());
  CHECK(validate_totally_odd(fixtures::adinkra_242()).empty());

  ColoredGraph q2 = build_hypercube(2);
  std::vector<BicolorSquare> violations = validate_totally_odd(q2);
  CHECK(violations.size() == 1);  // the all-plus square has zero dashes
}

TEST_CASE("canonical hypercube dashing") {
  // N=2: only the edge from e_1 to e_1e_2 is dashed.
  ColoredGraph q2 = canonical_dashing_hypercube(2);
  int dashed = 0;
  for (const Edge& e : q2.edges()) {
    if (e.sign < 0) {
      ++dashed;
      CHECK(q2.label(e.u) == "10");
      CHECK(q2.label(e.v) == "11");
    }
  }
  CHECK(dashed == 1);

  // N=3 reproduces the standard dashing of the cube: dashed edges
  // 100-101, 010-011 (color 3) and 100-110, 101-111 (color 2).
  ColoredGraph q3 = canonical_dashing_hypercube(3);
  std::set<std::pair<std::string, std::string>> dashes;
  for (const Edge& e : q3.edges()) {
    if (e.sign < 0) dashes.insert({q3.label(e.u), q3.label(e.v)});
  }
  CHECK(dashes == std::set<std::pair<std::string, std::string>>{
                      {"100", "101"}, {"010", "011"}, {"100", "110"}, {"101", "111"}});

  // N=1 has no squares, so no dashes are forced.
  CHECK(validate_totally_odd(canonical_dashing_hypercube(1)).empty());

  for (int n = 1; n <= 6; ++n) {
    CHECK(validate_totally_odd(canonical_dashing_hypercube(n)).empty());
  }
}

TEST_CASE("solve_dashings on the square matches brute force") {
  ColoredGraph q2 = build_hypercube(2);
  DashingSystem system = solve_dashings(q2);
  CHECK(system.consistent);
  CHECK(system.edge_count == 4);
  CHECK(system.rank == 1);
  CHECK(system.solution_count() == 8);
  CHECK(brute_force_dashings(q2) == 8);
  CHECK(validate_totally_odd(apply_dashing(q2, system.particular)).empty());
}

TEST_CASE("solve_dashings is inconsistent for F_6 and F_3") {
  CHECK(!solve_dashings(build_folded_cube(6)).consistent);
  CHECK(solve_dashings(build_folded_cube(6)).solution_count() == 0);
  // K_4 = F_3: three squares whose constraints sum to 0 = 1.
  CHECK(!solve_dashings(fixtures::k4()).consistent);
  CHECK(brute_force_dashings(fixtures::k4()) == 0);
}

TEST_CASE("solve_dashings is consistent for doubly even quotients") {
  ColoredGraph g = build_quotient(6, LinearCode::d2n_family(3));
  DashingSystem system = solve_dashings(g);
  CHECK(system.consistent);
  ColoredGraph dashed = apply_dashing(g, system.particular);
  CHECK(validate_totally_odd(dashed).empty());
}

TEST_CASE("existence matches the extracted code being doubly even (even codes)") {
  std::vector<LinearCode> codes = {
      LinearCode(2),
      LinearCode(4),
      LinearCode::from_span(5, {BitVector::parse("11110")}),
      LinearCode::d2n_family(3),
      LinearCode::from_span(6, {BitVector::parse("111111")}),
  };
  for (const LinearCode& code : codes) {
    ColoredGraph g = build_quotient(code.length(), code);
    CHECK(solve_dashings(g).consistent ==
          extract_code(g).classify().doubly_even);
  }
}

TEST_CASE("existence boundary on non-bipartite quotients is mod 4") {
  // weight 3 = 3 mod 4 obstructs: F_3 has no dashing.
  ColoredGraph f3 = build_quotient(3, LinearCode::from_span(3, {BitVector::parse("111")}));
  CHECK(!solve_dashings(f3).consistent);

  // weight 5 = 1 mod 4 does not: the canonical sign group descends to F_5
  // because e_1..e_5 is central and squares to +1.
  ColoredGraph f5 = build_folded_cube(5);
  DashingSystem system = solve_dashings(f5);
  CHECK(system.consistent);
  CHECK(validate_totally_odd(apply_dashing(f5, system.particular)).empty());
}

TEST_CASE("nullspace flips preserve validity and the count is exact") {
  for (const ColoredGraph& g : {build_hypercube(2), fixtures::k4()}) {
    DashingSystem system = solve_dashings(g);
    CHECK(brute_force_dashings(g) == system.solution_count());
    if (!system.consistent) continue;
    std::vector<int> signs = system.particular;
    for (const auto& flip : system.nullspace) {
      for (std::size_t e = 0; e < signs.size(); ++e) {
        if (flip[e]) signs[e] = -signs[e];
      }
      CHECK(validate_totally_odd(apply_dashing(g, signs)).empty());
    }
  }
}

TEST_CASE("enumerate_dashings lists every solution once") {
  ColoredGraph q2 = build_hypercube(2);
  DashingSystem system = solve_dashings(q2);
  std::vector<std::vector<int>> all = enumerate_dashings(system);
  CHECK(all.size() == 8);
  std::set<std::vector<int>> unique(all.begin(), all.end());
  CHECK(unique.size() == 8);
  for (const auto& signs : all) {
    CHECK(validate_totally_odd(apply_dashing(q2, signs)).empty());
  }
  CHECK_THROWS_AS(enumerate_dashings(system, 4), std::invalid_argument);
}

TEST_CASE("enumerate_dashings matches the brute-force solution set") {
  ColoredGraph q3 = build_hypercube(3);
  std::set<std::vector<int>> brute;
  for (std::uint64_t mask = 0; mask < (1ull << 12); ++mask) {
    std::vector<int> signs(12, +1);
    for (std::size_t i = 0; i < 12; ++i) {
      if ((mask >> i) & 1u) signs[i] = -1;
    }
    if (validate_totally_odd(apply_dashing(q3, signs)).empty()) {
      brute.insert(std::move(signs));
    }
  }
  std::vector<std::vector<int>> listed = enumerate_dashings(solve_dashings(q3));
  CHECK(brute == std::set<std::vector<int>>(listed.begin(), listed.end()));
  CHECK(brute.size() == 128);
}

TEST_CASE("flipping one edge breaks exactly the squares through it") {
  ColoredGraph q3 = canonical_dashing_hypercube(3);
  std::mt19937 rng(9);
  for (int trial = 0; trial < 5; ++trial) {
    std::size_t edge = rng() % q3.edges().size();
    std::vector<int> signs;
    for (const Edge& e : q3.edges()) signs.push_back(e.sign);
    signs[edge] = -signs[edge];
    std::vector<BicolorSquare> violations =
        validate_totally_odd(apply_dashing(q3, signs));
    CHECK(violations.size() == 2);  // each edge lies on N-1 squares
    for (const BicolorSquare& sq : violations) {
      CHECK(std::find(sq.edge_indices.begin(), sq.edge_indices.end(),
                      static_cast<int>(edge)) != sq.edge_indices.end());
    }
  }
}

TEST_CASE("signed permutations of a valid dashing anticommute") {
  // S_t sends (v, sign) to (s_t(v), sign * edge sign); a totally odd
  // dashing forces S_i S_j = -S_j S_i on every vertex, and S_t^2 = +id.
  for (const ColoredGraph& g :
       {canonical_dashing_hypercube(2), canonical_dashing_hypercube(3),
        canonical_dashing_hypercube(4)}) {
    ColorPermutations perms = color_permutations(g);
    auto signed_apply = [&](int color, std::pair<int, int> state) {
      int w = perms.apply(color, state.first);
      const Edge& e = g.edges()[static_cast<std::size_t>(g.find_edge(state.first, w))];
      return std::pair<int, int>{w, state.second * e.sign};
    };
    for (int v = 1; v <= g.vertex_count(); ++v) {
      for (int i = 1; i <= g.color_count(); ++i) {
        CHECK(signed_apply(i, signed_apply(i, {v, +1})) == std::pair{v, +1});
        for (int j = i + 1; j <= g.color_count(); ++j) {
          std::pair<int, int> ij = signed_apply(i, signed_apply(j, {v, +1}));
          std::pair<int, int> ji = signed_apply(j, signed_apply(i, {v, +1}));
          CHECK(ij.first == ji.first);
          CHECK(ij.second == -ji.second);
        }
      }
    }
  }
}

TEST_CASE("apply_dashing") {
  ColoredGraph q2 = build_hypercube(2);
  CHECK_THROWS_AS(apply_dashing(q2, {1, 1, 1}), std::invalid_argument);
  CHECK_THROWS_AS(apply_dashing(q2, {1, 1, 1, 2}), std::invalid_argument);
  std::vector<int> same;
  ColoredGraph dashed = canonical_dashing_hypercube(2);
  for (const Edge& e : dashed.edges()) same.push_back(e.sign);
  CHECK(apply_dashing(dashed, same) == dashed);
}

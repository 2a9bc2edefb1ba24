#pragma once

#include <cstdint>
#include <vector>

namespace adinkra::gf2 {

// Dense solver for A x = b over GF(2) with sparse input rows.  Width is the
// number of unknowns; each equation lists the indices of its nonzero
// coefficients.  Gauss-Jordan elimination, deterministic pivot choice
// (first usable column in index order).
struct Solution {
  bool consistent = false;
  int rank = 0;
  std::vector<std::uint8_t> particular;             // one value per unknown
  std::vector<std::vector<std::uint8_t>> nullspace; // basis of homogeneous solutions
};

Solution solve(int num_vars,
               const std::vector<std::vector<int>>& equations,
               const std::vector<int>& rhs);

}  // namespace adinkra::gf2

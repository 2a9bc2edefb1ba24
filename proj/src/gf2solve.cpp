#include "adinkra/gf2solve.hpp"

#include <stdexcept>

namespace adinkra::gf2 {

namespace {

// Packed bit row with one extra augmented column at index `width`.
struct Row {
  std::vector<std::uint64_t> words;

  explicit Row(int width) : words(static_cast<std::size_t>(width) / 64 + 1, 0) {}

  bool get(int i) const { return (words[static_cast<std::size_t>(i) / 64] >> (i % 64)) & 1u; }
  void flip(int i) { words[static_cast<std::size_t>(i) / 64] ^= 1ull << (i % 64); }
  void operator^=(const Row& other) {
    for (std::size_t w = 0; w < words.size(); ++w) words[w] ^= other.words[w];
  }
};

}  // namespace

Solution solve(int num_vars,
               const std::vector<std::vector<int>>& equations,
               const std::vector<int>& rhs) {
  if (equations.size() != rhs.size()) {
    throw std::invalid_argument("equation/rhs count mismatch");
  }
  std::vector<Row> rows;
  rows.reserve(equations.size());
  for (std::size_t e = 0; e < equations.size(); ++e) {
    Row row(num_vars + 1);
    for (int idx : equations[e]) {
      if (idx < 0 || idx >= num_vars) {
        throw std::invalid_argument("variable index out of range");
      }
      row.flip(idx);  // repeated indices cancel mod 2
    }
    if (rhs[e] % 2 != 0) row.flip(num_vars);
    rows.push_back(std::move(row));
  }

  std::vector<int> pivot_col;  // pivot column of row r, in elimination order
  std::size_t next = 0;
  for (int col = 0; col < num_vars && next < rows.size(); ++col) {
    std::size_t found = next;
    while (found < rows.size() && !rows[found].get(col)) ++found;
    if (found == rows.size()) continue;
    std::swap(rows[next], rows[found]);
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r != next && rows[r].get(col)) rows[r] ^= rows[next];
    }
    pivot_col.push_back(col);
    ++next;
  }

  Solution out;
  out.rank = static_cast<int>(pivot_col.size());
  out.consistent = true;
  for (std::size_t r = next; r < rows.size(); ++r) {
    if (rows[r].get(num_vars)) {
      out.consistent = false;
      return out;
    }
  }

  std::vector<char> is_pivot(static_cast<std::size_t>(num_vars), 0);
  for (int col : pivot_col) is_pivot[static_cast<std::size_t>(col)] = 1;

  // Particular solution: free variables 0, pivot variables from the
  // augmented column.
  out.particular.assign(static_cast<std::size_t>(num_vars), 0);
  for (std::size_t r = 0; r < pivot_col.size(); ++r) {
    out.particular[static_cast<std::size_t>(pivot_col[r])] =
        rows[r].get(num_vars) ? 1 : 0;
  }

  // Nullspace basis: one vector per free variable.
  for (int col = 0; col < num_vars; ++col) {
    if (is_pivot[static_cast<std::size_t>(col)]) continue;
    std::vector<std::uint8_t> vec(static_cast<std::size_t>(num_vars), 0);
    vec[static_cast<std::size_t>(col)] = 1;
    for (std::size_t r = 0; r < pivot_col.size(); ++r) {
      if (rows[r].get(col)) vec[static_cast<std::size_t>(pivot_col[r])] = 1;
    }
    out.nullspace.push_back(std::move(vec));
  }
  return out;
}

}  // namespace adinkra::gf2

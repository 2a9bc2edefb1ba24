#include "adinkra/constructors.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace adinkra {

ColoredGraph build_hypercube(int n_colors) {
  if (n_colors < 1 || n_colors > 16) {
    throw std::invalid_argument("hypercube dimension must be in 1..16");
  }
  int n = 1 << n_colors;
  GraphBuilder builder(n, n_colors);
  std::vector<Parity> parity;
  parity.reserve(static_cast<std::size_t>(n));
  for (int value = 0; value < n; ++value) {
    BitVector v(n_colors, static_cast<std::uint64_t>(value));
    builder.set_label(value + 1, v.str());
    parity.push_back(v.even() ? Parity::boson : Parity::fermion);
    for (int i = 1; i <= n_colors; ++i) {
      BitVector w = v ^ BitVector::unit(n_colors, i);
      if (w.value() > v.value()) {
        builder.add_edge(value + 1, static_cast<int>(w.value()) + 1, i);
      }
    }
  }
  builder.set_parity(std::move(parity));
  return builder.build();
}

ColoredGraph build_quotient(int n_colors, const LinearCode& code) {
  if (code.length() != n_colors) {
    throw std::invalid_argument("code length must equal the number of colors");
  }
  CodeClass cls = code.classify();
  for (int i = 1; i <= n_colors && cls.has_weight_1_or_2; ++i) {
    if (code.contains(BitVector::unit(n_colors, i))) {
      throw std::invalid_argument("code contains weight-1 codeword " +
                                  BitVector::unit(n_colors, i).str() +
                                  " (quotient would have a loop)");
    }
    for (int j = i + 1; j <= n_colors; ++j) {
      BitVector w = BitVector::unit(n_colors, i) ^ BitVector::unit(n_colors, j);
      if (code.contains(w)) {
        throw std::invalid_argument("code contains weight-2 codeword " + w.str() +
                                    " (quotient would have a multi-edge)");
      }
    }
  }
  int quotient_dim = n_colors - code.dimension();
  if (quotient_dim > 16) {
    throw std::invalid_argument("quotient too large: 2^" + std::to_string(quotient_dim) +
                                " vertices exceeds the 2^16 cap");
  }

  // Coset representatives are exactly the vectors that vanish on every
  // pivot position; spread a counter over the free positions.
  std::vector<int> free_positions;
  {
    std::vector<char> is_pivot(static_cast<std::size_t>(n_colors + 1), 0);
    for (const BitVector& row : code.basis()) {
      for (int p = 1; p <= n_colors; ++p) {
        if (row.bit(p)) {
          is_pivot[static_cast<std::size_t>(p)] = 1;
          break;
        }
      }
    }
    for (int p = 1; p <= n_colors; ++p) {
      if (!is_pivot[static_cast<std::size_t>(p)]) free_positions.push_back(p);
    }
  }

  std::vector<BitVector> reps;
  reps.reserve(1ull << quotient_dim);
  for (std::uint64_t counter = 0; counter < (1ull << quotient_dim); ++counter) {
    BitVector rep = BitVector::zero(n_colors);
    for (std::size_t b = 0; b < free_positions.size(); ++b) {
      if ((counter >> b) & 1u) rep = rep.with_bit(free_positions[b], true);
    }
    reps.push_back(rep);
  }
  std::sort(reps.begin(), reps.end());
  std::map<std::uint64_t, int> id_of;
  for (std::size_t i = 0; i < reps.size(); ++i) {
    id_of[reps[i].value()] = static_cast<int>(i) + 1;
  }

  int n = static_cast<int>(reps.size());
  GraphBuilder builder(n, n_colors);
  std::vector<Parity> parity;
  for (int id = 1; id <= n; ++id) {
    const BitVector& rep = reps[static_cast<std::size_t>(id - 1)];
    builder.set_label(id, rep.str());
    if (cls.even) parity.push_back(rep.even() ? Parity::boson : Parity::fermion);
    for (int i = 1; i <= n_colors; ++i) {
      BitVector w = code.reduce(rep ^ BitVector::unit(n_colors, i));
      int other = id_of.at(w.value());
      if (other > id) builder.add_edge(id, other, i);
    }
  }
  if (cls.even) builder.set_parity(std::move(parity));
  return builder.build();
}

ColoredGraph build_folded_cube(int n_colors) {
  if (n_colors < 3) {
    throw std::invalid_argument("folded cube requires N >= 3");
  }
  std::uint64_t all_ones = n_colors == 64 ? ~0ull : (1ull << n_colors) - 1;
  LinearCode code = LinearCode::from_span(n_colors, {BitVector(n_colors, all_ones)});
  return build_quotient(n_colors, code);
}

ColoredGraph build_complete_even(int m) {
  if (m < 2) {
    throw std::invalid_argument("complete graph needs 2m >= 4 vertices");
  }
  int n = 2 * m;
  int polygon = n - 1;
  GraphBuilder builder(n, polygon);
  for (int t = 1; t <= polygon; ++t) {
    builder.add_edge(n, t, t);  // radial edge from the center
    for (int a = 0; a < polygon; ++a) {
      for (int b = a + 1; b < polygon; ++b) {
        if ((a + b) % polygon == (2 * (t - 1)) % polygon) {
          builder.add_edge(a + 1, b + 1, t);
        }
      }
    }
  }
  return builder.build();
}

ColoredGraph build_complete_bipartite(int n) {
  if (n < 1) {
    throw std::invalid_argument("bipartite part size must be positive");
  }
  GraphBuilder builder(2 * n, n);
  for (int i = 1; i <= n; ++i) {
    builder.set_label(i, "v" + std::to_string(i));
    builder.set_label(n + i, "w" + std::to_string(i));
    for (int j = 1; j <= n; ++j) {
      int color = ((j - i) % n + n) % n + 1;
      builder.add_edge(i, n + j, color);
    }
  }
  return builder.build();
}

}  // namespace adinkra

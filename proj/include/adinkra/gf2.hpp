#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <tuple>
#include <vector>

namespace adinkra {

// Bitstring over GF(2) of length 1..64.  Position 1 is the leftmost
// character of the string form and is stored at machine bit (length - 1),
// so numeric order of value() coincides with lexicographic order of str().
class BitVector {
public:
  BitVector() = default;
  BitVector(int length, std::uint64_t value);

  static BitVector zero(int length);
  static BitVector unit(int length, int position);  // e_i, 1-based
  static BitVector parse(const std::string& text);  // characters '0'/'1'

  int length() const { return length_; }
  std::uint64_t value() const { return bits_; }
  bool bit(int position) const;
  BitVector with_bit(int position, bool value) const;

  int weight() const;
  bool even() const { return weight() % 2 == 0; }

  BitVector operator^(const BitVector& other) const;
  BitVector operator&(const BitVector& other) const;
  bool operator==(const BitVector& other) const = default;
  bool operator<(const BitVector& other) const;

  std::string str() const;

private:
  int length_ = 0;
  std::uint64_t bits_ = 0;
};

// Measures (wt(x1^x2), wt(x1)+wt(x2), wt(x1&x2)) and checks
// wt(x1^x2) = wt(x1) + wt(x2) - 2*wt(x1&x2).  The overlap term carries
// coefficient 2; anything else fails on x1 = x2 != 0.
std::tuple<int, int, int> weight_sum_identity(const BitVector& x1,
                                              const BitVector& x2);

struct CodeClass {
  bool has_weight_1_or_2 = false;
  bool even = false;
  bool doubly_even = false;

  friend bool operator==(const CodeClass&, const CodeClass&) = default;
};

enum class ClassifyStrategy {
  automatic,   // enumerate when k <= 24, basis route otherwise
  enumerate,   // walk all 2^k codewords
  basis,       // row weights mod 4, pairwise overlaps, weight-1/2 membership
};

// Linear binary block code held by its reduced-row-echelon basis.  RREF is
// the unique canonical form, so two codes are equal iff their bases compare
// equal field by field.
class LinearCode {
public:
  LinearCode() = default;
  explicit LinearCode(int length);  // zero code

  static LinearCode from_span(int length, const std::vector<BitVector>& vectors);

  // Doubly even family with staggered weight-4 rows: row j covers positions
  // 2j-1..2j+2, j = 1..n-1, over length 2n.  Requires n >= 3.
  static LinearCode d2n_family(int n);

  int length() const { return length_; }
  int dimension() const { return static_cast<int>(basis_.size()); }
  const std::vector<BitVector>& basis() const { return basis_; }

  bool contains(const BitVector& v) const;

  // Clears every pivot bit of v; the result is the lexicographically
  // smallest member of the coset v + C.
  BitVector reduce(const BitVector& v) const;

  // All 2^k codewords, zero vector first, remainder ascending.  k <= 24.
  std::vector<BitVector> codewords() const;

  // Enumerates codewords when k <= 24; for larger k the flags come from the
  // basis (row weights mod 4 + pairwise overlaps, weight-1/2 membership
  // probes), which the weight-sum identity makes exact.
  CodeClass classify(ClassifyStrategy strategy = ClassifyStrategy::automatic) const;

  bool operator==(const LinearCode& other) const = default;

private:
  int length_ = 0;
  std::vector<BitVector> basis_;  // RREF rows, pivot positions increasing
};

// Code file format: one bitstring per line, equal lengths, '#' comments.
// The file lists a spanning set; the result is its RREF basis.
LinearCode read_code(std::istream& in);
std::string write_code(const LinearCode& code);

}  // namespace adinkra

#include "adinkra/gf2.hpp"

#include <algorithm>
#include <bit>
#include <istream>
#include <sstream>
#include <stdexcept>

namespace adinkra {

namespace {

std::uint64_t mask_for(int length) {
  return length == 64 ? ~0ull : (1ull << length) - 1;
}

}  // namespace

BitVector::BitVector(int length, std::uint64_t value) : length_(length), bits_(value) {
  if (length < 1 || length > 64) {
    throw std::invalid_argument("BitVector length must be in 1..64");
  }
  if (value & ~mask_for(length)) {
    throw std::invalid_argument("BitVector value exceeds length");
  }
}

BitVector BitVector::zero(int length) { return BitVector(length, 0); }

BitVector BitVector::unit(int length, int position) {
  BitVector v = zero(length);
  return v.with_bit(position, true);
}

BitVector BitVector::parse(const std::string& text) {
  if (text.empty() || text.size() > 64) {
    throw std::invalid_argument("bitstring must have 1..64 characters");
  }
  std::uint64_t bits = 0;
  for (char c : text) {
    if (c != '0' && c != '1') {
      throw std::invalid_argument("bitstring may contain only '0'/'1': " + text);
    }
    bits = (bits << 1) | static_cast<std::uint64_t>(c - '0');
  }
  return BitVector(static_cast<int>(text.size()), bits);
}

bool BitVector::bit(int position) const {
  if (position < 1 || position > length_) {
    throw std::out_of_range("bit position out of range");
  }
  return (bits_ >> (length_ - position)) & 1u;
}

BitVector BitVector::with_bit(int position, bool value) const {
  if (position < 1 || position > length_) {
    throw std::out_of_range("bit position out of range");
  }
  std::uint64_t mask = 1ull << (length_ - position);
  BitVector out = *this;
  out.bits_ = value ? (bits_ | mask) : (bits_ & ~mask);
  return out;
}

int BitVector::weight() const { return std::popcount(bits_); }

BitVector BitVector::operator^(const BitVector& other) const {
  if (length_ != other.length_) {
    throw std::invalid_argument("length mismatch in BitVector xor");
  }
  BitVector out = *this;
  out.bits_ ^= other.bits_;
  return out;
}

BitVector BitVector::operator&(const BitVector& other) const {
  if (length_ != other.length_) {
    throw std::invalid_argument("length mismatch in BitVector and");
  }
  BitVector out = *this;
  out.bits_ &= other.bits_;
  return out;
}

bool BitVector::operator<(const BitVector& other) const {
  if (length_ != other.length_) return length_ < other.length_;
  return bits_ < other.bits_;
}

std::string BitVector::str() const {
  std::string out(static_cast<std::size_t>(length_), '0');
  for (int i = 1; i <= length_; ++i) {
    if (bit(i)) out[static_cast<std::size_t>(i - 1)] = '1';
  }
  return out;
}

std::tuple<int, int, int> weight_sum_identity(const BitVector& x1, const BitVector& x2) {
  int xor_weight = (x1 ^ x2).weight();
  int part_sum = x1.weight() + x2.weight();
  int overlap = (x1 & x2).weight();
  if (xor_weight != part_sum - 2 * overlap) {
    throw std::logic_error("weight-sum identity violated");
  }
  return {xor_weight, part_sum, overlap};
}

LinearCode::LinearCode(int length) : length_(length) {
  if (length < 1 || length > 64) {
    throw std::invalid_argument("code length must be in 1..64");
  }
}

LinearCode LinearCode::from_span(int length, const std::vector<BitVector>& vectors) {
  LinearCode code(length);
  for (const BitVector& v : vectors) {
    if (v.length() != length) {
      throw std::invalid_argument("spanning vector length mismatch");
    }
    BitVector r = code.reduce(v);
    if (r.value() == 0) continue;
    // Insert keeping pivots increasing, then clear the new pivot column
    // from every other row so the basis stays in RREF.
    int pivot = std::countl_zero(r.value()) - (64 - length) + 1;
    auto pos = code.basis_.begin();
    while (pos != code.basis_.end() && pos->value() > r.value()) ++pos;
    pos = code.basis_.insert(pos, r);
    for (auto& row : code.basis_) {
      if (&row != &*pos && row.bit(pivot)) row = row ^ r;
    }
  }
  return code;
}

LinearCode LinearCode::d2n_family(int n) {
  if (n < 3) {
    throw std::invalid_argument("d2n family requires n >= 3");
  }
  int length = 2 * n;
  if (length > 64) {
    throw std::invalid_argument("d2n family exceeds maximum code length");
  }
  std::vector<BitVector> rows;
  for (int j = 1; j <= n - 1; ++j) {
    BitVector row = BitVector::zero(length);
    for (int p = 2 * j - 1; p <= 2 * j + 2; ++p) row = row.with_bit(p, true);
    rows.push_back(row);
  }
  return from_span(length, rows);
}

bool LinearCode::contains(const BitVector& v) const {
  return reduce(v).value() == 0;
}

BitVector LinearCode::reduce(const BitVector& v) const {
  if (v.length() != length_) {
    throw std::invalid_argument("vector length does not match code length");
  }
  BitVector out = v;
  for (const BitVector& row : basis_) {
    if (row.value() == 0) continue;  // basis rows are nonzero
    // Pivot of an RREF row is its leading set bit.
    std::uint64_t pivot_mask = 1ull << (63 - std::countl_zero(row.value()));
    if (out.value() & pivot_mask) out = out ^ row;
  }
  return out;
}

std::vector<BitVector> LinearCode::codewords() const {
  int k = dimension();
  if (k > 24) {
    throw std::invalid_argument("code dimension too large for enumeration");
  }
  std::vector<BitVector> words;
  words.reserve(1ull << k);
  for (std::uint64_t sel = 0; sel < (1ull << k); ++sel) {
    BitVector w = BitVector::zero(length_);
    for (int j = 0; j < k; ++j) {
      if ((sel >> j) & 1u) w = w ^ basis_[static_cast<std::size_t>(j)];
    }
    words.push_back(w);
  }
  std::sort(words.begin(), words.end());
  return words;
}

CodeClass LinearCode::classify(ClassifyStrategy strategy) const {
  if (strategy == ClassifyStrategy::automatic) {
    strategy = dimension() <= 24 ? ClassifyStrategy::enumerate : ClassifyStrategy::basis;
  }
  CodeClass out;
  if (strategy == ClassifyStrategy::enumerate) {
    out.even = true;
    out.doubly_even = true;
    for (const BitVector& w : codewords()) {
      int wt = w.weight();
      if (wt == 1 || wt == 2) out.has_weight_1_or_2 = true;
      if (wt % 2 != 0) out.even = false;
      if (wt % 4 != 0) out.doubly_even = false;
    }
    return out;
  }

  // Basis shortcut.  Evenness and double evenness propagate through sums by
  // the weight-sum identity; weight-1/2 codewords are found by membership.
  out.even = true;
  out.doubly_even = true;
  for (const BitVector& row : basis_) {
    if (row.weight() % 2 != 0) out.even = false;
    if (row.weight() % 4 != 0) out.doubly_even = false;
  }
  for (std::size_t a = 0; a + 1 < basis_.size() && out.doubly_even; ++a) {
    for (std::size_t b = a + 1; b < basis_.size(); ++b) {
      if ((basis_[a] & basis_[b]).weight() % 2 != 0) {
        out.doubly_even = false;
        break;
      }
    }
  }
  if (!out.even) out.doubly_even = false;
  for (int i = 1; i <= length_ && !out.has_weight_1_or_2; ++i) {
    if (contains(BitVector::unit(length_, i))) out.has_weight_1_or_2 = true;
    for (int j = i + 1; j <= length_; ++j) {
      if (contains(BitVector::unit(length_, i) ^ BitVector::unit(length_, j))) {
        out.has_weight_1_or_2 = true;
        break;
      }
    }
  }
  return out;
}

LinearCode read_code(std::istream& in) {
  std::vector<BitVector> rows;
  std::string line;
  int length = 0;
  int line_no = 0;
  while (std::getline(in, line)) {
    ++line_no;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    // trim
    auto begin = line.find_first_not_of(" \t\r");
    if (begin == std::string::npos) continue;
    auto end = line.find_last_not_of(" \t\r");
    std::string token = line.substr(begin, end - begin + 1);
    BitVector row = BitVector::parse(token);
    if (length == 0) {
      length = row.length();
    } else if (row.length() != length) {
      throw std::runtime_error("code file line " + std::to_string(line_no) +
                               ": length differs from previous rows");
    }
    rows.push_back(row);
  }
  if (length == 0) {
    throw std::runtime_error("code file contains no rows");
  }
  return LinearCode::from_span(length, rows);
}

std::string write_code(const LinearCode& code) {
  std::ostringstream out;
  if (code.dimension() == 0) {
    out << BitVector::zero(code.length()).str() << '\n';
  }
  for (const BitVector& row : code.basis()) {
    out << row.str() << '\n';
  }
  return out.str();
}

}  // namespace adinkra

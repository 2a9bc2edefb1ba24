#include <doctest.h>

#include <algorithm>
#include <bit>
#include <random>
#include <set>
#include <sstream>

#include "adinkra/gf2.hpp"

using namespace adinkra;

TEST_CASE("bitvector basics") {
  BitVector v = BitVector::parse("101");
  CHECK(v.length() == 3);
  CHECK(v.value() == 5);
  CHECK(v.bit(1));
  CHECK(!v.bit(2));
  CHECK(v.bit(3));
  CHECK(v.str() == "101");
  CHECK(BitVector::unit(3, 1).str() == "100");
  CHECK(BitVector::unit(3, 3).str() == "001");

  CHECK_THROWS_AS(BitVector::parse(""), std::invalid_argument);
  CHECK_THROWS_AS(BitVector::parse("10x"), std::invalid_argument);
  CHECK_THROWS_AS(BitVector::parse("10") ^ BitVector::parse("100"),
                  std::invalid_argument);
}

TEST_CASE("weight") {
  CHECK(BitVector::parse("0000").weight() == 0);
  CHECK(BitVector::parse("11110").weight() == 4);
  CHECK(BitVector::parse("11111111").weight() == 8);
}

TEST_CASE("weight sum identity examples") {
  auto [sum, parts, overlap] =
      weight_sum_identity(BitVector::parse("1100"), BitVector::parse("0110"));
  CHECK(sum == 2);
  CHECK(parts == 4);
  CHECK(overlap == 1);

  CHECK(weight_sum_identity(BitVector::parse("1111"), BitVector::parse("0000")) ==
        std::tuple{4, 4, 0});
  CHECK(weight_sum_identity(BitVector::parse("11110000"),
                            BitVector::parse("00111100")) == std::tuple{4, 8, 2});
  CHECK_THROWS_AS(weight_sum_identity(BitVector::parse("11"), BitVector::parse("111")),
                  std::invalid_argument);
}

TEST_CASE("weight sum identity exhaustive to length 6") {
  for (int length = 1; length <= 6; ++length) {
    for (std::uint64_t a = 0; a < (1ull << length); ++a) {
      for (std::uint64_t b = 0; b < (1ull << length); ++b) {
        // The measured coefficient on the overlap must be exactly 2.
        CHECK(std::popcount(a ^ b) ==
              std::popcount(a) + std::popcount(b) - 2 * std::popcount(a & b));
        weight_sum_identity(BitVector(length, a), BitVector(length, b));
      }
    }
  }
}

TEST_CASE("from_span canonicalizes") {
  LinearCode code = LinearCode::from_span(
      3, {BitVector::parse("110"), BitVector::parse("011"), BitVector::parse("101")});
  CHECK(code.dimension() == 2);
  // Canonical RREF rows: pivot columns cleared everywhere else.
  CHECK(code.basis()[0].str() == "101");
  CHECK(code.basis()[1].str() == "011");
  // The span is unchanged.
  CHECK(code.contains(BitVector::parse("110")));
  CHECK(code.contains(BitVector::parse("000")));
  CHECK(!code.contains(BitVector::parse("111")));

  LinearCode zero = LinearCode::from_span(4, {});
  CHECK(zero.dimension() == 0);
  CHECK(zero.codewords().size() == 1);

  // d_6 rows are independent; RREF clears row 1 at the second pivot.
  LinearCode d6 = LinearCode::from_span(
      6, {BitVector::parse("111100"), BitVector::parse("001111")});
  CHECK(d6.dimension() == 2);
  CHECK(d6.contains(BitVector::parse("111100")));
  CHECK(d6.contains(BitVector::parse("001111")));
  CHECK(d6.basis()[0].str() == "110011");
  CHECK(d6.basis()[1].str() == "001111");
}

TEST_CASE("from_span idempotent and stable under row order") {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    int length = 1 + static_cast<int>(rng() % 10);
    std::vector<BitVector> rows;
    int count = static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) {
      rows.push_back(BitVector(length, rng() & ((1ull << length) - 1)));
    }
    LinearCode code = LinearCode::from_span(length, rows);
    CHECK(LinearCode::from_span(length, code.basis()) == code);
    std::shuffle(rows.begin(), rows.end(), rng);
    CHECK(LinearCode::from_span(length, rows) == code);

    // Membership agrees with explicit enumeration.
    std::set<std::uint64_t> words;
    for (const BitVector& w : code.codewords()) words.insert(w.value());
    for (std::uint64_t v = 0; v < (1ull << length); ++v) {
      CHECK(code.contains(BitVector(length, v)) == (words.count(v) == 1));
    }
  }
}

TEST_CASE("from_span output is strict reduced row echelon form") {
  std::mt19937 rng(23);
  for (int trial = 0; trial < 300; ++trial) {
    int length = 1 + static_cast<int>(rng() % 12);
    std::vector<BitVector> rows;
    int count = static_cast<int>(rng() % 6);
    for (int i = 0; i < count; ++i) {
      rows.push_back(BitVector(length, rng() & ((1ull << length) - 1)));
    }
    LinearCode code = LinearCode::from_span(length, rows);
    std::vector<int> pivots;
    for (const BitVector& row : code.basis()) {
      int pivot = 0;
      for (int p = 1; p <= length && pivot == 0; ++p) {
        if (row.bit(p)) pivot = p;
      }
      REQUIRE(pivot != 0);
      if (!pivots.empty()) CHECK(pivot > pivots.back());
      pivots.push_back(pivot);
    }
    // Pivot columns vanish in every other row.
    for (std::size_t r = 0; r < pivots.size(); ++r) {
      for (std::size_t s = 0; s < pivots.size(); ++s) {
        if (r != s) CHECK(!code.basis()[s].bit(pivots[r]));
      }
    }
  }
}

TEST_CASE("enumerate_codewords order") {
  LinearCode zero(3);
  CHECK(zero.codewords() == std::vector{BitVector::parse("000")});

  LinearCode c = LinearCode::from_span(5, {BitVector::parse("11110")});
  CHECK(c.codewords() ==
        std::vector{BitVector::parse("00000"), BitVector::parse("11110")});

  LinearCode d6 = LinearCode::d2n_family(3);
  std::vector<BitVector> words = d6.codewords();
  REQUIRE(words.size() == 4);
  CHECK(words[0].str() == "000000");
  CHECK(words[1].str() == "001111");
  CHECK(words[2].str() == "110011");
  CHECK(words[3].str() == "111100");
}

TEST_CASE("classify examples") {
  LinearCode f3 = LinearCode::from_span(3, {BitVector::parse("111")});
  CodeClass cls = f3.classify();
  CHECK(!cls.even);
  CHECK(!cls.doubly_even);
  CHECK(!cls.has_weight_1_or_2);

  CHECK(LinearCode::d2n_family(4).classify().doubly_even);

  LinearCode f6 = LinearCode::from_span(6, {BitVector::parse("111111")});
  cls = f6.classify();
  CHECK(cls.even);
  CHECK(!cls.doubly_even);

  LinearCode weight2 = LinearCode::from_span(4, {BitVector::parse("1100")});
  CHECK(weight2.classify().has_weight_1_or_2);
}

TEST_CASE("classify basis route agrees with enumeration") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 400; ++trial) {
    int length = 2 + static_cast<int>(rng() % 11);  // up to 12
    std::vector<BitVector> rows;
    int count = static_cast<int>(rng() % 5);
    for (int i = 0; i < count; ++i) {
      rows.push_back(BitVector(length, rng() & ((1ull << length) - 1)));
    }
    LinearCode code = LinearCode::from_span(length, rows);
    CHECK(code.classify(ClassifyStrategy::enumerate) ==
          code.classify(ClassifyStrategy::basis));
  }
}

TEST_CASE("d2n family") {
  CHECK_THROWS_AS(LinearCode::d2n_family(2), std::invalid_argument);

  LinearCode d6 = LinearCode::d2n_family(3);
  CHECK(d6.length() == 6);
  CHECK(d6.dimension() == 2);
  CHECK(d6.contains(BitVector::parse("111100")));
  CHECK(d6.contains(BitVector::parse("001111")));

  LinearCode d8 = LinearCode::d2n_family(4);
  CHECK(d8.length() == 8);
  CHECK(d8.dimension() == 3);
  CHECK(d8.contains(BitVector::parse("11110000")));
  CHECK(d8.contains(BitVector::parse("00111100")));
  CHECK(d8.contains(BitVector::parse("00001111")));

  for (int n = 3; n <= 8; ++n) {
    LinearCode code = LinearCode::d2n_family(n);
    CHECK(code.dimension() == n - 1);
    for (const BitVector& row : code.basis()) {
      CHECK(row.weight() % 4 == 0);
    }
    CodeClass cls = code.classify();
    CHECK(cls.doubly_even);
    CHECK(!cls.has_weight_1_or_2);
  }
  // d_10: four staggered rows of weight 4.
  LinearCode d10 = LinearCode::d2n_family(5);
  CHECK(d10.dimension() == 4);
  CHECK(d10.classify().doubly_even);
}

TEST_CASE("enumeration caps at dimension 24") {
  std::vector<BitVector> units;
  for (int i = 1; i <= 25; ++i) units.push_back(BitVector::unit(25, i));
  LinearCode full = LinearCode::from_span(25, units);
  CHECK(full.dimension() == 25);
  CHECK_THROWS_AS(full.codewords(), std::invalid_argument);
  // classify falls back to the basis route above the cap.
  CodeClass cls = full.classify();
  CHECK(cls.has_weight_1_or_2);
  CHECK(!cls.even);
}

TEST_CASE("code file io") {
  std::istringstream in("# spanning set\n111100\n001111\n111100\n");
  LinearCode code = read_code(in);
  CHECK(code == LinearCode::d2n_family(3));
  CHECK(write_code(code) == "110011\n001111\n");

  std::istringstream empty("# nothing\n");
  CHECK_THROWS_AS(read_code(empty), std::runtime_error);
  std::istringstream ragged("110\n01\n");
  CHECK_THROWS_AS(read_code(ragged), std::runtime_error);
}

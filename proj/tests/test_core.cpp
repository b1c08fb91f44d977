#include <doctest.h>

#include <random>

#include "dklr/core.hpp"
#include "oracle.hpp"

using namespace dklr;

namespace {
const Constraints kTable{2, 4, 1, 3};
}

TEST_CASE("validate accepts the documented domain") {
  CHECK(validate(2, 4, 1, 3) == kTable);
  CHECK(validate(0, 0, 0, 0) == Constraints{0, 0, 0, 0});
  CHECK_THROWS_AS(validate(3, 2, 0, 0), DomainError);
  CHECK_THROWS_AS(validate(-1, 2, 0, 0), DomainError);
  CHECK_THROWS_AS(validate(0, 2, -1, 0), DomainError);
  CHECK_THROWS_AS(validate(0, 2, 0, -1), DomainError);
}

TEST_CASE("BitSequence parsing and ordering") {
  const auto x = BitSequence::parse("01000010");
  CHECK(x.size() == 8);
  CHECK(x.weight() == 2);
  CHECK(x.str() == "01000010");
  CHECK(BitSequence::parse("").empty());
  CHECK_THROWS_AS(BitSequence::parse("0102"), DomainError);
  CHECK(BitSequence::parse("01000010") < BitSequence::parse("10000100"));
  CHECK(BitSequence::parse("0100") < BitSequence::parse("0101"));
}

TEST_CASE("is_valid") {
  CHECK(is_valid(BitSequence::parse("01000010"), kTable));
  CHECK_FALSE(is_valid(BitSequence::parse("11000000"), kTable));
  CHECK_FALSE(is_valid(BitSequence::parse("00100100"), kTable));
  CHECK_FALSE(is_valid(BitSequence::parse("10010000"), kTable));  // trailing run 4 > r
  CHECK(is_valid(BitSequence::parse("0"), kTable));
  CHECK_FALSE(is_valid(BitSequence::parse("00"), kTable));
  CHECK(is_valid(BitSequence(), kTable));
}

TEST_CASE("nrzi") {
  CHECK(nrzi(BitSequence::parse("01000010")).symbols().size() == 8);
  CHECK(nrzi(BitSequence::parse("01000010")) == BipolarSequence({1, -1, -1, -1, -1, -1, 1, 1}));
  CHECK(nrzi(BitSequence::parse("10010010")) == BipolarSequence({-1, -1, -1, 1, 1, 1, -1, -1}));
  CHECK(nrzi(BitSequence::parse("10010010")).str() == "---+++--");
  CHECK(nrzi(BitSequence()).size() == 0);
}

TEST_CASE("stats") {
  auto s = stats(BitSequence::parse("01001001"));
  CHECK(s.weight == 3);
  CHECK(s.charge == 0);
  s = stats(BitSequence::parse("00000000"));
  CHECK(s.weight == 0);
  CHECK(s.charge == 8);
  s = stats(BitSequence::parse("10010010"));
  CHECK(s.weight == 3);
  CHECK(s.charge == -2);
  CHECK(s.rds == std::vector<int>{-1, -2, -3, -2, -1, 0, -1, -2});
  s = stats(BitSequence());
  CHECK(s.weight == 0);
  CHECK(s.charge == 0);
  CHECK(s.rds.empty());
}

TEST_CASE("enumerate_all reproduces the n = 8 codebook") {
  const auto all = enumerate_all(8, kTable);
  REQUIRE(all.size() == 9);
  CHECK(all.front().str() == "01000010");
  CHECK(all.back().str() == "10010010");
  CHECK(enumerate_all(0, kTable).size() == 1);
  CHECK(enumerate_all(0, kTable)[0].empty());
  CHECK(enumerate_all(5, kTable).size() == 4);
  CHECK_THROWS_AS(enumerate_all(27, kTable), DomainError);
  CHECK_NOTHROW(enumerate_all(3, kTable, 3));
  CHECK_THROWS_AS(enumerate_all(4, kTable, 3), DomainError);
}

TEST_CASE("enumerate_all agrees with the reference enumeration") {
  for (int d = 0; d <= 2; ++d) {
    for (int k = d; k <= 4; ++k) {
      for (int l = 0; l <= 3; ++l) {
        for (int r = 0; r <= 3; ++r) {
          const Constraints c{d, k, l, r};
          for (int n = 0; n <= 10; ++n) {
            const auto got = enumerate_all(n, c);
            const auto want = oracle::words(n, {d, k, l, r});
            REQUIRE(got.size() == want.size());
            for (std::size_t i = 0; i < got.size(); ++i) {
              CHECK(got[i].str() == want[i].text);
              if (i > 0) CHECK(got[i - 1] < got[i]);
            }
          }
        }
      }
    }
  }
}

TEST_CASE("charge definitions agree and respect parity") {
  std::mt19937 rng(20240531);
  for (int trial = 0; trial < 2000; ++trial) {
    const int n = static_cast<int>(rng() % 20);
    std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
    for (auto& b : bits) b = static_cast<std::uint8_t>(rng() & 1U);
    const BitSequence x(bits);
    const auto s = stats(x);
    CHECK(s.charge == nrzi(x).sum());
    CHECK(((s.charge + n) % 2 + 2) % 2 == 0);
    CHECK(std::abs(s.charge) <= n);
    CHECK(s.weight == x.weight());
    const auto ref = oracle::describe(x.str());
    CHECK(ref.charge == s.charge);
    int prev = 0;
    for (int v : s.rds) {
      CHECK(std::abs(v - prev) == 1);
      prev = v;
    }
    if (n > 0) CHECK(s.rds.back() == s.charge);
  }
}

TEST_CASE("peak_shift examples") {
  const auto x = BitSequence::parse("01000100");
  const auto right = peak_shift(x, 2, ShiftDirection::right);
  const auto left = peak_shift(x, 2, ShiftDirection::left);
  CHECK(right.str() == "01000010");
  CHECK(left.str() == "01001000");
  CHECK(stats(x).charge == 0);
  CHECK(stats(right).charge == -2);
  CHECK(stats(left).charge == 2);
  CHECK_THROWS_AS(peak_shift(BitSequence::parse("10000000"), 1, ShiftDirection::left), DomainError);
  CHECK_THROWS_AS(peak_shift(BitSequence::parse("00000001"), 1, ShiftDirection::right), DomainError);
  CHECK_THROWS_AS(peak_shift(BitSequence::parse("0110"), 1, ShiftDirection::right), DomainError);
  CHECK_THROWS_AS(peak_shift(BitSequence::parse("0100"), 2, ShiftDirection::right), DomainError);
  CHECK_THROWS_AS(peak_shift(BitSequence::parse("0100"), 0, ShiftDirection::right), DomainError);
}

TEST_CASE("peak shifts keep the weight and move the charge by two") {
  for (int n = 1; n <= 12; ++n) {
    for (std::uint32_t v = 0; v < (1U << n); ++v) {
      std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
      for (int i = 0; i < n; ++i) bits[static_cast<std::size_t>(i)] = (v >> (n - 1 - i)) & 1U;
      const BitSequence x(bits);
      const auto before = stats(x);
      for (int one = 1; one <= before.weight; ++one) {
        for (auto dir : {ShiftDirection::left, ShiftDirection::right}) {
          try {
            const auto y = peak_shift(x, one, dir);
            const auto after = stats(y);
            REQUIRE(after.weight == before.weight);
            REQUIRE(std::abs(after.charge - before.charge) == 2);
          } catch (const DomainError&) {
          }
        }
      }
    }
  }
}

#include <doctest.h>

#include "dklr/counting.hpp"
#include "dklr/direct.hpp"

using namespace dklr;

namespace {
const Constraints kTable{2, 4, 1, 3};

template <typename F>
void for_grid(F&& body) {
  for (int d = 0; d <= 3; ++d) {
    for (int k = d; k <= 6; ++k) {
      for (int r = 0; r <= 4; ++r) body(Constraints{d, k, 0, r});
    }
  }
}
}  // namespace

TEST_CASE("binomial convention") {
  CHECK(binom(5, 2) == 10);
  CHECK(binom(0, 0) == 1);
  CHECK(binom(3, 4) == 0);
  CHECK(binom(-1, 0) == 0);
  CHECK(binom(4, -1) == 0);
  CHECK(binom(-3, -2) == 0);
  CHECK(binom(60, 30) == BigInt("118264581564861424"));
}

TEST_CASE("a_direct examples") {
  CHECK(a_direct(8, 2, kTable) == 2);
  CHECK(a_direct(8, 3, kTable) == 3);
  CHECK(a_direct(2, 5, kTable) == 0);
  CHECK(a_direct(4, 1, kTable) == 1);
  CHECK(a_direct(5, 1, kTable) == 0);
}

TEST_CASE("building blocks") {
  CHECK(block_A(0, 0, kTable) == 1);
  CHECK(block_At(0, -1, kTable) == 0);
  CHECK(block_At(6, -1, kTable) == 0);
  // Value frozen from an independent evaluation of the binomial sum.
  CHECK(block_B(8, 6, 1, kTable) == 3);
}

TEST_CASE("slanting rows") {
  CHECK(c_left(4, 0, kTable) == 1);
  CHECK(c_left(5, 0, kTable) == 0);
  CHECK(c_left(8, 6, kTable) == 3);
  CHECK(c_right(8, 8, kTable) == 2);
  CHECK(c_right(0, 0, kTable) == 1);
  for (int n = 0; n <= 12; ++n) CHECK(c_left(n, 0, kTable) == (n <= kTable.r + 1 ? 1 : 0));
}

TEST_CASE("c_direct examples") {
  CHECK(c_direct(8, -2, kTable) == 3);
  CHECK(c_direct(8, 0, kTable) == 2);
  CHECK(c_direct(6, 3, kTable) == 0);
  CHECK(c_direct(3, 5, kTable) == 0);
}

TEST_CASE("twelve-term decomposition examples") {
  CHECK(ccs_sum(8, -2, kTable) == 3);
  CHECK(ccs_sum(0, 0, kTable) == 1);
  CHECK(ccs_sum(7, -1, kTable) == 2);
  CHECK_THROWS_AS(ccs_term(0, 8, -2, kTable), DomainError);
  CHECK_THROWS_AS(ccs_term(13, 8, -2, kTable), DomainError);
}

TEST_CASE("a_direct equals the recursion up to n = 40") {
  for_grid([](const Constraints& c) {
    for (int n = 0; n <= 40; ++n) {
      for (int nu = 1; nu <= n; ++nu) REQUIRE(a_direct(n, nu, c) == count_weight(n, nu, c, Variant::first_one));
    }
  });
}

TEST_CASE("charge formulas equal the recursion up to n = 30") {
  for_grid([](const Constraints& c) {
    for (int n = 0; n <= 30; ++n) {
      for (int sigma = -n; sigma <= n; sigma += 2) {
        const BigInt want = count_charge(n, sigma, c, Variant::first_one);
        REQUIRE(c_direct(n, sigma, c) == want);
        REQUIRE(c_left(n, n + sigma, c, 3) == want);
        if (n - sigma > 0) REQUIRE(c_right(n, n - sigma, c) == want);
        if (n <= 20) REQUIRE(ccs_sum(n, sigma, c) == want);
      }
    }
  });
}

TEST_CASE("leading-run compositions") {
  for (int l = 0; l <= 4; ++l) {
    const Constraints c{1, 4, l, 2};
    for (int n = 0; n <= 16; ++n) {
      for (int nu = 0; nu <= n; ++nu) CHECK(a_hat_direct(n, nu, c) == count_weight(n, nu, c, Variant::leading_run));
      for (int sigma = -n; sigma <= n; sigma += 2) {
        CHECK(c_hat_direct(n, sigma, c) == count_charge(n, sigma, c, Variant::leading_run));
      }
    }
  }
}

#include <doctest.h>

#include <map>
#include <thread>

#include "dklr/counting.hpp"
#include "oracle.hpp"

using namespace dklr;

namespace {

const Constraints kTable{2, 4, 1, 3};
// Weight and charge triangles for n = 0..8 and (2,4,1,3);
// Weight and charge triangles for n = 0..8 as printed for (2,4,1,3);
// charge rows list sigma = -n, -n+2, ..., n.
const std::vector<std::vector<int>> kFirstWeight{
    {1}, {0, 1}, {0, 1, 0}, {0, 1, 0, 0}, {0, 1, 1, 0, 0}, {0, 0, 2, 0, 0, 0},
    {0, 0, 3, 0, 0, 0, 0}, {0, 0, 3, 1, 0, 0, 0, 0}, {0, 0, 2, 3, 0, 0, 0, 0, 0}};
const std::vector<std::vector<int>> kFirstCharge{
    {1}, {1, 0}, {1, 0, 0}, {1, 0, 0, 0}, {1, 1, 0, 0, 0}, {0, 1, 1, 0, 0, 0},
    {0, 1, 1, 1, 0, 0, 0}, {0, 0, 1, 2, 1, 0, 0, 0}, {0, 0, 0, 3, 2, 0, 0, 0, 0}};
const std::vector<std::vector<int>> kLeadWeight{
    {1}, {1, 1}, {0, 2, 0}, {0, 2, 0, 0}, {0, 2, 1, 0, 0}, {0, 1, 3, 0, 0, 0},
    {0, 0, 5, 0, 0, 0, 0}, {0, 0, 6, 1, 0, 0, 0, 0}, {0, 0, 5, 4, 0, 0, 0, 0, 0}};
const std::vector<std::vector<int>> kLeadCharge{
    {1}, {1, 1}, {1, 1, 0}, {1, 1, 0, 0}, {1, 2, 0, 0, 0}, {0, 2, 2, 0, 0, 0},
    {0, 1, 2, 2, 0, 0, 0}, {0, 0, 2, 3, 2, 0, 0, 0}, {0, 0, 0, 4, 4, 1, 0, 0, 0}};

void check_triangle(const DistributionTriangle& t, const std::vector<std::vector<int>>& want) {
  REQUIRE(t.n_max == 8);
  for (int n = 0; n <= 8; ++n) {
    for (int i = 0; i <= n; ++i) {
      CHECK(t.rows[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)] ==
            want[static_cast<std::size_t>(n)][static_cast<std::size_t>(i)]);
    }
  }
}

}  // namespace

TEST_CASE("counter examples") {
  CHECK(count_weight(5, 2, kTable, Variant::first_one) == 2);
  CHECK(count_weight(8, 2, kTable, Variant::leading_run) == 5);
  CHECK(count_weight(2, 3, kTable, Variant::first_one) == 0);
  CHECK(count_weight(0, 0, kTable, Variant::first_one) == 1);
  CHECK(count_weight(3, -1, kTable, Variant::first_one) == 0);
  CHECK(count_charge(8, -2, kTable, Variant::first_one) == 3);
  CHECK(count_charge(8, 0, kTable, Variant::leading_run) == 4);
  CHECK(count_charge(8, -2, kTable, Variant::leading_run) == 4);
  CHECK(count_charge(6, 3, kTable, Variant::first_one) == 0);
  CHECK(count_charge(6, 3, kTable, Variant::leading_run) == 0);
  CHECK(count_charge(3, 5, kTable, Variant::leading_run) == 0);
}

TEST_CASE("first-one counters ignore l") {
  for (int l = 0; l <= 5; ++l) {
    const Constraints c{2, 4, l, 3};
    for (int n = 0; n <= 12; ++n) {
      for (int nu = 0; nu <= n; ++nu) {
        CHECK(count_weight(n, nu, c, Variant::first_one) == count_weight(n, nu, kTable, Variant::first_one));
      }
    }
  }
}

TEST_CASE("totals") {
  CHECK(count_dklr(8, kTable) == 9);
  CHECK(count_dkr(8, kTable) == 5);
  CHECK(count_dklr(0, kTable) == 1);
  CHECK(count_dklr(0, Constraints{0, 0, 0, 0}) == 1);
  CHECK(count_dklr_convolution(8, kTable) == 9);
}

TEST_CASE("distribution triangles for (2, 4, 1, 3)") {
  check_triangle(distribution_table(8, kTable, DistributionKind::weight, Variant::first_one), kFirstWeight);
  check_triangle(distribution_table(8, kTable, DistributionKind::charge, Variant::first_one), kFirstCharge);
  check_triangle(distribution_table(8, kTable, DistributionKind::weight, Variant::leading_run), kLeadWeight);
  check_triangle(distribution_table(8, kTable, DistributionKind::charge, Variant::leading_run), kLeadCharge);

  const auto t = distribution_table(8, kTable, DistributionKind::charge, Variant::leading_run);
  CHECK(t.at(8, -2) == 4);
  CHECK(t.at(8, 0) == 4);
  CHECK(t.at(8, 2) == 1);
  CHECK(t.at(8, 1) == 0);
  CHECK(t.at(9, 0) == 0);
  for (int n = 0; n <= 8; ++n) CHECK(t.row_sum(n) == count_dklr(n, kTable));

  const auto zero = distribution_table(0, kTable, DistributionKind::weight, Variant::first_one);
  REQUIRE(zero.rows.size() == 1);
  CHECK(zero.rows[0] == std::vector<BigInt>{1});
}

TEST_CASE("triangle TSV layout") {
  const auto t = distribution_table(2, kTable, DistributionKind::charge, Variant::leading_run);
  CHECK(t.to_tsv() ==
        "n\t-2\t-1\t0\t1\t2\n"
        "0\t\t\t1\t\t\n"
        "1\t\t1\t\t1\t\n"
        "2\t1\t\t1\t\t0\n");
  const auto w = distribution_table(1, kTable, DistributionKind::weight, Variant::leading_run);
  CHECK(w.to_tsv() == "n\t0\t1\n0\t1\t\n1\t1\t1\n");
}

TEST_CASE("counters match exhaustive enumeration") {
  for (int d = 0; d <= 3; ++d) {
    for (int k = d; k <= 6; ++k) {
      for (int l = 0; l <= 4; ++l) {
        for (int r = 0; r <= 4; ++r) {
          const Constraints c{d, k, l, r};
          for (int n = 0; n <= 12; ++n) {
            std::map<int, int> hw, hc, fw, fc;
            const auto all = oracle::words(n, {d, k, l, r});
            for (const auto& w : all) {
              ++hw[w.weight];
              ++hc[w.charge];
            }
            if (l == 0) {
              for (const auto& w : oracle::first_one_words(n, {d, k, l, r})) {
                ++fw[w.weight];
                ++fc[w.charge];
              }
            }
            BigInt sum_w = 0, sum_c = 0;
            for (int nu = 0; nu <= n; ++nu) {
              const BigInt v = count_weight(n, nu, c, Variant::leading_run);
              REQUIRE(v == hw[nu]);
              sum_w += v;
              if (l == 0) REQUIRE(count_weight(n, nu, c, Variant::first_one) == fw[nu]);
            }
            for (int sigma = -n; sigma <= n; ++sigma) {
              const BigInt v = count_charge(n, sigma, c, Variant::leading_run);
              REQUIRE(v == hc[sigma]);
              sum_c += v;
              if (l == 0) REQUIRE(count_charge(n, sigma, c, Variant::first_one) == fc[sigma]);
            }
            REQUIRE(sum_w == static_cast<long long>(all.size()));
            REQUIRE(sum_c == sum_w);
            REQUIRE(count_dklr(n, c) == sum_w);
            REQUIRE(count_dklr_convolution(n, c) == sum_w);
          }
        }
      }
    }
  }
}

TEST_CASE("weight bounds") {
  CHECK(weight_bounds(8, kTable).min == 2);
  CHECK(weight_bounds(8, kTable).max == 3);
  CHECK(weight_bounds(0, kTable).min == 0);
  CHECK(weight_bounds(0, kTable).max == 0);
  CHECK(weight_bounds(3, kTable).min == 1);
  CHECK(weight_bounds(3, kTable).max == 1);

  for (int d = 0; d <= 3; ++d) {
    for (int k = d; k <= 6; ++k) {
      for (int l = 0; l <= 4; ++l) {
        for (int r = 0; r <= 4; ++r) {
          const Constraints c{d, k, l, r};
          for (int n = 0; n <= 12; ++n) {
            const auto all = oracle::words(n, {d, k, l, r});
            const auto b = weight_bounds(n, c);
            for (int nu = 0; nu <= n; ++nu) {
              if (nu < b.min || nu > b.max) REQUIRE(count_weight(n, nu, c, Variant::leading_run) == 0);
            }
            if (all.empty()) continue;
            int lo = n, hi = 0;
            for (const auto& w : all) {
              lo = std::min(lo, w.weight);
              hi = std::max(hi, w.weight);
            }
            REQUIRE(lo == b.min);
            REQUIRE(hi == b.max);
          }
        }
      }
    }
  }
}

TEST_CASE("charge bound of dk words") {
  CHECK(charge_bound(8, 2, 4) == 2);
  CHECK(charge_bound(0, 2, 4) == 0);
  // Brute force gives 5 here (word 10000); the formula agrees.
  CHECK(charge_bound(5, 2, 4) == 5);

  for (int d = 0; d <= 3; ++d) {
    for (int k = d; k <= 6; ++k) {
      const Constraints c{d, k, k, k};
      for (int n = 0; n <= 16; ++n) {
        int hi = 0;
        for (const auto& w : oracle::words(n, {d, k, k, k})) hi = std::max(hi, std::abs(w.charge));
        REQUIRE(charge_bound(n, d, k) == hi);
        const int b = charge_bound(n, d, k);
        for (int sigma = -n; sigma <= n; ++sigma) {
          if (std::abs(sigma) > b) REQUIRE(count_charge(n, sigma, c, Variant::leading_run) == 0);
        }
        REQUIRE((count_charge(n, b, c, Variant::leading_run) > 0 ||
                 count_charge(n, -b, c, Variant::leading_run) > 0));
      }
    }
  }
}

TEST_CASE("counts survive cache eviction and concurrent queries") {
  const Constraints c{1, 5, 2, 3};
  const BigInt before = count_charge(60, 0, c, Variant::leading_run);
  const BigInt weight_before = count_weight(60, 20, c, Variant::first_one);
  CountTable::clear_cache();
  CHECK(count_charge(60, 0, c, Variant::leading_run) == before);
  CHECK(count_weight(60, 20, c, Variant::first_one) == weight_before);
  CHECK(before > BigInt(1) << 30);

  CountTable::clear_cache();
  std::vector<std::thread> pool;
  std::vector<BigInt> results(8);
  for (int t = 0; t < 8; ++t) {
    pool.emplace_back([&, t] { results[static_cast<std::size_t>(t)] = count_charge(60, 0, c, Variant::leading_run); });
  }
  for (auto& th : pool) th.join();
  for (const auto& v : results) CHECK(v == before);
}

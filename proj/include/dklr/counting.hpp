#pragma once

#include <memory>
#include <shared_mutex>
#include <string>
#include <utility>
#include <vector>

#include "dklr/core.hpp"

namespace dklr {

/// first_one counts words that begin with a one (l is ignored);
/// leading_run counts words that may open with up to l zeros.
enum class Variant { first_one, leading_run };

/// Memoized A_n^nu and C_n^sigma for one (d, k, r) family.
///
/// Rows are filled bottom-up in n on demand. Leading-run values for any l
/// are sums over stored rows, so a single table serves every l. Lookups
/// take a shared lock; growth takes an exclusive one.
class CountTable {
 public:
  CountTable(int d, int k, int r);

  /// Shared table for (d, k, r), created on first use.
  static std::shared_ptr<const CountTable> get(int d, int k, int r);

  /// Drops every shared table. Later queries rebuild on demand.
  static void clear_cache();

  int d() const { return d_; }
  int k() const { return k_; }
  int r() const { return r_; }

  BigInt weight(int n, int nu) const;
  BigInt charge(int n, int sigma) const;

  /// Leading-run counts with leading limit `l`; the trailing limit is this
  /// table's r. Zero if l < 0.
  BigInt weight_hat(int n, int nu, int l) const;
  BigInt charge_hat(int n, int sigma, int l) const;

 private:
  void ensure(int n) const;
  BigInt weight_locked(int n, int nu) const;
  BigInt charge_locked(int n, int sigma) const;

  int d_, k_, r_;
  mutable std::shared_mutex mutex_;
  mutable std::vector<std::vector<BigInt>> a_;  // a_[n][nu]
  mutable std::vector<std::vector<BigInt>> c_;  // c_[n][(sigma + n) / 2]
};

BigInt count_weight(int n, int nu, const Constraints& c, Variant variant);
BigInt count_charge(int n, int sigma, const Constraints& c, Variant variant);

/// Words starting with a one: sum over nu of A_n^nu (1 for n = 0).
BigInt count_dkr(int n, const Constraints& c);
/// All valid words of length n: sum over nu of the leading-run counts.
BigInt count_dklr(int n, const Constraints& c);
/// count_dklr via sum_{j <= min(n,l)} count_dkr(n - j), with the j = n
/// term replaced by the all-zero indicator [n <= min(l, r)].
BigInt count_dklr_convolution(int n, const Constraints& c);

struct WeightBounds {
  int min = 0;
  int max = 0;
};

/// Weight range of leading-run words of length n. Meaningful only when
/// the codebook is non-empty.
WeightBounds weight_bounds(int n, const Constraints& c);

/// Largest |sigma| over dk words of length n (leading and trailing runs
/// bounded by k).
int charge_bound(int n, int d, int k);

enum class DistributionKind { weight, charge };

/// Rows n = 0..n_max. Weight rows are indexed by nu in [0, n]; charge rows
/// by (sigma + n) / 2 for sigma in {-n, -n+2, ..., n}.
struct DistributionTriangle {
  DistributionKind kind = DistributionKind::weight;
  Variant variant = Variant::first_one;
  int n_max = 0;
  std::vector<std::vector<BigInt>> rows;

  /// Cell value, or zero for (n, payload) outside the triangle.
  BigInt at(int n, int payload) const;
  BigInt row_sum(int n) const;

  /// Header row "n" plus one column per nu (or sigma); cells outside the
  /// triangle or of the wrong parity are left empty.
  std::string to_tsv() const;
};

DistributionTriangle distribution_table(int n_max, const Constraints& c, DistributionKind kind,
                                        Variant variant);

}  // namespace dklr

#include "dklr/counting.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <sstream>
#include <tuple>

namespace dklr {

namespace {

std::mutex registry_mutex;
std::map<std::tuple<int, int, int>, std::shared_ptr<const CountTable>> registry;

bool charge_in_range(int n, int sigma) {
  return n >= 0 && sigma >= -n && sigma <= n && ((n + sigma) % 2 == 0);
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

}  // namespace

CountTable::CountTable(int d, int k, int r) : d_(d), k_(k), r_(r) {
  if (d < 0 || k < d || r < 0) throw DomainError("invalid (d, k, r) for a count table");
}

std::shared_ptr<const CountTable> CountTable::get(int d, int k, int r) {
  std::lock_guard lock(registry_mutex);
  auto& slot = registry[{d, k, r}];
  if (!slot) slot = std::make_shared<CountTable>(d, k, r);
  return slot;
}

void CountTable::clear_cache() {
  std::lock_guard lock(registry_mutex);
  registry.clear();
}

void CountTable::ensure(int n) const {
  {
    std::shared_lock lock(mutex_);
    if (static_cast<int>(a_.size()) > n) return;
  }
  std::unique_lock lock(mutex_);
  for (int m = static_cast<int>(a_.size()); m <= n; ++m) {
    std::vector<BigInt> arow(static_cast<std::size_t>(m) + 1);
    std::vector<BigInt> crow(static_cast<std::size_t>(m) + 1);
    if (m == 0) {
      arow[0] = 1;
      crow[0] = 1;
    } else {
      if (m <= r_ + 1) arow[1] = 1;
      if (m >= d_ + 1) {
        const int top = std::min(m, k_ + 1);
        for (int nu = 2; nu <= m; ++nu) {
          BigInt sum = 0;
          for (int j = d_ + 1; j <= top; ++j) {
            const auto& prev = a_[static_cast<std::size_t>(m - j)];
            if (nu - 1 < static_cast<int>(prev.size())) sum += prev[static_cast<std::size_t>(nu - 1)];
          }
          arow[static_cast<std::size_t>(nu)] = std::move(sum);
        }
      }
      // sigma = -m: a single one followed by m - 1 zeros.
      if (m <= r_ + 1) crow[0] = 1;
      if (m >= d_ + 1) {
        const int top = std::min(m, k_ + 1);
        for (int i = 1; i <= m; ++i) {
          const int sigma = -m + 2 * i;
          BigInt sum = 0;
          for (int j = d_ + 1; j <= top; ++j) {
            const int ns = -sigma - j;
            const int nn = m - j;
            if (charge_in_range(nn, ns)) sum += c_[static_cast<std::size_t>(nn)][static_cast<std::size_t>((ns + nn) / 2)];
          }
          crow[static_cast<std::size_t>(i)] = std::move(sum);
        }
      }
    }
    a_.push_back(std::move(arow));
    c_.push_back(std::move(crow));
  }
}

BigInt CountTable::weight_locked(int n, int nu) const {
  if (n < 0 || nu < 0 || nu > n) return 0;
  return a_[static_cast<std::size_t>(n)][static_cast<std::size_t>(nu)];
}

BigInt CountTable::charge_locked(int n, int sigma) const {
  if (!charge_in_range(n, sigma)) return 0;
  return c_[static_cast<std::size_t>(n)][static_cast<std::size_t>((sigma + n) / 2)];
}

BigInt CountTable::weight(int n, int nu) const {
  if (n < 0) return 0;
  ensure(n);
  std::shared_lock lock(mutex_);
  return weight_locked(n, nu);
}

BigInt CountTable::charge(int n, int sigma) const {
  if (n < 0) return 0;
  ensure(n);
  std::shared_lock lock(mutex_);
  return charge_locked(n, sigma);
}

BigInt CountTable::weight_hat(int n, int nu, int l) const {
  if (n < 0 || nu < 0 || l < 0) return 0;
  if (nu == 0) return n <= std::min(l, r_) ? 1 : 0;
  ensure(n);
  std::shared_lock lock(mutex_);
  BigInt sum = 0;
  for (int j = 0; j <= std::min(n, l); ++j) sum += weight_locked(n - j, nu);
  return sum;
}

BigInt CountTable::charge_hat(int n, int sigma, int l) const {
  if (l < 0 || !charge_in_range(n, sigma)) return 0;
  if (sigma == n) return n <= std::min(l, r_) ? 1 : 0;
  ensure(n);
  std::shared_lock lock(mutex_);
  BigInt sum = 0;
  for (int j = 0; j <= std::min(n, l); ++j) sum += charge_locked(n - j, sigma - j);
  return sum;
}

BigInt count_weight(int n, int nu, const Constraints& c, Variant variant) {
  if (n < 0 || nu < 0) return 0;
  auto table = CountTable::get(c.d, c.k, c.r);
  return variant == Variant::first_one ? table->weight(n, nu) : table->weight_hat(n, nu, c.l);
}

BigInt count_charge(int n, int sigma, const Constraints& c, Variant variant) {
  if (n < 0) return 0;
  auto table = CountTable::get(c.d, c.k, c.r);
  return variant == Variant::first_one ? table->charge(n, sigma) : table->charge_hat(n, sigma, c.l);
}

BigInt count_dkr(int n, const Constraints& c) {
  BigInt sum = 0;
  for (int nu = 0; nu <= n; ++nu) sum += count_weight(n, nu, c, Variant::first_one);
  return sum;
}

BigInt count_dklr(int n, const Constraints& c) {
  BigInt sum = 0;
  for (int nu = 0; nu <= n; ++nu) sum += count_weight(n, nu, c, Variant::leading_run);
  return sum;
}

BigInt count_dklr_convolution(int n, const Constraints& c) {
  if (n < 0) return 0;
  BigInt sum = 0;
  for (int j = 0; j <= std::min(n, c.l); ++j) {
    if (j == n) {
      sum += n <= std::min(c.l, c.r) ? 1 : 0;
    } else {
      sum += count_dkr(n - j, c);
    }
  }
  return sum;
}

WeightBounds weight_bounds(int n, const Constraints& c) {
  if (n < 0) throw DomainError("length must be non-negative");
  WeightBounds b;
  if (n <= std::min(c.l, c.r)) {
    b.min = 0;
  } else if (n <= c.l + c.r + 1) {
    b.min = 1;
  } else {
    b.min = ceil_div(n - c.l - c.r - 1, c.k + 1) + 1;
  }
  b.max = ceil_div(n, c.d + 1);
  return b;
}

int charge_bound(int n, int d, int k) {
  if (n < 0) throw DomainError("length must be non-negative");
  validate(d, k, 0, 0);
  const int period = k + d + 2;
  const int m = n / period;
  const int t = n - m * period;
  if (t <= k + 1) return n - 2 * m * (d + 1);
  return 2 * (m + 1) * (k + 1) - n;
}

BigInt DistributionTriangle::at(int n, int payload) const {
  if (n < 0 || n > n_max) return 0;
  const auto& row = rows[static_cast<std::size_t>(n)];
  if (kind == DistributionKind::weight) {
    if (payload < 0 || payload > n) return 0;
    return row[static_cast<std::size_t>(payload)];
  }
  if (!charge_in_range(n, payload)) return 0;
  return row[static_cast<std::size_t>((payload + n) / 2)];
}

BigInt DistributionTriangle::row_sum(int n) const {
  BigInt sum = 0;
  if (n < 0 || n > n_max) return sum;
  for (const auto& v : rows[static_cast<std::size_t>(n)]) sum += v;
  return sum;
}

std::string DistributionTriangle::to_tsv() const {
  std::ostringstream out;
  const int lo = kind == DistributionKind::weight ? 0 : -n_max;
  out << "n";
  for (int p = lo; p <= n_max; ++p) out << '\t' << p;
  out << '\n';
  for (int n = 0; n <= n_max; ++n) {
    out << n;
    for (int p = lo; p <= n_max; ++p) {
      out << '\t';
      const bool inside = kind == DistributionKind::weight ? p <= n : charge_in_range(n, p);
      if (inside) out << at(n, p);
    }
    out << '\n';
  }
  return out.str();
}

DistributionTriangle distribution_table(int n_max, const Constraints& c, DistributionKind kind,
                                        Variant variant) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  DistributionTriangle t;
  t.kind = kind;
  t.variant = variant;
  t.n_max = n_max;
  t.rows.resize(static_cast<std::size_t>(n_max) + 1);
  for (int n = 0; n <= n_max; ++n) {
    auto& row = t.rows[static_cast<std::size_t>(n)];
    row.reserve(static_cast<std::size_t>(n) + 1);
    for (int i = 0; i <= n; ++i) {
      row.push_back(kind == DistributionKind::weight ? count_weight(n, i, c, variant)
                                                     : count_charge(n, -n + 2 * i, c, variant));
    }
  }
  return t;
}

}  // namespace dklr

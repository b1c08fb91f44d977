#include "dklr/direct.hpp"

#include <algorithm>
#include <memory>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <vector>

namespace dklr {

namespace {

class Pascal {
 public:
  BigInt get(int n, int k) {
    if (n < 0 || k < 0 || k > n) return 0;
    {
      std::shared_lock lock(mutex_);
      if (n < static_cast<int>(rows_.size())) return (*rows_[static_cast<std::size_t>(n)])[static_cast<std::size_t>(k)];
    }
    std::unique_lock lock(mutex_);
    while (static_cast<int>(rows_.size()) <= n) {
      const auto m = rows_.size();
      auto row = std::make_unique<std::vector<BigInt>>(m + 1);
      (*row)[0] = 1;
      (*row)[m] = 1;
      for (std::size_t i = 1; i < m; ++i) (*row)[i] = (*rows_[m - 1])[i - 1] + (*rows_[m - 1])[i];
      rows_.push_back(std::move(row));
    }
    return (*rows_[static_cast<std::size_t>(n)])[static_cast<std::size_t>(k)];
  }

 private:
  std::shared_mutex mutex_;
  std::vector<std::unique_ptr<std::vector<BigInt>>> rows_;
};

Pascal& pascal() {
  static Pascal instance;
  return instance;
}

int ceil_div(int a, int b) { return (a + b - 1) / b; }

int sign(int j) { return j % 2 == 0 ? 1 : -1; }

bool charge_in_range(int n, int sigma) {
  return n >= 0 && sigma >= -n && sigma <= n && ((n + sigma) % 2 == 0);
}

// Offset of a run-length composition of m parts, j of them forced past k.
int run_base(int h, int m, int j, const Constraints& c) {
  return h + m - j - (m - j) * (c.d + 1) - j * (c.k + 1);
}

}  // namespace

BigInt binom(int n, int k) { return pascal().get(n, k); }

BigInt a_direct(int n, int nu, const Constraints& c) {
  if (nu < 1 || n < 1) return 0;
  const int q = c.k - c.d + 1;
  BigInt sum = 0;
  for (int j = 0; j <= nu - 1; ++j) {
    const int base = n - 1 - (nu - 1) * c.d - j * q;
    BigInt term = binom(base, nu - 1) - binom(base - (c.r + 1), nu - 1);
    sum += sign(j) * binom(nu - 1, j) * term;
  }
  return sum;
}

BigInt block_A(int delta, int m, const Constraints& c) {
  if (m < 0) return 0;
  BigInt sum = 0;
  for (int j = 0; j <= m; ++j) {
    const int base = run_base(delta / 2, m, j, c);
    sum += sign(j) * binom(m, j) * (binom(base, m) - binom(base - 1, m));
  }
  return sum;
}

BigInt block_At(int delta, int m, const Constraints& c) {
  if (m < 0) return 0;
  BigInt sum = 0;
  for (int j = 0; j <= m; ++j) {
    const int base = run_base(delta / 2, m, j, c);
    BigInt term = binom(base - 1, m) - binom(base - (c.d + 1), m) + binom(base - 1 - (c.k + 1), m) -
                  binom(base - 1 - (c.r + 1), m);
    sum += sign(j) * binom(m, j) * term;
  }
  return sum;
}

BigInt block_B(int n, int delta, int m, const Constraints& c) {
  if (m < 0) return 0;
  BigInt sum = 0;
  for (int j = 0; j <= m; ++j) {
    const int base = run_base(n - delta / 2, m, j, c);
    sum += sign(j) * binom(m, j) * (binom(base, m) - binom(base - 1 - (c.r + 1), m));
  }
  return sum;
}

BigInt block_Bt(int n, int delta, int m, const Constraints& c) {
  if (m < 0) return 0;
  BigInt sum = 0;
  for (int j = 0; j <= m; ++j) {
    const int base = run_base(n - delta / 2, m, j, c);
    sum += sign(j) * binom(m, j) * (binom(base, m) - binom(base - 1, m));
  }
  return sum;
}

BigInt c_left(int n, int delta, const Constraints& c, int extra_terms) {
  if (n < 0 || delta < 0 || delta % 2 != 0 || delta > 2 * n) return 0;
  const int upper = ceil_div(delta, 2 * (c.d + 1)) + extra_terms;
  BigInt sum = 0;
  for (int m = 0; m <= upper; ++m) {
    sum += block_A(delta, m, c) * block_B(n, delta, m, c);
    sum += block_At(delta, m - 1, c) * block_Bt(n, delta, m, c);
  }
  return sum;
}

BigInt c_right(int n, int delta, const Constraints& c, int extra_terms) {
  if (n < 0 || delta < 0 || delta % 2 != 0 || delta > 2 * n) return 0;
  if (delta == 0) return n == 0 ? 1 : 0;
  const int upper = ceil_div(delta, 2 * (c.d + 1)) + extra_terms;
  BigInt sum = 0;
  for (int m = 0; m <= upper; ++m) {
    sum += block_A(delta, m + 1, c) * block_B(n, delta, m, c);
    sum += block_At(delta, m, c) * block_Bt(n, delta, m, c);
  }
  return sum;
}

BigInt c_direct(int n, int sigma, const Constraints& c) {
  if (!charge_in_range(n, sigma)) return 0;
  return c_left(n, n + sigma, c);
}

BigInt ccs_term(int iota, int n, int sigma, const Constraints& c) {
  if (iota < 1 || iota > 12) throw DomainError("term index must lie in 1..12");
  if (!charge_in_range(n, sigma)) return 0;
  const int d = c.d;
  const int q = c.k - c.d + 1;

  int a = 0;
  switch (iota) {
    case 3: case 4: a = 1; break;
    case 5: case 6: a = -d; break;
    case 9: case 10: a = c.k + 1 - d; break;
    case 11: case 12: a = c.r + 1 - d; break;
    default: a = 0;
  }
  int b = 0;
  if (iota % 2 == 0) b = (iota == 2 || iota == 4) ? c.r + 2 : 1;
  const int f = iota <= 4 ? 0 : 1;

  const int half_plus = (n + sigma) / 2;
  const int half_minus = (n - sigma) / 2;
  const int upper = ceil_div(n + sigma, 2 * (d + 1));
  BigInt total = 0;
  for (int m = 0; m <= upper; ++m) {
    if (m - f < 0) continue;
    BigInt left = 0;
    for (int j = 0; j <= m - f; ++j) {
      left += sign(j) * binom(m - f, j) * binom(half_plus - a - m * d - j * q - f, m - f);
    }
    if (left == 0) continue;
    BigInt right = 0;
    for (int j = 0; j <= m; ++j) {
      right += sign(j) * binom(m, j) * binom(half_minus - b - m * d - j * q, m);
    }
    total += left * right;
  }
  return total;
}

BigInt ccs_sum(int n, int sigma, const Constraints& c) {
  if (!charge_in_range(n, sigma)) return 0;
  BigInt sum = 0;
  for (int iota = 1; iota <= 12; ++iota) sum += sign(iota / 2) * ccs_term(iota, n, sigma, c);
  return sum;
}

BigInt a_hat_direct(int n, int nu, const Constraints& c) {
  if (n < 0 || nu < 0) return 0;
  if (nu == 0) return n <= std::min(c.l, c.r) ? 1 : 0;
  BigInt sum = 0;
  for (int j = 0; j <= std::min(n, c.l); ++j) sum += a_direct(n - j, nu, c);
  return sum;
}

BigInt c_hat_direct(int n, int sigma, const Constraints& c) {
  if (!charge_in_range(n, sigma)) return 0;
  if (sigma == n) return n <= std::min(c.l, c.r) ? 1 : 0;
  BigInt sum = 0;
  for (int j = 0; j <= std::min(n, c.l); ++j) sum += c_direct(n - j, sigma - j, c);
  return sum;
}

}  // namespace dklr

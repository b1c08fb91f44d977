#include "dklr/dcrll.hpp"

#include <algorithm>
#include <array>
#include <mutex>
#include <optional>
#include <string>
#include <unordered_map>

namespace dklr {

namespace {

// (hat, n, sigma, b1, b2, d, k, l, r); l is unused for first-one entries.
using Key = std::array<int, 9>;

struct KeyHash {
  std::size_t operator()(const Key& key) const noexcept {
    std::size_t h = 1469598103934665603ULL;
    for (int v : key) {
      h ^= static_cast<std::size_t>(static_cast<unsigned>(v));
      h *= 1099511628211ULL;
    }
    return h;
  }
};

class DsvMemo {
 public:
  std::optional<BigInt> find(const Key& key) {
    std::lock_guard lock(mutex_);
    auto it = table_.find(key);
    if (it == table_.end()) return std::nullopt;
    return it->second;
  }
  void store(const Key& key, const BigInt& value) {
    std::lock_guard lock(mutex_);
    table_.emplace(key, value);
  }
  void clear() {
    std::lock_guard lock(mutex_);
    table_.clear();
  }

 private:
  std::mutex mutex_;
  std::unordered_map<Key, BigInt, KeyHash> table_;
};

DsvMemo& memo() {
  static DsvMemo instance;
  return instance;
}

bool charge_in_range(int n, int sigma) {
  return n >= 0 && sigma >= -n && sigma <= n && ((n + sigma) % 2 == 0);
}

int nonempty(int n) { return n != 0 ? 1 : 0; }

BigInt first_one(int n, int sigma, int b1, int b2, int d, int k, int r);

BigInt first_one_uncached(int n, int sigma, int b1, int b2, int d, int k, int r) {
  if (-nonempty(n) > b2) return 0;
  if (!charge_in_range(n, sigma)) return 0;
  if (sigma == -n) return n <= std::min(r + 1, -b1) ? 1 : 0;
  if (n < d + 1) return 0;
  BigInt sum = 0;
  const int top = std::min({n, k + 1, -b1});
  for (int j = d + 1; j <= top; ++j) sum += first_one(n - j, -sigma - j, -b2 - j, -b1 - j, d, k, r);
  return sum;
}

BigInt first_one(int n, int sigma, int b1, int b2, int d, int k, int r) {
  if (!charge_in_range(n, sigma)) return 0;
  // Running sums of a length-n word never leave [-n, n].
  b1 = std::max(b1, -n);
  b2 = std::min(b2, n);
  const Key key{0, n, sigma, b1, b2, d, k, 0, r};
  if (auto hit = memo().find(key)) return *hit;
  BigInt value = first_one_uncached(n, sigma, b1, b2, d, k, r);
  memo().store(key, value);
  return value;
}

BigInt leading_run(int n, int sigma, int b1, int b2, int d, int k, int l, int r) {
  if (l < 0 || r < 0) return 0;
  if (!charge_in_range(n, sigma)) return 0;
  b1 = std::max(b1, -n);
  b2 = std::min(b2, n);
  const Key key{1, n, sigma, b1, b2, d, k, l, r};
  if (auto hit = memo().find(key)) return *hit;

  BigInt value = 0;
  if (b1 > nonempty(n)) {
    value = 0;
  } else if (sigma == n) {
    value = n <= std::min({l, r, b2}) ? 1 : 0;
  } else {
    value = first_one(n, sigma, b1, b2, d, k, r);
    const int top = std::min({n, l, b2});
    for (int j = 1; j <= top; ++j) value += first_one(n - j, sigma - j, b1 - j, b2 - j, d, k, r);
  }
  memo().store(key, value);
  return value;
}

void require_charge_mask(const SelectionMask& mask) {
  if (mask.mode() == SelectionMask::Mode::weight) {
    throw DomainError("running-digital-sum bounds support charge or unrestricted masks only");
  }
}

std::vector<int> mask_charges(int n, const SelectionMask& mask) {
  if (mask.mode() == SelectionMask::Mode::charge) return mask.values();
  std::vector<int> all;
  for (int sigma = -n; sigma <= n; sigma += 2) all.push_back(sigma);
  return all;
}

}  // namespace

DsvBounds DsvBounds::make(int b1, int b2) {
  if (b1 > b2) {
    throw DomainError("running-digital-sum bounds need B1 <= B2 (got " + std::to_string(b1) + ", " +
                      std::to_string(b2) + ")");
  }
  return DsvBounds{b1, b2};
}

bool within_bounds(const BitSequence& x, const DsvBounds& bounds) {
  if (x.empty()) return bounds.b1 <= 0 && 0 <= bounds.b2;
  for (int v : stats(x).rds) {
    if (v < bounds.b1 || v > bounds.b2) return false;
  }
  return true;
}

BigInt count_charge_dsv(int n, int sigma, const Constraints& c, const DsvBounds& bounds,
                        Variant variant) {
  DsvBounds::make(bounds.b1, bounds.b2);
  if (n < 0) return 0;
  if (variant == Variant::first_one) return first_one(n, sigma, bounds.b1, bounds.b2, c.d, c.k, c.r);
  return leading_run(n, sigma, bounds.b1, bounds.b2, c.d, c.k, c.l, c.r);
}

void clear_dsv_cache() { memo().clear(); }

BigInt codebook_size_dsv(int n, const Constraints& c, const SelectionMask& mask,
                         const DsvBounds& bounds) {
  if (n < 0) throw DomainError("length must be non-negative");
  require_charge_mask(mask);
  mask.check(n);
  BigInt total = 0;
  for (int sigma : mask_charges(n, mask)) {
    total += count_charge_dsv(n, sigma, c, bounds, Variant::leading_run);
  }
  return total;
}

BigInt prefix_count_dsv(const PrefixState& s, int n, const Constraints& c, const SelectionMask& mask,
                        const DsvBounds& bounds) {
  const bool even = s.weight % 2 == 0;
  const int level = s.charge + (even ? 1 : -1);
  if (level < bounds.b1 || level > bounds.b2) return 0;
  const int lb1 = even ? bounds.b1 - level : level - bounds.b2;
  const int lb2 = even ? bounds.b2 - level : level - bounds.b1;

  BigInt total = 0;
  for (int sigma : mask_charges(n, mask)) {
    const auto lim = suffix_limits(s, c, remainder_forced_zero_by_charge(s, n, sigma));
    if (lim.l < 0 || lim.r < 0) continue;
    total += leading_run(n - s.j, remainder_charge(s, sigma), lb1, lb2, c.d, c.k, lim.l, lim.r);
  }
  return total;
}

BigInt rank_dsv(const BitSequence& x, const Constraints& c, const SelectionMask& mask,
                const DsvBounds& bounds) {
  require_charge_mask(mask);
  const int n = static_cast<int>(x.size());
  mask.check(n);
  DsvBounds::make(bounds.b1, bounds.b2);
  if (!is_valid(x, c)) throw DomainError("sequence " + x.str() + " violates the run-length constraints");
  if (!mask.accepts(stats(x))) throw DomainError("sequence " + x.str() + " is outside the selection mask");
  if (!within_bounds(x, bounds)) {
    throw DomainError("sequence " + x.str() + " leaves the running-digital-sum bounds");
  }
  return cover_rank(x, [&](const PrefixState& s) { return prefix_count_dsv(s, n, c, mask, bounds); });
}

BitSequence unrank_dsv(const BigInt& index, int n, const Constraints& c, const SelectionMask& mask,
                       const DsvBounds& bounds) {
  const BigInt size = codebook_size_dsv(n, c, mask, bounds);
  if (index < 0 || index >= size) {
    throw DomainError("index out of range (size " + size.str() + ")");
  }
  return cover_unrank(index, n,
                      [&](const PrefixState& s) { return prefix_count_dsv(s, n, c, mask, bounds); });
}

}  // namespace dklr

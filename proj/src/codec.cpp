#include "dklr/codec.hpp"

#include <algorithm>
#include <string>

#include "dklr/counting.hpp"

namespace dklr {

namespace {

BigInt weight_term(const PrefixState& s, int n, const Constraints& c, int nu) {
  const int rest = nu - s.weight;
  if (rest < 0) return 0;
  const auto lim = suffix_limits(s, c, remainder_forced_zero_by_weight(s, nu));
  if (lim.l < 0 || lim.r < 0) return 0;
  return CountTable::get(c.d, c.k, lim.r)->weight_hat(n - s.j, rest, lim.l);
}

BigInt charge_term(const PrefixState& s, int n, const Constraints& c, int sigma) {
  const auto lim = suffix_limits(s, c, remainder_forced_zero_by_charge(s, n, sigma));
  if (lim.l < 0 || lim.r < 0) return 0;
  return CountTable::get(c.d, c.k, lim.r)->charge_hat(n - s.j, remainder_charge(s, sigma), lim.l);
}

}  // namespace

SelectionMask::SelectionMask(Mode mode, std::vector<int> values)
    : mode_(mode), values_(std::move(values)) {
  std::sort(values_.begin(), values_.end());
  values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
  if (mode_ != Mode::unrestricted && values_.empty()) {
    throw DomainError("selection mask must enable at least one value");
  }
}

SelectionMask SelectionMask::unrestricted() { return SelectionMask(Mode::unrestricted, {}); }

SelectionMask SelectionMask::weights(std::vector<int> values) {
  return SelectionMask(Mode::weight, std::move(values));
}

SelectionMask SelectionMask::charges(std::vector<int> values) {
  return SelectionMask(Mode::charge, std::move(values));
}

void SelectionMask::check(int n) const {
  for (int v : values_) {
    if (mode_ == Mode::weight && (v < 0 || v > n)) {
      throw DomainError("weight " + std::to_string(v) + " outside [0, " + std::to_string(n) + "]");
    }
    if (mode_ == Mode::charge) {
      if (v < -n || v > n) {
        throw DomainError("charge " + std::to_string(v) + " outside [-" + std::to_string(n) + ", " +
                          std::to_string(n) + "]");
      }
      if ((n + v) % 2 != 0) {
        throw DomainError("charge " + std::to_string(v) + " has the wrong parity for n = " +
                          std::to_string(n));
      }
    }
  }
}

bool SelectionMask::accepts(const SequenceStats& s) const {
  switch (mode_) {
    case Mode::unrestricted: return true;
    case Mode::weight: return std::binary_search(values_.begin(), values_.end(), s.weight);
    case Mode::charge: return std::binary_search(values_.begin(), values_.end(), s.charge);
  }
  return false;
}

SuffixLimits suffix_limits(const PrefixState& s, const Constraints& c, bool forced_zero) {
  SuffixLimits lim;
  lim.l = (s.weight == 0 ? c.l : c.k) - s.a;
  lim.r = c.r;
  if (forced_zero) {
    lim.r = (s.weight == 0 ? std::min(c.l, c.r) : c.r) - s.a;
    if (s.weight != 0) lim.l = lim.r;
  }
  return lim;
}

void PrefixState::push(bool bit) {
  if (bit) {
    a = 1;
    ++weight;
  } else {
    ++a;
  }
  charge += weight % 2 == 0 ? 1 : -1;
  ++j;
}

bool remainder_forced_zero_by_weight(const PrefixState& s, int nu) { return nu == s.weight; }

int remainder_charge(const PrefixState& s, int sigma) {
  return (s.weight % 2 == 0 ? 1 : -1) * (sigma - s.charge) - 1;
}

bool remainder_forced_zero_by_charge(const PrefixState& s, int n, int sigma) {
  return remainder_charge(s, sigma) == n - s.j;
}

BigInt prefix_count(const PrefixState& s, int n, const Constraints& c, const SelectionMask& mask) {
  BigInt total = 0;
  switch (mask.mode()) {
    case SelectionMask::Mode::unrestricted:
      for (int nu = s.weight; nu <= s.weight + (n - s.j); ++nu) total += weight_term(s, n, c, nu);
      break;
    case SelectionMask::Mode::weight:
      for (int nu : mask.values()) total += weight_term(s, n, c, nu);
      break;
    case SelectionMask::Mode::charge:
      for (int sigma : mask.values()) total += charge_term(s, n, c, sigma);
      break;
  }
  return total;
}

BigInt codebook_size(int n, const Constraints& c, const SelectionMask& mask) {
  if (n < 0) throw DomainError("length must be non-negative");
  mask.check(n);
  switch (mask.mode()) {
    case SelectionMask::Mode::unrestricted: return count_dklr(n, c);
    case SelectionMask::Mode::weight: {
      BigInt total = 0;
      for (int nu : mask.values()) total += count_weight(n, nu, c, Variant::leading_run);
      return total;
    }
    case SelectionMask::Mode::charge: {
      BigInt total = 0;
      for (int sigma : mask.values()) total += count_charge(n, sigma, c, Variant::leading_run);
      return total;
    }
  }
  return 0;
}

BigInt cover_rank(const BitSequence& x, const PrefixCounter& weigh) {
  BigInt index = 0;
  PrefixState s;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) index += weigh(s);
    s.push(x[i]);
  }
  return index;
}

BitSequence cover_unrank(BigInt index, int n, const PrefixCounter& weigh) {
  std::vector<std::uint8_t> bits;
  bits.reserve(static_cast<std::size_t>(n));
  PrefixState s;
  for (int j = 1; j <= n; ++j) {
    const BigInt w = weigh(s);
    const bool bit = index >= w;
    if (bit) index -= w;
    bits.push_back(bit ? 1 : 0);
    s.push(bit);
  }
  return BitSequence(std::move(bits));
}

BigInt rank(const BitSequence& x, const Constraints& c, const SelectionMask& mask) {
  const int n = static_cast<int>(x.size());
  mask.check(n);
  if (!is_valid(x, c)) throw DomainError("sequence " + x.str() + " violates the run-length constraints");
  if (!mask.accepts(stats(x))) throw DomainError("sequence " + x.str() + " is outside the selection mask");
  return cover_rank(x, [&](const PrefixState& s) { return prefix_count(s, n, c, mask); });
}

BitSequence unrank(const BigInt& index, int n, const Constraints& c, const SelectionMask& mask) {
  const BigInt size = codebook_size(n, c, mask);
  if (index < 0 || index >= size) {
    throw DomainError("index out of range (size " + size.str() + ")");
  }
  return cover_unrank(index, n, [&](const PrefixState& s) { return prefix_count(s, n, c, mask); });
}

}  // namespace dklr

#include "dklr/core.hpp"

#include <algorithm>
#include <string>

namespace dklr {

Constraints validate(int d, int k, int l, int r) {
  if (d < 0 || k < 0 || l < 0 || r < 0) {
    throw DomainError("constraints must be non-negative (d=" + std::to_string(d) +
                      ", k=" + std::to_string(k) + ", l=" + std::to_string(l) +
                      ", r=" + std::to_string(r) + ")");
  }
  if (k < d) {
    throw DomainError("constraint k must be >= d (d=" + std::to_string(d) +
                      ", k=" + std::to_string(k) + ")");
  }
  return Constraints{d, k, l, r};
}

BitSequence::BitSequence(std::vector<std::uint8_t> bits) : bits_(std::move(bits)) {
  for (auto b : bits_) {
    if (b > 1) throw DomainError("bit values must be 0 or 1");
  }
}

BitSequence BitSequence::parse(std::string_view text) {
  std::vector<std::uint8_t> bits;
  bits.reserve(text.size());
  for (char ch : text) {
    if (ch != '0' && ch != '1') {
      throw DomainError("sequence must contain only '0' and '1': \"" + std::string(text) + "\"");
    }
    bits.push_back(static_cast<std::uint8_t>(ch - '0'));
  }
  return BitSequence(std::move(bits));
}

int BitSequence::weight() const {
  return static_cast<int>(std::count(bits_.begin(), bits_.end(), std::uint8_t{1}));
}

std::string BitSequence::str() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto b : bits_) out.push_back(b ? '1' : '0');
  return out;
}

int BipolarSequence::sum() const {
  int s = 0;
  for (int z : symbols_) s += z;
  return s;
}

std::string BipolarSequence::str() const {
  std::string out;
  out.reserve(symbols_.size());
  for (int z : symbols_) out.push_back(z > 0 ? '+' : '-');
  return out;
}

bool is_valid(const BitSequence& x, const Constraints& c) {
  const int n = static_cast<int>(x.size());
  int run = 0;
  bool seen_one = false;
  for (int i = 0; i < n; ++i) {
    if (!x[i]) {
      ++run;
      continue;
    }
    if (!seen_one) {
      if (run > c.l) return false;
      seen_one = true;
    } else if (run < c.d || run > c.k) {
      return false;
    }
    run = 0;
  }
  if (!seen_one) return n <= std::min(c.l, c.r);
  return run <= c.r;
}

BipolarSequence nrzi(const BitSequence& x) {
  std::vector<int> z;
  z.reserve(x.size());
  int level = 1;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) level = -level;
    z.push_back(level);
  }
  return BipolarSequence(std::move(z));
}

SequenceStats stats(const BitSequence& x) {
  SequenceStats s;
  s.rds.reserve(x.size());
  int sigma = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i]) ++s.weight;
    sigma += (s.weight % 2 == 0) ? 1 : -1;
    s.rds.push_back(sigma);
  }
  s.charge = sigma;
  return s;
}

std::vector<BitSequence> enumerate_all(int n, const Constraints& c, int limit) {
  if (n < 0) throw DomainError("length must be non-negative");
  if (n > limit) {
    throw DomainError("exhaustive enumeration limited to n <= " + std::to_string(limit) +
                      " (got " + std::to_string(n) + ")");
  }
  std::vector<BitSequence> out;
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<std::uint8_t> bits(static_cast<std::size_t>(n));
  for (std::uint64_t word = 0; word < total; ++word) {
    // x_1 is the most significant bit, so counting upward is lexicographic.
    for (int i = 0; i < n; ++i) {
      bits[static_cast<std::size_t>(i)] = static_cast<std::uint8_t>((word >> (n - 1 - i)) & 1U);
    }
    BitSequence candidate(bits);
    if (is_valid(candidate, c)) out.push_back(std::move(candidate));
  }
  return out;
}

BitSequence peak_shift(const BitSequence& x, int one_ordinal, ShiftDirection direction) {
  if (one_ordinal < 1) throw DomainError("one ordinal is 1-based");
  const int n = static_cast<int>(x.size());
  int seen = 0;
  int pos = -1;
  for (int i = 0; i < n; ++i) {
    if (x[i] && ++seen == one_ordinal) {
      pos = i;
      break;
    }
  }
  if (pos < 0) {
    throw DomainError("sequence has no one with ordinal " + std::to_string(one_ordinal));
  }
  const int target = direction == ShiftDirection::left ? pos - 1 : pos + 1;
  if (target < 0 || target >= n) throw DomainError("peak shift leaves the word");
  if (x[target]) throw DomainError("peak shift collides with another one");

  std::vector<std::uint8_t> bits(x.bits().begin(), x.bits().end());
  bits[static_cast<std::size_t>(pos)] = 0;
  bits[static_cast<std::size_t>(target)] = 1;
  return BitSequence(std::move(bits));
}

}  // namespace dklr

#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace dklr {

/// Exact counts and ranks. Counters grow exponentially with length.
using BigInt = boost::multiprecision::cpp_int;

/// Raised when an argument lies outside the documented domain.
class DomainError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Run-length limits on zeros: internal runs in [d, k], leading run <= l,
/// trailing run <= r.
struct Constraints {
  int d = 0;
  int k = 0;
  int l = 0;
  int r = 0;

  friend bool operator==(const Constraints&, const Constraints&) = default;
};

/// Checks d >= 0, k >= d, l >= 0, r >= 0.
Constraints validate(int d, int k, int l, int r);

/// A finite binary word x_1..x_n stored one bit per element.
class BitSequence {
 public:
  BitSequence() = default;
  explicit BitSequence(std::vector<std::uint8_t> bits);

  /// Parses a '0'/'1' string, x_1 first.
  static BitSequence parse(std::string_view text);

  std::size_t size() const { return bits_.size(); }
  bool empty() const { return bits_.empty(); }
  bool operator[](std::size_t i) const { return bits_[i] != 0; }
  std::span<const std::uint8_t> bits() const { return bits_; }

  int weight() const;
  std::string str() const;

  // Lexicographic with 0 < 1.
  friend auto operator<=>(const BitSequence&, const BitSequence&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

/// NRZI image of a BitSequence; symbols are -1 or +1.
class BipolarSequence {
 public:
  BipolarSequence() = default;
  explicit BipolarSequence(std::vector<int> symbols) : symbols_(std::move(symbols)) {}

  std::size_t size() const { return symbols_.size(); }
  int operator[](std::size_t i) const { return symbols_[i]; }
  std::span<const int> symbols() const { return symbols_; }
  int sum() const;

  /// Renders as a string of '+' and '-'.
  std::string str() const;

  friend bool operator==(const BipolarSequence&, const BipolarSequence&) = default;

 private:
  std::vector<int> symbols_;
};

struct SequenceStats {
  int weight = 0;
  int charge = 0;
  std::vector<int> rds;  // prefix charges sigma_1..sigma_n
};

bool is_valid(const BitSequence& x, const Constraints& c);

/// z_j = z_{j-1} on a zero, -z_{j-1} on a one, starting from z_0 = +1.
BipolarSequence nrzi(const BitSequence& x);

SequenceStats stats(const BitSequence& x);

inline constexpr int kDefaultOracleLimit = 26;

/// Every valid word of length n in lexicographic order, by exhaustive scan.
/// Throws DomainError when n exceeds `limit`.
std::vector<BitSequence> enumerate_all(int n, const Constraints& c,
                                       int limit = kDefaultOracleLimit);

enum class ShiftDirection { left, right };

/// Moves the `one_ordinal`-th one (1-based) by one position.
/// Throws DomainError if there is no such one, the move leaves the word,
/// or the target cell already holds a one.
BitSequence peak_shift(const BitSequence& x, int one_ordinal, ShiftDirection direction);

}  // namespace dklr

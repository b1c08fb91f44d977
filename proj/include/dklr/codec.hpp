#pragma once

#include <functional>
#include <vector>

#include "dklr/core.hpp"

namespace dklr {

/// Chooses which weights or charges belong to the enumerated codebook.
class SelectionMask {
 public:
  enum class Mode { unrestricted, weight, charge };

  static SelectionMask unrestricted();
  static SelectionMask weights(std::vector<int> values);
  static SelectionMask charges(std::vector<int> values);

  Mode mode() const { return mode_; }
  /// Enabled weights or charges, sorted and deduplicated. Empty when
  /// unrestricted.
  const std::vector<int>& values() const { return values_; }

  /// Throws DomainError unless every value is admissible for length n.
  void check(int n) const;
  bool accepts(const SequenceStats& s) const;

 private:
  SelectionMask(Mode mode, std::vector<int> values);

  Mode mode_ = Mode::unrestricted;
  std::vector<int> values_;
};

/// Scan state before bit j is decided. `a` counts the trailing zeros of the
/// prefix x_1..x_{j-1} with a hypothetical zero appended at j.
struct PrefixState {
  int j = 1;
  int a = 1;
  int weight = 0;  // nu_{j-1}
  int charge = 0;  // sigma_{j-1}

  /// Advances past bit x_j.
  void push(bool bit);
};

/// True iff a completion of the prefix followed by a zero at j must be all
/// zeros to reach total weight nu.
bool remainder_forced_zero_by_weight(const PrefixState& s, int nu);
/// Same question phrased through the charge the suffix must carry.
bool remainder_forced_zero_by_charge(const PrefixState& s, int n, int sigma);
/// Charge the n - j symbols after position j must carry, in their own
/// frame, for the whole word to reach sigma when x_j = 0.
int remainder_charge(const PrefixState& s, int sigma);

/// Leading and trailing zero-run limits (l_j, r_j) for the n - j symbols
/// after a zero at position j. Either may be negative, meaning no suffix
/// fits.
struct SuffixLimits {
  int l = 0;
  int r = 0;
};

/// When the suffix must be all zeros behind a one, the trailing limit is
/// the binding one and l_j is set equal to r_j.
SuffixLimits suffix_limits(const PrefixState& s, const Constraints& c, bool forced_zero);

/// Number of codebook words that extend the prefix with a zero at j.
BigInt prefix_count(const PrefixState& s, int n, const Constraints& c, const SelectionMask& mask);

BigInt codebook_size(int n, const Constraints& c, const SelectionMask& mask);

/// Lexicographic index of x within the masked codebook.
BigInt rank(const BitSequence& x, const Constraints& c, const SelectionMask& mask);
/// Inverse of rank. Throws DomainError "index out of range (size S)".
BitSequence unrank(const BigInt& index, int n, const Constraints& c, const SelectionMask& mask);

/// Prefix weigher W(state) used by the generic enumerative scan.
using PrefixCounter = std::function<BigInt(const PrefixState&)>;

/// N(x) = sum_j x_j W(prefix_j). No validity checks.
BigInt cover_rank(const BitSequence& x, const PrefixCounter& weigh);
/// Greedy inverse: emit 1 and subtract W whenever index >= W.
BitSequence cover_unrank(BigInt index, int n, const PrefixCounter& weigh);

}  // namespace dklr

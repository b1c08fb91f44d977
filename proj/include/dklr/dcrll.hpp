#pragma once

#include "dklr/codec.hpp"
#include "dklr/core.hpp"
#include "dklr/counting.hpp"

namespace dklr {

/// Admitted running-digital-sum range [B1, B2].
struct DsvBounds {
  int b1 = 0;
  int b2 = 0;

  /// Throws DomainError unless b1 <= b2.
  static DsvBounds make(int b1, int b2);
};

/// True iff every prefix charge of x lies in [b1, b2]. The empty word
/// is accepted iff b1 <= 0 <= b2.
bool within_bounds(const BitSequence& x, const DsvBounds& bounds);

/// Words of charge sigma whose running digital sum stays inside bounds.
/// Internal recursion frames may carry b1 > b2; only the public entry
/// enforces ordering.
BigInt count_charge_dsv(int n, int sigma, const Constraints& c, const DsvBounds& bounds,
                        Variant variant);

/// Drops the memo used by count_charge_dsv.
void clear_dsv_cache();

/// Codebook of words inside bounds, restricted by a charge or
/// unrestricted mask. Weight masks are rejected.
BigInt codebook_size_dsv(int n, const Constraints& c, const SelectionMask& mask,
                         const DsvBounds& bounds);
BigInt prefix_count_dsv(const PrefixState& s, int n, const Constraints& c, const SelectionMask& mask,
                        const DsvBounds& bounds);
BigInt rank_dsv(const BitSequence& x, const Constraints& c, const SelectionMask& mask,
                const DsvBounds& bounds);
BitSequence unrank_dsv(const BigInt& index, int n, const Constraints& c, const SelectionMask& mask,
                       const DsvBounds& bounds);

}  // namespace dklr

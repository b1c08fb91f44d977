#pragma once

#include "dklr/core.hpp"

namespace dklr {

/// Binomial coefficient, zero whenever n < 0, k < 0 or k > n.
/// Backed by a shared, lazily grown Pascal triangle.
BigInt binom(int n, int k);

/// Closed-form A_n^nu (first-one variant) as an alternating binomial sum.
BigInt a_direct(int n, int nu, const Constraints& c);

// Building blocks of the slanting-row charge formulas. delta is the even
// offset from -n, m the row index. block_At(delta, -1, c) is 0.
BigInt block_A(int delta, int m, const Constraints& c);
BigInt block_At(int delta, int m, const Constraints& c);
BigInt block_B(int n, int delta, int m, const Constraints& c);
BigInt block_Bt(int n, int delta, int m, const Constraints& c);

/// C_n^{-n+delta}. `extra_terms` extends the m-sum past its natural upper
/// limit; the added terms vanish.
BigInt c_left(int n, int delta, const Constraints& c, int extra_terms = 0);
/// C_n^{n-delta} for delta > 0.
BigInt c_right(int n, int delta, const Constraints& c, int extra_terms = 0);

/// C_n^sigma through c_left with delta = n + sigma; 0 off parity or range.
BigInt c_direct(int n, int sigma, const Constraints& c);

/// One of the twelve terms (iota in 1..12) whose signed sum
/// sum_iota (-1)^floor(iota/2) ccs_term(iota, ...) equals C_n^sigma.
BigInt ccs_term(int iota, int n, int sigma, const Constraints& c);
BigInt ccs_sum(int n, int sigma, const Constraints& c);

/// Leading-run counts built from a_direct / c_direct by summing over the
/// leading zero run.
BigInt a_hat_direct(int n, int nu, const Constraints& c);
BigInt c_hat_direct(int n, int sigma, const Constraints& c);

}  // namespace dklr

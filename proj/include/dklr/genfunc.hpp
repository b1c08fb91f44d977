#pragma once

#include <complex>
#include <string>
#include <vector>

#include "dklr/core.hpp"
#include "dklr/counting.hpp"

namespace dklr {

/// Integer polynomial in t and y, stored densely as coeff[i][j] for t^i y^j.
class Poly {
 public:
  Poly() = default;

  static Poly constant(const BigInt& value);
  /// value * t^i * y^j
  static Poly monomial(const BigInt& value, int i, int j = 0);

  int degree_t() const { return static_cast<int>(coeff_.size()) - 1; }
  int degree_y() const;
  BigInt at(int i, int j = 0) const;
  bool is_zero() const { return coeff_.empty(); }

  Poly operator+(const Poly& other) const;
  Poly operator-(const Poly& other) const;
  Poly operator*(const Poly& other) const;
  Poly pow(int e) const;

  friend bool operator==(const Poly&, const Poly&) = default;

 private:
  void add(const BigInt& value, int i, int j);
  void trim();

  std::vector<std::vector<BigInt>> coeff_;
};

/// numerator / denominator as a formal power series at the origin.
struct RationalGF {
  Poly numerator;
  Poly denominator;
};

/// Truncated power series in one variable (t) or two (t, y).
/// Truncation is rectangular: exponents 0..order_t and 0..order_y.
class Series {
 public:
  Series(std::vector<std::string> variables, int order_t, int order_y = 0);

  const std::vector<std::string>& variables() const { return variables_; }
  int order_t() const { return order_t_; }
  int order_y() const { return order_y_; }

  /// Zero for exponents beyond the truncation orders.
  BigInt at(int i, int j = 0) const;
  void set(int i, int j, BigInt value);

 private:
  std::vector<std::string> variables_;
  int order_t_;
  int order_y_;
  std::vector<std::vector<BigInt>> coeff_;
};

/// Exact Taylor expansion by long division. Throws DomainError if the
/// denominator has a zero constant term or if a coefficient is not an
/// integer.
Series expand(const RationalGF& gf, int order_t, int order_y = 0);

/// y t (1 - t^{r+1}) / (1 - t - y t^{d+1} + y t^{k+2}).
RationalGF gf_A(const Constraints& c);
/// t^{nu+(nu-1)d} (1 - t^{r+1}) (1 - t^q)^{nu-1} / (1 - t)^nu, q = k - d + 1.
RationalGF gf_A_nu(int nu, const Constraints& c);
/// t (1 - t^{r+1}) / (1 - t - t^{d+1} + t^{k+2}).
RationalGF gf_dkr(const Constraints& c);

struct ResidueResult {
  double value = 0.0;
  /// Set when the residue sum was not applicable and the exact polynomial
  /// sum was used instead.
  bool fallback = false;
  std::string note;
};

/// A_n(y) = sum_{nu >= 1} A_n^nu y^nu through the residues at the roots of
/// 1 - tau - y tau^{d+1} + y tau^{k+2}.
ResidueResult eval_A_n_residue(int n, double y, const Constraints& c);

/// Exact sum_{nu >= 1} A_n^nu y^nu in floating point.
double eval_A_n_exact(int n, double y, const Constraints& c);

/// All roots of the polynomial with coefficients coeffs[i] for z^i, by
/// Aberth iteration. Throws std::runtime_error if it does not converge.
std::vector<std::complex<long double>> polynomial_roots(const std::vector<long double>& coeffs,
                                                        long double tolerance = 1e-12L);

/// Coefficients C_n^sigma for n = 0..n_max, indexed by n.
Series series_C_sigma(int sigma, int n_max, const Constraints& c,
                      Variant variant = Variant::first_one);

}  // namespace dklr

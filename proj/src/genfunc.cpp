#include "dklr/genfunc.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace dklr {

using cplx = std::complex<long double>;

Poly Poly::constant(const BigInt& value) { return monomial(value, 0, 0); }

Poly Poly::monomial(const BigInt& value, int i, int j) {
  if (i < 0 || j < 0) throw DomainError("polynomial exponents must be non-negative");
  Poly p;
  p.add(value, i, j);
  p.trim();
  return p;
}

int Poly::degree_y() const {
  int deg = -1;
  for (const auto& row : coeff_) deg = std::max(deg, static_cast<int>(row.size()) - 1);
  return deg;
}

BigInt Poly::at(int i, int j) const {
  if (i < 0 || j < 0 || i >= static_cast<int>(coeff_.size())) return 0;
  const auto& row = coeff_[static_cast<std::size_t>(i)];
  if (j >= static_cast<int>(row.size())) return 0;
  return row[static_cast<std::size_t>(j)];
}

void Poly::add(const BigInt& value, int i, int j) {
  if (coeff_.size() <= static_cast<std::size_t>(i)) coeff_.resize(static_cast<std::size_t>(i) + 1);
  auto& row = coeff_[static_cast<std::size_t>(i)];
  if (row.size() <= static_cast<std::size_t>(j)) row.resize(static_cast<std::size_t>(j) + 1);
  row[static_cast<std::size_t>(j)] += value;
}

void Poly::trim() {
  for (auto& row : coeff_) {
    while (!row.empty() && row.back() == 0) row.pop_back();
  }
  while (!coeff_.empty() && coeff_.back().empty()) coeff_.pop_back();
}

Poly Poly::operator+(const Poly& other) const {
  Poly out = *this;
  for (std::size_t i = 0; i < other.coeff_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeff_[i].size(); ++j) {
      out.add(other.coeff_[i][j], static_cast<int>(i), static_cast<int>(j));
    }
  }
  out.trim();
  return out;
}

Poly Poly::operator-(const Poly& other) const {
  Poly out = *this;
  for (std::size_t i = 0; i < other.coeff_.size(); ++i) {
    for (std::size_t j = 0; j < other.coeff_[i].size(); ++j) {
      out.add(-other.coeff_[i][j], static_cast<int>(i), static_cast<int>(j));
    }
  }
  out.trim();
  return out;
}

Poly Poly::operator*(const Poly& other) const {
  Poly out;
  for (std::size_t i1 = 0; i1 < coeff_.size(); ++i1) {
    for (std::size_t j1 = 0; j1 < coeff_[i1].size(); ++j1) {
      if (coeff_[i1][j1] == 0) continue;
      for (std::size_t i2 = 0; i2 < other.coeff_.size(); ++i2) {
        for (std::size_t j2 = 0; j2 < other.coeff_[i2].size(); ++j2) {
          if (other.coeff_[i2][j2] == 0) continue;
          out.add(coeff_[i1][j1] * other.coeff_[i2][j2], static_cast<int>(i1 + i2),
                  static_cast<int>(j1 + j2));
        }
      }
    }
  }
  out.trim();
  return out;
}

Poly Poly::pow(int e) const {
  if (e < 0) throw DomainError("polynomial power must be non-negative");
  Poly out = constant(1);
  Poly base = *this;
  while (e > 0) {
    if (e & 1) out = out * base;
    e >>= 1;
    if (e > 0) base = base * base;
  }
  return out;
}

Series::Series(std::vector<std::string> variables, int order_t, int order_y)
    : variables_(std::move(variables)), order_t_(order_t), order_y_(order_y) {
  if (variables_.empty() || variables_.size() > 2) throw DomainError("series take one or two variables");
  if (order_t < 0 || order_y < 0) throw DomainError("truncation orders must be non-negative");
  coeff_.assign(static_cast<std::size_t>(order_t) + 1,
                std::vector<BigInt>(static_cast<std::size_t>(order_y) + 1));
}

BigInt Series::at(int i, int j) const {
  if (i < 0 || j < 0 || i > order_t_ || j > order_y_) return 0;
  return coeff_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
}

void Series::set(int i, int j, BigInt value) {
  if (i < 0 || j < 0 || i > order_t_ || j > order_y_) throw DomainError("exponent beyond truncation order");
  coeff_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = std::move(value);
}

Series expand(const RationalGF& gf, int order_t, int order_y) {
  const BigInt lead = gf.denominator.at(0, 0);
  if (lead == 0) throw DomainError("denominator has a zero constant term");
  const bool bivariate = gf.numerator.degree_y() > 0 || gf.denominator.degree_y() > 0 || order_y > 0;
  Series s(bivariate ? std::vector<std::string>{"t", "y"} : std::vector<std::string>{"t"}, order_t,
           order_y);
  const int den_t = gf.denominator.degree_t();
  const int den_y = gf.denominator.degree_y();
  for (int i = 0; i <= order_t; ++i) {
    for (int j = 0; j <= order_y; ++j) {
      BigInt acc = gf.numerator.at(i, j);
      for (int a = 0; a <= std::min(i, den_t); ++a) {
        for (int b = 0; b <= std::min(j, den_y); ++b) {
          if (a == 0 && b == 0) continue;
          const BigInt dab = gf.denominator.at(a, b);
          if (dab != 0) acc -= dab * s.at(i - a, j - b);
        }
      }
      if (acc % lead != 0) throw DomainError("series coefficient is not an integer");
      s.set(i, j, acc / lead);
    }
  }
  return s;
}

RationalGF gf_A(const Constraints& c) {
  const Poly num = Poly::monomial(1, 1, 1) - Poly::monomial(1, c.r + 2, 1);
  const Poly den = Poly::constant(1) - Poly::monomial(1, 1) - Poly::monomial(1, c.d + 1, 1) +
                   Poly::monomial(1, c.k + 2, 1);
  return {num, den};
}

RationalGF gf_A_nu(int nu, const Constraints& c) {
  if (nu < 1) throw DomainError("weight must be at least 1");
  const int q = c.k - c.d + 1;
  const Poly one = Poly::constant(1);
  const Poly num = Poly::monomial(1, nu + (nu - 1) * c.d) * (one - Poly::monomial(1, c.r + 1)) *
                   (one - Poly::monomial(1, q)).pow(nu - 1);
  const Poly den = (one - Poly::monomial(1, 1)).pow(nu);
  return {num, den};
}

RationalGF gf_dkr(const Constraints& c) {
  const Poly num = Poly::monomial(1, 1) - Poly::monomial(1, c.r + 2);
  const Poly den = Poly::constant(1) - Poly::monomial(1, 1) - Poly::monomial(1, c.d + 1) +
                   Poly::monomial(1, c.k + 2);
  return {num, den};
}

std::vector<cplx> polynomial_roots(const std::vector<long double>& coeffs, long double tolerance) {
  std::vector<long double> p = coeffs;
  while (!p.empty() && p.back() == 0.0L) p.pop_back();
  if (p.size() < 2) return {};
  const int deg = static_cast<int>(p.size()) - 1;

  // Monic coefficients for the Cauchy radius and the initial circle.
  long double radius = 0.0L;
  for (int i = 0; i < deg; ++i) radius = std::max(radius, std::fabs(p[static_cast<std::size_t>(i)] / p.back()));
  radius = 1.0L + radius;
  std::vector<cplx> z(static_cast<std::size_t>(deg));
  for (int i = 0; i < deg; ++i) {
    const long double angle = 2.0L * std::numbers::pi_v<long double> * i / deg + 0.4L;
    z[static_cast<std::size_t>(i)] = std::polar(0.5L * radius, angle);
  }

  auto eval = [&](cplx x, cplx& value, cplx& deriv) {
    value = p.back();
    deriv = 0.0L;
    for (int i = deg - 1; i >= 0; --i) {
      deriv = deriv * x + value;
      value = value * x + p[static_cast<std::size_t>(i)];
    }
  };

  constexpr int kMaxIterations = 2000;
  for (int iter = 0; iter < kMaxIterations; ++iter) {
    long double largest_step = 0.0L;
    for (int i = 0; i < deg; ++i) {
      auto& zi = z[static_cast<std::size_t>(i)];
      cplx value, deriv;
      eval(zi, value, deriv);
      if (value == cplx(0.0L)) continue;
      const cplx ratio = value / deriv;
      cplx repulsion = 0.0L;
      for (int m = 0; m < deg; ++m) {
        if (m != i) repulsion += 1.0L / (zi - z[static_cast<std::size_t>(m)]);
      }
      const cplx step = ratio / (1.0L - ratio * repulsion);
      zi -= step;
      largest_step = std::max(largest_step, std::abs(step) / (1.0L + std::abs(zi)));
    }
    if (largest_step < tolerance) return z;
  }
  throw std::runtime_error("root finder did not converge");
}

double eval_A_n_exact(int n, double y, const Constraints& c) {
  long double sum = 0.0L;
  auto table = CountTable::get(c.d, c.k, c.r);
  for (int nu = n; nu >= 1; --nu) {
    sum = (sum + table->weight(n, nu).convert_to<long double>()) * y;
  }
  return static_cast<double>(sum);
}

ResidueResult eval_A_n_residue(int n, double y, const Constraints& c) {
  if (n < 0) throw DomainError("length must be non-negative");
  if (y == 0.0) throw DomainError("residue evaluation needs y != 0");
  ResidueResult result;
  if (n == 0) return result;

  if (n < c.r - c.k + 1) {
    result.value = eval_A_n_exact(n, y, c);
    result.fallback = true;
    result.note = "residue at infinity is nonzero for n < r - k + 1; used exact summation";
    return result;
  }

  std::vector<long double> coeffs(static_cast<std::size_t>(c.k) + 3, 0.0L);
  coeffs[0] += 1.0L;
  coeffs[1] -= 1.0L;
  coeffs[static_cast<std::size_t>(c.d) + 1] -= y;
  coeffs[static_cast<std::size_t>(c.k) + 2] += y;
  const auto roots = polynomial_roots(coeffs);

  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t m = i + 1; m < roots.size(); ++m) {
      if (std::abs(roots[i] - roots[m]) < 1e-8L) {
        result.value = eval_A_n_exact(n, y, c);
        result.fallback = true;
        result.note = "near-degenerate roots; used exact summation";
        return result;
      }
    }
  }

  cplx sum = 0.0L;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    const cplx tau = roots[i];
    cplx denom = std::pow(tau, n);
    for (std::size_t m = 0; m < roots.size(); ++m) {
      if (m != i) denom *= tau - roots[m];
    }
    sum += (std::pow(tau, c.r + 1) - 1.0L) / denom;
  }
  result.value = static_cast<double>(sum.real());
  return result;
}

Series series_C_sigma(int sigma, int n_max, const Constraints& c, Variant variant) {
  if (n_max < 0) throw DomainError("n_max must be non-negative");
  Series s({"t"}, n_max);
  for (int n = 0; n <= n_max; ++n) s.set(n, 0, count_charge(n, sigma, c, variant));
  return s;
}

}  // namespace dklr

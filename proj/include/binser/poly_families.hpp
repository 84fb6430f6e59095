#pragma once

// Exact polynomial and number families built on the Stirling tables:
// exponential polynomials phi_m, geometric polynomials omega_m, Bernoulli
// and poly-Bernoulli numbers/polynomials, Euler numbers/polynomials.
//
// Bernoulli convention: B_1 = -1/2.  This is what the Stirling-number
// representation B_n = sum_j S(n, j) j! (-1)^j / (j + 1) produces; sources
// using B_1 = +1/2 differ in that single value.

#include "binser/numeric.hpp"

#include <map>
#include <mutex>
#include <string>
#include <vector>

namespace binser {

/// Dense polynomial with exact rational coefficients; index = power.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rational> coefficients);

  const std::vector<Rational>& coefficients() const { return coefficients_; }
  /// Coefficient of x^power (zero beyond the degree).
  Rational coefficient(std::size_t power) const;
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coefficients_.size()) - 1; }
  bool is_zero() const { return coefficients_.empty(); }

  Rational operator()(const Rational& x) const;
  Real operator()(const Real& x) const;

  /// p(-x).
  Polynomial reflected() const;
  Polynomial operator*(const Rational& c) const;
  Polynomial operator+(const Polynomial& other) const;

  std::string to_string(char variable = 'x') const;

  friend bool operator==(const Polynomial&, const Polynomial&) = default;

 private:
  std::vector<Rational> coefficients_;
};

Rational poly_eval(const Polynomial& p, const Rational& x);
Real poly_eval(const Polynomial& p, const Real& x);

/// Process-wide cache of the number families.  Lists grow on demand and
/// accessors return copies.
class NumberFamilyCache {
 public:
  static NumberFamilyCache& shared();

  Rational bernoulli(unsigned m);
  Rational poly_bernoulli(int q, unsigned n);
  /// omega_k(-1/2), the constant terms of the Euler polynomials.
  Rational geom_half(unsigned k);
  Rational euler_number(unsigned m);

 private:
  std::mutex mutex_;
  std::vector<Rational> bernoulli_;
  std::map<int, std::vector<Rational>> poly_bernoulli_;
  std::vector<Rational> geom_half_;
  std::vector<Rational> euler_;
};

/// phi_m(x) = sum_n S(m, n) x^n.
Polynomial exp_poly(unsigned m);
/// omega_m(x) = sum_n S(m, n) n! x^n.
Polynomial geom_poly(unsigned m);

Rational bernoulli_number(unsigned m);
/// B_m(y) = sum_j C(m, j) y^{m-j} B_j.
Polynomial bernoulli_poly(unsigned m);

/// Kaneko's B_n^(q) = (-1)^n sum_j S(n, j) j! (-1)^j / (j + 1)^q.
/// Throws std::invalid_argument for q <= 0.
Rational poly_bernoulli_number(int q, unsigned n);
/// B_m^(q)(y) = sum_j C(m, j) y^{m-j} B_j^(q).
Polynomial poly_bernoulli_poly(int q, unsigned m);

/// E_m(x) = sum_k C(m, k) omega_k(-1/2) x^{m-k}.
Polynomial euler_poly(unsigned m);
/// E_m = 2^m E_m(1/2).
Rational euler_number(unsigned m);

/// Closed form 2 (1 - 2^{m+1}) B_{m+1} / (m + 1) for omega_m(-1/2).
Rational geom_poly_half_identity(unsigned m);

}  // namespace binser

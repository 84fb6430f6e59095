#pragma once

// Power series whose coefficients are alternating binomial sums
//
//     sum_k C(n, k) (-1)^k f(y + z k),
//
// their closed-form right-hand sides in terms of Stirling-number polynomial
// families, and the Euler-type series transformations.  Everything is
// templated on the scalar: Rational gives exact identity checks, Real gives
// numeric evaluation.  Real alternating sums run with n log10(2) extra digits
// because C(n, k) ~ 2^n amplifies rounding.

#include "binser/exact_core.hpp"
#include "binser/poly_families.hpp"

#include <cmath>
#include <functional>
#include <optional>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <utility>
#include <vector>

namespace binser {

enum class StopReason { ToleranceMet, OptimalTruncation, MaxTerms };

/// "TOLERANCE_MET", "OPTIMAL_TRUNCATION", "MAX_TERMS".
std::string to_string(StopReason reason);

template <class S>
struct SeriesResult {
  S value{};
  S error_estimate{};
  std::size_t terms_used = 0;
  StopReason stop = StopReason::MaxTerms;
};

template <class S>
inline constexpr bool is_real_v = std::is_same_v<S, Real>;

template <class S>
S from_rational(const Rational& q) {
  if constexpr (is_real_v<S>) return to_real(q);
  else return q;
}

template <class S>
S int_power(const S& base, std::size_t k) {
  S result = 1;
  for (std::size_t i = 0; i < k; ++i) result *= base;
  return result;
}

/// Extra decimal digits needed so that a sum with coefficients of total
/// magnitude growth^n loses nothing at the caller's precision.
inline unsigned cancellation_guard(std::size_t n, double growth = 2.0) {
  return static_cast<unsigned>(std::ceil(static_cast<double>(n) * std::log10(growth))) + 10;
}

/// f(t) = sum_m a_m t^m truncated at order M = coefficients.size() - 1.
template <class S>
struct TruncatedSeries {
  std::vector<S> coefficients;

  std::size_t order() const { return coefficients.empty() ? 0 : coefficients.size() - 1; }
  const S& operator[](std::size_t m) const { return coefficients[m]; }
};

/// Taylor coefficients of f on demand, plus an optional direct evaluator.
template <class S>
class CoeffProvider {
 public:
  using CoefficientFn = std::function<S(std::size_t)>;
  using EvaluatorFn = std::function<S(const S&)>;

  CoeffProvider(std::string name, CoefficientFn coefficient, EvaluatorFn evaluator = {},
                std::optional<std::size_t> degree = std::nullopt)
      : name_(std::move(name)),
        coefficient_(std::move(coefficient)),
        evaluator_(std::move(evaluator)),
        degree_(degree) {}

  const std::string& name() const { return name_; }
  S coefficient(std::size_t m) const { return coefficient_(m); }
  bool can_evaluate() const { return static_cast<bool>(evaluator_); }

  /// Throws std::logic_error without an evaluator; evaluators throw
  /// std::domain_error outside their domain.
  S operator()(const S& t) const {
    if (!evaluator_) throw std::logic_error("provider '" + name_ + "' has no direct evaluator");
    return evaluator_(t);
  }

  /// Known only for polynomial providers.
  std::optional<std::size_t> degree() const { return degree_; }

  TruncatedSeries<S> truncate(std::size_t order) const {
    TruncatedSeries<S> out;
    out.coefficients.reserve(order + 1);
    for (std::size_t m = 0; m <= order; ++m) out.coefficients.push_back(coefficient(m));
    return out;
  }

 private:
  std::string name_;
  CoefficientFn coefficient_;
  EvaluatorFn evaluator_;
  std::optional<std::size_t> degree_;
};

namespace providers {

template <class S>
CoeffProvider<S> polynomial(std::vector<S> coefficients) {
  while (!coefficients.empty() && coefficients.back() == 0) coefficients.pop_back();
  const std::size_t degree = coefficients.empty() ? 0 : coefficients.size() - 1;
  auto coeff = [coefficients](std::size_t m) { return m < coefficients.size() ? coefficients[m] : S(0); };
  auto eval = [coefficients](const S& t) {
    S acc = 0;
    for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) acc = acc * t + *it;
    return acc;
  };
  return CoeffProvider<S>("polynomial", coeff, eval, degree);
}

/// t^m.
template <class S>
CoeffProvider<S> monomial(unsigned m) {
  auto p = polynomial<S>([&] {
    std::vector<S> c(m + 1, S(0));
    c[m] = 1;
    return c;
  }());
  return CoeffProvider<S>("t^" + std::to_string(m), [m](std::size_t k) { return k == m ? S(1) : S(0); },
                          [p](const S& t) { return p(t); }, m);
}

/// C(t, p) = (1/p!) sum_m s(p, m) t^m.
template <class S>
CoeffProvider<S> binomial_poly(unsigned p) {
  const Integer pf = factorial(p);
  std::vector<S> c(p + 1);
  for (unsigned m = 0; m <= p; ++m) c[m] = from_rational<S>(Rational(stirling1_signed(p, m), pf));
  auto coeff = [c](std::size_t m) { return m < c.size() ? c[m] : S(0); };
  auto eval = [p](const S& t) {
    S v = 1;
    for (unsigned j = 0; j < p; ++j) v *= (t - j) / S(j + 1);
    return v;
  };
  return CoeffProvider<S>("C(t," + std::to_string(p) + ")", coeff, eval, p);
}

/// (1 + t)^{-s}; coefficients C(-s, m), series valid for |t| < 1.  The exact
/// instantiation needs an integer s.
template <class S>
CoeffProvider<S> inverse_power(const Param& s) {
  if constexpr (!is_real_v<S>) {
    if (!s.as_integer()) throw std::invalid_argument("exact (1+t)^{-s} needs integer s");
    const long si = *s.as_integer();
    return CoeffProvider<S>(
        "(1+t)^{-s}", [si](std::size_t m) { return generalized_binomial(Rational(-si), static_cast<unsigned>(m)); },
        [si](const S& t) {
          if (t <= -1) throw std::domain_error("(1+t)^{-s} needs t > -1");
          return power(Rational(1 + t), -si);
        });
  } else {
    return CoeffProvider<S>(
        "(1+t)^{-s}",
        [s](std::size_t m) {
          if (s.is_exact()) return to_real(generalized_binomial(Rational(-s.exact()), static_cast<unsigned>(m)));
          return generalized_binomial(Real(-s.real()), static_cast<unsigned>(m));
        },
        [s](const Real& t) {
          if (t <= -1) throw std::domain_error("(1+t)^{-s} needs t > -1");
          return Real(pow(Real(1 + t), -s.real()));
        });
  }
}

CoeffProvider<Real> exponential();
CoeffProvider<Real> one_minus_exp_neg();
/// (a + t)^{-s}, coefficients C(-s, m) / a^{m+s}.
CoeffProvider<Real> shifted_inverse_power(const Param& a, const Param& s);
/// x^t / (a + t)^s with coefficients from the Cauchy product of
/// exp(t log x) and (a + t)^{-s}.
CoeffProvider<Real> lerch_kernel(const Param& x, const Param& a, const Param& s);
/// log(1 + t / z), coefficients (-1)^{m-1} / (m z^m).
CoeffProvider<Real> log_shift(const Param& z);

}  // namespace providers

enum class WeightKind { Exp, Geo, InvPow, HalfShift, Half, Harmonic, IntPow };

/// Weights w(n) multiplying the n-th binomial sum:
///   Exp(x)  x^n/n!        Geo(x)   x^n          InvPow(r)  1/(n+1)^r
///   HalfShift 1/2^{n+1}   Half     1/2^n        Harmonic(x) x^n/n, n >= 1
///   IntPow(x, r)  x^n/(n+1)^r
template <class S>
struct WeightScheme {
  WeightKind kind = WeightKind::Geo;
  S x = 1;
  unsigned r = 1;

  static WeightScheme exp(S x) { return {WeightKind::Exp, std::move(x), 0}; }
  static WeightScheme geo(S x) { return {WeightKind::Geo, std::move(x), 0}; }
  static WeightScheme inv_pow(unsigned r) { return {WeightKind::InvPow, S(1), r}; }
  static WeightScheme half_shift() { return {WeightKind::HalfShift, S(1), 0}; }
  static WeightScheme half() { return {WeightKind::Half, S(1), 0}; }
  static WeightScheme harmonic(S x) { return {WeightKind::Harmonic, std::move(x), 0}; }
  static WeightScheme int_pow(S x, unsigned r) { return {WeightKind::IntPow, std::move(x), r}; }

  std::size_t first_index() const { return kind == WeightKind::Harmonic ? 1 : 0; }

  S operator()(std::size_t n) const {
    switch (kind) {
      case WeightKind::Exp:
        return int_power(x, n) / from_rational<S>(Rational(factorial(static_cast<unsigned>(n))));
      case WeightKind::Geo:
        return int_power(x, n);
      case WeightKind::InvPow:
        return S(1) / int_power(S(n + 1), r);
      case WeightKind::HalfShift:
        return S(1) / int_power(S(2), n + 1);
      case WeightKind::Half:
        return S(1) / int_power(S(2), n);
      case WeightKind::Harmonic:
        return n == 0 ? S(0) : int_power(x, n) / S(n);
      case WeightKind::IntPow:
        return int_power(x, n) / int_power(S(n + 1), r);
    }
    return S(0);
  }
};

namespace detail {

// Precision bump for Real; nothing for exact scalars.
template <class S>
class ExtraDigits {
 public:
  explicit ExtraDigits(unsigned extra) {
    if constexpr (is_real_v<S>) guard_.emplace(WorkingPrecision::current() + extra);
  }

 private:
  std::optional<WorkingPrecision> guard_;
};

template <class S>
S round_to(const S& v, unsigned digits) {
  if constexpr (is_real_v<S>) return Real(v, digits);
  else return v;
}

}  // namespace detail

/// sum_{k=0}^n C(n, k) (-1)^k f(y + z k).
template <class S>
S binomial_sum(const CoeffProvider<S>& f, std::size_t n, const S& y, const S& z) {
  const unsigned digits = WorkingPrecision::current();
  S sum = 0;
  {
    detail::ExtraDigits<S> guard(cancellation_guard(n));
    Integer c = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) {
        c *= n - k + 1;
        c /= k;
      }
      S term = from_rational<S>(Rational(c)) * f(y + z * S(k));
      if (k % 2) sum -= term;
      else sum += term;
    }
  }
  return detail::round_to(sum, digits);
}

/// (-1)^n n! sum_m a_m sum_p C(m, p) S(p, n) z^p y^{m-p}.
template <class S>
S lemma1_rhs(const TruncatedSeries<S>& f, std::size_t n, const S& y, const S& z) {
  S total = 0;
  for (std::size_t m = 0; m < f.coefficients.size(); ++m) {
    if (f[m] == 0) continue;
    S inner = 0;
    for (std::size_t p = n; p <= m; ++p) {
      const Integer s = stirling2(static_cast<unsigned>(p), static_cast<unsigned>(n));
      if (s == 0) continue;
      inner += from_rational<S>(Rational(binomial(static_cast<long>(m), static_cast<long>(p)) * s)) *
               int_power(z, p) * int_power(y, m - p);
    }
    total += f[m] * inner;
  }
  S scale = from_rational<S>(Rational(factorial(static_cast<unsigned>(n))));
  return n % 2 ? S(-scale * total) : S(scale * total);
}

/// sum_{n=1}^{n_max} (1/n) sum_k C(n, k) (-1)^k f(z k); equals -f'(0) z
/// whenever n_max >= deg f.
template <class S>
S prop1_series(const CoeffProvider<S>& f, const S& z, std::size_t n_max) {
  S sum = 0;
  for (std::size_t n = 1; n <= n_max; ++n) sum += binomial_sum(f, n, S(0), z) / S(n);
  return sum;
}

/// sum_n w(n) sum_k C(n, k) (-1)^k f(y + z k).  Polynomial providers are
/// summed exactly up to their degree (later binomial sums vanish).  Otherwise
/// the sum stops once |term| <= tol |partial sum| for 3 consecutive n, or at
/// n_max; the error estimate is the last term's magnitude.
template <class S>
SeriesResult<S> weighted_binomial_series(const CoeffProvider<S>& f, const WeightScheme<S>& w, const S& y,
                                         const S& z, std::size_t n_max, const S& tol) {
  SeriesResult<S> result;
  const std::size_t first = w.first_index();
  if (auto degree = f.degree()) {
    const std::size_t last = std::min(*degree, n_max);
    for (std::size_t n = first; n <= last; ++n) {
      result.value += w(n) * binomial_sum(f, n, y, z);
      ++result.terms_used;
    }
    result.error_estimate = 0;
    result.stop = *degree <= n_max ? StopReason::ToleranceMet : StopReason::MaxTerms;
    return result;
  }
  int streak = 0;
  for (std::size_t n = first; n <= n_max; ++n) {
    const S term = w(n) * binomial_sum(f, n, y, z);
    result.value += term;
    ++result.terms_used;
    result.error_estimate = abs(term);
    streak = abs(term) <= tol * abs(result.value) ? streak + 1 : 0;
    if (streak >= 3) {
      result.stop = StopReason::ToleranceMet;
      return result;
    }
  }
  result.stop = StopReason::MaxTerms;
  return result;
}

namespace detail {

// sum_j S(p, j) j! (-x)^j / (j+1)^r
template <class S>
S int_pow_kernel(std::size_t p, const S& x, unsigned r) {
  const auto row = StirlingTable2::shared().row(static_cast<unsigned>(p));
  S sum = 0;
  Integer fact = 1;
  for (std::size_t j = 0; j <= p; ++j) {
    if (j > 0) fact *= j;
    if (row[j] == 0) continue;
    sum += from_rational<S>(Rational(row[j] * fact, power(Integer(j + 1), r))) * int_power(S(-x), j);
  }
  return sum;
}

// sum_{j>=1} S(p, j) (j-1)! (-x)^j
template <class S>
S harmonic_kernel(std::size_t p, const S& x) {
  const auto row = StirlingTable2::shared().row(static_cast<unsigned>(p));
  S sum = 0;
  Integer fact = 1;
  for (std::size_t j = 1; j <= p; ++j) {
    if (j > 1) fact *= j - 1;
    if (row[j] == 0) continue;
    sum += from_rational<S>(Rational(row[j] * fact)) * int_power(S(-x), j);
  }
  return sum;
}

template <class S>
S eval_poly(const Polynomial& p, const S& x) {
  return p(x);
}

// sum_k [x^k]P * y^k z^{deg-k}: the homogenised z^m P(y/z), defined at z = 0.
template <class S>
S homogeneous_eval(const Polynomial& p, std::size_t m, const S& y, const S& z) {
  S sum = 0;
  for (std::size_t k = 0; k <= m; ++k) {
    const Rational c = p.coefficient(k);
    if (c == 0) continue;
    sum += from_rational<S>(c) * int_power(y, k) * int_power(z, m - k);
  }
  return sum;
}

}  // namespace detail

/// Right-hand side of the BE/BG-type identities for a truncated f:
///   sum_m a_m sum_p C(m, p) z^p y^{m-p} K_p
/// with K_p = phi_p(-x) (Exp), omega_p(-x) (Geo), (-1)^p B_p^(r) (InvPow),
/// omega_p(-1/2)/2 (HalfShift), the Stirling sums of the integrated and
/// harmonic variants, and sum_m a_m z^m E_m(y/z) for Half.
template <class S>
S rhs_expansion(const TruncatedSeries<S>& f, const WeightScheme<S>& w, const S& y, const S& z) {
  const std::size_t order = f.coefficients.size();
  if (order == 0) return S(0);
  if (w.kind == WeightKind::Half) {
    S sum = 0;
    for (std::size_t m = 0; m < order; ++m) {
      if (f[m] == 0) continue;
      sum += f[m] * detail::homogeneous_eval(euler_poly(static_cast<unsigned>(m)), m, y, z);
    }
    return sum;
  }
  std::vector<S> kernel(order);
  for (std::size_t p = 0; p < order; ++p) {
    const auto pu = static_cast<unsigned>(p);
    switch (w.kind) {
      case WeightKind::Exp:
        kernel[p] = detail::eval_poly(exp_poly(pu), S(-w.x));
        break;
      case WeightKind::Geo:
        kernel[p] = detail::eval_poly(geom_poly(pu), S(-w.x));
        break;
      case WeightKind::InvPow: {
        const Rational b = poly_bernoulli_number(static_cast<int>(w.r), pu);
        kernel[p] = from_rational<S>(p % 2 ? Rational(-b) : b);
        break;
      }
      case WeightKind::HalfShift:
        kernel[p] = from_rational<S>(NumberFamilyCache::shared().geom_half(pu) / 2);
        break;
      case WeightKind::IntPow:
        kernel[p] = detail::int_pow_kernel(p, w.x, w.r);
        break;
      case WeightKind::Harmonic:
        kernel[p] = detail::harmonic_kernel(p, w.x);
        break;
      case WeightKind::Half:
        break;
    }
  }
  S sum = 0;
  for (std::size_t m = 0; m < order; ++m) {
    if (f[m] == 0) continue;
    S inner = 0;
    for (std::size_t p = 0; p <= m; ++p)
      inner += from_rational<S>(Rational(binomial(static_cast<long>(m), static_cast<long>(p)))) *
               int_power(z, p) * int_power(y, m - p) * kernel[p];
    sum += f[m] * inner;
  }
  return sum;
}

/// sum_m a_m (-z)^m B_m^(r)(-y/z).  Throws std::invalid_argument when z = 0
/// and y != 0.
template <class S>
S poly_bernoulli_expansion(const TruncatedSeries<S>& f, unsigned r, const S& y, const S& z) {
  if (r == 0) throw std::invalid_argument("poly-Bernoulli expansion needs r >= 1");
  if (z == 0) {
    if (y != 0) throw std::invalid_argument("poly-Bernoulli expansion needs z != 0 when y != 0");
    return f.coefficients.empty() ? S(0) : f[0];
  }
  const S point = -y / z;
  S sum = 0;
  for (std::size_t m = 0; m < f.coefficients.size(); ++m) {
    if (f[m] == 0) continue;
    sum += f[m] * int_power(S(-z), m) *
           detail::eval_poly(poly_bernoulli_poly(static_cast<int>(r), static_cast<unsigned>(m)), point);
  }
  return sum;
}

/// sum_{n=0}^m 1/(n+1)^r sum_k C(n, k) (-1)^k (y - k)^m, which equals B_m^(r)(y).
template <class S>
S poly_bernoulli_poly_rep(unsigned r, unsigned m, const S& y) {
  const auto f = providers::monomial<S>(m);
  S sum = 0;
  for (unsigned n = 0; n <= m; ++n) sum += binomial_sum(f, n, y, S(-1)) / int_power(S(n + 1), r);
  return sum;
}

/// Partial sums (index n = 0..n_max) of the two sides of an Euler-type
/// transformation.
template <class S>
struct TransformSums {
  std::vector<S> lhs;
  std::vector<S> rhs;
};

/// Exponential Euler transformation with parameter lambda:
///   e^{lambda x} sum_n (-x)^n/n! f(zn)  vs
///   sum_n x^n/n! sum_k C(n,k) (-1)^k lambda^{n-k} f(zk).
/// `grid(n)` supplies f(zn).
TransformSums<Real> euler_transform_exp(const std::function<Real(std::size_t)>& grid, const Real& x,
                                        const Real& lambda, std::size_t n_max);

/// Geometric Euler transformation:
///   1/(1-t) sum_n (-1)^n f(zn) (t/(1-t))^n  vs  sum_n t^n sum_k C(n,k)(-1)^k f(zk).
/// Throws std::domain_error for |t| >= 1.
template <class S>
TransformSums<S> euler_transform_geo(const std::function<S(std::size_t)>& grid, const S& t, std::size_t n_max) {
  if (abs(t) >= 1) throw std::domain_error("geometric Euler transformation needs |t| < 1");
  const unsigned digits = WorkingPrecision::current();
  TransformSums<S> out;
  detail::ExtraDigits<S> guard(cancellation_guard(n_max));
  std::vector<S> values;
  values.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) values.push_back(grid(n));
  const S one_minus = S(1) - t;
  const S ratio = t / one_minus;
  S lhs = 0, rhs = 0, ratio_pow = 1, t_pow = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    lhs += (n % 2 ? S(-values[n]) : values[n]) * ratio_pow / one_minus;
    ratio_pow *= ratio;
    S inner = 0;
    Integer c = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) {
        c *= n - k + 1;
        c /= k;
      }
      S term = from_rational<S>(Rational(c)) * values[k];
      if (k % 2) inner -= term;
      else inner += term;
    }
    rhs += t_pow * inner;
    t_pow *= t;
    out.lhs.push_back(detail::round_to(lhs, digits));
    out.rhs.push_back(detail::round_to(rhs, digits));
  }
  return out;
}

/// Exponential series transformation right-hand side: e^x sum_m a_m z^m phi_m(x).
Real stf_exp(const TruncatedSeries<Real>& f, const Real& x, const Real& z);

/// Geometric series transformation right-hand side:
/// 1/(1-x) sum_m a_m z^m omega_m(x/(1-x)).  Throws std::domain_error for |x| >= 1.
template <class S>
S stf_geo(const TruncatedSeries<S>& f, const S& x, const S& z) {
  if (abs(x) >= 1) throw std::domain_error("geometric series transformation needs |x| < 1");
  const S point = x / (S(1) - x);
  S sum = 0;
  for (std::size_t m = 0; m < f.coefficients.size(); ++m) {
    if (f[m] == 0) continue;
    sum += f[m] * int_power(z, m) * detail::eval_poly(geom_poly(static_cast<unsigned>(m)), point);
  }
  return sum / (S(1) - x);
}

}  // namespace binser

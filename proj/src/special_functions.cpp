#include "binser/special_functions.hpp"

#include "binser/exact_core.hpp"
#include "binser/poly_families.hpp"

#include <cmath>
#include <stdexcept>

namespace binser {

namespace {

constexpr unsigned kAutoShiftTarget = 10;
constexpr std::size_t kZeroRunEnd = 8;

void require_positive(const Param& p, const char* name) {
  if (p.real() <= 0) throw std::domain_error(std::string(name) + " must be > 0");
}

unsigned resolve_shift(const SeriesOptions& options, const Param& a) {
  if (options.shift) return *options.shift;
  const double av = a.real().convert_to<double>();
  if (av >= kAutoShiftTarget) return 0;
  return static_cast<unsigned>(std::ceil(kAutoShiftTarget - av));
}

// C(-s, m)
Real binom_neg(const Param& s, unsigned m) {
  if (s.is_exact()) return to_real(generalized_binomial(Rational(-s.exact()), m));
  return generalized_binomial(Real(-s.real()), m);
}

// C(m+s-1, m)
Real binom_rising(const Param& s, unsigned m) {
  if (s.is_exact()) return to_real(generalized_binomial(Rational(s.exact() + m - 1), m));
  return generalized_binomial(Real(s.real() + m - 1), m);
}

Real eval_at(const Polynomial& p, const Param& y) {
  if (y.is_exact()) return to_real(p(y.exact()));
  return p(y.real());
}

Real power_of(const Param& base, const Real& exponent) { return pow(base.real(), exponent); }

// sum_k C(n, k) (-1)^k h(k), exact when h is rational.  Real values are
// cached at a precision that carries n log10(2) guard digits and refreshed
// when n outgrows it (roughly each doubling of n).
class InnerSum {
 public:
  using ExactFn = std::function<Rational(std::size_t)>;
  using RealFn = std::function<Real(std::size_t)>;

  explicit InnerSum(ExactFn f) : exact_fn_(std::move(f)) {}
  explicit InnerSum(RealFn f) : real_fn_(std::move(f)) {}

  bool exact() const { return static_cast<bool>(exact_fn_); }

  Real operator()(std::size_t n) { return exact_fn_ ? to_real(exact_sum(n)) : real_sum(n); }

 private:
  Rational exact_sum(std::size_t n) {
    while (exact_cache_.size() <= n) exact_cache_.push_back(exact_fn_(exact_cache_.size()));
    Rational sum = 0;
    Integer c = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) {
        c *= n - k + 1;
        c /= k;
      }
      if (k % 2) sum -= c * exact_cache_[k];
      else sum += c * exact_cache_[k];
    }
    return sum;
  }

  Real real_sum(std::size_t n) {
    const unsigned base = WorkingPrecision::current();
    const unsigned need = base + cancellation_guard(n);
    if (need > cache_digits_) {
      cache_digits_ = need + cancellation_guard(n);
      real_cache_.clear();
    }
    WorkingPrecision guard(cache_digits_);
    while (real_cache_.size() <= n) real_cache_.push_back(real_fn_(real_cache_.size()));
    Real sum = 0;
    Integer c = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) {
        c *= n - k + 1;
        c /= k;
      }
      Real term = to_real(c) * real_cache_[k];
      if (k % 2) sum -= term;
      else sum += term;
    }
    return Real(sum, base);
  }

  ExactFn exact_fn_;
  RealFn real_fn_;
  std::vector<Rational> exact_cache_;
  std::vector<Real> real_cache_;
  unsigned cache_digits_ = 0;
};

// Inner sums of x^k (a+k)^{-s}; x absent means 1.
InnerSum power_inner(const Param& s, const Param& a, const std::optional<Param>& x = std::nullopt) {
  const auto si = s.as_integer();
  const bool exact = si && *si >= 0 && a.is_exact() && (!x || x->is_exact());
  if (exact) {
    const long sv = *si;
    const Rational av = a.exact();
    const Rational xv = x ? x->exact() : Rational(1);
    return InnerSum(InnerSum::ExactFn([sv, av, xv](std::size_t k) {
      return power(xv, static_cast<long>(k)) / power(Rational(av + k), sv);
    }));
  }
  return InnerSum(InnerSum::RealFn([s, a, x](std::size_t k) {
    Real v = pow(Real(a.real() + k), Real(-s.real()));
    if (x) v *= pow(x->real(), Real(static_cast<long>(k)));
    return v;
  }));
}

// Richardson when the tail exponents are known (integer s), Levin otherwise.
SeriesAccelerator power_weight_accelerator(const SeriesOptions& options, const Param& s, const Param& a,
                                           unsigned r) {
  if (!options.accelerate) return SeriesAccelerator::plain();
  const auto si = s.as_integer();
  if (si && *si >= 1) return SeriesAccelerator::richardson(TailModel{Real(a.real() + (r - 1)), static_cast<unsigned>(*si)});
  return SeriesAccelerator::levin();
}

EvalResult finish(const AcceleratedSum& sum, const SeriesAccelerator& acc, unsigned digits, unsigned shift) {
  EvalResult out;
  out.value = Real(sum.value, digits);
  out.error_estimate = Real(sum.error_estimate, digits);
  out.terms_used = sum.terms_used;
  out.stop_reason = sum.stop;
  out.shift = shift;
  out.method = to_string(acc.method());
  if (sum.stop == StopReason::MaxTerms) out.warnings.push_back("series did not reach the tolerance within max_terms");
  return out;
}

Real weight_inv_pow(std::size_t n, unsigned r) { return pow(Real(n + 1), Real(-static_cast<long>(r))); }

}  // namespace

EvalResult optimal_truncate(const AsymptoticSeries& series, const TruncationPolicy& policy) {
  const Real tol = policy.tol > 0 ? Real(policy.tol) : pow(Real(10), -static_cast<long>(policy.digits) - 2);
  const unsigned patience = std::max(1u, policy.patience);
  EvalResult out;
  out.method = "asymptotic";

  Real running = series.prefix;  // every term seen so far
  Real at_best = series.prefix;  // through the running minimum
  std::optional<Real> best;
  std::size_t best_index = series.first_index;
  std::size_t last_nonzero = series.first_index;
  bool any_nonzero = false;
  Real first_omitted = 0;
  unsigned fails = 0;
  std::size_t zero_run = 0;

  auto finish_exact = [&](std::size_t end) {
    out.value = running;
    out.error_estimate = 0;
    out.terms_used = (any_nonzero ? last_nonzero + 1 : end) - series.first_index;
    out.stop_reason = StopReason::ToleranceMet;
  };

  for (std::size_t m = series.first_index;; ++m) {
    if (series.length && m >= series.first_index + *series.length) {
      finish_exact(m);
      break;
    }
    if (m - series.first_index >= policy.max_terms) {
      out.value = best ? at_best : running;
      out.error_estimate = best ? (fails ? first_omitted : *best) : Real(0);
      out.terms_used = best ? best_index - series.first_index + 1 : m - series.first_index;
      out.stop_reason = StopReason::MaxTerms;
      out.warnings.push_back("asymptotic series still decreasing at max_terms");
      break;
    }
    const Real c = series.term(m);
    if (c == 0) {
      if (fails == 0 && ++zero_run >= kZeroRunEnd) {
        finish_exact(m);
        break;
      }
      continue;
    }
    zero_run = 0;
    const Real mag = abs(c);
    if (!best) {
      running += c;
      at_best = running;
      best = mag;
      best_index = last_nonzero = m;
      any_nonzero = true;
      continue;
    }
    if (mag < *best) {
      if (fails == 0 && mag <= tol * abs(at_best)) {
        out.value = at_best;
        out.error_estimate = mag;
        out.terms_used = best_index - series.first_index + 1;
        out.stop_reason = StopReason::ToleranceMet;
        break;
      }
      running += c;
      at_best = running;
      best = mag;
      best_index = last_nonzero = m;
      fails = 0;
      continue;
    }
    if (fails == 0) first_omitted = mag;
    running += c;
    last_nonzero = m;
    if (++fails >= patience) {
      out.value = at_best;
      out.error_estimate = first_omitted;
      out.terms_used = best_index - series.first_index + 1;
      out.stop_reason = StopReason::OptimalTruncation;
      break;
    }
  }
  out.value = Real(out.value, policy.digits);
  out.error_estimate = Real(out.error_estimate, policy.digits);
  return out;
}

EvalResult hurwitz_zeta(const Param& s, const Param& a, const SeriesOptions& options) {
  WorkingPrecision outer(options.digits);
  require_positive(s, "s");
  require_positive(a, "a");
  const unsigned shift = resolve_shift(options, a);
  const Param shifted = a + shift;
  const unsigned extra = power_weight_accelerator(options, s, shifted, 1).extra_digits();
  WorkingPrecision work(options.digits + extra);
  SeriesAccelerator acc = power_weight_accelerator(options, s, shifted, 1);
  const Real sv = s.real();
  Real prefix = 0;
  for (unsigned j = 0; j < shift; ++j) prefix += pow(Real(a.real() + j), Real(-sv - 1));
  InnerSum g = power_inner(s, shifted);
  const auto sum = accelerated_sum([&](std::size_t n) { return g(n) / Real(n + 1); }, acc, Real(options.tol),
                                   options.max_terms, Real(1 / sv), prefix);
  return finish(sum, acc, options.digits, shift);
}

EvalResult eta(const Param& s, const Param& a, const SeriesOptions& options) {
  WorkingPrecision outer(options.digits);
  require_positive(s, "s");
  require_positive(a, "a");
  WorkingPrecision work(options.digits + 10);
  SeriesAccelerator acc = SeriesAccelerator::plain();
  InnerSum g = power_inner(s, a);
  const Real half = Real(1) / 2;
  const auto sum = accelerated_sum([&](std::size_t n) { return g(n) * pow(half, Real(static_cast<long>(n + 1))); },
                                   acc, Real(options.tol), options.max_terms);
  return finish(sum, acc, options.digits, 0);
}

LerchResult lerch_phi(const Param& x, const Param& s, const Param& a, const SeriesOptions& options) {
  WorkingPrecision outer(options.digits);
  require_positive(s, "s");
  require_positive(a, "a");
  if (x.real() <= 0 || x.real() > 1) throw std::domain_error("x must lie in (0, 1]");
  LerchResult out;
  {
    const unsigned shift = resolve_shift(options, a);
    const Param shifted = a + shift;
    const unsigned extra = power_weight_accelerator(options, s, shifted, 1).extra_digits();
    WorkingPrecision work(options.digits + extra);
    SeriesAccelerator acc = power_weight_accelerator(options, s, shifted, 1);
    const Real xv = x.real();
    const Real sv = s.real();
    const Real lx = log(xv);
    // C(a) = sum_{j<M} x^j [s (a+j)^{-s-1} - log x (a+j)^{-s}] + x^M C(a+M)
    Real prefix = 0;
    for (unsigned j = 0; j < shift; ++j) {
      const Real aj = a.real() + j;
      prefix += pow(xv, Real(static_cast<long>(j))) * (sv * pow(aj, Real(-sv - 1)) - lx * pow(aj, Real(-sv)));
    }
    InnerSum g = power_inner(s, shifted, x);
    const auto sum = accelerated_sum([&](std::size_t n) { return g(n) / Real(n + 1); }, acc, Real(options.tol),
                                     options.max_terms, Real(pow(xv, Real(static_cast<long>(shift)))), prefix);
    out.combination = finish(sum, acc, options.digits, shift);
  }
  {
    WorkingPrecision work(options.digits + 10);
    SeriesAccelerator acc = SeriesAccelerator::plain();
    InnerSum g = power_inner(s, a, x);
    const Real half = Real(1) / 2;
    const auto sum = accelerated_sum(
        [&](std::size_t n) { return g(n) * pow(half, Real(static_cast<long>(n + 1))); }, acc, Real(options.tol),
        options.max_terms);
    out.alternating = finish(sum, acc, options.digits, 0);
  }
  return out;
}

EvalResult digamma(const Param& z, const SeriesOptions& options, DigammaForm form) {
  WorkingPrecision outer(options.digits);
  require_positive(z, "z");
  const unsigned shift = resolve_shift(options, z);
  const Param shifted = z + shift;
  SeriesAccelerator acc = options.accelerate ? SeriesAccelerator::levin() : SeriesAccelerator::plain();
  WorkingPrecision work(options.digits + acc.extra_digits());
  // psi(z) = psi(z+M) - sum_{j<M} 1/(z+j)
  Real offset = 0;
  for (unsigned j = 0; j < shift; ++j) offset -= Real(1) / (z.real() + j);
  InnerSum g = form == DigammaForm::Direct
                   ? InnerSum(InnerSum::RealFn([shifted](std::size_t k) { return Real(log(shifted.real() + k)); }))
                   : InnerSum(InnerSum::RealFn(
                         [shifted](std::size_t k) { return Real(log(1 + Real(k) / shifted.real())); }));
  if (form == DigammaForm::LogShifted) offset += log(shifted.real());
  const auto sum = accelerated_sum([&](std::size_t n) { return g(n) / Real(n + 1); }, acc, Real(options.tol),
                                   options.max_terms, Real(1), offset);
  return finish(sum, acc, options.digits, shift);
}

EvalResult arakawa_kaneko(unsigned r, const Param& s, const Param& a, const SeriesOptions& options) {
  WorkingPrecision outer(options.digits);
  if (r == 0) throw std::domain_error("r must be >= 1");
  require_positive(s, "s");
  require_positive(a, "a");
  const unsigned extra = power_weight_accelerator(options, s, a, r).extra_digits();
  WorkingPrecision work(options.digits + extra);
  SeriesAccelerator acc = power_weight_accelerator(options, s, a, r);
  InnerSum g = power_inner(s, a);
  const auto sum = accelerated_sum([&](std::size_t n) { return g(n) * weight_inv_pow(n, r); }, acc,
                                   Real(options.tol), options.max_terms);
  return finish(sum, acc, options.digits, 0);
}

AsymptoticSeries hurwitz_zeta_asymptotic_series(const Param& s, const Param& a) {
  AsymptoticSeries series;
  series.variable = "1/a";
  series.term = [s, a](std::size_t m) {
    const auto mu = static_cast<unsigned>(m);
    const Rational b = bernoulli_number(mu);
    if (b == 0) return Real(0);
    const Real sv = s.real();
    return Real(binom_neg(s, mu) * to_real(b) * power_of(a, Real(-sv - static_cast<long>(m))) / sv);
  };
  return series;
}

EvalResult hurwitz_zeta_asymptotic(const Param& s, const Param& a, const TruncationPolicy& policy) {
  WorkingPrecision work(policy.digits + 10);
  require_positive(s, "s");
  require_positive(a, "a");
  return optimal_truncate(hurwitz_zeta_asymptotic_series(s, a), policy);
}

AsymptoticSeries eta_asymptotic_series(const Param& s, const Param& a, const Param& y) {
  AsymptoticSeries series;
  series.variable = "1/a";
  series.term = [s, a, y](std::size_t m) {
    const auto mu = static_cast<unsigned>(m);
    const Real e = eval_at(euler_poly(mu), y);
    if (e == 0) return Real(0);
    return Real(binom_neg(s, mu) * e * power_of(a, Real(-s.real() - static_cast<long>(m))) / 2);
  };
  return series;
}

AsymptoticSeries eta_asymptotic_bernoulli_series(const Param& s, const Param& a) {
  AsymptoticSeries series;
  series.variable = "1/a";
  series.term = [s, a](std::size_t m) {
    const auto mu = static_cast<unsigned>(m);
    const Rational b = bernoulli_number(mu + 1);
    if (b == 0) return Real(0);
    const Rational c = (1 - power(Rational(2), static_cast<long>(m + 1))) * b / (m + 1);
    return Real(binom_neg(s, mu) * to_real(c) * power_of(a, Real(-s.real() - static_cast<long>(m))));
  };
  return series;
}

EvalResult eta_asymptotic(const Param& s, const Param& a, const Param& y, const TruncationPolicy& policy) {
  WorkingPrecision work(policy.digits + 10);
  require_positive(s, "s");
  require_positive(a, "a");
  if (y.real() < 0) throw std::domain_error("y must be >= 0");
  return optimal_truncate(eta_asymptotic_series(s, a, y), policy);
}

AsymptoticSeries lerch_asymptotic_series(const Param& x, const Param& s, const Param& a) {
  AsymptoticSeries series;
  series.variable = "1/a";
  const auto kernel = providers::lerch_kernel(x, a, s);
  series.term = [kernel](std::size_t m) {
    const Rational b = bernoulli_number(static_cast<unsigned>(m));
    if (b == 0) return Real(0);
    return Real(to_real(b) * kernel.coefficient(m));
  };
  return series;
}

EvalResult lerch_asymptotic(const Param& x, const Param& s, const Param& a, const TruncationPolicy& policy) {
  WorkingPrecision work(policy.digits + 10);
  require_positive(s, "s");
  require_positive(a, "a");
  if (x.real() <= 0 || x.real() > 1) throw std::domain_error("x must lie in (0, 1]");
  return optimal_truncate(lerch_asymptotic_series(x, s, a), policy);
}

AsymptoticSeries digamma_asymptotic_series(const Param& y, const Param& z) {
  AsymptoticSeries series;
  series.variable = "1/z";
  series.first_index = 1;
  series.prefix = log(z.real());
  series.term = [y, z](std::size_t m) {
    const Real b = eval_at(bernoulli_poly(static_cast<unsigned>(m)), y);
    if (b == 0) return Real(0);
    Real t = b / (Real(m) * pow(z.real(), Real(static_cast<long>(m))));
    return m % 2 ? t : Real(-t);
  };
  return series;
}

EvalResult digamma_asymptotic(const Param& y, const Param& z, const TruncationPolicy& policy) {
  WorkingPrecision work(policy.digits + 10);
  require_positive(z, "z");
  if (y.real() < 0) throw std::domain_error("y must be >= 0");
  EvalResult out = optimal_truncate(digamma_asymptotic_series(y, z), policy);
  if (out.stop_reason == StopReason::OptimalTruncation && out.terms_used <= 2)
    out.warnings.push_back("optimal truncation at m <= 2: z is too small for the asymptotic route");
  return out;
}

AsymptoticSeries loggamma_asymptotic_series(const Param& y, const Param& z) {
  AsymptoticSeries series;
  series.variable = "1/z";
  series.first_index = 1;
  const Real zv = z.real();
  series.prefix = (zv + y.real() - Real(1) / 2) * log(zv) - zv + log_sqrt_two_pi();
  series.term = [y, z](std::size_t m) {
    const Real b = eval_at(bernoulli_poly(static_cast<unsigned>(m + 1)), y);
    if (b == 0) return Real(0);
    Real t = b / (Real(m) * Real(m + 1) * pow(z.real(), Real(static_cast<long>(m))));
    return m % 2 ? t : Real(-t);
  };
  return series;
}

EvalResult loggamma_asymptotic(const Param& y, const Param& z, const TruncationPolicy& policy) {
  WorkingPrecision work(policy.digits + 10);
  require_positive(z, "z");
  if (y.real() < 0) throw std::domain_error("y must be >= 0");
  EvalResult out = optimal_truncate(loggamma_asymptotic_series(y, z), policy);
  if (out.stop_reason == StopReason::OptimalTruncation && out.terms_used <= 2)
    out.warnings.push_back("optimal truncation at m <= 2: z is too small for the asymptotic route");
  return out;
}

AsymptoticSeries arakawa_kaneko_asymptotic_series(unsigned r, const Param& s, const Param& a) {
  if (r == 0) throw std::domain_error("r must be >= 1");
  AsymptoticSeries series;
  series.variable = "1/a";
  series.term = [r, s, a](std::size_t m) {
    const auto mu = static_cast<unsigned>(m);
    const Rational b = poly_bernoulli_number(static_cast<int>(r), mu);
    if (b == 0) return Real(0);
    return Real(binom_rising(s, mu) * to_real(b) * power_of(a, Real(-s.real() - static_cast<long>(m))));
  };
  return series;
}

EvalResult arakawa_kaneko_asymptotic(unsigned r, const Param& s, const Param& a, const TruncationPolicy& policy) {
  WorkingPrecision work(policy.digits + 10);
  require_positive(s, "s");
  require_positive(a, "a");
  return optimal_truncate(arakawa_kaneko_asymptotic_series(r, s, a), policy);
}

AsymptoticSeries polyexponential_asymptotic_series(const Param& s, const Param& x, const Param& lambda) {
  AsymptoticSeries series;
  series.variable = "1/lambda";
  const Real ex = exp(x.real());
  series.term = [s, x, lambda, ex](std::size_t m) {
    const auto mu = static_cast<unsigned>(m);
    const Real c = binom_neg(s, mu);
    if (c == 0) return Real(0);
    const Real phi = eval_at(exp_poly(mu), x);
    if (phi == 0) return Real(0);
    return Real(ex * c * phi * power_of(lambda, Real(-s.real() - static_cast<long>(m))));
  };
  return series;
}

PolyexpResult polyexponential(const Param& s, const Param& x, const Param& lambda, const TruncationPolicy& policy) {
  WorkingPrecision work(policy.digits + 10);
  require_positive(lambda, "lambda");
  PolyexpResult out;
  {
    const Real xv = x.real();
    const Real sv = s.real();
    const Real lv = lambda.real();
    const Real eps = pow(Real(10), -static_cast<long>(policy.digits) - 5);
    Real sum = 0, weight = 1, term = 0;
    int streak = 0;
    std::size_t n = 0;
    out.direct.stop_reason = StopReason::MaxTerms;
    for (; n < policy.max_terms; ++n) {
      if (n > 0) weight *= xv / Real(n);
      term = weight * pow(Real(lv + n), -sv);
      sum += term;
      streak = (abs(term) <= eps * abs(sum) && Real(n) > abs(xv)) ? streak + 1 : 0;
      if (streak >= 3) {
        out.direct.stop_reason = StopReason::ToleranceMet;
        ++n;
        break;
      }
    }
    out.direct.value = Real(sum, policy.digits);
    out.direct.error_estimate = Real(abs(term), policy.digits);
    out.direct.terms_used = n;
    out.direct.method = "plain";
  }
  out.asymptotic = optimal_truncate(polyexponential_asymptotic_series(s, x, lambda), policy);
  return out;
}

}  // namespace binser

#include "binser/series_engine.hpp"

namespace binser {

std::string to_string(StopReason reason) {
  switch (reason) {
    case StopReason::ToleranceMet:
      return "TOLERANCE_MET";
    case StopReason::OptimalTruncation:
      return "OPTIMAL_TRUNCATION";
    case StopReason::MaxTerms:
      return "MAX_TERMS";
  }
  return "UNKNOWN";
}

namespace providers {

CoeffProvider<Real> exponential() {
  return CoeffProvider<Real>(
      "exp(t)", [](std::size_t m) { return to_real(Rational(1, factorial(static_cast<unsigned>(m)))); },
      [](const Real& t) { return Real(exp(t)); });
}

CoeffProvider<Real> one_minus_exp_neg() {
  return CoeffProvider<Real>(
      "1-exp(-t)",
      [](std::size_t m) {
        if (m == 0) return Real(0);
        Rational c(1, factorial(static_cast<unsigned>(m)));
        return to_real(m % 2 ? c : Rational(-c));
      },
      [](const Real& t) { return Real(1 - exp(-t)); });
}

CoeffProvider<Real> shifted_inverse_power(const Param& a, const Param& s) {
  return CoeffProvider<Real>(
      "(a+t)^{-s}",
      [a, s](std::size_t m) {
        const auto mu = static_cast<unsigned>(m);
        const Real c = s.is_exact() ? to_real(generalized_binomial(Rational(-s.exact()), mu))
                                    : generalized_binomial(Real(-s.real()), mu);
        return Real(c * pow(a.real(), Real(-s.real() - static_cast<long>(m))));
      },
      [a, s](const Real& t) {
        const Real base = a.real() + t;
        if (base <= 0) throw std::domain_error("(a+t)^{-s} needs a + t > 0");
        return Real(pow(base, -s.real()));
      });
}

CoeffProvider<Real> lerch_kernel(const Param& x, const Param& a, const Param& s) {
  return CoeffProvider<Real>(
      "x^t/(a+t)^s",
      [x, a, s](std::size_t m) {
        // sum_k C(-s, m-k) log^k x / (k! a^{m+s-k})
        const Real lx = log(x.real());
        const Real av = a.real();
        Real sum = 0;
        Real lpow = 1;
        for (std::size_t k = 0; k <= m; ++k) {
          if (k > 0) lpow *= lx / Real(k);
          const auto j = static_cast<unsigned>(m - k);
          const Real c = s.is_exact() ? to_real(generalized_binomial(Rational(-s.exact()), j))
                                      : generalized_binomial(Real(-s.real()), j);
          sum += c * lpow * pow(av, Real(-s.real() - static_cast<long>(j)));
        }
        return sum;
      },
      [x, a, s](const Real& t) {
        const Real base = a.real() + t;
        if (base <= 0) throw std::domain_error("x^t/(a+t)^s needs a + t > 0");
        return Real(pow(x.real(), t) * pow(base, -s.real()));
      });
}

CoeffProvider<Real> log_shift(const Param& z) {
  return CoeffProvider<Real>(
      "log(1+t/z)",
      [z](std::size_t m) {
        if (m == 0) return Real(0);
        Real c = Real(1) / (Real(m) * pow(z.real(), Real(static_cast<long>(m))));
        return m % 2 ? c : Real(-c);
      },
      [z](const Real& t) {
        const Real arg = 1 + t / z.real();
        if (arg <= 0) throw std::domain_error("log(1+t/z) needs 1 + t/z > 0");
        return Real(log(arg));
      });
}

}  // namespace providers

TransformSums<Real> euler_transform_exp(const std::function<Real(std::size_t)>& grid, const Real& x,
                                        const Real& lambda, std::size_t n_max) {
  const unsigned digits = WorkingPrecision::current();
  const double growth = 1.0 + std::abs(lambda.convert_to<double>());
  TransformSums<Real> out;
  WorkingPrecision guard(digits + cancellation_guard(n_max, std::max(2.0, growth)));
  std::vector<Real> values;
  values.reserve(n_max + 1);
  for (std::size_t n = 0; n <= n_max; ++n) values.push_back(grid(n));
  const Real xs(x, guard.digits());
  const Real lam(lambda, guard.digits());
  const Real scale = exp(lam * xs);
  std::vector<Real> lam_pow(n_max + 1);
  lam_pow[0] = 1;
  for (std::size_t i = 1; i <= n_max; ++i) lam_pow[i] = lam_pow[i - 1] * lam;
  Real lhs = 0, rhs = 0, xn_over_fact = 1;
  for (std::size_t n = 0; n <= n_max; ++n) {
    if (n > 0) xn_over_fact *= xs / Real(n);
    lhs += (n % 2 ? Real(-xn_over_fact) : xn_over_fact) * values[n];
    Real inner = 0;
    Integer c = 1;
    for (std::size_t k = 0; k <= n; ++k) {
      if (k > 0) {
        c *= n - k + 1;
        c /= k;
      }
      Real term = to_real(c) * lam_pow[n - k] * values[k];
      if (k % 2) inner -= term;
      else inner += term;
    }
    rhs += xn_over_fact * inner;
    out.lhs.push_back(Real(scale * lhs, digits));
    out.rhs.push_back(Real(rhs, digits));
  }
  return out;
}

Real stf_exp(const TruncatedSeries<Real>& f, const Real& x, const Real& z) {
  Real sum = 0;
  Real zpow = 1;
  for (std::size_t m = 0; m < f.coefficients.size(); ++m) {
    if (m > 0) zpow *= z;
    if (f[m] == 0) continue;
    sum += f[m] * zpow * exp_poly(static_cast<unsigned>(m))(x);
  }
  return exp(x) * sum;
}

}  // namespace binser

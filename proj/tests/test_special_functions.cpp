#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binser/exact_core.hpp"
#include "binser/poly_families.hpp"
#include "binser/special_functions.hpp"

using namespace binser;

namespace {

constexpr unsigned kDigits = 50;

// Reference constants.
const char* const kZeta3 = "1.2020569031595942853997381615114499907649862923405";
const char* const kEulerGamma = "0.57721566490153286060651209008240243104215933593992";

Real pi() { return machin_pi(); }

SeriesOptions tight(double tol = 1e-30) {
  SeriesOptions o;
  o.tol = tol;
  o.digits = kDigits;
  return o;
}

bool near(const Real& a, const Real& b, const Real& tol) { return abs(a - b) <= tol; }

// sum_{k<n} x^k / (k+a)^s, direct.
Real lerch_direct(const Real& x, const Real& s, const Real& a, std::size_t n) {
  Real sum = 0, xp = 1;
  for (std::size_t k = 0; k < n; ++k) {
    sum += xp / pow(Real(long(k)) + a, s);
    xp *= x;
  }
  return sum;
}

// psi(n) = -gamma + H_{n-1}
Real digamma_integer(unsigned n) {
  Real h = 0;
  for (unsigned k = 1; k < n; ++k) h += Real(1) / Real(k);
  return h - Real(kEulerGamma);
}

}  // namespace

TEST_CASE("hurwitz_zeta examples") {
  WorkingPrecision wp(kDigits);
  const Real z2 = pow(pi(), Real(2)) / 6;
  const auto a1 = hurwitz_zeta(1, 1, tight());
  CHECK(a1.ok());
  CHECK(near(a1.value, z2, Real("1e-28")));
  CHECK(near(hurwitz_zeta(1, 2, tight()).value, z2 - 1, Real("1e-28")));
  CHECK(near(hurwitz_zeta(2, 1, tight()).value, Real(kZeta3), Real("1e-28")));
  CHECK_THROWS_AS(hurwitz_zeta(0, 1), std::domain_error);
  CHECK_THROWS_AS(hurwitz_zeta(1, -1), std::domain_error);
}

TEST_CASE("hurwitz_zeta unshifted route and non-integer s") {
  WorkingPrecision wp(kDigits);
  SeriesOptions o = tight(1e-12);
  o.shift = 0;
  const auto r = hurwitz_zeta(1, 1, o);
  CHECK(r.shift == 0);
  CHECK(r.stop_reason == StopReason::ToleranceMet);
  CHECK(near(r.value, pow(pi(), Real(2)) / 6, Real("1e-11")));
  // zeta(3/2, 3) = sum_{k=3}^{29} k^{-3/2} + zeta(3/2, 30)
  const Real half("0.5");
  Real expected = hurwitz_zeta_asymptotic(Rational(1, 2), 30).value;
  for (long k = 3; k < 30; ++k) expected += pow(Real(k), Real("-1.5"));
  CHECK(near(hurwitz_zeta(Rational(1, 2), 3, tight(1e-25)).value, expected, Real("1e-20")));
}

TEST_CASE("eta examples") {
  WorkingPrecision wp(kDigits);
  const auto r = eta(1, 1, tight());
  CHECK(r.method == "plain");
  CHECK(near(r.value, log(Real(2)), Real("1e-29")));
  CHECK(near(eta(2, 1, tight()).value, pow(pi(), Real(2)) / 12, Real("1e-29")));
  CHECK(near(eta(1, Rational(1, 2), tight()).value, pi() / 2, Real("1e-29")));
}

TEST_CASE("lerch_phi examples") {
  WorkingPrecision wp(kDigits);
  const auto one = lerch_phi(1, 1, 1, tight());
  CHECK(near(one.combination.value, hurwitz_zeta(1, 1, tight()).value, Real("1e-28")));
  CHECK(near(one.alternating.value, eta(1, 1, tight()).value, Real("1e-28")));
  const Real x("0.5");
  const auto half = lerch_phi(Rational(1, 2), 2, 1, tight());
  const Real combo = 2 * lerch_direct(x, Real(3), Real(1), 400) - log(x) * lerch_direct(x, Real(2), Real(1), 400);
  CHECK(near(half.combination.value, combo, Real("1e-28")));
  CHECK(near(half.alternating.value, lerch_direct(Real(-x), Real(2), Real(1), 400), Real("1e-28")));
  CHECK_THROWS_AS(lerch_phi(Rational(3, 2), 1, 1), std::domain_error);
  CHECK_THROWS_AS(lerch_phi(0, 1, 1), std::domain_error);
}

TEST_CASE("digamma examples") {
  WorkingPrecision wp(kDigits);
  const auto o = tight(1e-25);
  CHECK(near(digamma(4, o).value - digamma(3, o).value, Real(1) / 3, Real("1e-20")));
  CHECK(near(digamma(Rational(1, 2), o).value - digamma(1, o).value, -2 * log(Real(2)), Real("1e-20")));
  CHECK(near(digamma(10, o).value, digamma_asymptotic(0, 10).value, Real("1e-20")));
  CHECK(near(digamma(10, o).value, digamma_integer(10), Real("1e-20")));
  for (const Param& z : {Param(1), Param(Rational(5, 2)), Param(10)})
    CHECK(near(digamma(z, o, DigammaForm::LogShifted).value, digamma(z, o, DigammaForm::Direct).value,
               Real("1e-20")));
}

TEST_CASE("digamma unshifted forms differ only in the log z term") {
  WorkingPrecision wp(kDigits);
  SeriesOptions o = tight(1e-12);
  o.shift = 0;
  const auto direct = digamma(10, o, DigammaForm::Direct);
  const auto shifted = digamma(10, o, DigammaForm::LogShifted);
  CHECK(direct.shift == 0);
  CHECK(near(direct.value, shifted.value, Real("1e-10")));
  CHECK(near(direct.value, digamma_integer(10), Real("1e-10")));
}

TEST_CASE("digamma_asymptotic examples") {
  WorkingPrecision wp(kDigits);
  const auto r = digamma_asymptotic(0, 10);
  CHECK(near(r.value, digamma_integer(10), Real("1e-10") * abs(digamma_integer(10))));
  CHECK(near(digamma_asymptotic(1, 10).value, r.value + Real(1) / 10, Real("1e-25")));
  const auto series = digamma_asymptotic_series(Rational(1, 3), 7);
  CHECK(near(series.prefix, log(Real(7)), Real("1e-45")));
  CHECK(near(series.term(1), (Real(1) / 3 - Real(1) / 2) / 7, Real("1e-45")));
  // Very small z truncates immediately and warns.
  const auto tiny = digamma_asymptotic(0, Rational(1, 10));
  CHECK(!tiny.warnings.empty());
}

TEST_CASE("loggamma_asymptotic examples") {
  WorkingPrecision wp(kDigits);
  const Real oracle = log(Real(362880));
  CHECK(near(loggamma_asymptotic(0, 10).value, oracle, Real("1e-10") * oracle));
  CHECK(near(loggamma_asymptotic(1, 9).value, oracle, Real("1e-10") * oracle));
  // Leading behaviour for large z is Stirling's formula plus 1/(12 z).
  const Real z(1000);
  const Real stirling = (z - Real(1) / 2) * log(z) - z + log_sqrt_two_pi();
  const Real v = loggamma_asymptotic(0, 1000).value;
  CHECK(near(v - stirling, Real(1) / (12 * z), Real("1e-9")));
  CHECK(near(v, boost::multiprecision::lgamma(z), Real("1e-40")));
}

TEST_CASE("hurwitz_zeta_asymptotic examples") {
  WorkingPrecision wp(kDigits);
  Real oracle = pow(pi(), Real(2)) / 6;
  for (long k = 1; k <= 9; ++k) oracle -= Real(1) / Real(k * k);
  CHECK(near(hurwitz_zeta_asymptotic(1, 10).value, oracle, Real("1e-10") * oracle));
  const Real z320 = hurwitz_zeta(2, 20, tight()).value;
  CHECK(near(hurwitz_zeta_asymptotic(2, 20).value, z320, Real("1e-10") * z320));
  const auto series = hurwitz_zeta_asymptotic_series(2, 20);
  CHECK(near(series.prefix + series.term(series.first_index), pow(Real(20), Real(-2)) / 2, Real("1e-45")));
}

TEST_CASE("eta_asymptotic examples") {
  WorkingPrecision wp(kDigits);
  CHECK(near(eta_asymptotic(1, 10, 0).value, eta(1, 10, tight()).value, Real("1e-9")));
  const auto e_form = eta_asymptotic_series(3, 10, 0);
  const auto b_form = eta_asymptotic_bernoulli_series(3, 10);
  for (std::size_t m = 0; m <= 30; ++m) CHECK(near(e_form.term(m), b_form.term(m), Real("1e-45")));
  CHECK(near(e_form.term(0), Real(1) / (2 * pow(Real(10), Real(3))), Real("1e-45")));
}

TEST_CASE("lerch_asymptotic examples") {
  WorkingPrecision wp(kDigits);
  const auto lerch1 = lerch_asymptotic_series(1, 2, 10);
  const auto hurwitz = hurwitz_zeta_asymptotic_series(2, 10);
  for (std::size_t m = 0; m <= 30; ++m) CHECK(near(lerch1.term(m), 2 * hurwitz.term(m), Real("1e-45")));
  const Real x("0.9");
  const Real oracle =
      lerch_direct(x, Real(2), Real(15), 1500) - log(x) * lerch_direct(x, Real(1), Real(15), 1500);
  CHECK(near(lerch_asymptotic(Rational(9, 10), 1, 15).value, oracle, Real("1e-7")));
  CHECK(near(lerch_asymptotic_series(Rational(1, 2), 3, 12).term(0), pow(Real(12), Real(-3)), Real("1e-45")));
}

TEST_CASE("arakawa_kaneko examples") {
  WorkingPrecision wp(kDigits);
  CHECK(near(arakawa_kaneko(1, 1, 1, tight()).value, pow(pi(), Real(2)) / 6, Real("1e-25")));
  CHECK(near(arakawa_kaneko(2, 1, 1, tight()).value, Real(kZeta3), Real("1e-25")));
  // Inner sum for s = 2: sum_k C(n,k)(-1)^k/(k+1)^2 = H_{n+1}/(n+1).
  for (unsigned n = 0; n <= 30; ++n) {
    Rational inner = 0, h = 0;
    for (unsigned k = 0; k <= n; ++k) {
      Rational t = Rational(binomial(n, k)) / Rational((k + 1) * (k + 1));
      inner += k % 2 ? Rational(-t) : t;
    }
    for (unsigned k = 1; k <= n + 1; ++k) h += Rational(1, k);
    CHECK(inner == h / Rational(n + 1));
  }
  // so zeta_2(2, 1) = sum H_n / n^3 = pi^4 / 72.
  CHECK(near(arakawa_kaneko(2, 2, 1, tight(1e-20)).value, pow(pi(), Real(4)) / 72, Real("1e-15")));
  CHECK_THROWS_AS(arakawa_kaneko(0, 1, 1), std::domain_error);
}

TEST_CASE("arakawa_kaneko_asymptotic examples") {
  WorkingPrecision wp(kDigits);
  const auto ak = arakawa_kaneko_asymptotic_series(1, 3, 10);
  const auto hz = hurwitz_zeta_asymptotic_series(3, 10);
  for (std::size_t m = 0; m <= 30; ++m) CHECK(near(ak.term(m), 3 * hz.term(m), Real("1e-45")));
  CHECK(near(arakawa_kaneko_asymptotic(2, 2, 10).value, arakawa_kaneko(2, 2, 10, tight()).value, Real("1e-6")));
  CHECK(near(arakawa_kaneko_asymptotic_series(3, 2, 10).term(0), Real(1) / 100, Real("1e-45")));
}

TEST_CASE("polyexponential examples") {
  WorkingPrecision wp(kDigits);
  const auto zero_x = polyexponential(2, 0, 5);
  CHECK(near(zero_x.direct.value, Real(1) / 25, Real("1e-45")));
  CHECK(near(zero_x.asymptotic.value, Real(1) / 25, Real("1e-45")));
  const auto zero_s = polyexponential(0, Rational(3, 2), 7);
  CHECK(near(zero_s.direct.value, exp(Real("1.5")), Real("1e-40")));
  CHECK(near(zero_s.asymptotic.value, exp(Real("1.5")), Real("1e-40")));
  const auto p = polyexponential(1, 1, 20);
  CHECK(near(p.direct.value, p.asymptotic.value, Real("1e-8")));
}

TEST_CASE("optimal_truncate examples") {
  WorkingPrecision wp(kDigits);
  AsymptoticSeries s;
  // 2^{-m} for m < 10, then growing.
  s.term = [](std::size_t m) { return m < 10 ? Real(pow(Real(2), -Real(long(m)))) : Real(pow(Real(2), Real(long(m)))); };
  const auto r = optimal_truncate(s);
  CHECK(r.stop_reason == StopReason::OptimalTruncation);
  CHECK(r.terms_used == 10);
  CHECK(near(r.value, 2 - pow(Real(2), Real(-9)), Real("1e-45")));
  CHECK(r.error_estimate == 1024);

  AsymptoticSeries poly;
  poly.term = [](std::size_t m) { return m <= 3 ? Real(long(4 - m)) : Real(0); };
  const auto exact = optimal_truncate(poly);
  CHECK(exact.value == 10);
  CHECK(exact.error_estimate == 0);

  // Degenerate: the second term already grows.
  AsymptoticSeries grows;
  grows.term = [](std::size_t m) { return Real(long(m + 1)); };
  const auto g = optimal_truncate(grows);
  CHECK(g.value == 1);
  CHECK(g.error_estimate == 2);

  // Digamma at z = 10: the truncation index minimizes |B_m| / (m 10^m).
  const auto dg = digamma_asymptotic_series(0, 10);
  std::size_t best = 1;
  Real best_mag = abs(dg.term(1));
  for (std::size_t m = 2; m < 200; ++m) {
    const Real mag = abs(dg.term(m));
    if (mag != 0 && mag < best_mag) {
      best_mag = mag;
      best = m;
    }
  }
  const auto tr = digamma_asymptotic(0, 10);
  CHECK(tr.terms_used == best);
}

TEST_CASE("property: series and asymptotic routes agree within their error estimates") {
  WorkingPrecision wp(kDigits);
  auto agree = [](const EvalResult& a, const EvalResult& b) {
    const Real allowed = max(a.error_estimate, b.error_estimate) + Real("1e-45") * abs(a.value);
    return abs(a.value - b.value) <= allowed;
  };
  const auto o = tight(1e-30);
  for (long a : {5, 10, 20, 50}) {
    for (long s = 1; s <= 3; ++s) {
      CHECK_MESSAGE(agree(hurwitz_zeta(s, a, o), hurwitz_zeta_asymptotic(s, a)), "zeta s=", s, " a=", a);
      CHECK_MESSAGE(agree(eta(s, a, o), eta_asymptotic(s, a, 0)), "eta s=", s, " a=", a);
      const auto pe = polyexponential(s, 1, a);
      CHECK_MESSAGE(agree(pe.direct, pe.asymptotic), "polyexp s=", s, " lambda=", a);
      for (unsigned r = 1; r <= 3; ++r)
        CHECK_MESSAGE(agree(arakawa_kaneko(r, s, a, o), arakawa_kaneko_asymptotic(r, s, a)), "ak r=", r, " s=", s,
                      " a=", a);
    }
    CHECK_MESSAGE(agree(digamma(a, o), digamma_asymptotic(0, a)), "digamma z=", a);
  }
}

TEST_CASE("property: recurrences") {
  WorkingPrecision wp(kDigits);
  const auto o = tight(1e-20);
  for (long z : {5, 10, 20, 50}) {
    CHECK(near(digamma(z + 1, o).value - digamma(z, o).value, Real(1) / Real(z), Real("1e-8")));
    for (long s = 1; s <= 3; ++s)
      CHECK(near(hurwitz_zeta(s, z, o).value - hurwitz_zeta(s, z + 1, o).value, pow(Real(z), Real(-s - 1)),
                 Real("1e-8")));
  }
}

TEST_CASE("property: doubling the argument at fixed truncation does not increase the error") {
  WorkingPrecision wp(kDigits);
  const std::size_t kept = 6;
  auto truncated = [kept](const AsymptoticSeries& series) {
    Real sum = series.prefix;
    for (std::size_t m = series.first_index; m < series.first_index + kept; ++m) sum += series.term(m);
    return sum;
  };
  for (long a : {5, 10, 20}) {
    const auto o = tight(1e-30);
    const Real e1 = abs(truncated(hurwitz_zeta_asymptotic_series(2, a)) - hurwitz_zeta(2, a, o).value);
    const Real e2 = abs(truncated(hurwitz_zeta_asymptotic_series(2, 2 * a)) - hurwitz_zeta(2, 2 * a, o).value);
    CHECK(e2 <= e1);
    const Real d1 = abs(truncated(digamma_asymptotic_series(0, a)) - digamma(a, o).value);
    const Real d2 = abs(truncated(digamma_asymptotic_series(0, 2 * a)) - digamma(2 * a, o).value);
    CHECK(d2 <= d1);
  }
}

TEST_CASE("property: Arakawa-Kaneko with r = 1 is s zeta(s+1, a)") {
  WorkingPrecision wp(kDigits);
  const auto o = tight(1e-25);
  for (long s : {1, 2})
    for (long a : {1, 2, 5}) {
      const auto ak = arakawa_kaneko(1, s, a, o);
      const auto hz = hurwitz_zeta(s, a, o);
      CHECK(near(ak.value, s * hz.value, Real(1e-8)));
    }
}

TEST_CASE("EvalResult invariants") {
  WorkingPrecision wp(kDigits);
  const auto r = hurwitz_zeta(2, 3, tight(1e-20));
  CHECK(r.error_estimate >= 0);
  CHECK(r.stop_reason == StopReason::ToleranceMet);
  CHECK(r.error_estimate <= Real(1e-20) * abs(r.value));
  SeriesOptions capped = tight(1e-30);
  capped.max_terms = 5;
  capped.shift = 0;
  const auto c = hurwitz_zeta(1, 1, capped);
  CHECK(c.stop_reason == StopReason::MaxTerms);
  CHECK(!c.ok());
  CHECK(!c.warnings.empty());
}

#pragma once

// Zeta-type functions through their binomial (Hasse-type) series, and their
// asymptotic expansions with optimal truncation.
//
// Convergent routes compute the inner sums sum_k C(n,k) (-1)^k h(k) exactly
// when h(k) is rational (rational a and x, integer s), otherwise with
// n log10(2) guard digits.  Series weighted by 1/(n+1)^r are accelerated;
// see acceleration.hpp.  For a < 10 the Hurwitz, Lerch and digamma routes
// also shift the argument by the elementary recurrence before summing; set
// `shift = 0` to sum the series exactly as written.

#include "binser/acceleration.hpp"
#include "binser/numeric.hpp"
#include "binser/series_engine.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace binser {

struct EvalResult {
  Real value;
  Real error_estimate;
  std::size_t terms_used = 0;
  StopReason stop_reason = StopReason::MaxTerms;
  std::vector<std::string> warnings;
  /// Argument shift applied before summing (convergent routes).
  unsigned shift = 0;
  /// "plain", "levin-u", "richardson" or "asymptotic".
  std::string method;

  bool ok() const { return stop_reason != StopReason::MaxTerms; }
};

struct SeriesOptions {
  double tol = 1e-12;
  std::size_t max_terms = 10000;
  unsigned digits = kDefaultDigits;
  /// nullopt: shift so that the summed argument is at least 10.
  std::optional<unsigned> shift;
  bool accelerate = true;
};

struct TruncationPolicy {
  /// Stop early once the next term is below tol |sum|.  0 means "below the
  /// working precision".
  double tol = 0;
  std::size_t max_terms = 10000;
  unsigned digits = kDefaultDigits;
  /// Nonzero terms allowed past the running minimum before stopping.  1 is
  /// the classical rule: stop at the first increase.
  unsigned patience = 1;
};

/// prefix + sum_{m >= first_index} term(m), to be optimally truncated.
struct AsymptoticSeries {
  std::function<Real(std::size_t)> term;
  Real prefix = 0;
  std::size_t first_index = 0;
  /// "1/a", "1/z", "1/lambda".
  std::string variable;
  /// Known number of terms; unset for a genuinely infinite expansion.
  std::optional<std::size_t> length;
};

/// Sums while nonzero terms keep decreasing in magnitude (exact zeros are
/// skipped) and stops at the running minimum once `patience` later nonzero
/// terms fail to undercut it.  The error estimate is the first omitted
/// nonzero term; a run of 8 zeros (or `length`) ends the series with error 0.
/// terms_used counts indices summed, zeros included.
EvalResult optimal_truncate(const AsymptoticSeries& series, const TruncationPolicy& policy = {});

// Convergent routes.  Parameters must satisfy the stated domains; violations
// throw std::domain_error.

/// zeta(s+1, a) from  s zeta(s+1, a) = sum 1/(n+1) sum_k C(n,k)(-1)^k (a+k)^{-s}.  s > 0, a > 0.
EvalResult hurwitz_zeta(const Param& s, const Param& a, const SeriesOptions& options = {});

/// eta(s, a) = Phi(-1, s, a) with weight 1/2^{n+1}.  s > 0, a > 0.
EvalResult eta(const Param& s, const Param& a, const SeriesOptions& options = {});

struct LerchResult {
  /// s Phi(x, s+1, a) - log x Phi(x, s, a).
  EvalResult combination;
  /// Phi(-x, s, a).
  EvalResult alternating;
};

/// 0 < x <= 1, s > 0, a > 0.
LerchResult lerch_phi(const Param& x, const Param& s, const Param& a, const SeriesOptions& options = {});

enum class DigammaForm {
  /// psi(z) = log z + sum 1/(n+1) sum_k C(n,k)(-1)^k log(1 + k/z)
  LogShifted,
  /// psi(z) = sum 1/(n+1) sum_k C(n,k)(-1)^k log(z + k)
  Direct,
};

/// z > 0.
EvalResult digamma(const Param& z, const SeriesOptions& options = {}, DigammaForm form = DigammaForm::Direct);

/// zeta_r(s, a) = sum 1/(n+1)^r sum_k C(n,k)(-1)^k (k+a)^{-s}.  r >= 1, s > 0, a > 0.
EvalResult arakawa_kaneko(unsigned r, const Param& s, const Param& a, const SeriesOptions& options = {});

// Asymptotic expansions.  The *_series builders expose the terms; the
// evaluators apply optimal_truncate at the policy's precision.

/// zeta(s+1, a) = (1/s) sum C(-s, m) B_m a^{-m-s}.
AsymptoticSeries hurwitz_zeta_asymptotic_series(const Param& s, const Param& a);
EvalResult hurwitz_zeta_asymptotic(const Param& s, const Param& a, const TruncationPolicy& policy = {});

/// eta(s, y+a) = (1/2) sum C(-s, m) E_m(y) a^{-m-s}.
AsymptoticSeries eta_asymptotic_series(const Param& s, const Param& a, const Param& y);
/// Same at y = 0 with E_m(0) written as 2 (1 - 2^{m+1}) B_{m+1} / (m+1).
AsymptoticSeries eta_asymptotic_bernoulli_series(const Param& s, const Param& a);
EvalResult eta_asymptotic(const Param& s, const Param& a, const Param& y, const TruncationPolicy& policy = {});

/// s Phi(x, s+1, a) - log x Phi(x, s, a) = sum B_m sum_k C(-s, m-k) log^k x / (k! a^{m+s-k}).
AsymptoticSeries lerch_asymptotic_series(const Param& x, const Param& s, const Param& a);
EvalResult lerch_asymptotic(const Param& x, const Param& s, const Param& a, const TruncationPolicy& policy = {});

/// psi(y+z) = log z + sum_{m>=1} (-1)^{m-1} B_m(y) / (m z^m).  Warns when
/// truncation happens at m <= 2.
AsymptoticSeries digamma_asymptotic_series(const Param& y, const Param& z);
EvalResult digamma_asymptotic(const Param& y, const Param& z, const TruncationPolicy& policy = {});

/// log Gamma(y+z) = (z+y-1/2) log z - z + log sqrt(2 pi) + sum_{m>=1} (-1)^{m+1} B_{m+1}(y) / (m(m+1) z^m).
/// The sign makes the m = 1 term +B_2(y)/(2z), matching Stirling's 1/(12z) at y = 0.
AsymptoticSeries loggamma_asymptotic_series(const Param& y, const Param& z);
EvalResult loggamma_asymptotic(const Param& y, const Param& z, const TruncationPolicy& policy = {});

/// zeta_r(s, a) = sum C(m+s-1, m) B_m^(r) a^{-m-s}.
AsymptoticSeries arakawa_kaneko_asymptotic_series(unsigned r, const Param& s, const Param& a);
EvalResult arakawa_kaneko_asymptotic(unsigned r, const Param& s, const Param& a,
                                     const TruncationPolicy& policy = {});

struct PolyexpResult {
  /// sum x^n / (n! (n+lambda)^s), summed directly.
  EvalResult direct;
  /// e^x sum C(-s, m) phi_m(x) / lambda^{m+s}, optimally truncated.
  EvalResult asymptotic;
};

AsymptoticSeries polyexponential_asymptotic_series(const Param& s, const Param& x, const Param& lambda);
/// lambda > 0.
PolyexpResult polyexponential(const Param& s, const Param& x, const Param& lambda,
                              const TruncationPolicy& policy = {});

}  // namespace binser

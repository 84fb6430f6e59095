#pragma once

// Convergence acceleration for slowly convergent series of real terms.
//
// Hasse-type series with weight 1/(n+1)^r converge only algebraically, so
// plain partial sums are useless for a near 1.  Two extrapolators are offered:
//
//   * Levin's u transform, for terms with a smooth algebraic tail;
//   * a generalized Richardson (E-algorithm style) fit of
//         S - S_N = sum_{i,j} c_ij N^{-alpha-i} log^j N
//     when the tail exponents are known in advance.
//
// Both amplify rounding in the partial sums, so callers must supply terms
// computed with `extra_digits()` guard digits.

#include "binser/numeric.hpp"
#include "binser/series_engine.hpp"

#include <functional>
#include <optional>
#include <vector>

namespace binser {

enum class AccelMethod { Plain, Levin, Richardson };

std::string to_string(AccelMethod method);

/// Tail basis N^{-alpha-i} log^j N, 0 <= j < log_powers.
struct TailModel {
  Real alpha = 1;
  unsigned log_powers = 1;
};

/// Accumulates terms and extrapolates the limit of the partial sums.
class SeriesAccelerator {
 public:
  static SeriesAccelerator plain();
  static SeriesAccelerator levin(std::size_t max_order = 60);
  static SeriesAccelerator richardson(TailModel model, std::size_t max_order = 28);

  AccelMethod method() const { return method_; }
  /// Guard digits the terms should carry.
  unsigned extra_digits() const;

  void push(const Real& term);
  std::size_t size() const { return terms_.size(); }
  const Real& partial_sum() const { return partials_.back(); }

  /// Current limit estimate; the plain partial sum until enough terms exist.
  Real estimate() const;

 private:
  SeriesAccelerator(AccelMethod method, std::size_t max_order) : method_(method), max_order_(max_order) {}

  Real levin_estimate() const;
  Real richardson_estimate() const;

  AccelMethod method_;
  std::size_t max_order_;
  TailModel model_;
  std::vector<Real> terms_;
  std::vector<Real> partials_;
};

struct AcceleratedSum {
  Real value;
  Real error_estimate;
  std::size_t terms_used = 0;
  StopReason stop = StopReason::MaxTerms;
};

/// Sums term(0), term(1), ... through `acc`.
///
/// Plain: stops once |term| <= tol |sum| for 3 consecutive terms.
/// Accelerated: stops once |E_N - E_{N-1}| <= tol |E_N| for 3 consecutive N,
/// and never before 8 terms.
/// The error estimate is the largest of the last three term magnitudes
/// (plain) or differences (accelerated).
///
/// The reported value is scale * sum + offset, and both the test and the
/// estimate refer to that value.
AcceleratedSum accelerated_sum(const std::function<Real(std::size_t)>& term, SeriesAccelerator acc,
                               const Real& tol, std::size_t max_terms, const Real& scale = Real(1),
                               const Real& offset = Real(0));

/// Solves A x = b in place by Gaussian elimination with partial pivoting.
/// Throws std::domain_error for a singular matrix.
std::vector<Real> solve_linear(std::vector<std::vector<Real>> a, std::vector<Real> b);

}  // namespace binser

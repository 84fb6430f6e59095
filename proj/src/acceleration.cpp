#include "binser/acceleration.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace binser {

std::string to_string(AccelMethod method) {
  switch (method) {
    case AccelMethod::Plain:
      return "plain";
    case AccelMethod::Levin:
      return "levin-u";
    case AccelMethod::Richardson:
      return "richardson";
  }
  return "unknown";
}

SeriesAccelerator SeriesAccelerator::plain() { return SeriesAccelerator(AccelMethod::Plain, 0); }

SeriesAccelerator SeriesAccelerator::levin(std::size_t max_order) {
  return SeriesAccelerator(AccelMethod::Levin, max_order);
}

SeriesAccelerator SeriesAccelerator::richardson(TailModel model, std::size_t max_order) {
  SeriesAccelerator acc(AccelMethod::Richardson, max_order);
  if (model.log_powers == 0) model.log_powers = 1;
  acc.model_ = model;
  return acc;
}

unsigned SeriesAccelerator::extra_digits() const {
  switch (method_) {
    case AccelMethod::Plain:
      return 0;
    case AccelMethod::Levin:
      return 140;
    case AccelMethod::Richardson:
      return static_cast<unsigned>(4 * max_order_ + 20);
  }
  return 0;
}

void SeriesAccelerator::push(const Real& term) {
  terms_.push_back(term);
  partials_.push_back(partials_.empty() ? term : Real(partials_.back() + term));
}

Real SeriesAccelerator::estimate() const {
  if (partials_.empty()) return Real(0);
  switch (method_) {
    case AccelMethod::Plain:
      return partials_.back();
    case AccelMethod::Levin:
      return levin_estimate();
    case AccelMethod::Richardson:
      return richardson_estimate();
  }
  return partials_.back();
}

// u transform, beta = 1:
//   L = sum_j (-1)^j C(k,j) c_j S_{n+j}/w_{n+j} / sum_j (-1)^j C(k,j) c_j / w_{n+j}
//   c_j = ((1+n+j)/(1+n+k))^{k-1},  w_m = (1+m) a_m
Real SeriesAccelerator::levin_estimate() const {
  const std::size_t size = terms_.size();
  if (terms_.back() == 0) return partials_.back();
  std::size_t start = size - 1;
  while (start > 0 && terms_[start - 1] != 0 && size - start <= max_order_) --start;
  const std::size_t k = size - 1 - start;
  if (k < 2) return partials_.back();
  const std::size_t n = start;
  Real num = 0, den = 0;
  Integer c = 1;
  const Real last = Real(n + k + 1);
  for (std::size_t j = 0; j <= k; ++j) {
    if (j > 0) {
      c *= k - j + 1;
      c /= j;
    }
    const Real ratio = Real(n + j + 1) / last;
    Real weight = to_real(c) * pow(ratio, Real(static_cast<long>(k) - 1));
    weight /= Real(n + j + 1) * terms_[n + j];
    if (j % 2) weight = -weight;
    num += weight * partials_[n + j];
    den += weight;
  }
  if (den == 0) return partials_.back();
  return num / den;
}

// S_N = S + sum_c coef_c b_c(N), fitted on the last K+1 partial sums, where
// N counts terms and b_c runs over N^{-alpha-i} log^j N.
Real SeriesAccelerator::richardson_estimate() const {
  const std::size_t size = partials_.size();
  if (size < 3) return partials_.back();
  const std::size_t k = std::min(max_order_, size - 2);
  const Real alpha(model_.alpha, WorkingPrecision::current());
  const unsigned jmax = model_.log_powers;
  std::vector<std::vector<Real>> a(k + 1, std::vector<Real>(k + 1));
  std::vector<Real> b(k + 1);
  for (std::size_t row = 0; row <= k; ++row) {
    const std::size_t m = size - 1 - k + row;
    const Real big_n = Real(m + 1);
    const Real lg = log(big_n);
    a[row][0] = 1;
    for (std::size_t col = 1; col <= k; ++col) {
      const std::size_t i = (col - 1) / jmax;
      const std::size_t j = (col - 1) % jmax;
      a[row][col] = pow(big_n, Real(-alpha - static_cast<long>(i))) * pow(lg, Real(static_cast<long>(j)));
    }
    b[row] = partials_[m];
  }
  // Column scaling keeps pivots comparable; column 0 is already O(1).
  for (std::size_t col = 1; col <= k; ++col) {
    Real scale = 0;
    for (std::size_t row = 0; row <= k; ++row) scale = std::max(scale, Real(abs(a[row][col])));
    if (scale == 0) continue;
    for (std::size_t row = 0; row <= k; ++row) a[row][col] /= scale;
  }
  try {
    return solve_linear(std::move(a), std::move(b))[0];
  } catch (const std::domain_error&) {
    return partials_.back();
  }
}

std::vector<Real> solve_linear(std::vector<std::vector<Real>> a, std::vector<Real> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t row = col + 1; row < n; ++row)
      if (abs(a[row][col]) > abs(a[pivot][col])) pivot = row;
    if (a[pivot][col] == 0) throw std::domain_error("singular linear system");
    std::swap(a[pivot], a[col]);
    std::swap(b[pivot], b[col]);
    for (std::size_t row = col + 1; row < n; ++row) {
      const Real factor = a[row][col] / a[col][col];
      if (factor == 0) continue;
      for (std::size_t c = col; c < n; ++c) a[row][c] -= factor * a[col][c];
      b[row] -= factor * b[col];
    }
  }
  std::vector<Real> x(n);
  for (std::size_t i = n; i-- > 0;) {
    Real sum = b[i];
    for (std::size_t c = i + 1; c < n; ++c) sum -= a[i][c] * x[c];
    x[i] = sum / a[i][i];
  }
  return x;
}

AcceleratedSum accelerated_sum(const std::function<Real(std::size_t)>& term, SeriesAccelerator acc,
                               const Real& tol, std::size_t max_terms, const Real& scale,
                               const Real& offset) {
  AcceleratedSum out;
  const bool plain = acc.method() == AccelMethod::Plain;
  const std::size_t min_terms = plain ? 1 : 8;
  Real previous = 0;
  std::deque<Real> window;  // last three changes
  int streak = 0;
  for (std::size_t n = 0; n < max_terms; ++n) {
    const Real t = term(n);
    acc.push(t);
    const Real current = scale * acc.estimate() + offset;
    const Real change = plain || n == 0 ? Real(abs(scale * t)) : Real(abs(current - previous));
    previous = current;
    out.value = current;
    out.terms_used = n + 1;
    window.push_back(change);
    if (window.size() > 3) window.pop_front();
    out.error_estimate = *std::max_element(window.begin(), window.end());
    if (n == 0 && !plain) continue;
    streak = change <= tol * abs(current) ? streak + 1 : 0;
    if (streak >= 3 && out.terms_used >= min_terms && out.error_estimate <= tol * abs(current)) {
      out.stop = StopReason::ToleranceMet;
      return out;
    }
  }
  out.stop = StopReason::MaxTerms;
  return out;
}

}  // namespace binser

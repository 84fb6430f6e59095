#include "binser/exact_core.hpp"

#include <algorithm>
#include <stdexcept>

namespace binser {

namespace {

// Capacity after growth: at least `needed` rows, at least double the old size.
std::size_t grown_size(std::size_t current, unsigned needed) {
  return std::max<std::size_t>(static_cast<std::size_t>(needed) + 1, 2 * current);
}

}  // namespace

StirlingTable2& StirlingTable2::shared() {
  static StirlingTable2 table;
  return table;
}

void StirlingTable2::ensure(unsigned m) {
  if (m < rows_.size()) return;
  const std::size_t target = grown_size(rows_.size(), m);
  rows_.reserve(target);
  while (rows_.size() < target) {
    const auto& prev = rows_.back();
    const std::size_t k = rows_.size();
    std::vector<Integer> next(k + 1);
    next[0] = 0;
    for (std::size_t n = 1; n <= k; ++n) {
      // S(k, n) = n S(k-1, n) + S(k-1, n-1)
      Integer same = n < prev.size() ? Integer(n * prev[n]) : Integer(0);
      next[n] = same + prev[n - 1];
    }
    rows_.push_back(std::move(next));
  }
}

Integer StirlingTable2::at(unsigned m, unsigned n) {
  if (n > m) return 0;
  std::lock_guard lock(mutex_);
  ensure(m);
  return rows_[m][n];
}

std::vector<Integer> StirlingTable2::row(unsigned m) {
  std::lock_guard lock(mutex_);
  ensure(m);
  return rows_[m];
}

unsigned StirlingTable2::rows_built() {
  std::lock_guard lock(mutex_);
  return static_cast<unsigned>(rows_.size());
}

StirlingTable1& StirlingTable1::shared() {
  static StirlingTable1 table;
  return table;
}

void StirlingTable1::ensure(unsigned p) {
  if (p < rows_.size()) return;
  const std::size_t target = grown_size(rows_.size(), p);
  rows_.reserve(target);
  while (rows_.size() < target) {
    const auto& prev = rows_.back();
    const std::size_t k = rows_.size();
    // t(t-1)...(t-k+1) = [t(t-1)...(t-k+2)] * (t - (k-1))
    std::vector<Integer> next(k + 1);
    for (std::size_t m = 0; m <= k; ++m) {
      Integer v = 0;
      if (m >= 1) v += prev[m - 1];
      if (m < prev.size()) v -= (k - 1) * prev[m];
      next[m] = v;
    }
    rows_.push_back(std::move(next));
  }
}

Integer StirlingTable1::at(unsigned p, unsigned m) {
  if (m > p) return 0;
  std::lock_guard lock(mutex_);
  ensure(p);
  return rows_[p][m];
}

std::vector<Integer> StirlingTable1::row(unsigned p) {
  std::lock_guard lock(mutex_);
  ensure(p);
  return rows_[p];
}

Integer stirling2(unsigned m, unsigned n) { return StirlingTable2::shared().at(m, n); }

Integer stirling1_signed(unsigned p, unsigned m) { return StirlingTable1::shared().at(p, m); }

Integer bell(unsigned n) {
  Integer sum = 0;
  for (const auto& s : StirlingTable2::shared().row(n)) sum += s;
  return sum;
}

std::vector<Integer> bell_sequence(unsigned n) {
  std::vector<Integer> out;
  out.reserve(n + 1);
  for (unsigned k = 0; k <= n; ++k) out.push_back(bell(k));
  return out;
}

Integer lemma2_sum(unsigned m) {
  if (m == 0) throw std::invalid_argument("lemma2_sum requires m >= 1");
  const auto row = StirlingTable2::shared().row(m);
  Integer sum = 0;
  Integer fact = 1;  // (n-1)!
  for (unsigned n = 1; n <= m; ++n) {
    if (n > 1) fact *= (n - 1);
    if (n % 2) sum -= row[n] * fact;
    else sum += row[n] * fact;
  }
  return sum;
}

Integer factorial(unsigned n) {
  Integer f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

Integer binomial(long n, long k) {
  if (n < 0) throw std::invalid_argument("binomial requires n >= 0");
  if (k < 0 || k > n) return 0;
  k = std::min(k, n - k);
  Integer c = 1;
  for (long j = 1; j <= k; ++j) {
    c *= n - k + j;
    c /= j;
  }
  return c;
}

Rational generalized_binomial(const Rational& s, unsigned m) {
  Rational c = 1;
  for (unsigned j = 0; j < m; ++j) {
    c *= s - j;
    c /= j + 1;
  }
  return c;
}

Real generalized_binomial(const Real& s, unsigned m) {
  Real c = 1;
  for (unsigned j = 0; j < m; ++j) {
    c *= s - j;
    c /= j + 1;
  }
  return c;
}

}  // namespace binser

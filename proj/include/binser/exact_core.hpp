#pragma once

// Exact combinatorial tables: Stirling numbers of both kinds, Bell numbers,
// binomial coefficients.  Tables grow on demand and are shared process-wide;
// every accessor returns values, so callers never hold references into a
// table another thread may be extending.

#include "binser/numeric.hpp"

#include <mutex>
#include <vector>

namespace binser {

/// Triangle of S(m, n), the Stirling numbers of the second kind.
class StirlingTable2 {
 public:
  static StirlingTable2& shared();

  /// S(m, n); zero outside 0 <= n <= m.
  Integer at(unsigned m, unsigned n);
  /// S(m, 0), ..., S(m, m).
  std::vector<Integer> row(unsigned m);
  unsigned rows_built();

 private:
  void ensure(unsigned m);

  std::mutex mutex_;
  std::vector<std::vector<Integer>> rows_{{Integer(1)}};
};

/// Triangle of signed s(p, m), the Stirling numbers of the first kind:
/// p! C(t, p) = sum_m s(p, m) t^m.
class StirlingTable1 {
 public:
  static StirlingTable1& shared();

  Integer at(unsigned p, unsigned m);
  std::vector<Integer> row(unsigned p);

 private:
  void ensure(unsigned p);

  std::mutex mutex_;
  std::vector<std::vector<Integer>> rows_{{Integer(1)}};
};

Integer stirling2(unsigned m, unsigned n);
Integer stirling1_signed(unsigned p, unsigned m);

/// b_n = sum_k S(n, k).
Integer bell(unsigned n);
/// b_0, ..., b_n.
std::vector<Integer> bell_sequence(unsigned n);

/// sum_{n=1}^m S(m, n) (n-1)! (-1)^n.  Throws std::invalid_argument for m == 0.
Integer lemma2_sum(unsigned m);

Integer factorial(unsigned n);

/// C(n, k) for n >= 0; zero when k < 0 or k > n.
Integer binomial(long n, long k);

/// s (s-1) ... (s-m+1) / m! for rational s.
Rational generalized_binomial(const Rational& s, unsigned m);

/// Same falling-factorial product at the current working precision.
Real generalized_binomial(const Real& s, unsigned m);

}  // namespace binser

#pragma once

// Scalar types shared by every module: GMP-backed exact integers and
// rationals, and MPFR-backed reals whose precision is chosen at run time.

#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/mpfr.hpp>

#include <optional>
#include <string>
#include <string_view>

namespace binser {

using Integer = boost::multiprecision::mpz_int;
using Rational = boost::multiprecision::mpq_rational;
using Real = boost::multiprecision::mpfr_float;

inline constexpr unsigned kDefaultDigits = 50;

/// RAII guard for the thread's default MPFR precision (decimal digits).
/// Every Real created while the guard is alive gets at least this precision.
class WorkingPrecision {
 public:
  explicit WorkingPrecision(unsigned digits10);
  ~WorkingPrecision();
  WorkingPrecision(const WorkingPrecision&) = delete;
  WorkingPrecision& operator=(const WorkingPrecision&) = delete;

  unsigned digits() const { return digits_; }
  static unsigned current();

 private:
  unsigned previous_;
  unsigned digits_;
};

Real to_real(const Rational& q);
Real to_real(const Integer& n);

/// "p/q", or "p" when q == 1.
std::string to_string(const Rational& q);
std::string to_string(const Integer& n);

/// Scientific notation with `significant` digits; deterministic across runs.
std::string format_real(const Real& x, unsigned significant);

/// Parses integers ("-3"), fractions ("7/12"), and decimals ("0.25",
/// "1.5e-3") into an exact rational.  Throws std::invalid_argument.
Rational parse_rational(std::string_view text);

Rational power(const Rational& base, long exponent);
Integer power(const Integer& base, unsigned exponent);

/// Integer value of q if it has denominator 1 and fits in a long.
std::optional<long> as_long(const Rational& q);

/// π at the current working precision from Machin's arctangent formula.
Real machin_pi();

/// log √(2π) at the current working precision, built on machin_pi().
Real log_sqrt_two_pi();

/// A real-valued parameter that remembers whether it is an exact rational.
/// Exact parameters keep their full value at any working precision; inexact
/// ones are carried as the binary value they were constructed with.
class Param {
 public:
  Param(int value);  // NOLINT(google-explicit-constructor)
  Param(long value);  // NOLINT(google-explicit-constructor)
  Param(const Rational& value);  // NOLINT(google-explicit-constructor)
  /// Integer-valued doubles become exact; anything else stays inexact.
  Param(double value);  // NOLINT(google-explicit-constructor)
  explicit Param(const Real& value);

  static Param parse(std::string_view text) { return Param(parse_rational(text)); }

  bool is_exact() const { return exact_.has_value(); }
  const Rational& exact() const { return *exact_; }
  /// Value at the current working precision.
  Real real() const;
  /// Integer value if exact and integral.
  std::optional<long> as_integer() const;
  std::string str(unsigned significant = 20) const;

  Param operator+(long shift) const;

 private:
  std::optional<Rational> exact_;
  Real approx_;
};

}  // namespace binser

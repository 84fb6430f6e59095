#include "binser/numeric.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <limits>
#include <new>
#include <sstream>
#include <stdexcept>

namespace binser {

WorkingPrecision::WorkingPrecision(unsigned digits10)
    : previous_(Real::default_precision()), digits_(digits10) {
  Real::default_precision(digits10);
}

WorkingPrecision::~WorkingPrecision() { Real::default_precision(previous_); }

unsigned WorkingPrecision::current() { return Real::default_precision(); }

Real to_real(const Rational& q) { return Real(q); }

Real to_real(const Integer& n) { return Real(n); }

std::string to_string(const Rational& q) { return q.str(); }

std::string to_string(const Integer& n) { return n.str(); }

std::string format_real(const Real& x, unsigned significant) {
  if (significant == 0) significant = 1;
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Re", int(significant - 1), x.backend().data()) < 0) throw std::bad_alloc();
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s)
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  return true;
}

Rational parse_decimal(std::string_view text) {
  std::string_view s = text;
  bool negative = false;
  if (!s.empty() && (s.front() == '+' || s.front() == '-')) {
    negative = s.front() == '-';
    s.remove_prefix(1);
  }
  long exponent = 0;
  if (auto e = s.find_first_of("eE"); e != std::string_view::npos) {
    std::string_view exp_part = s.substr(e + 1);
    bool exp_negative = false;
    if (!exp_part.empty() && (exp_part.front() == '+' || exp_part.front() == '-')) {
      exp_negative = exp_part.front() == '-';
      exp_part.remove_prefix(1);
    }
    if (!all_digits(exp_part) || exp_part.size() > 6)
      throw std::invalid_argument("malformed exponent in '" + std::string(text) + "'");
    exponent = std::stol(std::string(exp_part));
    if (exp_negative) exponent = -exponent;
    s = s.substr(0, e);
  }
  std::string digits;
  if (auto dot = s.find('.'); dot != std::string_view::npos) {
    std::string_view whole = s.substr(0, dot);
    std::string_view frac = s.substr(dot + 1);
    if ((!whole.empty() && !all_digits(whole)) || (!frac.empty() && !all_digits(frac)) ||
        (whole.empty() && frac.empty()))
      throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(whole) + std::string(frac);
    exponent -= static_cast<long>(frac.size());
  } else {
    if (!all_digits(s)) throw std::invalid_argument("malformed number '" + std::string(text) + "'");
    digits = std::string(s);
  }
  Rational value{Integer(digits)};
  value *= power(Rational(10), exponent);
  return negative ? Rational(-value) : value;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.remove_prefix(1);
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.remove_suffix(1);
  if (text.empty()) throw std::invalid_argument("empty number");
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    Rational num = parse_decimal(text.substr(0, slash));
    Rational den = parse_decimal(text.substr(slash + 1));
    if (den == 0) throw std::invalid_argument("zero denominator in '" + std::string(text) + "'");
    return num / den;
  }
  return parse_decimal(text);
}

Rational power(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw std::domain_error("zero raised to a negative power");
    return Rational(1) / power(base, -exponent);
  }
  Rational result = 1;
  Rational b = base;
  auto e = static_cast<unsigned long>(exponent);
  while (e) {
    if (e & 1u) result *= b;
    e >>= 1u;
    if (e) b *= b;
  }
  return result;
}

Integer power(const Integer& base, unsigned exponent) {
  return boost::multiprecision::pow(base, exponent);
}

std::optional<long> as_long(const Rational& q) {
  if (denominator(q) != 1) return std::nullopt;
  const Integer n = numerator(q);
  if (n > std::numeric_limits<long>::max() || n < std::numeric_limits<long>::min()) return std::nullopt;
  return n.convert_to<long>();
}

namespace {

// arctan(1/k) by its Taylor series; k >= 2.
Real arctan_inverse(unsigned k, const Real& eps) {
  const Real k2 = Real(k) * k;
  Real power = Real(1) / k;
  Real sum = power;
  for (unsigned j = 1;; ++j) {
    power /= k2;
    Real term = power / (2 * j + 1);
    if (term < eps) break;
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

}  // namespace

Real machin_pi() {
  const unsigned digits = WorkingPrecision::current();
  Real pi;
  {
    WorkingPrecision guard(digits + 10);
    const Real eps = boost::multiprecision::pow(Real(10), -static_cast<int>(digits + 10));
    pi = 16 * arctan_inverse(5, eps) - 4 * arctan_inverse(239, eps);
  }
  return Real(pi, digits);
}

Real log_sqrt_two_pi() { return log(2 * machin_pi()) / 2; }

Param::Param(int value) : Param(Rational(value)) {}

Param::Param(long value) : Param(Rational(value)) {}

Param::Param(const Rational& value) : exact_(value), approx_(to_real(value)) {}

Param::Param(double value) : approx_(value) {
  if (std::isfinite(value) && value == std::floor(value) && std::abs(value) < 1e15)
    exact_ = Rational(static_cast<long>(value));
}

Param::Param(const Real& value) : approx_(value) {}

Real Param::real() const {
  if (exact_) return to_real(*exact_);
  return Real(approx_, WorkingPrecision::current());
}

std::optional<long> Param::as_integer() const {
  if (!exact_) return std::nullopt;
  return as_long(*exact_);
}

std::string Param::str(unsigned significant) const {
  if (exact_) return to_string(*exact_);
  return format_real(approx_, significant);
}

Param Param::operator+(long shift) const {
  if (exact_) return Param(Rational(*exact_ + shift));
  return Param(Real(approx_ + shift));
}

}  // namespace binser

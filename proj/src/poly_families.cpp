#include "binser/poly_families.hpp"

#include "binser/exact_core.hpp"

#include <sstream>
#include <stdexcept>

namespace binser {

Polynomial::Polynomial(std::vector<Rational> coefficients) : coefficients_(std::move(coefficients)) {
  while (!coefficients_.empty() && coefficients_.back() == 0) coefficients_.pop_back();
}

Rational Polynomial::coefficient(std::size_t power) const {
  return power < coefficients_.size() ? coefficients_[power] : Rational(0);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real Polynomial::operator()(const Real& x) const {
  Real acc = 0;
  for (auto it = coefficients_.rbegin(); it != coefficients_.rend(); ++it) acc = acc * x + to_real(*it);
  return acc;
}

Polynomial Polynomial::reflected() const {
  std::vector<Rational> c = coefficients_;
  for (std::size_t i = 1; i < c.size(); i += 2) c[i] = -c[i];
  return Polynomial(std::move(c));
}

Polynomial Polynomial::operator*(const Rational& c) const {
  std::vector<Rational> out = coefficients_;
  for (auto& v : out) v *= c;
  return Polynomial(std::move(out));
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
  std::vector<Rational> out(std::max(coefficients_.size(), other.coefficients_.size()));
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = coefficient(i) + other.coefficient(i);
  return Polynomial(std::move(out));
}

std::string Polynomial::to_string(char variable) const {
  if (coefficients_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < coefficients_.size(); ++i) {
    const Rational& c = coefficients_[i];
    if (c == 0) continue;
    Rational mag = abs(c);
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0 || mag != 1) os << binser::to_string(mag);
    if (i >= 1) os << variable;
    if (i >= 2) os << '^' << i;
  }
  return os.str();
}

Rational poly_eval(const Polynomial& p, const Rational& x) { return p(x); }

Real poly_eval(const Polynomial& p, const Real& x) { return p(x); }

NumberFamilyCache& NumberFamilyCache::shared() {
  static NumberFamilyCache cache;
  return cache;
}

namespace {

// sum_j S(n, j) j! (-1)^j / (j + 1)^q
Rational stirling_bernoulli_sum(unsigned n, int q) {
  const auto row = StirlingTable2::shared().row(n);
  Rational sum = 0;
  Integer fact = 1;
  for (unsigned j = 0; j <= n; ++j) {
    if (j > 0) fact *= j;
    if (row[j] == 0) continue;
    Rational term(row[j] * fact, power(Integer(j + 1), static_cast<unsigned>(q)));
    if (j % 2) sum -= term;
    else sum += term;
  }
  return sum;
}

}  // namespace

Rational NumberFamilyCache::bernoulli(unsigned m) {
  std::lock_guard lock(mutex_);
  while (bernoulli_.size() <= m) bernoulli_.push_back(stirling_bernoulli_sum(static_cast<unsigned>(bernoulli_.size()), 1));
  return bernoulli_[m];
}

Rational NumberFamilyCache::poly_bernoulli(int q, unsigned n) {
  if (q <= 0) throw std::invalid_argument("poly-Bernoulli numbers need q >= 1");
  std::lock_guard lock(mutex_);
  auto& list = poly_bernoulli_[q];
  while (list.size() <= n) {
    const auto k = static_cast<unsigned>(list.size());
    Rational v = stirling_bernoulli_sum(k, q);
    list.push_back(k % 2 ? Rational(-v) : v);
  }
  return list[n];
}

Rational NumberFamilyCache::geom_half(unsigned k) {
  std::lock_guard lock(mutex_);
  while (geom_half_.size() <= k) geom_half_.push_back(geom_poly(static_cast<unsigned>(geom_half_.size()))(Rational(-1, 2)));
  return geom_half_[k];
}

Rational NumberFamilyCache::euler_number(unsigned m) {
  for (;;) {
    std::size_t next;
    {
      std::lock_guard lock(mutex_);
      if (m < euler_.size()) return euler_[m];
      next = euler_.size();
    }
    // Computed outside the lock: euler_poly() re-enters the cache.
    const auto k = static_cast<unsigned>(next);
    Rational value = euler_poly(k)(Rational(1, 2)) * power(Rational(2), static_cast<long>(k));
    std::lock_guard lock(mutex_);
    if (euler_.size() == next) euler_.push_back(std::move(value));
  }
}

Polynomial exp_poly(unsigned m) {
  const auto row = StirlingTable2::shared().row(m);
  return Polynomial(std::vector<Rational>(row.begin(), row.end()));
}

Polynomial geom_poly(unsigned m) {
  const auto row = StirlingTable2::shared().row(m);
  std::vector<Rational> c(row.size());
  Integer fact = 1;
  for (unsigned n = 0; n < row.size(); ++n) {
    if (n > 0) fact *= n;
    c[n] = Rational(row[n] * fact);
  }
  return Polynomial(std::move(c));
}

Rational bernoulli_number(unsigned m) { return NumberFamilyCache::shared().bernoulli(m); }

namespace {

// sum_j C(m, j) y^{m-j} b_j, returned as coefficients in y.
Polynomial appell(unsigned m, const std::vector<Rational>& b) {
  std::vector<Rational> c(m + 1);
  for (unsigned j = 0; j <= m; ++j) c[m - j] = Rational(binomial(m, j)) * b[j];
  return Polynomial(std::move(c));
}

}  // namespace

Polynomial bernoulli_poly(unsigned m) {
  std::vector<Rational> b(m + 1);
  for (unsigned j = 0; j <= m; ++j) b[j] = bernoulli_number(j);
  return appell(m, b);
}

Rational poly_bernoulli_number(int q, unsigned n) { return NumberFamilyCache::shared().poly_bernoulli(q, n); }

Polynomial poly_bernoulli_poly(int q, unsigned m) {
  std::vector<Rational> b(m + 1);
  for (unsigned j = 0; j <= m; ++j) b[j] = poly_bernoulli_number(q, j);
  return appell(m, b);
}

Polynomial euler_poly(unsigned m) {
  // coefficient of x^{m-k} is C(m, k) omega_k(-1/2)
  std::vector<Rational> c(m + 1);
  for (unsigned k = 0; k <= m; ++k) c[m - k] = Rational(binomial(m, k)) * NumberFamilyCache::shared().geom_half(k);
  return Polynomial(std::move(c));
}

Rational euler_number(unsigned m) { return NumberFamilyCache::shared().euler_number(m); }

Rational geom_poly_half_identity(unsigned m) {
  const Rational two_pow = power(Rational(2), static_cast<long>(m + 1));
  return Rational(2) * (1 - two_pow) * bernoulli_number(m + 1) / (m + 1);
}

}  // namespace binser

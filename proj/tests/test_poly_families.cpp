#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binser/exact_core.hpp"
#include "binser/poly_families.hpp"

using namespace binser;

namespace {

Polynomial poly(std::vector<Rational> c) { return Polynomial(std::move(c)); }

Rational r(long p, long q = 1) { return Rational(p, q); }

}  // namespace

TEST_CASE("Polynomial basics") {
  const Polynomial p = poly({r(1), r(0), r(0)});
  CHECK(p.degree() == 0);
  CHECK(Polynomial().is_zero());
  CHECK(Polynomial().degree() == -1);
  CHECK(poly_eval(Polynomial(), r(7)) == 0);
  const Polynomial q = poly({r(1), r(2), r(3)});
  CHECK(q(r(2)) == 17);
  CHECK(q.reflected()(r(2)) == 9);
  CHECK((q + q * r(-1)).is_zero());
  CHECK(q.coefficient(5) == 0);
}

TEST_CASE("exp_poly examples") {
  CHECK(exp_poly(0) == poly({r(1)}));
  CHECK(exp_poly(2) == poly({r(0), r(1), r(1)}));
  CHECK(exp_poly(3) == poly({r(0), r(1), r(3), r(1)}));
  CHECK(poly_eval(exp_poly(2), r(1)) == 2);
}

TEST_CASE("geom_poly examples") {
  CHECK(geom_poly(0) == poly({r(1)}));
  CHECK(geom_poly(2) == poly({r(0), r(1), r(2)}));
  CHECK(poly_eval(geom_poly(2), r(-1, 2)) == 0);
}

TEST_CASE("bernoulli numbers and polynomials") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == r(-1, 2));
  CHECK(bernoulli_number(2) == r(1, 6));
  CHECK(bernoulli_number(3) == 0);
  CHECK(bernoulli_number(12) == r(-691, 2730));
  CHECK(bernoulli_poly(0) == poly({r(1)}));
  CHECK(bernoulli_poly(1) == poly({r(-1, 2), r(1)}));
  CHECK(bernoulli_poly(2) == poly({r(1, 6), r(-1), r(1)}));
}

TEST_CASE("poly-Bernoulli numbers and polynomials") {
  CHECK(poly_bernoulli_number(1, 1) == r(1, 2));
  CHECK(poly_bernoulli_number(2, 0) == 1);
  CHECK(poly_bernoulli_number(2, 1) == r(1, 4));
  CHECK(poly_bernoulli_number(2, 2) == r(-1, 36));
  CHECK_THROWS_AS(poly_bernoulli_number(0, 3), std::invalid_argument);
  CHECK_THROWS_AS(poly_bernoulli_poly(-1, 3), std::invalid_argument);
  CHECK(poly_bernoulli_poly(2, 0) == poly({r(1)}));
  CHECK(poly_bernoulli_poly(2, 1) == poly({r(1, 4), r(1)}));
  for (unsigned m = 0; m <= 12; ++m) {
    const Polynomial expected = bernoulli_poly(m).reflected() * r(m % 2 ? -1 : 1);
    CHECK(poly_bernoulli_poly(1, m) == expected);
  }
}

TEST_CASE("Euler polynomials and numbers") {
  CHECK(euler_poly(0) == poly({r(1)}));
  CHECK(euler_poly(1) == poly({r(-1, 2), r(1)}));
  CHECK(euler_poly(2) == poly({r(0), r(-1), r(1)}));
  CHECK(euler_number(0) == 1);
  CHECK(euler_number(2) == -1);
  CHECK(euler_number(4) == 5);
  CHECK(euler_number(6) == -61);
  for (unsigned m = 1; m <= 21; m += 2) CHECK(euler_number(m) == 0);
}

TEST_CASE("geom_poly_half_identity examples") {
  CHECK(geom_poly_half_identity(0) == 1);
  CHECK(geom_poly_half_identity(1) == r(-1, 2));
  // The closed form gives 1/4 at m = 3, and so does omega_3(-1/2)
  // = -1/2 + 6/4 - 6/8.
  CHECK(geom_poly_half_identity(3) == r(1, 4));
  CHECK(poly_eval(geom_poly(3), r(-1, 2)) == r(1, 4));
}

TEST_CASE("property: exponential polynomials at 1 are Bell numbers") {
  for (unsigned m = 0; m <= 25; ++m) CHECK(poly_eval(exp_poly(m), r(1)) == Rational(bell(m)));
}

TEST_CASE("property: omega_m(-1/2) closed form and Euler constant terms") {
  for (unsigned m = 0; m <= 25; ++m) CHECK(poly_eval(geom_poly(m), r(-1, 2)) == geom_poly_half_identity(m));
  for (unsigned m = 0; m <= 20; ++m) CHECK(poly_eval(euler_poly(m), r(0)) == geom_poly_half_identity(m));
}

TEST_CASE("property: B_m^(1)(y) = (-1)^m B_m(-y) at sample points for q in 1..3") {
  // q = 1 is the identity itself; q = 2, 3 check the binomial convolution
  // against the definition at rational points.
  const std::vector<Rational> ys{r(0), r(1, 3), r(-5, 2), r(7)};
  for (int q = 1; q <= 3; ++q)
    for (unsigned m = 0; m <= 12; ++m)
      for (const auto& y : ys) {
        Rational direct = 0;
        for (unsigned j = 0; j <= m; ++j)
          direct += Rational(binomial(m, j)) * power(y, long(m - j)) * poly_bernoulli_number(q, j);
        CHECK(poly_bernoulli_poly(q, m)(y) == direct);
        if (q == 1) CHECK(poly_bernoulli_poly(1, m)(y) == r(m % 2 ? -1 : 1) * bernoulli_poly(m)(Rational(-y)));
      }
}

TEST_CASE("property: geometric moment sums converge to (1/(1-x)) omega_m(x/(1-x))") {
  WorkingPrecision wp(50);
  const std::vector<Rational> xs{r(1, 4), r(-1, 4), r(9, 20), r(-9, 20)};
  for (const Rational& xq : xs) {
    const Real x = to_real(xq);
    // |x|^N < 1e-20 (with room for the n^m growth)
    const std::size_t n_max = 200;
    for (unsigned m = 0; m <= 8; ++m) {
      Real sum = 0;
      for (std::size_t n = 0; n <= n_max; ++n) sum += pow(Real(n), Real(m)) * pow(x, Real(long(n)));
      const Rational closed = geom_poly(m)(Rational(xq / (1 - xq))) / (1 - xq);
      const Real expected = to_real(closed);
      CHECK(abs(sum - expected) <= Real(1e-12) * max(Real(1), Real(abs(expected))));
    }
  }
}

TEST_CASE("property: Taylor coefficients of 2/(e^t+1) are omega_m(-1/2)/m!") {
  // (e^t + 1)/2 = 1 + sum_{m>=1} t^m/(2 m!); invert by series division.
  const unsigned order = 10;
  std::vector<Rational> den(order + 1), inv(order + 1);
  den[0] = 1;
  for (unsigned m = 1; m <= order; ++m) den[m] = Rational(1, factorial(m)) / 2;
  for (unsigned m = 0; m <= order; ++m) {
    Rational acc = m == 0 ? Rational(1) : Rational(0);
    for (unsigned j = 1; j <= m; ++j) acc -= den[j] * inv[m - j];
    inv[m] = acc;
  }
  for (unsigned m = 0; m <= order; ++m)
    CHECK(inv[m] == poly_eval(geom_poly(m), r(-1, 2)) / Rational(factorial(m)));
}

TEST_CASE("NumberFamilyCache returns stable values") {
  auto& cache = NumberFamilyCache::shared();
  const Rational b = cache.bernoulli(30);
  CHECK(cache.bernoulli(30) == b);
  CHECK(cache.bernoulli(30) == bernoulli_number(30));
  CHECK(cache.euler_number(10) == -50521);
}

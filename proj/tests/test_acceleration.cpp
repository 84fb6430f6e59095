#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binser/acceleration.hpp"

using namespace binser;

namespace {

Real zeta2() { return pow(machin_pi(), Real(2)) / 6; }

}  // namespace

TEST_CASE("method names and guard digits") {
  CHECK(to_string(AccelMethod::Plain) == "plain");
  CHECK(to_string(AccelMethod::Levin) == "levin-u");
  CHECK(to_string(AccelMethod::Richardson) == "richardson");
  CHECK(SeriesAccelerator::plain().extra_digits() == 0);
  CHECK(SeriesAccelerator::levin().extra_digits() == 140);
  CHECK(SeriesAccelerator::richardson(TailModel{}, 28).extra_digits() == 132);
}

TEST_CASE("plain summation of a geometric series") {
  WorkingPrecision wp(40);
  const auto sum = accelerated_sum([](std::size_t n) { return Real(pow(Real(2), -Real(long(n)))); },
                                   SeriesAccelerator::plain(), Real("1e-30"), 1000);
  CHECK(sum.stop == StopReason::ToleranceMet);
  CHECK(abs(sum.value - 2) < Real("1e-29"));
  CHECK(sum.error_estimate <= Real("1e-30") * 2);
}

TEST_CASE("Levin u on the alternating harmonic series") {
  WorkingPrecision wp(40 + SeriesAccelerator::levin().extra_digits());
  const auto sum = accelerated_sum(
      [](std::size_t n) { return Real((n % 2 ? -1 : 1) / Real(long(n + 1))); }, SeriesAccelerator::levin(),
      Real("1e-30"), 200);
  CHECK(sum.stop == StopReason::ToleranceMet);
  CHECK(abs(sum.value - log(Real(2))) < Real("1e-28"));
  CHECK(sum.terms_used < 80);
}

TEST_CASE("Richardson with the right tail model on sum 1/(n+1)^2") {
  WorkingPrecision wp(40 + 132);
  const auto sum = accelerated_sum([](std::size_t n) { return Real(1 / pow(Real(long(n + 1)), 2)); },
                                   SeriesAccelerator::richardson(TailModel{Real(1), 1}, 28), Real("1e-25"), 500);
  CHECK(sum.stop == StopReason::ToleranceMet);
  CHECK(abs(sum.value - zeta2()) < Real("1e-22"));
  CHECK(sum.terms_used < 100);
}

TEST_CASE("scale and offset apply to the reported value") {
  WorkingPrecision wp(40);
  const auto sum = accelerated_sum([](std::size_t n) { return Real(pow(Real(3), -Real(long(n)))); },
                                   SeriesAccelerator::plain(), Real("1e-25"), 1000, Real(2), Real(-3));
  CHECK(abs(sum.value) < Real("1e-24"));  // 2 * 3/2 - 3
}

TEST_CASE("max terms is reported") {
  WorkingPrecision wp(30);
  const auto sum = accelerated_sum([](std::size_t n) { return Real(1) / Real(long(n + 1)); },
                                   SeriesAccelerator::plain(), Real("1e-20"), 50);
  CHECK(sum.stop == StopReason::MaxTerms);
  CHECK(sum.terms_used == 50);
}

TEST_CASE("accelerated stop needs at least 8 terms") {
  WorkingPrecision wp(40 + 140);
  const auto sum = accelerated_sum([](std::size_t n) { return n == 0 ? Real(1) : Real(0); },
                                   SeriesAccelerator::levin(), Real("1e-20"), 100);
  CHECK(sum.stop == StopReason::ToleranceMet);
  CHECK(sum.terms_used >= 8);
  CHECK(sum.value == 1);
}

TEST_CASE("solve_linear") {
  WorkingPrecision wp(30);
  std::vector<std::vector<Real>> a{{Real(0), Real(2)}, {Real(3), Real(1)}};
  const auto x = solve_linear(a, {Real(4), Real(5)});
  CHECK(abs(x[0] - 1) < Real("1e-25"));
  CHECK(abs(x[1] - 2) < Real("1e-25"));
  std::vector<std::vector<Real>> singular{{Real(1), Real(2)}, {Real(2), Real(4)}};
  CHECK_THROWS_AS(solve_linear(singular, {Real(1), Real(2)}), std::domain_error);
}

#include "binser/identity_suites.hpp"

#include "binser/exact_core.hpp"
#include "binser/poly_families.hpp"
#include "binser/series_engine.hpp"
#include "binser/special_functions.hpp"

#include <functional>
#include <map>
#include <sstream>
#include <stdexcept>

namespace binser {

std::uint64_t RationalGrid::next() {
  // SplitMix64
  std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

Rational RationalGrid::rational(int max_num, int max_den) {
  const auto num = static_cast<long>(next() % static_cast<std::uint64_t>(2 * max_num + 1)) - max_num;
  const auto den = static_cast<long>(next() % static_cast<std::uint64_t>(max_den)) + 1;
  return Rational(num, den);
}

Rational RationalGrid::nonzero_rational(int max_num, int max_den) {
  for (;;) {
    Rational q = rational(max_num, max_den);
    if (q != 0) return q;
  }
}

std::vector<Rational> RationalGrid::polynomial(unsigned degree) {
  std::vector<Rational> c(degree + 1);
  for (unsigned i = 0; i < degree; ++i) c[i] = rational();
  c[degree] = nonzero_rational();
  return c;
}

namespace {

using Params = std::vector<std::pair<std::string, std::string>>;
using Records = std::vector<CheckRecord>;
using Poly = std::vector<Rational>;

std::string poly_text(const Poly& c) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < c.size(); ++i) os << (i ? ", " : "") << to_string(c[i]);
  os << ']';
  return os.str();
}

std::string q(const Rational& v) { return to_string(v); }
std::string q(long v) { return std::to_string(v); }

void exact_check(Records& out, const std::string& suite, const std::string& identity, Params params,
                 const Rational& lhs, const Rational& rhs) {
  CheckRecord r;
  r.suite = suite;
  r.identity = identity;
  r.params = std::move(params);
  r.lhs = to_string(lhs);
  r.rhs = to_string(rhs);
  r.exact = true;
  r.pass = lhs == rhs;
  r.deviation = to_string(Rational(abs(lhs - rhs)));
  out.push_back(std::move(r));
}

void exact_check(Records& out, const std::string& suite, const std::string& identity, Params params,
                 const Polynomial& lhs, const Polynomial& rhs) {
  CheckRecord r;
  r.suite = suite;
  r.identity = identity;
  r.params = std::move(params);
  r.lhs = lhs.to_string();
  r.rhs = rhs.to_string();
  r.exact = true;
  r.pass = lhs == rhs;
  r.deviation = r.pass ? "0" : (lhs + rhs * Rational(-1)).to_string();
  out.push_back(std::move(r));
}

void numeric_check(Records& out, const std::string& suite, const std::string& identity, Params params,
                   const Real& lhs, const Real& rhs, double tol) {
  CheckRecord r;
  r.suite = suite;
  r.identity = identity;
  r.params = std::move(params);
  r.lhs = format_real(lhs, 25);
  r.rhs = format_real(rhs, 25);
  const Real dev = abs(lhs - rhs);
  r.deviation = format_real(dev, 3);
  r.exact = false;
  r.pass = dev <= Real(tol);
  out.push_back(std::move(r));
}

Rational ipow(const Rational& b, std::size_t k) { return power(b, static_cast<long>(k)); }

Rational weighted_lhs(const Poly& f, const WeightScheme<Rational>& w, const Rational& y, const Rational& z) {
  const auto provider = providers::polynomial<Rational>(f);
  const std::size_t n_max = f.empty() ? 0 : f.size() - 1;
  return weighted_binomial_series(provider, w, y, z, n_max, Rational(0)).value;
}

Rational weighted_rhs(const Poly& f, const WeightScheme<Rational>& w, const Rational& y, const Rational& z) {
  return rhs_expansion(TruncatedSeries<Rational>{f}, w, y, z);
}

unsigned order_or(const SuiteOptions& o, unsigned fallback) { return o.max_order.value_or(fallback); }

Records suite_lemma2(const SuiteOptions& o) {
  Records out;
  for (unsigned m = 1; m <= order_or(o, 30); ++m)
    exact_check(out, "lemma2", "lemma2", {{"m", q(long(m))}}, Rational(lemma2_sum(m)), Rational(m == 1 ? -1 : 0));
  return out;
}

Records suite_remark1(const SuiteOptions& o) {
  Records out;
  RationalGrid grid(o.seed);
  const unsigned n_max = order_or(o, 8);
  for (int pair = 0; pair < 5; ++pair) {
    const Rational y = grid.rational(), z = grid.nonzero_rational();
    for (unsigned n = 0; n <= n_max; ++n) {
      for (unsigned m = 0; m <= n; ++m) {
        const Rational lhs = binomial_sum(providers::monomial<Rational>(m), n, y, z);
        Rational rhs = 0;
        if (m == n) {
          rhs = Rational(factorial(n)) * ipow(z, n);
          if (n % 2) rhs = -rhs;
        }
        exact_check(out, "remark1", m < n ? "vanishing" : "leading-term",
                    {{"m", q(long(m))}, {"n", q(long(n))}, {"y", q(y)}, {"z", q(z)}}, lhs, rhs);
      }
    }
  }
  return out;
}

Records suite_lemma1(const SuiteOptions& o) {
  Records out;
  RationalGrid grid(o.seed);
  const unsigned n_max = order_or(o, 10);
  for (unsigned degree = 0; degree <= 8; ++degree) {
    const Poly f = grid.polynomial(degree);
    const auto provider = providers::polynomial<Rational>(f);
    for (int pair = 0; pair < 2; ++pair) {
      const Rational y = grid.rational(), z = grid.rational();
      for (unsigned n = 0; n <= n_max; ++n)
        exact_check(out, "lemma1", "lemma1",
                    {{"f", poly_text(f)}, {"n", q(long(n))}, {"y", q(y)}, {"z", q(z)}},
                    binomial_sum(provider, n, y, z), lemma1_rhs(TruncatedSeries<Rational>{f}, n, y, z));
    }
  }
  return out;
}

Records suite_prop1(const SuiteOptions& o) {
  Records out;
  RationalGrid grid(o.seed);
  const unsigned max_degree = std::max(1u, order_or(o, 6));
  for (unsigned i = 0; i < 10; ++i) {
    const unsigned degree = 1 + i % max_degree;
    const Poly f = grid.polynomial(degree);
    const Rational z = grid.rational();
    const Rational lhs = prop1_series(providers::polynomial<Rational>(f), z, degree);
    const Rational rhs = -f[1] * z;
    exact_check(out, "prop1", "prop1", {{"f", poly_text(f)}, {"z", q(z)}}, lhs, rhs);
  }
  return out;
}

// Polynomials of every degree up to max_degree, with `per_degree` parameter
// draws each; `body` receives (f, grid).
void for_polys(const SuiteOptions& o, unsigned fallback_degree, int per_degree,
               const std::function<void(const Poly&, RationalGrid&)>& body) {
  RationalGrid grid(o.seed);
  for (unsigned degree = 0; degree <= order_or(o, fallback_degree); ++degree) {
    const Poly f = grid.polynomial(degree);
    for (int i = 0; i < per_degree; ++i) body(f, grid);
  }
}

Records suite_weight_family(const SuiteOptions& o, const std::string& suite, const std::string& general,
                            const std::string& special,
                            const std::function<WeightScheme<Rational>(RationalGrid&)>& make) {
  Records out;
  for_polys(o, 6, 2, [&](const Poly& f, RationalGrid& grid) {
    const auto w = make(grid);
    const Rational y = grid.rational(), z = grid.rational();
    Params p{{"f", poly_text(f)}, {"x", q(w.x)}, {"r", q(long(w.r))}};
    Params general_params = p;
    general_params.insert(general_params.end(), {{"y", q(y)}, {"z", q(z)}});
    exact_check(out, suite, general, general_params, weighted_lhs(f, w, y, z), weighted_rhs(f, w, y, z));
    Params special_params = p;
    special_params.insert(special_params.end(), {{"y", "0"}, {"z", q(z)}});
    // y = 0 form: sum a_m z^m K_m
    Rational rhs = 0;
    const Rational lhs = weighted_lhs(f, w, Rational(0), z);
    for (std::size_t m = 0; m < f.size(); ++m) {
      TruncatedSeries<Rational> unit{Poly(m + 1, Rational(0))};
      unit.coefficients[m] = 1;
      rhs += f[m] * ipow(z, m) * rhs_expansion(unit, w, Rational(0), Rational(1));
    }
    exact_check(out, suite, special, special_params, lhs, rhs);
  });
  return out;
}

Records suite_be(const SuiteOptions& o) {
  Records out;
  for_polys(o, 6, 2, [&](const Poly& f, RationalGrid& grid) {
    const Rational x = grid.rational(), y = grid.rational(), z = grid.rational();
    const auto w = WeightScheme<Rational>::exp(x);
    exact_check(out, "be", "BE general", {{"f", poly_text(f)}, {"x", q(x)}, {"y", q(y)}, {"z", q(z)}},
                weighted_lhs(f, w, y, z), weighted_rhs(f, w, y, z));
    // sum a_m phi_m(-x) z^m, built directly from exp_poly
    Rational rhs = 0;
    for (std::size_t m = 0; m < f.size(); ++m) rhs += f[m] * exp_poly(unsigned(m))(Rational(-x)) * ipow(z, m);
    exact_check(out, "be", "BE", {{"f", poly_text(f)}, {"x", q(x)}, {"y", "0"}, {"z", q(z)}},
                weighted_lhs(f, w, Rational(0), z), rhs);
  });
  return out;
}

Records suite_bg(const SuiteOptions& o) {
  Records out;
  for_polys(o, 6, 2, [&](const Poly& f, RationalGrid& grid) {
    const Rational x = grid.rational(), y = grid.rational(), z = grid.rational();
    const auto w = WeightScheme<Rational>::geo(x);
    exact_check(out, "bg", "BG general", {{"f", poly_text(f)}, {"x", q(x)}, {"y", q(y)}, {"z", q(z)}},
                weighted_lhs(f, w, y, z), weighted_rhs(f, w, y, z));
    Rational rhs = 0;
    for (std::size_t m = 0; m < f.size(); ++m) rhs += f[m] * geom_poly(unsigned(m))(Rational(-x)) * ipow(z, m);
    exact_check(out, "bg", "BG", {{"f", poly_text(f)}, {"x", q(x)}, {"y", "0"}, {"z", q(z)}},
                weighted_lhs(f, w, Rational(0), z), rhs);
  });
  return out;
}

Records suite_weighted(const SuiteOptions& o) {
  Records out;
  for (unsigned r = 1; r <= 3; ++r) {
    auto part = suite_weight_family(o, "weighted", "integrated general", "integrated",
                                    [r](RationalGrid& g) { return WeightScheme<Rational>::int_pow(g.rational(), r); });
    out.insert(out.end(), part.begin(), part.end());
  }
  auto harmonic = suite_weight_family(o, "weighted", "harmonic general", "harmonic",
                                      [](RationalGrid& g) { return WeightScheme<Rational>::harmonic(g.rational()); });
  out.insert(out.end(), harmonic.begin(), harmonic.end());
  // Harmonic kernel written from Stirling numbers directly, y = 0.
  for_polys(o, 6, 1, [&](const Poly& f, RationalGrid& grid) {
    const Rational x = grid.rational(), z = grid.rational();
    Rational rhs = 0;
    for (std::size_t m = 1; m < f.size(); ++m) {
      Rational k = 0;
      for (unsigned p = 1; p <= m; ++p)
        k += Rational(stirling2(unsigned(m), p) * factorial(p - 1)) * ipow(Rational(-x), p);
      rhs += f[m] * ipow(z, m) * k;
    }
    exact_check(out, "weighted", "harmonic stirling", {{"f", poly_text(f)}, {"x", q(x)}, {"z", q(z)}},
                weighted_lhs(f, WeightScheme<Rational>::harmonic(x), Rational(0), z), rhs);
  });
  return out;
}

Records suite_corollary1(const SuiteOptions& o) {
  Records out;
  for_polys(o, 6, 2, [&](const Poly& f, RationalGrid& grid) {
    const Rational z = grid.rational();
    Rational rhs = 0;
    for (std::size_t m = 0; m < f.size(); ++m) rhs += f[m] * Rational(bell(unsigned(m))) * ipow(z, m);
    exact_check(out, "corollary1", "bell", {{"f", poly_text(f)}, {"z", q(z)}},
                weighted_lhs(f, WeightScheme<Rational>::exp(Rational(-1)), Rational(0), z), rhs);
  });
  return out;
}

Records suite_corollary2(const SuiteOptions& o) {
  Records out;
  for (unsigned r = 1; r <= 3; ++r) {
    const auto w = WeightScheme<Rational>::inv_pow(r);
    for_polys(o, 6, 2, [&](const Poly& f, RationalGrid& grid) {
      const Rational y = grid.rational(), z = grid.nonzero_rational();
      const TruncatedSeries<Rational> ts{f};
      exact_check(out, "corollary2", "poly-bernoulli general",
                  {{"f", poly_text(f)}, {"r", q(long(r))}, {"y", q(y)}, {"z", q(z)}}, weighted_lhs(f, w, y, z),
                  poly_bernoulli_expansion(ts, r, y, z));
      Rational rhs = 0;
      for (std::size_t m = 0; m < f.size(); ++m)
        rhs += f[m] * ipow(Rational(-z), m) * poly_bernoulli_number(int(r), unsigned(m));
      exact_check(out, "corollary2", "poly-bernoulli", {{"f", poly_text(f)}, {"r", q(long(r))}, {"z", q(z)}},
                  weighted_lhs(f, w, Rational(0), z), rhs);
      if (r == 1) {
        Rational b_rhs = 0, b0_rhs = 0;
        for (std::size_t m = 0; m < f.size(); ++m) {
          b_rhs += f[m] * ipow(z, m) * bernoulli_poly(unsigned(m))(Rational(y / z));
          b0_rhs += f[m] * ipow(z, m) * bernoulli_number(unsigned(m));
        }
        exact_check(out, "corollary2", "bernoulli general", {{"f", poly_text(f)}, {"y", q(y)}, {"z", q(z)}},
                    weighted_lhs(f, w, y, z), b_rhs);
        exact_check(out, "corollary2", "bernoulli", {{"f", poly_text(f)}, {"z", q(z)}},
                    weighted_lhs(f, w, Rational(0), z), b0_rhs);
      }
    });
  }
  RationalGrid grid(o.seed);
  std::vector<Rational> ys{Rational(0), Rational(1, 2), Rational(-2)};
  for (int i = 0; i < 2; ++i) ys.push_back(grid.rational());
  for (unsigned r = 1; r <= 3; ++r)
    for (unsigned m = 0; m <= order_or(o, 10); ++m)
      for (const Rational& y : ys)
        exact_check(out, "corollary2", "poly-bernoulli polynomial",
                    {{"r", q(long(r))}, {"m", q(long(m))}, {"y", q(y)}}, poly_bernoulli_poly_rep<Rational>(r, m, y),
                    poly_bernoulli_poly(int(r), m)(y));
  return out;
}

Records suite_corollary3(const SuiteOptions& o) {
  Records out;
  for (unsigned m = 0; m <= order_or(o, 30); ++m)
    exact_check(out, "corollary3", "geometric at -1/2", {{"m", q(long(m))}}, geom_poly(m)(Rational(-1, 2)),
                geom_poly_half_identity(m));
  SuiteOptions poly_options = o;
  poly_options.max_order = 6;
  for_polys(poly_options, 6, 2, [&](const Poly& f, RationalGrid& grid) {
    const Rational z = grid.rational();
    Rational rhs = 0;
    for (std::size_t m = 0; m < f.size(); ++m)
      rhs += (1 - ipow(Rational(2), m + 1)) / Rational(long(m + 1)) * f[m] * bernoulli_number(unsigned(m + 1)) *
             ipow(z, m);
    exact_check(out, "corollary3", "half-shift", {{"f", poly_text(f)}, {"z", q(z)}},
                weighted_lhs(f, WeightScheme<Rational>::half_shift(), Rational(0), z), rhs);
  });
  return out;
}

Records suite_corollary4(const SuiteOptions& o) {
  Records out;
  for_polys(o, 6, 2, [&](const Poly& f, RationalGrid& grid) {
    const Rational y = grid.rational();
    Rational rhs = 0, half_rhs = 0;
    for (std::size_t m = 0; m < f.size(); ++m) {
      rhs += f[m] * euler_poly(unsigned(m))(y);
      half_rhs += f[m] * euler_number(unsigned(m)) / ipow(Rational(2), m);
    }
    const auto w = WeightScheme<Rational>::half();
    exact_check(out, "corollary4", "euler polynomial", {{"f", poly_text(f)}, {"y", q(y)}},
                weighted_lhs(f, w, y, Rational(1)), rhs);
    exact_check(out, "corollary4", "euler number", {{"f", poly_text(f)}},
                weighted_lhs(f, w, Rational(1, 2), Rational(1)), half_rhs);
  });
  return out;
}

Records suite_examples(const SuiteOptions& o) {
  Records out;
  RationalGrid grid(o.seed);
  for (unsigned p = 0; p <= order_or(o, 5); ++p) {
    const auto provider = providers::binomial_poly<Rational>(p);
    const Integer pf = factorial(p);
    for (int draw = 0; draw < 2; ++draw) {
      const Rational x = grid.rational(), z = grid.rational();
      for (unsigned n = 0; n <= p + 1; ++n) {
        Rational rhs = 0;
        for (unsigned m = 0; m <= p; ++m)
          rhs += Rational(stirling1_signed(p, m) * stirling2(m, n)) * ipow(z, m);
        rhs *= Rational(factorial(n), pf);
        if (n % 2) rhs = -rhs;
        exact_check(out, "examples", "binomial-coefficient", {{"p", q(long(p))}, {"n", q(long(n))}, {"z", q(z)}},
                    binomial_sum(provider, n, Rational(0), z), rhs);
      }
      Rational lhs_exp = 0, lhs_geo = 0, rhs_exp = 0, rhs_geo = 0;
      for (unsigned n = 0; n <= p; ++n) {
        const Rational b = binomial_sum(provider, n, Rational(0), z);
        lhs_exp += ipow(x, n) / Rational(factorial(n)) * b;
        lhs_geo += ipow(x, n) * b;
      }
      for (unsigned m = 0; m <= p; ++m) {
        const Rational s1(stirling1_signed(p, m), pf);
        rhs_exp += s1 * exp_poly(m)(Rational(-x)) * ipow(z, m);
        rhs_geo += s1 * geom_poly(m)(Rational(-x)) * ipow(z, m);
      }
      exact_check(out, "examples", "exponential", {{"p", q(long(p))}, {"x", q(x)}, {"z", q(z)}}, lhs_exp, rhs_exp);
      exact_check(out, "examples", "geometric", {{"p", q(long(p))}, {"x", q(x)}, {"z", q(z)}}, lhs_geo, rhs_geo);
    }
  }
  return out;
}

// Power-series quotient num/den (den[0] != 0), coefficients as polynomials
// in an auxiliary variable.
std::vector<Polynomial> series_quotient(const std::vector<Polynomial>& num, const std::vector<Rational>& den) {
  std::vector<Polynomial> out(num.size());
  for (std::size_t m = 0; m < num.size(); ++m) {
    Polynomial acc = num[m];
    for (std::size_t j = 1; j <= m && j < den.size(); ++j) acc = acc + out[m - j] * Rational(-den[j]);
    out[m] = acc * Rational(1 / den[0]);
  }
  return out;
}

Records suite_euler_bridge(const SuiteOptions& o) {
  Records out;
  const unsigned m_max = order_or(o, 20);
  // 2 e^{xt} / (e^t + 1) = e^{xt} / ((e^t + 1) / 2)
  std::vector<Rational> den(m_max + 1), cosh(m_max + 1);
  std::vector<Polynomial> exp_xt(m_max + 1), constant(m_max + 1);
  for (unsigned m = 0; m <= m_max; ++m) {
    const Rational inv_fact(1, factorial(m));
    den[m] = m == 0 ? Rational(1) : Rational(inv_fact / 2);
    cosh[m] = m % 2 ? Rational(0) : inv_fact;
    std::vector<Rational> c(m + 1, Rational(0));
    c[m] = inv_fact;
    exp_xt[m] = Polynomial(c);
    constant[m] = Polynomial(std::vector<Rational>{m == 0 ? Rational(2) : Rational(0)});
  }
  const auto gen = series_quotient(exp_xt, den);
  const auto two_over = series_quotient(constant, std::vector<Rational>(den.begin(), den.end()));
  std::vector<Polynomial> one(m_max + 1);
  one[0] = Polynomial(std::vector<Rational>{Rational(1)});
  const auto sech = series_quotient(one, cosh);
  for (unsigned m = 0; m <= m_max; ++m) {
    const Rational fact(factorial(m));
    exact_check(out, "euler-bridge", "euler polynomial", {{"m", q(long(m))}}, euler_poly(m), gen[m] * fact);
    // 2/(e^t+1) = 2 / (2 den(t))
    exact_check(out, "euler-bridge", "taylor at -1/2", {{"m", q(long(m))}},
                geom_poly(m)(Rational(-1, 2)) / fact, Rational(two_over[m].coefficient(0) / 2));
    exact_check(out, "euler-bridge", "euler number", {{"m", q(long(m))}}, euler_number(m),
                Rational(sech[m].coefficient(0) * fact));
  }
  for (unsigned m = 0; m <= std::max(m_max, 30u); ++m)
    exact_check(out, "euler-bridge", "euler at zero", {{"m", q(long(m))}}, euler_poly(m)(Rational(0)),
                geom_poly_half_identity(m));
  return out;
}

Records suite_theorem3(const SuiteOptions& o) {
  Records out;
  WorkingPrecision precision(o.digits);
  const Rational z(1, 10);
  TruncationPolicy policy;
  policy.digits = o.digits;
  policy.patience = 12;
  policy.max_terms = 400;
  for (long s = 1; s <= 3; ++s) {
    for (const Rational& x : {Rational(1, 5), Rational(3, 10)}) {
      const auto f = [s, z](std::size_t n) { return to_real(power(Rational(1 + z * long(n)), -s)); };
      const Params params{{"s", q(s)}, {"x", q(x)}, {"z", q(z)}};
      const Real xr = to_real(x);
      // (1+t)^{-s}: a_m = C(-s, m)
      const auto coeff = [s](std::size_t m) { return generalized_binomial(Rational(-s), unsigned(m)); };

      const auto ee = euler_transform_exp(f, xr, Real(1), 80);
      AsymptoticSeries exp_rhs;
      exp_rhs.term = [&](std::size_t m) {
        return to_real(coeff(m) * ipow(z, m) * exp_poly(unsigned(m))(Rational(-x)));
      };
      const Real c_exp = optimal_truncate(exp_rhs, policy).value;
      numeric_check(out, "theorem3", "exponential binomial vs transformed", params, ee.rhs.back(), ee.lhs.back(),
                    o.tol);
      numeric_check(out, "theorem3", "exponential binomial vs expansion", params, ee.rhs.back(), c_exp, o.tol);
      numeric_check(out, "theorem3", "exponential transformed vs expansion", params, ee.lhs.back(), c_exp, o.tol);

      const auto eg = euler_transform_geo<Real>(f, xr, 160);
      AsymptoticSeries geo_rhs;
      geo_rhs.term = [&](std::size_t m) {
        return to_real(coeff(m) * ipow(z, m) * geom_poly(unsigned(m))(Rational(-x)));
      };
      const Real c_geo = optimal_truncate(geo_rhs, policy).value;
      numeric_check(out, "theorem3", "geometric binomial vs transformed", params, eg.rhs.back(), eg.lhs.back(),
                    o.tol);
      numeric_check(out, "theorem3", "geometric binomial vs expansion", params, eg.rhs.back(), c_geo, o.tol);
      numeric_check(out, "theorem3", "geometric transformed vs expansion", params, eg.lhs.back(), c_geo, o.tol);
    }
  }
  return out;
}

const std::map<std::string, std::function<Records(const SuiteOptions&)>>& registry() {
  static const std::map<std::string, std::function<Records(const SuiteOptions&)>> suites{
      {"lemma1", suite_lemma1},         {"lemma2", suite_lemma2},         {"remark1", suite_remark1},
      {"prop1", suite_prop1},           {"be", suite_be},                 {"bg", suite_bg},
      {"weighted", suite_weighted},     {"corollary1", suite_corollary1}, {"corollary2", suite_corollary2},
      {"corollary3", suite_corollary3}, {"corollary4", suite_corollary4}, {"examples", suite_examples},
      {"euler-bridge", suite_euler_bridge}, {"theorem3", suite_theorem3},
  };
  return suites;
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"lemma1",     "lemma2",     "remark1",    "prop1",
                                              "be",         "bg",         "weighted",   "corollary1",
                                              "corollary2", "corollary3", "corollary4", "examples",
                                              "euler-bridge", "theorem3"};
  return names;
}

std::vector<CheckRecord> run_suite(const std::string& name, const SuiteOptions& options) {
  if (name == "all") {
    Records out;
    for (const auto& suite : suite_names()) {
      auto part = registry().at(suite)(options);
      out.insert(out.end(), part.begin(), part.end());
    }
    return out;
  }
  const auto it = registry().find(name);
  if (it == registry().end()) throw std::invalid_argument("unknown suite '" + name + "'");
  return it->second(options);
}

}  // namespace binser

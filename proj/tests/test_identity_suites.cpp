#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "binser/identity_suites.hpp"

#include <algorithm>
#include <map>
#include <set>

using namespace binser;

namespace {

std::string param(const CheckRecord& rec, const std::string& key) {
  for (const auto& [k, v] : rec.params)
    if (k == key) return v;
  return {};
}

std::map<std::string, std::size_t> by_identity(const std::vector<CheckRecord>& recs) {
  std::map<std::string, std::size_t> out;
  for (const auto& rec : recs) ++out[rec.identity];
  return out;
}

void require_exact_pass(const std::vector<CheckRecord>& recs) {
  REQUIRE(!recs.empty());
  for (const auto& rec : recs) {
    INFO(rec.suite << " " << rec.identity << " lhs=" << rec.lhs << " rhs=" << rec.rhs);
    CHECK(rec.pass);
    CHECK(rec.exact);
    CHECK(rec.deviation == "0");
    CHECK(rec.lhs == rec.rhs);
  }
}

}  // namespace

TEST_CASE("suite names") {
  const auto& names = suite_names();
  CHECK(names.size() == 14);
  for (const char* n : {"lemma1", "lemma2", "remark1", "prop1", "be", "bg", "weighted", "corollary1", "corollary2",
                        "corollary3", "corollary4", "examples", "euler-bridge", "theorem3"})
    CHECK(std::find(names.begin(), names.end(), n) != names.end());
  CHECK_THROWS_AS(run_suite("bogus"), std::invalid_argument);
  CHECK_THROWS_AS(run_suite(""), std::invalid_argument);
}

TEST_CASE("lemma2 examples") {
  const auto recs = run_suite("lemma2");
  CHECK(recs.size() == 30);
  require_exact_pass(recs);
  CHECK(recs.front().lhs == "-1");
  CHECK(recs.back().lhs == "0");
  SuiteOptions o;
  o.max_order = 5;
  CHECK(run_suite("lemma2", o).size() == 5);
}

TEST_CASE("every rational suite passes exactly") {
  for (const auto& name : suite_names()) {
    if (name == "theorem3") continue;
    CAPTURE(name);
    const auto recs = run_suite(name);
    require_exact_pass(recs);
    for (const auto& rec : recs) CHECK(rec.suite == name);
  }
}

TEST_CASE("remark1 grid: five (y, z) pairs and n up to 8") {
  const auto recs = run_suite("remark1");
  std::set<std::pair<std::string, std::string>> pairs;
  unsigned max_n = 0;
  for (const auto& rec : recs) {
    pairs.emplace(param(rec, "y"), param(rec, "z"));
    max_n = std::max(max_n, unsigned(std::stoul(param(rec, "n"))));
  }
  CHECK(pairs.size() == 5);
  CHECK(max_n == 8);
  const auto counts = by_identity(recs);
  // n + 1 leading-term cases and n(n+1)/2 vanishing cases per pair
  CHECK(counts.at("leading-term") == 5 * 9);
  CHECK(counts.at("vanishing") == 5 * 36);
}

TEST_CASE("grid sizes") {
  CHECK(run_suite("lemma1").size() == 9 * 2 * 11);
  CHECK(run_suite("prop1").size() == 10);
  const auto c2 = by_identity(run_suite("corollary2"));
  // r = 1..3, m = 0..10, five y values
  CHECK(c2.at("poly-bernoulli polynomial") == 3 * 11 * 5);
  const auto c3 = by_identity(run_suite("corollary3"));
  CHECK(c3.at("geometric at -1/2") == 31);
  const auto ex = by_identity(run_suite("examples"));
  CHECK(ex.count("binomial-coefficient") == 1);
  CHECK(ex.count("exponential") == 1);
  CHECK(ex.count("geometric") == 1);
}

TEST_CASE("max order limits the examples") {
  SuiteOptions o;
  o.max_order = 2;
  for (const auto& rec : run_suite("examples", o)) CHECK(std::stoul(param(rec, "p")) <= 2);
}

TEST_CASE("seeds are deterministic") {
  SuiteOptions a, b;
  a.seed = b.seed = 12345;
  const auto x = run_suite("prop1", a), y = run_suite("prop1", b);
  REQUIRE(x.size() == y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    CHECK(x[i].params == y[i].params);
    CHECK(x[i].lhs == y[i].lhs);
  }
  b.seed = 54321;
  const auto z = run_suite("prop1", b);
  bool differs = false;
  for (std::size_t i = 0; i < x.size(); ++i) differs = differs || x[i].params != z[i].params;
  CHECK(differs);
  require_exact_pass(z);
}

TEST_CASE("theorem3 agrees within tolerance") {
  const auto recs = run_suite("theorem3");
  CHECK(recs.size() == 36);
  std::set<std::string> xs, ss;
  for (const auto& rec : recs) {
    INFO(rec.identity << " deviation=" << rec.deviation);
    CHECK(rec.pass);
    CHECK_FALSE(rec.exact);
    CHECK(std::stod(rec.deviation) <= 1e-8);
    xs.insert(param(rec, "x"));
    ss.insert(param(rec, "s"));
    CHECK(param(rec, "z") == "1/10");
  }
  CHECK(xs == std::set<std::string>{"1/5", "3/10"});
  CHECK(ss == std::set<std::string>{"1", "2", "3"});
}

TEST_CASE("theorem3 tolerance is enforced") {
  SuiteOptions o;
  o.tol = 1e-40;
  const auto recs = run_suite("theorem3", o);
  const auto failed = std::count_if(recs.begin(), recs.end(), [](const CheckRecord& r) { return !r.pass; });
  CHECK(failed > 0);
}

TEST_CASE("all runs every suite") {
  std::size_t total = 0;
  for (const auto& name : suite_names()) total += run_suite(name).size();
  CHECK(run_suite("all").size() == total);
}

TEST_CASE("RationalGrid bounds and polynomial degree") {
  RationalGrid g(7);
  for (int i = 0; i < 500; ++i) {
    const Rational q = g.rational(4, 3);
    CHECK(abs(numerator(q)) <= 4);
    CHECK(denominator(q) <= 3);
    CHECK(g.nonzero_rational() != 0);
  }
  for (unsigned d = 0; d <= 8; ++d) {
    const auto c = g.polynomial(d);
    REQUIRE(c.size() == d + 1);
    CHECK(c.back() != 0);
  }
  RationalGrid h1(99), h2(99);
  for (int i = 0; i < 20; ++i) CHECK(h1.next() == h2.next());
}

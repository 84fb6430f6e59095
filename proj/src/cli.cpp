#include "binser/cli.hpp"

#include "binser/exact_core.hpp"
#include "binser/identity_suites.hpp"
#include "binser/poly_families.hpp"
#include "binser/report.hpp"
#include "binser/special_functions.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <cstdlib>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>

namespace binser::cli {

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  unsigned digits = kDefaultDigits;
  std::size_t max_terms = 10000;
  double tol = 1e-12;
  std::string format = "json";
  std::optional<unsigned> shift;
  unsigned patience = 1;
  bool no_accel = false;
  std::string route;
  std::string form = "direct";
  std::optional<unsigned> max_order;
  std::uint64_t seed = SuiteOptions{}.seed;
  bool tol_given = false;
};

unsigned default_digits() {
  if (const char* env = std::getenv("BINOMIAL_SERIES_DIGITS")) {
    try {
      return static_cast<unsigned>(std::stoul(env));
    } catch (const std::exception&) {
      throw UsageError(std::string("BINOMIAL_SERIES_DIGITS is not a number: '") + env + "'");
    }
  }
  return kDefaultDigits;
}

void add_common(CLI::App* cmd, Config& c) {
  cmd->add_option("--digits", c.digits, "working precision in decimal digits (>= 10)");
  cmd->add_option("--max-terms", c.max_terms, "hard cap on series terms");
  cmd->add_option("--tol", c.tol, "relative tolerance");
  cmd->add_option("--format", c.format, "json, csv or plain");
}

void validate(const Config& c) {
  if (c.digits < 10) throw UsageError("--digits must be at least 10");
  if (!(c.tol > 0)) throw UsageError("--tol must be positive");
  if (c.max_terms < 1) throw UsageError("--max-terms must be at least 1");
}

// key=value list in command-line order.
struct Args {
  ParamList order;
  std::map<std::string, Param> values;

  bool has(const std::string& k) const { return values.count(k) != 0; }
  Param get(const std::string& k, std::optional<Param> fallback = std::nullopt) const {
    auto it = values.find(k);
    if (it != values.end()) return it->second;
    if (fallback) return *fallback;
    throw UsageError("missing parameter " + k + "=...");
  }
};

Args parse_args(const std::vector<std::string>& raw, const std::set<std::string>& allowed) {
  Args out;
  for (const auto& item : raw) {
    const auto eq = item.find('=');
    if (eq == std::string::npos || eq == 0) throw UsageError("expected key=value, got '" + item + "'");
    const std::string key = item.substr(0, eq), text = item.substr(eq + 1);
    if (!allowed.count(key)) throw UsageError("unknown parameter '" + key + "'");
    if (out.has(key)) throw UsageError("parameter '" + key + "' given twice");
    try {
      out.values.emplace(key, Param::parse(text));
    } catch (const std::invalid_argument&) {
      throw UsageError("not a number: " + item);
    }
    out.order.emplace_back(key, text);
  }
  return out;
}

unsigned positive_integer(const Param& p, const std::string& name) {
  const auto v = p.as_integer();
  if (!v || *v < 1) throw UsageError(name + " must be a positive integer");
  return static_cast<unsigned>(*v);
}

struct FunctionInfo {
  std::set<std::string> keys;
  bool series = true;
  bool asymptotic = true;
};

const std::map<std::string, FunctionInfo>& functions() {
  static const std::map<std::string, FunctionInfo> table{
      {"zeta", {{"s", "a"}}},
      {"eta", {{"s", "a", "y"}}},
      {"lerch", {{"x", "s", "a"}}},
      {"digamma", {{"z", "y"}}},
      {"loggamma", {{"z", "y"}, false, true}},
      {"arakawa-kaneko", {{"r", "s", "a"}}},
      {"polyexp", {{"s", "x", "lambda"}}},
  };
  return table;
}

const FunctionInfo& lookup(const std::string& name) {
  const auto it = functions().find(name);
  if (it == functions().end()) throw UsageError("unknown function '" + name + "'");
  return it->second;
}

SeriesOptions series_options(const Config& c) {
  SeriesOptions o;
  o.tol = c.tol;
  o.max_terms = c.max_terms;
  o.digits = c.digits;
  o.shift = c.shift;
  o.accelerate = !c.no_accel;
  return o;
}

TruncationPolicy policy(const Config& c) {
  TruncationPolicy p;
  p.max_terms = c.max_terms;
  p.digits = c.digits;
  p.patience = c.patience;
  return p;
}

Param sum(const Param& p, const Param& q) {
  if (p.is_exact() && q.is_exact()) return Param(Rational(p.exact() + q.exact()));
  return Param(Real(p.real() + q.real()));
}

EvalResult eval_series(const std::string& fn, const Args& a, const Config& c) {
  WorkingPrecision work(c.digits);
  const auto o = series_options(c);
  if (fn == "zeta") return hurwitz_zeta(a.get("s"), a.get("a", Param(1)), o);
  if (fn == "eta") return eta(a.get("s"), sum(a.get("a", Param(1)), a.get("y", Param(0))), o);
  if (fn == "lerch") return lerch_phi(a.get("x"), a.get("s"), a.get("a", Param(1)), o).combination;
  if (fn == "digamma") {
    if (c.form != "direct" && c.form != "log-shifted") throw UsageError("--form must be direct or log-shifted");
    const DigammaForm form = c.form == "direct" ? DigammaForm::Direct : DigammaForm::LogShifted;
    return digamma(sum(a.get("z"), a.get("y", Param(0))), o, form);
  }
  if (fn == "arakawa-kaneko")
    return arakawa_kaneko(positive_integer(a.get("r"), "r"), a.get("s"), a.get("a", Param(1)), o);
  if (fn == "polyexp") return polyexponential(a.get("s"), a.get("x"), a.get("lambda"), policy(c)).direct;
  throw UsageError("function '" + fn + "' has no series route");
}

EvalResult eval_asymptotic(const std::string& fn, const Args& a, const Config& c) {
  WorkingPrecision work(c.digits);
  const auto p = policy(c);
  EvalResult r;
  if (fn == "zeta")
    r = hurwitz_zeta_asymptotic(a.get("s"), a.get("a", Param(1)), p);
  else if (fn == "eta")
    r = eta_asymptotic(a.get("s"), a.get("a", Param(1)), a.get("y", Param(0)), p);
  else if (fn == "lerch")
    r = lerch_asymptotic(a.get("x"), a.get("s"), a.get("a", Param(1)), p);
  else if (fn == "digamma")
    r = digamma_asymptotic(a.get("y", Param(0)), a.get("z"), p);
  else if (fn == "loggamma")
    r = loggamma_asymptotic(a.get("y", Param(0)), a.get("z"), p);
  else if (fn == "arakawa-kaneko")
    r = arakawa_kaneko_asymptotic(positive_integer(a.get("r"), "r"), a.get("s"), a.get("a", Param(1)), p);
  else if (fn == "polyexp")
    r = polyexponential(a.get("s"), a.get("x"), a.get("lambda"), p).asymptotic;
  else
    throw UsageError("function '" + fn + "' has no asymptotic route");
  // Optimal truncation stops where the terms stop shrinking; when that is
  // still far from the requested tolerance the argument is too small.
  if (r.stop_reason == StopReason::OptimalTruncation &&
      r.error_estimate > Real(c.tol) * max(Real(1), Real(abs(r.value))))
    r.warnings.push_back("low accuracy: asymptotic route limited to error ~" + format_real(r.error_estimate, 2) +
                         " (argument too small)");
  return r;
}

ParamList echo(const Args& a, const std::string& route, const EvalResult& r) {
  ParamList out{{"route", route}};
  out.insert(out.end(), a.order.begin(), a.order.end());
  out.emplace_back("method", r.method);
  if (route == "series" && r.shift) out.emplace_back("shift", std::to_string(r.shift));
  return out;
}

int exit_code(const std::vector<Report>& reports) {
  for (const auto& r : reports)
    if (r.status == "FAIL") return 1;
  return 0;
}

std::vector<Report> cmd_eval(const std::string& fn, const std::vector<std::string>& raw, const Config& c) {
  const auto& info = lookup(fn);
  const Args a = parse_args(raw, info.keys);
  std::string route = c.route.empty() ? (info.series ? "series" : "asymptotic") : c.route;
  if (route != "series" && route != "asymptotic") throw UsageError("--route must be series or asymptotic");
  if (route == "series" && !info.series) throw UsageError(fn + " has only an asymptotic route");
  const EvalResult r = route == "series" ? eval_series(fn, a, c) : eval_asymptotic(fn, a, c);
  return {make_report("eval " + fn, echo(a, route, r), r, c.digits)};
}

// log Gamma(y+z): exact factorial when y+z is a positive integer.
Real loggamma_oracle(const Args& a) {
  const Param z = a.get("z"), y = a.get("y", Param(0));
  if (z.is_exact() && y.is_exact()) {
    const Rational sum = z.exact() + y.exact();
    if (denominator(sum) == 1 && sum >= 1 && sum <= 100000)
      return log(to_real(Rational(factorial(static_cast<unsigned>(numerator(sum)) - 1))));
  }
  return boost::multiprecision::lgamma(Real(z.real() + y.real()));
}

std::vector<Report> cmd_compare(const std::string& fn, const std::vector<std::string>& raw, const Config& c) {
  const auto& info = lookup(fn);
  const Args a = parse_args(raw, info.keys);
  WorkingPrecision work(c.digits);
  std::vector<Report> out;
  const EvalResult asym = eval_asymptotic(fn, a, c);
  Report asym_report = make_report("compare " + fn, echo(a, "asymptotic", asym), asym, c.digits);

  Real reference, allowed;
  if (info.series) {
    const EvalResult series = eval_series(fn, a, c);
    out.push_back(make_report("compare " + fn, echo(a, "series", series), series, c.digits));
    reference = series.value;
    allowed = series.error_estimate;
  } else {
    reference = loggamma_oracle(a);
  }
  allowed += asym.error_estimate + Real(c.tol) * max(Real(1), Real(abs(reference)));
  attach_oracle(asym_report, asym.value, reference, c.digits);
  if (abs(asym.value - reference) > allowed) asym_report.status = "FAIL";
  out.push_back(std::move(asym_report));
  return out;
}

std::vector<Report> cmd_identity(const std::string& suite, const Config& c) {
  SuiteOptions o;
  o.max_order = c.max_order;
  o.seed = c.seed;
  o.digits = c.digits;
  if (c.tol_given) o.tol = c.tol;
  std::vector<CheckRecord> records;
  try {
    records = run_suite(suite, o);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::vector<Report> out;
  out.reserve(records.size());
  for (const auto& r : records) out.push_back(make_report(r));
  return out;
}

std::vector<std::string> rational_row(const std::vector<Rational>& values) {
  std::vector<std::string> out;
  out.reserve(values.size());
  for (const auto& v : values) out.push_back(to_string(v));
  return out;
}

Table cmd_table(const std::string& family, const std::vector<std::string>& raw) {
  std::optional<long> q;
  std::optional<long> n;
  for (const auto& item : raw) {
    try {
      if (item.rfind("q=", 0) == 0) {
        q = std::stol(item.substr(2));
      } else {
        std::size_t used = 0;
        n = std::stol(item, &used);
        if (used != item.size()) throw std::invalid_argument(item);
      }
    } catch (const std::exception&) {
      throw UsageError("bad table argument '" + item + "'");
    }
  }
  if (!n || *n < 0 || *n > 2000) throw UsageError("table needs a maximum index between 0 and 2000");
  if (q && family != "poly-bernoulli") throw UsageError("q= only applies to poly-bernoulli");
  const auto top = static_cast<unsigned>(*n);

  Table t;
  t.family = family;
  if (q) t.params.emplace_back("q", std::to_string(*q));
  t.params.emplace_back("max_index", std::to_string(top));
  auto sequence = [&](const std::function<Rational(unsigned)>& f) {
    std::vector<Rational> row;
    for (unsigned i = 0; i <= top; ++i) row.push_back(f(i));
    t.sequence = true;
    t.rows.push_back(rational_row(row));
  };
  auto triangle = [&](const std::function<Integer(unsigned, unsigned)>& f) {
    for (unsigned i = 0; i <= top; ++i) {
      std::vector<Rational> row;
      for (unsigned k = 0; k <= i; ++k) row.push_back(Rational(f(i, k)));
      t.rows.push_back(rational_row(row));
    }
  };
  auto polys = [&](const std::function<Polynomial(unsigned)>& f) {
    t.index_name = "m";
    for (unsigned i = 0; i <= top; ++i) t.rows.push_back(rational_row(f(i).coefficients()));
  };

  if (family == "stirling2")
    triangle([](unsigned i, unsigned k) { return stirling2(i, k); });
  else if (family == "stirling1")
    triangle([](unsigned i, unsigned k) { return stirling1_signed(i, k); });
  else if (family == "bell")
    sequence([](unsigned i) { return Rational(bell(i)); });
  else if (family == "bernoulli")
    sequence([](unsigned i) { return bernoulli_number(i); });
  else if (family == "poly-bernoulli")
    sequence([k = static_cast<int>(q.value_or(1))](unsigned i) { return poly_bernoulli_number(k, i); });
  else if (family == "euler-numbers")
    sequence([](unsigned i) { return euler_number(i); });
  else if (family == "euler-poly")
    polys([](unsigned i) { return euler_poly(i); });
  else if (family == "exp-poly")
    polys([](unsigned i) { return exp_poly(i); });
  else if (family == "geom-poly")
    polys([](unsigned i) { return geom_poly(i); });
  else
    throw UsageError("unknown family '" + family + "'");
  return t;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Config c;
  try {
    c.digits = default_digits();
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }

  CLI::App app{"Binomial-sum series transformations and special-function evaluation", "binomial-series"};
  app.require_subcommand(1);

  std::string name;
  std::vector<std::string> rest;

  auto* eval = app.add_subcommand("eval", "evaluate a function by its series or asymptotic route");
  eval->add_option("function", name, "zeta, eta, lerch, digamma, loggamma, arakawa-kaneko, polyexp")->required();
  eval->add_option("params", rest, "key=value parameters");
  eval->add_option("--route", c.route, "series or asymptotic");
  eval->add_option("--shift", c.shift, "argument shift before summing (0 = none)");
  eval->add_option("--patience", c.patience, "terms past the minimum before truncating");
  eval->add_option("--form", c.form, "digamma series form: direct or log-shifted");
  eval->add_flag("--no-accel", c.no_accel, "plain partial sums");
  add_common(eval, c);

  auto* compare = app.add_subcommand("compare", "run the series and asymptotic routes side by side");
  compare->add_option("function", name, "function name")->required();
  compare->add_option("params", rest, "key=value parameters");
  compare->add_option("--shift", c.shift, "argument shift before summing (0 = none)");
  compare->add_option("--patience", c.patience, "terms past the minimum before truncating");
  compare->add_option("--form", c.form, "digamma series form: direct or log-shifted");
  compare->add_flag("--no-accel", c.no_accel, "plain partial sums");
  add_common(compare, c);

  auto* check = app.add_subcommand("identity-check", "verify an identity suite");
  check->add_option("suite", name, "suite name or 'all'")->required();
  check->add_option("--max-order", c.max_order, "main index bound");
  check->add_option("--seed", c.seed, "grid seed");
  add_common(check, c);

  auto* table = app.add_subcommand("table", "print a number or polynomial family");
  table->add_option("family", name,
                    "stirling2, stirling1, bell, bernoulli, poly-bernoulli, euler-numbers, euler-poly, exp-poly, "
                    "geom-poly")
      ->required();
  table->add_option("args", rest, "[q=Q] N");
  add_common(table, c);

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  }
  // Subcommand --help
  for (auto* sub : {eval, compare, check, table}) {
    if (sub->parsed() && sub->get_help_ptr() && sub->get_help_ptr()->count()) {
      out << sub->help();
      return 0;
    }
  }

  try {
    validate(c);
    const Format format = [&] {
      try {
        return parse_format(c.format);
      } catch (const std::invalid_argument& e) {
        throw UsageError(e.what());
      }
    }();
    if (table->parsed()) {
      out << render(cmd_table(name, rest), format);
      return 0;
    }
    c.tol_given = check->parsed() && check->get_option("--tol")->count() > 0;
    std::vector<Report> reports;
    if (eval->parsed())
      reports = cmd_eval(name, rest, c);
    else if (compare->parsed())
      reports = cmd_compare(name, rest, c);
    else
      reports = cmd_identity(name, c);
    out << render(reports, format);
    return exit_code(reports);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::domain_error& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace binser::cli

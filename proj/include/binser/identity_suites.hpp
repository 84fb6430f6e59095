#pragma once

// Identity checks over parameter grids.  Rational suites compare both sides
// exactly; `theorem3` compares real-valued members of the Euler-type
// transformation identities against a tolerance.
//
// Grids come from a SplitMix64 stream, so a given seed yields the same
// cases on every platform.

#include "binser/numeric.hpp"

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace binser {

struct CheckRecord {
  std::string suite;
  /// Which identity, e.g. "lemma2" or "BE".
  std::string identity;
  std::vector<std::pair<std::string, std::string>> params;
  std::string lhs;
  std::string rhs;
  /// "0" for exact matches; |lhs - rhs| otherwise.
  std::string deviation;
  bool exact = true;
  bool pass = false;
};

struct SuiteOptions {
  /// Suite-specific main index bound; nullopt uses the suite default.
  std::optional<unsigned> max_order;
  std::uint64_t seed = 0x5eedb1a5ULL;
  unsigned digits = kDefaultDigits;
  /// Agreement required by the numeric suites.
  double tol = 1e-8;
};

/// lemma1, lemma2, remark1, prop1, be, bg, weighted, corollary1,
/// corollary2, corollary3, corollary4, examples, euler-bridge, theorem3.
const std::vector<std::string>& suite_names();

/// Throws std::invalid_argument for an unknown suite; "all" runs every suite.
std::vector<CheckRecord> run_suite(const std::string& name, const SuiteOptions& options = {});

/// Deterministic generator of small rationals and polynomials.
class RationalGrid {
 public:
  explicit RationalGrid(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next();
  /// p/q with |p| <= max_num, 1 <= q <= max_den.
  Rational rational(int max_num = 9, int max_den = 6);
  Rational nonzero_rational(int max_num = 9, int max_den = 6);
  /// Exactly `degree` (nonzero leading coefficient).
  std::vector<Rational> polynomial(unsigned degree);

 private:
  std::uint64_t state_;
};

}  // namespace binser

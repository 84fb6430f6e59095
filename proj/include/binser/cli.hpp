#pragma once

// binomial-series command line:
//
//   binomial-series eval <function> key=value... [--route=series|asymptotic]
//   binomial-series compare <function> key=value...
//   binomial-series identity-check <suite> [--max-order=N] [--seed=S]
//   binomial-series table <family> [q=Q] <N>
//
// Common flags: --digits N, --max-terms N, --tol X, --format json|csv|plain.
// BINOMIAL_SERIES_DIGITS sets the default for --digits.
//
// Exit codes: 0 success, 1 tolerance or consistency failure, 2 usage error.

#include <iosfwd>
#include <string>
#include <vector>

namespace binser::cli {

/// `args` excludes the program name.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace binser::cli

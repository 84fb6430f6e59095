#pragma once

// Result records and tables, rendered as JSON, CSV or plain text.
// Every value is carried as a string, so exact rationals stay "p/q" and
// reals keep the digits they were formatted with.

#include "binser/identity_suites.hpp"
#include "binser/special_functions.hpp"

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace binser {

enum class Format { Json, Csv, Plain };

/// Throws std::invalid_argument for anything but json, csv, plain.
Format parse_format(const std::string& text);

using ParamList = std::vector<std::pair<std::string, std::string>>;

struct Report {
  std::string command;
  ParamList params;
  std::string value;
  std::string error_estimate;
  std::size_t terms_used = 0;
  std::string stop_reason;
  /// Both set or both empty.
  std::optional<std::string> oracle;
  std::optional<std::string> deviation;
  /// "PASS", "FAIL" or "WARN".
  std::string status = "PASS";
  std::vector<std::string> warnings;
};

/// Fills value, error estimate, terms, stop reason and warnings; status is
/// FAIL on MAX_TERMS, WARN with warnings, PASS otherwise.
Report make_report(std::string command, ParamList params, const EvalResult& result, unsigned digits);

/// stop_reason "EXACT" for rational records.
Report make_report(const CheckRecord& record);

/// Attaches an oracle value and |value - oracle|.
void attach_oracle(Report& report, const Real& value, const Real& oracle, unsigned digits);

/// A single report renders as a JSON object, several as an array.
std::string render(const std::vector<Report>& reports, Format format);

struct Table {
  std::string family;
  ParamList params;
  /// "n" for sequences, "m" for polynomial rows.
  std::string index_name = "n";
  /// One row per index.  Sequences use a single row of entries.
  std::vector<std::vector<std::string>> rows;
  bool sequence = false;
};

std::string render(const Table& table, Format format);

}  // namespace binser

#include "binser/report.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace binser {

using Json = nlohmann::ordered_json;

Format parse_format(const std::string& text) {
  if (text == "json") return Format::Json;
  if (text == "csv") return Format::Csv;
  if (text == "plain") return Format::Plain;
  throw std::invalid_argument("unknown format '" + text + "' (expected json, csv or plain)");
}

Report make_report(std::string command, ParamList params, const EvalResult& result, unsigned digits) {
  Report r;
  r.command = std::move(command);
  r.params = std::move(params);
  r.value = format_real(result.value, digits);
  r.error_estimate = format_real(result.error_estimate, 3);
  r.terms_used = result.terms_used;
  r.stop_reason = to_string(result.stop_reason);
  r.warnings = result.warnings;
  if (!result.ok())
    r.status = "FAIL";
  else if (!r.warnings.empty())
    r.status = "WARN";
  return r;
}

Report make_report(const CheckRecord& record) {
  Report r;
  r.command = "identity-check " + record.suite;
  r.params.emplace_back("identity", record.identity);
  r.params.insert(r.params.end(), record.params.begin(), record.params.end());
  r.value = record.lhs;
  r.oracle = record.rhs;
  r.deviation = record.deviation;
  r.error_estimate = "0";
  r.stop_reason = record.exact ? "EXACT" : "TOLERANCE_MET";
  r.status = record.pass ? "PASS" : "FAIL";
  return r;
}

void attach_oracle(Report& report, const Real& value, const Real& oracle, unsigned digits) {
  report.oracle = format_real(oracle, digits);
  report.deviation = format_real(abs(value - oracle), 3);
}

namespace {

std::string joined_warnings(const Report& r) {
  std::string out;
  for (const auto& w : r.warnings) out += (out.empty() ? "" : "; ") + w;
  return out;
}

Json to_json(const Report& r) {
  Json j;
  j["command"] = r.command;
  Json params = Json::object();
  for (const auto& [k, v] : r.params) params[k] = v;
  j["params"] = params;
  j["value"] = r.value;
  j["error_estimate"] = r.error_estimate;
  j["terms_used"] = r.terms_used;
  j["stop_reason"] = r.stop_reason;
  if (r.oracle) j["oracle"] = *r.oracle;
  if (r.deviation) j["deviation"] = *r.deviation;
  j["status"] = r.status;
  if (!r.warnings.empty()) j["warning"] = joined_warnings(r);
  return j;
}

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

std::string param_text(const ParamList& params, const char* sep) {
  std::string out;
  for (const auto& [k, v] : params) out += (out.empty() ? "" : sep) + k + "=" + v;
  return out;
}

std::string render_csv(const std::vector<Report>& reports) {
  std::ostringstream os;
  os << "command,params,value,error_estimate,terms_used,stop_reason,oracle,deviation,status,warning\n";
  for (const auto& r : reports) {
    os << csv_field(r.command) << ',' << csv_field(param_text(r.params, ";")) << ',' << csv_field(r.value) << ','
       << csv_field(r.error_estimate) << ',' << r.terms_used << ',' << r.stop_reason << ','
       << csv_field(r.oracle.value_or("")) << ',' << csv_field(r.deviation.value_or("")) << ',' << r.status << ','
       << csv_field(joined_warnings(r)) << '\n';
  }
  return os.str();
}

std::string render_plain(const std::vector<Report>& reports) {
  std::ostringstream os;
  if (reports.size() == 1) {
    const Report& r = reports.front();
    os << r.command;
    if (!r.params.empty()) os << ' ' << param_text(r.params, " ");
    os << "\n  value:          " << r.value << "\n  error estimate: " << r.error_estimate
       << "\n  terms used:     " << r.terms_used << "\n  stop reason:    " << r.stop_reason;
    if (r.oracle) os << "\n  oracle:         " << *r.oracle << "\n  deviation:      " << *r.deviation;
    os << "\n  status:         " << r.status << '\n';
    for (const auto& w : r.warnings) os << "  warning: " << w << '\n';
    return os.str();
  }
  std::size_t failed = 0;
  for (const auto& r : reports) {
    os << r.status << "  " << r.command << "  " << param_text(r.params, " ") << "  value=" << r.value;
    if (r.oracle) os << "  oracle=" << *r.oracle << "  deviation=" << *r.deviation;
    os << '\n';
    for (const auto& w : r.warnings) os << "  warning: " << w << '\n';
    if (r.status == "FAIL") ++failed;
  }
  os << reports.size() - failed << " passed, " << failed << " failed\n";
  return os.str();
}

}  // namespace

std::string render(const std::vector<Report>& reports, Format format) {
  switch (format) {
    case Format::Json: {
      if (reports.size() == 1) return to_json(reports.front()).dump(2) + "\n";
      Json arr = Json::array();
      for (const auto& r : reports) arr.push_back(to_json(r));
      return arr.dump(2) + "\n";
    }
    case Format::Csv:
      return render_csv(reports);
    case Format::Plain:
      return render_plain(reports);
  }
  return {};
}

std::string render(const Table& table, Format format) {
  std::ostringstream os;
  switch (format) {
    case Format::Json: {
      Json j;
      j["family"] = table.family;
      Json params = Json::object();
      for (const auto& [k, v] : table.params) params[k] = v;
      j["params"] = params;
      if (table.sequence)
        j["values"] = table.rows.empty() ? std::vector<std::string>{} : table.rows.front();
      else
        j["rows"] = table.rows;
      return j.dump(2) + "\n";
    }
    case Format::Csv:
      if (table.sequence) {
        os << table.index_name << ",value\n";
        if (!table.rows.empty())
          for (std::size_t i = 0; i < table.rows.front().size(); ++i) os << i << ',' << table.rows.front()[i] << '\n';
      } else {
        os << table.index_name << ",k,value\n";
        for (std::size_t i = 0; i < table.rows.size(); ++i)
          for (std::size_t k = 0; k < table.rows[i].size(); ++k) os << i << ',' << k << ',' << table.rows[i][k] << '\n';
      }
      return os.str();
    case Format::Plain:
      for (std::size_t i = 0; i < table.rows.size(); ++i) {
        if (!table.sequence) os << table.index_name << '=' << i << ": ";
        for (std::size_t k = 0; k < table.rows[i].size(); ++k) os << (k ? ", " : "") << table.rows[i][k];
        os << '\n';
      }
      return os.str();
  }
  return {};
}

}  // namespace binser

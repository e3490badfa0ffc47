#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>

namespace ramsum::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\r\n") == std::string::npos) return s;
  std::string quoted = "\"";
  for (char c : s) {
    if (c == '"') quoted += '"';
    quoted += c;
  }
  return quoted + '"';
}

struct CsvCell {
  std::string operator()(std::monostate) const { return ""; }
  std::string operator()(const std::string& s) const { return csv_field(s); }
  std::string operator()(std::int64_t v) const { return std::to_string(v); }
  std::string operator()(double v) const { return format_number(v); }
  std::string operator()(WideInt v) const { return to_string(v); }
  std::string operator()(bool v) const { return v ? "true" : "false"; }
};

struct JsonCell {
  nlohmann::ordered_json operator()(std::monostate) const { return nullptr; }
  nlohmann::ordered_json operator()(const std::string& s) const { return s; }
  nlohmann::ordered_json operator()(std::int64_t v) const { return v; }
  nlohmann::ordered_json operator()(double v) const {
    if (!std::isfinite(v)) return nullptr;
    return round_significant(v);
  }
  // Exact integers beyond 64 bits are emitted as decimal strings.
  nlohmann::ordered_json operator()(WideInt v) const {
    if (v >= std::numeric_limits<std::int64_t>::min() && v <= std::numeric_limits<std::int64_t>::max()) {
      return static_cast<std::int64_t>(v);
    }
    return to_string(v);
  }
  nlohmann::ordered_json operator()(bool v) const { return v; }
};

nlohmann::ordered_json row_object(const Report& report, const std::vector<Cell>& row) {
  nlohmann::ordered_json obj = nlohmann::ordered_json::object();
  for (std::size_t i = 0; i < report.header.size(); ++i) obj[report.header[i]] = std::visit(JsonCell{}, row[i]);
  return obj;
}

}  // namespace

std::string format_number(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

double round_significant(double v) { return std::strtod(format_number(v).c_str(), nullptr); }

void write_csv(std::ostream& out, const Report& report) {
  for (std::size_t i = 0; i < report.header.size(); ++i) out << (i ? "," : "") << csv_field(report.header[i]);
  out << "\n";
  for (const auto& row : report.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) out << (i ? "," : "") << std::visit(CsvCell{}, row[i]);
    out << "\n";
  }
}

void write_json(std::ostream& out, const Report& report) {
  nlohmann::ordered_json doc;
  doc["command"] = report.command;
  doc["inputs"] = report.inputs;
  if (report.rows.size() == 1) {
    doc["results"] = row_object(report, report.rows.front());
  } else {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const auto& row : report.rows) rows.push_back(row_object(report, row));
    doc["results"] = {{"rows", rows}};
  }
  doc["timings"] = report.timings;
  doc["warnings"] = report.warnings;
  out << doc.dump(2) << "\n";
}

}  // namespace ramsum::cli

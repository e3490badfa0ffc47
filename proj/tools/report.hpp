#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"
#include "ramsum/wide_int.hpp"

namespace ramsum::cli {

using Cell = std::variant<std::monostate, std::string, std::int64_t, double, WideInt, bool>;

// One run's output: a table (rendered as CSV, or as `results` in JSON) plus
// the JSON-only envelope of inputs, timings and warnings.
struct Report {
  std::string command;
  nlohmann::ordered_json inputs = nlohmann::ordered_json::object();
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
  nlohmann::ordered_json timings = nlohmann::ordered_json::object();
  std::vector<std::string> warnings;
};

// %.12g in the C locale.
std::string format_number(double v);

// Rounds to 12 significant digits so JSON output carries the same digits.
double round_significant(double v);

void write_csv(std::ostream& out, const Report& report);
void write_json(std::ostream& out, const Report& report);

}  // namespace ramsum::cli

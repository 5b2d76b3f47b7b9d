#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace qbphase::cli {

/// Shortest decimal string that reads back to the same double; -0 prints
/// as 0.
std::string format_double(double v);

using Parameters = std::vector<std::pair<std::string, std::string>>;

/// Column-oriented numeric result with its self-describing parameter block.
struct Table {
  Parameters parameters;
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

/// `# key=value` lines, a header line, then comma-separated rows; LF endings.
std::string to_csv(const Table& table);
/// {"columns": [...], "parameters": {...}, "rows": [[...], ...]}.
std::string to_json(const Table& table);

/// Structured report rendered as JSON, or as CSV with `key,value` rows over
/// the flattened (JSON-pointer) keys.
std::string report_to_json(const nlohmann::json& report);
std::string report_to_csv(const Parameters& parameters, const nlohmann::json& report);

/// Parameters as a JSON object of strings.
nlohmann::json parameters_json(const Parameters& parameters);

}  // namespace qbphase::cli

#include "format.hpp"

#include <array>
#include <charconv>

namespace qbphase::cli {

std::string format_double(double v) {
  if (v == 0.0) {
    v = 0.0;
  }
  std::array<char, 64> buf{};
  const auto result = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), result.ptr);
}

namespace {

void append_parameters(std::string& text, const Parameters& parameters) {
  for (const auto& [key, value] : parameters) {
    text += "# ";
    text += key;
    text += '=';
    text += value;
    text += '\n';
  }
}

std::string quote_field(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) {
    return field;
  }
  std::string quoted = "\"";
  for (char c : field) {
    quoted += c;
    if (c == '"') {
      quoted += '"';
    }
  }
  return quoted + "\"";
}

std::string scalar_text(const nlohmann::json& v) {
  if (v.is_string()) {
    return quote_field(v.get<std::string>());
  }
  if (v.is_number_float()) {
    return format_double(v.get<double>());
  }
  if (v.is_null()) {
    return "";
  }
  return v.dump();
}

}  // namespace

std::string to_csv(const Table& table) {
  std::string text;
  append_parameters(text, table.parameters);
  for (std::size_t i = 0; i < table.columns.size(); ++i) {
    text += i == 0 ? "" : ",";
    text += table.columns[i];
  }
  text += '\n';
  for (const auto& row : table.rows) {
    for (std::size_t i = 0; i < row.size(); ++i) {
      text += i == 0 ? "" : ",";
      text += format_double(row[i]);
    }
    text += '\n';
  }
  return text;
}

nlohmann::json parameters_json(const Parameters& parameters) {
  nlohmann::json out = nlohmann::json::object();
  for (const auto& [key, value] : parameters) {
    out[key] = value;
  }
  return out;
}

std::string to_json(const Table& table) {
  nlohmann::json doc;
  doc["parameters"] = parameters_json(table.parameters);
  doc["columns"] = table.columns;
  doc["rows"] = nlohmann::json::array();
  for (const auto& row : table.rows) {
    doc["rows"].push_back(row);
  }
  return doc.dump(2) + "\n";
}

std::string report_to_json(const nlohmann::json& report) { return report.dump(2) + "\n"; }

std::string report_to_csv(const Parameters& parameters, const nlohmann::json& report) {
  std::string text;
  append_parameters(text, parameters);
  text += "key,value\n";
  const nlohmann::json flat = report.flatten();
  for (const auto& [key, value] : flat.items()) {
    text += key;
    text += ',';
    text += scalar_text(value);
    text += '\n';
  }
  return text;
}

}  // namespace qbphase::cli

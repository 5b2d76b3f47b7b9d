#include "settings.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>

#include "json.hpp"

#include "format.hpp"

namespace qbphase::cli {

void Settings::set(const std::string& key, std::string value) { values_[key] = std::move(value); }

std::optional<std::string> Settings::raw(const std::string& key) const {
  const auto it = values_.find(key);
  if (it == values_.end()) {
    return std::nullopt;
  }
  return it->second;
}

void Settings::merge_json_file(const std::string& path, const std::vector<std::string>& known_keys) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigError("cannot open config file '" + path + "'");
  }
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(in);
  } catch (const nlohmann::json::parse_error& e) {
    throw ConfigError("config file '" + path + "': " + e.what());
  }
  if (!doc.is_object()) {
    throw ConfigError("config file '" + path + "' must hold a JSON object");
  }
  for (const auto& [key, value] : doc.items()) {
    if (std::find(known_keys.begin(), known_keys.end(), key) == known_keys.end()) {
      throw ConfigError("config file '" + path + "': unknown key '" + key + "'");
    }
    if (has(key)) {
      continue;
    }
    if (value.is_string()) {
      set(key, value.get<std::string>());
    } else if (value.is_boolean()) {
      set(key, value.get<bool>() ? "true" : "false");
    } else if (value.is_number_integer()) {
      set(key, std::to_string(value.get<long long>()));
    } else if (value.is_number()) {
      set(key, format_double(value.get<double>()));
    } else {
      throw ConfigError("config file '" + path + "': key '" + key + "' must be a scalar");
    }
  }
}

std::optional<double> Settings::real(const std::string& key) const {
  const auto text = raw(key);
  if (!text) {
    return std::nullopt;
  }
  double v = 0.0;
  const char* first = text->data();
  const char* last = first + text->size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last || !std::isfinite(v)) {
    throw ConfigError("--" + key + ": expected a finite number, got '" + *text + "'");
  }
  return v;
}

double Settings::real(const std::string& key, double fallback) const {
  return real(key).value_or(fallback);
}

int Settings::integer(const std::string& key, int fallback, int minimum) const {
  const auto text = raw(key);
  if (!text) {
    return fallback;
  }
  int v = 0;
  const char* first = text->data();
  const char* last = first + text->size();
  const auto [ptr, ec] = std::from_chars(first, last, v);
  if (ec != std::errc() || ptr != last) {
    throw ConfigError("--" + key + ": expected an integer, got '" + *text + "'");
  }
  if (v < minimum) {
    throw ConfigError("--" + key + " must be >= " + std::to_string(minimum));
  }
  return v;
}

std::string Settings::choice(const std::string& key, const std::string& fallback,
                             const std::vector<std::string>& allowed) const {
  const auto text = raw(key);
  if (!text) {
    return fallback;
  }
  if (std::find(allowed.begin(), allowed.end(), *text) == allowed.end()) {
    std::string list;
    for (const auto& a : allowed) {
      list += (list.empty() ? "" : "|") + a;
    }
    throw ConfigError("--" + key + ": expected one of " + list + ", got '" + *text + "'");
  }
  return *text;
}

bool Settings::flag(const std::string& key) const {
  const auto text = raw(key);
  if (!text || *text == "false") {
    return false;
  }
  if (*text == "true") {
    return true;
  }
  throw ConfigError("--" + key + ": expected true or false, got '" + *text + "'");
}

}  // namespace qbphase::cli

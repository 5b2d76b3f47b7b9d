#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace qbphase::cli {

/// Bad command line or configuration file; maps to exit status 2.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Raw option values keyed by long flag name (without dashes prefix), with
/// typed, validated accessors. Command-line values take precedence over
/// values merged in from a JSON configuration file.
class Settings {
 public:
  void set(const std::string& key, std::string value);
  bool has(const std::string& key) const { return values_.count(key) != 0; }
  std::optional<std::string> raw(const std::string& key) const;

  /// Reads a flat JSON object whose keys are option names; entries already
  /// present are kept. Unknown keys are rejected.
  void merge_json_file(const std::string& path, const std::vector<std::string>& known_keys);

  double real(const std::string& key, double fallback) const;
  std::optional<double> real(const std::string& key) const;
  int integer(const std::string& key, int fallback, int minimum) const;
  std::string choice(const std::string& key, const std::string& fallback,
                     const std::vector<std::string>& allowed) const;
  bool flag(const std::string& key) const;

 private:
  std::map<std::string, std::string> values_;
};

}  // namespace qbphase::cli

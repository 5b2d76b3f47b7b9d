#pragma once

#include <string>
#include <vector>

#include "settings.hpp"

namespace qbphase::cli {

struct CommandInfo {
  std::string name;
  std::string description;
  std::vector<std::string> options;  // long option names without dashes
  std::vector<std::string> flags;    // boolean switches
};

/// Every command with the options it accepts.
const std::vector<CommandInfo>& commands();

/// Every option name any command accepts; the keys valid in a config file.
std::vector<std::string> all_option_names();

struct Artifact {
  std::string text;
  int status = 0;
};

/// Executes `command`. Throws ConfigError for unusable settings and lets
/// library errors propagate.
Artifact execute(const std::string& command, const Settings& settings);

}  // namespace qbphase::cli

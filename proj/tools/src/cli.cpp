#include "qbphase_cli/cli.hpp"

#include <fstream>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "commands.hpp"
#include "json.hpp"
#include "qbphase/error.hpp"
#include "settings.hpp"

namespace qbphase::cli {

namespace {

const std::map<std::string, std::string>& option_help() {
  static const std::map<std::string, std::string> help = {
      {"config", "JSON file of option values (command-line flags take precedence)"},
      {"out", "Output path (default: standard output)"},
      {"format", "csv or json"},
      {"preset", "even_cat | odd_cat | yurke_stoler_plus | yurke_stoler_minus (default even_cat)"},
      {"mu-re", "Re(mu) for an explicit superposition"},
      {"mu-im", "Im(mu)"},
      {"nu-re", "Re(nu)"},
      {"nu-im", "Im(nu)"},
      {"alpha-abs", "|alpha| (default 1)"},
      {"alpha-arg", "arg(alpha) in radians (default 0)"},
      {"beta-abs", "|beta| (default 1)"},
      {"beta-arg", "arg(beta) in radians (default 0)"},
      {"renormalize", "Rescale mu and nu to unit weight norm"},
      {"s", "Ordering parameter, s < 1"},
      {"branch", "plus (phase sum) or minus (phase difference); default minus"},
      {"mode", "1 or 2"},
      {"n-phi", "Points over [-pi, pi] (default 361)"},
      {"eps-tail", "Series truncation threshold (default 1e-14)"},
      {"n-min", "Minimum number of Fourier terms (default 4)"},
      {"n-max", "Maximum number of Fourier terms (default 512)"},
      {"n-radial", "Gauss-Legendre points per radius (default 64)"},
      {"n-angular", "Trapezoid points per angle (default 64)"},
      {"radial-sigma", "Radial cutoff in Gaussian widths (default 8)"},
      {"n-cut", "Number-basis cutoff per mode (default: recommended for the state)"},
      {"n-check", "Phase points per oracle comparison (default 16)"},
      {"id", "Panel: 1a 1b 1c 1d 2a 2b 2c 2d"},
      {"n-alpha-sq", "|alpha|^2 samples for surface panels (default 61)"},
      {"alpha-sq-max", "Largest |alpha|^2 for surface panels (default 3)"},
      {"n", "Harmonic order of the trigonometric moments (default 1)"},
      {"phi0", "Centre of the 2pi window (default phi')"},
      {"x-axis", "gamma_re | gamma_im | delta_re | delta_im (default gamma_re)"},
      {"y-axis", "gamma_re | gamma_im | delta_re | delta_im (default delta_re)"},
      {"x-min", "Slice x lower bound (default -3)"},
      {"x-max", "Slice x upper bound (default 3)"},
      {"y-min", "Slice y lower bound (default -3)"},
      {"y-max", "Slice y upper bound (default 3)"},
      {"n-x", "Slice points along x (default 61)"},
      {"n-y", "Slice points along y (default 61)"},
      {"gamma-re", "Fixed Re(gamma) off the slice axes (default 0)"},
      {"gamma-im", "Fixed Im(gamma) (default 0)"},
      {"delta-re", "Fixed Re(delta) (default 0)"},
      {"delta-im", "Fixed Im(delta) (default 0)"},
  };
  return help;
}

int status_for(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NoConvergence:
    case ErrorKind::CutoffTooSmall:
      return kExitConvergence;
    case ErrorKind::InvalidState:
    case ErrorKind::NullState:
    case ErrorKind::Domain:
    case ErrorKind::Overflow:
      return kExitDomain;
  }
  return kExitInternal;
}

int report_error(std::ostream& err, int status, const std::string& kind, const std::string& message) {
  nlohmann::json doc;
  doc["error"] = {{"kind", kind}, {"message", message}};
  doc["status"] = status;
  err << doc.dump() << '\n';
  return status;
}

struct Parsed {
  std::string command;
  Settings settings;
};

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Phase distributions of entangled two-mode coherent states", "qbphase"};
  app.require_subcommand(1);
  app.set_version_flag("--version", QBPHASE_VERSION);

  std::map<std::string, std::map<std::string, std::string>> values;
  std::map<std::string, std::map<std::string, bool>> switches;
  std::map<std::string, CLI::App*> subcommands;
  for (const auto& info : commands()) {
    CLI::App* sub = app.add_subcommand(info.name, info.description);
    subcommands[info.name] = sub;
    for (const auto& name : info.options) {
      sub->add_option("--" + name, values[info.name][name], option_help().at(name));
    }
    for (const auto& name : info.flags) {
      sub->add_flag("--" + name, switches[info.name][name], option_help().at(name));
    }
  }

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::Success& e) {
    // --help and --version.
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    return report_error(err, kExitConfig, "ConfigError", e.what());
  }

  Parsed parsed;
  try {
    for (const auto& [name, sub] : subcommands) {
      if (!sub->parsed()) {
        continue;
      }
      parsed.command = name;
      for (const auto& [key, value] : values[name]) {
        if (sub->get_option("--" + key)->count() > 0) {
          parsed.settings.set(key, value);
        }
      }
      for (const auto& [key, on] : switches[name]) {
        if (on) {
          parsed.settings.set(key, "true");
        }
      }
    }
    if (const auto path = parsed.settings.raw("config")) {
      parsed.settings.merge_json_file(*path, all_option_names());
    }
  } catch (const ConfigError& e) {
    return report_error(err, kExitConfig, "ConfigError", e.what());
  }

  Artifact artifact;
  try {
    artifact = execute(parsed.command, parsed.settings);
  } catch (const ConfigError& e) {
    return report_error(err, kExitConfig, "ConfigError", e.what());
  } catch (const Error& e) {
    return report_error(err, status_for(e.kind()), std::string(to_string(e.kind())), e.what());
  } catch (const std::exception& e) {
    return report_error(err, kExitInternal, "InternalError", e.what());
  }

  if (const auto path = parsed.settings.raw("out")) {
    std::ofstream file(*path, std::ios::binary | std::ios::trunc);
    file << artifact.text;
    if (!file) {
      return report_error(err, kExitConfig, "ConfigError", "cannot write '" + *path + "'");
    }
  } else {
    out << artifact.text;
  }
  if (artifact.status != kExitOk) {
    return report_error(err, artifact.status, "InvalidState",
                        "state failed validation; see the emitted diagnostics");
  }
  return kExitOk;
}

}  // namespace qbphase::cli

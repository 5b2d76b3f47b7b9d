#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <optional>
#include <set>

#include "format.hpp"
#include "qbphase/error.hpp"
#include "qbphase/model.hpp"
#include "qbphase/oracle.hpp"
#include "qbphase/phasedist.hpp"
#include "qbphase/quasiprob.hpp"

#ifndef QBPHASE_VERSION
#define QBPHASE_VERSION "unknown"
#endif

namespace qbphase::cli {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kOracleTolerance = 1e-6;
constexpr double kNullEndpointSubstitute = 1e-6;

const std::vector<std::string> kCommonOptions = {"config", "out", "format"};
const std::vector<std::string> kStateOptions = {"preset",    "mu-re",     "mu-im",
                                                "nu-re",     "nu-im",     "alpha-abs",
                                                "alpha-arg", "beta-abs",  "beta-arg"};
const std::vector<std::string> kTruncationOptions = {"eps-tail", "n-min", "n-max"};
const std::vector<std::string> kQuadratureOptions = {"n-radial", "n-angular", "radial-sigma",
                                                     "n-cut"};
const std::vector<std::string> kSliceAxes = {"gamma_re", "gamma_im", "delta_re", "delta_im"};

std::vector<std::string> join(std::initializer_list<std::vector<std::string>> parts) {
  std::vector<std::string> out;
  for (const auto& part : parts) {
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

std::vector<std::string> preset_tags() {
  std::vector<std::string> tags;
  for (PresetKind kind : {PresetKind::EvenCat, PresetKind::OddCat, PresetKind::YurkeStolerPlus,
                          PresetKind::YurkeStolerMinus}) {
    tags.emplace_back(to_string(kind));
  }
  return tags;
}

// ---------------------------------------------------------------------------
// Settings resolution

struct ResolvedState {
  StateParams params;
  std::string preset;  // empty for explicit weights
  double alpha_abs = 1.0;
  double alpha_arg = 0.0;
  double beta_abs = 1.0;
  double beta_arg = 0.0;
  bool renormalize = false;
};

bool has_explicit_weights(const Settings& settings) {
  return settings.has("mu-re") || settings.has("mu-im") || settings.has("nu-re") ||
         settings.has("nu-im");
}

ResolvedState resolve_state(const Settings& settings) {
  ResolvedState r;
  r.alpha_abs = settings.real("alpha-abs", 1.0);
  r.alpha_arg = settings.real("alpha-arg", 0.0);
  r.beta_abs = settings.real("beta-abs", 1.0);
  r.beta_arg = settings.real("beta-arg", 0.0);
  if (r.alpha_abs < 0.0 || r.beta_abs < 0.0) {
    throw ConfigError("--alpha-abs and --beta-abs must be non-negative");
  }
  r.renormalize = settings.flag("renormalize");
  const Complex alpha = std::polar(r.alpha_abs, r.alpha_arg);
  const Complex beta = std::polar(r.beta_abs, r.beta_arg);
  if (has_explicit_weights(settings)) {
    if (settings.has("preset")) {
      throw ConfigError("--preset cannot be combined with --mu-*/--nu-*");
    }
    const Complex mu{settings.real("mu-re", 0.0), settings.real("mu-im", 0.0)};
    const Complex nu{settings.real("nu-re", 0.0), settings.real("nu-im", 0.0)};
    r.params = {alpha, beta, mu, nu};
    return r;
  }
  r.preset = settings.choice("preset", "even_cat", preset_tags());
  r.params = make_preset(*parse_preset(r.preset), 1.0, 1.0).params();
  r.params.alpha = alpha;
  r.params.beta = beta;
  return r;
}

QuasiBellState build_state(const ResolvedState& r) {
  return QuasiBellState::create(r.params, r.renormalize ? Renormalize::Yes : Renormalize::No);
}

TruncationPolicy resolve_policy(const Settings& settings) {
  TruncationPolicy policy;
  policy.eps_tail = settings.real("eps-tail", policy.eps_tail);
  policy.n_min = settings.integer("n-min", policy.n_min, 1);
  policy.n_max = settings.integer("n-max", policy.n_max, 1);
  try {
    policy.check();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return policy;
}

QuadratureSpec resolve_quadrature(const Settings& settings) {
  QuadratureSpec spec;
  spec.n_radial = settings.integer("n-radial", spec.n_radial, 16);
  spec.n_angular = settings.integer("n-angular", spec.n_angular, 32);
  spec.radial_cutoff_sigma = settings.real("radial-sigma", spec.radial_cutoff_sigma);
  try {
    spec.check();
  } catch (const DomainError& e) {
    throw ConfigError(e.what());
  }
  return spec;
}

Branch resolve_branch(const Settings& settings) {
  return settings.choice("branch", "minus", {"plus", "minus"}) == "plus" ? Branch::Plus
                                                                         : Branch::Minus;
}

Mode resolve_mode(const Settings& settings) {
  return settings.choice("mode", "1", {"1", "2"}) == "1" ? Mode::One : Mode::Two;
}

bool json_format(const Settings& settings, bool report_command) {
  return settings.choice("format", report_command ? "json" : "csv", {"csv", "json"}) == "json";
}

/// n points spanning [-pi, pi] inclusive.
std::vector<double> offset_grid(int n) {
  std::vector<double> grid(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    grid[static_cast<std::size_t>(i)] = -kPi + 2.0 * kPi * i / (n - 1);
  }
  return grid;
}

const char* branch_name(Branch b) { return b == Branch::Plus ? "plus" : "minus"; }

// ---------------------------------------------------------------------------
// Parameter blocks

Parameters base_parameters(const std::string& command) {
  return {{"program", "qbphase"}, {"version", QBPHASE_VERSION}, {"command", command}};
}

void add_state_parameters(Parameters& p, const ResolvedState& r, const QuasiBellState* state) {
  p.emplace_back("preset", r.preset.empty() ? "none" : r.preset);
  p.emplace_back("mu_re", format_double(r.params.mu.real()));
  p.emplace_back("mu_im", format_double(r.params.mu.imag()));
  p.emplace_back("nu_re", format_double(r.params.nu.real()));
  p.emplace_back("nu_im", format_double(r.params.nu.imag()));
  p.emplace_back("alpha_abs", format_double(r.alpha_abs));
  p.emplace_back("alpha_arg", format_double(r.alpha_arg));
  p.emplace_back("beta_abs", format_double(r.beta_abs));
  p.emplace_back("beta_arg", format_double(r.beta_arg));
  p.emplace_back("renormalize", r.renormalize ? "true" : "false");
  if (state != nullptr) {
    p.emplace_back("normalization", format_double(normalization_constant(*state)));
  }
}

void add_policy_parameters(Parameters& p, const TruncationPolicy& policy) {
  p.emplace_back("eps_tail", format_double(policy.eps_tail));
  p.emplace_back("n_min", std::to_string(policy.n_min));
  p.emplace_back("n_max", std::to_string(policy.n_max));
}

void add_quadrature_parameters(Parameters& p, const QuadratureSpec& spec) {
  p.emplace_back("n_radial", std::to_string(spec.n_radial));
  p.emplace_back("n_angular", std::to_string(spec.n_angular));
  p.emplace_back("radial_sigma", format_double(spec.radial_cutoff_sigma));
}

Artifact emit(const Table& table, const Settings& settings) {
  return {json_format(settings, false) ? to_json(table) : to_csv(table), 0};
}

Artifact emit_report(const Parameters& parameters, nlohmann::json report, const Settings& settings,
                     int status = 0) {
  if (json_format(settings, true)) {
    report["parameters"] = parameters_json(parameters);
    return {report_to_json(report), status};
  }
  return {report_to_csv(parameters, report), status};
}

double trapezoid_total(const FourierSpectrum& spectrum) {
  const int nodes = 2 * spectrum.n_used() + 8;
  double total = 0.0;
  for (int i = 0; i < nodes; ++i) {
    total += eval_phase_dist(spectrum, spectrum.phi_prime() + 2.0 * kPi * i / nodes);
  }
  return total * 2.0 * kPi / nodes;
}

// ---------------------------------------------------------------------------
// Commands

Artifact cmd_validate(const Settings& settings) {
  const auto resolved = resolve_state(settings);
  const double s = settings.real("s", 0.0);
  const auto policy = resolve_policy(settings);
  const int n_phi = settings.integer("n-phi", 361, 2);

  auto parameters = base_parameters("validate");
  add_state_parameters(parameters, resolved, nullptr);
  parameters.emplace_back("s", format_double(s));
  add_policy_parameters(parameters, policy);

  nlohmann::json report;
  StateParams params = resolved.params;
  auto diagnostics = validate(params);
  if (resolved.renormalize) {
    // Renormalization repairs the weight norm; the other checks still apply.
    diagnostics.erase(std::remove_if(diagnostics.begin(), diagnostics.end(),
                                     [](const Diagnostic& d) { return d.code == "weight_norm"; }),
                      diagnostics.end());
  }
  report["diagnostics"] = nlohmann::json::array();
  for (const auto& d : diagnostics) {
    report["diagnostics"].push_back(
        {{"code", d.code}, {"message", d.message}, {"residual", d.residual}});
  }
  report["valid"] = diagnostics.empty();
  if (!diagnostics.empty()) {
    return emit_report(parameters, report, settings, 3);
  }

  const auto state = build_state(resolved);
  nlohmann::json checks;
  checks["normalization"] = normalization_constant(state);
  checks["chi_origin_deviation"] = std::abs(chi(state, {0.0, 0.0}, s) - 1.0);
  const auto offsets = offset_grid(n_phi);
  for (Branch branch : {Branch::Plus, Branch::Minus}) {
    const auto spectrum = build_spectrum(state, s, branch, policy);
    double symmetry = 0.0;
    double lowest = INFINITY;
    for (double d : offsets) {
      const double value = eval_phase_dist(spectrum, spectrum.phi_prime() + d);
      lowest = std::min(lowest, value);
      symmetry = std::max(symmetry, std::abs(value - eval_phase_dist(spectrum, spectrum.phi_prime() - d)));
    }
    nlohmann::json entry;
    entry["n_used"] = spectrum.n_used();
    entry["tail_bound"] = spectrum.tail_bound();
    entry["normalization_deviation"] = std::abs(trapezoid_total(spectrum) - 1.0);
    entry["symmetry_deviation"] = symmetry;
    entry["min_density"] = lowest;
    checks[std::string("phase_dist_") + branch_name(branch)] = entry;
  }
  report["checks"] = checks;
  return emit_report(parameters, report, settings);
}

Artifact cmd_coeffs(const Settings& settings) {
  const auto resolved = resolve_state(settings);
  const auto state = build_state(resolved);
  const double s = settings.real("s", 0.0);
  const auto policy = resolve_policy(settings);

  Table table;
  table.parameters = base_parameters("coeffs");
  add_state_parameters(table.parameters, resolved, &state);
  table.parameters.emplace_back("s", format_double(s));
  add_policy_parameters(table.parameters, policy);

  if (settings.has("mode")) {
    const Mode mode = resolve_mode(settings);
    const auto spectrum = one_mode_coefficients(state, s, mode, policy);
    table.parameters.emplace_back("mode", mode == Mode::One ? "1" : "2");
    table.parameters.emplace_back("phi_ref", format_double(spectrum.phi_ref));
    table.parameters.emplace_back("n_used", std::to_string(spectrum.n_used));
    table.parameters.emplace_back("entries_past_n_used", "0");
    table.columns = {"k", "c_even", "c_odd", "d_odd"};
    const std::size_t rows = std::max(spectrum.c_even.size(), spectrum.c_odd.size());
    const auto at = [](const std::vector<double>& v, std::size_t i) {
      return i < v.size() ? v[i] : 0.0;
    };
    for (std::size_t i = 0; i < rows; ++i) {
      table.rows.push_back({static_cast<double>(i + 1), at(spectrum.c_even, i),
                            at(spectrum.c_odd, i), at(spectrum.d_odd, i)});
    }
    return emit(table, settings);
  }

  const Branch branch = resolve_branch(settings);
  const auto spectrum = build_spectrum(state, s, branch, policy);
  table.parameters.emplace_back("branch", branch_name(branch));
  table.parameters.emplace_back("phi_prime", format_double(spectrum.phi_prime()));
  table.parameters.emplace_back("n_used", std::to_string(spectrum.n_used()));
  table.parameters.emplace_back("tail_bound", format_double(spectrum.tail_bound()));
  table.columns = {"n", "c_n"};
  for (int n = 1; n <= spectrum.n_used(); ++n) {
    table.rows.push_back({static_cast<double>(n), spectrum.coeffs()[static_cast<std::size_t>(n - 1)]});
  }
  return emit(table, settings);
}

Artifact cmd_phase_dist(const Settings& settings) {
  const auto resolved = resolve_state(settings);
  const auto state = build_state(resolved);
  const double s = settings.real("s", 0.0);
  const auto policy = resolve_policy(settings);
  const int n_phi = settings.integer("n-phi", 361, 2);
  const Branch branch = resolve_branch(settings);
  const auto spectrum = build_spectrum(state, s, branch, policy);

  Table table;
  table.parameters = base_parameters("phase-dist");
  add_state_parameters(table.parameters, resolved, &state);
  table.parameters.emplace_back("s", format_double(s));
  add_policy_parameters(table.parameters, policy);
  table.parameters.emplace_back("branch", branch_name(branch));
  table.parameters.emplace_back("phi_prime", format_double(spectrum.phi_prime()));
  table.parameters.emplace_back("n_used", std::to_string(spectrum.n_used()));
  table.parameters.emplace_back("n_phi", std::to_string(n_phi));
  table.columns = {"phi_offset", "density"};
  for (double d : offset_grid(n_phi)) {
    table.rows.push_back({d, eval_phase_dist(spectrum, spectrum.phi_prime() + d)});
  }
  return emit(table, settings);
}

Artifact cmd_one_mode(const Settings& settings) {
  const auto resolved = resolve_state(settings);
  const auto state = build_state(resolved);
  const double s = settings.real("s", 0.0);
  const auto policy = resolve_policy(settings);
  const int n_phi = settings.integer("n-phi", 361, 2);
  const Mode mode = resolve_mode(settings);
  const auto spectrum = one_mode_coefficients(state, s, mode, policy);

  Table table;
  table.parameters = base_parameters("one-mode");
  add_state_parameters(table.parameters, resolved, &state);
  table.parameters.emplace_back("s", format_double(s));
  add_policy_parameters(table.parameters, policy);
  table.parameters.emplace_back("mode", mode == Mode::One ? "1" : "2");
  table.parameters.emplace_back("phi_ref", format_double(spectrum.phi_ref));
  table.parameters.emplace_back("n_used", std::to_string(spectrum.n_used));
  table.parameters.emplace_back("n_phi", std::to_string(n_phi));
  table.columns = {"phi_offset", "density"};
  for (double d : offset_grid(n_phi)) {
    table.rows.push_back({d, eval_one_mode_dist(spectrum, spectrum.phi_ref + d)});
  }
  return emit(table, settings);
}

Artifact cmd_figure(const Settings& settings) {
  const std::string id =
      settings.choice("id", "", {"1a", "1b", "1c", "1d", "2a", "2b", "2c", "2d"});
  if (id.empty()) {
    throw ConfigError("figure requires --id 1a|1b|1c|1d|2a|2b|2c|2d");
  }
  const Branch branch = id[0] == '1' ? Branch::Minus : Branch::Plus;
  const bool odd = id[1] == 'c' || id[1] == 'd';
  const PresetKind kind = odd ? PresetKind::OddCat : PresetKind::EvenCat;
  const bool surface = id[1] == 'a' || id[1] == 'c';
  const auto policy = resolve_policy(settings);
  const int n_phi = settings.integer("n-phi", 361, 2);
  const auto offsets = offset_grid(n_phi);

  Table table;
  table.parameters = base_parameters("figure");
  table.parameters.emplace_back("panel", id);
  table.parameters.emplace_back("preset", std::string(to_string(kind)));
  table.parameters.emplace_back("branch", branch_name(branch));
  table.parameters.emplace_back("alpha_arg", "0");
  table.parameters.emplace_back("beta_arg", "0");
  table.parameters.emplace_back("phi_prime", "0");
  add_policy_parameters(table.parameters, policy);
  table.parameters.emplace_back("n_phi", std::to_string(n_phi));

  if (surface) {
    const int n_alpha = settings.integer("n-alpha-sq", 61, 2);
    const double alpha_sq_max = settings.real("alpha-sq-max", 3.0);
    if (!(alpha_sq_max > 0.0)) {
      throw ConfigError("--alpha-sq-max must be positive");
    }
    table.parameters.emplace_back("s", "0");
    table.parameters.emplace_back("alpha_abs_equals_beta_abs", "true");
    table.parameters.emplace_back("n_alpha_sq", std::to_string(n_alpha));
    table.parameters.emplace_back("alpha_sq_max", format_double(alpha_sq_max));
    table.parameters.emplace_back(
        "null_endpoint",
        odd ? "alpha_sq=0 is not normalizable for this state; row uses alpha_sq=" +
                  format_double(kNullEndpointSubstitute)
            : "none");
    table.columns = {"alpha_sq", "phi_offset", "density"};
    for (int i = 0; i < n_alpha; ++i) {
      double alpha_sq = alpha_sq_max * i / (n_alpha - 1);
      if (odd && alpha_sq == 0.0) {
        alpha_sq = kNullEndpointSubstitute;
      }
      const double a = std::sqrt(alpha_sq);
      const auto spectrum = build_spectrum(make_preset(kind, a, a), 0.0, branch, policy);
      for (double d : offsets) {
        table.rows.push_back({alpha_sq, d, eval_phase_dist(spectrum, d)});
      }
    }
    return emit(table, settings);
  }

  const std::vector<double> orderings = {-1.0, 0.0, 0.4};
  table.parameters.emplace_back("alpha_abs", "1");
  table.parameters.emplace_back("beta_abs", "1");
  table.parameters.emplace_back("s_values", "-1;0;0.4");
  table.columns = {"phi_offset"};
  std::vector<FourierSpectrum> spectra;
  const auto state = make_preset(kind, 1.0, 1.0);
  for (double s : orderings) {
    table.columns.push_back("density_s=" + format_double(s));
    spectra.push_back(build_spectrum(state, s, branch, policy));
  }
  for (double d : offsets) {
    std::vector<double> row{d};
    for (const auto& spectrum : spectra) {
      row.push_back(eval_phase_dist(spectrum, d));
    }
    table.rows.push_back(std::move(row));
  }
  return emit(table, settings);
}

Artifact cmd_moments(const Settings& settings) {
  const auto resolved = resolve_state(settings);
  const auto state = build_state(resolved);
  const double s = settings.real("s", 0.0);
  const auto policy = resolve_policy(settings);
  const Branch branch = resolve_branch(settings);
  const int n = settings.integer("n", 1, 1);
  const auto spectrum = build_spectrum(state, s, branch, policy);
  const double phi0 = settings.real("phi0", spectrum.phi_prime());

  auto parameters = base_parameters("moments");
  add_state_parameters(parameters, resolved, &state);
  parameters.emplace_back("s", format_double(s));
  add_policy_parameters(parameters, policy);
  parameters.emplace_back("branch", branch_name(branch));
  parameters.emplace_back("n", std::to_string(n));
  parameters.emplace_back("phi0", format_double(phi0));

  const auto m = trig_moments(spectrum, n);
  const auto mv = phase_mean_var(spectrum, {phi0});
  nlohmann::json report;
  report["phi_prime"] = spectrum.phi_prime();
  report["n_used"] = spectrum.n_used();
  report["c_n"] = spectrum.coefficient(n);
  report["c_2n"] = spectrum.coefficient(2 * n);
  report["mean_cos"] = m.mean_cos;
  report["mean_sin"] = m.mean_sin;
  report["var_cos"] = m.var_cos;
  report["var_sin"] = m.var_sin;
  report["phase_mean"] = mv.mean;
  report["phase_variance"] = mv.variance;
  return emit_report(parameters, report, settings);
}

Artifact cmd_wigner_slice(const Settings& settings) {
  const auto resolved = resolve_state(settings);
  const auto state = build_state(resolved);
  const double s = settings.real("s", 0.0);
  const std::string x_axis = settings.choice("x-axis", "gamma_re", kSliceAxes);
  const std::string y_axis = settings.choice("y-axis", "delta_re", kSliceAxes);
  if (x_axis == y_axis) {
    throw ConfigError("--x-axis and --y-axis must differ");
  }
  const double x_min = settings.real("x-min", -3.0);
  const double x_max = settings.real("x-max", 3.0);
  const double y_min = settings.real("y-min", -3.0);
  const double y_max = settings.real("y-max", 3.0);
  if (!(x_min < x_max) || !(y_min < y_max)) {
    throw ConfigError("slice ranges must satisfy min < max");
  }
  const int n_x = settings.integer("n-x", 61, 2);
  const int n_y = settings.integer("n-y", 61, 2);
  const double base[4] = {settings.real("gamma-re", 0.0), settings.real("gamma-im", 0.0),
                          settings.real("delta-re", 0.0), settings.real("delta-im", 0.0)};
  const auto axis_index = [](const std::string& name) {
    return static_cast<std::size_t>(std::find(kSliceAxes.begin(), kSliceAxes.end(), name) -
                                    kSliceAxes.begin());
  };
  const std::size_t ix = axis_index(x_axis);
  const std::size_t iy = axis_index(y_axis);

  Table table;
  table.parameters = base_parameters("wigner-slice");
  add_state_parameters(table.parameters, resolved, &state);
  table.parameters.emplace_back("s", format_double(s));
  table.parameters.emplace_back("x_axis", x_axis);
  table.parameters.emplace_back("y_axis", y_axis);
  table.parameters.emplace_back("x_range", format_double(x_min) + ";" + format_double(x_max));
  table.parameters.emplace_back("y_range", format_double(y_min) + ";" + format_double(y_max));
  table.parameters.emplace_back("n_x", std::to_string(n_x));
  table.parameters.emplace_back("n_y", std::to_string(n_y));
  for (std::size_t k = 0; k < 4; ++k) {
    table.parameters.emplace_back("base_" + kSliceAxes[k], format_double(base[k]));
  }
  table.columns = {"x", "y", "w"};

  const QuasiProbability w(state, s);
  for (int i = 0; i < n_x; ++i) {
    const double x = x_min + (x_max - x_min) * i / (n_x - 1);
    for (int j = 0; j < n_y; ++j) {
      const double y = y_min + (y_max - y_min) * j / (n_y - 1);
      double coords[4] = {base[0], base[1], base[2], base[3]};
      coords[ix] = x;
      coords[iy] = y;
      table.rows.push_back({x, y, w(Complex{coords[0], coords[1]}, Complex{coords[2], coords[3]})});
    }
  }
  return emit(table, settings);
}

Artifact cmd_oracle_compare(const Settings& settings) {
  const auto policy = resolve_policy(settings);
  const auto spec = resolve_quadrature(settings);
  const int n_check = settings.integer("n-check", 16, 1);
  const bool single = settings.has("preset") || has_explicit_weights(settings);
  const auto resolved = resolve_state(settings);

  std::vector<std::pair<std::string, QuasiBellState>> states;
  if (single) {
    states.emplace_back(resolved.preset.empty() ? "custom" : resolved.preset, build_state(resolved));
  } else {
    for (const auto& tag : preset_tags()) {
      auto r = resolved;
      r.preset = tag;
      r.params = make_preset(*parse_preset(tag), r.params.alpha, r.params.beta).params();
      states.emplace_back(tag, build_state(r));
    }
  }
  std::vector<double> orderings = {-1.0, 0.0, 0.4};
  if (const auto s = settings.real("s")) {
    orderings = {*s};
  }

  auto parameters = base_parameters("oracle-compare");
  if (single) {
    add_state_parameters(parameters, resolved, &states.front().second);
  } else {
    parameters.emplace_back("suite", "even_cat;odd_cat;yurke_stoler_plus;yurke_stoler_minus");
    parameters.emplace_back("alpha_abs", format_double(resolved.alpha_abs));
    parameters.emplace_back("alpha_arg", format_double(resolved.alpha_arg));
    parameters.emplace_back("beta_abs", format_double(resolved.beta_abs));
    parameters.emplace_back("beta_arg", format_double(resolved.beta_arg));
  }
  std::string s_list;
  for (double s : orderings) {
    s_list += (s_list.empty() ? "" : ";") + format_double(s);
  }
  parameters.emplace_back("s_values", s_list);
  add_policy_parameters(parameters, policy);
  add_quadrature_parameters(parameters, spec);
  parameters.emplace_back("n_check", std::to_string(n_check));

  // Check points avoid the symmetry axis so both halves are exercised.
  std::vector<double> offsets;
  for (int i = 0; i < n_check; ++i) {
    offsets.push_back(-kPi + 2.0 * kPi * (i + 0.5) / n_check);
  }
  std::vector<DisplacementPoint> chi_points;
  for (int k = 0; k < 10; ++k) {
    chi_points.push_back({std::polar(0.2 * (k + 1), 2.4 * k), std::polar(0.18 * (10 - k), 1.3 * k + 0.5)});
  }

  nlohmann::json cases = nlohmann::json::array();
  std::map<std::string, double> worst;
  for (const auto& [label, state] : states) {
    const FockCutoff cutoff{settings.integer("n-cut", FockCutoff::recommended(state).n_cut, 1)};
    for (double s : orderings) {
      std::map<std::string, double> dev;
      for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const auto spectrum = build_spectrum(state, s, branch, policy);
        double& d = dev[std::string("phase_dist_") + branch_name(branch)];
        for (double off : offsets) {
          const double phi = spectrum.phi_prime() + off;
          d = std::max(d, std::abs(eval_phase_dist(spectrum, phi) -
                                   quadrature_phase_dist(state, s, branch, phi, spec)));
        }
      }
      for (Mode mode : {Mode::One, Mode::Two}) {
        const auto spectrum = one_mode_coefficients(state, s, mode, policy);
        double& d = dev[mode == Mode::One ? "one_mode_1" : "one_mode_2"];
        for (double off : offsets) {
          const double phi = spectrum.phi_ref + off;
          d = std::max(d, std::abs(eval_one_mode_dist(spectrum, phi) -
                                   quadrature_one_mode(state, s, mode, phi, spec)));
        }
      }
      double& dc = dev["chi"];
      for (const auto& p : chi_points) {
        dc = std::max(dc, std::abs(chi(state, p, s) - fock_chi_oracle(state, p, s, cutoff).value));
      }
      nlohmann::json entry;
      entry["state"] = label;
      entry["s"] = s;
      entry["n_cut"] = cutoff.n_cut;
      entry["max_abs_deviation"] = dev;
      cases.push_back(entry);
      for (const auto& [key, value] : dev) {
        worst[key] = std::max(worst[key], value);
      }
    }
  }
  double overall = 0.0;
  for (const auto& [key, value] : worst) {
    overall = std::max(overall, value);
  }
  nlohmann::json report;
  report["cases"] = cases;
  report["max_abs_deviation"] = worst;
  report["overall_max_abs_deviation"] = overall;
  report["tolerance"] = kOracleTolerance;
  report["within_tolerance"] = overall < kOracleTolerance;
  return emit_report(parameters, report, settings);
}

}  // namespace

const std::vector<CommandInfo>& commands() {
  static const std::vector<CommandInfo> table = {
      {"validate", "Check a state and report invariant spot-checks (JSON)",
       join({kCommonOptions, kStateOptions, {"s", "n-phi"}, kTruncationOptions}),
       {"renormalize"}},
      {"coeffs", "Fourier coefficients of a phase-sum/difference or one-mode distribution",
       join({kCommonOptions, kStateOptions, {"s", "branch", "mode"}, kTruncationOptions}),
       {"renormalize"}},
      {"phase-dist", "Phase-sum (plus) or phase-difference (minus) distribution over phi - phi'",
       join({kCommonOptions, kStateOptions, {"s", "branch", "n-phi"}, kTruncationOptions}),
       {"renormalize"}},
      {"one-mode", "One-mode phase distribution over phi - phi_ref",
       join({kCommonOptions, kStateOptions, {"s", "mode", "n-phi"}, kTruncationOptions}),
       {"renormalize"}},
      {"figure", "Data for one figure panel (1 = difference, 2 = sum; a,b even cat; c,d odd cat)",
       join({kCommonOptions, {"id", "n-phi", "n-alpha-sq", "alpha-sq-max"}, kTruncationOptions}),
       {}},
      {"moments", "Trigonometric moments and the windowed phase mean and variance (JSON)",
       join({kCommonOptions, kStateOptions, {"s", "branch", "n", "phi0"}, kTruncationOptions}),
       {"renormalize"}},
      {"wigner-slice", "Quasi-probability W over a 2D slice of (gamma, delta)",
       join({kCommonOptions, kStateOptions,
             {"s", "x-axis", "y-axis", "x-min", "x-max", "y-min", "y-max", "n-x", "n-y",
              "gamma-re", "gamma-im", "delta-re", "delta-im"}}),
       {"renormalize"}},
      {"oracle-compare", "Series vs quadrature and closed-form chi vs number-basis trace (JSON)",
       join({kCommonOptions, kStateOptions, {"s", "n-check"}, kTruncationOptions,
             kQuadratureOptions}),
       {"renormalize"}},
  };
  return table;
}

std::vector<std::string> all_option_names() {
  std::set<std::string> names;
  for (const auto& c : commands()) {
    names.insert(c.options.begin(), c.options.end());
    names.insert(c.flags.begin(), c.flags.end());
  }
  names.erase("config");
  return {names.begin(), names.end()};
}

Artifact execute(const std::string& command, const Settings& settings) {
  if (command == "validate") return cmd_validate(settings);
  if (command == "coeffs") return cmd_coeffs(settings);
  if (command == "phase-dist") return cmd_phase_dist(settings);
  if (command == "one-mode") return cmd_one_mode(settings);
  if (command == "figure") return cmd_figure(settings);
  if (command == "moments") return cmd_moments(settings);
  if (command == "wigner-slice") return cmd_wigner_slice(settings);
  if (command == "oracle-compare") return cmd_oracle_compare(settings);
  throw ConfigError("unknown command '" + command + "'");
}

}  // namespace qbphase::cli

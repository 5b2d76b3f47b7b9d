#include "qbphase/model.hpp"

#include <cmath>
#include <sstream>

#include "qbphase/error.hpp"

namespace qbphase {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidState: return "InvalidState";
    case ErrorKind::NullState: return "NullState";
    case ErrorKind::Domain: return "DomainError";
    case ErrorKind::NoConvergence: return "NoConvergence";
    case ErrorKind::Overflow: return "OverflowError";
    case ErrorKind::CutoffTooSmall: return "CutoffTooSmall";
  }
  return "Unknown";
}

bool is_finite(Complex z) noexcept {
  return std::isfinite(z.real()) && std::isfinite(z.imag());
}

double normalization_radicand(const StateParams& p) noexcept {
  const double overlap = (p.mu * std::conj(p.nu)).real();
  const double intensity = std::norm(p.alpha) + std::norm(p.beta);
  // Squared norm of mu|alpha,beta> + nu|-alpha,-beta> over |mu|^2 + |nu|^2:
  // (|mu + nu|^2 + 2r (e^{-2S} - 1)) / w. Analytically 1 + 2r e^{-2S} for
  // unit weights; exactly 0 for nu = -mu at the vacuum, and no 1 - e^{-2S}
  // cancellation for the odd cat at small amplitude.
  const double weight = std::norm(p.mu) + std::norm(p.nu);
  return (std::norm(p.mu + p.nu) + 2.0 * overlap * std::expm1(-2.0 * intensity)) / weight;
}

std::vector<Diagnostic> validate(const StateParams& p) {
  std::vector<Diagnostic> out;
  const auto check_finite = [&out](Complex z, const char* name) {
    if (!is_finite(z)) {
      out.push_back({"non_finite", std::string(name) + " is not finite", 0.0});
    }
  };
  check_finite(p.alpha, "alpha");
  check_finite(p.beta, "beta");
  check_finite(p.mu, "mu");
  check_finite(p.nu, "nu");
  if (!out.empty()) {
    return out;
  }

  const double weight_norm = std::norm(p.mu) + std::norm(p.nu);
  if (std::abs(weight_norm - 1.0) > kWeightNormTolerance) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "|mu|^2+|nu|^2 = " << weight_norm << " != 1";
    out.push_back({"weight_norm", msg.str(), weight_norm - 1.0});
  }

  const double radicand = normalization_radicand(p);
  if (!(radicand > kNullStateThreshold)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "non-normalizable: 1+2Re(mu nu*)exp(-2(|alpha|^2+|beta|^2)) = " << radicand;
    out.push_back({"null_state", msg.str(), radicand});
  }
  return out;
}

QuasiBellState QuasiBellState::create(const StateParams& params, Renormalize renormalize) {
  StateParams p = params;
  if (renormalize == Renormalize::Yes && is_finite(p.mu) && is_finite(p.nu)) {
    const double weight = std::sqrt(std::norm(p.mu) + std::norm(p.nu));
    if (weight > 0.0) {
      p.mu /= weight;
      p.nu /= weight;
    }
  }

  const auto diagnostics = validate(p);
  for (const auto& d : diagnostics) {
    if (d.code != "null_state") {
      throw InvalidStateError(d.message);
    }
  }
  if (!diagnostics.empty()) {
    throw NullStateError(diagnostics.front().message);
  }
  return QuasiBellState(p, 1.0 / normalization_radicand(p));
}

QuasiBellState QuasiBellState::with_amplitudes(Complex alpha, Complex beta) const {
  StateParams p = params_;
  p.alpha = alpha;
  p.beta = beta;
  return create(p);
}

double normalization_constant(const QuasiBellState& state) {
  const double radicand = normalization_radicand(state.params());
  if (!(radicand > kNullStateThreshold)) {
    throw NullStateError("normalization radicand is not positive");
  }
  return 1.0 / std::sqrt(radicand);
}

std::string_view to_string(PresetKind kind) noexcept {
  switch (kind) {
    case PresetKind::EvenCat: return "even_cat";
    case PresetKind::OddCat: return "odd_cat";
    case PresetKind::YurkeStolerPlus: return "yurke_stoler_plus";
    case PresetKind::YurkeStolerMinus: return "yurke_stoler_minus";
  }
  return "unknown";
}

std::optional<PresetKind> parse_preset(std::string_view tag) noexcept {
  for (auto kind : {PresetKind::EvenCat, PresetKind::OddCat, PresetKind::YurkeStolerPlus,
                    PresetKind::YurkeStolerMinus}) {
    if (to_string(kind) == tag) {
      return kind;
    }
  }
  return std::nullopt;
}

QuasiBellState make_preset(PresetKind kind, Complex alpha, Complex beta) {
  const double h = 1.0 / std::sqrt(2.0);
  Complex nu;
  switch (kind) {
    case PresetKind::EvenCat: nu = {h, 0.0}; break;
    case PresetKind::OddCat: nu = {-h, 0.0}; break;
    case PresetKind::YurkeStolerPlus: nu = {0.0, h}; break;
    case PresetKind::YurkeStolerMinus: nu = {0.0, -h}; break;
  }
  return QuasiBellState::create({alpha, beta, Complex{h, 0.0}, nu});
}

}  // namespace qbphase

#pragma once

#include <complex>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace qbphase {

using Complex = std::complex<double>;

/// Tolerance on |mu|^2 + |nu|^2 = 1 accepted without renormalization.
inline constexpr double kWeightNormTolerance = 1e-12;
/// Radicand of the normalization constant at or below which the state is
/// treated as the zero vector.
inline constexpr double kNullStateThreshold = 1e-300;
/// Largest ordering parameter accepted by W and everything built on it.
inline constexpr double kMaxOrdering = 1.0 - 1e-9;

bool is_finite(Complex z) noexcept;

/// Unvalidated parameters of the two-mode superposition
/// N (mu |alpha, beta> + nu |-alpha, -beta>).
struct StateParams {
  Complex alpha;
  Complex beta;
  Complex mu;
  Complex nu;
};

struct Diagnostic {
  std::string code;
  std::string message;
  double residual = 0.0;
};

/// Lists every violated invariant of `params`; empty means valid.
std::vector<Diagnostic> validate(const StateParams& params);

enum class Renormalize { No, Yes };

enum class PresetKind { EvenCat, OddCat, YurkeStolerPlus, YurkeStolerMinus };

std::string_view to_string(PresetKind kind) noexcept;
std::optional<PresetKind> parse_preset(std::string_view tag) noexcept;

/// Entangled two-mode coherent state (quasi-Bell state). Immutable; every
/// instance satisfies the weight-norm and non-null invariants.
class QuasiBellState {
 public:
  /// Throws InvalidStateError for non-finite input or a weight norm off by
  /// more than kWeightNormTolerance (unless `renormalize` is Yes), and
  /// NullStateError for a non-normalizable superposition.
  static QuasiBellState create(const StateParams& params,
                               Renormalize renormalize = Renormalize::No);

  Complex alpha() const noexcept { return params_.alpha; }
  Complex beta() const noexcept { return params_.beta; }
  Complex mu() const noexcept { return params_.mu; }
  Complex nu() const noexcept { return params_.nu; }
  const StateParams& params() const noexcept { return params_; }

  /// mu * conj(nu).
  Complex overlap_weight() const noexcept { return params_.mu * std::conj(params_.nu); }
  /// |alpha|^2 + |beta|^2.
  double total_intensity() const noexcept {
    return std::norm(params_.alpha) + std::norm(params_.beta);
  }
  /// N^2, cached at construction.
  double normalization_squared() const noexcept { return norm_squared_; }

  QuasiBellState with_amplitudes(Complex alpha, Complex beta) const;

 private:
  QuasiBellState(const StateParams& params, double norm_squared)
      : params_(params), norm_squared_(norm_squared) {}

  StateParams params_;
  double norm_squared_;
};

/// 1 + 2 Re(mu nu*) exp(-2(|alpha|^2 + |beta|^2)), evaluated as the squared
/// norm of the unnormalized superposition so that nu = -mu at the vacuum
/// gives exactly 0.
double normalization_radicand(const StateParams& params) noexcept;

/// The normalization constant N = radicand^(-1/2).
double normalization_constant(const QuasiBellState& state);

QuasiBellState make_preset(PresetKind kind, Complex alpha, Complex beta);

}  // namespace qbphase

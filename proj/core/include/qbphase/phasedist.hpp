#pragma once

#include <vector>

#include "qbphase/model.hpp"
#include "qbphase/specfun.hpp"

namespace qbphase {

/// Series truncation: stop at the first N >= n_min with
/// max(|c_N|, |c_{N-1}|) < eps_tail; fail past n_max.
struct TruncationPolicy {
  double eps_tail = 1e-14;
  int n_min = 4;
  int n_max = 512;

  /// Throws DomainError if the fields are inconsistent.
  void check() const;
};

/// Fourier cosine coefficients of the phase-sum (Plus) or phase-difference
/// (Minus) distribution
///   P(phi) = 1/(2pi) [1 + 2 sum_n c_n cos n(phi - phi')].
class FourierSpectrum {
 public:
  Branch branch() const noexcept { return branch_; }
  /// phi' = phi_beta +- phi_alpha reduced to [0, 2pi).
  double phi_prime() const noexcept { return phi_prime_; }
  /// c_1 ... c_N.
  const std::vector<double>& coeffs() const noexcept { return coeffs_; }
  int n_used() const noexcept { return static_cast<int>(coeffs_.size()); }
  double tail_bound() const noexcept { return tail_bound_; }
  double ordering() const noexcept { return s_; }
  const QuasiBellState& state() const noexcept { return state_; }

  /// c_n for any n >= 1; orders beyond n_used are computed on demand.
  double coefficient(int n) const;

 private:
  friend FourierSpectrum build_spectrum(const QuasiBellState&, double, Branch,
                                        const TruncationPolicy&);
  FourierSpectrum(const QuasiBellState& state, double s, Branch branch)
      : state_(state), s_(s), branch_(branch) {}

  QuasiBellState state_;
  double s_;
  Branch branch_;
  double phi_prime_ = 0.0;
  std::vector<double> coeffs_;
  double tail_bound_ = 0.0;
};

enum class Mode { One = 1, Two = 2 };

/// Coefficients of the one-mode phase distribution
///   P(phi) = 1/(2pi) {1 + 2 sum_k [c_2k cos 2k(phi - phi_ref)
///                                  + c_{2k-1} cos (2k-1)(phi - phi_ref)
///                                  + d_{2k-1} sin (2k-1)(phi - phi_ref)]}.
struct OneModeSpectrum {
  Mode mode = Mode::One;
  double phi_ref = 0.0;
  std::vector<double> c_even;  // c_2, c_4, ...
  std::vector<double> c_odd;   // c_1, c_3, ...
  std::vector<double> d_odd;   // d_1, d_3, ...
  int n_used = 0;              // highest harmonic retained
};

/// Window [phi0 - pi, phi0 + pi) for the phase mean and variance.
struct PhaseWindow {
  double phi0 = 0.0;
};

struct TrigMoments {
  double mean_cos = 0.0;
  double mean_sin = 0.0;
  double var_cos = 0.0;
  double var_sin = 0.0;
};

struct PhaseMeanVariance {
  double mean = 0.0;
  double variance = 0.0;
};

/// c_n^(+/-)(s) for n >= 1, s < 1 - 1e-9.
double fourier_coefficient(const QuasiBellState& state, double s, int n, Branch branch);

FourierSpectrum build_spectrum(const QuasiBellState& state, double s, Branch branch,
                               const TruncationPolicy& policy = {});

/// P^(+/-)(phi); phi may be any real, phi - phi' is reduced to (-pi, pi].
double eval_phase_dist(const FourierSpectrum& spectrum, double phi);

OneModeSpectrum one_mode_coefficients(const QuasiBellState& state, double s, Mode mode,
                                      const TruncationPolicy& policy = {});

double eval_one_mode_dist(const OneModeSpectrum& spectrum, double phi);

/// <cos n(phi - phi')>, <sin n(phi - phi')> and their variances.
TrigMoments trig_moments(const FourierSpectrum& spectrum, int n);

/// Mean and variance of phi over the window centred at phi0.
PhaseMeanVariance phase_mean_var(const FourierSpectrum& spectrum, const PhaseWindow& window);

/// phi - ref reduced to (-pi, pi].
double phase_offset(double phi, double ref) noexcept;

}  // namespace qbphase

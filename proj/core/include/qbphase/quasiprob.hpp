#pragma once

#include "qbphase/model.hpp"

namespace qbphase {

/// Arguments of the two-mode displacement operator D(xi, eta).
struct DisplacementPoint {
  Complex xi;
  Complex eta;
};

/// Phase-space coordinates (gamma, delta) of the two modes.
struct PhaseSpacePoint {
  Complex gamma;
  Complex delta;
};

/// Polar phase-space point in phase-sum/phase-difference coordinates.
/// Angles are reduced to [0, 2pi) on construction.
class PolarPoint {
 public:
  /// Throws DomainError for a negative radius or non-finite input.
  PolarPoint(double r_gamma, double r_delta, double phi_plus, double phi_minus);

  double r_gamma() const noexcept { return r_gamma_; }
  double r_delta() const noexcept { return r_delta_; }
  double phi_plus() const noexcept { return phi_plus_; }
  double phi_minus() const noexcept { return phi_minus_; }
  /// (phi_plus - phi_minus) / 2
  double phi_gamma() const noexcept { return 0.5 * (phi_plus_ - phi_minus_); }
  /// (phi_plus + phi_minus) / 2
  double phi_delta() const noexcept { return 0.5 * (phi_plus_ + phi_minus_); }

 private:
  double r_gamma_;
  double r_delta_;
  double phi_plus_;
  double phi_minus_;
};

/// Reduces an angle to [0, 2pi).
double reduce_angle(double phi) noexcept;

/// s-ordered characteristic function chi(xi, eta; s), closed form. Defined
/// for every finite real s.
Complex chi(const QuasiBellState& state, const DisplacementPoint& point, double s);

/// Same closed form with a complex ordering parameter in the Gaussian prefactor.
Complex chi_complex_s(const QuasiBellState& state, const DisplacementPoint& point, Complex s);

/// Evaluates the s-ordered quasi-probability W(gamma, delta; s) for a fixed
/// state and s. Gaussian terms and the two interference terms are each fused
/// into one real exponential, so the result is exactly real.
class QuasiProbability {
 public:
  /// Throws DomainError for s >= 1 - 1e-9 and OverflowError if the fused
  /// interference exponent can exceed 700 anywhere in phase space.
  QuasiProbability(const QuasiBellState& state, double s);

  double operator()(Complex gamma, Complex delta) const noexcept;

  /// 1/2 [W(gamma, delta) + W(-gamma, -delta)]: the 2pi-symmetrized density.
  double symmetrized(Complex gamma, Complex delta) const noexcept;

  double ordering() const noexcept { return s_; }

 private:
  double s_;
  double u_;  // 2 / (1 - s)
  Complex alpha_conj_;
  Complex beta_conj_;
  double intensity_;
  double prefactor_;  // u^2 N^2 / pi^2
  double mu_weight_;
  double nu_weight_;
  Complex overlap_;  // mu nu*
};

/// W(gamma, delta; s) for real s < 1 - 1e-9.
double w(const QuasiBellState& state, const PhaseSpacePoint& point, double s);

/// 2pi-symmetrized W at a polar point:
/// 1/2 [W(r_g, r_d, phi_g, phi_d) + W(r_g, r_d, phi_g + pi, phi_d + pi)].
double w_symmetrized(const QuasiBellState& state, const PolarPoint& point, double s);

namespace testing {

/// The four-term W with complex s, evaluated literally in complex
/// arithmetic. Used to check [W(s)]* = W(s*); not part of the stable API.
Complex w_complex_s(const QuasiBellState& state, const PhaseSpacePoint& point, Complex s);

}  // namespace testing

}  // namespace qbphase

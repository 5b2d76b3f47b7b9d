#include "qbphase/quasiprob.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "qbphase/error.hpp"

namespace qbphase {
namespace {

constexpr double kMaxExponent = 700.0;

void require_ordering(double s) {
  if (!std::isfinite(s) || !(s < kMaxOrdering)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "ordering parameter s = " << s << " outside s < 1 - 1e-9";
    throw DomainError(msg.str());
  }
}

}  // namespace

double reduce_angle(double phi) noexcept {
  constexpr double two_pi = 2.0 * std::numbers::pi;
  double r = std::fmod(phi, two_pi);
  if (r < 0.0) {
    r += two_pi;
  }
  return r >= two_pi ? 0.0 : r;
}

PolarPoint::PolarPoint(double r_gamma, double r_delta, double phi_plus, double phi_minus)
    : r_gamma_(r_gamma),
      r_delta_(r_delta),
      phi_plus_(reduce_angle(phi_plus)),
      phi_minus_(reduce_angle(phi_minus)) {
  if (!(r_gamma >= 0.0) || !(r_delta >= 0.0) || !std::isfinite(r_gamma) ||
      !std::isfinite(r_delta) || !std::isfinite(phi_plus) || !std::isfinite(phi_minus)) {
    throw DomainError("PolarPoint: radii must be finite and >= 0, angles finite");
  }
}

namespace {

template <typename Scalar>
Complex chi_impl(const QuasiBellState& state, const DisplacementPoint& p, Scalar s) {
  const Complex a = state.alpha();
  const Complex b = state.beta();
  const Complex mu = state.mu();
  const Complex nu = state.nu();
  const double n2 = state.normalization_squared();

  // xi a* - xi* a + eta b* - eta* b is purely imaginary.
  const Complex phase_arg =
      p.xi * std::conj(a) - std::conj(p.xi) * a + p.eta * std::conj(b) - std::conj(p.eta) * b;
  // xi a* + xi* a + eta b* + eta* b is real.
  const double real_arg =
      2.0 * (p.xi * std::conj(a)).real() + 2.0 * (p.eta * std::conj(b)).real();
  const double decay = -2.0 * state.total_intensity();

  const Complex gaussian = std::norm(mu) * std::exp(phase_arg) + std::norm(nu) * std::exp(-phase_arg);
  const Complex interference = std::conj(mu) * nu * std::exp(decay + real_arg) +
                               mu * std::conj(nu) * std::exp(decay - real_arg);
  const double r2 = std::norm(p.xi) + std::norm(p.eta);
  return n2 * std::exp(-0.5 * (Scalar(1.0) - s) * r2) * (gaussian + interference);
}

}  // namespace

Complex chi(const QuasiBellState& state, const DisplacementPoint& point, double s) {
  if (!std::isfinite(s)) {
    throw DomainError("chi: ordering parameter must be finite");
  }
  return chi_impl(state, point, s);
}

Complex chi_complex_s(const QuasiBellState& state, const DisplacementPoint& point, Complex s) {
  if (!is_finite(s)) {
    throw DomainError("chi_complex_s: ordering parameter must be finite");
  }
  return chi_impl(state, point, s);
}

QuasiProbability::QuasiProbability(const QuasiBellState& state, double s)
    : s_(s),
      u_(0.0),
      alpha_conj_(std::conj(state.alpha())),
      beta_conj_(std::conj(state.beta())),
      intensity_(state.total_intensity()),
      prefactor_(0.0),
      mu_weight_(std::norm(state.mu())),
      nu_weight_(std::norm(state.nu())),
      overlap_(state.overlap_weight()) {
  require_ordering(s);
  u_ = 2.0 / (1.0 - s);
  prefactor_ = u_ * u_ * state.normalization_squared() / (std::numbers::pi * std::numbers::pi);
  // The interference exponent u (s G - |gamma|^2 - |delta|^2) peaks at the origin.
  const double peak = u_ * s * intensity_;
  if (peak > kMaxExponent) {
    std::ostringstream msg;
    msg << "W interference exponent 2s(|alpha|^2+|beta|^2)/(1-s) = " << peak
        << " exceeds " << kMaxExponent << " (s too close to 1 for this amplitude)";
    throw OverflowError(msg.str());
  }
}

double QuasiProbability::operator()(Complex gamma, Complex delta) const noexcept {
  const double r2 = std::norm(gamma) + std::norm(delta);
  const Complex cross = alpha_conj_ * gamma + beta_conj_ * delta;
  const double c = 2.0 * cross.real();

  // |gamma - alpha|^2 + |delta - beta|^2 and its mirror, both >= 0.
  const double minus_dist = intensity_ + r2 - c;
  const double plus_dist = intensity_ + r2 + c;
  const double gaussian =
      mu_weight_ * std::exp(-u_ * minus_dist) + nu_weight_ * std::exp(-u_ * plus_dist);

  // mu* nu e^{2iuJ} + mu nu* e^{-2iuJ} = 2 Re(mu nu* e^{-2iuJ}), J = Im(cross).
  const double theta = 2.0 * u_ * cross.imag();
  const double oscillation = overlap_.real() * std::cos(theta) + overlap_.imag() * std::sin(theta);
  const double interference = 2.0 * std::exp(u_ * (s_ * intensity_ - r2)) * oscillation;

  return prefactor_ * (gaussian + interference);
}

double QuasiProbability::symmetrized(Complex gamma, Complex delta) const noexcept {
  // Under (gamma, delta) -> (-gamma, -delta) the cross term changes sign:
  // the two Gaussians swap weights and the sine part of the interference
  // cancels, leaving
  //   (|mu|^2+|nu|^2)/2 (e^{-u d_-} + e^{-u d_+}) + 2 e^{u(sG - R^2)} Re(mu nu*) cos(theta).
  const double r2 = std::norm(gamma) + std::norm(delta);
  const Complex cross = alpha_conj_ * gamma + beta_conj_ * delta;
  const double c = 2.0 * cross.real();
  const double gaussian = 0.5 * (mu_weight_ + nu_weight_) *
                          (std::exp(-u_ * (intensity_ + r2 - c)) + std::exp(-u_ * (intensity_ + r2 + c)));
  const double theta = 2.0 * u_ * cross.imag();
  const double interference =
      2.0 * std::exp(u_ * (s_ * intensity_ - r2)) * overlap_.real() * std::cos(theta);
  return prefactor_ * (gaussian + interference);
}

double w(const QuasiBellState& state, const PhaseSpacePoint& point, double s) {
  return QuasiProbability(state, s)(point.gamma, point.delta);
}

double w_symmetrized(const QuasiBellState& state, const PolarPoint& point, double s) {
  const Complex gamma = std::polar(point.r_gamma(), point.phi_gamma());
  const Complex delta = std::polar(point.r_delta(), point.phi_delta());
  return QuasiProbability(state, s).symmetrized(gamma, delta);
}

namespace testing {

Complex w_complex_s(const QuasiBellState& state, const PhaseSpacePoint& p, Complex s) {
  const Complex a = state.alpha();
  const Complex b = state.beta();
  const Complex mu = state.mu();
  const Complex nu = state.nu();
  const Complex one_minus_s = 1.0 - s;
  const double g_int = state.total_intensity();
  const double r2 = std::norm(p.gamma) + std::norm(p.delta);

  const Complex sym = std::conj(a) * p.gamma + a * std::conj(p.gamma) + std::conj(b) * p.delta +
                      b * std::conj(p.delta);
  const Complex anti = std::conj(a) * p.gamma - a * std::conj(p.gamma) + std::conj(b) * p.delta -
                       b * std::conj(p.delta);

  const Complex prefactor = 4.0 * state.normalization_squared() /
                            (std::numbers::pi * std::numbers::pi * one_minus_s * one_minus_s) *
                            std::exp(-2.0 / one_minus_s * g_int) * std::exp(-2.0 / one_minus_s * r2);
  const Complex gaussian = std::norm(mu) * std::exp(2.0 * sym / one_minus_s) +
                           std::norm(nu) * std::exp(-2.0 * sym / one_minus_s);
  const Complex interference =
      std::exp(2.0 * (1.0 + s) / one_minus_s * g_int) *
      (std::conj(mu) * nu * std::exp(2.0 * anti / one_minus_s) +
       mu * std::conj(nu) * std::exp(-2.0 * anti / one_minus_s));
  return prefactor * (gaussian + interference);
}

}  // namespace testing

}  // namespace qbphase

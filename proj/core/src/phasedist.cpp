#include "qbphase/phasedist.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qbphase/error.hpp"
#include "qbphase/quasiprob.hpp"
#include "qbphase/trig_series.hpp"

namespace qbphase {
namespace {

constexpr double kMaxExponent = 700.0;
constexpr double kInvTwoPi = 0.5 / std::numbers::pi;

void require_ordering(double s) {
  if (!std::isfinite(s) || !(s < kMaxOrdering)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "ordering parameter s = " << s << " outside s < 1 - 1e-9";
    throw DomainError(msg.str());
  }
}

// weight * exp(-2(|alpha|^2+|beta|^2)) * prod(factors), fused in log space.
double fused_interference(double weight, double intensity,
                          std::initializer_list<LogScaledValue> factors) {
  if (weight == 0.0) {
    return 0.0;
  }
  double exponent = std::log(std::abs(weight)) - 2.0 * intensity;
  int sign = weight > 0.0 ? 1 : -1;
  for (const auto& f : factors) {
    if (f.is_zero()) {
      return 0.0;
    }
    exponent += f.log_mag;
    sign *= f.sign;
  }
  if (exponent > kMaxExponent) {
    std::ostringstream msg;
    msg << "fused interference exponent " << exponent << " exceeds " << kMaxExponent;
    throw OverflowError(msg.str());
  }
  return sign * std::exp(exponent);
}

double product_value(const LogScaledValue& a, const LogScaledValue& b) {
  if (a.is_zero() || b.is_zero()) {
    return 0.0;
  }
  return a.sign * b.sign * std::exp(a.log_mag + b.log_mag);
}

}  // namespace

void TruncationPolicy::check() const {
  if (!(eps_tail > 0.0) || n_min < 1 || n_max < n_min) {
    std::ostringstream msg;
    msg << "invalid truncation policy: eps_tail=" << eps_tail << " n_min=" << n_min
        << " n_max=" << n_max;
    throw DomainError(msg.str());
  }
}

double phase_offset(double phi, double ref) noexcept {
  // (-pi, pi]
  double d = reduce_angle(phi - ref);
  if (d > std::numbers::pi) {
    d -= 2.0 * std::numbers::pi;
  }
  return d;
}

double fourier_coefficient(const QuasiBellState& state, double s, int n, Branch branch) {
  require_ordering(s);
  if (n < 1) {
    throw DomainError("fourier_coefficient: n must be >= 1");
  }
  const double x_alpha = std::norm(state.alpha()) / (1.0 - s);
  const double x_beta = std::norm(state.beta()) / (1.0 - s);

  const double gaussian = product_value(i_n_combo(n, x_alpha, Branch::Plus),
                                        i_n_combo(n, x_beta, Branch::Plus));
  const double parity = (branch == Branch::Minus && n % 2 == 1) ? -1.0 : 1.0;
  const double interference =
      fused_interference(parity * 2.0 * state.overlap_weight().real(), state.total_intensity(),
                         {i_n_combo(n, x_alpha, Branch::Minus), i_n_combo(n, x_beta, Branch::Minus)});
  return state.normalization_squared() * 0.5 * std::numbers::pi * (gaussian + interference);
}

double FourierSpectrum::coefficient(int n) const {
  if (n < 1) {
    throw DomainError("FourierSpectrum::coefficient: n must be >= 1");
  }
  if (n <= n_used()) {
    return coeffs_[static_cast<std::size_t>(n - 1)];
  }
  return fourier_coefficient(state_, s_, n, branch_);
}

FourierSpectrum build_spectrum(const QuasiBellState& state, double s, Branch branch,
                               const TruncationPolicy& policy) {
  policy.check();
  require_ordering(s);

  FourierSpectrum spectrum(state, s, branch);
  const double phase_alpha = std::arg(state.alpha());
  const double phase_beta = std::arg(state.beta());
  spectrum.phi_prime_ = reduce_angle(branch == Branch::Plus ? phase_beta + phase_alpha
                                                            : phase_beta - phase_alpha);

  double previous = 0.0;
  for (int n = 1; n <= policy.n_max; ++n) {
    const double c = fourier_coefficient(state, s, n, branch);
    if (!std::isfinite(c)) {
      throw OverflowError("non-finite Fourier coefficient");
    }
    spectrum.coeffs_.push_back(c);
    const double tail = std::max(std::abs(c), std::abs(previous));
    if (n >= policy.n_min && n >= 2 && tail < policy.eps_tail) {
      spectrum.tail_bound_ = tail;
      return spectrum;
    }
    previous = c;
  }
  std::ostringstream msg;
  msg << "phase spectrum did not reach tail " << policy.eps_tail << " within " << policy.n_max
      << " terms";
  throw NoConvergenceError(msg.str());
}

double eval_phase_dist(const FourierSpectrum& spectrum, double phi) {
  const double theta = phase_offset(phi, spectrum.phi_prime());
  const auto sums = clenshaw_trig(spectrum.coeffs(), {}, theta);
  return kInvTwoPi * (1.0 + 2.0 * sums.cos_sum);
}

OneModeSpectrum one_mode_coefficients(const QuasiBellState& state, double s, Mode mode,
                                      const TruncationPolicy& policy) {
  policy.check();
  require_ordering(s);

  const Complex amplitude = mode == Mode::One ? state.alpha() : state.beta();
  const double x = std::norm(amplitude) / (1.0 - s);
  const double scale = state.normalization_squared() * std::sqrt(0.5 * std::numbers::pi);
  const Complex overlap = state.overlap_weight();
  const double population = std::norm(state.mu()) - std::norm(state.nu());
  const double intensity = state.total_intensity();

  OneModeSpectrum spectrum;
  spectrum.mode = mode;
  spectrum.phi_ref = reduce_angle(std::arg(amplitude));

  double previous = 0.0;
  for (int n = 1; n <= policy.n_max; ++n) {
    const auto plus = i_n_combo(n, x, Branch::Plus);
    const auto minus = i_n_combo(n, x, Branch::Minus);
    double magnitude = 0.0;
    if (n % 2 == 0) {
      const double c = scale * (plus.value() +
                                fused_interference(2.0 * overlap.real(), intensity, {minus}));
      spectrum.c_even.push_back(c);
      magnitude = std::abs(c);
    } else {
      const double c = scale * population * plus.value();
      const double d = scale * fused_interference(2.0 * overlap.imag(), intensity, {minus});
      spectrum.c_odd.push_back(c);
      spectrum.d_odd.push_back(d);
      magnitude = std::max(std::abs(c), std::abs(d));
    }
    if (!std::isfinite(magnitude)) {
      throw OverflowError("non-finite one-mode coefficient");
    }
    spectrum.n_used = n;
    if (n >= policy.n_min && n >= 2 && std::max(magnitude, previous) < policy.eps_tail) {
      return spectrum;
    }
    previous = magnitude;
  }
  std::ostringstream msg;
  msg << "one-mode spectrum did not reach tail " << policy.eps_tail << " within "
      << policy.n_max << " terms";
  throw NoConvergenceError(msg.str());
}

double eval_one_mode_dist(const OneModeSpectrum& spectrum, double phi) {
  const auto n = static_cast<std::size_t>(spectrum.n_used);
  std::vector<double> cos_coeffs(n, 0.0);
  std::vector<double> sin_coeffs(n, 0.0);
  for (std::size_t k = 0; k < spectrum.c_odd.size() && 2 * k < n; ++k) {
    cos_coeffs[2 * k] = spectrum.c_odd[k];
    sin_coeffs[2 * k] = spectrum.d_odd[k];
  }
  for (std::size_t k = 0; k < spectrum.c_even.size() && 2 * k + 1 < n; ++k) {
    cos_coeffs[2 * k + 1] = spectrum.c_even[k];
  }
  const double theta = phase_offset(phi, spectrum.phi_ref);
  const auto sums = clenshaw_trig(cos_coeffs, sin_coeffs, theta);
  return kInvTwoPi * (1.0 + 2.0 * (sums.cos_sum + sums.sin_sum));
}

TrigMoments trig_moments(const FourierSpectrum& spectrum, int n) {
  if (n < 1) {
    throw DomainError("trig_moments: n must be >= 1");
  }
  const double c_n = spectrum.coefficient(n);
  const double c_2n = spectrum.coefficient(2 * n);
  TrigMoments m;
  m.mean_cos = c_n;
  m.mean_sin = 0.0;
  m.var_cos = 0.5 * (1.0 - 2.0 * c_n * c_n + c_2n);
  m.var_sin = 0.5 * (1.0 - c_2n);
  return m;
}

PhaseMeanVariance phase_mean_var(const FourierSpectrum& spectrum, const PhaseWindow& window) {
  const double offset = phase_offset(window.phi0, spectrum.phi_prime());
  double mean_shift = 0.0;
  double second = 0.0;
  const auto& c = spectrum.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) {
    const double n = static_cast<double>(i + 1);
    const double sign = (i % 2 == 0) ? -1.0 : 1.0;  // (-1)^n
    if (offset != 0.0) {
      mean_shift += sign * c[i] * std::sin(n * offset) / n;
    }
    second += sign * c[i] * std::cos(n * offset) / (n * n);
  }
  PhaseMeanVariance out;
  out.mean = window.phi0 + 2.0 * mean_shift;
  const double shift = out.mean - window.phi0;
  out.variance = std::numbers::pi * std::numbers::pi / 3.0 - shift * shift + 4.0 * second;
  return out;
}

}  // namespace qbphase

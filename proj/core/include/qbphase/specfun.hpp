#pragma once

#include <cmath>

// Scaled modified Bessel functions of integer and half-integer order,
// Kummer's M(a, b, x), and the two Bessel combinations
//
//   I_n^(+)(x) = sqrt(x) e^{-x} (I_{(n-1)/2}(x) + I_{(n+1)/2}(x))
//   I_n^(-)(x) = sqrt(x) e^{+x} (I_{(n-1)/2}(x) - I_{(n+1)/2}(x))
//
// that generate the Fourier coefficients of the phase distributions. The
// minus combination grows like e^{2x}, so everything that feeds it is carried
// as (sign, log|value|).

namespace qbphase {

/// Order nu = twice_order / 2; only nu in {0, 1/2, 1, 3/2, ...} is supported.
struct BesselOrder {
  unsigned twice_order = 0;

  static constexpr BesselOrder from_twice(unsigned twice) noexcept { return {twice}; }
  static constexpr BesselOrder integer(unsigned n) noexcept { return {2 * n}; }
  constexpr double value() const noexcept { return 0.5 * twice_order; }
  constexpr bool is_half_integer() const noexcept { return (twice_order & 1u) != 0; }
};

/// Overflow-safe real value sign * exp(log_mag).
struct LogScaledValue {
  int sign = 0;
  double log_mag = 0.0;

  static LogScaledValue zero() noexcept { return {0, 0.0}; }
  static LogScaledValue from_value(double v) noexcept {
    if (v == 0.0) return zero();
    return {v > 0.0 ? 1 : -1, std::log(std::abs(v))};
  }
  bool is_zero() const noexcept { return sign == 0; }
  /// Plain value; may overflow to +-inf or underflow to 0.
  double value() const noexcept { return sign == 0 ? 0.0 : sign * std::exp(log_mag); }
  /// sign * exp(log_mag + shift), fusing an external exponent before exponentiating.
  double value_scaled(double shift) const noexcept {
    return sign == 0 ? 0.0 : sign * std::exp(log_mag + shift);
  }
};

enum class Branch { Plus, Minus };

/// e^{-x} I_nu(x). Throws DomainError for x < 0. Underflows to 0 for very
/// high orders at tiny x; use log_bessel_i_scaled there.
double bessel_i_scaled(BesselOrder order, double x);

/// log(e^{-x} I_nu(x)) as a LogScaledValue (sign 0 when the value is exactly 0).
LogScaledValue log_bessel_i_scaled(BesselOrder order, double x);

/// I_{nu+1}(x) / I_nu(x) in (0, 1) by continued fraction. Throws DomainError
/// for x <= 0 and NoConvergenceError if the iteration cap is hit.
double bessel_i_ratio(BesselOrder order, double x);

/// I_n^(+)(x) or I_n^(-)(x) for n >= 1, x >= 0.
LogScaledValue i_n_combo(int n, double x, Branch branch);

/// M(a, b, x) for b not a non-positive integer.
LogScaledValue kummer_m_log(double a, double b, double x);

/// I_n^(+/-)(x) through its Kummer representation
///   sqrt(2/pi) Gamma(n/2+1)/Gamma(n+1) (2x)^{n/2} e^{-+2x} M(n/2+1, n+1, +-2x).
LogScaledValue i_n_combo_kummer(int n, double x, Branch branch);

}  // namespace qbphase

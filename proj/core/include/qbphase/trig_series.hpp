#pragma once

#include <cmath>
#include <span>

namespace qbphase {

/// Clenshaw summation of sum_{k=1}^{N} a_k cos(k theta) and
/// sum_{k=1}^{N} b_k sin(k theta); coefficient index 0 holds k = 1.
struct TrigSums {
  double cos_sum = 0.0;
  double sin_sum = 0.0;
};

inline TrigSums clenshaw_trig(std::span<const double> cos_coeffs,
                              std::span<const double> sin_coeffs, double theta) noexcept {
  // b_k = c_k + 2 cos(theta) b_{k+1} - b_{k+2};
  // sum c_k cos(k theta) = b_1 cos(theta) - b_2, sum c_k sin(k theta) = b_1 sin(theta).
  const double c = std::cos(theta);
  const double two_c = 2.0 * c;
  const auto run = [two_c](std::span<const double> coeffs, double& b1, double& b2) {
    b1 = 0.0;
    b2 = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
      const double b0 = *it + two_c * b1 - b2;
      b2 = b1;
      b1 = b0;
    }
  };
  TrigSums out;
  double b1 = 0.0;
  double b2 = 0.0;
  if (!cos_coeffs.empty()) {
    run(cos_coeffs, b1, b2);
    out.cos_sum = b1 * c - b2;
  }
  if (!sin_coeffs.empty()) {
    run(sin_coeffs, b1, b2);
    out.sin_sum = b1 * std::sin(theta);
  }
  return out;
}

}  // namespace qbphase

#include "qbphase/quadrature.hpp"

#include <numbers>

#include "qbphase/error.hpp"

namespace qbphase {

QuadratureRule gauss_legendre(int n, double lower, double upper) {
  if (n < 1) {
    throw DomainError("gauss_legendre: need at least one node");
  }
  QuadratureRule rule;
  rule.nodes.resize(static_cast<std::size_t>(n));
  rule.weights.resize(static_cast<std::size_t>(n));
  const double half_width = 0.5 * (upper - lower);
  const double mid = 0.5 * (upper + lower);
  const int half = (n + 1) / 2;

  for (int i = 0; i < half; ++i) {
    // Newton on P_n from the Tricomi-style initial guess.
    double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int iter = 0; iter < 100; ++iter) {
      double p0 = 1.0;
      double p1 = 0.0;
      for (int j = 0; j < n; ++j) {
        const double p2 = p1;
        p1 = p0;
        p0 = ((2.0 * j + 1.0) * z * p1 - j * p2) / (j + 1.0);
      }
      // p0 = P_n(z), p1 = P_{n-1}(z)
      dp = n * (z * p0 - p1) / (z * z - 1.0);
      const double dz = p0 / dp;
      z -= dz;
      if (std::abs(dz) <= 1e-16) {
        break;
      }
    }
    const double w = 2.0 / ((1.0 - z * z) * dp * dp);
    const auto lo = static_cast<std::size_t>(i);
    const auto hi = static_cast<std::size_t>(n - 1 - i);
    rule.nodes[lo] = mid - half_width * z;
    rule.nodes[hi] = mid + half_width * z;
    rule.weights[lo] = half_width * w;
    rule.weights[hi] = half_width * w;
  }
  return rule;
}

QuadratureRule periodic_trapezoid(int n) {
  if (n < 1) {
    throw DomainError("periodic_trapezoid: need at least one node");
  }
  QuadratureRule rule;
  const double h = 2.0 * std::numbers::pi / n;
  for (int j = 0; j < n; ++j) {
    rule.nodes.push_back(j * h);
    rule.weights.push_back(h);
  }
  return rule;
}

}  // namespace qbphase

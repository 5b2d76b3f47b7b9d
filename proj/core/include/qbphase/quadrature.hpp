#pragma once

#include <cmath>
#include <vector>

namespace qbphase {

/// Neumaier-compensated running sum. Summation order is the call order, so
/// results are bit-stable for a fixed sequence of addends.
class CompensatedSum {
 public:
  void add(double v) noexcept {
    const double t = sum_ + v;
    if (std::abs(sum_) >= std::abs(v)) {
      comp_ += (sum_ - t) + v;
    } else {
      comp_ += (v - t) + sum_;
    }
    sum_ = t;
  }
  void scale(double f) noexcept {
    sum_ *= f;
    comp_ *= f;
  }
  double value() const noexcept { return sum_ + comp_; }

 private:
  double sum_ = 0.0;
  double comp_ = 0.0;
};

struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [lower, upper]. Throws DomainError for n < 1.
QuadratureRule gauss_legendre(int n, double lower = -1.0, double upper = 1.0);

/// n equispaced nodes on [0, 2pi) with weight 2pi/n each (periodic trapezoid).
QuadratureRule periodic_trapezoid(int n);

}  // namespace qbphase

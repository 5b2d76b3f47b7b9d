#include "qbphase/specfun.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

#include "qbphase/error.hpp"
#include "qbphase/quadrature.hpp"

namespace qbphase {
namespace {

constexpr int kMaxTerms = 10000;
constexpr double kSeriesTolerance = 1e-17;
constexpr int kSmallTermRun = 3;
// Above this argument e^{-x} I_0(x) comes from the large-x expansion, whose
// smallest term is ~e^{-2x}.
constexpr double kAsymptoticThreshold = 25.0;

void require_non_negative(double x, const char* what) {
  if (!(x >= 0.0)) {
    std::ostringstream msg;
    msg << what << ": argument must be >= 0, got " << x;
    throw DomainError(msg.str());
  }
}

// Mantissa/exponent pair for products of many ratios that would underflow.
struct ScaledProduct {
  double mantissa = 1.0;
  long exponent = 0;

  void multiply(double f) {
    int e = 0;
    mantissa = std::frexp(mantissa * f, &e);
    exponent += e;
  }
  double value() const { return std::ldexp(mantissa, static_cast<int>(exponent)); }
  double log() const { return std::log(mantissa) + exponent * std::numbers::ln2; }
};

// e^{-x} I_0(x) for x > 0.
double i0_scaled(double x) {
  if (x <= kAsymptoticThreshold) {
    const double q = 0.25 * x * x;
    CompensatedSum sum;
    double term = 1.0;
    sum.add(term);
    int small_run = 0;
    for (int k = 1; k < kMaxTerms; ++k) {
      term *= q / (static_cast<double>(k) * k);
      sum.add(term);
      small_run = term < kSeriesTolerance * sum.value() ? small_run + 1 : 0;
      if (small_run >= kSmallTermRun) {
        return std::exp(-x) * sum.value();
      }
    }
    throw NoConvergenceError("I_0 power series did not converge");
  }

  // 1/sqrt(2 pi x) * sum_k prod_{j<=k} (2j-1)^2 / (k! (8x)^k); all terms
  // positive for order zero.
  CompensatedSum sum;
  double term = 1.0;
  sum.add(term);
  for (int k = 1; k < kMaxTerms; ++k) {
    const double odd = 2.0 * k - 1.0;
    const double next = term * odd * odd / (8.0 * x * k);
    if (next >= term) {
      break;
    }
    term = next;
    sum.add(term);
    if (term < kSeriesTolerance * sum.value()) {
      break;
    }
  }
  return sum.value() / std::sqrt(2.0 * std::numbers::pi * x);
}

// e^{-x} I_{1/2}(x) = (1 - e^{-2x}) / sqrt(2 pi x), x > 0.
double i_half_scaled(double x) {
  return -std::expm1(-2.0 * x) / std::sqrt(2.0 * std::numbers::pi * x);
}

// I_{nu+1}(x)/I_nu(x) = 1/(2(nu+1)/x + 1/(2(nu+2)/x + ...)), modified Lentz.
double ratio_continued_fraction(double nu, double x) {
  constexpr double tiny = 1e-300;
  const double eps = std::numeric_limits<double>::epsilon();
  double f = tiny;
  double c = f;
  double d = 0.0;
  for (int k = 1; k <= kMaxTerms; ++k) {
    const double b = 2.0 * (nu + k) / x;
    d = b + d;
    if (d == 0.0) d = tiny;
    c = b + 1.0 / c;
    if (c == 0.0) c = tiny;
    d = 1.0 / d;
    const double delta = c * d;
    f *= delta;
    if (std::abs(delta - 1.0) <= eps) {
      return f;
    }
  }
  std::ostringstream msg;
  msg << "Bessel ratio continued fraction did not converge (nu=" << nu << ", x=" << x << ")";
  throw NoConvergenceError(msg.str());
}

// e^{-x} I_nu(x) for x > 0 as a mantissa/exponent product: the base order
// (0 or 1/2) times the chain of ratios obtained by backward recurrence
// r_{mu-1} = 1 / (2 mu / x + r_mu) from a continued-fraction seed.
ScaledProduct scaled_bessel_product(BesselOrder order, double x) {
  const double base_order = order.is_half_integer() ? 0.5 : 0.0;
  const unsigned steps = order.twice_order / 2;

  ScaledProduct product;
  product.multiply(order.is_half_integer() ? i_half_scaled(x) : i0_scaled(x));
  if (steps == 0) {
    return product;
  }

  double mu = base_order + steps - 1;
  double r = ratio_continued_fraction(mu, x);
  product.multiply(r);
  while (mu > base_order) {
    r = 1.0 / (2.0 * mu / x + r);
    product.multiply(r);
    mu -= 1.0;
  }
  return product;
}

}  // namespace

LogScaledValue log_bessel_i_scaled(BesselOrder order, double x) {
  require_non_negative(x, "bessel_i_scaled");
  if (x == 0.0) {
    return order.twice_order == 0 ? LogScaledValue{1, 0.0} : LogScaledValue::zero();
  }
  const auto product = scaled_bessel_product(order, x);
  if (product.mantissa == 0.0) {
    return LogScaledValue::zero();
  }
  return {1, product.log()};
}

double bessel_i_scaled(BesselOrder order, double x) {
  require_non_negative(x, "bessel_i_scaled");
  if (x == 0.0) {
    return order.twice_order == 0 ? 1.0 : 0.0;
  }
  return scaled_bessel_product(order, x).value();
}

double bessel_i_ratio(BesselOrder order, double x) {
  if (!(x > 0.0)) {
    std::ostringstream msg;
    msg << "bessel_i_ratio: argument must be > 0, got " << x;
    throw DomainError(msg.str());
  }
  return ratio_continued_fraction(order.value(), x);
}

LogScaledValue i_n_combo(int n, double x, Branch branch) {
  if (n < 1) {
    throw DomainError("i_n_combo: n must be >= 1");
  }
  require_non_negative(x, "i_n_combo");
  if (x == 0.0) {
    return LogScaledValue::zero();
  }

  const auto lower = BesselOrder::from_twice(static_cast<unsigned>(n - 1));
  const auto scaled = log_bessel_i_scaled(lower, x);
  if (scaled.is_zero()) {
    return LogScaledValue::zero();
  }
  const double r = bessel_i_ratio(lower, x);
  const double half_log_x = 0.5 * std::log(x);
  if (branch == Branch::Plus) {
    return {1, half_log_x + scaled.log_mag + std::log1p(r)};
  }
  // I_a - I_{a+1} = I_a (1 - r): no subtraction of nearly equal Bessel values.
  return {1, half_log_x + 2.0 * x + scaled.log_mag + std::log1p(-r)};
}

LogScaledValue kummer_m_log(double a, double b, double x) {
  if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(x)) {
    throw DomainError("kummer_m_log: non-finite argument");
  }
  if (b <= 0.0 && b == std::floor(b)) {
    std::ostringstream msg;
    msg << "kummer_m_log: b = " << b << " is a non-positive integer";
    throw DomainError(msg.str());
  }
  if (x < 0.0) {
    auto transformed = kummer_m_log(b - a, b, -x);
    transformed.log_mag += x;
    return transformed;
  }

  // Ascending series with periodic rescaling so that e^{700}-sized sums stay
  // representable.
  constexpr double rescale_limit = 1e250;
  const double log_rescale = std::log(rescale_limit);
  CompensatedSum sum;
  double term = 1.0;
  double log_scale = 0.0;
  sum.add(term);
  int small_run = 0;
  for (int k = 0; k < kMaxTerms; ++k) {
    term *= (a + k) / (b + k) * x / (k + 1.0);
    sum.add(term);
    if (std::abs(sum.value()) > rescale_limit) {
      sum.scale(1.0 / rescale_limit);
      term /= rescale_limit;
      log_scale += log_rescale;
    }
    small_run = std::abs(term) < kSeriesTolerance * std::abs(sum.value()) ? small_run + 1 : 0;
    if (small_run >= kSmallTermRun || term == 0.0) {
      const double total = sum.value();
      if (total == 0.0) {
        return LogScaledValue::zero();
      }
      return {total > 0.0 ? 1 : -1, std::log(std::abs(total)) + log_scale};
    }
  }
  throw NoConvergenceError("Kummer series did not converge");
}

LogScaledValue i_n_combo_kummer(int n, double x, Branch branch) {
  if (n < 1) {
    throw DomainError("i_n_combo_kummer: n must be >= 1");
  }
  require_non_negative(x, "i_n_combo_kummer");
  if (x == 0.0) {
    return LogScaledValue::zero();
  }
  const double half_n = 0.5 * n;
  const double sign = branch == Branch::Plus ? 1.0 : -1.0;
  const auto m = kummer_m_log(half_n + 1.0, n + 1.0, sign * 2.0 * x);
  if (m.is_zero()) {
    return LogScaledValue::zero();
  }
  const double log_prefactor = 0.5 * std::log(2.0 / std::numbers::pi) +
                               std::lgamma(half_n + 1.0) - std::lgamma(n + 1.0) +
                               half_n * std::log(2.0 * x);
  return {m.sign, log_prefactor + (m.log_mag - sign * 2.0 * x)};
}

}  // namespace qbphase

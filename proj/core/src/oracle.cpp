#include "qbphase/oracle.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "qbphase/error.hpp"
#include "qbphase/quadrature.hpp"

namespace qbphase {
namespace {

constexpr double kMaxTruncationBound = 1e-6;

void require_ordering(double s) {
  if (!std::isfinite(s) || !(s < kMaxOrdering)) {
    std::ostringstream msg;
    msg.precision(17);
    msg << "ordering parameter s = " << s << " outside s < 1 - 1e-9";
    throw DomainError(msg.str());
  }
}

struct RadialGrid {
  std::vector<double> r;
  std::vector<double> weight;  // Gauss-Legendre weight times r (polar Jacobian)
};

RadialGrid radial_grid(const QuasiBellState& state, double s, const QuadratureSpec& spec) {
  const auto rule = gauss_legendre(spec.n_radial, 0.0, spec.radial_cutoff(state, s));
  RadialGrid grid;
  grid.r = rule.nodes;
  grid.weight.resize(rule.nodes.size());
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    grid.weight[i] = rule.weights[i] * rule.nodes[i];
  }
  return grid;
}

// Integral over both radii of |gamma||delta| Wsym at fixed (phi_gamma, phi_delta).
double radial_integral(const QuasiProbability& w, const RadialGrid& grid, double phi_gamma,
                       double phi_delta) {
  const Complex e_gamma = std::polar(1.0, phi_gamma);
  const Complex e_delta = std::polar(1.0, phi_delta);
  CompensatedSum sum;
  for (std::size_t i = 0; i < grid.r.size(); ++i) {
    const Complex gamma = grid.r[i] * e_gamma;
    CompensatedSum inner;
    for (std::size_t k = 0; k < grid.r.size(); ++k) {
      inner.add(grid.weight[k] * w.symmetrized(gamma, grid.r[k] * e_delta));
    }
    sum.add(grid.weight[i] * inner.value());
  }
  return sum.value();
}

// Sum_{k > n} e^{-lambda} lambda^k / k!, the Poisson tail beyond n.
double poisson_tail(double lambda, int n) {
  if (lambda == 0.0) {
    return 0.0;
  }
  double term = std::exp(-lambda + (n + 1) * std::log(lambda) - std::lgamma(n + 2.0));
  double sum = 0.0;
  for (int k = n + 1; k < n + 100000; ++k) {
    sum += term;
    term *= lambda / (k + 1.0);
    if (term < 1e-18 * sum && k > lambda) {
      break;
    }
  }
  return sum;
}

// Coherent-state amplitudes e^{-|a|^2/2} a^n / sqrt(n!), n = 0..n_cut.
std::vector<Complex> coherent_amplitudes(Complex a, int n_cut) {
  std::vector<Complex> c(static_cast<std::size_t>(n_cut) + 1);
  c[0] = std::exp(-0.5 * std::norm(a));
  for (int n = 1; n <= n_cut; ++n) {
    c[static_cast<std::size_t>(n)] = c[static_cast<std::size_t>(n - 1)] * a / std::sqrt(double(n));
  }
  return c;
}

// Number-basis matrix <m|D(xi)|n>, m, n = 0..n_cut, row-major, from
//   m >= n: sqrt(n!/m!) xi^{m-n} e^{-|xi|^2/2} L_n^{(m-n)}(|xi|^2)
//   m <  n: sqrt(m!/n!) (-xi*)^{n-m} e^{-|xi|^2/2} L_m^{(n-m)}(|xi|^2).
std::vector<Complex> displacement_matrix(Complex xi, int n_cut) {
  const auto dim = static_cast<std::size_t>(n_cut) + 1;
  std::vector<Complex> d(dim * dim, Complex{0.0, 0.0});
  const double x = std::norm(xi);
  const double gauss = std::exp(-0.5 * x);
  if (x == 0.0) {
    for (std::size_t i = 0; i < dim; ++i) d[i * dim + i] = 1.0;
    return d;
  }
  const double log_abs = 0.5 * std::log(x);
  const Complex unit_xi = xi / std::sqrt(x);
  const Complex unit_neg_conj = -std::conj(unit_xi);

  for (int k = 0; k <= n_cut; ++k) {
    // L_j^{(k)}(x) for j = 0 .. n_cut - k by upward recurrence.
    double l_prev = 0.0;
    double l_cur = 1.0;
    const Complex phase_lower = std::pow(unit_xi, k);
    const Complex phase_upper = std::pow(unit_neg_conj, k);
    for (int j = 0; j + k <= n_cut; ++j) {
      if (j > 0) {
        const double l_next = ((2.0 * (j - 1) + 1.0 + k - x) * l_cur - (j - 1 + k) * l_prev) / j;
        l_prev = l_cur;
        l_cur = l_next;
      }
      const double magnitude =
          std::exp(0.5 * (std::lgamma(j + 1.0) - std::lgamma(j + k + 1.0)) + k * log_abs) * gauss *
          l_cur;
      const auto lo = static_cast<std::size_t>(j);
      const auto hi = static_cast<std::size_t>(j + k);
      d[hi * dim + lo] = magnitude * phase_lower;  // m = j + k, n = j
      if (k > 0) {
        d[lo * dim + hi] = magnitude * phase_upper;  // m = j, n = j + k
      }
    }
  }
  return d;
}

// <b| D |a> restricted to the number states 0..n_cut.
Complex truncated_overlap(const std::vector<Complex>& bra, const std::vector<Complex>& matrix,
                          const std::vector<Complex>& ket) {
  const std::size_t dim = ket.size();
  Complex total{0.0, 0.0};
  for (std::size_t m = 0; m < dim; ++m) {
    Complex row{0.0, 0.0};
    for (std::size_t n = 0; n < dim; ++n) {
      row += matrix[m * dim + n] * ket[n];
    }
    total += std::conj(bra[m]) * row;
  }
  return total;
}

}  // namespace

void QuadratureSpec::check() const {
  if (n_radial < 16 || n_angular < 32 || !(radial_cutoff_sigma > 0.0)) {
    std::ostringstream msg;
    msg << "invalid quadrature spec: n_radial=" << n_radial << " (>= 16), n_angular="
        << n_angular << " (>= 32), radial_cutoff_sigma=" << radial_cutoff_sigma << " (> 0)";
    throw DomainError(msg.str());
  }
}

double QuadratureSpec::radial_cutoff(const QuasiBellState& state, double s) const {
  return std::max(std::abs(state.alpha()), std::abs(state.beta())) +
         radial_cutoff_sigma * std::sqrt(0.5 * (1.0 - s));
}

FockCutoff FockCutoff::recommended(const QuasiBellState& state) {
  const double peak = std::max(std::norm(state.alpha()), std::norm(state.beta()));
  return {static_cast<int>(std::ceil(4.0 * peak + 20.0))};
}

double quadrature_phase_dist(const QuasiBellState& state, double s, Branch branch, double phi,
                             const QuadratureSpec& spec) {
  require_ordering(s);
  spec.check();
  const QuasiProbability w(state, s);
  const auto grid = radial_grid(state, s, spec);
  const auto angles = periodic_trapezoid(spec.n_angular);

  CompensatedSum sum;
  for (std::size_t j = 0; j < angles.nodes.size(); ++j) {
    const double phi_plus = branch == Branch::Plus ? phi : angles.nodes[j];
    const double phi_minus = branch == Branch::Plus ? angles.nodes[j] : phi;
    const double value =
        radial_integral(w, grid, 0.5 * (phi_plus - phi_minus), 0.5 * (phi_plus + phi_minus));
    sum.add(angles.weights[j] * value);
  }
  return sum.value();
}

double quadrature_normalization(const QuasiBellState& state, double s,
                                const QuadratureSpec& spec) {
  require_ordering(s);
  spec.check();
  const QuasiProbability w(state, s);
  const auto grid = radial_grid(state, s, spec);
  const auto angles = periodic_trapezoid(spec.n_angular);

  CompensatedSum sum;
  for (std::size_t a = 0; a < angles.nodes.size(); ++a) {
    CompensatedSum row;
    for (std::size_t b = 0; b < angles.nodes.size(); ++b) {
      const double phi_plus = angles.nodes[a];
      const double phi_minus = angles.nodes[b];
      row.add(angles.weights[b] * radial_integral(w, grid, 0.5 * (phi_plus - phi_minus),
                                                  0.5 * (phi_plus + phi_minus)));
    }
    sum.add(angles.weights[a] * row.value());
  }
  return sum.value();
}

double quadrature_one_mode(const QuasiBellState& state, double s, Mode mode, double phi,
                           const QuadratureSpec& spec) {
  require_ordering(s);
  spec.check();
  const QuasiProbability w(state, s);
  const auto grid = radial_grid(state, s, spec);
  const auto angles = periodic_trapezoid(spec.n_angular);
  const Complex own_phase = std::polar(1.0, phi);

  CompensatedSum sum;
  for (std::size_t i = 0; i < grid.r.size(); ++i) {
    const Complex own = grid.r[i] * own_phase;
    CompensatedSum plane;
    for (std::size_t j = 0; j < angles.nodes.size(); ++j) {
      const Complex other_phase = std::polar(1.0, angles.nodes[j]);
      CompensatedSum ray;
      for (std::size_t k = 0; k < grid.r.size(); ++k) {
        const Complex other = grid.r[k] * other_phase;
        ray.add(grid.weight[k] * (mode == Mode::One ? w(own, other) : w(other, own)));
      }
      plane.add(angles.weights[j] * ray.value());
    }
    sum.add(grid.weight[i] * plane.value());
  }
  return sum.value();
}

std::vector<double> quadrature_cos_moments(const QuasiBellState& state, double s, Branch branch,
                                           int max_n, const QuadratureSpec& spec) {
  if (max_n < 1) {
    throw DomainError("quadrature_cos_moments: max_n must be >= 1");
  }
  const double phase_alpha = std::arg(state.alpha());
  const double phase_beta = std::arg(state.beta());
  const double phi_prime =
      branch == Branch::Plus ? phase_beta + phase_alpha : phase_beta - phase_alpha;

  const auto angles = periodic_trapezoid(spec.n_angular);
  std::vector<CompensatedSum> sums(static_cast<std::size_t>(max_n));
  for (std::size_t j = 0; j < angles.nodes.size(); ++j) {
    const double offset = angles.nodes[j];
    const double density =
        quadrature_phase_dist(state, s, branch, phi_prime + offset, spec);
    for (int n = 1; n <= max_n; ++n) {
      sums[static_cast<std::size_t>(n - 1)].add(angles.weights[j] * density * std::cos(n * offset));
    }
  }
  std::vector<double> out;
  out.reserve(sums.size());
  for (const auto& s_n : sums) {
    out.push_back(s_n.value());
  }
  return out;
}

double fock_truncation_bound(const QuasiBellState& state, const DisplacementPoint& point,
                             double s, const FockCutoff& cutoff) {
  if (cutoff.n_cut < 1) {
    throw DomainError("FockCutoff: n_cut must be >= 1");
  }
  // |<b|D|a> - <Pb|D|Pa>| <= ||(1-P)a|| + ||(1-P)b|| per mode; both branch
  // amplitudes (+-alpha, +-beta) share the same tail.
  const double tail_alpha = std::sqrt(poisson_tail(std::norm(state.alpha()), cutoff.n_cut));
  const double tail_beta = std::sqrt(poisson_tail(std::norm(state.beta()), cutoff.n_cut));
  const double weights = std::abs(state.mu()) + std::abs(state.nu());
  const double gaussian = std::exp(0.5 * s * (std::norm(point.xi) + std::norm(point.eta)));
  return state.normalization_squared() * weights * weights * 2.0 * (tail_alpha + tail_beta) *
         gaussian;
}

FockChiResult fock_chi_oracle(const QuasiBellState& state, const DisplacementPoint& point,
                              double s, const FockCutoff& cutoff) {
  if (!std::isfinite(s)) {
    throw DomainError("fock_chi_oracle: ordering parameter must be finite");
  }
  const double bound = fock_truncation_bound(state, point, s, cutoff);
  if (bound > kMaxTruncationBound) {
    std::ostringstream msg;
    msg << "Fock cutoff n_cut=" << cutoff.n_cut << " gives truncation bound " << bound
        << " > " << kMaxTruncationBound;
    throw CutoffTooSmallError(msg.str());
  }

  const int n = cutoff.n_cut;
  const auto d_xi = displacement_matrix(point.xi, n);
  const auto d_eta = displacement_matrix(point.eta, n);
  const std::array<Complex, 2> weights{state.mu(), state.nu()};
  const std::array<std::vector<Complex>, 2> mode1{coherent_amplitudes(state.alpha(), n),
                                                  coherent_amplitudes(-state.alpha(), n)};
  const std::array<std::vector<Complex>, 2> mode2{coherent_amplitudes(state.beta(), n),
                                                  coherent_amplitudes(-state.beta(), n)};

  // Tr{rho D} = N^2 sum_{i,j} w_i w_j* <psi_j| D |psi_i>.
  Complex trace{0.0, 0.0};
  for (std::size_t i = 0; i < 2; ++i) {
    for (std::size_t j = 0; j < 2; ++j) {
      const Complex overlap = truncated_overlap(mode1[j], d_xi, mode1[i]) *
                              truncated_overlap(mode2[j], d_eta, mode2[i]);
      trace += weights[i] * std::conj(weights[j]) * overlap;
    }
  }
  const double r2 = std::norm(point.xi) + std::norm(point.eta);
  return {state.normalization_squared() * std::exp(0.5 * s * r2) * trace, bound};
}

}  // namespace qbphase

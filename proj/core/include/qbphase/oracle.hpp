#pragma once

#include <vector>

#include "qbphase/model.hpp"
#include "qbphase/phasedist.hpp"
#include "qbphase/quasiprob.hpp"

// Independent numerical checks of the analytic results: direct quadrature of
// the quasi-probability W and a truncated number-basis evaluation of the
// characteristic function.

namespace qbphase {

/// Gauss-Legendre radially on [0, R], periodic trapezoid angularly, with
/// R = max(|alpha|, |beta|) + radial_cutoff_sigma * sqrt((1 - s) / 2).
struct QuadratureSpec {
  int n_radial = 64;
  int n_angular = 64;
  double radial_cutoff_sigma = 8.0;

  /// Throws DomainError when n_radial < 16, n_angular < 32 or sigma <= 0.
  void check() const;
  double radial_cutoff(const QuasiBellState& state, double s) const;
};

/// Number-basis truncation per mode: states |0> ... |n_cut>.
struct FockCutoff {
  int n_cut = 40;

  /// ceil(4 max(|alpha|^2, |beta|^2) + 20).
  static FockCutoff recommended(const QuasiBellState& state);
};

/// Marginal phase-sum (Plus) or phase-difference (Minus) density at phi:
/// integral of |gamma||delta| times the symmetrized W over both radii and
/// the complementary phase.
double quadrature_phase_dist(const QuasiBellState& state, double s, Branch branch, double phi,
                             const QuadratureSpec& spec = {});

/// Full four-variable integral of the symmetrized W; ~1 for a normalized state.
double quadrature_normalization(const QuasiBellState& state, double s,
                                const QuadratureSpec& spec = {});

/// One-mode marginal phase density of `mode` at phi.
double quadrature_one_mode(const QuasiBellState& state, double s, Mode mode, double phi,
                           const QuadratureSpec& spec = {});

/// <cos n(phi - phi')> for n = 1 .. max_n from the quadrature marginal,
/// integrated over phi by the trapezoid rule with spec.n_angular nodes.
std::vector<double> quadrature_cos_moments(const QuasiBellState& state, double s, Branch branch,
                                           int max_n, const QuadratureSpec& spec = {});

struct FockChiResult {
  Complex value;
  double truncation_bound = 0.0;
};

/// chi(xi, eta; s) as exp(s(|xi|^2+|eta|^2)/2) Tr{rho D(xi, eta)} with rho
/// expanded in number states up to n_cut per mode. Throws
/// CutoffTooSmallError when the truncation bound exceeds 1e-6.
FockChiResult fock_chi_oracle(const QuasiBellState& state, const DisplacementPoint& point,
                              double s, const FockCutoff& cutoff);

/// Upper bound on the truncation error of fock_chi_oracle without computing it.
double fock_truncation_bound(const QuasiBellState& state, const DisplacementPoint& point,
                             double s, const FockCutoff& cutoff);

}  // namespace qbphase

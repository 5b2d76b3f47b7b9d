#include <cmath>
#include <numbers>
#include <random>

#include "doctest.h"
#include "qbphase/error.hpp"
#include "qbphase/oracle.hpp"
#include "qbphase/quadrature.hpp"

using namespace qbphase;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kUniform = 1.0 / (2.0 * kPi);

std::vector<QuasiBellState> presets_at(Complex a, Complex b) {
  return {make_preset(PresetKind::EvenCat, a, b), make_preset(PresetKind::OddCat, a, b),
          make_preset(PresetKind::YurkeStolerPlus, a, b),
          make_preset(PresetKind::YurkeStolerMinus, a, b)};
}

}  // namespace

TEST_CASE("Gauss-Legendre rules") {
  SUBCASE("exact for polynomials of degree 2n - 1") {
    for (int n : {1, 2, 5, 16, 64}) {
      const auto rule = gauss_legendre(n, -1.0, 1.0);
      REQUIRE(rule.nodes.size() == static_cast<std::size_t>(n));
      for (int d = 0; d <= 2 * n - 1; ++d) {
        double sum = 0.0;
        for (int i = 0; i < n; ++i) {
          sum += rule.weights[static_cast<std::size_t>(i)] *
                 std::pow(rule.nodes[static_cast<std::size_t>(i)], d);
        }
        const double exact = d % 2 == 1 ? 0.0 : 2.0 / (d + 1);
        CHECK(sum == doctest::Approx(exact).epsilon(1e-13).scale(1.0));
      }
    }
  }
  SUBCASE("shifted interval") {
    const auto rule = gauss_legendre(20, 0.5, 3.0);
    double sum = 0.0;
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      CHECK(rule.nodes[i] > 0.5);
      CHECK(rule.nodes[i] < 3.0);
      sum += rule.weights[i] * std::exp(rule.nodes[i]);
    }
    CHECK(sum == doctest::Approx(std::exp(3.0) - std::exp(0.5)).epsilon(1e-15));
  }
  CHECK_THROWS_AS(gauss_legendre(0), DomainError);
}

TEST_CASE("periodic trapezoid rule") {
  const auto rule = periodic_trapezoid(32);
  double total = 0.0;
  double harmonic = 0.0;
  for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
    total += rule.weights[i];
    harmonic += rule.weights[i] * std::cos(5.0 * rule.nodes[i]);
  }
  CHECK(total == doctest::Approx(2.0 * kPi).epsilon(1e-15));
  CHECK(std::abs(harmonic) < 1e-14);
}

TEST_CASE("QuadratureSpec validation") {
  CHECK_NOTHROW(QuadratureSpec{}.check());
  CHECK_THROWS_AS((QuadratureSpec{15, 64, 8.0}.check()), DomainError);
  CHECK_THROWS_AS((QuadratureSpec{64, 31, 8.0}.check()), DomainError);
  CHECK_THROWS_AS((QuadratureSpec{64, 64, 0.0}.check()), DomainError);
  const auto state = make_preset(PresetKind::EvenCat, 1.5, Complex{0.0, -2.0});
  CHECK(QuadratureSpec{}.radial_cutoff(state, -1.0) == doctest::Approx(2.0 + 8.0).epsilon(1e-15));
  CHECK(FockCutoff::recommended(state).n_cut == 36);
}

TEST_CASE("quadrature_phase_dist examples") {
  SUBCASE("vacuum is uniform") {
    const auto vacuum = make_preset(PresetKind::EvenCat, 0.0, 0.0);
    for (double phi : {-2.0, 0.0, 1.0, 3.0}) {
      CHECK(quadrature_phase_dist(vacuum, 0.0, Branch::Minus, phi) ==
            doctest::Approx(kUniform).epsilon(1e-12));
    }
  }
  SUBCASE("even cat at s = 0 matches the series at phi prime") {
    const auto even = make_preset(PresetKind::EvenCat, 1.0, 1.0);
    const auto spectrum = build_spectrum(even, 0.0, Branch::Minus);
    const double phi = spectrum.phi_prime();
    CHECK(std::abs(quadrature_phase_dist(even, 0.0, Branch::Minus, phi) -
                   eval_phase_dist(spectrum, phi)) < 1e-6);
  }
  SUBCASE("odd cat at s = 0.4 matches the series including its sign") {
    const auto odd = make_preset(PresetKind::OddCat, 1.0, 1.0);
    const auto spectrum = build_spectrum(odd, 0.4, Branch::Minus);
    for (double offset : {0.0, kPi}) {
      const double phi = spectrum.phi_prime() + offset;
      const double quad = quadrature_phase_dist(odd, 0.4, Branch::Minus, phi);
      const double series = eval_phase_dist(spectrum, phi);
      CHECK(std::abs(quad - series) < 1e-6);
      CHECK(std::signbit(quad) == std::signbit(series));
    }
    CHECK(quadrature_phase_dist(odd, 0.4, Branch::Minus, spectrum.phi_prime() + kPi) < 0.0);
  }
  CHECK_THROWS_AS(quadrature_phase_dist(make_preset(PresetKind::EvenCat, 1.0, 1.0), 1.0 - 1e-10,
                                        Branch::Plus, 0.0),
                  DomainError);
}

TEST_CASE("series and quadrature marginals agree") {
  for (const auto& state : presets_at(std::polar(1.0, 0.3), std::polar(1.0, -1.2))) {
    for (double s : {-1.0, 0.0, 0.4}) {
      for (Branch branch : {Branch::Plus, Branch::Minus}) {
        const auto spectrum = build_spectrum(state, s, branch);
        for (double phi : {-2.5, -0.4, 1.1, 2.9}) {
          CHECK(std::abs(quadrature_phase_dist(state, s, branch, phi) -
                         eval_phase_dist(spectrum, phi)) < 1e-6);
        }
      }
    }
  }
}

TEST_CASE("quadrature_normalization examples") {
  CHECK(quadrature_normalization(QuasiBellState::create({Complex{0.6, 0.8}, -1.1, 1.0, 0.0}), 0.0) ==
        doctest::Approx(1.0).epsilon(1e-8));
  CHECK(quadrature_normalization(make_preset(PresetKind::OddCat, 1.0, 1.0), 0.4) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK(quadrature_normalization(make_preset(PresetKind::YurkeStolerPlus, 1.0, 1.0), -1.0) ==
        doctest::Approx(1.0).epsilon(1e-6));
  CHECK_THROWS_AS(quadrature_normalization(make_preset(PresetKind::EvenCat, 1.0, 1.0), 0.999999999),
                  DomainError);
}

TEST_CASE("quadrature_one_mode examples") {
  SUBCASE("alpha = 0") {
    const auto state = make_preset(PresetKind::OddCat, 0.0, 1.0);
    CHECK(quadrature_one_mode(state, 0.0, Mode::One, 0.7) == doctest::Approx(kUniform).epsilon(1e-12));
  }
  SUBCASE("coherent state, Q ordering") {
    const auto coh = QuasiBellState::create({std::polar(1.0, 0.9), 0.4, 1.0, 0.0});
    const auto spectrum = one_mode_coefficients(coh, -1.0, Mode::One);
    CHECK(std::abs(quadrature_one_mode(coh, -1.0, Mode::One, 0.9) -
                   eval_one_mode_dist(spectrum, 0.9)) < 1e-6);
  }
  SUBCASE("Yurke-Stoler asymmetry") {
    const auto ys = make_preset(PresetKind::YurkeStolerPlus, 1.0, 1.0);
    const auto spectrum = one_mode_coefficients(ys, 0.0, Mode::One);
    const double up = quadrature_one_mode(ys, 0.0, Mode::One, kPi / 4.0);
    const double down = quadrature_one_mode(ys, 0.0, Mode::One, -kPi / 4.0);
    CHECK(std::abs(up - eval_one_mode_dist(spectrum, kPi / 4.0)) < 1e-6);
    CHECK(std::abs(down - eval_one_mode_dist(spectrum, -kPi / 4.0)) < 1e-6);
    CHECK(std::abs(up - down) > 1e-3);
  }
  SUBCASE("mode 2") {
    const auto odd = make_preset(PresetKind::OddCat, 0.7, std::polar(1.3, 2.0));
    const auto spectrum = one_mode_coefficients(odd, 0.2, Mode::Two);
    for (double phi : {-1.0, 2.0}) {
      CHECK(std::abs(quadrature_one_mode(odd, 0.2, Mode::Two, phi) -
                     eval_one_mode_dist(spectrum, phi)) < 1e-6);
    }
  }
}

TEST_CASE("Fourier coefficients equal quadrature cosine moments") {
  const auto even = make_preset(PresetKind::EvenCat, 1.0, 1.0);
  const QuadratureSpec coarse{48, 48, 8.0};
  const auto moments = quadrature_cos_moments(even, 0.0, Branch::Minus, 3, coarse);
  REQUIRE(moments.size() == 3);
  for (int n = 1; n <= 3; ++n) {
    CHECK(std::abs(moments[static_cast<std::size_t>(n - 1)] -
                   fourier_coefficient(even, 0.0, n, Branch::Minus)) < 1e-6);
  }
  const auto q = quadrature_cos_moments(even, -1.0, Branch::Minus, 1, coarse);
  const auto spectrum = build_spectrum(even, -1.0, Branch::Minus);
  CHECK(std::abs(trig_moments(spectrum, 1).mean_cos - q[0]) < 1e-6);
  CHECK_THROWS_AS(quadrature_cos_moments(even, 0.0, Branch::Minus, 0), DomainError);
}

TEST_CASE("symmetrized W is non-negative on the quadrature nodes for s = -1") {
  const QuadratureSpec spec{32, 32, 8.0};
  const auto angles = periodic_trapezoid(spec.n_angular);
  for (const auto& state : presets_at(1.0, 1.0)) {
    const auto radii = gauss_legendre(spec.n_radial, 0.0, spec.radial_cutoff(state, -1.0));
    double lowest = INFINITY;
    for (double rg : radii.nodes) {
      for (double rd : radii.nodes) {
        for (double pp : angles.nodes) {
          for (double pm : angles.nodes) {
            lowest = std::min(lowest, rg * rd * w_symmetrized(state, PolarPoint(rg, rd, pp, pm), -1.0));
          }
        }
      }
    }
    // Three-term evaluation can round an exact zero to a tiny negative;
    // the peak of W here is O(1/pi^2).
    CHECK(lowest >= -1e-16);
  }
}

TEST_CASE("fock_chi_oracle examples") {
  SUBCASE("trace of rho") {
    for (const auto& state : presets_at(1.0, Complex{0.3, 0.8})) {
      const auto r = fock_chi_oracle(state, {0.0, 0.0}, 0.0, {40});
      CHECK(std::abs(r.value - 1.0) < 1e-12);
    }
  }
  SUBCASE("vacuum") {
    const auto vacuum = make_preset(PresetKind::EvenCat, 0.0, 0.0);
    const auto r = fock_chi_oracle(vacuum, {1.0, 0.0}, 0.0, {40});
    CHECK(r.value.real() == doctest::Approx(std::exp(-0.5)).epsilon(1e-14));
    CHECK(std::abs(r.value.imag()) < 1e-15);
  }
  SUBCASE("even cat matches the closed form") {
    const auto even = make_preset(PresetKind::EvenCat, 1.0, 1.0);
    const DisplacementPoint p{{0.7, 0.2}, {0.0, -0.3}};
    const auto r = fock_chi_oracle(even, p, 0.0, {40});
    CHECK(std::abs(r.value - chi(even, p, 0.0)) < 1e-8);
    CHECK(r.truncation_bound < 1e-8);
  }
  SUBCASE("random points and orderings") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> rad(0.0, 2.0);
    std::uniform_real_distribution<double> ang(0.0, 2.0 * kPi);
    for (const auto& state : presets_at(std::polar(1.0, 0.5), std::polar(1.0, -0.8))) {
      for (double s : {-1.0, 0.0, 0.5}) {
        for (int i = 0; i < 5; ++i) {
          const DisplacementPoint p{std::polar(rad(rng), ang(rng)), std::polar(rad(rng), ang(rng))};
          const auto r = fock_chi_oracle(state, p, s, {40});
          CHECK(std::abs(r.value - chi(state, p, s)) < 1e-8);
        }
      }
    }
  }
  SUBCASE("cutoff too small") {
    const auto big = make_preset(PresetKind::OddCat, 2.0, 2.0);
    CHECK_THROWS_AS(fock_chi_oracle(big, {0.5, 0.5}, 0.0, {5}), CutoffTooSmallError);
    CHECK(fock_truncation_bound(big, {0.5, 0.5}, 0.0, {5}) > 1e-6);
  }
}

TEST_CASE("Fock truncation bound decreases with the cutoff") {
  for (const auto& state : presets_at(1.5, Complex{0.0, 1.0})) {
    for (double r : {0.0, 1.0, 2.0}) {
      const DisplacementPoint p{r, Complex{0.0, r}};
      double previous = INFINITY;
      for (int n = 2; n <= 60; n += 2) {
        const double bound = fock_truncation_bound(state, p, 0.0, {n});
        CHECK(bound <= previous);
        previous = bound;
      }
    }
  }
}

TEST_CASE("doubling the quadrature nodes leaves the normalization unchanged" * doctest::skip()) {
  const QuadratureSpec base;
  const QuadratureSpec fine{2 * base.n_radial, 2 * base.n_angular, base.radial_cutoff_sigma};
  for (const auto& state : presets_at(std::polar(2.0, 0.4), std::polar(2.0, -0.9))) {
    const double a = quadrature_normalization(state, 0.5, base);
    const double b = quadrature_normalization(state, 0.5, fine);
    CHECK(std::abs(a - b) < 1e-8);
  }
  const auto mixed = make_preset(PresetKind::OddCat, 0.5, 2.0);
  CHECK(std::abs(quadrature_normalization(mixed, -1.0, base) -
                 quadrature_normalization(mixed, -1.0, fine)) < 1e-8);
}

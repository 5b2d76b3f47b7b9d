#include <cmath>
#include <numbers>

#include "doctest.h"
#include "qbphase/error.hpp"
#include "qbphase/model.hpp"

using namespace qbphase;

namespace {
const double kH = 1.0 / std::sqrt(2.0);
}

TEST_CASE("normalization constant examples") {
  SUBCASE("even cat at the vacuum has radicand 2") {
    const auto state = make_preset(PresetKind::EvenCat, 0.0, 0.0);
    CHECK(normalization_constant(state) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  }
  SUBCASE("Yurke-Stoler weights kill the overlap term") {
    for (double a : {0.0, 0.3, 1.0, 2.5}) {
      const auto state = make_preset(PresetKind::YurkeStolerPlus, a, Complex{0.0, a});
      CHECK(normalization_constant(state) == doctest::Approx(1.0).epsilon(1e-15));
    }
  }
  SUBCASE("even cat |alpha| = |beta| = 1") {
    // (1 + e^-4)^(-1/2), 30-digit reference.
    const auto state = make_preset(PresetKind::EvenCat, 1.0, 1.0);
    CHECK(std::abs(normalization_constant(state) - 0.990966089247209529) < 1e-15);
  }
}

TEST_CASE("make_preset weights") {
  const auto even = make_preset(PresetKind::EvenCat, 1.0, 1.0);
  CHECK(even.mu() == Complex{kH, 0.0});
  CHECK(even.nu() == Complex{kH, 0.0});

  const auto ys = make_preset(PresetKind::YurkeStolerPlus, 1.0, 0.0);
  CHECK(ys.mu() == Complex{kH, 0.0});
  CHECK(ys.nu() == Complex{0.0, kH});

  CHECK(make_preset(PresetKind::OddCat, 0.5, 0.0).nu() == Complex{-kH, 0.0});
  CHECK(make_preset(PresetKind::YurkeStolerMinus, 0.5, 0.0).nu() == Complex{0.0, -kH});

  CHECK_THROWS_AS(make_preset(PresetKind::OddCat, 0.0, 0.0), NullStateError);
}

TEST_CASE("preset tags round-trip") {
  for (auto kind : {PresetKind::EvenCat, PresetKind::OddCat, PresetKind::YurkeStolerPlus,
                    PresetKind::YurkeStolerMinus}) {
    CHECK(parse_preset(to_string(kind)) == kind);
  }
  CHECK_FALSE(parse_preset("squeezed").has_value());
}

TEST_CASE("validate reports every violated invariant") {
  SUBCASE("valid even cat") {
    CHECK(validate({1.0, 1.0, kH, kH}).empty());
  }
  SUBCASE("weights not normalized") {
    const auto diags = validate({1.0, 1.0, 1.0, 1.0});
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "weight_norm");
    CHECK(diags[0].residual == doctest::Approx(1.0));
    CHECK(diags[0].message.find("= 2") != std::string::npos);
  }
  SUBCASE("odd cat at the vacuum is the zero vector") {
    const auto diags = validate({0.0, 0.0, kH, -kH});
    REQUIRE(diags.size() == 1);
    CHECK(diags[0].code == "null_state");
    CHECK(diags[0].message.find("non-normalizable") != std::string::npos);
  }
  SUBCASE("both failures at once") {
    CHECK(validate({0.0, 0.0, 1.0, -1.0}).size() == 2);
  }
  SUBCASE("non-finite input") {
    const auto diags = validate({Complex{NAN, 0.0}, 1.0, kH, kH});
    REQUIRE_FALSE(diags.empty());
    CHECK(diags[0].code == "non_finite");
  }
}

TEST_CASE("create enforces invariants and can renormalize") {
  CHECK_THROWS_AS(QuasiBellState::create({1.0, 1.0, 1.0, 1.0}), InvalidStateError);
  const auto state = QuasiBellState::create({1.0, 1.0, 1.0, 1.0}, Renormalize::Yes);
  CHECK(std::norm(state.mu()) + std::norm(state.nu()) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK_THROWS_AS(QuasiBellState::create({0.0, 0.0, 1.0, -1.0}, Renormalize::Yes), NullStateError);
  // Inside the 1e-12 tolerance is accepted as is.
  CHECK_NOTHROW(QuasiBellState::create({1.0, 1.0, kH * (1.0 + 1e-14), kH}));
}

TEST_CASE("odd cat at small amplitude stays normalizable") {
  const auto state = make_preset(PresetKind::OddCat, 1e-3, 1e-3);
  // radicand = 1 - e^{-4e-6} ~ 4e-6
  CHECK(normalization_radicand(state.params()) == doctest::Approx(-std::expm1(-4e-6)).epsilon(1e-9));
}

TEST_CASE("normalization constant invariances") {
  const StateParams base{Complex{0.4, -0.7}, Complex{-0.2, 0.5}, Complex{0.6, 0.0},
                         Complex{0.48, 0.64}};
  const double reference = normalization_constant(QuasiBellState::create(base));
  for (double theta : {0.3, 1.7, -2.9, 5.0}) {
    const Complex rot = std::polar(1.0, theta);
    SUBCASE("global phase on the weights") {
      auto p = base;
      p.mu *= rot;
      p.nu *= rot;
      CHECK(normalization_constant(QuasiBellState::create(p)) ==
            doctest::Approx(reference).epsilon(1e-14));
    }
    SUBCASE("amplitude phase rotations") {
      auto p = base;
      p.alpha *= rot;
      p.beta *= std::polar(1.0, 0.5 * theta);
      CHECK(normalization_constant(QuasiBellState::create(p)) ==
            doctest::Approx(reference).epsilon(1e-14));
    }
  }
}

TEST_CASE("normalization constant is exponentially close to 1 at large intensity") {
  for (auto kind : {PresetKind::EvenCat, PresetKind::OddCat}) {
    for (double a : {std::sqrt(10.0), 4.0, 10.0}) {
      const auto state = make_preset(kind, a, a);
      CHECK(std::abs(normalization_constant(state) - 1.0) < 1e-16);
    }
  }
}

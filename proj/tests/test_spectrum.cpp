#include "mfa/spectrum.hpp"

#include <cmath>

#include "doctest.h"
#include "helpers.hpp"
#include "mfa/errors.hpp"
#include "mfa/oracle.hpp"

using namespace mfa;

TEST_CASE("example 1 spot values") {
  const PotentialMatrix ex1 = oracle::example1_model();

  SpectrumPoint pt = legendre_point(ex1, 0.0);
  CHECK(pt.cls == SpectrumClass::interior);
  CHECK(std::abs(pt.s_alpha) <= 1e-9);
  CHECK(pt.dim == doctest::Approx(1.0).epsilon(1e-10));

  pt = legendre_point(ex1, std::tanh(1.0));
  CHECK(pt.s_alpha == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(pt.dim == doctest::Approx(0.7635326705015808).epsilon(1e-9));
  CHECK(pt.dim == doctest::Approx(oracle::example1_dim(std::tanh(1.0))).epsilon(1e-9));

  pt = legendre_point(ex1, 2.0);
  CHECK(pt.cls == SpectrumClass::empty);
  CHECK(std::isnan(pt.dim));

  pt = legendre_point(ex1, -1.0);
  CHECK(pt.cls == SpectrumClass::endpoint_left);
  CHECK(pt.dim == doctest::Approx(0.5).epsilon(1e-6));
  CHECK(pt.s_alpha == -std::numeric_limits<double>::infinity());
  CHECK(pt.Pprime_at_s == doctest::Approx(-1.0).epsilon(1e-10));
}

TEST_CASE("example 2 spot values") {
  const PotentialMatrix ex2 = oracle::example2_model();

  SpectrumPoint pt = legendre_point(ex2, 0.25);
  CHECK(pt.cls == SpectrumClass::interior);
  CHECK(std::abs(pt.s_alpha) <= 1e-8);
  CHECK(pt.dim == doctest::Approx(1.0).epsilon(1e-10));

  // Left endpoint: the limit system keeps only phi = 0 edges, giving
  // t0 (t0-1)^2 = 1 and dim = log2 t0.
  pt = legendre_point(ex2, 0.0);
  CHECK(pt.cls == SpectrumClass::endpoint_left);
  CHECK(std::abs(pt.dim - std::log2(oracle::example2_t0_limit())) <= 1e-3);
  CHECK(pt.dim == doctest::Approx(0.8113704627516491).epsilon(1e-4));

  pt = legendre_point(ex2, 2.0);
  CHECK(pt.cls == SpectrumClass::empty);
  pt = legendre_point(ex2, -0.25);
  CHECK(pt.cls == SpectrumClass::empty);
}

TEST_CASE("closed-form spectrum of example 1") {
  const PotentialMatrix ex1 = oracle::example1_model();
  for (int k = -9; k <= 9; ++k) {
    const double alpha = 0.1 * k;
    CHECK(std::abs(legendre_point(ex1, alpha).dim - oracle::example1_dim(alpha)) <= 1e-6);
  }
}

TEST_CASE("legendre consistency at interior points") {
  const PotentialMatrix ex2 = oracle::example2_model();
  for (const double alpha : {0.05, 0.3, 0.6, 0.9}) {
    const SpectrumPoint pt = legendre_point(ex2, alpha);
    REQUIRE(pt.cls == SpectrumClass::interior);
    CHECK(std::abs(pt.Pprime_at_s - alpha) <= 1e-9);
    CHECK(std::abs(pressure_derivative(ex2, pt.s_alpha).Pprime - alpha) <= 1e-9);
    CHECK(pt.dim >= 0.0);
    CHECK(pt.dim <= 1.0);
  }
}

TEST_CASE("spectrum curve structure") {
  const PotentialMatrix ex1 = oracle::example1_model();
  const auto curve = spectrum_curve(ex1, 5);
  REQUIRE(curve.size() == 5);
  CHECK(curve.front().cls == SpectrumClass::endpoint_left);
  CHECK(curve.back().cls == SpectrumClass::endpoint_right);
  const double expect_alpha[5] = {-1.0, -0.5, 0.0, 0.5, 1.0};
  const double expect_dim[5] = {0.5, 0.9056390622295665, 1.0, 0.9056390622295665, 0.5};
  for (int k = 0; k < 5; ++k) {
    CHECK(curve[static_cast<std::size_t>(k)].alpha == doctest::Approx(expect_alpha[k]).epsilon(1e-12));
    CHECK(curve[static_cast<std::size_t>(k)].dim == doctest::Approx(expect_dim[k]).epsilon(1e-6));
  }
  for (std::size_t k = 1; k < curve.size(); ++k)
    CHECK(curve[k].s_alpha >= curve[k - 1].s_alpha - 1e-6);

  CHECK_THROWS_AS(spectrum_curve(ex1, 2), InvalidInputError);
}

TEST_CASE("curve peak sits at the maximal-entropy measure") {
  const PotentialMatrix ex2 = oracle::example2_model();
  const auto curve = spectrum_curve(ex2, 101);
  double best_dim = -1.0, best_alpha = 0.0;
  for (const auto& pt : curve) {
    if (pt.dim > best_dim) {
      best_dim = pt.dim;
      best_alpha = pt.alpha;
    }
  }
  CHECK(best_dim == doctest::Approx(1.0).epsilon(1e-4));
  // P'(0) = 1/4 up to grid resolution.
  CHECK(std::abs(best_alpha - 0.25) <= 0.01 + 1e-12);

  // Concavity of dim along the grid.
  for (std::size_t k = 1; k + 1 < curve.size(); ++k)
    CHECK(curve[k - 1].dim + curve[k + 1].dim - 2.0 * curve[k].dim <= 1e-8);
}

TEST_CASE("invariant spectrum never exceeds the dimension spectrum") {
  const PotentialMatrix ex1 = oracle::example1_model();
  const PotentialMatrix ex2 = oracle::example2_model();
  for (int k = 0; k <= 9; ++k) {
    const double alpha = 0.1 * k;
    for (const PotentialMatrix* pm : {&ex1, &ex2}) {
      const auto fv = invariant_spectrum(*pm, alpha);
      if (!fv.value) continue;
      CHECK(*fv.value <= legendre_point(*pm, alpha).dim + 1e-6);
    }
  }
}

TEST_CASE("constant model is rejected") {
  const PotentialMatrix c = potential_from_matrix({{1.0, 1.0}, {1.0, 1.0}});
  CHECK_THROWS_AS(legendre_point(c, 1.0), ConstantPotentialError);
  CHECK_THROWS_AS(spectrum_curve(c, 11), ConstantPotentialError);
}

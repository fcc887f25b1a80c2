#include "mfa/pressure.hpp"

#include <cmath>
#include <random>

#include "doctest.h"
#include "helpers.hpp"
#include "mfa/errors.hpp"
#include "mfa/oracle.hpp"

using namespace mfa;

TEST_CASE("P(0) = 2 log m") {
  std::mt19937_64 eng(31);
  for (const int m : {2, 3, 5}) {
    const PotentialMatrix pm = testing::random_matrix_model(eng, m);
    CHECK(std::abs(pressure(pm, 0.0).P - 2.0 * std::log(static_cast<double>(m))) <= 1e-10);
  }
}

TEST_CASE("example values") {
  const PotentialMatrix ex1 = oracle::example1_model();
  const PotentialMatrix ex2 = oracle::example2_model();

  CHECK(pressure(ex1, 1.0).P == doctest::Approx(std::log(4.0 * std::cosh(1.0))).epsilon(1e-12));
  CHECK(pressure_derivative(ex1, 1.0).Pprime ==
        doctest::Approx(std::tanh(1.0)).epsilon(1e-10));
  CHECK(pressure_derivative(ex2, 0.0).Pprime == doctest::Approx(0.25).epsilon(1e-10));

  // P = 2 log t0 against the independent cubic solver.
  for (const double s : {-5.0, -2.0, 0.0, 1.0, std::log(2.0), 3.0})
    CHECK(std::abs(pressure(ex2, s).P - 2.0 * std::log(oracle::example2_t0(s))) <= 1e-8);

  CHECK(std::isnan(pressure(ex1, 1.0).Pprime));
}

TEST_CASE("constant potential") {
  const PotentialMatrix c = potential_from_matrix({{0.3, 0.3}, {0.3, 0.3}});
  // P stays affine: 2 log m + c s.
  for (const double s : {-4.0, 0.0, 2.5})
    CHECK(pressure(c, s).P == doctest::Approx(2.0 * std::log(2.0) + 0.3 * s).epsilon(1e-12));
  CHECK_THROWS_AS(pressure_derivative(c, 1.0), ConstantPotentialError);
  CHECK_THROWS_AS(endpoint_slopes(c), ConstantPotentialError);
}

TEST_CASE("derivative agrees with central differences") {
  std::mt19937_64 eng(17);
  const PotentialMatrix pm = testing::random_matrix_model(eng, 3);
  const double h = 1e-5;
  for (int s = -5; s <= 5; ++s) {
    const double fd = oracle::finite_difference(
        [&](double x) { return pressure(pm, x).P; }, static_cast<double>(s), h);
    CHECK(std::abs(pressure_derivative(pm, static_cast<double>(s)).Pprime - fd) <= 1e-6);
  }
}

TEST_CASE("convexity, monotonicity, bounds") {
  std::mt19937_64 eng(29);
  for (const auto& pm :
       {oracle::example1_model(), oracle::example2_model(), testing::random_matrix_model(eng, 3)}) {
    std::vector<double> P, Pp;
    for (int k = 0; k <= 40; ++k) {
      const double s = -10.0 + 0.5 * k;
      const PressurePoint p = pressure_derivative(pm, s);
      P.push_back(p.P);
      Pp.push_back(p.Pprime);
      CHECK(p.Pprime >= pm.alpha_min() - 1e-12);
      CHECK(p.Pprime <= pm.alpha_max() + 1e-12);
    }
    for (std::size_t k = 1; k + 1 < P.size(); ++k)
      CHECK(P[k - 1] + P[k + 1] - 2.0 * P[k] >= 1e-12);
    for (std::size_t k = 1; k < Pp.size(); ++k) CHECK(Pp[k] >= Pp[k - 1] - 1e-10);

    // Local triples at h = 1e-3 stay numerically convex.
    for (const double s : {-3.0, 0.0, 1.7}) {
      const double h = 1e-3;
      CHECK(pressure(pm, s - h).P + pressure(pm, s + h).P - 2.0 * pressure(pm, s).P >= -1e-9);
    }
  }
}

TEST_CASE("shift covariance") {
  std::mt19937_64 eng(41);
  const PotentialMatrix pm = testing::random_matrix_model(eng, 3);
  const double c = -1.37;
  std::vector<std::vector<double>> shifted(3, std::vector<double>(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) shifted[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = pm.phi(i, j) + c;
  const PotentialMatrix pm_shift = potential_from_matrix(shifted);
  for (const double s : {-5.0, 0.8, 3.0}) {
    const PressurePoint a = pressure_derivative(pm, s);
    const PressurePoint b = pressure_derivative(pm_shift, s);
    CHECK(std::abs(b.P - (a.P + c * s)) <= 1e-9);
    CHECK(std::abs(b.Pprime - (a.Pprime + c)) <= 1e-9);
  }
}

TEST_CASE("endpoint slopes of the examples") {
  const EndpointSlopes e1 = endpoint_slopes(oracle::example1_model());
  CHECK(e1.slope_minus == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(e1.slope_plus == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e1.tau_minus[0] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(e1.tau_minus[1] == doctest::Approx(-1.0).epsilon(1e-12));
  CHECK(e1.tau_plus[0] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e1.attains_min);
  CHECK(e1.attains_max);

  const EndpointSlopes e2 = endpoint_slopes(oracle::example2_model());
  CHECK(e2.slope_minus == doctest::Approx(0.0));
  CHECK(e2.slope_plus == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e2.tau_plus[0] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(e2.tau_plus[1] == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e2.tau_minus[0] == doctest::Approx(0.0));
  CHECK(e2.tau_minus[1] == doctest::Approx(0.0));
  CHECK(e2.attains_min);
  CHECK(e2.attains_max);
}

TEST_CASE("slopes agree with the derivative at large |s|") {
  for (const auto& pm : {oracle::example1_model(), oracle::example2_model()}) {
    const EndpointSlopes es = endpoint_slopes(pm);
    const double big = 40.0 / (pm.alpha_max() - pm.alpha_min());
    CHECK(std::abs(pressure_derivative(pm, big).Pprime - es.slope_plus) <= 1e-3);
    CHECK(std::abs(pressure_derivative(pm, -big).Pprime - es.slope_minus) <= 1e-3);
  }
}

TEST_CASE("slope ordering and cycle cross-validation on random models") {
  std::mt19937_64 eng(67);
  for (int rep = 0; rep < 20; ++rep) {
    const PotentialMatrix pm = testing::random_matrix_model(eng, 2 + static_cast<int>(eng() % 4));
    const EndpointSlopes es = endpoint_slopes(pm);
    CHECK(pm.alpha_min() <= es.slope_minus + 1e-12);
    CHECK(es.slope_minus <= es.slope_plus + 1e-12);
    CHECK(es.slope_plus <= pm.alpha_max() + 1e-12);
    CHECK(es.attains_min == (std::abs(es.slope_minus - pm.alpha_min()) <= 1e-9));
    CHECK(es.attains_max == (std::abs(es.slope_plus - pm.alpha_max()) <= 1e-9));

    // Fixed-point property of the returned tau vectors.
    for (int i = 0; i < pm.m(); ++i) {
      double mx = -1e300, mn = 1e300;
      for (int j = 0; j < pm.m(); ++j) {
        mx = std::max(mx, pm.phi(i, j) + es.tau_plus[static_cast<std::size_t>(j)]);
        mn = std::min(mn, pm.phi(i, j) + es.tau_minus[static_cast<std::size_t>(j)]);
      }
      CHECK(es.tau_plus[static_cast<std::size_t>(i)] == doctest::Approx(0.5 * mx).epsilon(1e-10));
      CHECK(es.tau_minus[static_cast<std::size_t>(i)] == doctest::Approx(0.5 * mn).epsilon(1e-10));
    }
  }
}

TEST_CASE("extremal cycle witnesses") {
  const PotentialMatrix ex1 = oracle::example1_model();
  const PotentialMatrix ex2 = oracle::example2_model();

  const CycleWitness w2 = extremal_cycle(ex2, Extreme::min);
  CHECK(w2.exists);
  CHECK(w2.cycle == std::vector<int>{0, 0});

  const CycleWitness w1 = extremal_cycle(ex1, Extreme::min);
  CHECK(w1.exists);
  CHECK(w1.cycle == std::vector<int>{0, 1, 0});

  // alpha_min only on the self-loop (0,0): cycle exists.
  CHECK(extremal_cycle(potential_from_matrix({{0.0, 1.0}, {1.0, 1.0}}), Extreme::min).exists);
  // alpha_min only on edge (0,1): no cycle.
  CHECK_FALSE(extremal_cycle(potential_from_matrix({{1.0, 0.0}, {1.0, 1.0}}), Extreme::min).exists);
}

TEST_CASE("witness cycles attain the extreme") {
  std::mt19937_64 eng(71);
  for (int rep = 0; rep < 20; ++rep) {
    const PotentialMatrix pm = testing::random_matrix_model(eng, 4);
    for (const Extreme which : {Extreme::min, Extreme::max}) {
      const CycleWitness w = extremal_cycle(pm, which);
      if (!w.exists) continue;
      REQUIRE(w.cycle.size() >= 2);
      CHECK(w.cycle.front() == w.cycle.back());
      for (std::size_t k = 0; k + 1 < w.cycle.size(); ++k) {
        const bool on_edge = which == Extreme::min
                                 ? pm.attains_min(w.cycle[k], w.cycle[k + 1])
                                 : pm.attains_max(w.cycle[k], w.cycle[k + 1]);
        CHECK(on_edge);
      }
    }
  }
}

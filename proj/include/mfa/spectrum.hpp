#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "mfa/model.hpp"
#include "mfa/numerics.hpp"
#include "mfa/pressure.hpp"

namespace mfa {

enum class SpectrumClass { interior, endpoint_left, endpoint_right, empty };

const char* to_string(SpectrumClass c);

// One point of the dimension spectrum alpha -> dim of the level set of the
// multiple average (1/n) sum phi(x_k, x_2k).
//   interior:  P'(s_alpha) = alpha, dim = (P - s P')/(2 log m)
//   endpoint:  dim is the limit of the same expression along s = -+2^k
//   empty:     alpha outside [P'(-inf), P'(+inf)]; dim/s_alpha are NaN
struct SpectrumPoint {
  double alpha = 0.0;
  double s_alpha = 0.0;  // +-inf at endpoints, NaN when empty
  double P_at_s = 0.0;   // NaN at endpoints and when empty
  double Pprime_at_s = 0.0;
  double dim = 0.0;
  SpectrumClass cls = SpectrumClass::empty;
};

inline constexpr double kEdgeTol = 1e-9;        // |alpha - slope| below this is an endpoint
inline constexpr double kRootFTol = 1e-10;      // |P'(s_alpha) - alpha| target
inline constexpr double kEndpointStep = 1e-6;   // endpoint limit stabilization threshold
inline constexpr double kEndpointSCap = 1048576.0;  // 2^20

SpectrumPoint legendre_point(const PotentialMatrix& model, double alpha, double tol = kDefaultTol);

// Inclusive alpha grid over [P'(-inf), P'(+inf)], n_points >= 3; first and
// last points are the endpoints.
std::vector<SpectrumPoint> spectrum_curve(const PotentialMatrix& model, int n_points,
                                          double tol = kDefaultTol);

// Supremum of dim over ergodic (here: Bernoulli product) measures with
// (E f1)(E f2) = alpha; absent when no such measure exists. Requires a
// factor-built model.
struct InvariantSpectrumPoint {
  double alpha = 0.0;
  std::optional<double> value;  // H_nat(weights)/log m, in [0,1]
  std::optional<double> beta1;
  std::optional<double> beta2;
  std::optional<std::vector<double>> weights;
};

InvariantSpectrumPoint invariant_spectrum(const PotentialMatrix& model, double alpha,
                                          double tol = 1e-10);

// Maximum-entropy weights with two moment constraints, solved in dual form
// p_i proportional to exp(lambda1 f1_i + lambda2 f2_i). When (f1, f2, 1) are
// linearly dependent the redundant constraint is dropped and a 1-D dual is
// solved; inconsistent targets raise InfeasibleError.
struct MaxEntSolution {
  std::vector<double> weights;
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  double entropy = 0.0;  // nats
};

MaxEntSolution max_entropy_dual(const std::vector<double>& f1, const std::vector<double>& f2,
                                double beta1, double beta2, double tol = 1e-10);

namespace detail {

// Maximal intervals of beta1 with beta1 in [lo1, hi1] and alpha/beta1 in
// [lo2, hi2]; at most one per sign of beta1. Requires alpha != 0.
std::vector<std::pair<double, double>> feasible_beta1_intervals(double lo1, double hi1, double lo2,
                                                                double hi2, double alpha);

}  // namespace detail

}  // namespace mfa

#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "mfa/model.hpp"
#include "mfa/sampler.hpp"

namespace mfa {
// Closed-form and brute-force validators for the two worked examples on the
// two-letter alphabet, plus generic cross-check tools. Everything here is
// deliberately independent of the transfer/pressure solve path.
namespace oracle {

// Example 1: f1 = f2 = (-1, 1) (i.e. 2 x_1 - 1). Example 2: f1 = f2 = (0, 1).
PotentialMatrix example1_model();
PotentialMatrix example2_model();

// dim = 1/2 + (1/2) H((1+alpha)/2), H the base-2 entropy; alpha in [-1, 1].
double example1_dim(double alpha);
// F_inv = H((1+sqrt(alpha))/2); absent outside [0, 1].
std::optional<double> example1_finv(double alpha);
// F_inv = H(sqrt(alpha)); absent outside [0, 1].
std::optional<double> example2_finv(double alpha);

// The real root >= 1 of x^3 - 2x^2 - (e^s - 1)x + (e^s - 1) = 0, selected by
// continuity from t0(0) = 2; the pressure of Example 2 is 2 log t0(s).
double example2_t0(double s);
// s -> -inf limit of t0: the root of t (t-1)^2 = 1 (square of the plastic
// number), giving the dimension log2 t0 at the left endpoint.
double example2_t0_limit();

// Central difference (fn(s+h) - fn(s-h)) / (2h).
double finite_difference(const std::function<double(double)>& fn, double s, double h);

// Brute-force enumeration of all m^n cylinders: total mass, and (optionally)
// the max total-variation gap between exact pair marginals of (x_k, x_2k)
// and their Monte Carlo estimates from `mc_samples` seeded draws.
struct CylinderCheck {
  int n = 0;
  std::int64_t num_words = 0;
  double prob_sum = 0.0;
  std::int64_t mc_samples = 0;
  std::optional<double> max_pair_tv;
};

CylinderCheck exhaustive_cylinder_check(const PotentialMatrix& model, double s, int n,
                                        std::int64_t mc_samples = 0, std::uint64_t seed = 1);

}  // namespace oracle
}  // namespace mfa

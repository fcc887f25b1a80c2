#pragma once

#include <vector>

#include "mfa/model.hpp"
#include "mfa/numerics.hpp"
#include "mfa/transfer.hpp"

namespace mfa {

// P(s) = log sum_j t_j(s), natural-log units. Pprime is NaN until filled by
// pressure_derivative.
struct PressurePoint {
  double s = 0.0;
  double P = 0.0;
  double Pprime = 0.0;
};

PressurePoint pressure(const PotentialMatrix& model, double s, double tol = kDefaultTol);

// P'(s) by implicit differentiation of the transfer system: with softmax row
// weights w_ij over s*phi(i,j) + l_j, the vector l' solves (I - W/2) l' =
// (1/2) W phi, and P' = softmax(l) . l'.
PressurePoint pressure_derivative(const PotentialMatrix& model, double s, double tol = kDefaultTol);

// Asymptotic slopes of P and the extremal-edge cycle classification.
// tau_plus is the fixed point of tau_i = (1/2) max_j(phi(i,j) + tau_j), a
// sup-norm 1/2-contraction; slope_plus = max_i tau_plus_i = P'(+inf).
// Min-plus analogue for slope_minus = P'(-inf).
struct EndpointSlopes {
  double slope_minus = 0.0;
  double slope_plus = 0.0;
  std::vector<double> tau_minus;
  std::vector<double> tau_plus;
  bool attains_min = false;  // slope_minus == alpha_min (extremal cycle exists)
  bool attains_max = false;
};

EndpointSlopes endpoint_slopes(const PotentialMatrix& model);

enum class Extreme { min, max };

// True iff the directed graph of extremal edges {(i,j): phi(i,j) attains the
// chosen extreme} has a cycle; witness = i_0 ... i_l with i_0 = i_l when found.
struct CycleWitness {
  bool exists = false;
  std::vector<int> cycle;
};

CycleWitness extremal_cycle(const PotentialMatrix& model, Extreme which);

}  // namespace mfa

#pragma once

#include <optional>
#include <span>
#include <vector>

#include "mfa/model.hpp"
#include "mfa/numerics.hpp"

namespace mfa {

// Positive solution of t_i^2 = sum_j e^{s phi(i,j)} t_j, kept in log domain.
struct TransferSolution {
  double s = 0.0;
  std::vector<double> log_t;
  int iterations = 0;
  // ||l - T(l)||_inf of the returned iterate, T the log-domain half-LSE map.
  double sup_residual = 0.0;
  // Max ratio of successive sup-norm deltas, measured only while deltas are
  // above kContractionFloor (below that, ulp jitter of the iterates dominates
  // the quotient). 0 when convergence was immediate.
  double max_contraction = 0.0;
};

inline constexpr double kContractionFloor = 1e-4;
inline constexpr int kMaxTransferIterations = 200;

// One application of the fixed-point map l_i <- (1/2) LSE_j(s phi(i,j) + l_j).
std::vector<double> transfer_map(const PotentialMatrix& model, double s,
                                 std::span<const double> log_t);

// Fixed-point solve. The map is a sup-norm 1/2-contraction, so convergence is
// unconditional; the tolerance is floored at a few ulps of the iterate scale
// so that huge |s| (where log t is large) still terminates.
TransferSolution solve_transfer(const PotentialMatrix& model, double s, double tol = kDefaultTol,
                                std::optional<std::vector<double>> initial = std::nullopt);

}  // namespace mfa

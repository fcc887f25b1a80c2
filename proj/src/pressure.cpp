#include "mfa/pressure.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mfa/errors.hpp"

namespace mfa {

namespace {

std::vector<double> softmax(std::span<const double> xs) {
  const double lse = log_sum_exp(xs);
  std::vector<double> out(xs.size());
  for (std::size_t i = 0; i < xs.size(); ++i) out[i] = std::exp(xs[i] - lse);
  return out;
}

void require_non_constant(const PotentialMatrix& model, const char* op) {
  if (model.is_constant())
    throw ConstantPotentialError(std::string(op) + ": potential is constant");
}

// Fixed point of tau_i = (1/2) opt_j(phi(i,j) + tau_j); piecewise-linear
// 1/2-contraction, converges geometrically from tau = 0.
std::vector<double> half_opt_fixed_point(const PotentialMatrix& model, bool use_max) {
  const int m = model.m();
  std::vector<double> tau(static_cast<std::size_t>(m), 0.0);
  std::vector<double> next(static_cast<std::size_t>(m));
  for (int iter = 0; iter < 400; ++iter) {
    for (int i = 0; i < m; ++i) {
      double best = use_max ? -std::numeric_limits<double>::infinity()
                            : std::numeric_limits<double>::infinity();
      for (int j = 0; j < m; ++j) {
        const double v = model.phi(i, j) + tau[static_cast<std::size_t>(j)];
        best = use_max ? std::max(best, v) : std::min(best, v);
      }
      next[static_cast<std::size_t>(i)] = 0.5 * best;
    }
    const double delta = sup_dist(next, tau);
    tau.swap(next);
    if (delta <= 4.0 * std::numeric_limits<double>::epsilon() * (1.0 + sup_norm(tau))) break;
  }
  return tau;
}

}  // namespace

PressurePoint pressure(const PotentialMatrix& model, double s, double tol) {
  const TransferSolution sol = solve_transfer(model, s, tol);
  PressurePoint out;
  out.s = s;
  out.P = log_sum_exp(sol.log_t);
  out.Pprime = std::numeric_limits<double>::quiet_NaN();
  return out;
}

PressurePoint pressure_derivative(const PotentialMatrix& model, double s, double tol) {
  require_non_constant(model, "pressure_derivative");
  const TransferSolution sol = solve_transfer(model, s, tol);
  const int m = model.m();
  const std::size_t n = static_cast<std::size_t>(m);

  // Row weights w_ij = softmax_j(s phi(i,j) + l_j).
  std::vector<double> A(n * n, 0.0);
  std::vector<double> rhs(n, 0.0);
  std::vector<double> row(n);
  for (int i = 0; i < m; ++i) {
    for (int j = 0; j < m; ++j) row[static_cast<std::size_t>(j)] = s * model.phi(i, j) + sol.log_t[static_cast<std::size_t>(j)];
    const std::vector<double> w = softmax(row);
    double drive = 0.0;
    for (int j = 0; j < m; ++j) {
      A[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(j)] = -0.5 * w[static_cast<std::size_t>(j)];
      drive += w[static_cast<std::size_t>(j)] * model.phi(i, j);
    }
    A[static_cast<std::size_t>(i) * n + static_cast<std::size_t>(i)] += 1.0;
    rhs[static_cast<std::size_t>(i)] = 0.5 * drive;
  }
  // (I - W/2) is strictly diagonally dominant (W row-stochastic).
  const std::vector<double> lprime = solve_linear(std::move(A), std::move(rhs));

  const std::vector<double> v = softmax(sol.log_t);
  double pp = 0.0;
  for (std::size_t i = 0; i < n; ++i) pp += v[i] * lprime[i];

  PressurePoint out;
  out.s = s;
  out.P = log_sum_exp(sol.log_t);
  out.Pprime = pp;
  return out;
}

EndpointSlopes endpoint_slopes(const PotentialMatrix& model) {
  require_non_constant(model, "endpoint_slopes");
  EndpointSlopes out;
  out.tau_plus = half_opt_fixed_point(model, /*use_max=*/true);
  out.tau_minus = half_opt_fixed_point(model, /*use_max=*/false);
  out.slope_plus = *std::max_element(out.tau_plus.begin(), out.tau_plus.end());
  out.slope_minus = *std::min_element(out.tau_minus.begin(), out.tau_minus.end());
  out.attains_min = extremal_cycle(model, Extreme::min).exists;
  out.attains_max = extremal_cycle(model, Extreme::max).exists;
  return out;
}

CycleWitness extremal_cycle(const PotentialMatrix& model, Extreme which) {
  const int m = model.m();
  const auto is_edge = [&](int i, int j) {
    return which == Extreme::min ? model.attains_min(i, j) : model.attains_max(i, j);
  };

  // Iterative DFS over the extremal-edge graph; a back edge closes a cycle.
  enum class Color { white, gray, black };
  std::vector<Color> color(static_cast<std::size_t>(m), Color::white);
  std::vector<int> stack;
  std::vector<int> next_edge(static_cast<std::size_t>(m), 0);
  for (int root = 0; root < m; ++root) {
    if (color[static_cast<std::size_t>(root)] != Color::white) continue;
    stack.push_back(root);
    color[static_cast<std::size_t>(root)] = Color::gray;
    next_edge[static_cast<std::size_t>(root)] = 0;
    while (!stack.empty()) {
      const int u = stack.back();
      bool advanced = false;
      for (int& j = next_edge[static_cast<std::size_t>(u)]; j < m; ++j) {
        if (!is_edge(u, j)) continue;
        if (color[static_cast<std::size_t>(j)] == Color::gray) {
          // Cycle: slice of the stack from j to u, closed by j.
          CycleWitness w;
          w.exists = true;
          auto it = std::find(stack.begin(), stack.end(), j);
          w.cycle.assign(it, stack.end());
          w.cycle.push_back(j);
          return w;
        }
        if (color[static_cast<std::size_t>(j)] == Color::white) {
          color[static_cast<std::size_t>(j)] = Color::gray;
          next_edge[static_cast<std::size_t>(j)] = 0;
          stack.push_back(j);
          ++j;
          advanced = true;
          break;
        }
      }
      if (!advanced) {
        color[static_cast<std::size_t>(u)] = Color::black;
        stack.pop_back();
      }
    }
  }
  return {};
}

}  // namespace mfa

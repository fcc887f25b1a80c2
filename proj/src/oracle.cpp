#include "mfa/oracle.hpp"

#include <cmath>
#include <vector>

#include "mfa/errors.hpp"
#include "mfa/numerics.hpp"
#include "mfa/transfer.hpp"

namespace mfa {
namespace oracle {

PotentialMatrix example1_model() { return potential_from_factors({-1.0, 1.0}, {-1.0, 1.0}); }

PotentialMatrix example2_model() { return potential_from_factors({0.0, 1.0}, {0.0, 1.0}); }

double example1_dim(double alpha) {
  if (alpha < -1.0 || alpha > 1.0)
    throw InvalidInputError("example1_dim: alpha outside [-1, 1]");
  return 0.5 + 0.5 * binary_entropy_bits(0.5 * (1.0 + alpha));
}

std::optional<double> example1_finv(double alpha) {
  if (alpha < 0.0 || alpha > 1.0) return std::nullopt;
  return binary_entropy_bits(0.5 * (1.0 + std::sqrt(alpha)));
}

std::optional<double> example2_finv(double alpha) {
  if (alpha < 0.0 || alpha > 1.0) return std::nullopt;
  return binary_entropy_bits(std::sqrt(alpha));
}

double example2_t0(double s) {
  if (!std::isfinite(s)) throw InvalidInputError("example2_t0: s must be finite");
  const double u = std::expm1(s);
  const auto cubic = [u](double x) { return ((x - 2.0) * x - u) * x + u; };
  // cubic(1) = -1 for every s, and exactly one root lies above 1 (three real
  // roots > 1 would contradict root sum = 2), so this bracket pins the branch
  // that is continuous in s with t0(0) = 2.
  const double lo = 1.0 + 1e-9;
  double hi = 3.0 + std::exp(std::min(std::abs(s), 700.0));
  for (int k = 0; k < 60 && cubic(hi) <= 0.0; ++k) hi *= 2.0;
  return brent_root(cubic, lo, hi, 1e-14);
}

double example2_t0_limit() {
  const auto g = [](double t) { return t * (t - 1.0) * (t - 1.0) - 1.0; };
  return brent_root(g, 1.0 + 1e-9, 3.0, 1e-15);
}

double finite_difference(const std::function<double(double)>& fn, double s, double h) {
  if (!(h > 0.0)) throw InvalidInputError("finite_difference: h must be > 0");
  return (fn(s + h) - fn(s - h)) / (2.0 * h);
}

CylinderCheck exhaustive_cylinder_check(const PotentialMatrix& model, double s, int n,
                                        std::int64_t mc_samples, std::uint64_t seed) {
  if (n < 1) throw InvalidInputError("exhaustive_cylinder_check: n must be >= 1");
  const int m = model.m();
  double count = 1.0;
  for (int k = 0; k < n; ++k) {
    count *= m;
    if (count > static_cast<double>(1 << 20))
      throw InvalidInputError("exhaustive_cylinder_check: m^n exceeds 2^20");
  }
  const std::int64_t num_words = static_cast<std::int64_t>(count);

  const MarkovKernel kernel = kernel_from_solution(model, solve_transfer(model, s));
  const int pairs = n / 2;

  CylinderCheck out;
  out.n = n;
  out.num_words = num_words;
  out.mc_samples = mc_samples;

  std::vector<std::vector<double>> exact_pair(
      static_cast<std::size_t>(pairs), std::vector<double>(static_cast<std::size_t>(m) * m, 0.0));
  std::vector<int> word(static_cast<std::size_t>(n));
  double sum = 0.0;
  for (std::int64_t idx = 0; idx < num_words; ++idx) {
    std::int64_t rem = idx;
    for (int k = n - 1; k >= 0; --k) {
      word[static_cast<std::size_t>(k)] = static_cast<int>(rem % m);
      rem /= m;
    }
    const double prob = std::exp(cylinder_log_prob(kernel, word));
    sum += prob;
    for (int k = 1; k <= pairs; ++k)
      exact_pair[static_cast<std::size_t>(k - 1)]
                [static_cast<std::size_t>(word[static_cast<std::size_t>(k - 1)]) * m +
                 word[static_cast<std::size_t>(2 * k - 1)]] += prob;
  }
  out.prob_sum = sum;

  if (mc_samples > 0 && pairs > 0) {
    std::vector<std::vector<double>> freq(
        static_cast<std::size_t>(pairs), std::vector<double>(static_cast<std::size_t>(m) * m, 0.0));
    for (std::int64_t t = 0; t < mc_samples; ++t) {
      const std::vector<int> w = sample_prefix(kernel, n, seed + static_cast<std::uint64_t>(t));
      for (int k = 1; k <= pairs; ++k)
        freq[static_cast<std::size_t>(k - 1)]
            [static_cast<std::size_t>(w[static_cast<std::size_t>(k - 1)]) * m +
             w[static_cast<std::size_t>(2 * k - 1)]] += 1.0;
    }
    double max_tv = 0.0;
    for (int k = 0; k < pairs; ++k) {
      double tv = 0.0;
      for (std::size_t cell = 0; cell < static_cast<std::size_t>(m) * m; ++cell)
        tv += std::abs(exact_pair[static_cast<std::size_t>(k)][cell] -
                       freq[static_cast<std::size_t>(k)][cell] / static_cast<double>(mc_samples));
      max_tv = std::max(max_tv, 0.5 * tv);
    }
    out.max_pair_tv = max_tv;
  }
  return out;
}

}  // namespace oracle
}  // namespace mfa

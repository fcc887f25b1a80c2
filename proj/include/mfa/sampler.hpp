#pragma once

#include <cstdint>
#include <vector>

#include "mfa/model.hpp"
#include "mfa/pressure.hpp"
#include "mfa/transfer.hpp"

namespace mfa {

// Markov law derived from a transfer solution:
//   pi_i = t_i / sum_j t_j,   p_ij = e^{s phi(i,j)} t_j / t_i^2.
// Row-stochasticity of p is the transfer equation itself. Log entries stay
// finite even where the linear ones underflow.
struct MarkovKernel {
  double s = 0.0;
  int m = 0;
  std::vector<double> pi;
  std::vector<double> p;  // row-major
  std::vector<double> log_pi;
  std::vector<double> log_p;

  double p_at(int i, int j) const { return p[static_cast<std::size_t>(i) * m + j]; }
  double log_p_at(int i, int j) const { return log_p[static_cast<std::size_t>(i) * m + j]; }
};

MarkovKernel kernel_from_solution(const PotentialMatrix& model, const TransferSolution& solution);

// Partition of {1, ..., n} into the dyadic chains {i, 2i, 4i, ...}, i odd.
struct Chain {
  std::int64_t head = 0;  // the odd starting index
  std::vector<std::int64_t> indices;
};

struct ChainDecomposition {
  std::int64_t n = 0;
  std::vector<Chain> chains;  // ordered by head = 1, 3, 5, ...
};

ChainDecomposition dyadic_chains(std::int64_t n);

// Word of length n (positions 1..n): on each chain independently, the first
// symbol is drawn from pi and successors from p. The stream for chain i is
// derived from (seed, i), so the word does not depend on traversal order.
std::vector<int> sample_prefix(const MarkovKernel& kernel, std::int64_t n, std::uint64_t seed);

// log of the product-measure mass of the n-cylinder of `word`; may be -inf
// for kernels with zero transitions.
double cylinder_log_prob(const MarkovKernel& kernel, const std::vector<int>& word);

// (1/n) sum_{k=1}^{n} phi(word_k, word_{2k}) with n = floor(|word|/2).
double multiple_birkhoff_average(const std::vector<int>& word, const PotentialMatrix& model);

struct SampleRun {
  std::uint64_t seed = 0;
  std::int64_t n = 0;  // horizon = |word|
  std::vector<int> word;
  double avg = 0.0;       // multiple Birkhoff average over k <= n/2
  double log_prob = 0.0;  // log P_s of the observed n-cylinder
  double local_dim = 0.0;  // -log_prob / (n log m)
};

SampleRun sample_run(const PotentialMatrix& model, const MarkovKernel& kernel,
                     std::int64_t horizon, std::uint64_t seed);

// Monte Carlo check of the law of large numbers: with horizon 2n every pair
// (k, 2k), k <= n, lies inside the sampled word. mean avg should approach
// P'(s), mean local dimension (P - s P')/(2 log m).
struct LlnStatistics {
  double s = 0.0;
  std::int64_t n = 0;
  int seeds = 0;
  double mean_avg = 0.0;
  double std_avg = 0.0;
  double mean_local_dim = 0.0;
  double std_local_dim = 0.0;
  double expected_Pprime = 0.0;
  double expected_dim = 0.0;
  std::vector<SampleRun> runs;
};

// n must be a power of two >= 2^10.
LlnStatistics lln_experiment(const PotentialMatrix& model, double s, std::int64_t n,
                             const std::vector<std::uint64_t>& seeds, double tol = kDefaultTol);

}  // namespace mfa

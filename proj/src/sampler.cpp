#include "mfa/sampler.hpp"

#include <cmath>
#include <random>

#include "mfa/errors.hpp"
#include "mfa/numerics.hpp"

namespace mfa {

namespace {

int draw_symbol(std::mt19937_64& eng, const double* probs, int m) {
  const double u = canonical_u01(eng);
  double acc = 0.0;
  for (int j = 0; j < m - 1; ++j) {
    acc += probs[j];
    if (u < acc) return j;
  }
  return m - 1;
}

}  // namespace

MarkovKernel kernel_from_solution(const PotentialMatrix& model, const TransferSolution& solution) {
  const int m = model.m();
  MarkovKernel k;
  k.s = solution.s;
  k.m = m;
  const double lse = log_sum_exp(solution.log_t);
  k.log_pi.resize(static_cast<std::size_t>(m));
  k.pi.resize(static_cast<std::size_t>(m));
  k.log_p.resize(static_cast<std::size_t>(m) * m);
  k.p.resize(static_cast<std::size_t>(m) * m);
  for (int i = 0; i < m; ++i) {
    k.log_pi[static_cast<std::size_t>(i)] = solution.log_t[static_cast<std::size_t>(i)] - lse;
    k.pi[static_cast<std::size_t>(i)] = std::exp(k.log_pi[static_cast<std::size_t>(i)]);
    for (int j = 0; j < m; ++j) {
      const double lp = solution.s * model.phi(i, j) + solution.log_t[static_cast<std::size_t>(j)] -
                        2.0 * solution.log_t[static_cast<std::size_t>(i)];
      k.log_p[static_cast<std::size_t>(i) * m + j] = lp;
      k.p[static_cast<std::size_t>(i) * m + j] = std::exp(lp);
    }
  }
  return k;
}

ChainDecomposition dyadic_chains(std::int64_t n) {
  if (n < 1) throw InvalidInputError("dyadic_chains: n must be >= 1");
  ChainDecomposition out;
  out.n = n;
  for (std::int64_t i = 1; i <= n; i += 2) {
    Chain c;
    c.head = i;
    for (std::int64_t k = i; k <= n; k *= 2) c.indices.push_back(k);
    out.chains.push_back(std::move(c));
  }
  return out;
}

std::vector<int> sample_prefix(const MarkovKernel& kernel, std::int64_t n, std::uint64_t seed) {
  if (n < 1) throw InvalidInputError("sample_prefix: n must be >= 1");
  const int m = kernel.m;
  std::vector<int> word(static_cast<std::size_t>(n));
  for (std::int64_t i = 1; i <= n; i += 2) {
    std::mt19937_64 eng(stream_seed(seed, static_cast<std::uint64_t>(i)));
    int sym = draw_symbol(eng, kernel.pi.data(), m);
    word[static_cast<std::size_t>(i - 1)] = sym;
    for (std::int64_t pos = 2 * i; pos <= n; pos *= 2) {
      sym = draw_symbol(eng, kernel.p.data() + static_cast<std::size_t>(sym) * m, m);
      word[static_cast<std::size_t>(pos - 1)] = sym;
    }
  }
  return word;
}

double cylinder_log_prob(const MarkovKernel& kernel, const std::vector<int>& word) {
  const std::int64_t n = static_cast<std::int64_t>(word.size());
  if (n < 1) throw InvalidInputError("cylinder_log_prob: word must be non-empty");
  for (int sym : word)
    if (sym < 0 || sym >= kernel.m) throw InvalidInputError("cylinder_log_prob: symbol out of range");
  double lp = 0.0;
  for (std::int64_t i = 1; i <= n; i += 2) {
    int prev = word[static_cast<std::size_t>(i - 1)];
    lp += kernel.log_pi[static_cast<std::size_t>(prev)];
    for (std::int64_t pos = 2 * i; pos <= n; pos *= 2) {
      const int sym = word[static_cast<std::size_t>(pos - 1)];
      lp += kernel.log_p_at(prev, sym);
      prev = sym;
    }
  }
  return lp;
}

double multiple_birkhoff_average(const std::vector<int>& word, const PotentialMatrix& model) {
  if (word.size() < 2) throw InvalidInputError("multiple_birkhoff_average: word shorter than 2");
  const std::int64_t n = static_cast<std::int64_t>(word.size()) / 2;
  double acc = 0.0;
  for (std::int64_t k = 1; k <= n; ++k)
    acc += model.phi(word[static_cast<std::size_t>(k - 1)], word[static_cast<std::size_t>(2 * k - 1)]);
  return acc / static_cast<double>(n);
}

SampleRun sample_run(const PotentialMatrix& model, const MarkovKernel& kernel,
                     std::int64_t horizon, std::uint64_t seed) {
  SampleRun run;
  run.seed = seed;
  run.n = horizon;
  run.word = sample_prefix(kernel, horizon, seed);
  run.avg = multiple_birkhoff_average(run.word, model);
  run.log_prob = cylinder_log_prob(kernel, run.word);
  run.local_dim = -run.log_prob /
                  (static_cast<double>(horizon) * std::log(static_cast<double>(model.m())));
  return run;
}

LlnStatistics lln_experiment(const PotentialMatrix& model, double s, std::int64_t n,
                             const std::vector<std::uint64_t>& seeds, double tol) {
  if (n < 1024 || (n & (n - 1)) != 0)
    throw InvalidInputError("lln_experiment: n must be a power of two >= 1024");
  if (seeds.empty()) throw InvalidInputError("lln_experiment: need at least one seed");

  const TransferSolution sol = solve_transfer(model, s, tol);
  const MarkovKernel kernel = kernel_from_solution(model, sol);
  const PressurePoint pp = pressure_derivative(model, s, tol);

  LlnStatistics out;
  out.s = s;
  out.n = n;
  out.seeds = static_cast<int>(seeds.size());
  out.expected_Pprime = pp.Pprime;
  out.expected_dim = (pp.P - s * pp.Pprime) / (2.0 * std::log(static_cast<double>(model.m())));

  std::vector<double> avgs, dims;
  for (std::uint64_t seed : seeds) {
    out.runs.push_back(sample_run(model, kernel, 2 * n, seed));
    avgs.push_back(out.runs.back().avg);
    dims.push_back(out.runs.back().local_dim);
  }
  out.mean_avg = mean_of(avgs);
  out.std_avg = sample_stddev(avgs);
  out.mean_local_dim = mean_of(dims);
  out.std_local_dim = sample_stddev(dims);
  return out;
}

}  // namespace mfa

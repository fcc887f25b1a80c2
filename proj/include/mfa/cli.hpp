#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include "mfa/numerics.hpp"

namespace mfa {

// Parsed command line. One command per process; CSV/JSON artifacts go to
// `out` (written atomically) or stdout.
struct RunConfig {
  enum class Command { solve, pressure, spectrum, finv, endpoints, sample, verify };

  Command command = Command::solve;
  std::string model_path;
  std::optional<double> s;
  double s_min = -5.0;
  double s_max = 5.0;
  int steps = 101;           // grid points for `pressure`
  std::optional<double> alpha;
  int alpha_steps = 201;     // grid points for `spectrum`
  std::int64_t n = 32768;    // LLN horizon parameter (power of two)
  int seeds = 8;
  std::uint64_t seed = 1;
  double tol = kDefaultTol;
  std::optional<std::string> out;
};

// Exit codes: 0 success (including empty-spectrum point queries), 1 input
// errors, 2 internal solver failures.
int run(const RunConfig& config, std::ostream& out_stream, std::ostream& err_stream);

}  // namespace mfa

#pragma once

#include <random>
#include <vector>

#include "mfa/model.hpp"

namespace mfa::testing {

inline PotentialMatrix random_matrix_model(std::mt19937_64& eng, int m, double lo = -2.0,
                                           double hi = 2.0) {
  std::vector<std::vector<double>> phi(static_cast<std::size_t>(m),
                                       std::vector<double>(static_cast<std::size_t>(m)));
  for (auto& row : phi)
    for (double& v : row)
      v = lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
  return potential_from_matrix(phi);
}

inline std::vector<double> random_vector(std::mt19937_64& eng, int m, double lo = -1.5,
                                         double hi = 1.5) {
  std::vector<double> f(static_cast<std::size_t>(m));
  for (double& v : f) v = lo + (hi - lo) * (static_cast<double>(eng() >> 11) * 0x1.0p-53);
  return f;
}

inline PotentialMatrix random_factor_model(std::mt19937_64& eng, int m) {
  return potential_from_factors(random_vector(eng, m), random_vector(eng, m));
}

}  // namespace mfa::testing

#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "mfa/model.hpp"

namespace mfa {

struct VerifyItem {
  std::string name;
  bool pass = false;
  std::string detail;
};

// Self-checks of the solver stack against independent oracles and algebraic
// identities, run on the given model. When the model matches one of the two
// built-in closed-form examples, those oracles are checked too.
std::vector<VerifyItem> run_verification(const PotentialMatrix& model,
                                         std::uint64_t seed = 20250809);

}  // namespace mfa

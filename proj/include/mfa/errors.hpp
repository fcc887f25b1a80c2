#pragma once

#include <stdexcept>

namespace mfa {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Model construction or model file rejected.
struct InvalidModelError : Error {
  using Error::Error;
};

// Operation parameters outside their domain.
struct InvalidInputError : Error {
  using Error::Error;
};

// Operation requires a non-constant potential.
struct ConstantPotentialError : Error {
  using Error::Error;
};

// Operation requires a factor-built model.
struct UnsupportedModelError : Error {
  using Error::Error;
};

// Requested moments are not attainable by any probability vector.
struct InfeasibleError : Error {
  using Error::Error;
};

// Internal iteration failed to converge.
struct SolverFailureError : Error {
  using Error::Error;
};

// An s -> +/-infinity limit did not stabilize before the cap.
struct LimitNonconvergenceError : Error {
  using Error::Error;
};

}  // namespace mfa

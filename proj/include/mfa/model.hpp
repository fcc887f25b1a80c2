#pragma once

#include <optional>
#include <string>
#include <vector>

namespace mfa {

// Pair potential phi(i, j) on S x S, S = {0, ..., m-1}. Immutable after
// construction; safe to share across threads.
class PotentialMatrix {
 public:
  int m() const { return m_; }
  double phi(int i, int j) const { return phi_[static_cast<std::size_t>(i) * m_ + j]; }
  const std::vector<double>& entries() const { return phi_; }

  double alpha_min() const { return alpha_min_; }
  double alpha_max() const { return alpha_max_; }
  double mean_entry() const { return mean_; }

  // Non-constant potentials have alpha_min < alpha_max; the constant case
  // makes the pressure affine and the Legendre transform degenerate.
  bool is_constant() const { return alpha_max_ == alpha_min_; }

  bool has_factors() const { return factors_.has_value(); }
  const std::vector<double>& f1() const { return factors_->first; }
  const std::vector<double>& f2() const { return factors_->second; }

  // An entry counts as extremal if it is within this absolute tolerance of
  // alpha_min / alpha_max; factor products rarely reproduce the extreme bits
  // exactly.
  double extremal_tolerance() const;
  bool attains_min(int i, int j) const { return phi(i, j) <= alpha_min_ + extremal_tolerance(); }
  bool attains_max(int i, int j) const { return phi(i, j) >= alpha_max_ - extremal_tolerance(); }

  friend PotentialMatrix potential_from_factors(const std::vector<double>& f1,
                                                const std::vector<double>& f2);
  friend PotentialMatrix potential_from_matrix(const std::vector<std::vector<double>>& phi);

 private:
  PotentialMatrix() = default;
  void finalize();

  int m_ = 0;
  std::vector<double> phi_;  // row-major m x m
  double alpha_min_ = 0.0;
  double alpha_max_ = 0.0;
  double mean_ = 0.0;
  std::optional<std::pair<std::vector<double>, std::vector<double>>> factors_;
};

// phi[i][j] = f1[i] * f2[j]; both vectors must have the same length m >= 2.
PotentialMatrix potential_from_factors(const std::vector<double>& f1,
                                       const std::vector<double>& f2);

// Square m x m matrix, m >= 2, finite entries.
PotentialMatrix potential_from_matrix(const std::vector<std::vector<double>>& phi);

// JSON model file: {"m": int, "f1": [..], "f2": [..]} or {"m": int, "phi": [[..], ..]}.
// Exactly one of the two forms must be present.
PotentialMatrix load_model(const std::string& path);
PotentialMatrix parse_model(const std::string& json_text);

}  // namespace mfa

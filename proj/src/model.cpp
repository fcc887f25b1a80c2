#include "mfa/model.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <sstream>

#include "mfa/errors.hpp"
#include "json.hpp"

namespace mfa {

namespace {

void require_finite(const std::vector<double>& v, const char* what) {
  for (double x : v)
    if (!std::isfinite(x)) throw InvalidModelError(std::string(what) + " has a non-finite entry");
}

}  // namespace

double PotentialMatrix::extremal_tolerance() const {
  return 1e-12 * std::max({1.0, std::abs(alpha_min_), std::abs(alpha_max_)});
}

void PotentialMatrix::finalize() {
  alpha_min_ = *std::min_element(phi_.begin(), phi_.end());
  alpha_max_ = *std::max_element(phi_.begin(), phi_.end());
  double acc = 0.0;
  for (double x : phi_) acc += x;
  mean_ = acc / static_cast<double>(phi_.size());
}

PotentialMatrix potential_from_factors(const std::vector<double>& f1,
                                       const std::vector<double>& f2) {
  if (f1.size() != f2.size()) throw InvalidModelError("factor vectors f1, f2 differ in length");
  if (f1.size() < 2) throw InvalidModelError("alphabet size m must be >= 2");
  require_finite(f1, "f1");
  require_finite(f2, "f2");
  PotentialMatrix out;
  out.m_ = static_cast<int>(f1.size());
  out.phi_.resize(f1.size() * f1.size());
  for (std::size_t i = 0; i < f1.size(); ++i)
    for (std::size_t j = 0; j < f2.size(); ++j) out.phi_[i * f1.size() + j] = f1[i] * f2[j];
  out.factors_ = std::make_pair(f1, f2);
  out.finalize();
  return out;
}

PotentialMatrix potential_from_matrix(const std::vector<std::vector<double>>& phi) {
  if (phi.size() < 2) throw InvalidModelError("alphabet size m must be >= 2");
  PotentialMatrix out;
  out.m_ = static_cast<int>(phi.size());
  out.phi_.reserve(phi.size() * phi.size());
  for (const auto& row : phi) {
    if (row.size() != phi.size()) throw InvalidModelError("phi must be a square matrix");
    require_finite(row, "phi");
    out.phi_.insert(out.phi_.end(), row.begin(), row.end());
  }
  out.finalize();
  return out;
}

PotentialMatrix parse_model(const std::string& json_text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(json_text);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidModelError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw InvalidModelError("model file must be a JSON object");
  if (!j.contains("m") || !j["m"].is_number_integer())
    throw InvalidModelError("model file needs an integer field \"m\"");
  const long long m = j["m"].get<long long>();
  if (m < 2 || m > 4096) throw InvalidModelError("alphabet size m must be in [2, 4096]");

  const bool has_factors = j.contains("f1") || j.contains("f2");
  const bool has_phi = j.contains("phi");
  if (has_factors == has_phi)
    throw InvalidModelError("model file must contain exactly one of {f1,f2} or phi");

  try {
    if (has_factors) {
      if (!j.contains("f1") || !j.contains("f2"))
        throw InvalidModelError("factor form needs both f1 and f2");
      auto f1 = j["f1"].get<std::vector<double>>();
      auto f2 = j["f2"].get<std::vector<double>>();
      if (static_cast<long long>(f1.size()) != m || static_cast<long long>(f2.size()) != m)
        throw InvalidModelError("f1/f2 length does not match m");
      return potential_from_factors(f1, f2);
    }
    auto phi = j["phi"].get<std::vector<std::vector<double>>>();
    if (static_cast<long long>(phi.size()) != m)
      throw InvalidModelError("phi row count does not match m");
    return potential_from_matrix(phi);
  } catch (const nlohmann::json::exception& e) {
    throw InvalidModelError(std::string("malformed model fields: ") + e.what());
  }
}

PotentialMatrix load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InvalidModelError("cannot open model file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_model(buf.str());
}

}  // namespace mfa

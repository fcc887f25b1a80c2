#include "mfa/cli.hpp"

#include <cmath>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "mfa/csv.hpp"
#include "mfa/errors.hpp"
#include "mfa/model.hpp"
#include "mfa/oracle.hpp"
#include "mfa/pressure.hpp"
#include "mfa/sampler.hpp"
#include "mfa/spectrum.hpp"
#include "mfa/transfer.hpp"
#include "mfa/verify.hpp"

namespace mfa {

namespace {

void write_output(const RunConfig& config, const std::string& payload, std::ostream& out_stream) {
  if (!config.out) {
    out_stream << payload;
    return;
  }
  const std::filesystem::path target(*config.out);
  const std::filesystem::path tmp = target.string() + ".tmp";
  {
    std::ofstream f(tmp, std::ios::binary | std::ios::trunc);
    if (!f) throw InvalidInputError("cannot write to " + tmp.string());
    f << payload;
  }
  std::filesystem::rename(tmp, target);
}

std::string spectrum_row(const PotentialMatrix& model, const SpectrumPoint& pt) {
  double finv = std::numeric_limits<double>::quiet_NaN();
  if (model.has_factors()) {
    // Absent suprema (no qualifying measure) plot as 0.
    const InvariantSpectrumPoint fv = invariant_spectrum(model, pt.alpha);
    finv = fv.value.value_or(0.0);
  }
  std::ostringstream row;
  row << format_number(pt.alpha) << ',' << format_number(pt.s_alpha) << ','
      << format_number(pt.P_at_s) << ',' << format_number(pt.Pprime_at_s) << ','
      << format_number(pt.dim) << ',' << format_number(finv) << ',' << to_string(pt.cls) << '\n';
  return row.str();
}

int run_solve(const RunConfig& config, const PotentialMatrix& model, std::ostream& out_stream) {
  const double s = config.s.value_or(0.0);
  const TransferSolution sol = solve_transfer(model, s, config.tol);
  std::ostringstream os;
  os << "s = " << format_number(s) << "\n";
  os << "t =";
  for (double lt : sol.log_t) os << ' ' << format_number(std::exp(lt));
  os << "\nlog_t =";
  for (double lt : sol.log_t) os << ' ' << format_number(lt);
  os << "\niterations = " << sol.iterations << "\nsup_residual = " << format_number(sol.sup_residual)
     << "\n";
  os << "P = " << format_number(log_sum_exp(sol.log_t)) << "\n";
  if (!model.is_constant())
    os << "Pprime = " << format_number(pressure_derivative(model, s, config.tol).Pprime) << "\n";
  write_output(config, os.str(), out_stream);
  return 0;
}

int run_pressure(const RunConfig& config, const PotentialMatrix& model, std::ostream& out_stream) {
  if (config.steps < 2) throw InvalidInputError("pressure: --steps must be >= 2");
  if (!(config.s_max > config.s_min)) throw InvalidInputError("pressure: need --s-max > --s-min");
  std::ostringstream os;
  os << "s,P,Pprime\n";
  for (int k = 0; k < config.steps; ++k) {
    const double s =
        config.s_min + (config.s_max - config.s_min) * static_cast<double>(k) / (config.steps - 1);
    const PressurePoint p = model.is_constant() ? pressure(model, s, config.tol)
                                                : pressure_derivative(model, s, config.tol);
    os << format_number(s) << ',' << format_number(p.P) << ',' << format_number(p.Pprime) << '\n';
  }
  write_output(config, os.str(), out_stream);
  return 0;
}

int run_spectrum(const RunConfig& config, const PotentialMatrix& model, std::ostream& out_stream) {
  std::ostringstream os;
  os << "alpha,s_alpha,P,Pprime,dim,finv,class\n";
  if (config.alpha) {
    os << spectrum_row(model, legendre_point(model, *config.alpha, config.tol));
  } else {
    for (const SpectrumPoint& pt : spectrum_curve(model, config.alpha_steps, config.tol))
      os << spectrum_row(model, pt);
  }
  write_output(config, os.str(), out_stream);
  return 0;
}

int run_finv(const RunConfig& config, const PotentialMatrix& model, std::ostream& out_stream) {
  if (!config.alpha) throw InvalidInputError("finv: --alpha is required");
  const InvariantSpectrumPoint fv = invariant_spectrum(model, *config.alpha);
  std::ostringstream os;
  os << "alpha = " << format_number(fv.alpha) << "\n";
  if (!fv.value) {
    os << "finv = absent (no qualifying measure)\n";
  } else {
    os << "finv = " << format_number(*fv.value) << "\n";
    os << "beta1 = " << format_number(*fv.beta1) << "\nbeta2 = " << format_number(*fv.beta2)
       << "\nweights =";
    for (double w : *fv.weights) os << ' ' << format_number(w);
    os << "\n";
  }
  write_output(config, os.str(), out_stream);
  return 0;
}

int run_endpoints(const RunConfig& config, const PotentialMatrix& model,
                  std::ostream& out_stream) {
  const EndpointSlopes slopes = endpoint_slopes(model);
  std::ostringstream os;
  os << "slope_minus = " << format_number(slopes.slope_minus) << "\n";
  os << "slope_plus = " << format_number(slopes.slope_plus) << "\n";
  os << "tau_minus =";
  for (double t : slopes.tau_minus) os << ' ' << format_number(t);
  os << "\ntau_plus =";
  for (double t : slopes.tau_plus) os << ' ' << format_number(t);
  os << "\nattains_min = " << (slopes.attains_min ? "true" : "false");
  os << "\nattains_max = " << (slopes.attains_max ? "true" : "false") << "\n";
  for (const Extreme which : {Extreme::min, Extreme::max}) {
    const CycleWitness w = extremal_cycle(model, which);
    os << (which == Extreme::min ? "cycle_min =" : "cycle_max =");
    if (!w.exists) {
      os << " none";
    } else {
      for (int v : w.cycle) os << ' ' << v;
    }
    os << "\n";
  }
  write_output(config, os.str(), out_stream);
  return 0;
}

int run_sample(const RunConfig& config, const PotentialMatrix& model, std::ostream& out_stream) {
  if (config.seeds < 1) throw InvalidInputError("sample: --seeds must be >= 1");
  std::vector<std::uint64_t> seeds;
  for (int i = 0; i < config.seeds; ++i) seeds.push_back(config.seed + static_cast<std::uint64_t>(i));
  const LlnStatistics st =
      lln_experiment(model, config.s.value_or(0.0), config.n, seeds, config.tol);
  nlohmann::ordered_json j;
  j["s"] = st.s;
  j["n"] = st.n;
  j["seeds"] = st.seeds;
  j["mean_avg"] = st.mean_avg;
  j["std_avg"] = st.std_avg;
  j["mean_local_dim"] = st.mean_local_dim;
  j["expected_Pprime"] = st.expected_Pprime;
  j["expected_dim"] = st.expected_dim;
  write_output(config, j.dump(2) + "\n", out_stream);
  return 0;
}

int run_verify_cmd(const RunConfig& config, const PotentialMatrix& model,
                   std::ostream& out_stream) {
  const std::vector<VerifyItem> items = run_verification(model, config.seed);
  std::ostringstream os;
  int failed = 0;
  for (const VerifyItem& item : items) {
    os << (item.pass ? "[PASS] " : "[FAIL] ") << item.name << " — " << item.detail << "\n";
    if (!item.pass) ++failed;
  }
  os << (failed == 0 ? "all checks passed" : std::to_string(failed) + " check(s) failed")
     << " (" << items.size() << " total)\n";
  write_output(config, os.str(), out_stream);
  return failed == 0 ? 0 : 1;
}

}  // namespace

int run(const RunConfig& config, std::ostream& out_stream, std::ostream& err_stream) {
  try {
    const PotentialMatrix model = load_model(config.model_path);
    if (!(config.tol > 0.0)) throw InvalidInputError("--tol must be > 0");
    switch (config.command) {
      case RunConfig::Command::solve: return run_solve(config, model, out_stream);
      case RunConfig::Command::pressure: return run_pressure(config, model, out_stream);
      case RunConfig::Command::spectrum: return run_spectrum(config, model, out_stream);
      case RunConfig::Command::finv: return run_finv(config, model, out_stream);
      case RunConfig::Command::endpoints: return run_endpoints(config, model, out_stream);
      case RunConfig::Command::sample: return run_sample(config, model, out_stream);
      case RunConfig::Command::verify: return run_verify_cmd(config, model, out_stream);
    }
    throw InvalidInputError("unknown command");
  } catch (const SolverFailureError& e) {
    err_stream << "solver failure: " << e.what() << "\n";
    return 2;
  } catch (const LimitNonconvergenceError& e) {
    err_stream << "limit did not converge: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    err_stream << "error: " << e.what() << "\n";
    return 1;
  }
}

}  // namespace mfa

// mfspec: multifractal spectra of multiple ergodic averages on S^N.
// Computes the nonlinear transfer solution, pressure curves, Legendre
// spectra, invariant spectra, endpoint slopes, and Monte Carlo checks of the
// telescopic product measure.

#include <iostream>
#include <string>

#include "CLI11.hpp"
#include "mfa/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"multifractal spectrum engine for averages (1/n) sum phi(x_k, x_2k)"};
  app.require_subcommand(1);

  mfa::RunConfig config;
  std::string model_path;
  std::string out_path;

  const auto add_common = [&](CLI::App* cmd) {
    cmd->add_option("--model", model_path, "model JSON file")->required();
    cmd->add_option("--tol", config.tol, "transfer solve tolerance (sup norm, log domain)");
    cmd->add_option("--out", out_path, "output path (written atomically); stdout if omitted");
    return cmd;
  };

  double s_value = 0.0;
  double alpha_value = 0.0;

  CLI::App* solve = add_common(app.add_subcommand("solve", "print t(s), P(s), P'(s)"));
  CLI::Option* solve_s = solve->add_option("--s", s_value, "evaluation point")->required();

  CLI::App* pressure = add_common(app.add_subcommand("pressure", "CSV of (s, P, Pprime) on a grid"));
  pressure->add_option("--s-min", config.s_min, "grid start");
  pressure->add_option("--s-max", config.s_max, "grid end");
  pressure->add_option("--steps", config.steps, "grid points");

  CLI::App* spectrum = add_common(
      app.add_subcommand("spectrum", "CSV of the dimension spectrum over [P'(-inf), P'(+inf)]"));
  CLI::Option* spec_alpha =
      spectrum->add_option("--alpha", alpha_value, "single-point query instead of the full grid");
  spectrum->add_option("--alpha-steps", config.alpha_steps, "grid points");

  CLI::App* finv = add_common(app.add_subcommand("finv", "invariant spectrum at one alpha"));
  CLI::Option* finv_alpha = finv->add_option("--alpha", alpha_value, "level")->required();

  CLI::App* endpoints =
      add_common(app.add_subcommand("endpoints", "asymptotic slopes and extremal cycles"));

  CLI::App* sample = add_common(app.add_subcommand("sample", "Monte Carlo LLN statistics (JSON)"));
  CLI::Option* sample_s = sample->add_option("--s", s_value, "measure parameter");
  sample->add_option("--n", config.n, "horizon parameter (power of two >= 1024; words of length 2n)");
  sample->add_option("--seeds", config.seeds, "number of runs");
  sample->add_option("--seed", config.seed, "base seed");

  CLI::App* verify = add_common(app.add_subcommand("verify", "run the self-check suite"));
  verify->add_option("--seed", config.seed, "seed for randomized checks");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 1;
  }

  config.model_path = model_path;
  if (!out_path.empty()) config.out = out_path;
  if (solve->parsed()) {
    config.command = mfa::RunConfig::Command::solve;
    if (solve_s->count() > 0) config.s = s_value;
  } else if (pressure->parsed()) {
    config.command = mfa::RunConfig::Command::pressure;
  } else if (spectrum->parsed()) {
    config.command = mfa::RunConfig::Command::spectrum;
    if (spec_alpha->count() > 0) config.alpha = alpha_value;
  } else if (finv->parsed()) {
    config.command = mfa::RunConfig::Command::finv;
    if (finv_alpha->count() > 0) config.alpha = alpha_value;
  } else if (endpoints->parsed()) {
    config.command = mfa::RunConfig::Command::endpoints;
  } else if (sample->parsed()) {
    config.command = mfa::RunConfig::Command::sample;
    if (sample_s->count() > 0) config.s = s_value;
  } else if (verify->parsed()) {
    config.command = mfa::RunConfig::Command::verify;
  }

  return mfa::run(config, std::cout, std::cerr);
}

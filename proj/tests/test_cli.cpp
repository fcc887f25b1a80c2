#include "mfa/cli.hpp"

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "mfa/csv.hpp"
#include "mfa/oracle.hpp"
#include "mfa/spectrum.hpp"

using namespace mfa;

namespace {

std::filesystem::path write_temp(const std::string& name, const std::string& body) {
  const std::filesystem::path p = std::filesystem::temp_directory_path() / name;
  std::ofstream f(p, std::ios::trunc);
  f << body;
  return p;
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream os;
  os << f.rdbuf();
  return os.str();
}

const std::string kEx1 = R"({"m": 2, "f1": [-1, 1], "f2": [-1, 1]})";
const std::string kEx2 = R"({"m": 2, "f1": [0, 1], "f2": [0, 1]})";

RunConfig base_config(const std::filesystem::path& model, RunConfig::Command cmd) {
  RunConfig cfg;
  cfg.model_path = model.string();
  cfg.command = cmd;
  return cfg;
}

}  // namespace

TEST_CASE("solve prints the transfer data") {
  const auto model = write_temp("mfa_cli_ex1.json", kEx1);
  RunConfig cfg = base_config(model, RunConfig::Command::solve);
  cfg.s = 0.0;
  std::ostringstream out, err;
  CHECK(run(cfg, out, err) == 0);
  CHECK(out.str().find("P = 1.38629436112") != std::string::npos);  // 2 log 2
  CHECK(out.str().find("Pprime = ") != std::string::npos);
}

TEST_CASE("spectrum curve CSV") {
  const auto model = write_temp("mfa_cli_ex1.json", kEx1);
  RunConfig cfg = base_config(model, RunConfig::Command::spectrum);
  std::ostringstream out, err;
  REQUIRE(run(cfg, out, err) == 0);

  const CsvTable t = parse_csv(out.str());
  CHECK(t.header ==
        std::vector<std::string>{"alpha", "s_alpha", "P", "Pprime", "dim", "finv", "class"});
  REQUIRE(t.rows.size() == 201);
  const int col_alpha = t.column("alpha");
  const int col_dim = t.column("dim");
  const int col_finv = t.column("finv");
  const int col_class = t.column("class");

  CHECK(t.rows.front()[static_cast<std::size_t>(col_class)] == "endpoint_left");
  CHECK(t.rows.back()[static_cast<std::size_t>(col_class)] == "endpoint_right");

  // dim = 1 at alpha = 0 (row 100 of the symmetric grid).
  CHECK(t.number_at(100, col_alpha) == doctest::Approx(0.0));
  CHECK(t.number_at(100, col_dim) == doctest::Approx(1.0).epsilon(1e-6));

  // Even in alpha.
  for (std::size_t k = 0; k < t.rows.size(); ++k) {
    const std::size_t mirror = t.rows.size() - 1 - k;
    CHECK(std::abs(t.number_at(k, col_dim) - t.number_at(mirror, col_dim)) <= 1e-6);
  }

  // finv renders absent as 0 on the negative side and tracks the closed form
  // on [0, 1].
  CHECK(t.number_at(50, col_alpha) == doctest::Approx(-0.5));
  CHECK(t.number_at(50, col_finv) == 0.0);
  CHECK(t.number_at(150, col_alpha) == doctest::Approx(0.5));
  CHECK(t.number_at(150, col_finv) ==
        doctest::Approx(*oracle::example1_finv(0.5)).epsilon(1e-6));
}

TEST_CASE("spectrum single-point query, including empty") {
  const auto model = write_temp("mfa_cli_ex2.json", kEx2);
  RunConfig cfg = base_config(model, RunConfig::Command::spectrum);
  cfg.alpha = 2.0;
  std::ostringstream out, err;
  CHECK(run(cfg, out, err) == 0);  // empty is a reportable result, not an error
  const CsvTable t = parse_csv(out.str());
  REQUIRE(t.rows.size() == 1);
  CHECK(t.rows[0][static_cast<std::size_t>(t.column("class"))] == "empty");

  cfg.alpha = 0.25;
  std::ostringstream out2;
  CHECK(run(cfg, out2, err) == 0);
  const CsvTable t2 = parse_csv(out2.str());
  CHECK(t2.number_at(0, t2.column("dim")) == doctest::Approx(1.0).epsilon(1e-8));
  CHECK(t2.rows[0][static_cast<std::size_t>(t2.column("class"))] == "interior");
}

TEST_CASE("pressure grid CSV") {
  const auto model = write_temp("mfa_cli_ex2.json", kEx2);
  RunConfig cfg = base_config(model, RunConfig::Command::pressure);
  cfg.s_min = -2.0;
  cfg.s_max = 2.0;
  cfg.steps = 41;
  std::ostringstream out, err;
  REQUIRE(run(cfg, out, err) == 0);
  const CsvTable t = parse_csv(out.str());
  REQUIRE(t.rows.size() == 41);
  CHECK(t.number_at(20, t.column("s")) == doctest::Approx(0.0));
  CHECK(t.number_at(20, t.column("P")) == doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-10));
  // P' column increases.
  const int col = t.column("Pprime");
  for (std::size_t k = 1; k < t.rows.size(); ++k)
    CHECK(t.number_at(k, col) >= t.number_at(k - 1, col) - 1e-10);
}

TEST_CASE("endpoints and finv text output") {
  const auto model = write_temp("mfa_cli_ex2.json", kEx2);
  std::ostringstream out, err;
  CHECK(run(base_config(model, RunConfig::Command::endpoints), out, err) == 0);
  CHECK(out.str().find("slope_minus = 0") != std::string::npos);
  CHECK(out.str().find("slope_plus = 1") != std::string::npos);
  CHECK(out.str().find("cycle_min = 0 0") != std::string::npos);
  CHECK(out.str().find("cycle_max = 1 1") != std::string::npos);

  RunConfig cfg = base_config(model, RunConfig::Command::finv);
  cfg.alpha = 0.25;
  std::ostringstream out2;
  CHECK(run(cfg, out2, err) == 0);
  CHECK(out2.str().find("finv = 1") != std::string::npos);

  cfg.model_path = write_temp("mfa_cli_ex1.json", kEx1).string();
  cfg.alpha = -0.5;
  std::ostringstream out3;
  CHECK(run(cfg, out3, err) == 0);
  CHECK(out3.str().find("absent") != std::string::npos);
}

TEST_CASE("sample emits the documented JSON fields") {
  const auto model = write_temp("mfa_cli_ex2.json", kEx2);
  RunConfig cfg = base_config(model, RunConfig::Command::sample);
  cfg.s = 0.0;
  cfg.n = 1024;
  cfg.seeds = 3;
  std::ostringstream out, err;
  REQUIRE(run(cfg, out, err) == 0);
  const auto j = nlohmann::json::parse(out.str());
  for (const char* key :
       {"s", "n", "seeds", "mean_avg", "std_avg", "mean_local_dim", "expected_Pprime",
        "expected_dim"})
    CHECK(j.contains(key));
  CHECK(j["seeds"] == 3);
  CHECK(j["n"] == 1024);
  CHECK(std::abs(j["mean_local_dim"].get<double>() - 1.0) <= 1e-9);
}

TEST_CASE("exit codes") {
  std::ostringstream out, err;
  RunConfig cfg = base_config("/definitely/not/here.json", RunConfig::Command::solve);
  CHECK(run(cfg, out, err) == 1);

  const auto bad = write_temp("mfa_cli_bad.json", R"({"m": 2, "phi": [[1, 2], [3]]})");
  CHECK(run(base_config(bad, RunConfig::Command::solve), out, err) == 1);

  const auto constant =
      write_temp("mfa_cli_const.json", R"({"m": 2, "phi": [[1, 1], [1, 1]]})");
  CHECK(run(base_config(constant, RunConfig::Command::spectrum), out, err) == 1);
  CHECK(run(base_config(constant, RunConfig::Command::solve), out, err) == 0);

  // finv on a matrix-built model is unsupported.
  const auto matrix = write_temp("mfa_cli_matrix.json", R"({"m": 2, "phi": [[0, 0], [0, 1]]})");
  RunConfig finv_cfg = base_config(matrix, RunConfig::Command::finv);
  finv_cfg.alpha = 0.25;
  CHECK(run(finv_cfg, out, err) == 1);

  CHECK(run(base_config(matrix, RunConfig::Command::verify), out, err) == 0);

  // Bad grid parameters.
  RunConfig grid_cfg = base_config(matrix, RunConfig::Command::pressure);
  grid_cfg.steps = 1;
  CHECK(run(grid_cfg, out, err) == 1);
  grid_cfg.steps = 11;
  grid_cfg.s_min = 2.0;
  grid_cfg.s_max = -2.0;
  CHECK(run(grid_cfg, out, err) == 1);

  // LLN horizon must be a power of two >= 1024.
  RunConfig sample_cfg = base_config(matrix, RunConfig::Command::sample);
  sample_cfg.n = 1000;
  CHECK(run(sample_cfg, out, err) == 1);

  RunConfig curve_cfg = base_config(matrix, RunConfig::Command::spectrum);
  curve_cfg.alpha_steps = 2;
  CHECK(run(curve_cfg, out, err) == 1);
}

TEST_CASE("atomic output and library-level determinism") {
  const auto model = write_temp("mfa_cli_ex1.json", kEx1);
  const auto out_path = std::filesystem::temp_directory_path() / "mfa_cli_spec.csv";
  RunConfig cfg = base_config(model, RunConfig::Command::spectrum);
  cfg.alpha_steps = 41;
  cfg.out = out_path.string();
  std::ostringstream out, err;
  REQUIRE(run(cfg, out, err) == 0);
  CHECK(out.str().empty());  // payload went to the file
  const std::string first = read_file(out_path);
  REQUIRE(run(cfg, out, err) == 0);
  CHECK(read_file(out_path) == first);
  CHECK_FALSE(std::filesystem::exists(out_path.string() + ".tmp"));
  std::filesystem::remove(out_path);
}

TEST_CASE("binary runs are byte-identical") {
  const auto model = write_temp("mfa_cli_ex1.json", kEx1);
  const auto out_a = std::filesystem::temp_directory_path() / "mfa_bin_a.csv";
  const auto out_b = std::filesystem::temp_directory_path() / "mfa_bin_b.csv";
  const std::string base = std::string(MFSPEC_PATH) + " spectrum --model " + model.string() +
                           " --alpha-steps 51 --out ";
  REQUIRE(std::system((base + out_a.string()).c_str()) == 0);
  REQUIRE(std::system((base + out_b.string()).c_str()) == 0);
  CHECK(read_file(out_a) == read_file(out_b));
  CHECK_FALSE(read_file(out_a).empty());
  std::filesystem::remove(out_a);
  std::filesystem::remove(out_b);
}

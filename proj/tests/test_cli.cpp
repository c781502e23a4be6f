// Integration tests driving the installed CLI binary (path injected by
// CMake as WVA_CLI_PATH).
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

namespace {

namespace fs = std::filesystem;

struct RunResult {
  int exit_code;
  std::string output;  // stdout only
};

RunResult run_cli(const std::string& args) {
  const fs::path dir = fs::temp_directory_path() / "wva_cli_test";
  fs::create_directories(dir);
  const fs::path out_file = dir / "stdout.txt";
  const std::string cmd =
      std::string(WVA_CLI_PATH) + " " + args + " > " + out_file.string() + " 2>/dev/null";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_file);
  std::stringstream buf;
  buf << in.rdbuf();
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return RunResult{code, buf.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE(in.good());
  std::stringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

fs::path temp_path(const std::string& name) {
  const fs::path dir = fs::temp_directory_path() / "wva_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

struct Csv {
  std::vector<std::string> columns;
  std::vector<std::vector<double>> rows;
};

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<std::string> fields;
    std::istringstream ls(line);
    std::string field;
    while (std::getline(ls, field, ',')) fields.push_back(field);
    if (csv.columns.empty()) {
      csv.columns = fields;
      continue;
    }
    std::vector<double> row;
    for (const auto& f : fields) row.push_back(std::stod(f));
    csv.rows.push_back(row);
  }
  return csv;
}

}  // namespace

TEST_CASE("simulate: tau = 0 gives zero shift and sin^2(eps) probability") {
  const RunResult r = run_cli("simulate --tau 0 --epsilon 0.01");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("\"shift_rads\": 0.0") != std::string::npos);
  CHECK(r.output.find("9.99966667111108e-05") != std::string::npos);
  CHECK(r.output.find("\"amplification_factor\": null") != std::string::npos);
}

TEST_CASE("simulate: out-of-regime runs are flagged nonlinear") {
  const RunResult r = run_cli("simulate --tau 10 --epsilon 0.01");
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("\"label\": \"nonlinear\"") != std::string::npos);

  const RunResult weak = run_cli("simulate --tau 0.01 --epsilon 0.01");
  REQUIRE(weak.exit_code == 0);
  CHECK(weak.output.find("\"label\": \"weak\"") != std::string::npos);
}

TEST_CASE("malformed config keys exit with the config code and name the key") {
  const fs::path cfg = temp_path("bad.cfg");
  std::ofstream(cfg) << "epsilon_rad = 0.01\nnot_a_real_key = 3\n";
  const fs::path err_file = temp_path("stderr.txt");
  const std::string cmd = std::string(WVA_CLI_PATH) + " simulate --config " +
                          cfg.string() + " 2> " + err_file.string() + " > /dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 2);
  const std::string err = slurp(err_file);
  CHECK(err.find("config_error") != std::string::npos);
  CHECK(err.find("not_a_real_key") != std::string::npos);
}

TEST_CASE("config file values are applied and flags override them") {
  const fs::path cfg = temp_path("ok.cfg");
  std::ofstream(cfg) << "# comment line\nepsilon_rad = 0.05\ntau_as = 2\n";
  const RunResult from_file = run_cli("simulate --config " + cfg.string());
  REQUIRE(from_file.exit_code == 0);
  CHECK(from_file.output.find("\"epsilon_rad\": 0.05") != std::string::npos);
  const RunResult overridden =
      run_cli("simulate --config " + cfg.string() + " --epsilon 0.2");
  REQUIRE(overridden.exit_code == 0);
  CHECK(overridden.output.find("\"epsilon_rad\": 0.2") != std::string::npos);
}

TEST_CASE("figure2 output satisfies its row contracts") {
  const fs::path out = temp_path("fig2.csv");
  const RunResult r = run_cli("figure2 --out " + out.string());
  REQUIRE(r.exit_code == 0);
  const Csv csv = parse_csv(slurp(out));
  REQUIRE(csv.columns.size() == 4);
  CHECK(csv.columns[0] == "tau_s");
  REQUIRE(csv.rows.size() > 400);

  // First row is tau = 0: T = sin^2(0.01).
  CHECK(csv.rows.front()[0] == 0.0);
  CHECK(csv.rows.front()[1] == doctest::Approx(9.99966667e-5).epsilon(1e-8));

  // Closed form vs quadrature column agreement on every row.
  for (const auto& row : csv.rows) {
    CHECK(std::abs(row[1] - row[2]) < 1e-10);
  }
}

TEST_CASE("figure3 panels reproduce the trend orderings") {
  const fs::path prefix = temp_path("fig3");
  const RunResult r = run_cli("figure3 --out " + prefix.string());
  REQUIRE(r.exit_code == 0);

  // Panel (a): at fixed small tau the smallest epsilon amplifies most.
  const Csv a = parse_csv(slurp(prefix.string() + "_a.csv"));
  REQUIRE(a.columns.size() == 4);
  for (const auto& row : a.rows) {
    if (row[0] <= 0.0 || row[0] > 3e-19) continue;  // weak-regime rows
    CHECK(row[1] > row[2]);
    CHECK(row[2] > row[3]);
  }

  // Panel (b): at fixed small tau the widest spectrum amplifies most.
  const Csv b = parse_csv(slurp(prefix.string() + "_b.csv"));
  for (const auto& row : b.rows) {
    if (row[0] <= 0.0 || row[0] > 3e-19) continue;
    CHECK(row[3] > row[2]);
    CHECK(row[2] > row[1]);
  }

  // Panel (c) golden value: gain at 10 as, 100 nm, eps = 0.01.
  const Csv c = parse_csv(slurp(prefix.string() + "_c.csv"));
  REQUIRE(c.columns.size() == 4);
  CHECK(c.columns[1] == "gain_eps0.01");
  const auto& last = c.rows.back();
  CHECK(last[0] == 100.0);
  CHECK(last[1] == doctest::Approx(23.952710485454801).epsilon(1e-15));
  CHECK(last[1] > 0.2 * 99.996666644444218);
  CHECK(last[1] < 1.0 * 99.996666644444218);
}

TEST_CASE("estimate reports are byte-identical for a fixed seed") {
  const fs::path out1 = temp_path("est1.json");
  const fs::path out2 = temp_path("est2.json");
  const std::string args =
      "estimate --seed 99 --n-trials 32 --tau 0.2 --photon-budget 1e6 --out ";
  REQUIRE(run_cli(args + out1.string()).exit_code == 0);
  REQUIRE(run_cli(args + out2.string() + " --serial").exit_code == 0);
  CHECK(slurp(out1) == slurp(out2));
}

TEST_CASE("invalid physical fields are rejected at parse time") {
  const std::string cmd = std::string(WVA_CLI_PATH) +
                          " simulate --spectral-width-nm 700"
                          " > /dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 2);
}

TEST_CASE("physics-level failures exit with the runtime code and error name") {
  // tau = 0 with eps = 0 annihilates the postselected spectrum.
  const fs::path err_file = temp_path("stderr_runtime.txt");
  const std::string cmd = std::string(WVA_CLI_PATH) +
                          " simulate --tau 0 --epsilon 0 2> " + err_file.string() +
                          " > /dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 3);
  CHECK(slurp(err_file).find("zero_postselection") != std::string::npos);
}

TEST_CASE("unwritable output paths exit with the io code") {
  const std::string cmd = std::string(WVA_CLI_PATH) +
                          " figure2 --out /proc/definitely/not/writable.csv"
                          " > /dev/null 2>/dev/null";
  const int status = std::system(cmd.c_str());
  REQUIRE(WIFEXITED(status));
  CHECK(WEXITSTATUS(status) == 4);
}

// End-to-end checks of the command-line tool: output values, file formats
// and the exit-code contract. The binary path comes from the build system.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "anorm/matrix_io.hpp"
#include "anorm/repro.hpp"

namespace {

struct RunResult {
  int exit_code;
  std::string output;
};

RunResult run_cli(const std::string& args) {
  const std::string out_path = "cli_test_output.txt";
  const std::string cmd =
      std::string(ANORM_CLI_PATH) + " " + args + " > " + out_path + " 2>&1";
  const int status = std::system(cmd.c_str());
  std::ifstream in(out_path);
  std::stringstream buf;
  buf << in.rdbuf();
  std::remove(out_path.c_str());
  int code = -1;
  if (WIFEXITED(status)) code = WEXITSTATUS(status);
  return {code, buf.str()};
}

std::string write_temp(const std::string& name, const std::string& text) {
  std::ofstream out(name);
  out << text;
  return name;
}

std::vector<std::string> split_lines(const std::string& s) {
  std::vector<std::string> lines;
  std::stringstream ss(s);
  std::string line;
  while (std::getline(ss, line)) lines.push_back(line);
  return lines;
}

const std::string kAPath = write_temp(
    "cli_a.json", anorm::write_matrix_file(anorm::example_weight()));
const std::string kTPath = write_temp(
    "cli_t.json", anorm::write_matrix_file(anorm::example_operator()));

}  // namespace

TEST_CASE("cli: repro exits 0 and matches every row") {
  const RunResult r = run_cli("repro");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("MISMATCH") == std::string::npos);
  CHECK(r.output.find("2.875000000000") != std::string::npos);
  CHECK(r.output.find("2.191175490326") != std::string::npos);
}

TEST_CASE("cli: compute prints the worked example seminorms") {
  const RunResult r =
      run_cli("compute --A " + kAPath + " --T " + kTPath + " --alpha 1");
  CHECK(r.exit_code == 0);
  bool saw_radius = false, saw_norm = false;
  for (const std::string& line : split_lines(r.output)) {
    if (line.find("a_numerical_radius") != std::string::npos) {
      saw_radius = true;
      CHECK(line.find("1.224744871392") != std::string::npos);
    }
    if (line.find("a_operator_norm") != std::string::npos) {
      saw_norm = true;
      CHECK(line.find("2.000000000000") != std::string::npos);
    }
  }
  CHECK(saw_radius);
  CHECK(saw_norm);
}

TEST_CASE("cli: compute at alpha 0 reports the operator seminorm") {
  const RunResult r =
      run_cli("compute --A " + kAPath + " --T " + kTPath + " --alpha 0");
  CHECK(r.exit_code == 0);
  for (const std::string& line : split_lines(r.output))
    if (line.find("alpha_seminorm") != std::string::npos)
      CHECK(line.find("2.000000000000") != std::string::npos);
}

TEST_CASE("cli: identity weight and operator give unit seminorms") {
  const std::string id = write_temp(
      "cli_id.json",
      anorm::write_matrix_file(anorm::ComplexMatrix::identity(3)));
  const RunResult r =
      run_cli("compute --A " + id + " --T " + id + " --alpha 0.5");
  CHECK(r.exit_code == 0);
  int unit_lines = 0;
  for (const std::string& line : split_lines(r.output))
    if (line.find("1.000000000000") != std::string::npos) ++unit_lines;
  CHECK(unit_lines >= 3);  // operator norm, radius, alpha seminorm
  std::remove(id.c_str());
}

TEST_CASE("cli: exit codes follow the contract") {
  CHECK(run_cli("compute --A missing.json --T also_missing.json --alpha 0.5")
            .exit_code == 4);

  const std::string bad = write_temp("cli_bad.json", "{ not json");
  CHECK(run_cli("compute --A " + bad + " --T " + kTPath + " --alpha 0.5")
            .exit_code == 2);
  std::remove(bad.c_str());

  const std::string indef = write_temp(
      "cli_indef.json",
      anorm::write_matrix_file(
          anorm::ComplexMatrix::diagonal({1.0, -1.0, 1.0})));
  CHECK(run_cli("compute --A " + indef + " --T " + kTPath + " --alpha 0.5")
            .exit_code == 3);
  std::remove(indef.c_str());

  CHECK(run_cli("compute --A " + kAPath + " --T " + kTPath + " --alpha 1.5")
            .exit_code == 3);
  CHECK(run_cli("compute --A " + kAPath).exit_code == 2);
  CHECK(run_cli("sweep --A " + kAPath + " --T " + kTPath +
                " --from 0 --to 1 --step 0.5 --out /no/such/dir/x.csv")
            .exit_code == 4);
}

TEST_CASE("cli: sweep produces the expected grid and frozen column value") {
  const std::string csv = "cli_sweep.csv";
  const RunResult r = run_cli("sweep --A " + kAPath + " --T " + kTPath +
                              " --from 0 --to 1 --step 0.125 --out " + csv);
  REQUIRE(r.exit_code == 0);
  std::ifstream in(csv);
  std::string header;
  std::getline(in, header);
  CHECK(header.find("alpha,alpha_seminorm,envelope") == 0);
  std::vector<std::vector<std::string>> rows;
  std::string line;
  while (std::getline(in, line)) {
    std::vector<std::string> cells;
    std::stringstream ss(line);
    std::string cell;
    while (std::getline(ss, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  REQUIRE(rows.size() == 9);  // 0, 0.125, ..., 1.0

  double prev = -1.0;
  for (const auto& cells : rows) {
    const double a = std::stod(cells[0]);
    CHECK(a > prev);
    prev = a;
    CHECK(a <= 1.0);
  }
  // alpha = 0.875 row, cartesian_upper column (index 5) reads 23/8.
  CHECK(rows[7][0].find("0.875") == 0);
  CHECK(rows[7][5] == "2.875000000000");
  // alpha = 0 row: alpha_seminorm column equals the operator norm column.
  CHECK(rows[0][1] == rows[0][3]);
  std::remove(csv.c_str());
}

TEST_CASE("cli: check is deterministic and clean on a small campaign") {
  const std::string args = "check --trials 5 --dim 2 --seed 11";
  const RunResult r1 = run_cli(args);
  const RunResult r2 = run_cli(args);
  CHECK(r1.exit_code == 0);
  CHECK(r1.output == r2.output);
  CHECK(r1.output.find("violation=0") != std::string::npos);

  const RunResult filtered =
      run_cli("check --trials 2 --dim 2 --seed 3 --theorems EQUIV_W,BUZANO");
  CHECK(filtered.exit_code == 0);
  CHECK(filtered.output.find("EQUIV_W") != std::string::npos);
  CHECK(filtered.output.find("CARTESIAN_UPPER") == std::string::npos);

  CHECK(run_cli("check --trials 1 --dim 2 --theorems NOPE").exit_code == 2);
  const RunResult empty = run_cli("check --trials 0 --dim 3 --seed 1");
  CHECK(empty.exit_code == 0);
  CHECK(empty.output.find("trials_run=0") != std::string::npos);
}

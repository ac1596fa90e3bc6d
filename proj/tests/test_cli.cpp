// End-to-end checks of the installed command surface: headers, row contents,
// exit codes, option exclusions, config files, and the CSV round-trip
// guarantee. The binary path arrives in the SXX_CLI environment variable.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "sxx.h"

namespace {

struct RunResult {
  int exit_code = -1;
  std::string out;
};

RunResult run(const std::string& args) {
  const char* cli = std::getenv("SXX_CLI");
  REQUIRE_MESSAGE(cli != nullptr, "SXX_CLI must point at the sxx binary");
  RunResult r;
  const std::string cmd = std::string(cli) + " " + args + " 2>/dev/null";
  std::FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t n = 0;
  while ((n = std::fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::vector<std::string> lines(const std::string& text) {
  std::vector<std::string> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(line);
  return out;
}

std::vector<std::string> cells(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream in(line);
  std::string cell;
  while (std::getline(in, cell, ',')) out.push_back(cell);
  return out;
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("witness-scan: header, zero-field row, count-1 sweep") {
  const RunResult r = run("witness-scan --J 1 --B 0:2:5 --b 0 --T 0");
  CHECK(r.exit_code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 6);
  CHECK(rows[0] == "J,B,b,T,W,witnessed");
  const auto first = cells(rows[1]);
  REQUIRE(first.size() == 6);
  CHECK(first[1] == "0");
  CHECK(first[3] == "0");  // T = 0 printed as the literal 0
  CHECK(std::abs(std::stod(first[4]) - 4.0 / std::numbers::pi) < 1e-8);
  CHECK(first[5] == "1");

  const RunResult single = run("witness-scan --J 1 --B 0 --b 0 --T 2");
  const auto srows = lines(single.out);
  REQUIRE(srows.size() == 2);  // header + exactly one data row
  CHECK(cells(srows[1])[5] == "0");
}

TEST_CASE("witness-scan rows recompute bit-identically (CSV round trip)") {
  const RunResult r = run("witness-scan --J 1.1 --B 0:1.7:7 --b 0.3:0.9:3 --T 0:2:3");
  CHECK(r.exit_code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 1 + 7 * 3 * 3);
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto c = cells(rows[i]);
    REQUIRE(c.size() == 6);
    const double J = std::stod(c[0]), B = std::stod(c[1]), b = std::stod(c[2]),
                 t = std::stod(c[3]);
    double w = 0.0;
    REQUIRE(sxx_witness_thermo(J, B, b, t, &w) == SXX_OK);
    CHECK(fmt17(w) == c[4]);
    int witnessed = 0;
    REQUIRE(sxx_classify_point(J, B, b, t, &witnessed) == SXX_OK);
    CHECK(c[5] == (witnessed ? "1" : "0"));
  }
}

TEST_CASE("entropy-scan: schema, parity column, finite-T refusal") {
  const RunResult r = run("entropy-scan --J 1 --B 0:1:3 --b 0.5 --parity both");
  CHECK(r.exit_code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 1 + 3 * 2);
  CHECK(rows[0] == "J,B,b,parity,eta,S");
  CHECK(cells(rows[1])[3] == "even");
  CHECK(cells(rows[2])[3] == "odd");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto c = cells(rows[i]);
    double eta = 0.0, S = 0.0;
    REQUIRE(sxx_site_entropy(std::stod(c[0]), std::stod(c[1]), std::stod(c[2]),
                             c[3] == "even" ? SXX_SITE_EVEN : SXX_SITE_ODD, 0.0, &eta,
                             &S) == SXX_OK);
    CHECK(fmt17(eta) == c[4]);
    CHECK(fmt17(S) == c[5]);
  }

  CHECK(run("entropy-scan --T 0.5").exit_code == 2);
  CHECK(run("entropy-scan --beta 10").exit_code == 2);
  CHECK(run("entropy-scan --T 0").exit_code == 0);
  CHECK(run("entropy-scan --parity sideways").exit_code == 2);
}

TEST_CASE("boundary: found and not-found rows") {
  const RunResult r = run("boundary --J 1 --b 0:0.8:2 --T 0");
  CHECK(r.exit_code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 3);
  CHECK(rows[0] == "J,b,T,found,B_star");
  const auto found_row = cells(rows[1]);
  CHECK(found_row[3] == "1");
  CHECK(std::abs(std::stod(found_row[4]) -
                 std::sqrt(1.0 - std::numbers::pi * std::numbers::pi / 16.0)) < 1e-6);
  const auto missing_row = cells(rows[2]);
  CHECK(missing_row[3] == "0");
  CHECK(missing_row[4] == "nan");
}

TEST_CASE("bc prints six digits and respects scale invariance") {
  const RunResult r1 = run("bc --J 1");
  CHECK(r1.exit_code == 0);
  const double bc1 = std::stod(r1.out);
  CHECK(std::abs(bc1 - 0.56) <= 0.005);
  CHECK(lines(r1.out)[0].find('.') != std::string::npos);
  CHECK(lines(r1.out)[0].size() == 8);  // "0.xxxxxx"

  const RunResult r2 = run("bc --J 2");
  CHECK(std::abs(std::stod(r2.out) - 2.0 * bc1) <= 1e-5);
}

TEST_CASE("fig3 preset covers J in {0.5, 1, 2} and stays inside the band") {
  const RunResult r = run("fig3 --b 0.5:2:4");
  CHECK(r.exit_code == 0);
  const auto rows = lines(r.out);
  REQUIRE(rows.size() == 1 + 3 * 4);
  CHECK(rows[0] == "J,b,B_peak,epsilon");
  for (std::size_t i = 1; i < rows.size(); ++i) {
    const auto c = cells(rows[i]);
    const double J = std::stod(c[0]), b = std::stod(c[1]), B_peak = std::stod(c[2]),
                 eps = std::stod(c[3]);
    CHECK(b < B_peak);
    CHECK(B_peak <= std::sqrt(J * J + b * b) + 1e-12);
    CHECK(eps == doctest::Approx(B_peak - b).epsilon(1e-15));
  }
  CHECK(cells(rows[1])[0] == "0.5");
  CHECK(cells(rows[5])[0] == "1");
  CHECK(cells(rows[9])[0] == "2");
}

TEST_CASE("check: passes at default tolerances, fails when corrupted") {
  const RunResult ok = run("check --cases 3 --seed 7");
  CHECK(ok.exit_code == 0);
  CHECK(ok.out.find("all checks passed") != std::string::npos);

  const RunResult bad = run("check --cases 3 --seed 7 --tol-scale 1e-9");
  CHECK(bad.exit_code == 1);
  CHECK(bad.out.find("FAIL") != std::string::npos);
}

TEST_CASE("usage errors exit with code 2") {
  CHECK(run("witness-scan --B 1:0:5").exit_code == 2);
  CHECK(run("witness-scan --B 0:1:0").exit_code == 2);
  CHECK(run("witness-scan --B abc").exit_code == 2);
  CHECK(run("witness-scan --T 1 --beta 2").exit_code == 2);
  CHECK(run("witness-scan --T -1").exit_code == 2);
  CHECK(run("no-such-command").exit_code == 2);
  CHECK(run("--help").exit_code == 0);
}

TEST_CASE("--beta is an alternative spelling of finite T") {
  const RunResult via_beta = run("witness-scan --J 1 --B 0.4 --b 0.2 --beta 2");
  const RunResult via_t = run("witness-scan --J 1 --B 0.4 --b 0.2 --T 0.5");
  CHECK(via_beta.exit_code == 0);
  const auto row_beta = cells(lines(via_beta.out)[1]);
  const auto row_t = cells(lines(via_t.out)[1]);
  CHECK(row_beta[4] == row_t[4]);
}

TEST_CASE("config file mirrors flags, flags win") {
  const std::string path = "/tmp/sxx_cli_test_config.ini";
  {
    std::ofstream cfg(path);
    cfg << "J=2\nB=0.5\nb=0\nT=0\n";
  }
  const RunResult from_cfg = run("witness-scan --config " + path);
  CHECK(from_cfg.exit_code == 0);
  const auto row = cells(lines(from_cfg.out)[1]);
  CHECK(row[0] == "2");
  CHECK(row[1] == "0.5");

  const RunResult overridden = run("witness-scan --config " + path + " --J 1");
  const auto row2 = cells(lines(overridden.out)[1]);
  CHECK(row2[0] == "1");
  std::remove(path.c_str());
}

TEST_CASE("--out writes the same bytes as stdout") {
  const std::string path = "/tmp/sxx_cli_test_out.csv";
  const RunResult to_stdout = run("entropy-scan --B 0:2:3 --b 1 --parity odd");
  const RunResult to_file = run("entropy-scan --B 0:2:3 --b 1 --parity odd --out " + path);
  CHECK(to_file.exit_code == 0);
  std::ifstream in(path);
  std::stringstream sink;
  sink << in.rdbuf();
  CHECK(sink.str() == to_stdout.out);
  std::remove(path.c_str());
}

}  // TEST_SUITE

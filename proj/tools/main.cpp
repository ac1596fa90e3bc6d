// Command-line front end over the C API: parameter scans, phase-boundary and
// maximal-entropy curve extraction, and the oracle-vs-analytic self-check.
// Exit codes: 0 success, 1 self-check/internal failure, 2 usage error.

#include <cmath>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "sxx.h"
#include "table.hpp"

namespace {

// key=value config file mirroring the subcommand's flags; values apply only
// to options not already given on the command line (flags win). '#' and ';'
// start comments.
void apply_config(CLI::App* cmd, const std::string& path) {
  std::ifstream in(path);
  if (!in) throw cli::usage_error("cannot read config file: " + path);
  std::string line;
  int lineno = 0;
  const auto trim = [](std::string s) {
    const auto from = s.find_first_not_of(" \t\r");
    const auto to = s.find_last_not_of(" \t\r");
    return from == std::string::npos ? std::string() : s.substr(from, to - from + 1);
  };
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#' || line[0] == ';') continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw cli::usage_error(path + ":" + std::to_string(lineno) +
                             ": expected key=value");
    const std::string key = trim(line.substr(0, eq));
    const std::string value = trim(line.substr(eq + 1));
    CLI::Option* op = cmd->get_option_no_throw("--" + key);
    if (!op || key == "config")
      throw cli::usage_error(path + ":" + std::to_string(lineno) + ": unknown key '" +
                             key + "' for subcommand " + cmd->get_name());
    if (op->count() > 0) continue;
    op->add_result(value);
    op->run_callback();
  }
}

[[noreturn]] void fail(sxx_status status, const std::string& where) {
  throw std::runtime_error(where + ": " + sxx_status_message(status));
}

double call1(sxx_status (*fn)(double, double, double, double, double*),
             double J, double B, double b, double t, const std::string& where) {
  double out = 0.0;
  if (const sxx_status s = fn(J, B, b, t, &out); s != SXX_OK) fail(s, where);
  return out;
}

// Temperatures for a subcommand: --T (0 means the exact T = 0 variant) or
// --beta (> 0, finite only); the two are mutually exclusive.
std::vector<double> temperature_axis(const std::string& t_text,
                                     const std::string& beta_text) {
  if (!beta_text.empty()) {
    std::vector<double> out;
    for (double beta : cli::parse_range(beta_text, "--beta").expand()) {
      if (beta <= 0.0) throw cli::usage_error("--beta values must be > 0");
      out.push_back(1.0 / beta);
    }
    return out;
  }
  auto out = cli::parse_range(t_text, "--T").expand();
  for (double t : out)
    if (t < 0.0) throw cli::usage_error("--T values must be >= 0");
  return out;
}

struct ParityChoice {
  std::vector<sxx_parity> parities;
  static ParityChoice parse(const std::string& text) {
    if (text == "even") return {{SXX_SITE_EVEN}};
    if (text == "odd") return {{SXX_SITE_ODD}};
    if (text == "both") return {{SXX_SITE_EVEN, SXX_SITE_ODD}};
    throw cli::usage_error("--parity must be even, odd or both");
  }
};

int cmd_witness_scan(double J, const std::string& B_text, const std::string& b_text,
                     const std::string& t_text, const std::string& beta_text,
                     const std::optional<std::string>& out_path) {
  cli::CsvTable table("J,B,b,T,W,witnessed");
  const auto Bs = cli::parse_range(B_text, "--B").expand();
  const auto bs = cli::parse_range(b_text, "--b").expand();
  const auto ts = temperature_axis(t_text, beta_text);
  for (double B : Bs)
    for (double b : bs)
      for (double t : ts) {
        const double w = call1(sxx_witness_thermo, J, B, b, t, "witness");
        int witnessed = 0;
        if (const sxx_status s = sxx_classify_point(J, B, b, t, &witnessed); s != SXX_OK)
          fail(s, "classify");
        table.add_row({cli::fmt(J), cli::fmt(B), cli::fmt(b), cli::fmt(t),
                       cli::fmt(w), witnessed ? "1" : "0"});
      }
  table.write(out_path);
  return 0;
}

int cmd_entropy_scan(double J, const std::string& B_text, const std::string& b_text,
                     const std::string& t_text, const std::string& beta_text,
                     const std::string& parity_text,
                     const std::optional<std::string>& out_path) {
  if (!beta_text.empty())
    throw cli::usage_error(
        "entropy-scan is T = 0 only: the single-site entropy measures "
        "site-chain entanglement of the pure ground state and has no "
        "thermal counterpart here");
  for (double t : cli::parse_range(t_text, "--T").expand())
    if (t != 0.0)
      throw cli::usage_error(
          "entropy-scan is T = 0 only: the single-site entropy measures "
          "site-chain entanglement of the pure ground state and has no "
          "thermal counterpart here (drop --T or pass --T 0)");

  cli::CsvTable table("J,B,b,parity,eta,S");
  const auto parities = ParityChoice::parse(parity_text).parities;
  for (double B : cli::parse_range(B_text, "--B").expand())
    for (double b : cli::parse_range(b_text, "--b").expand())
      for (sxx_parity parity : parities) {
        double eta = 0.0, entropy = 0.0;
        if (const sxx_status s = sxx_site_entropy(J, B, b, parity, 0.0, &eta, &entropy);
            s != SXX_OK)
          fail(s, "site entropy");
        table.add_row({cli::fmt(J), cli::fmt(B), cli::fmt(b),
                       parity == SXX_SITE_EVEN ? "even" : "odd", cli::fmt(eta),
                       cli::fmt(entropy)});
      }
  table.write(out_path);
  return 0;
}

int cmd_boundary(double J, const std::string& b_text, const std::string& t_text,
                 const std::string& beta_text, const std::optional<std::string>& out_path) {
  if (!(J > 0.0)) throw cli::usage_error("boundary needs --J > 0");
  cli::CsvTable table("J,b,T,found,B_star");
  for (double b : cli::parse_range(b_text, "--b").expand())
    for (double t : temperature_axis(t_text, beta_text)) {
      int found = 0;
      double B_star = 0.0;
      if (const sxx_status s = sxx_witness_boundary_field(J, b, t, &found, &B_star, nullptr);
          s != SXX_OK)
        fail(s, "boundary");
      table.add_row({cli::fmt(J), cli::fmt(b), cli::fmt(t), found ? "1" : "0",
                     found ? cli::fmt(B_star) : "nan"});
    }
  table.write(out_path);
  return 0;
}

int cmd_bc(double J, double tol) {
  if (!(J > 0.0)) throw cli::usage_error("bc needs --J > 0");
  if (!(tol >= 1e-8)) throw cli::usage_error("bc needs --tol >= 1e-8");
  double bc = 0.0;
  if (const sxx_status s = sxx_critical_staggered_field(J, tol, &bc); s != SXX_OK)
    fail(s, "bc");
  std::printf("%.6f\n", bc);
  return 0;
}

int cmd_fig3(const std::vector<double>& Js, const std::string& b_text,
             const std::optional<std::string>& out_path) {
  for (double J : Js)
    if (!(J > 0.0)) throw cli::usage_error("fig3 needs --J values > 0");
  cli::CsvTable table("J,b,B_peak,epsilon");
  for (double J : Js)
    for (double b : cli::parse_range(b_text, "--b").expand()) {
      double B_peak = 0.0, epsilon = 0.0;
      if (const sxx_status s =
              sxx_max_entropy_field(J, b, SXX_SITE_ODD, &B_peak, &epsilon, nullptr);
          s != SXX_OK)
        fail(s, "fig3");
      table.add_row({cli::fmt(J), cli::fmt(b), cli::fmt(B_peak), cli::fmt(epsilon)});
    }
  table.write(out_path);
  return 0;
}

// Deterministic uniforms from raw mt19937_64 bits; identical draws on every
// platform for a given seed.
class Uniform {
 public:
  explicit Uniform(std::uint64_t seed) : rng_(seed) {}
  double in(double lo, double hi) {
    return lo + (hi - lo) * (static_cast<double>(rng_() >> 11) * 0x1p-53);
  }

 private:
  std::mt19937_64 rng_;
};

struct Deviation {
  const char* name;
  double tol;
  double worst = 0.0;
  double worst_J = 0.0, worst_B = 0.0, worst_b = 0.0, worst_T = 0.0;
  int worst_n = 0;

  void update(double value, double J, double B, double b, double T, int n) {
    if (value > worst) {
      worst = value;
      worst_J = J;
      worst_B = B;
      worst_b = b;
      worst_T = T;
      worst_n = n;
    }
  }

  bool report(double tol_scale) const {
    const double limit = tol * tol_scale;
    const bool ok = worst <= limit;
    std::printf("%-28s max |dev| = %.3e  (tol %.1e)  %s\n", name, worst, limit,
                ok ? "ok" : "FAIL");
    if (!ok)
      std::printf("  at J=%.17g B=%.17g b=%.17g T=%.17g N=%d\n", worst_J, worst_B,
                  worst_b, worst_T, worst_n);
    return ok;
  }
};

int cmd_check(std::uint64_t seed, int cases, double tol_scale) {
  if (cases < 1) throw cli::usage_error("--cases must be >= 1");
  Uniform u(seed);

  Deviation d_lnz{"lnZ (oracle vs fermion)", 1e-9};
  Deviation d_w{"W (oracle vs fermion)", 1e-8};
  Deviation d_m{"M (oracle vs fermion)", 1e-8};
  Deviation d_ms{"M_s (oracle vs fermion)", 1e-8};
  Deviation d_e0{"E0 (oracle vs fermion)", 1e-9};
  Deviation d_fd_w{"W derivative closure", 1e-6};
  Deviation d_fd_m{"M derivative closure", 1e-6};
  Deviation d_fd_ms{"M_s derivative closure", 1e-6};
  Deviation d_j0{"J = 0 witness (exact zero)", 0.0};

  const auto ck = [](sxx_status s) {
    if (s != SXX_OK) fail(s, "check");
  };
  const auto check_point = [&](double J, double B, double b, double T, int n) {
    sxx_oracle* oracle = nullptr;
    ck(sxx_oracle_create(J, B, b, n, &oracle));

    double got = 0.0, want = 0.0;
    ck(sxx_oracle_log_partition(oracle, T, &want));
    ck(sxx_log_partition_finite(J, B, b, n, T, &got));
    d_lnz.update(std::abs(got - want), J, B, b, T, n);

    ck(sxx_oracle_witness(oracle, T, &want));
    ck(sxx_witness_finite(J, B, b, n, T, &got));
    d_w.update(std::abs(got - want), J, B, b, T, n);

    double m_sum = 0.0, ms_sum = 0.0;
    for (int l = 1; l <= n; ++l) {
      double sz = 0.0;
      ck(sxx_oracle_site_magnetization(oracle, T, l, &sz));
      m_sum += sz;
      ms_sum += (l % 2 == 1 ? -1.0 : 1.0) * sz;
    }
    ck(sxx_magnetization_finite(J, B, b, n, T, &got));
    d_m.update(std::abs(got - m_sum), J, B, b, T, n);
    ck(sxx_staggered_magnetization_finite(J, B, b, n, T, &got));
    d_ms.update(std::abs(got - ms_sum), J, B, b, T, n);

    ck(sxx_oracle_ground_energy(oracle, &want));
    ck(sxx_ground_energy_finite(J, B, b, n, &got));
    d_e0.update(std::abs(got - want), J, B, b, T, n);

    sxx_oracle_free(oracle);
  };

  std::printf("oracle vs fermion: N in {2,4,6,8}, %d cases each\n", cases);
  for (int n : {2, 4, 6, 8})
    for (int i = 0; i < cases; ++i)
      check_point(u.in(0.2, 2.0), u.in(0.0, 2.0), u.in(0.0, 2.0), u.in(0.1, 5.0), n);

  // J = 0 pins: both routes must give a bitwise-zero witness
  for (int i = 0; i < 4; ++i) {
    const double B = u.in(0.0, 2.0), b = u.in(0.0, 2.0), T = u.in(0.1, 5.0);
    double w_f = 0.0, w_o = 0.0;
    ck(sxx_witness_finite(0.0, B, b, 6, T, &w_f));
    sxx_oracle* oracle = nullptr;
    ck(sxx_oracle_create(0.0, B, b, 6, &oracle));
    ck(sxx_oracle_witness(oracle, T, &w_o));
    sxx_oracle_free(oracle);
    d_j0.update(std::max(std::abs(w_f), std::abs(w_o)), 0.0, B, b, T, 6);
  }

  // derivative closure: analytic derivatives vs central differences of lnZ,
  // finite chain (N = 6) and thermodynamic limit
  const double h = 1e-5;
  for (int i = 0; i < cases; ++i) {
    const double J = u.in(0.2, 2.0), B = u.in(0.0, 2.0), b = u.in(0.05, 2.0);
    const double T = u.in(0.1, 5.0);
    const int n = 6;

    double lp = 0.0, lm = 0.0, got = 0.0;
    ck(sxx_log_partition_finite(J + h, B, b, n, T, &lp));
    ck(sxx_log_partition_finite(J - h, B, b, n, T, &lm));
    ck(sxx_witness_finite(J, B, b, n, T, &got));
    d_fd_w.update(std::abs(got - 2.0 * T / n * (lp - lm) / (2 * h)), J, B, b, T, n);

    ck(sxx_log_partition_finite(J, B + h, b, n, T, &lp));
    ck(sxx_log_partition_finite(J, B - h, b, n, T, &lm));
    ck(sxx_magnetization_finite(J, B, b, n, T, &got));
    d_fd_m.update(std::abs(got - T * (lp - lm) / (2 * h)), J, B, b, T, n);

    ck(sxx_log_partition_finite(J, B, b + h, n, T, &lp));
    ck(sxx_log_partition_finite(J, B, b - h, n, T, &lm));
    ck(sxx_staggered_magnetization_finite(J, B, b, n, T, &got));
    d_fd_ms.update(std::abs(got - T * (lp - lm) / (2 * h)), J, B, b, T, n);

    ck(sxx_log_partition_density(J + h, B, b, T, &lp));
    ck(sxx_log_partition_density(J - h, B, b, T, &lm));
    ck(sxx_witness_thermo(J, B, b, T, &got));
    d_fd_w.update(std::abs(got - 2.0 * T * (lp - lm) / (2 * h)), J, B, b, T, 0);

    ck(sxx_log_partition_density(J, B + h, b, T, &lp));
    ck(sxx_log_partition_density(J, B - h, b, T, &lm));
    ck(sxx_magnetization_density(J, B, b, T, &got));
    d_fd_m.update(std::abs(got - T * (lp - lm) / (2 * h)), J, B, b, T, 0);

    ck(sxx_log_partition_density(J, B, b + h, T, &lp));
    ck(sxx_log_partition_density(J, B, b - h, T, &lm));
    ck(sxx_staggered_magnetization_density(J, B, b, T, &got));
    d_fd_ms.update(std::abs(got - T * (lp - lm) / (2 * h)), J, B, b, T, 0);
  }

  std::printf("derivative closure: %d cases, h = %.0e\n", cases, h);
  bool ok = true;
  for (const Deviation* d : {&d_lnz, &d_w, &d_m, &d_ms, &d_e0, &d_fd_w, &d_fd_m,
                             &d_fd_ms, &d_j0})
    ok = d->report(tol_scale) && ok;
  std::printf("%s\n", ok ? "all checks passed" : "CHECK FAILED");
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sxx: exact thermodynamics and entanglement detection for the "
               "staggered-field XX chain"};
  app.require_subcommand(1);
  app.set_version_flag("--version", []() { return std::string(sxx_version()); });

  // shared option storage
  double J = 1.0, tol = 1e-8, tol_scale = 1.0;
  std::string B_text = "0", b_text = "0", t_text = "0", beta_text, parity_text = "both";
  std::string fig3_b_text = "0.1:4:40", config_path;
  std::optional<std::string> out_path;
  std::vector<double> J_list{0.5, 1.0, 2.0};
  std::uint64_t seed = 1;
  int cases = 20;

  const auto add_config = [&](CLI::App* cmd) {
    cmd->add_option("--config", config_path,
                    "key=value file mirroring the flags; flags win");
  };
  const auto add_common = [&](CLI::App* cmd, bool with_T) {
    cmd->add_option("--J", J, "exchange coupling")->capture_default_str();
    cmd->add_option("--B", B_text, "uniform field (value or start:stop:count)")
        ->capture_default_str();
    cmd->add_option("--b", b_text, "staggered field (value or start:stop:count)")
        ->capture_default_str();
    if (with_T) {
      auto* t_opt = cmd->add_option("--T", t_text,
                                    "temperature (0 = exact T = 0 limit; value or range)")
                        ->capture_default_str();
      cmd->add_option("--beta", beta_text, "inverse temperature (> 0; value or range)")
          ->excludes(t_opt);
    }
    cmd->add_option("--out", out_path, "output CSV path (default: stdout)");
    add_config(cmd);
  };

  auto* witness = app.add_subcommand("witness-scan", "witness W over a (B, b, T) grid");
  add_common(witness, true);

  auto* entropy = app.add_subcommand(
      "entropy-scan", "T = 0 single-site occupation and entropy over a (B, b) grid");
  add_common(entropy, true);
  entropy->add_option("--parity", parity_text, "even, odd or both")->capture_default_str();

  auto* boundary = app.add_subcommand(
      "boundary", "outermost B with W = 1 over a (b, T) grid");
  add_common(boundary, true);

  auto* bc = app.add_subcommand("bc", "critical staggered field b_c (W(B=0, b_c) = 1 at T = 0)");
  bc->add_option("--J", J, "exchange coupling")->capture_default_str();
  bc->add_option("--tol", tol, "bisection width in b (>= 1e-8)")->capture_default_str();
  add_config(bc);

  auto* fig3 = app.add_subcommand(
      "fig3", "maximal-entropy curve B_peak(b) of the odd-site entropy");
  fig3->add_option("--J", J_list, "coupling values (comma separated)")
      ->delimiter(',')
      ->capture_default_str();
  fig3->add_option("--b", fig3_b_text, "staggered field range")->capture_default_str();
  fig3->add_option("--out", out_path, "output CSV path (default: stdout)");
  add_config(fig3);

  auto* check = app.add_subcommand(
      "check", "oracle-vs-analytic and derivative-closure self-test");
  check->add_option("--seed", seed, "random seed")->capture_default_str();
  check->add_option("--cases", cases, "cases per suite")->capture_default_str();
  check->add_option("--tol-scale", tol_scale,
                    "scale all tolerances (harness self-test hook)")
      ->capture_default_str();
  add_config(check);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);  // --help / --version
    app.exit(e);
    return 2;
  }

  try {
    CLI::App* active = app.get_subcommands().front();
    if (!config_path.empty()) apply_config(active, config_path);

    if (witness->parsed())
      return cmd_witness_scan(J, B_text, b_text, t_text, beta_text, out_path);
    if (entropy->parsed())
      return cmd_entropy_scan(J, B_text, b_text, t_text, beta_text, parity_text, out_path);
    if (boundary->parsed())
      return cmd_boundary(J, b_text, t_text, beta_text, out_path);
    if (bc->parsed()) return cmd_bc(J, tol);
    if (fig3->parsed()) return cmd_fig3(J_list, fig3_b_text, out_path);
    if (check->parsed()) return cmd_check(seed, cases, tol_scale);
  } catch (const cli::usage_error& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 1;
  }
  return 2;
}

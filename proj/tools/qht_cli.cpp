// Batch front end: load state/channel files, compute bounds and sweeps,
// simulate finite-n tests, and emit CSV/JSON tables.

#include <CLI11.hpp>
#include <cmath>
#include <cstdint>
#include <iostream>
#include <limits>
#include <numbers>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "qht/channels.hpp"
#include "qht/classical_iid.hpp"
#include "qht/helstrom.hpp"
#include "qht/io.hpp"
#include "qht/rng.hpp"

namespace {

constexpr const char* kVersion = "0.1.0";

constexpr int kExitValidation = 2;
constexpr int kExitResource = 3;
constexpr int kExitConsistency = 4;

struct CommonOpts {
  std::string states_file;
  std::string out_file;
  std::uint64_t seed = 0;
  double tol = 1e-10;
  long cap = qht::kDefaultDimCap;
  bool base2 = false;
};

// Log-valued outputs are converted for display only.
double display(double nats, bool base2) {
  return base2 ? nats / std::numbers::ln2 : nats;
}

void add_common(CLI::App* cmd, CommonOpts& opts, bool needs_states = true) {
  auto* states = cmd->add_option("--states", opts.states_file,
                                 "JSON file with rho and sigma");
  if (needs_states) states->required();
  cmd->add_option("--out", opts.out_file, "output file (default: stdout)");
  cmd->add_option("--seed", opts.seed, "RNG seed");
  cmd->add_option("--tol", opts.tol, "numerical tolerance metadata");
  cmd->add_option("--cap", opts.cap, "resource cap (dimension / type count)");
  cmd->add_flag("--base2", opts.base2, "display log quantities in bits");
}

void base_meta(qht::CsvWriter& csv, const CommonOpts& opts) {
  csv.meta("tool_version", kVersion);
  csv.meta("seed", std::to_string(opts.seed));
  csv.meta("tol", opts.tol);
  csv.meta("cap", std::to_string(opts.cap));
  csv.meta("log_base", opts.base2 ? "2" : "e");
}

void emit(const qht::CsvWriter& csv, const CommonOpts& opts) {
  if (opts.out_file.empty()) {
    std::cout << csv.str();
  } else {
    csv.write(opts.out_file);
  }
}

std::string fmt(double x) { return qht::format_double(x); }

int run_bounds(const CommonOpts& opts, int points) {
  const qht::StatePair pair = qht::load_state_pair(opts.states_file);
  const double d_rs = qht::relative_entropy(pair);
  const double d_sr = qht::reverse_relative_entropy(pair);
  if (d_rs <= 1e-12) {
    throw qht::DomainError("degenerate pair: D(rho||sigma) = " +
                           qht::format_double(d_rs) +
                           "; the r-range (0, D] is empty");
  }
  std::vector<double> r_grid(points);
  for (int i = 0; i < points; ++i) r_grid[i] = d_rs * (i + 1) / points;

  struct Row {
    double r, b, bt, a_star, phi, psi;
  };
  std::vector<Row> rows(points);
#pragma omp parallel for schedule(dynamic)
  for (int i = 0; i < points; ++i) {
    const double r = r_grid[i];
    const double a_star = qht::invert_psi(pair, r);
    rows[i] = {r,
               qht::hoeffding_bound(pair, r),
               pair.full_rank() ? qht::b_tilde(pair, r)
                                : std::numeric_limits<double>::quiet_NaN(),
               a_star,
               qht::capital_phi(pair, a_star),
               qht::capital_psi(pair, a_star)};
  }

  qht::CsvWriter csv;
  base_meta(csv, opts);
  csv.meta("D_rho_sigma", display(d_rs, opts.base2));
  csv.meta("D_sigma_rho", display(d_sr, opts.base2));
  csv.columns({"r", "b", "b_tilde", "a_star", "Phi", "Psi"});
  for (const Row& row : rows) {
    csv.row({fmt(display(row.r, opts.base2)), fmt(display(row.b, opts.base2)),
             fmt(display(row.bt, opts.base2)), fmt(display(row.a_star, opts.base2)),
             fmt(display(row.phi, opts.base2)), fmt(display(row.psi, opts.base2))});
  }
  emit(csv, opts);
  return 0;
}

int run_sweep_phi(const CommonOpts& opts, int points) {
  const qht::StatePair pair = qht::load_state_pair(opts.states_file);
  const qht::ExponentProfile profile = qht::sweep_phi(pair, points);
  qht::CsvWriter csv;
  base_meta(csv, opts);
  csv.columns({"quantity", "parameter", "value", "method", "tolerance_flag"});
  for (std::size_t i = 0; i < profile.s_grid.size(); ++i) {
    csv.row({"phi", fmt(profile.s_grid[i]),
             fmt(display(profile.phi_values[i], opts.base2)), "spectral", "ok"});
  }
  if (pair.full_rank()) {
    for (double s : profile.s_grid) {
      csv.row({"phi_tilde", fmt(s),
               fmt(display(qht::phi_tilde(pair, s), opts.base2)), "spectral",
               "ok"});
    }
  }
  csv.row({"phi_slope_at_0", "0", fmt(display(profile.slope_at_zero, opts.base2)),
           "finite_difference", "ok"});
  csv.row({"phi_slope_at_1", "1", fmt(display(profile.slope_at_one, opts.base2)),
           "finite_difference", "ok"});
  emit(csv, opts);
  return 0;
}

int run_ns(const CommonOpts& opts) {
  const qht::StatePair pair = qht::load_state_pair(opts.states_file);
  const qht::ClassicalPair cp = qht::ns_distributions(pair);
  double residual = 0.0;
  for (double s : qht::linspace(0.0, 1.0, 21)) {
    residual = std::max(residual,
                        std::abs(qht::classical_phi(cp, s) - qht::phi(pair, s)));
  }
  nlohmann::json j = cp.to_json();
  j["phi_identity_residual"] = residual;
  j["tool_version"] = kVersion;
  const std::string text = j.dump(2) + "\n";
  if (opts.out_file.empty()) {
    std::cout << text;
  } else {
    qht::write_text_atomic(opts.out_file, text);
  }
  return 0;
}

int run_tails(const CommonOpts& opts, int n_max, int b_points) {
  const qht::StatePair pair = qht::load_state_pair(opts.states_file);
  const qht::ClassicalPair cp = qht::ns_distributions(pair);
  const double d_pq = qht::classical_relative_entropy(cp);
  const double d_qp = qht::classical_relative_entropy(qht::swapped(cp));
  // Strictly interior b-grid; the Cramer targets need the open interval.
  std::vector<double> b_grid(b_points);
  for (int i = 0; i < b_points; ++i) {
    b_grid[i] = -d_pq + (d_pq + d_qp) * (i + 1) / (b_points + 1);
  }
  qht::CsvWriter csv;
  base_meta(csv, opts);
  csv.meta("tie_guard", qht::kTieGuard);
  csv.columns({"n", "b", "f_n", "g_n", "rate_f", "rate_g", "target_phi",
               "target_psi", "gap_f", "gap_g"});
  for (int n = 1; n <= n_max; ++n) {
    for (double b : b_grid) {
      const double f = qht::iid_tail_f(cp, n, b, opts.cap);
      const double g = qht::iid_tail_g(cp, n, b, opts.cap);
      const double phi_b = qht::cramer_rate_upper(cp, b);
      const double psi_b = phi_b - b;
      const double rate_f = -std::log(f) / n;
      const double rate_g = -std::log(g) / n;
      csv.row({std::to_string(n), fmt(b), fmt(f), fmt(g),
               fmt(display(rate_f, opts.base2)), fmt(display(rate_g, opts.base2)),
               fmt(display(phi_b, opts.base2)), fmt(display(psi_b, opts.base2)),
               fmt(display(rate_f - phi_b, opts.base2)),
               fmt(display(rate_g - psi_b, opts.base2))});
    }
  }
  emit(csv, opts);
  return 0;
}

int run_simulate(const CommonOpts& opts, int n, std::vector<double> deltas) {
  const qht::StatePair pair = qht::load_state_pair(opts.states_file);
  const qht::DensityOperator rho_n(qht::tensor_power(pair.rho().matrix(), n, opts.cap));
  const qht::DensityOperator sigma_n(
      qht::tensor_power(pair.sigma().matrix(), n, opts.cap));
  if (deltas.empty()) deltas = {0.5, 1.0, 2.0};
  qht::CsvWriter csv;
  base_meta(csv, opts);
  csv.meta("n", std::to_string(n));
  csv.columns({"delta", "alpha", "beta", "risk"});
  for (double delta : deltas) {
    const qht::TestOperator t = qht::helstrom_test(rho_n, sigma_n, delta);
    const qht::ErrorPair e = qht::error_probabilities(rho_n, sigma_n, t);
    csv.row({fmt(delta), fmt(e.alpha), fmt(e.beta),
             fmt(e.alpha + delta * e.beta)});
  }
  emit(csv, opts);
  return 0;
}

int run_probe(const CommonOpts& opts, double a, int n_max) {
  const qht::StatePair pair = qht::load_state_pair(opts.states_file);
  const std::vector<qht::ProbeRow> rows =
      qht::conjecture_probe(pair, a, n_max, opts.cap);
  qht::CsvWriter csv;
  base_meta(csv, opts);
  csv.columns({"n", "a", "rateF", "rateG", "Phi", "Psi", "gapF", "gapG"});
  for (const qht::ProbeRow& row : rows) {
    csv.row({std::to_string(row.n), fmt(display(row.a, opts.base2)),
             fmt(display(row.rate_f, opts.base2)),
             fmt(display(row.rate_g, opts.base2)),
             fmt(display(row.capital_phi, opts.base2)),
             fmt(display(row.capital_psi, opts.base2)),
             fmt(display(row.gap_f, opts.base2)),
             fmt(display(row.gap_g, opts.base2))});
  }
  emit(csv, opts);
  if (!opts.out_file.empty()) {
    nlohmann::json j;
    j["tool_version"] = kVersion;
    j["seed"] = opts.seed;
    j["tol"] = opts.tol;
    j["cap"] = opts.cap;
    j["a"] = a;
    j["n_max"] = n_max;
    j["rows"] = nlohmann::json::array();
    for (const qht::ProbeRow& row : rows) {
      j["rows"].push_back({{"n", row.n},
                           {"rateF", row.rate_f},
                           {"rateG", row.rate_g},
                           {"Phi", row.capital_phi},
                           {"Psi", row.capital_psi},
                           {"gapF", row.gap_f},
                           {"gapG", row.gap_g}});
    }
    qht::write_text_atomic(opts.out_file + ".json", j.dump(2) + "\n");
  }
  return 0;
}

int run_channel_check(const CommonOpts& opts, const std::string& channels_file,
                      int random_count) {
  const qht::StatePair pair = qht::load_state_pair(opts.states_file);
  std::vector<qht::KrausChannel> channels;
  if (!channels_file.empty()) {
    channels = qht::load_channels(channels_file);
  } else {
    for (int i = 0; i < random_count; ++i) {
      channels.push_back(
          qht::random_channel(pair.dim(), pair.dim(), 2, opts.seed + i));
    }
  }
  const std::vector<double> s_grid = qht::linspace(0.0, 1.0, 11);
  qht::CsvWriter csv;
  base_meta(csv, opts);
  csv.columns({"channel", "renyi_violation", "relent_violation", "regularized"});
  for (std::size_t i = 0; i < channels.size(); ++i) {
    const double renyi = qht::renyi_monotonicity_check(pair, channels[i], s_grid);
    const qht::RelentCheck relent =
        qht::relent_monotonicity_check(pair, channels[i]);
    csv.row({std::to_string(i), fmt(renyi),
             fmt(display(relent.violation, opts.base2)),
             relent.regularized ? "1" : "0"});
  }
  emit(csv, opts);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Quantum hypothesis testing error-exponent toolkit"};
  app.set_version_flag("--version", kVersion);
  app.require_subcommand(1);

  CommonOpts opts;

  int bounds_points = 50;
  auto* bounds = app.add_subcommand(
      "bounds", "Hoeffding bound b(r) and Legendre data on an r-grid");
  add_common(bounds, opts);
  bounds->add_option("--points", bounds_points, "r-grid size")
      ->check(CLI::PositiveNumber);

  int phi_points = 101;
  auto* sweep = app.add_subcommand("sweep-phi", "phi/phi_tilde on an s-grid");
  add_common(sweep, opts);
  sweep->add_option("--points", phi_points, "s-grid size")->check(CLI::Range(3, 1000000));

  auto* ns = app.add_subcommand(
      "ns", "Nussbaum-Szkola distributions and the phi-identity residual");
  add_common(ns, opts);

  int tails_n = 8, tails_points = 9;
  auto* tails = app.add_subcommand("tails", "exact classical tails f_n, g_n");
  add_common(tails, opts);
  tails->add_option("--n-max", tails_n, "largest n")->check(CLI::PositiveNumber);
  tails->add_option("--b-points", tails_points, "interior b-grid size")
      ->check(CLI::PositiveNumber);

  int sim_n = 1;
  std::vector<double> sim_deltas;
  auto* simulate =
      app.add_subcommand("simulate", "Helstrom tests on the n-fold pair");
  add_common(simulate, opts);
  simulate->add_option("--n", sim_n, "number of copies")->check(CLI::PositiveNumber);
  simulate->add_option("--delta", sim_deltas, "delta grid (default 0.5 1 2)");

  double probe_a = 0.0;
  int probe_n_max = 6;
  auto* probe = app.add_subcommand(
      "probe", "finite-n spectral tail rates vs Phi(a), Psi(a)");
  add_common(probe, opts);
  probe->add_option("--a", probe_a, "tilt parameter a");
  probe->add_option("--n-max", probe_n_max, "largest n")->check(CLI::PositiveNumber);

  std::string channels_file;
  int random_count = 20;
  auto* channel_check =
      app.add_subcommand("channel-check", "data-processing monotonicity checks");
  add_common(channel_check, opts);
  channel_check->add_option("--channels", channels_file, "channel JSON file");
  channel_check->add_option("--random", random_count,
                            "number of random channels when no file is given");

  CLI11_PARSE(app, argc, argv);

  try {
    if (bounds->parsed()) return run_bounds(opts, bounds_points);
    if (sweep->parsed()) return run_sweep_phi(opts, phi_points);
    if (ns->parsed()) return run_ns(opts);
    if (tails->parsed()) return run_tails(opts, tails_n, tails_points);
    if (simulate->parsed()) return run_simulate(opts, sim_n, sim_deltas);
    if (probe->parsed()) return run_probe(opts, probe_a, probe_n_max);
    if (channel_check->parsed())
      return run_channel_check(opts, channels_file, random_count);
  } catch (const qht::ResourceError& e) {
    std::cerr << "resource error: " << e.what() << "\n";
    return kExitResource;
  } catch (const qht::ConsistencyError& e) {
    std::cerr << "numerical-consistency error: " << e.what() << "\n";
    return kExitConsistency;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitValidation;
  }
  return 1;
}

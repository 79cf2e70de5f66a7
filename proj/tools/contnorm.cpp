// contnorm: continuum-state normalization toolkit.
//
// Subcommands:
//   sweep    propagate a k-grid, tabulate |A|, phase, norm constant
//   verify   run the delta / completeness blocks of a config
//   overlap  one-off pair check: boundary formula vs quadrature
//
// Exit codes: 0 all good, 1 numerical failure or failed verification,
// 2 invalid configuration.

#include <cmath>
#include <cstdio>
#include <exception>
#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "contnorm/overlap.hpp"
#include "contnorm/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitNumerical = 1;
constexpr int kExitConfig = 2;

// Agreement required between the two overlap routes, matching the library's
// cross-method consistency tolerance.
constexpr double kOverlapTolerance = 1e-6;

struct SweepArgs {
  std::string config_path;
  std::string out_path;
  std::string format;
};

struct OverlapArgs {
  std::string config_path;
  double k = 0.0;
  double kprime = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  bool has_x1 = false;
  bool has_x2 = false;
};

int do_sweep(const SweepArgs& args) {
  const contnorm::RunConfig config = contnorm::load_config(args.config_path);

  std::string format = "csv";
  std::string out_path;
  if (config.output) {
    if (!config.output->format.empty()) format = config.output->format;
    out_path = config.output->path;
  }
  if (!args.format.empty()) format = args.format;
  if (!args.out_path.empty()) out_path = args.out_path;
  if (format != "csv" && format != "json") {
    throw contnorm::config_error("config: format: expected csv | json");
  }

  const contnorm::SweepResult result = contnorm::run_sweep(config);

  if (out_path.empty()) {
    if (format == "csv") {
      contnorm::emit_csv(result.rows, std::cout);
    } else {
      contnorm::emit_json(result.rows, std::cout);
    }
  } else {
    try {
      contnorm::emit(result.rows, format, out_path);
    } catch (const std::runtime_error& e) {
      throw contnorm::config_error(std::string("output.path: ") + e.what());
    }
    std::cerr << "wrote " << result.rows.size() << " rows to " << out_path
              << "\n";
  }

  for (const auto& f : result.failures) {
    std::cerr << "propagation failed at k = " << contnorm::format_double(f.k)
              << " (" << contnorm::to_string(f.parity) << "): " << f.message
              << "\n";
  }
  for (const auto& v : result.verifications) {
    std::cout << contnorm::format_flat(v) << "\n";
  }
  return result.ok() ? kExitOk : kExitNumerical;
}

int do_verify(const std::string& config_path) {
  const contnorm::RunConfig config = contnorm::load_config(config_path);
  if (!config.delta && !config.completeness) {
    throw contnorm::config_error(
        "config: verify: no verification blocks present");
  }
  bool all_passed = true;
  for (const auto& v : contnorm::run_verifications(config)) {
    std::cout << contnorm::format_flat(v) << "\n";
    all_passed = all_passed && v.passed;
  }
  return all_passed ? kExitOk : kExitNumerical;
}

int do_overlap(const OverlapArgs& args) {
  const contnorm::RunConfig config = contnorm::load_config(args.config_path);
  if (!(args.k > 0.0) || !(args.kprime > 0.0)) {
    throw contnorm::config_error("overlap: --k and --kprime must be > 0");
  }
  const contnorm::Interval support = config.potential.support();
  const double x1 = args.has_x1 ? args.x1 : support.lo;
  const double x2 = args.has_x2 ? args.x2 : support.hi;
  if (!(x1 <= x2)) {
    throw contnorm::config_error("overlap: need x1 <= x2");
  }

  bool all_passed = true;
  for (const contnorm::Parity parity :
       contnorm::selected_parities(config.parity)) {
    const contnorm::WaveSamples a =
        contnorm::propagate(config.potential, args.k, parity, config.solver);

    if (std::abs(args.k - args.kprime) <
        contnorm::degeneracy_threshold(args.k, args.kprime)) {
      const contnorm::OverlapResult eq = contnorm::overlap_equal_k(a, x1, x2);
      std::cout << contnorm::to_string(parity)
                << ": degenerate pair, equal-k limit = "
                << contnorm::format_double(eq.value) << " on ["
                << contnorm::format_double(x1) << ", "
                << contnorm::format_double(x2) << "]\n";
      continue;
    }

    const contnorm::WaveSamples b = contnorm::propagate(
        config.potential, args.kprime, parity, config.solver);
    const contnorm::OverlapResult w = contnorm::overlap_wronskian(a, b, x1, x2);
    const contnorm::OverlapResult q = contnorm::overlap_quadrature(a, b, x1, x2);
    const double rel =
        std::abs(w.value - q.value) / std::max(1.0, std::abs(q.value));
    const bool passed = rel <= kOverlapTolerance;
    all_passed = all_passed && passed;
    std::cout << contnorm::to_string(parity)
              << ": wronskian = " << contnorm::format_double(w.value)
              << "  quadrature = " << contnorm::format_double(q.value)
              << "  relative_difference = " << contnorm::format_double(rel)
              << "  status=" << (passed ? "PASS" : "FAIL") << "\n";
  }
  return all_passed ? kExitOk : kExitNumerical;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "contnorm: continuous-spectrum stationary states of the 1D "
      "Schroedinger equation, delta-normalized through the Wronskian "
      "boundary identity (units: hbar = 1, E = k^2/2m)"};
  app.require_subcommand(1);

  SweepArgs sweep_args;
  auto* sweep = app.add_subcommand(
      "sweep", "propagate a k-grid and tabulate normalized amplitudes");
  sweep->add_option("--config", sweep_args.config_path,
                    "run configuration (JSON)")
      ->required();
  sweep->add_option("--out", sweep_args.out_path,
                    "output path (default: stdout)");
  sweep->add_option("--format", sweep_args.format, "csv | json")
      ->check(CLI::IsMember({"csv", "json"}));

  std::string verify_config;
  auto* verify =
      app.add_subcommand("verify", "run the config's verification blocks");
  verify->add_option("--config", verify_config, "run configuration (JSON)")
      ->required();

  OverlapArgs overlap_args;
  auto* overlap = app.add_subcommand(
      "overlap",
      "overlap of two states: boundary formula against quadrature");
  overlap->add_option("--config", overlap_args.config_path,
                      "run configuration (JSON)")
      ->required();
  overlap->add_option("--k", overlap_args.k, "first wavenumber")->required();
  overlap->add_option("--kprime", overlap_args.kprime, "second wavenumber")
      ->required();
  auto* x1_opt = overlap->add_option("--x1", overlap_args.x1,
                                     "interval start (default: x_a)");
  auto* x2_opt = overlap->add_option("--x2", overlap_args.x2,
                                     "interval end (default: x_b)");

  CLI11_PARSE(app, argc, argv);

  try {
    if (sweep->parsed()) return do_sweep(sweep_args);
    if (verify->parsed()) return do_verify(verify_config);
    overlap_args.has_x1 = x1_opt->count() > 0;
    overlap_args.has_x2 = x2_opt->count() > 0;
    return do_overlap(overlap_args);
  } catch (const contnorm::config_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerical;
  }
}

#pragma once

#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "contnorm/normalization.hpp"

namespace contnorm {

/// Raised for malformed or invalid run configurations; the message names
/// the offending field.
class config_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class ParitySelection { even, odd, both };

std::vector<Parity> selected_parities(ParitySelection s);

struct KGrid {
  double min = 0.0;
  double max = 0.0;
  int count = 0;  // linear spacing
};

struct DeltaBlock {
  double k0 = 0.0;
  double sigma = 0.0;
  double window = 0.0;  // spatial half-length L
  double tolerance = 0.02;
};

struct CompletenessBlock {
  double x = 0.0;
  double y = 0.0;
  double k_max = 0.0;
  double sigma_x = 0.0;
  double tolerance = 0.05;
};

struct OutputSpec {
  std::string path;
  std::string format = "csv";  // csv | json
};

/// One run, fully described: the config file is the experiment record.
/// Units: hbar = 1, E = k^2 / (2m).
struct RunConfig {
  Potential potential = Potential::free_particle();
  ParitySelection parity = ParitySelection::both;
  std::optional<KGrid> k_grid;
  SolverConfig solver;
  std::optional<OutputSpec> output;
  std::optional<DeltaBlock> delta;
  std::optional<CompletenessBlock> completeness;
};

/// One sweep table entry per (k, parity).
struct SweepRow {
  double k = 0.0;
  Parity parity = Parity::even;
  double a_re = 0.0;
  double a_im = 0.0;
  double a_abs = 0.0;
  double phase_mod_pi = 0.0;
  double norm_constant = 0.0;
  double delta_strength = 0.0;
};

struct SweepFailure {
  double k = 0.0;
  Parity parity = Parity::even;
  std::string message;
};

struct VerificationOutcome {
  std::string name;
  DeltaReport report;
  double tolerance = 0.0;
  bool passed = false;
};

struct SweepResult {
  std::vector<SweepRow> rows;
  std::vector<SweepFailure> failures;
  std::vector<VerificationOutcome> verifications;

  bool ok() const;
};

/// Parses and validates a JSON run config; defaults h = 1e-3,
/// epsilon_v = 1e-12, parity = both, mass = 1. Throws config_error with a
/// field-precise message.
RunConfig parse_config(const std::string& text);

/// parse_config on the contents of a file.
RunConfig load_config(const std::string& path);

/// Propagates every (k, parity) job of the grid, extracts and normalizes
/// amplitudes, and runs the requested verification blocks. Jobs execute
/// concurrently; rows come back ordered by k then parity. A propagation
/// failure is recorded and the sweep continues.
SweepResult run_sweep(const RunConfig& config);

/// Runs only the verification blocks of the config.
std::vector<VerificationOutcome> run_verifications(const RunConfig& config);

/// Deterministic emitters: fixed column order, floats at 17 significant
/// digits (round-trip exact), no timestamps.
void emit_csv(const std::vector<SweepRow>& rows, std::ostream& os);
void emit_json(const std::vector<SweepRow>& rows, std::ostream& os);

/// Writes rows to path in the given format ("csv" | "json"). Throws
/// std::runtime_error on I/O failure.
void emit(const std::vector<SweepRow>& rows, const std::string& format,
          const std::string& path);

/// Flat one-line record of a verification outcome.
std::string format_flat(const VerificationOutcome& outcome);

/// %.17g, shared by every emitter.
std::string format_double(double v);

}  // namespace contnorm

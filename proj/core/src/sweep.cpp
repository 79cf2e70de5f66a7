#include "contnorm/sweep.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <ostream>
#include <sstream>

#include <json.hpp>

#include "contnorm/parallel.hpp"

namespace contnorm {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& field, const std::string& what) {
  throw config_error("config: " + field + ": " + what);
}

void reject_unknown_keys(const json& j, const std::string& section,
                         std::initializer_list<const char*> known) {
  for (const auto& [key, value] : j.items()) {
    bool ok = false;
    for (const char* k : known) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) fail(section.empty() ? key : section + "." + key,
                  "unrecognized key");
  }
}

std::string field_name(const std::string& section, const char* key) {
  return section.empty() ? std::string(key) : section + "." + key;
}

double require_number(const json& j, const std::string& section,
                      const char* key) {
  if (!j.contains(key)) fail(field_name(section, key), "required");
  if (!j[key].is_number()) fail(field_name(section, key), "must be a number");
  return j[key].get<double>();
}

double number_or(const json& j, const std::string& section, const char* key,
                 double fallback) {
  if (!j.contains(key)) return fallback;
  if (!j[key].is_number()) fail(field_name(section, key), "must be a number");
  return j[key].get<double>();
}

Potential parse_potential(const json& j) {
  if (!j.is_object()) fail("potential", "must be an object");
  if (!j.contains("kind") || !j["kind"].is_string()) {
    fail("potential.kind", "required string");
  }
  const std::string kind = j["kind"].get<std::string>();
  const double eps = number_or(j, "potential", "epsilon_v", 1e-12);
  if (!(eps > 0.0)) fail("potential.epsilon_v", "must be > 0");

  if (kind == "free") {
    reject_unknown_keys(j, "potential", {"kind", "epsilon_v"});
    return Potential::free_particle();
  }
  if (kind == "square-well" || kind == "square-barrier") {
    reject_unknown_keys(j, "potential", {"kind", "V0", "a", "epsilon_v"});
    const double v0 = require_number(j, "potential", "V0");
    const double a = require_number(j, "potential", "a");
    if (!(a > 0.0)) fail("potential.a", "must be > 0");
    return kind == "square-well" ? Potential::square_well(v0, a, eps)
                                 : Potential::square_barrier(v0, a, eps);
  }
  if (kind == "gaussian") {
    reject_unknown_keys(j, "potential", {"kind", "V0", "w", "epsilon_v"});
    const double v0 = require_number(j, "potential", "V0");
    const double w = require_number(j, "potential", "w");
    if (!(w > 0.0)) fail("potential.w", "must be > 0");
    return Potential::gaussian(v0, w, eps);
  }
  fail("potential.kind", "unknown kind '" + kind +
                             "' (expected square-well | square-barrier | "
                             "gaussian | free)");
}

ParitySelection parse_parity(const json& j) {
  if (!j.is_string()) fail("parity", "must be a string");
  const std::string s = j.get<std::string>();
  if (s == "even") return ParitySelection::even;
  if (s == "odd") return ParitySelection::odd;
  if (s == "both") return ParitySelection::both;
  fail("parity", "unknown value '" + s + "' (expected even | odd | both)");
}

KGrid parse_k_grid(const json& j) {
  if (!j.is_object()) fail("k_grid", "must be an object");
  reject_unknown_keys(j, "k_grid", {"min", "max", "count", "spacing"});
  KGrid g;
  g.min = require_number(j, "k_grid", "min");
  g.max = require_number(j, "k_grid", "max");
  const double count = require_number(j, "k_grid", "count");
  if (!(g.min > 0.0)) fail("k_grid.min", "must be > 0");
  if (!(g.max >= g.min)) fail("k_grid.max", "must be >= k_grid.min");
  if (!(count >= 1.0) || count != std::floor(count)) {
    fail("k_grid.count", "must be an integer >= 1");
  }
  g.count = static_cast<int>(count);
  if (j.contains("spacing")) {
    if (!j["spacing"].is_string() || j["spacing"] != "linear") {
      fail("k_grid.spacing", "only 'linear' is supported");
    }
  }
  return g;
}

SolverConfig parse_solver(const json& j, double mass) {
  if (!j.is_object()) fail("solver", "must be an object");
  reject_unknown_keys(j, "solver", {"h", "method"});
  SolverConfig cfg;
  cfg.mass = mass;
  cfg.step = number_or(j, "solver", "h", 1e-3);
  if (!(cfg.step > 0.0)) fail("solver.h", "must be > 0");
  if (j.contains("method")) {
    if (!j["method"].is_string()) fail("solver.method", "must be a string");
    const std::string m = j["method"].get<std::string>();
    if (m == "numerov") {
      cfg.method = Method::numerov;
    } else if (m == "rk4-reference") {
      cfg.method = Method::rk4_reference;
    } else {
      fail("solver.method",
           "unknown method '" + m + "' (expected numerov | rk4-reference)");
    }
  }
  return cfg;
}

OutputSpec parse_output(const json& j) {
  if (!j.is_object()) fail("output", "must be an object");
  reject_unknown_keys(j, "output", {"path", "format"});
  OutputSpec out;
  if (j.contains("path")) {
    if (!j["path"].is_string()) fail("output.path", "must be a string");
    out.path = j["path"].get<std::string>();
  }
  if (j.contains("format")) {
    if (!j["format"].is_string()) fail("output.format", "must be a string");
    out.format = j["format"].get<std::string>();
    if (out.format != "csv" && out.format != "json") {
      fail("output.format", "expected csv | json");
    }
  }
  return out;
}

DeltaBlock parse_delta(const json& j) {
  if (!j.is_object()) fail("verify.delta", "must be an object");
  reject_unknown_keys(j, "verify.delta", {"k0", "sigma", "L", "tolerance"});
  DeltaBlock d;
  d.k0 = require_number(j, "verify.delta", "k0");
  d.sigma = require_number(j, "verify.delta", "sigma");
  d.window = require_number(j, "verify.delta", "L");
  d.tolerance = number_or(j, "verify.delta", "tolerance", 0.02);
  if (!(d.k0 > 0.0)) fail("verify.delta.k0", "must be > 0");
  if (!(d.sigma > 0.0)) fail("verify.delta.sigma", "must be > 0");
  if (!(d.window > 0.0)) fail("verify.delta.L", "must be > 0");
  if (!(d.tolerance > 0.0)) fail("verify.delta.tolerance", "must be > 0");
  return d;
}

CompletenessBlock parse_completeness(const json& j) {
  if (!j.is_object()) fail("verify.completeness", "must be an object");
  reject_unknown_keys(j, "verify.completeness",
                      {"x", "y", "k_max", "sigma_x", "tolerance"});
  CompletenessBlock c;
  c.x = require_number(j, "verify.completeness", "x");
  c.y = require_number(j, "verify.completeness", "y");
  c.k_max = require_number(j, "verify.completeness", "k_max");
  c.sigma_x = require_number(j, "verify.completeness", "sigma_x");
  c.tolerance = number_or(j, "verify.completeness", "tolerance", 0.05);
  if (!(c.k_max > 0.0)) fail("verify.completeness.k_max", "must be > 0");
  if (!(c.sigma_x > 0.0)) fail("verify.completeness.sigma_x", "must be > 0");
  if (!(c.tolerance > 0.0)) {
    fail("verify.completeness.tolerance", "must be > 0");
  }
  return c;
}

}  // namespace

std::vector<Parity> selected_parities(ParitySelection s) {
  switch (s) {
    case ParitySelection::even:
      return {Parity::even};
    case ParitySelection::odd:
      return {Parity::odd};
    case ParitySelection::both:
      return {Parity::even, Parity::odd};
  }
  return {};
}

bool SweepResult::ok() const {
  if (!failures.empty()) return false;
  for (const auto& v : verifications) {
    if (!v.passed) return false;
  }
  return true;
}

RunConfig parse_config(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw config_error(std::string("config: not valid JSON: ") + e.what());
  }
  if (!j.is_object()) throw config_error("config: top level must be an object");
  reject_unknown_keys(
      j, "", {"potential", "mass", "parity", "k_grid", "solver", "output",
              "verify"});

  RunConfig cfg;
  if (!j.contains("potential")) fail("potential", "required");
  cfg.potential = parse_potential(j["potential"]);

  const double mass = number_or(j, "", "mass", 1.0);
  if (!(mass > 0.0)) fail("mass", "must be > 0");

  if (j.contains("parity")) cfg.parity = parse_parity(j["parity"]);
  if (j.contains("k_grid")) cfg.k_grid = parse_k_grid(j["k_grid"]);
  cfg.solver = j.contains("solver") ? parse_solver(j["solver"], mass)
                                    : SolverConfig{mass, 1e-3, Method::numerov};
  if (j.contains("output")) cfg.output = parse_output(j["output"]);

  if (j.contains("verify")) {
    const json& v = j["verify"];
    if (!v.is_object()) fail("verify", "must be an object");
    reject_unknown_keys(v, "verify", {"delta", "completeness"});
    if (v.contains("delta")) cfg.delta = parse_delta(v["delta"]);
    if (v.contains("completeness")) {
      cfg.completeness = parse_completeness(v["completeness"]);
    }
  }
  return cfg;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw config_error("config: cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str());
}

std::vector<VerificationOutcome> run_verifications(const RunConfig& config) {
  std::vector<VerificationOutcome> outcomes;
  if (config.delta) {
    for (const Parity parity : selected_parities(config.parity)) {
      VerificationOutcome o;
      o.name = std::string("delta(") + to_string(parity) + ")";
      o.report = verify_delta(config.potential, parity, config.delta->k0,
                              config.delta->sigma, config.delta->window,
                              config.solver);
      o.tolerance = config.delta->tolerance;
      o.passed = o.report.relative_error <= o.tolerance;
      outcomes.push_back(std::move(o));
    }
  }
  if (config.completeness) {
    VerificationOutcome o;
    o.name = "completeness";
    o.report = verify_completeness(
        config.potential, config.completeness->x, config.completeness->y,
        config.completeness->k_max, config.completeness->sigma_x,
        config.solver);
    o.tolerance = config.completeness->tolerance;
    o.passed = o.report.relative_error <= o.tolerance;
    outcomes.push_back(std::move(o));
  }
  return outcomes;
}

SweepResult run_sweep(const RunConfig& config) {
  if (!config.k_grid) throw config_error("config: k_grid: required for sweep");

  const std::vector<Parity> parities = selected_parities(config.parity);
  const KGrid& grid = *config.k_grid;

  struct Job {
    double k;
    Parity parity;
  };
  std::vector<Job> jobs;
  for (int i = 0; i < grid.count; ++i) {
    const double k =
        grid.count == 1
            ? grid.min
            : grid.min + (grid.max - grid.min) * static_cast<double>(i) /
                             static_cast<double>(grid.count - 1);
    for (const Parity parity : parities) jobs.push_back({k, parity});
  }

  struct Slot {
    SweepRow row;
    std::string error;
  };
  std::vector<Slot> slots(jobs.size());
  parallel_for(jobs.size(), [&](std::size_t i) {
    const Job& job = jobs[i];
    try {
      const NormalizedState state =
          solve_normalized(config.potential, job.k, job.parity, config.solver);
      SweepRow& row = slots[i].row;
      row.k = job.k;
      row.parity = job.parity;
      row.a_re = state.amplitude.re;
      row.a_im = state.amplitude.im;
      row.a_abs = state.amplitude.modulus;
      row.phase_mod_pi = phase_shift(state.amplitude);
      row.norm_constant = state.norm_constant;
      row.delta_strength = state.delta_strength;
    } catch (const std::exception& e) {
      slots[i].error = e.what();
    }
  });

  SweepResult result;
  for (std::size_t i = 0; i < slots.size(); ++i) {
    if (slots[i].error.empty()) {
      result.rows.push_back(slots[i].row);
    } else {
      result.failures.push_back({jobs[i].k, jobs[i].parity, slots[i].error});
    }
  }
  result.verifications = run_verifications(config);
  return result;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

void emit_csv(const std::vector<SweepRow>& rows, std::ostream& os) {
  os << "k,parity,A_re,A_im,A_abs,phase_mod_pi,norm_constant,"
        "delta_strength\n";
  for (const SweepRow& r : rows) {
    os << format_double(r.k) << ',' << to_string(r.parity) << ','
       << format_double(r.a_re) << ',' << format_double(r.a_im) << ','
       << format_double(r.a_abs) << ',' << format_double(r.phase_mod_pi)
       << ',' << format_double(r.norm_constant) << ','
       << format_double(r.delta_strength) << '\n';
  }
}

void emit_json(const std::vector<SweepRow>& rows, std::ostream& os) {
  if (rows.empty()) {
    os << "[]\n";
    return;
  }
  os << "[\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    const SweepRow& r = rows[i];
    os << "{\"k\":" << format_double(r.k) << ",\"parity\":\""
       << to_string(r.parity) << "\",\"A_re\":" << format_double(r.a_re)
       << ",\"A_im\":" << format_double(r.a_im)
       << ",\"A_abs\":" << format_double(r.a_abs)
       << ",\"phase_mod_pi\":" << format_double(r.phase_mod_pi)
       << ",\"norm_constant\":" << format_double(r.norm_constant)
       << ",\"delta_strength\":" << format_double(r.delta_strength) << '}'
       << (i + 1 < rows.size() ? ",\n" : "\n");
  }
  os << "]\n";
}

void emit(const std::vector<SweepRow>& rows, const std::string& format,
          const std::string& path) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("emit: cannot open '" + path + "'");
  if (format == "csv") {
    emit_csv(rows, out);
  } else if (format == "json") {
    emit_json(rows, out);
  } else {
    throw std::invalid_argument("emit: unknown format '" + format + "'");
  }
  out.flush();
  if (!out) throw std::runtime_error("emit: write failed for '" + path + "'");
}

std::string format_flat(const VerificationOutcome& outcome) {
  std::ostringstream os;
  os << outcome.name << " k0=" << format_double(outcome.report.k0)
     << " sigma=" << format_double(outcome.report.sigma)
     << " window=" << format_double(outcome.report.window)
     << " measured=" << format_double(outcome.report.measured)
     << " expected=" << format_double(outcome.report.expected)
     << " relative_error=" << format_double(outcome.report.relative_error)
     << " tolerance=" << format_double(outcome.tolerance)
     << " status=" << (outcome.passed ? "PASS" : "FAIL");
  return os.str();
}

}  // namespace contnorm

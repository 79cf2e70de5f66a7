#pragma once

#include "contnorm/matching.hpp"

namespace contnorm {

/// A delta-normalized continuum state: the samples rescaled by
/// 1/(2 sqrt(pi) |A|), which gives the whole-line overlap a unit
/// delta-function coefficient.
struct NormalizedState {
  WaveSamples base;              // rescaled psi, psi'
  AsymptoticAmplitude amplitude; // of the unnormalized state
  double norm_constant = 0.0;    // 1/(2 sqrt(pi) |A|)
  double delta_strength = 0.0;   // 4 pi |A|^2 of the unnormalized state
};

/// Outcome of a smeared delta-function check. All parameters ride along so
/// a run is reproducible from the record alone. For completeness checks
/// k0 holds the k-window cutoff, sigma the spatial smearing width, and
/// window the half-length of the smearing window.
struct DeltaReport {
  double k0 = 0.0;
  double sigma = 0.0;
  double window = 0.0;
  double measured = 0.0;
  double expected = 0.0;
  double relative_error = 0.0;
};

/// Coefficient of delta(k - k') in the whole-line overlap of the
/// unnormalized state with itself: 4 pi |A|^2.
double delta_strength(const AsymptoticAmplitude& amplitude);

/// Rescales the samples by 1/(2 sqrt(pi) |A|). The amplitude must belong to
/// these samples.
NormalizedState normalize(const WaveSamples& samples,
                          const AsymptoticAmplitude& amplitude);

/// propagate + extract_amplitude (at the support edge) + normalize.
NormalizedState solve_normalized(const Potential& potential, double k,
                                 Parity parity, const SolverConfig& config);

/// Tests the delta normalization quantitatively: builds the Gaussian packet
///   Phi(x) = int g(k') psi_norm_{k'}(x) dk',  g = unit Gaussian at k0,
/// then measures int_{-L}^{L} psi_norm_{k0} Phi dx against g(k0).
/// The k'-grid spans k0 +/- 6 sigma with 121 Simpson nodes; the spatial
/// quadrature uses the solver grid inside the support and a tail spacing
/// tied to the solver step, so the reported error tracks the step.
/// Requires L * sigma >= 5 (window resolves the smeared delta) and
/// k0 > 6 sigma (packet stays at positive wavenumbers).
DeltaReport verify_delta(const Potential& potential, Parity parity, double k0,
                         double sigma, double L, const SolverConfig& config);

/// Tests completeness of the continuum for bound-state-free potentials:
///   S(x, y) = int_0^{k_max} sum_parity psi_norm_k(x) psi_norm_k(y) dk
/// smeared over y with a Gaussian of width sigma_x, compared against the
/// Gaussian delta representation g_{sigma_x}(x - y). Attractive potentials
/// are rejected; their bound states also enter the completeness sum.
DeltaReport verify_completeness(const Potential& potential, double x,
                                double y, double k_max, double sigma_x,
                                const SolverConfig& config);

}  // namespace contnorm

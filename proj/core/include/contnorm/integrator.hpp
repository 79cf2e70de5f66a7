#pragma once

#include <vector>

#include "contnorm/potential.hpp"

namespace contnorm {

enum class Parity { even, odd };

/// +1 for even, -1 for odd.
int parity_sign(Parity p);
const char* to_string(Parity p);

enum class Method { numerov, rk4_reference };

struct SolverConfig {
  double mass = 1.0;
  double step = 1e-3;
  Method method = Method::numerov;
};

struct PsiPair {
  double psi = 0.0;
  double dpsi = 0.0;
};

/// A real stationary solution at fixed k and parity, tabulated on the
/// interior grid [0, x_b].
///
/// The state it represents lives on the whole line: for x < 0 it is the
/// parity image psi(-x) = +/- psi(x), and for x > x_b it continues as the
/// exact potential-free solution grown from the endpoint values. Immutable
/// after propagate() returns.
struct WaveSamples {
  double k = 0.0;
  Parity parity = Parity::even;
  std::vector<double> xs;    // 0 = xs[0] <= ... <= xs[n] = x_b
  std::vector<double> psi;   // psi(xs[i])
  std::vector<double> dpsi;  // psi'(xs[i])
  SolverConfig config;

  /// Right edge of the tabulated interior (x_b).
  double x_edge() const { return xs.back(); }
  /// Grid spacing; 0 for the degenerate single-point grid.
  double grid_step() const;
  std::size_t size() const { return xs.size(); }
};

/// Integrates psi'' = 2m(V - E) psi, E = k^2/(2m), from the symmetry point
/// x = 0 out to the support edge x_b.
///
/// Initial conditions at x = 0: even (psi, psi') = (1, 0), odd (0, k), both
/// times ic_scale. Normalization is fixed later from the asymptotic
/// amplitude, so the scale is free; the odd slope k makes the free odd
/// solution exactly sin(kx).
///
/// Throws std::invalid_argument when the step leaves fewer than 16 cells
/// across the interior, and std::runtime_error if the integration produces
/// a non-finite value. For the degenerate free support [0, 0] the initial
/// conditions are returned without stepping.
WaveSamples propagate(const Potential& potential, double k, Parity parity,
                      const SolverConfig& config, double ic_scale = 1.0);

/// psi at x. x must lie on the grid (after the parity fold) or beyond the
/// support edge, where the exact free continuation applies; anything else
/// throws std::invalid_argument.
double value_at(const WaveSamples& samples, double x);

/// psi' at x, same domain rules as value_at. On-grid values come from
/// stencils of the same order as the integrator.
double derivative_at(const WaveSamples& samples, double x);

/// Evaluates psi and psi' anywhere on the line: parity fold, cubic Hermite
/// between grid nodes (matches the integrator's O(h^4) accuracy), exact
/// free continuation beyond the edge.
PsiPair interpolate(const WaveSamples& samples, double x);

/// Copy with psi and psi' multiplied by factor.
WaveSamples scaled(const WaveSamples& samples, double factor);

}  // namespace contnorm

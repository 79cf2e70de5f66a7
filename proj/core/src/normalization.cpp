#include "contnorm/normalization.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <vector>

#include "contnorm/parallel.hpp"
#include "quadrature.hpp"

namespace contnorm {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kMinWindowSigma = 5.0;   // smallest acceptable L * sigma
constexpr double kPacketHalfWidth = 6.0;  // packet k-window in units of sigma
constexpr std::size_t kPacketNodes = 121; // Simpson nodes across the packet

double gaussian_weight(double u, double sigma) {
  return std::exp(-u * u / (2.0 * sigma * sigma)) /
         (sigma * std::sqrt(2.0 * kPi));
}

// Quadrature nodes and weights on [0, L]: the solver grid across the
// interior, then a tail whose spacing is tied to the solver step so the
// spatial resolution follows the integrator resolution.
struct HalfLineGrid {
  std::vector<double> xs;
  std::vector<double> weights;
  std::size_t interior_nodes = 0;  // nodes shared with the solver grid
};

HalfLineGrid build_half_line_grid(const WaveSamples& reference, double L) {
  const double xb = reference.x_edge();
  HalfLineGrid grid;
  grid.xs = reference.xs;
  grid.interior_nodes = grid.xs.size();
  grid.weights.assign(grid.xs.size(), 0.0);

  const std::size_t interior_cells = grid.xs.size() - 1;
  if (interior_cells >= 2) {
    const std::vector<double> w =
        detail::simpson_weights(interior_cells, reference.grid_step());
    std::copy(w.begin(), w.end(), grid.weights.begin());
  }

  auto tail_cells = static_cast<std::size_t>(
      std::ceil((L - xb) / (10.0 * reference.config.step)));
  tail_cells = std::max<std::size_t>(tail_cells + (tail_cells % 2), 2);
  const double ht = (L - xb) / static_cast<double>(tail_cells);
  const std::vector<double> wt = detail::simpson_weights(tail_cells, ht);

  grid.weights.back() += wt[0];
  for (std::size_t i = 1; i <= tail_cells; ++i) {
    grid.xs.push_back(i == tail_cells ? L : xb + static_cast<double>(i) * ht);
    grid.weights.push_back(wt[i]);
  }
  return grid;
}

// psi_norm(x) on a half-line grid node: direct lookup on the shared
// interior nodes, exact free continuation beyond.
double state_on_node(const NormalizedState& state, const HalfLineGrid& grid,
                     std::size_t node) {
  if (node < grid.interior_nodes) return state.base.psi[node];
  return interpolate(state.base, grid.xs[node]).psi;
}

}  // namespace

double delta_strength(const AsymptoticAmplitude& amplitude) {
  return 4.0 * kPi * amplitude.modulus * amplitude.modulus;
}

NormalizedState normalize(const WaveSamples& samples,
                          const AsymptoticAmplitude& amplitude) {
  if (amplitude.k != samples.k || amplitude.parity != samples.parity) {
    throw std::invalid_argument(
        "normalize: amplitude does not belong to these samples");
  }
  if (!(amplitude.modulus > 0.0) || !std::isfinite(amplitude.modulus)) {
    // cannot occur for a real finite-range potential; guarded anyway
    throw std::domain_error("normalize: zero asymptotic amplitude");
  }
  NormalizedState out;
  out.norm_constant = 1.0 / (2.0 * std::sqrt(kPi) * amplitude.modulus);
  out.base = scaled(samples, out.norm_constant);
  out.amplitude = amplitude;
  out.delta_strength = delta_strength(amplitude);
  return out;
}

NormalizedState solve_normalized(const Potential& potential, double k,
                                 Parity parity, const SolverConfig& config) {
  const WaveSamples samples = propagate(potential, k, parity, config);
  return normalize(samples, extract_amplitude(samples, samples.x_edge()));
}

DeltaReport verify_delta(const Potential& potential, Parity parity, double k0,
                         double sigma, double L, const SolverConfig& config) {
  if (!(k0 > 0.0) || !(sigma > 0.0) || !(L > 0.0)) {
    throw std::invalid_argument(
        "verify_delta: k0, sigma and L must be positive");
  }
  if (L * sigma < kMinWindowSigma) {
    std::ostringstream os;
    os << "verify_delta: window too small: L * sigma = " << L * sigma
       << " < " << kMinWindowSigma;
    throw std::invalid_argument(os.str());
  }
  if (k0 - kPacketHalfWidth * sigma <= 0.0) {
    throw std::invalid_argument(
        "verify_delta: sigma too wide: the packet window k0 +/- 6 sigma must "
        "stay at positive wavenumbers");
  }
  const double xb = potential.support().hi;
  if (L <= xb) {
    throw std::invalid_argument(
        "verify_delta: window must extend beyond the potential support");
  }

  // Packet nodes g(k_j) over k0 +/- 6 sigma; tails beyond are < 1e-8.
  const std::size_t cells = kPacketNodes - 1;
  const double k_lo = k0 - kPacketHalfWidth * sigma;
  const double hk = 2.0 * kPacketHalfWidth * sigma / static_cast<double>(cells);
  const std::vector<double> wk = detail::simpson_weights(cells, hk);

  std::vector<NormalizedState> states(kPacketNodes);
  parallel_for(kPacketNodes, [&](std::size_t j) {
    const double kj = k_lo + static_cast<double>(j) * hk;
    states[j] = solve_normalized(potential, kj, parity, config);
  });
  const NormalizedState probe = solve_normalized(potential, k0, parity, config);

  const HalfLineGrid grid = build_half_line_grid(probe.base, L);
  const std::size_t n_nodes = grid.xs.size();

  // Phi(x) = sum_j wk_j g(k_j) psi_norm_j(x); the j-sum runs in index order
  // at every node, so the result is independent of thread scheduling.
  std::vector<double> packet(n_nodes, 0.0);
  std::vector<double> gw(kPacketNodes);
  for (std::size_t j = 0; j < kPacketNodes; ++j) {
    const double kj = k_lo + static_cast<double>(j) * hk;
    gw[j] = wk[j] * gaussian_weight(kj - k0, sigma);
  }
  parallel_for(n_nodes, [&](std::size_t node) {
    double acc = 0.0;
    for (std::size_t j = 0; j < kPacketNodes; ++j) {
      acc += gw[j] * state_on_node(states[j], grid, node);
    }
    packet[node] = acc;
  });

  // Both factors share the probe parity, so the integrand is even in x and
  // the whole-line integral is twice the half-line one.
  double measured = 0.0;
  for (std::size_t node = 0; node < n_nodes; ++node) {
    measured += grid.weights[node] * state_on_node(probe, grid, node) *
                packet[node];
  }
  measured *= 2.0;

  DeltaReport report;
  report.k0 = k0;
  report.sigma = sigma;
  report.window = L;
  report.measured = measured;
  report.expected = gaussian_weight(0.0, sigma);
  report.relative_error =
      std::abs(report.measured - report.expected) / std::abs(report.expected);
  return report;
}

DeltaReport verify_completeness(const Potential& potential, double x,
                                double y, double k_max, double sigma_x,
                                const SolverConfig& config) {
  if (!std::isfinite(x) || !std::isfinite(y)) {
    throw std::invalid_argument("verify_completeness: probes must be finite");
  }
  if (!(k_max > 0.0) || !(sigma_x > 0.0)) {
    throw std::invalid_argument(
        "verify_completeness: k_max and sigma_x must be positive");
  }
  if (k_max * sigma_x < kMinWindowSigma) {
    std::ostringstream os;
    os << "verify_completeness: k-window too small: k_max * sigma_x = "
       << k_max * sigma_x << " < " << kMinWindowSigma;
    throw std::invalid_argument(os.str());
  }
  if (potential.min_value() < 0.0) {
    throw std::invalid_argument(
        "verify_completeness: potential " + potential.describe() +
        " takes negative values and admits bound states; the continuum alone "
        "is not complete. Use a repulsive (V >= 0) potential.");
  }

  // y smearing window and its quadrature; the spacing resolves both the
  // Gaussian and the fastest oscillation exp(i k_max y).
  const double y_half = kPacketHalfWidth * sigma_x;
  const double hy_target = std::min(sigma_x / 8.0, kPi / (20.0 * k_max));
  auto n_y = static_cast<std::size_t>(std::ceil(2.0 * y_half / hy_target));
  n_y += n_y % 2;
  const double hy = 2.0 * y_half / static_cast<double>(n_y);
  const std::vector<double> wy = detail::simpson_weights(n_y, hy);

  // k quadrature; the integrand oscillates no faster than the total spatial
  // reach of the probes, padded by the support width.
  const double reach = std::abs(x) + std::abs(y) + y_half +
                       2.0 * potential.support().hi + 1.0;
  const double hk_target = std::min(0.05, kPi / (10.0 * reach));
  auto n_k = static_cast<std::size_t>(std::ceil(k_max / hk_target));
  n_k += n_k % 2;
  const double hk = k_max / static_cast<double>(n_k);
  const std::vector<double> wk = detail::simpson_weights(n_k, hk);

  // The k = 0 endpoint is evaluated at a tiny positive wavenumber; the
  // integrand extends continuously there.
  constexpr double k_floor = 1e-8;

  std::vector<double> integrand(n_k + 1, 0.0);
  parallel_for(n_k + 1, [&](std::size_t j) {
    const double k = std::max(static_cast<double>(j) * hk, k_floor);
    double sum = 0.0;
    for (const Parity parity : {Parity::even, Parity::odd}) {
      const NormalizedState state =
          solve_normalized(potential, k, parity, config);
      const double value_x = interpolate(state.base, x).psi;
      double smeared = 0.0;
      for (std::size_t i = 0; i <= n_y; ++i) {
        const double yp = y - y_half + static_cast<double>(i) * hy;
        smeared += wy[i] * gaussian_weight(yp - y, sigma_x) *
                   interpolate(state.base, yp).psi;
      }
      sum += value_x * smeared;
    }
    integrand[j] = sum;
  });

  double measured = 0.0;
  for (std::size_t j = 0; j <= n_k; ++j) measured += wk[j] * integrand[j];

  DeltaReport report;
  report.k0 = k_max;
  report.sigma = sigma_x;
  report.window = y_half;
  report.measured = measured;
  report.expected = gaussian_weight(x - y, sigma_x);
  report.relative_error =
      std::abs(report.measured - report.expected) / std::abs(report.expected);
  return report;
}

}  // namespace contnorm

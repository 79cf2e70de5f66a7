#include "contnorm/overlap.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <sstream>
#include <vector>

#include "quadrature.hpp"

namespace contnorm {

namespace {

using detail::simpson;

void check_compatible(const WaveSamples& a, const WaveSamples& b) {
  if (a.config.mass != b.config.mass) {
    throw std::invalid_argument("overlap: states carry different masses");
  }
  if (a.xs.size() != b.xs.size() || a.x_edge() != b.x_edge()) {
    throw std::invalid_argument("overlap: incompatible grids");
  }
}

void check_interval(double x1, double x2) {
  if (!(x1 <= x2)) {
    throw std::invalid_argument("overlap: interval must satisfy x1 <= x2");
  }
}

double wronskian_term(const WaveSamples& a, const WaveSamples& b, double x) {
  return derivative_at(b, x) * value_at(a, x) -
         derivative_at(a, x) * value_at(b, x);
}

// Product integral over [u, v] with both ends inside the grid; u and v must
// land on grid nodes.
double integrate_grid(const WaveSamples& a, const WaveSamples& b, double u,
                      double v) {
  const double h = a.grid_step();
  const auto iu = static_cast<std::size_t>(std::llround(u / h));
  const auto iv = static_cast<std::size_t>(std::llround(v / h));
  const double tol = 1e-6 * h;
  if (iu >= a.xs.size() || std::abs(u - a.xs[iu]) > tol ||
      iv >= a.xs.size() || std::abs(v - a.xs[iv]) > tol) {
    std::ostringstream os;
    os << "overlap: interval endpoint off the sample grid (u = " << u
       << ", v = " << v << ", h = " << h << ")";
    throw std::invalid_argument(os.str());
  }
  const std::size_t m = iv - iu;
  if (m == 0) return 0.0;
  if (m == 1) {
    throw std::invalid_argument(
        "overlap: interval spans a single grid cell; refine the step");
  }
  std::vector<double> g(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    g[i] = a.psi[iu + i] * b.psi[iu + i];
  }
  return simpson(g, h);
}

// Product integral over [u, v] lying entirely beyond the support edge; the
// exact free continuation is valid at any node, so the subdivision is free.
double integrate_tail(const WaveSamples& a, const WaveSamples& b, double u,
                      double v) {
  if (v <= u) return 0.0;
  auto m = static_cast<std::size_t>(std::ceil((v - u) / a.config.step));
  m = std::max<std::size_t>(m + (m % 2), 2);
  const double h = (v - u) / static_cast<double>(m);
  std::vector<double> g(m + 1);
  for (std::size_t i = 0; i <= m; ++i) {
    const double x = (i == m) ? v : u + static_cast<double>(i) * h;
    g[i] = interpolate(a, x).psi * interpolate(b, x).psi;
  }
  return simpson(g, h);
}

// [u, v] with 0 <= u < v, split at the support edge.
double integrate_positive(const WaveSamples& a, const WaveSamples& b,
                          double u, double v) {
  const double xb = a.x_edge();
  const double tol = 1e-6 * std::max(a.config.step, 1e-30);
  if (u >= xb - tol) return integrate_tail(a, b, std::max(u, xb), v);
  if (v <= xb + tol) return integrate_grid(a, b, u, std::min(v, xb));
  return integrate_grid(a, b, u, xb) + integrate_tail(a, b, xb, v);
}

// Whole-interval product integral; the negative portion folds to positive x
// with the parity sign product.
double integrate_product(const WaveSamples& a, const WaveSamples& b,
                         double x1, double x2) {
  if (x1 == x2) return 0.0;
  if (x1 >= 0.0) return integrate_positive(a, b, x1, x2);
  const double sign =
      static_cast<double>(parity_sign(a.parity) * parity_sign(b.parity));
  if (x2 <= 0.0) return sign * integrate_positive(a, b, -x2, -x1);
  return sign * integrate_positive(a, b, 0.0, -x1) +
         integrate_positive(a, b, 0.0, x2);
}

}  // namespace

const char* to_string(OverlapMethod m) {
  switch (m) {
    case OverlapMethod::wronskian:
      return "wronskian";
    case OverlapMethod::quadrature:
      return "quadrature";
    case OverlapMethod::equal_k_limit:
      return "equal-k-limit";
  }
  return "?";
}

double degeneracy_threshold(double k, double kprime) {
  return 1e-6 * std::max(k, kprime);
}

OverlapResult overlap_wronskian(const WaveSamples& a, const WaveSamples& b,
                                double x1, double x2) {
  check_compatible(a, b);
  check_interval(x1, x2);
  if (std::abs(a.k - b.k) < degeneracy_threshold(a.k, b.k)) {
    std::ostringstream os;
    os << "overlap_wronskian: |k - k'| = " << std::abs(a.k - b.k)
       << " is below the degeneracy threshold "
       << degeneracy_threshold(a.k, b.k) << "; use overlap_equal_k";
    throw degenerate_wavenumber(os.str());
  }
  const double num = wronskian_term(a, b, x2) - wronskian_term(a, b, x1);
  const double value = num / (a.k * a.k - b.k * b.k);
  return {value, a.k, b.k, x1, x2, OverlapMethod::wronskian};
}

OverlapResult overlap_quadrature(const WaveSamples& a, const WaveSamples& b,
                                 double x1, double x2) {
  check_compatible(a, b);
  check_interval(x1, x2);
  return {integrate_product(a, b, x1, x2),
          a.k, b.k, x1, x2, OverlapMethod::quadrature};
}

OverlapResult overlap_equal_k(const WaveSamples& a, double x1, double x2) {
  check_interval(x1, x2);
  return {integrate_product(a, a, x1, x2),
          a.k, a.k, x1, x2, OverlapMethod::equal_k_limit};
}

}  // namespace contnorm

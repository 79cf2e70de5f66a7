#include "contnorm/integrator.hpp"

#include <cmath>
#include <cstddef>
#include <sstream>
#include <stdexcept>

namespace contnorm {

namespace {

constexpr std::size_t kMinCells = 16;

double energy_of(double k, double mass) { return k * k / (2.0 * mass); }

void check_finite(double v, double x) {
  if (!std::isfinite(v)) {
    std::ostringstream os;
    os << "propagate: non-finite value encountered at x = " << x
       << " (integrator blow-up)";
    throw std::runtime_error(os.str());
  }
}

// psi'' = f psi with f = 2m(V - E), three-term Numerov recurrence.
void run_numerov(const Potential& pot, double k, Parity parity, double mass,
                 double h, double ic_scale, WaveSamples& s) {
  const std::size_t n = s.xs.size() - 1;
  const double energy = energy_of(k, mass);
  std::vector<double> fv(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    fv[i] = 2.0 * mass * (pot.evaluate(s.xs[i]) - energy);
  }
  const double h2 = h * h;

  s.psi[0] = (parity == Parity::even ? 1.0 : 0.0) * ic_scale;
  if (parity == Parity::even) {
    // Symmetric start: psi(-h) = psi(h) in the recurrence centered at 0.
    const double t0 = h2 * fv[0] / 12.0;
    const double t1 = h2 * fv[1] / 12.0;
    s.psi[1] = (1.0 + 5.0 * t0) * s.psi[0] / (1.0 - t1);
  } else {
    // Odd Taylor start through h^5; f is even, so f'(0) = 0 and f''(0)
    // comes from the one-sided second difference.
    const double slope = k * ic_scale;
    const double f0 = fv[0];
    const double fpp0 = 2.0 * (fv[1] - fv[0]) / h2;
    s.psi[1] = slope * (h + h * h2 * f0 / 6.0 +
                        h * h2 * h2 * (3.0 * fpp0 + f0 * f0) / 120.0);
  }

  for (std::size_t i = 1; i < n; ++i) {
    const double tm = h2 * fv[i - 1] / 12.0;
    const double t0 = h2 * fv[i] / 12.0;
    const double tp = h2 * fv[i + 1] / 12.0;
    s.psi[i + 1] =
        ((2.0 + 10.0 * t0) * s.psi[i] - (1.0 - tm) * s.psi[i - 1]) /
        (1.0 - tp);
    check_finite(s.psi[i + 1], s.xs[i + 1]);
  }

  // Derivatives from 5-point stencils of matching order; the symmetry-point
  // value is the exact initial condition.
  const double d = 12.0 * h;
  s.dpsi[0] = (parity == Parity::even ? 0.0 : k) * ic_scale;
  s.dpsi[1] = (-3.0 * s.psi[0] - 10.0 * s.psi[1] + 18.0 * s.psi[2] -
               6.0 * s.psi[3] + s.psi[4]) /
              d;
  for (std::size_t i = 2; i + 2 <= n; ++i) {
    s.dpsi[i] =
        (s.psi[i - 2] - 8.0 * s.psi[i - 1] + 8.0 * s.psi[i + 1] -
         s.psi[i + 2]) /
        d;
  }
  s.dpsi[n - 1] = (3.0 * s.psi[n] + 10.0 * s.psi[n - 1] - 18.0 * s.psi[n - 2] +
                   6.0 * s.psi[n - 3] - s.psi[n - 4]) /
                  d;
  s.dpsi[n] = (25.0 * s.psi[n] - 48.0 * s.psi[n - 1] + 36.0 * s.psi[n - 2] -
               16.0 * s.psi[n - 3] + 3.0 * s.psi[n - 4]) /
              d;
}

// Classic RK4 on the first-order system (psi, phi)' = (phi, f psi).
// Reference path only; Numerov is the default.
void run_rk4(const Potential& pot, double k, Parity parity, double mass,
             double h, double ic_scale, WaveSamples& s) {
  const std::size_t n = s.xs.size() - 1;
  const double energy = energy_of(k, mass);
  auto f = [&](double x) { return 2.0 * mass * (pot.evaluate(x) - energy); };

  double psi = (parity == Parity::even ? 1.0 : 0.0) * ic_scale;
  double phi = (parity == Parity::even ? 0.0 : k) * ic_scale;
  s.psi[0] = psi;
  s.dpsi[0] = phi;

  for (std::size_t i = 0; i < n; ++i) {
    const double x = s.xs[i];
    const double k1p = phi;
    const double k1q = f(x) * psi;
    const double k2p = phi + 0.5 * h * k1q;
    const double k2q = f(x + 0.5 * h) * (psi + 0.5 * h * k1p);
    const double k3p = phi + 0.5 * h * k2q;
    const double k3q = f(x + 0.5 * h) * (psi + 0.5 * h * k2p);
    const double k4p = phi + h * k3q;
    const double k4q = f(x + h) * (psi + h * k3p);
    psi += h * (k1p + 2.0 * k2p + 2.0 * k3p + k4p) / 6.0;
    phi += h * (k1q + 2.0 * k2q + 2.0 * k3q + k4q) / 6.0;
    check_finite(psi, s.xs[i + 1]);
    check_finite(phi, s.xs[i + 1]);
    s.psi[i + 1] = psi;
    s.dpsi[i + 1] = phi;
  }
}

// Exact continuation into the region where V is negligible, grown from the
// endpoint values: psi'' = -k^2 psi beyond x_b.
PsiPair free_extension(const WaveSamples& s, double ax) {
  const double xb = s.x_edge();
  const double pb = s.psi.back();
  const double db = s.dpsi.back();
  const double c = std::cos(s.k * (ax - xb));
  const double si = std::sin(s.k * (ax - xb));
  return {pb * c + db / s.k * si, -s.k * pb * si + db * c};
}

struct Fold {
  double ax;          // folded coordinate, >= 0
  double value_sign;  // psi(x) = value_sign * psi(ax)
  double deriv_sign;  // psi'(x) = deriv_sign * psi'(ax)
};

Fold fold(const WaveSamples& s, double x) {
  if (x >= 0.0) return {x, 1.0, 1.0};
  const double sign = static_cast<double>(parity_sign(s.parity));
  return {-x, sign, -sign};
}

}  // namespace

int parity_sign(Parity p) { return p == Parity::even ? 1 : -1; }

const char* to_string(Parity p) { return p == Parity::even ? "even" : "odd"; }

double WaveSamples::grid_step() const {
  return xs.size() < 2 ? 0.0 : xs[1] - xs[0];
}

WaveSamples propagate(const Potential& potential, double k, Parity parity,
                      const SolverConfig& config, double ic_scale) {
  if (!(k > 0.0) || !std::isfinite(k)) {
    throw std::invalid_argument("propagate: k must be positive and finite");
  }
  if (!(config.mass > 0.0)) {
    throw std::invalid_argument("propagate: mass must be > 0");
  }
  if (!(config.step > 0.0)) {
    throw std::invalid_argument("propagate: step must be > 0");
  }
  if (ic_scale == 0.0 || !std::isfinite(ic_scale)) {
    throw std::invalid_argument(
        "propagate: ic_scale must be nonzero and finite");
  }

  WaveSamples s;
  s.k = k;
  s.parity = parity;
  s.config = config;

  const double xb = potential.support().hi;
  if (xb == 0.0) {
    // Degenerate support: the whole line is the outer region.
    s.xs = {0.0};
    s.psi = {(parity == Parity::even ? 1.0 : 0.0) * ic_scale};
    s.dpsi = {(parity == Parity::even ? 0.0 : k) * ic_scale};
    return s;
  }

  const auto n = static_cast<std::size_t>(std::ceil(xb / config.step - 1e-9));
  if (n < kMinCells) {
    std::ostringstream os;
    os << "propagate: step too coarse: " << n << " cells across [0, " << xb
       << "], need >= " << kMinCells;
    throw std::invalid_argument(os.str());
  }
  const double h = xb / static_cast<double>(n);

  s.xs.resize(n + 1);
  for (std::size_t i = 0; i <= n; ++i) {
    s.xs[i] = static_cast<double>(i) * h;
  }
  s.xs[n] = xb;
  s.psi.assign(n + 1, 0.0);
  s.dpsi.assign(n + 1, 0.0);

  if (config.method == Method::numerov) {
    run_numerov(potential, k, parity, config.mass, h, ic_scale, s);
  } else {
    run_rk4(potential, k, parity, config.mass, h, ic_scale, s);
  }
  return s;
}

double value_at(const WaveSamples& samples, double x) {
  const Fold f = fold(samples, x);
  const double xb = samples.x_edge();
  if (f.ax >= xb) return f.value_sign * free_extension(samples, f.ax).psi;
  const double h = samples.grid_step();
  const auto i = static_cast<std::size_t>(std::llround(f.ax / h));
  if (std::abs(f.ax - samples.xs[i]) > 1e-6 * h) {
    std::ostringstream os;
    os << "value_at: x = " << x << " is off the sample grid";
    throw std::invalid_argument(os.str());
  }
  return f.value_sign * samples.psi[i];
}

double derivative_at(const WaveSamples& samples, double x) {
  const Fold f = fold(samples, x);
  const double xb = samples.x_edge();
  if (f.ax >= xb) return f.deriv_sign * free_extension(samples, f.ax).dpsi;
  const double h = samples.grid_step();
  const auto i = static_cast<std::size_t>(std::llround(f.ax / h));
  if (std::abs(f.ax - samples.xs[i]) > 1e-6 * h) {
    std::ostringstream os;
    os << "derivative_at: x = " << x << " is off the sample grid";
    throw std::invalid_argument(os.str());
  }
  return f.deriv_sign * samples.dpsi[i];
}

PsiPair interpolate(const WaveSamples& samples, double x) {
  const Fold f = fold(samples, x);
  const double xb = samples.x_edge();
  if (f.ax >= xb) {
    const PsiPair tail = free_extension(samples, f.ax);
    return {f.value_sign * tail.psi, f.deriv_sign * tail.dpsi};
  }
  const double h = samples.grid_step();
  auto i = static_cast<std::size_t>(f.ax / h);
  if (i + 1 >= samples.xs.size()) i = samples.xs.size() - 2;
  const double t = (f.ax - samples.xs[i]) / h;

  // Cubic Hermite on [x_i, x_{i+1}] from endpoint values and slopes.
  const double p0 = samples.psi[i], p1 = samples.psi[i + 1];
  const double m0 = h * samples.dpsi[i], m1 = h * samples.dpsi[i + 1];
  const double t2 = t * t, t3 = t2 * t;
  const double psi = (2.0 * t3 - 3.0 * t2 + 1.0) * p0 +
                     (t3 - 2.0 * t2 + t) * m0 +
                     (-2.0 * t3 + 3.0 * t2) * p1 + (t3 - t2) * m1;
  const double dpsi = ((6.0 * t2 - 6.0 * t) * p0 +
                       (3.0 * t2 - 4.0 * t + 1.0) * m0 +
                       (-6.0 * t2 + 6.0 * t) * p1 + (3.0 * t2 - 2.0 * t) * m1) /
                      h;
  return {f.value_sign * psi, f.deriv_sign * dpsi};
}

WaveSamples scaled(const WaveSamples& samples, double factor) {
  if (!std::isfinite(factor)) {
    throw std::invalid_argument("scaled: factor must be finite");
  }
  WaveSamples out = samples;
  for (double& v : out.psi) v *= factor;
  for (double& v : out.dpsi) v *= factor;
  return out;
}

}  // namespace contnorm

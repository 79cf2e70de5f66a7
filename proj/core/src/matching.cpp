#include "contnorm/matching.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace contnorm {

namespace {
constexpr double kPi = std::numbers::pi;
}

AsymptoticAmplitude AsymptoticAmplitude::from_parts(double k, Parity parity,
                                                    double re, double im) {
  AsymptoticAmplitude a;
  a.k = k;
  a.parity = parity;
  a.re = re + 0.0;  // clear negative zero
  a.im = im + 0.0;
  a.modulus = std::hypot(re, im);
  a.phase = std::atan2(im, re);
  if (a.phase == -kPi) a.phase = kPi;
  return a;
}

AsymptoticAmplitude extract_amplitude(const WaveSamples& samples, double at) {
  if (!(samples.k > 0.0)) {
    throw std::invalid_argument("extract_amplitude: k must be > 0");
  }
  const double xb = samples.x_edge();
  if (at < xb) {
    std::ostringstream os;
    os << "extract_amplitude: matching point " << at
       << " lies inside the potential support (x_b = " << xb << ")";
    throw std::invalid_argument(os.str());
  }
  const PsiPair w = interpolate(samples, at);
  const double c = std::cos(samples.k * at);
  const double si = std::sin(samples.k * at);
  const double u = w.psi;
  const double v = w.dpsi / samples.k;
  // (u - i v)(cos - i sin) / 2
  return AsymptoticAmplitude::from_parts(samples.k, samples.parity,
                                         (u * c - v * si) / 2.0,
                                         -(u * si + v * c) / 2.0);
}

double phase_shift(const AsymptoticAmplitude& amplitude) {
  double r = std::remainder(amplitude.phase, kPi);
  if (r <= -kPi / 2.0) r += kPi;
  return r;
}

PsiPair outer_wave(const AsymptoticAmplitude& amplitude, double x) {
  const double c = std::cos(amplitude.k * x);
  const double si = std::sin(amplitude.k * x);
  return {2.0 * (amplitude.re * c - amplitude.im * si),
          -2.0 * amplitude.k * (amplitude.re * si + amplitude.im * c)};
}

}  // namespace contnorm

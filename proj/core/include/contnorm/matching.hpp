#pragma once

#include "contnorm/integrator.hpp"

namespace contnorm {

/// Complex amplitude A(k) of the outer-region form
///   psi_out(x) = A e^{ikx} + A* e^{-ikx} = 2|A| cos(kx + arg A).
struct AsymptoticAmplitude {
  double k = 0.0;
  Parity parity = Parity::even;
  double re = 0.0;
  double im = 0.0;
  double modulus = 0.0;  // hypot(re, im)
  double phase = 0.0;    // arg A in (-pi, pi]

  static AsymptoticAmplitude from_parts(double k, Parity parity, double re,
                                        double im);
};

/// Solves the two continuity conditions psi = A e^{ikx} + A* e^{-ikx} and
/// psi' = ik(A e^{ikx} - A* e^{-ikx}) at x = at, giving the unique
///   A = e^{-ik at} (psi(at) - i psi'(at)/k) / 2.
/// The matching point must satisfy at >= x_b; the modulus is independent of
/// the choice, the phase is not.
AsymptoticAmplitude extract_amplitude(const WaveSamples& samples, double at);

/// arg A reduced to (-pi/2, pi/2] modulo pi: the node shift of the
/// asymptotic cosine against the free solution, free of the parity
/// convention.
double phase_shift(const AsymptoticAmplitude& amplitude);

/// The outer wave 2 Re(A e^{ikx}) and its derivative, rebuilt from the
/// amplitude alone.
PsiPair outer_wave(const AsymptoticAmplitude& amplitude, double x);

}  // namespace contnorm

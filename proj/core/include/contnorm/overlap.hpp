#pragma once

#include <stdexcept>

#include "contnorm/integrator.hpp"

namespace contnorm {

enum class OverlapMethod { wronskian, quadrature, equal_k_limit };

const char* to_string(OverlapMethod m);

/// Value of the interval overlap integral of two stationary states, tagged
/// by the evaluation route.
struct OverlapResult {
  double value = 0.0;
  double k = 0.0;
  double kprime = 0.0;
  double x1 = 0.0;
  double x2 = 0.0;
  OverlapMethod method = OverlapMethod::quadrature;
};

/// Raised when |k - k'| falls below the degeneracy threshold; the boundary
/// formula is a 0/0 form there and the caller must use overlap_equal_k.
class degenerate_wavenumber : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Below this separation the boundary formula loses all precision in double
/// arithmetic.
double degeneracy_threshold(double k, double kprime);

/// Boundary-term evaluation of the overlap integral:
///
///   int_{x1}^{x2} psi_k psi_k' dx
///     = [psi'_k'(x) psi_k(x) - psi'_k(x) psi_k'(x)] / (k^2 - k'^2) |_{x1}^{x2}
///
/// Two solutions of the same equation at different energies make the
/// integrand an exact derivative; only endpoint values enter. a carries k,
/// b carries k'. Parities may differ.
OverlapResult overlap_wronskian(const WaveSamples& a, const WaveSamples& b,
                                double x1, double x2);

/// Composite Simpson quadrature of psi_k psi_k' on the integrator's grid,
/// the independent oracle for overlap_wronskian. Negative-x portions fold
/// onto positive x through the parity signs.
OverlapResult overlap_quadrature(const WaveSamples& a, const WaveSamples& b,
                                 double x1, double x2);

/// int psi_k^2 over [x1, x2] by quadrature, the k' -> k limit of the
/// boundary formula.
OverlapResult overlap_equal_k(const WaveSamples& a, double x1, double x2);

}  // namespace contnorm

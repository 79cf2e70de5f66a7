#include "contnorm/potential.hpp"

#include <cmath>
#include <sstream>
#include <stdexcept>

namespace contnorm {

namespace {

void require_finite(double v, const char* name) {
  if (!std::isfinite(v)) {
    throw std::invalid_argument(std::string("Potential: ") + name +
                                " must be finite");
  }
}

}  // namespace

Potential::Potential(PotentialKind kind, double v0, double width,
                     double epsilon_v)
    : kind_(kind), v0_(v0), width_(width), epsilon_v_(epsilon_v) {
  require_finite(v0, "V0");
  require_finite(width, "width");
  require_finite(epsilon_v, "epsilon_v");
  if (kind != PotentialKind::free_particle && !(width > 0.0)) {
    throw std::invalid_argument("Potential: width must be > 0");
  }
  if (!(epsilon_v >= 0.0)) {
    throw std::invalid_argument("Potential: epsilon_v must be >= 0");
  }
}

Potential Potential::square_well(double depth, double half_width,
                                 double epsilon_v) {
  return Potential(PotentialKind::square_well, depth, half_width, epsilon_v);
}

Potential Potential::square_barrier(double height, double half_width,
                                    double epsilon_v) {
  return Potential(PotentialKind::square_barrier, height, half_width,
                   epsilon_v);
}

Potential Potential::gaussian(double peak, double width, double epsilon_v) {
  return Potential(PotentialKind::gaussian, peak, width, epsilon_v);
}

Potential Potential::free_particle() {
  return Potential(PotentialKind::free_particle, 0.0, 0.0, 1e-12);
}

double Potential::evaluate(double x) const {
  if (!std::isfinite(x)) {
    throw std::invalid_argument("Potential::evaluate: x must be finite");
  }
  const double ax = std::abs(x);  // |x| makes V(x) = V(-x) exact
  switch (kind_) {
    case PotentialKind::square_well:
      return ax <= width_ ? -v0_ : 0.0;
    case PotentialKind::square_barrier:
      return ax <= width_ ? v0_ : 0.0;
    case PotentialKind::gaussian:
      return v0_ * std::exp(-ax * ax / (2.0 * width_ * width_));
    case PotentialKind::free_particle:
      return 0.0;
  }
  return 0.0;
}

Interval Potential::support() const {
  switch (kind_) {
    case PotentialKind::square_well:
    case PotentialKind::square_barrier:
      return {-width_, width_};
    case PotentialKind::gaussian: {
      if (!(epsilon_v_ > 0.0)) {
        throw std::invalid_argument(
            "Potential::support: epsilon_v must be > 0 for non-compact kinds");
      }
      const double peak = std::abs(v0_);
      if (peak <= epsilon_v_) return {0.0, 0.0};
      const double xb = width_ * std::sqrt(2.0 * std::log(peak / epsilon_v_));
      return {-xb, xb};
    }
    case PotentialKind::free_particle:
      return {0.0, 0.0};
  }
  return {0.0, 0.0};
}

double Potential::min_value() const {
  switch (kind_) {
    case PotentialKind::square_well:
      return std::min(0.0, -v0_);
    case PotentialKind::square_barrier:
    case PotentialKind::gaussian:
      return std::min(0.0, v0_);
    case PotentialKind::free_particle:
      return 0.0;
  }
  return 0.0;
}

std::string Potential::describe() const {
  std::ostringstream os;
  switch (kind_) {
    case PotentialKind::square_well:
      os << "square-well(V0=" << v0_ << ", a=" << width_ << ")";
      break;
    case PotentialKind::square_barrier:
      os << "square-barrier(V0=" << v0_ << ", a=" << width_ << ")";
      break;
    case PotentialKind::gaussian:
      os << "gaussian(V0=" << v0_ << ", w=" << width_
         << ", eps=" << epsilon_v_ << ")";
      break;
    case PotentialKind::free_particle:
      os << "free";
      break;
  }
  return os.str();
}

}  // namespace contnorm

#pragma once

#include <string>

namespace contnorm {

enum class PotentialKind { square_well, square_barrier, gaussian, free_particle };

/// Closed interval [lo, hi] on the x axis.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;
};

/// Real, spatially symmetric potential V(x) with effective finite range.
///
/// Compact kinds (square well/barrier) vanish identically beyond their edge;
/// the gaussian is truncated where |V| drops below epsilon_v. V(x) = V(-x)
/// holds exactly for every kind. Immutable after construction, safe to share
/// across threads.
class Potential {
public:
  /// V(x) = -depth for |x| <= half_width, 0 beyond.
  static Potential square_well(double depth, double half_width,
                               double epsilon_v = 1e-12);
  /// V(x) = +height for |x| <= half_width, 0 beyond.
  static Potential square_barrier(double height, double half_width,
                                  double epsilon_v = 1e-12);
  /// V(x) = peak * exp(-x^2 / (2 w^2)).
  static Potential gaussian(double peak, double width,
                            double epsilon_v = 1e-12);
  /// V identically zero.
  static Potential free_particle();

  PotentialKind kind() const { return kind_; }
  double v0() const { return v0_; }
  double width() const { return width_; }
  double epsilon_v() const { return epsilon_v_; }

  /// V at x. Total on finite inputs, exactly even in x.
  double evaluate(double x) const;

  /// Effective support [x_a, x_b] with x_a = -x_b; |V| <= epsilon_v beyond.
  /// Compact kinds report the exact edge; the gaussian solves |V(x_b)| =
  /// epsilon_v analytically. The free potential reports the degenerate [0, 0].
  Interval support() const;

  /// Infimum of V over the line. Negative values admit bound states.
  double min_value() const;

  std::string describe() const;

private:
  Potential(PotentialKind kind, double v0, double width, double epsilon_v);

  PotentialKind kind_;
  double v0_;
  double width_;
  double epsilon_v_;
};

}  // namespace contnorm

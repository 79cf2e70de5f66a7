#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "contnorm/potential.hpp"

using namespace contnorm;

TEST_CASE("square well evaluates to -V0 inside and 0 outside") {
  const Potential p = Potential::square_well(1.0, 1.0);
  CHECK(p.evaluate(0.0) == -1.0);
  CHECK(p.evaluate(0.999) == -1.0);
  CHECK(p.evaluate(1.0) == -1.0);  // edge belongs to the interior
  CHECK(p.evaluate(2.0) == 0.0);
  CHECK(p.evaluate(-2.0) == 0.0);
}

TEST_CASE("square barrier and gaussian peak values") {
  CHECK(Potential::square_barrier(2.0, 1.5).evaluate(1.0) == 2.0);
  CHECK(Potential::gaussian(1.0, 1.0).evaluate(0.0) == 1.0);
  CHECK(Potential::free_particle().evaluate(123.4) == 0.0);
}

TEST_CASE("evaluate is exactly even in x for random draws") {
  std::mt19937 rng(20240831);
  std::uniform_real_distribution<double> v0(-3.0, 3.0);
  std::uniform_real_distribution<double> width(0.1, 4.0);
  std::uniform_real_distribution<double> xdist(-20.0, 20.0);
  for (int trial = 0; trial < 200; ++trial) {
    Potential p = [&]() {
      switch (trial % 4) {
        case 0:
          return Potential::square_well(v0(rng), width(rng));
        case 1:
          return Potential::square_barrier(v0(rng), width(rng));
        case 2:
          return Potential::gaussian(v0(rng), width(rng));
        default:
          return Potential::free_particle();
      }
    }();
    const double x = xdist(rng);
    CHECK(p.evaluate(x) == p.evaluate(-x));
  }
}

TEST_CASE("support edges") {
  const Interval well = Potential::square_well(1.0, 1.0).support();
  CHECK(well.lo == -1.0);
  CHECK(well.hi == 1.0);

  const Interval none = Potential::free_particle().support();
  CHECK(none.lo == 0.0);
  CHECK(none.hi == 0.0);
}

TEST_CASE("gaussian support solves |V(x_b)| = epsilon_v") {
  // analytic edge: x_b = w sqrt(2 ln(V0/eps))
  const Potential p = Potential::gaussian(1.0, 1.0, 1e-12);
  const double expected = std::sqrt(2.0 * std::log(1e12));
  const Interval s = p.support();
  CHECK(s.hi == doctest::Approx(expected).epsilon(1e-14));
  CHECK(s.lo == -s.hi);

  // confirmed by evaluation: the tail is below epsilon from the edge out
  CHECK(std::abs(p.evaluate(s.hi)) == doctest::Approx(1e-12).epsilon(1e-10));
  for (double d : {0.01, 0.5, 2.0, 10.0}) {
    CHECK(std::abs(p.evaluate(s.hi + d)) < 1e-12);
  }

  const Potential p10 = Potential::gaussian(1.0, 1.0, 1e-10);
  CHECK(p10.support().hi ==
        doctest::Approx(std::sqrt(2.0 * std::log(1e10))).epsilon(1e-14));
}

TEST_CASE("support is idempotent and epsilon-monotone") {
  const Potential g = Potential::gaussian(2.0, 0.7, 1e-12);
  CHECK(g.support().hi == g.support().hi);

  double previous = 0.0;
  for (double eps : {1e-6, 1e-8, 1e-10, 1e-12, 1e-14}) {
    const double xb = Potential::gaussian(2.0, 0.7, eps).support().hi;
    CHECK(xb >= previous);  // shrinking eps never shrinks the support
    previous = xb;
  }

  // compact kinds ignore epsilon entirely
  CHECK(Potential::square_well(1.0, 1.0, 1e-6).support().hi == 1.0);
  CHECK(Potential::square_well(1.0, 1.0, 1e-14).support().hi == 1.0);
}

TEST_CASE("gaussian below epsilon everywhere degenerates to empty support") {
  const Potential p = Potential::gaussian(1e-15, 1.0, 1e-12);
  CHECK(p.support().hi == 0.0);
}

TEST_CASE("min_value flags attractive regions") {
  CHECK(Potential::square_well(1.0, 1.0).min_value() == -1.0);
  CHECK(Potential::square_barrier(1.0, 1.0).min_value() == 0.0);
  CHECK(Potential::square_barrier(-1.0, 1.0).min_value() == -1.0);
  CHECK(Potential::gaussian(-2.0, 1.0).min_value() == -2.0);
  CHECK(Potential::gaussian(0.5, 1.0).min_value() == 0.0);
  CHECK(Potential::free_particle().min_value() == 0.0);
}

TEST_CASE("invalid parameters are rejected") {
  CHECK_THROWS_AS(Potential::square_well(1.0, 0.0), std::invalid_argument);
  CHECK_THROWS_AS(Potential::square_well(1.0, -1.0), std::invalid_argument);
  CHECK_THROWS_AS(Potential::gaussian(1.0, 1.0, -1e-12),
                  std::invalid_argument);
  CHECK_THROWS_AS(Potential::gaussian(1.0, 1.0, 0.0).support(),
                  std::invalid_argument);
  const double nan = std::numeric_limits<double>::quiet_NaN();
  CHECK_THROWS_AS(Potential::square_well(nan, 1.0), std::invalid_argument);
  CHECK_THROWS_AS(Potential::square_well(1.0, 1.0).evaluate(
                      std::numeric_limits<double>::infinity()),
                  std::invalid_argument);
}

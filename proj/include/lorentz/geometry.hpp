#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

namespace lorentz {

/// Volume of the unit ball in R^n:  Omega_n = pi^(n/2) / Gamma(n/2 + 1).
/// Gamma comes from the C runtime, which is accurate to a relative error
/// well below 1e-12 on this range; the recursion Omega_n = Omega_{n-2} * 2pi/n
/// is a property test, not the implementation.
inline double unit_ball_volume(int n) {
  if (n < 1) throw std::invalid_argument("unit_ball_volume: dimension must be >= 1, got " + std::to_string(n));
  return std::pow(std::numbers::pi, 0.5 * n) / std::tgamma(0.5 * n + 1.0);
}

/// Surface measure of the unit sphere S^{n-1}:  omega_{n-1} = n * Omega_n.
inline double unit_sphere_area(int n) { return n * unit_ball_volume(n); }

/// Ball B(0, r) in R^n.  All gallery fields live on a centered ball.
struct BallDomain {
  int dim;
  double radius;

  BallDomain(int n, double r) : dim(n), radius(r) {
    if (n < 1) throw std::invalid_argument("BallDomain: dimension must be >= 1");
    if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("BallDomain: radius must be positive and finite");
  }

  /// Lebesgue measure Omega_n r^n.
  [[nodiscard]] double measure() const { return unit_ball_volume(dim) * std::pow(radius, dim); }

  /// Measure of the concentric sub-ball B(0, s), s <= radius.
  [[nodiscard]] double measure_at(double s) const { return unit_ball_volume(dim) * std::pow(s, dim); }
};

/// Open interval (a, b) on the line; the one-dimensional domains of the
/// pointwise Hoelder estimates.
struct Interval1D {
  double a;
  double b;

  Interval1D(double a_, double b_) : a(a_), b(b_) {
    if (!(a < b)) throw std::invalid_argument("Interval1D: requires a < b");
  }

  [[nodiscard]] double length() const { return b - a; }
};

}  // namespace lorentz

#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <string>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>

namespace lorentz {

/// Accuracy contract for every numerically evaluated integral in the library.
/// `max_subdivisions` bounds the number of adaptive panels (internally a
/// bisection depth of ceil(log2(max_subdivisions))); `tail_cutoff_decades`
/// controls where an unbounded integration range hands over to an analytic
/// tail formula.
struct QuadratureSpec {
  double rel_tol = 1e-10;
  double abs_tol = 1e-14;
  int max_subdivisions = 2000;
  double tail_cutoff_decades = 12.0;
};

namespace detail {
inline int adaptive_depth(const QuadratureSpec& spec) {
  int depth = 1;
  long long panels = 2;
  while (panels < spec.max_subdivisions && depth < 30) {
    panels <<= 1;
    ++depth;
  }
  return depth;
}
}  // namespace detail

/// Adaptive Gauss-Kronrod integration of a smooth integrand over [a, b].
/// The interval is mapped to [0, 1] first: the backend's error heuristic has a
/// floor proportional to the integrand magnitude while its tolerance scales
/// with the interval width, and on very narrow intervals the two never meet,
/// forcing full-depth subdivision of panels that converged long ago.
template <class F>
double integrate(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  if (!(b > a)) return 0.0;
  const double width = b - a;
  double err = 0.0;
  auto mapped = [&f, a, width](double u) { return f(a + width * u); };
  return width * boost::math::quadrature::gauss_kronrod<double, 15>::integrate(
                     mapped, 0.0, 1.0, detail::adaptive_depth(spec), spec.rel_tol, &err);
}

/// Double-exponential integration over [a, b]; tolerates integrable algebraic
/// or logarithmic singularities at either endpoint.
template <class F>
double integrate_singular(F&& f, double a, double b, const QuadratureSpec& spec = {}) {
  if (!(b > a)) return 0.0;
  boost::math::quadrature::tanh_sinh<double> integrator(15);
  try {
    return integrator.integrate(std::forward<F>(f), a, b, std::sqrt(spec.rel_tol));
  } catch (const boost::math::evaluation_error& e) {
    // The backend aborts when the integrand overflows at an abscissa; the
    // integrand's singularity is then stronger than this rule can absorb.
    throw std::runtime_error(std::string("integrate_singular: integrand not integrable "
                                         "under the double-exponential rule: ") +
                             e.what());
  }
}

/// Integral of an exponentially decaying integrand over [a, inf): the range is
/// truncated once the decay envelope exp(-decay_rate * (x - a)) has fallen by
/// `tail_cutoff_decades` decades plus a safety factor, which puts the discarded
/// remainder below the relative tolerance.
template <class F>
double integrate_decaying(F&& f, double a, double decay_rate, const QuadratureSpec& spec = {}) {
  if (!(decay_rate > 0.0)) throw std::invalid_argument("integrate_decaying: decay rate must be positive");
  const double decades = std::max(spec.tail_cutoff_decades + 4.0, 16.0);
  const double cutoff = a + decades * std::numbers::ln10 / decay_rate;
  return integrate(std::forward<F>(f), a, cutoff, spec);
}

/// Supremum of a continuous function over (0, L], located on a geometric grid
/// spanning `decades` decades below L and sharpened by golden-section refinement
/// around the best bracket.
template <class F>
double grid_supremum(F&& f, double L, int grid_points = 2048, double decades = 14.0) {
  if (!(L > 0.0)) return 0.0;
  const double lo = L * std::pow(10.0, -decades);
  double best = -std::numeric_limits<double>::infinity();
  int best_i = 0;
  const double step = std::log(L / lo) / (grid_points - 1);
  for (int i = 0; i < grid_points; ++i) {
    const double t = lo * std::exp(step * i);
    const double v = f(std::min(t, L));
    if (v > best) {
      best = v;
      best_i = i;
    }
  }
  // Golden-section refinement on the log axis inside the bracketing cells.
  double xa = std::log(lo) + step * std::max(0, best_i - 1);
  double xb = std::log(lo) + step * std::min(grid_points - 1, best_i + 1);
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = xb - gr * (xb - xa), d = xa + gr * (xb - xa);
  double fc = f(std::min(std::exp(c), L)), fd = f(std::min(std::exp(d), L));
  for (int it = 0; it < 200 && xb - xa > 1e-15; ++it) {
    if (fc < fd) {
      xa = c;
      c = d;
      fc = fd;
      d = xa + gr * (xb - xa);
      fd = f(std::min(std::exp(d), L));
    } else {
      xb = d;
      d = c;
      fd = fc;
      c = xb - gr * (xb - xa);
      fc = f(std::min(std::exp(c), L));
    }
  }
  return std::max({best, fc, fd});
}

}  // namespace lorentz

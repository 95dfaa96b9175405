#pragma once

#include <algorithm>
#include <functional>
#include <numeric>

#include "lorentz/fields.hpp"
#include "lorentz/geometry.hpp"
#include "lorentz/profiles.hpp"
#include "lorentz/quadrature.hpp"

namespace lorentz {

/// lambda_f(t) = measure of {|f| > t}.  Strict inequality, so the function is
/// right-continuous in t.
inline double distribution_function(const SampledField& f, double t) {
  if (!(t >= 0.0)) throw std::invalid_argument("distribution_function: threshold must be >= 0");
  double s = 0.0;
  for (const auto& c : f.cells)
    if (c.magnitude > t) s += c.weight;
  return s;
}

inline double distribution_function(const StepProfile& f, double t) { return f.distribution(t); }

/// Nonincreasing rearrangement of a sampled field: sort magnitudes
/// descending, lay the cell weights end to end.  Equal magnitudes merge and
/// zero cells drop out, so the profile support is the measure of {|f| > 0}.
inline StepProfile rearrange(const SampledField& f) {
  f.validate();
  std::vector<const Cell*> order;
  order.reserve(f.cells.size());
  for (const auto& c : f.cells)
    if (c.magnitude > 0.0) order.push_back(&c);
  std::stable_sort(order.begin(), order.end(),
                   [](const Cell* a, const Cell* b) { return a->magnitude > b->magnitude; });
  std::vector<double> bp{0.0}, vals;
  for (const Cell* c : order) {
    if (!vals.empty() && vals.back() == c->magnitude) {
      bp.back() += c->weight;
    } else {
      vals.push_back(c->magnitude);
      bp.push_back(bp.back() + c->weight);
    }
  }
  return StepProfile::make(std::move(bp), std::move(vals));
}

/// Rearrangement of the radial field x |-> phi(|x|) on B(0, r) for a
/// nonincreasing phi: exactly t |-> phi((t/Omega_n)^(1/n)) on [0, Omega_n r^n).
/// This generic entry point discretizes a numeric phi over geometrically
/// graded shells; analytically known radial fields get their exact profiles
/// from the gallery catalog instead.
inline StepProfile rearrange_radial(const std::function<double(double)>& phi, int n, double r,
                                    int shells = 4096, double head_decades = 12.0) {
  if (n < 1) throw std::invalid_argument("rearrange_radial: dimension must be >= 1");
  if (!(r > 0.0)) throw std::invalid_argument("rearrange_radial: radius must be positive");
  if (shells < 2) throw std::invalid_argument("rearrange_radial: need at least 2 shells");
  const double omega = unit_ball_volume(n);
  const double ratio = std::pow(10.0, head_decades / shells);
  std::vector<double> bp{0.0}, vals;
  bp.reserve(shells + 1);
  vals.reserve(shells);
  double s_hi = r * std::pow(10.0, -head_decades);
  // Innermost cell [0, s_hi) is sampled at the geometric midpoint of one more
  // virtual subdivision below it.
  vals.push_back(phi(s_hi / std::sqrt(ratio)));
  bp.push_back(omega * std::pow(s_hi, n));
  for (int j = 1; j <= shells; ++j) {
    const double s_lo = s_hi;
    s_hi = (j == shells) ? r : s_lo * ratio;
    vals.push_back(phi(std::sqrt(s_lo * s_hi)));
    bp.push_back(omega * std::pow(s_hi, n));
  }
  // A numeric phi need not be strictly decreasing cell to cell; enforce the
  // step invariant before constructing.
  for (std::size_t i = 1; i < vals.size(); ++i) vals[i] = std::min(vals[i], vals[i - 1]);
  return StepProfile::make(std::move(bp), std::move(vals));
}

/// The maximal average f**(t) = (1/t) \int_0^t f*(s) ds of a profile.  The
/// object behaves as a profile itself (continuous, nonincreasing, defined for
/// all t > 0 with the algebraic tail (1/t) \int f* beyond the support); a
/// divergent head integral is reported instead of silently returning Inf from
/// arithmetic.
class MaximalFunction {
 public:
  explicit MaximalFunction(Profile base, QuadratureSpec quad = {}) : base_(std::move(base)), quad_(quad) {
    if (const auto* pw = std::get_if<PowerProfile>(&base_)) divergent_ = pw->exponent >= 1.0;
    if (const auto* st = std::get_if<StepProfile>(&base_)) {
      cumulative_.assign(1, 0.0);
      for (std::size_t i = 0; i < st->steps(); ++i)
        cumulative_.push_back(cumulative_.back() +
                              st->values()[i] * (st->breakpoints()[i + 1] - st->breakpoints()[i]));
    }
  }

  [[nodiscard]] bool head_divergent() const { return divergent_; }

  /// \int_0^t f*(s) ds.
  [[nodiscard]] double integral_to(double t) const {
    if (!(t >= 0.0)) throw std::invalid_argument("MaximalFunction: requires t >= 0");
    if (divergent_) return std::numeric_limits<double>::infinity();
    if (t == 0.0) return 0.0;
    return std::visit(
        [&](const auto& g) -> double {
          using T = std::decay_t<decltype(g)>;
          if constexpr (std::is_same_v<T, StepProfile>) {
            const auto& bp = g.breakpoints();
            auto it = std::upper_bound(bp.begin(), bp.end(), t);
            const auto idx = static_cast<std::size_t>(it - bp.begin());
            if (idx > g.steps()) return cumulative_.back();
            return cumulative_[idx - 1] + g.values()[idx - 1] * (t - bp[idx - 1]);
          } else if constexpr (std::is_same_v<T, PowerProfile>) {
            const double u = std::min(t, g.support_end);
            return g.coeff * std::pow(u, 1.0 - g.exponent) / (1.0 - g.exponent);
          } else if constexpr (std::is_same_v<T, LogPowerProfile>) {
            // s = A e^{-w} turns the head integral into an exponentially
            // decaying one: A^gamma \int_{ln(A/t)}^inf e^{-gamma w} w^{-alpha} dw.
            const double gamma = 1.0 - 1.0 / g.p;
            const double u = std::min(t, g.support_end);
            const double w0 = std::log(g.log_offset / u);
            const double scale = std::pow(g.log_offset, gamma);
            const double alpha = g.alpha;
            return scale * integrate_decaying(
                               [gamma, alpha](double w) { return std::exp(-gamma * w) * std::pow(w, -alpha); },
                               w0, gamma, quad_);
          } else {
            return g.height * std::min(t, g.support_end);
          }
        },
        base_);
  }

  [[nodiscard]] double total_integral() const { return integral_to(profile_support_end(base_)); }

  /// f**(t); +inf for t = 0 when the underlying profile is unbounded, and for
  /// every t when the head integral diverges.
  [[nodiscard]] double operator()(double t) const {
    if (!(t >= 0.0)) throw std::invalid_argument("MaximalFunction: requires t >= 0");
    if (divergent_) return std::numeric_limits<double>::infinity();
    if (t == 0.0) return profile_value(base_, 0.0);
    return integral_to(t) / t;
  }

  [[nodiscard]] const Profile& base() const { return base_; }

 private:
  Profile base_;
  QuadratureSpec quad_;
  std::vector<double> cumulative_;
  bool divergent_ = false;
};

inline MaximalFunction maximal_profile(const Profile& f, const QuadratureSpec& quad = {}) {
  return MaximalFunction(f, quad);
}

}  // namespace lorentz

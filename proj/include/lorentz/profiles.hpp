#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <variant>
#include <vector>

namespace lorentz {

/// Right-continuous nonincreasing step function on [0, inf): value v_i on
/// [t_{i-1}, t_i) and 0 beyond the last breakpoint.  Canonical form keeps
/// breakpoints strictly increasing with t_0 = 0, values strictly positive and
/// nonincreasing, and equal-value neighbours merged.
class StepProfile {
 public:
  StepProfile() : breakpoints_{0.0} {}

  /// `breakpoints` = t_0 .. t_k with t_0 = 0, `values` = v_1 .. v_k.
  static StepProfile make(std::vector<double> breakpoints, std::vector<double> values) {
    if (breakpoints.empty() || breakpoints.front() != 0.0)
      throw std::invalid_argument("StepProfile: breakpoints must start at 0");
    if (breakpoints.size() != values.size() + 1)
      throw std::invalid_argument("StepProfile: need one more breakpoint than values");
    for (std::size_t i = 1; i < breakpoints.size(); ++i) {
      if (!(breakpoints[i] > breakpoints[i - 1]) || !std::isfinite(breakpoints[i]))
        throw std::invalid_argument("StepProfile: breakpoints must be finite and strictly increasing");
    }
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (!(values[i] >= 0.0) || !std::isfinite(values[i]))
        throw std::invalid_argument("StepProfile: values must be finite and nonnegative");
      if (i > 0 && values[i] > values[i - 1])
        throw std::invalid_argument("StepProfile: values must be nonincreasing");
    }
    StepProfile out;
    out.breakpoints_.clear();
    out.breakpoints_.push_back(0.0);
    for (std::size_t i = 0; i < values.size(); ++i) {
      if (values[i] == 0.0) break;  // nonincreasing, so the rest is zero too
      if (!out.values_.empty() && values[i] == out.values_.back()) {
        out.breakpoints_.back() = breakpoints[i + 1];  // merge the tie
      } else {
        out.values_.push_back(values[i]);
        out.breakpoints_.push_back(breakpoints[i + 1]);
      }
    }
    return out;
  }

  [[nodiscard]] const std::vector<double>& breakpoints() const { return breakpoints_; }
  [[nodiscard]] const std::vector<double>& values() const { return values_; }
  [[nodiscard]] std::size_t steps() const { return values_.size(); }
  [[nodiscard]] bool is_zero() const { return values_.empty(); }
  [[nodiscard]] double support_end() const { return breakpoints_.back(); }

  /// Right-continuous evaluation; 0 beyond the support.
  [[nodiscard]] double operator()(double t) const {
    if (!(t >= 0.0)) throw std::invalid_argument("StepProfile: evaluation requires t >= 0");
    auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), t);
    const auto idx = static_cast<std::size_t>(it - breakpoints_.begin());  // >= 1 since t >= t_0 = 0
    if (idx > values_.size()) return 0.0;
    return values_[idx - 1];
  }

  /// Measure of {t : value > v}.
  [[nodiscard]] double distribution(double v) const {
    if (!(v >= 0.0)) throw std::invalid_argument("StepProfile: distribution requires v >= 0");
    std::size_t count = 0;
    while (count < values_.size() && values_[count] > v) ++count;
    return breakpoints_[count];
  }

  /// Integral over the whole support (finite sum).
  [[nodiscard]] double total_integral() const {
    double s = 0.0;
    for (std::size_t i = 0; i < values_.size(); ++i) s += values_[i] * (breakpoints_[i + 1] - breakpoints_[i]);
    return s;
  }

  friend bool operator==(const StepProfile& a, const StepProfile& b) {
    return a.breakpoints_ == b.breakpoints_ && a.values_ == b.values_;
  }

 private:
  std::vector<double> breakpoints_;
  std::vector<double> values_;
};

/// c * t^(-beta) on [0, T).
struct PowerProfile {
  double coeff;
  double exponent;
  double support_end;

  PowerProfile(double c, double beta, double T) : coeff(c), exponent(beta), support_end(T) {
    if (!(c > 0.0) || !std::isfinite(c)) throw std::invalid_argument("PowerProfile: coefficient must be positive");
    if (!(beta > 0.0) || !std::isfinite(beta)) throw std::invalid_argument("PowerProfile: exponent must be positive");
    if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("PowerProfile: support end must be positive");
  }

  [[nodiscard]] double operator()(double t) const {
    if (!(t >= 0.0)) throw std::invalid_argument("PowerProfile: evaluation requires t >= 0");
    if (t >= support_end) return 0.0;
    if (t == 0.0) return std::numeric_limits<double>::infinity();
    return coeff * std::pow(t, -exponent);
  }
};

/// t^(-1/p) * ln^(-alpha)(A / t) on [0, T), where A is the log offset.
/// Admissibility needs T * e^(p*alpha) <= A, which makes the profile strictly
/// decreasing on its support.  The canonical three-parameter family uses
/// A = T * e^(p*alpha); head restrictions shrink T and keep A, staying in
/// the family.
struct LogPowerProfile {
  double p;
  double alpha;
  double log_offset;
  double support_end;

  LogPowerProfile(double p_, double alpha_, double A, double T)
      : p(p_), alpha(alpha_), log_offset(A), support_end(T) {
    if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("LogPowerProfile: p must lie in (1, inf)");
    if (!(alpha > 0.0) || !std::isfinite(alpha)) throw std::invalid_argument("LogPowerProfile: alpha must be positive");
    if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("LogPowerProfile: support end must be positive");
    // 1 ulp of slack so that the canonical construction T * exp(p alpha) passes its own check.
    if (!(std::log(A / T) >= p * alpha * (1.0 - 1e-12)))
      throw std::invalid_argument("LogPowerProfile: requires T * exp(p*alpha) <= A");
  }

  static LogPowerProfile standard(double p, double alpha, double T) {
    return LogPowerProfile(p, alpha, T * std::exp(p * alpha), T);
  }

  /// ln(A/T), the value of the logarithm at the right end of the support;
  /// equals p*alpha exactly for the canonical family.
  [[nodiscard]] double edge_log() const { return std::log(log_offset / support_end); }

  [[nodiscard]] double operator()(double t) const {
    if (!(t >= 0.0)) throw std::invalid_argument("LogPowerProfile: evaluation requires t >= 0");
    if (t >= support_end) return 0.0;
    if (t == 0.0) return std::numeric_limits<double>::infinity();
    return std::pow(t, -1.0 / p) * std::pow(std::log(log_offset / t), -alpha);
  }
};

/// h on [0, T), 0 beyond.
struct IndicatorProfile {
  double height;
  double support_end;

  IndicatorProfile(double h, double T) : height(h), support_end(T) {
    if (!(h >= 0.0) || !std::isfinite(h)) throw std::invalid_argument("IndicatorProfile: height must be nonnegative");
    if (!(T > 0.0) || !std::isfinite(T)) throw std::invalid_argument("IndicatorProfile: support end must be positive");
  }

  [[nodiscard]] double operator()(double t) const {
    if (!(t >= 0.0)) throw std::invalid_argument("IndicatorProfile: evaluation requires t >= 0");
    return t < support_end ? height : 0.0;
  }
};

using Profile = std::variant<StepProfile, PowerProfile, LogPowerProfile, IndicatorProfile>;

inline double profile_value(const Profile& f, double t) {
  return std::visit([t](const auto& g) { return g(t); }, f);
}

inline double profile_support_end(const Profile& f) {
  return std::visit([](const auto& g) -> double {
    if constexpr (std::is_same_v<std::decay_t<decltype(g)>, StepProfile>) return g.support_end();
    else return g.support_end;
  }, f);
}

/// Restriction of the profile to the head [0, m): the rearrangement of the
/// underlying function restricted to its super-level set of measure m.  Every
/// family is closed under this operation.
inline Profile head_restriction(const Profile& f, double m) {
  if (!(m >= 0.0)) throw std::invalid_argument("head_restriction: measure must be nonnegative");
  if (m == 0.0) return StepProfile{};
  return std::visit([m](const auto& g) -> Profile {
    using T = std::decay_t<decltype(g)>;
    if constexpr (std::is_same_v<T, StepProfile>) {
      if (m >= g.support_end()) return g;
      std::vector<double> bp{0.0}, vals;
      for (std::size_t i = 0; i < g.steps() && g.breakpoints()[i] < m; ++i) {
        vals.push_back(g.values()[i]);
        bp.push_back(std::min(g.breakpoints()[i + 1], m));
      }
      return StepProfile::make(std::move(bp), std::move(vals));
    } else if constexpr (std::is_same_v<T, PowerProfile>) {
      return PowerProfile(g.coeff, g.exponent, std::min(g.support_end, m));
    } else if constexpr (std::is_same_v<T, LogPowerProfile>) {
      return LogPowerProfile(g.p, g.alpha, g.log_offset, std::min(g.support_end, m));
    } else {
      return IndicatorProfile(g.height, std::min(g.support_end, m));
    }
  }, f);
}

}  // namespace lorentz

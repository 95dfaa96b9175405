#pragma once

#include <cmath>
#include <functional>
#include <string>

#include "lorentz/exponents.hpp"
#include "lorentz/profiles.hpp"
#include "lorentz/quadrature.hpp"
#include "lorentz/rearrange.hpp"

namespace lorentz {

enum class DivergenceReason { HeadDivergence, TailDivergence, LogExponentTest };

inline const char* to_string(DivergenceReason r) {
  switch (r) {
    case DivergenceReason::HeadDivergence: return "HEAD_DIVERGENCE";
    case DivergenceReason::TailDivergence: return "TAIL_DIVERGENCE";
    case DivergenceReason::LogExponentTest: return "LOG_EXPONENT_TEST";
  }
  return "UNKNOWN";
}

/// Extended nonnegative result of a norm evaluation.  An infinite norm always
/// carries the reason the defining integral diverges; arithmetic on an
/// infinite value is a logic error, not a NaN.
class NormValue {
 public:
  static NormValue finite(double v) {
    if (!(v >= 0.0) || !std::isfinite(v))
      throw std::invalid_argument("NormValue::finite: value must be finite and nonnegative");
    return NormValue(true, v, DivergenceReason::HeadDivergence);
  }
  static NormValue infinite(DivergenceReason r) { return NormValue(false, 0.0, r); }

  [[nodiscard]] bool is_finite() const { return finite_; }
  [[nodiscard]] double value() const {
    if (!finite_) throw std::logic_error("NormValue::value: norm is infinite");
    return value_;
  }
  [[nodiscard]] DivergenceReason reason() const {
    if (finite_) throw std::logic_error("NormValue::reason: norm is finite");
    return reason_;
  }

  [[nodiscard]] std::string str() const {
    if (!finite_) return std::string("INFINITE(") + to_string(reason_) + ")";
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.12g", value_);
    return buf;
  }

 private:
  NormValue(bool f, double v, DivergenceReason r) : finite_(f), value_(v), reason_(r) {}
  bool finite_;
  double value_;
  DivergenceReason reason_;
};

struct Classification {
  bool finite;
  DivergenceReason reason;  // meaningful only when !finite
};

/// Analytic convergence decision for the quasinorm integral
/// \int_0^inf (t^{1/p} f(t))^q dt/t.  No quadrature enters the decision path.
inline Classification classify_convergence(const Profile& f, const ExponentPair& pq) {
  return std::visit(
      [&](const auto& g) -> Classification {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, StepProfile> || std::is_same_v<T, IndicatorProfile>) {
          return {true, DivergenceReason::HeadDivergence};
        } else if constexpr (std::is_same_v<T, PowerProfile>) {
          const double e = 1.0 / pq.p - g.exponent;
          if (pq.q_infinite()) {
            if (e >= 0.0) return {true, DivergenceReason::HeadDivergence};
            return {false, DivergenceReason::HeadDivergence};
          }
          if (e > 0.0) return {true, DivergenceReason::HeadDivergence};
          return {false, DivergenceReason::HeadDivergence};
        } else {
          const double delta = 1.0 / pq.p - 1.0 / g.p;
          if (delta < 0.0) return {false, DivergenceReason::HeadDivergence};
          if (delta > 0.0) return {true, DivergenceReason::HeadDivergence};
          if (pq.q_infinite()) return {true, DivergenceReason::HeadDivergence};
          // Matched exponent: the substitution u = ln(A/t) leaves
          // \int_{W0}^inf u^{-q alpha} du, finite iff q*alpha > 1.
          if (pq.q_value() * g.alpha > 1.0) return {true, DivergenceReason::HeadDivergence};
          return {false, DivergenceReason::LogExponentTest};
        }
      },
      f);
}

namespace detail {

/// \int_{W0}^inf e^{-c (w - W0)} w^{-a} dw for c > 0 (exponentially decaying).
inline double exp_power_integral(double W0, double c, double a, const QuadratureSpec& quad) {
  return integrate_decaying([c, a, W0](double w) { return std::exp(-c * (w - W0)) * std::pow(w, -a); },
                            W0, c, quad);
}

}  // namespace detail

/// The Lorentz quasinorm ||f||_{p,q} of a nonincreasing profile, through the
/// closed forms of each family:
///   step:      ( sum_i v_i^q (p/q) (t_i^{q/p} - t_{i-1}^{q/p}) )^{1/q};
///              q = inf: max_i v_i t_i^{1/p}
///   indicator: h (p/q)^{1/q} T^{1/p};  q = inf: h T^{1/p}
///   power:     c T^{1/p - beta} (q (1/p - beta))^{-1/q};  q = inf: c T^{1/p - beta}
///   log-power (matched p): ( W0^{1 - q alpha} / (q alpha - 1) )^{1/q} with
///              W0 = ln(A/T);  q = inf: W0^{-alpha}
/// The only family/exponent combination without a closed form (log-power
/// evaluated at a strictly larger primary exponent) falls back to an
/// exponentially decaying integral.  Divergence is decided analytically first.
inline NormValue quasinorm(const Profile& f, const ExponentPair& pq, const QuadratureSpec& quad = {}) {
  const Classification cls = classify_convergence(f, pq);
  if (!cls.finite) return NormValue::infinite(cls.reason);
  const double p = pq.p;
  return std::visit(
      [&](const auto& g) -> NormValue {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, StepProfile>) {
          if (g.is_zero()) return NormValue::finite(0.0);
          if (pq.q_infinite()) {
            double best = 0.0;
            for (std::size_t i = 0; i < g.steps(); ++i)
              best = std::max(best, g.values()[i] * std::pow(g.breakpoints()[i + 1], 1.0 / p));
            return NormValue::finite(best);
          }
          const double q = pq.q_value();
          double s = 0.0;
          for (std::size_t i = 0; i < g.steps(); ++i)
            s += std::pow(g.values()[i], q) * (p / q) *
                 (std::pow(g.breakpoints()[i + 1], q / p) - std::pow(g.breakpoints()[i], q / p));
          return NormValue::finite(std::pow(s, 1.0 / q));
        } else if constexpr (std::is_same_v<T, IndicatorProfile>) {
          if (g.height == 0.0) return NormValue::finite(0.0);
          if (pq.q_infinite()) return NormValue::finite(g.height * std::pow(g.support_end, 1.0 / p));
          const double q = pq.q_value();
          return NormValue::finite(g.height * std::pow(p / q, 1.0 / q) * std::pow(g.support_end, 1.0 / p));
        } else if constexpr (std::is_same_v<T, PowerProfile>) {
          const double e = 1.0 / p - g.exponent;
          if (pq.q_infinite()) return NormValue::finite(g.coeff * std::pow(g.support_end, e));
          const double q = pq.q_value();
          return NormValue::finite(g.coeff * std::pow(g.support_end, e) * std::pow(q * e, -1.0 / q));
        } else {
          const double delta = 1.0 / p - 1.0 / g.p;
          const double W0 = g.edge_log();
          if (pq.q_infinite())
            return NormValue::finite(std::pow(g.support_end, delta) * std::pow(W0, -g.alpha));
          const double q = pq.q_value();
          if (delta == 0.0) {
            const double qa = q * g.alpha;
            return NormValue::finite(std::pow(std::pow(W0, 1.0 - qa) / (qa - 1.0), 1.0 / q));
          }
          const double integral = detail::exp_power_integral(W0, q * delta, q * g.alpha, quad);
          return NormValue::finite(std::pow(g.support_end, delta) * std::pow(integral, 1.0 / q));
        }
      },
      f);
}

/// Independent numerical evaluation of the finite-q quasinorm, used to
/// cross-validate the closed forms.  Step, indicator and power profiles are
/// integrated in t directly (double-exponential rule absorbs the algebraic
/// head weight); log-power profiles are integrated after u = ln(A/t), with
/// adaptive panels on [W0, U] and the analytic power tail
/// \int_U^inf u^{-q alpha} du = U^{1 - q alpha}/(q alpha - 1) beyond the
/// cutoff.  Requires a FINITE analytic classification: divergence is never
/// probed by quadrature.
inline double quasinorm_quadrature(const Profile& f, const ExponentPair& pq,
                                   const QuadratureSpec& quad = {}) {
  if (pq.q_infinite())
    throw std::invalid_argument("quasinorm_quadrature: q = inf has an exact sup evaluation, not a quadrature");
  const Classification cls = classify_convergence(f, pq);
  if (!cls.finite)
    throw std::invalid_argument("quasinorm_quadrature: profile/exponent pair classified divergent");
  const double p = pq.p;
  const double q = pq.q_value();
  return std::visit(
      [&](const auto& g) -> double {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, LogPowerProfile>) {
          const double delta = 1.0 / p - 1.0 / g.p;
          const double W0 = g.edge_log();
          const double qa = q * g.alpha;
          if (delta == 0.0) {
            const double U = std::max(2.0 * W0, W0 + quad.tail_cutoff_decades * std::numbers::ln10);
            const double panels =
                integrate([qa](double w) { return std::pow(w, -qa); }, W0, U, quad);
            const double tail = std::pow(U, 1.0 - qa) / (qa - 1.0);
            return std::pow(panels + tail, 1.0 / q);
          }
          const double Tdelta = std::pow(g.support_end, delta);
          const double integral = detail::exp_power_integral(W0, q * delta, qa, quad);
          return Tdelta * std::pow(integral, 1.0 / q);
        } else {
          const double T_end = [&] {
            if constexpr (std::is_same_v<T, StepProfile>) return g.support_end();
            else return g.support_end;
          }();
          if (T_end == 0.0) return 0.0;
          auto integrand = [&](double t) {
            const double v = g(t);
            if (v == 0.0) return 0.0;
            return std::pow(t, q / p - 1.0) * std::pow(v, q);
          };
          if constexpr (std::is_same_v<T, StepProfile>) {
            if (g.is_zero()) return 0.0;
            // Integrate piece by piece so the panel edges line up with the jumps.
            double s = integrate_singular(integrand, 0.0, g.breakpoints()[1], quad);
            for (std::size_t i = 1; i < g.steps(); ++i)
              s += integrate(integrand, g.breakpoints()[i], g.breakpoints()[i + 1], quad);
            return std::pow(s, 1.0 / q);
          } else {
            return std::pow(integrate_singular(integrand, 0.0, T_end, quad), 1.0 / q);
          }
        }
      },
      f);
}

/// Head-truncated power integral \int_eps^T (t^{1/p} f(t))^q dt/t, evaluated
/// numerically after the substitution t = T e^{-u}.  Finite for every eps > 0
/// whether or not the full integral converges; the divergence tests watch this
/// quantity grow as eps shrinks.
inline double truncated_head_integral(const Profile& f, const ExponentPair& pq, double eps,
                                      const QuadratureSpec& quad = {}) {
  if (pq.q_infinite()) throw std::invalid_argument("truncated_head_integral: requires finite q");
  if (!(eps > 0.0)) throw std::invalid_argument("truncated_head_integral: requires eps > 0");
  const double T = profile_support_end(f);
  if (!(eps < T)) return 0.0;
  const double p = pq.p;
  const double q = pq.q_value();
  auto integrand = [&](double u) {
    const double t = T * std::exp(-u);
    const double v = profile_value(f, t);
    if (v == 0.0) return 0.0;
    return std::pow(std::pow(t, 1.0 / p) * v, q);
  };
  return integrate(integrand, 0.0, std::log(T / eps), quad);
}

/// ||f||_{(p,q)}: the quasinorm of the maximal average f**.  The tail beyond
/// the support, where f**(t) = (\int f*)/t, is integrated analytically:
///   \int_T^inf (t^{1/p - 1} S)^q dt/t = (p'/q) (S T^{1/p - 1})^q.
inline NormValue starstar_norm(const Profile& f, const ExponentPair& pq,
                               const QuadratureSpec& quad = {}) {
  const Classification cls = classify_convergence(f, pq);
  if (!cls.finite) return NormValue::infinite(cls.reason);
  const double p = pq.p;
  const double pprime = conjugate_exponent(p);
  return std::visit(
      [&](const auto& g) -> NormValue {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, StepProfile>) {
          if (g.is_zero()) return NormValue::finite(0.0);
          MaximalFunction fs(Profile(g), quad);
          const double t_end = g.support_end();
          const double S = fs.total_integral();
          if (pq.q_infinite()) {
            // t^{1/p} f**(t) is increasing-then-decreasing piecewise with
            // piecewise extrema at the breakpoints; f** is continuous.
            double best = 0.0;
            for (std::size_t i = 1; i < g.breakpoints().size(); ++i) {
              const double t = g.breakpoints()[i];
              best = std::max(best, std::pow(t, 1.0 / p) * fs(t));
            }
            return NormValue::finite(best);
          }
          const double q = pq.q_value();
          // Head piece [0, t_1): f** = v_1 exactly.
          double s = std::pow(g.values()[0], q) * (p / q) * std::pow(g.breakpoints()[1], q / p);
          for (std::size_t i = 1; i < g.steps(); ++i) {
            auto piece = [&](double t) { return std::pow(t, q / p - 1.0) * std::pow(fs(t), q); };
            s += integrate(piece, g.breakpoints()[i], g.breakpoints()[i + 1], quad);
          }
          s += (pprime / q) * std::pow(S * std::pow(t_end, 1.0 / p - 1.0), q);
          return NormValue::finite(std::pow(s, 1.0 / q));
        } else if constexpr (std::is_same_v<T, IndicatorProfile>) {
          if (g.height == 0.0) return NormValue::finite(0.0);
          const double base = g.height * std::pow(g.support_end, 1.0 / p);
          if (pq.q_infinite()) return NormValue::finite(base);
          const double q = pq.q_value();
          return NormValue::finite(base * std::pow(p * pprime / q, 1.0 / q));
        } else if constexpr (std::is_same_v<T, PowerProfile>) {
          const double e = 1.0 / p - g.exponent;
          const double cb = g.coeff / (1.0 - g.exponent);
          if (pq.q_infinite()) return NormValue::finite(cb * std::pow(g.support_end, e));
          const double q = pq.q_value();
          const double total = std::pow(cb, q) * std::pow(g.support_end, q * e) * (1.0 / (q * e) + pprime / q);
          return NormValue::finite(std::pow(total, 1.0 / q));
        } else {
          const double delta = 1.0 / p - 1.0 / g.p;
          if (delta == 0.0) {
            // With t = T e^{-u}:  t^{1/p} f**(t) = Psi(W0 + u), where
            // Psi(w) = \int_0^inf e^{-s/p'} (w + s)^{-alpha} ds.
            const double gamma = 1.0 - 1.0 / g.p;
            const double alpha = g.alpha;
            const double W0 = g.edge_log();
            auto Psi = [&](double w) {
              return integrate_decaying(
                  [gamma, alpha, w](double s) { return std::exp(-gamma * s) * std::pow(w + s, -alpha); }, 0.0,
                  gamma, quad);
            };
            const double psi0 = Psi(W0);
            if (pq.q_infinite()) return NormValue::finite(psi0);
            const double q = pq.q_value();
            // x = W0 / w maps the head integral onto (0, 1] with a purely
            // algebraic endpoint singularity x^{q alpha - 2}.
            auto integrand = [&](double x) {
              const double w = W0 / x;
              const double psi = Psi(w);
              if (psi <= 0.0) return 0.0;
              const double lv = q * std::log(psi) - 2.0 * std::log(x);
              if (lv < -700.0) return 0.0;
              return std::exp(lv);
            };
            const double head = W0 * integrate_singular(integrand, 0.0, 1.0, quad);
            const double total = head + (pprime / q) * std::pow(psi0, q);
            return NormValue::finite(std::pow(total, 1.0 / q));
          }
          // delta > 0 (delta < 0 was classified divergent): no special
          // structure, integrate t^{1/p-1} F(t) numerically; the integrand
          // decays like e^{-q delta u} in u = ln(T/t).
          MaximalFunction fs(Profile(g), quad);
          const double T_end = g.support_end;
          const double S = fs.total_integral();
          auto weighted = [&](double t) { return std::pow(t, 1.0 / p) * fs(t); };
          if (pq.q_infinite()) {
            const double head_sup = grid_supremum(weighted, T_end, 1024, quad.tail_cutoff_decades);
            return NormValue::finite(std::max(head_sup, S * std::pow(T_end, 1.0 / p - 1.0)));
          }
          const double q = pq.q_value();
          auto integrand = [&](double u) {
            const double t = T_end * std::exp(-u);
            return std::pow(weighted(t), q);
          };
          const double head = integrate_decaying(integrand, 0.0, q * delta, quad);
          const double tail = (pprime / q) * std::pow(S * std::pow(T_end, 1.0 / p - 1.0), q);
          return NormValue::finite(std::pow(head + tail, 1.0 / q));
        }
      },
      f);
}

/// Quasinorm of a numeric nonincreasing profile given only as an evaluator on
/// (0, L).  Finite q uses the substitution z = t^{q/p}, which absorbs the
/// algebraic weight; q = inf locates sup t^{1/p} g(t) on a refined log grid.
/// The caller is responsible for integrability (unknown-family profiles with
/// divergent norms are outside this entry point's contract).
inline NormValue numeric_profile_quasinorm(const std::function<double(double)>& g, double L,
                                           const ExponentPair& pq, const QuadratureSpec& quad = {}) {
  if (!(L > 0.0)) return NormValue::finite(0.0);
  const double p = pq.p;
  if (pq.q_infinite()) {
    const double sup = grid_supremum([&](double t) { return std::pow(t, 1.0 / p) * g(t); }, L, 2048,
                                     quad.tail_cutoff_decades + 2.0);
    return NormValue::finite(sup);
  }
  const double q = pq.q_value();
  auto integrand = [&](double z) {
    const double t = std::pow(z, p / q);
    const double v = g(std::min(t, L));
    if (v <= 0.0) return 0.0;
    return std::pow(v, q);
  };
  const double total = (p / q) * integrate_singular(integrand, 0.0, std::pow(L, q / p), quad);
  if (!std::isfinite(total))
    throw std::runtime_error("numeric_profile_quasinorm: integral did not converge");
  return NormValue::finite(std::pow(total, 1.0 / q));
}

/// Norms of the head restrictions f* restricted to [0, m) for a decreasing
/// sequence of measures: the restriction-to-subsets probe behind the
/// absolutely-continuous-norm checks.
inline std::vector<NormValue> tail_norm(const Profile& f, const ExponentPair& pq,
                                        const std::vector<double>& measures,
                                        const QuadratureSpec& quad = {}) {
  std::vector<NormValue> out;
  out.reserve(measures.size());
  for (double m : measures) out.push_back(quasinorm(head_restriction(f, m), pq, quad));
  return out;
}

}  // namespace lorentz

#pragma once

#include <algorithm>
#include <cctype>
#include <cmath>
#include <cstdio>
#include <functional>
#include <limits>
#include <map>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "lorentz/exponents.hpp"
#include "lorentz/fields.hpp"
#include "lorentz/geometry.hpp"
#include "lorentz/norms.hpp"
#include "lorentz/profiles.hpp"
#include "lorentz/quadrature.hpp"

namespace lorentz {

enum class GalleryTag { USlice, URadial, VAntiderivative, PowerSingularity, UpFamily, Truncation, Shifted };

inline const char* to_string(GalleryTag t) {
  switch (t) {
    case GalleryTag::USlice: return "u_slice";
    case GalleryTag::URadial: return "u_radial";
    case GalleryTag::VAntiderivative: return "v";
    case GalleryTag::PowerSingularity: return "power_singularity";
    case GalleryTag::UpFamily: return "up";
    case GalleryTag::Truncation: return "trunc";
    case GalleryTag::Shifted: return "shifted_up";
  }
  return "unknown";
}

/// Gallery functions live on origin-centered balls or on an interval with the
/// singular point at its left end.
using Domain = std::variant<BallDomain, Interval1D>;

inline int domain_dim(const Domain& d) {
  if (const auto* b = std::get_if<BallDomain>(&d)) return b->dim;
  return 1;
}

inline double domain_measure(const Domain& d) {
  if (const auto* b = std::get_if<BallDomain>(&d)) return b->measure();
  return std::get<Interval1D>(d).length();
}

/// Distance from the singular origin to the far boundary.
inline double domain_radius(const Domain& d) {
  if (const auto* b = std::get_if<BallDomain>(&d)) return b->radius;
  return std::get<Interval1D>(d).length();
}

/// A nonincreasing rearrangement known either as an analytic profile (step,
/// power, log-power, indicator) or only as an exact pointwise evaluator in the
/// measure variable.  Norms use the closed forms when available, the numeric
/// monotone-profile path otherwise.
struct MeasureProfile {
  std::function<double(double)> fn;
  double support = 0.0;
  std::optional<Profile> exact;

  [[nodiscard]] bool available() const { return static_cast<bool>(fn); }

  [[nodiscard]] NormValue norm(const ExponentPair& pq, const QuadratureSpec& quad = {}) const {
    if (!available()) throw std::logic_error("MeasureProfile: rearrangement unavailable");
    if (exact) return quasinorm(*exact, pq, quad);
    return numeric_profile_quasinorm(fn, support, pq, quad);
  }
};

/// One named function from the counterexample gallery.  Everything observable
/// is radial: `radial_value` is the signed value at distance s from the origin
/// and `radial_gradient` the gradient magnitude there (a.e.).  Rearrangements
/// refer to |value|.
struct GalleryItem {
  std::string id;
  GalleryTag tag = GalleryTag::USlice;
  Domain domain{Interval1D{0.0, 1.0}};
  std::map<std::string, double> params;
  bool singular_at_origin = false;
  bool boundary_zero = false;
  bool value_nonincreasing = false;  // |value| nonincreasing in the radius
  std::function<double(double)> radial_value;
  std::function<double(double)> radial_gradient;
  MeasureProfile value_rearrangement;
  MeasureProfile gradient_rearrangement;

  [[nodiscard]] int dim() const { return domain_dim(domain); }
  [[nodiscard]] double radius() const { return domain_radius(domain); }
  [[nodiscard]] double measure() const { return domain_measure(domain); }
};

namespace detail {

inline std::string fmt_num(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.12g", v);
  return buf;
}

inline void require_alpha(double alpha) {
  if (!(alpha > 0.0) || !(alpha <= 1.0))
    throw std::invalid_argument("gallery: alpha must lie in (0, 1]");
}

inline void require_p(double p) {
  if (!(p > 1.0) || !std::isfinite(p)) throw std::invalid_argument("gallery: p must lie in (1, inf)");
}

inline void require_radius(double r) {
  if (!(r > 0.0) || !std::isfinite(r)) throw std::invalid_argument("gallery: radius must be positive");
}

inline void require_dim(int n) {
  if (n < 1) throw std::invalid_argument("gallery: dimension must be >= 1");
}

/// u_{rad}(s) on a ball of radius r in R^n: the log-power slice evaluated at
/// the ball measure Omega_n s^n.  The log argument is computed as
/// p*alpha + n*ln(r/s), which is exact at s = r and never cancels.
inline std::function<double(double)> u_rad_evaluator(double r, double alpha, int n, double p) {
  const double omega = unit_ball_volume(n);
  const double log_omega = std::log(omega);
  return [=](double s) -> double {
    if (s >= r) return 0.0;
    if (s <= 0.0) return std::numeric_limits<double>::infinity();
    const double L = p * alpha + n * std::log(r / s);
    // Log-space keeps the measure factor from underflowing: omega * s^n hits
    // zero in doubles long before the value itself leaves range.
    return std::exp(-(log_omega + n * std::log(s)) / p - alpha * std::log(L));
  };
}

/// Suffix integrals F(s) = \int_s^r g on a geometric node grid; queries add an
/// exact partial-segment integral, so the cache cost is O(1) lookups plus one
/// short smooth quadrature per call.
class RadialTailIntegral {
 public:
  RadialTailIntegral(std::function<double(double)> g, double r, const QuadratureSpec& quad,
                     int nodes = 4096, double decades = 14.0)
      : g_(std::move(g)), r_(r), quad_(quad) {
    node_.resize(nodes + 1);
    const double lo = r * std::pow(10.0, -decades);
    for (int i = 0; i <= nodes; ++i) node_[i] = lo * std::pow(r / lo, double(i) / nodes);
    node_.back() = r;
    tail_.assign(nodes + 1, 0.0);
    for (int i = nodes - 1; i >= 0; --i)
      tail_[i] = tail_[i + 1] + integrate(g_, node_[i], node_[i + 1], quad_);
  }

  [[nodiscard]] double operator()(double s) const {
    if (s >= r_) return 0.0;
    if (s <= node_.front()) {
      // Below the grid: integrate on a logarithmic axis, where the remaining
      // range is a modest number of e-foldings even for s near denormal scale.
      double below = 0.0;
      if (s > 0.0 && s < node_.front()) {
        below = integrate(
            [&](double w) {
              const double sigma = s * std::exp(w);
              return sigma * g_(sigma);
            },
            0.0, std::log(node_.front() / s), quad_);
      }
      return tail_.front() + below;
    }
    auto it = std::lower_bound(node_.begin(), node_.end(), s);
    const auto j = static_cast<std::size_t>(it - node_.begin());  // node_[j] >= s
    return tail_[j] + integrate(g_, s, node_[j], quad_);
  }

 private:
  std::function<double(double)> g_;
  double r_;
  QuadratureSpec quad_;
  std::vector<double> node_;
  std::vector<double> tail_;
};

}  // namespace detail

/// The one-dimensional log-power slice t^{-1/p} ln^{-alpha}(r e^{p alpha}/t)
/// on the interval (0, r).  It is its own rearrangement.
inline GalleryItem make_u_slice(double r, double alpha, double p) {
  detail::require_radius(r);
  detail::require_alpha(alpha);
  detail::require_p(p);
  auto prof = LogPowerProfile::standard(p, alpha, r);
  GalleryItem item;
  item.id = "u_slice(r=" + detail::fmt_num(r) + ",alpha=" + detail::fmt_num(alpha) +
            ",p=" + detail::fmt_num(p) + ")";
  item.tag = GalleryTag::USlice;
  item.domain = Interval1D{0.0, r};
  item.params = {{"r", r}, {"alpha", alpha}, {"p", p}};
  item.singular_at_origin = true;
  item.value_nonincreasing = true;
  item.radial_value = [prof](double s) { return prof(s); };
  item.value_rearrangement = {[prof](double t) { return prof(t); }, r, Profile{prof}};
  return item;
}

/// The radial lift u_{r,alpha,n,p}(x) = slice(Omega_n |x|^n) on B(0, r); its
/// exact rearrangement is the slice with support Omega_n r^n.
inline GalleryItem make_u_radial(double r, double alpha, int n, double p) {
  detail::require_radius(r);
  detail::require_alpha(alpha);
  detail::require_dim(n);
  detail::require_p(p);
  const double omega = unit_ball_volume(n);
  auto prof = LogPowerProfile::standard(p, alpha, omega * std::pow(r, n));
  GalleryItem item;
  item.id = "u_radial(r=" + detail::fmt_num(r) + ",alpha=" + detail::fmt_num(alpha) +
            ",n=" + std::to_string(n) + ",p=" + detail::fmt_num(p) + ")";
  item.tag = GalleryTag::URadial;
  item.domain = BallDomain{n, r};
  item.params = {{"r", r}, {"alpha", alpha}, {"n", double(n)}, {"p", p}};
  item.singular_at_origin = true;
  item.value_nonincreasing = true;
  item.radial_value = detail::u_rad_evaluator(r, alpha, n, p);
  item.value_rearrangement = {[prof](double t) { return prof(t); }, prof.support_end, Profile{prof}};
  return item;
}

/// v_{r,alpha,n,p}(x) = \int_{|x|}^r u_rad: the boundary-vanishing radial
/// antiderivative whose gradient magnitude is exactly u_rad.  For p = n the
/// integral has closed forms; otherwise a cached tail integral evaluates it.
inline GalleryItem make_v(double r, double alpha, int n, double p, const QuadratureSpec& quad = {}) {
  detail::require_radius(r);
  detail::require_alpha(alpha);
  detail::require_dim(n);
  detail::require_p(p);
  const double omega = unit_ball_volume(n);
  auto urad = detail::u_rad_evaluator(r, alpha, n, p);

  std::function<double(double)> value;
  if (p == double(n)) {
    // \int (alpha + ln(r/s))^{-alpha} dlog: both branches elementary.
    const double c0 = std::pow(omega, -1.0 / n);
    if (alpha == 1.0) {
      value = [=](double s) -> double {
        if (s >= r) return 0.0;
        if (s <= 0.0) return std::numeric_limits<double>::infinity();
        return c0 / n * std::log1p(std::log(r / s));
      };
    } else {
      value = [=](double s) -> double {
        if (s >= r) return 0.0;
        if (s <= 0.0) return std::numeric_limits<double>::infinity();
        const double w = alpha + std::log(r / s);
        return c0 * std::pow(double(n), -alpha) / (1.0 - alpha) *
               (std::pow(w, 1.0 - alpha) - std::pow(alpha, 1.0 - alpha));
      };
    }
  } else {
    auto cache = std::make_shared<detail::RadialTailIntegral>(urad, r, quad);
    const bool finite_at_zero = p > double(n);
    // For p > n the full integral converges; substituting sigma = r e^{-w}
    // turns it into an exponentially decaying integral over w >= 0, which the
    // tail-cutoff quadrature handles without probing the singular origin.
    double at_zero = 0.0;
    if (finite_at_zero) {
      at_zero = integrate_decaying(
          [urad, r](double w) {
            const double sigma = r * std::exp(-w);
            return sigma * urad(sigma);
          },
          0.0, 1.0 - double(n) / p, quad);
    }
    value = [=](double s) -> double {
      if (s >= r) return 0.0;
      if (s <= 0.0)
        return finite_at_zero ? at_zero : std::numeric_limits<double>::infinity();
      return (*cache)(s);
    };
  }

  auto prof = LogPowerProfile::standard(p, alpha, omega * std::pow(r, n));
  GalleryItem item;
  item.id = "v(r=" + detail::fmt_num(r) + ",alpha=" + detail::fmt_num(alpha) +
            ",n=" + std::to_string(n) + ",p=" + detail::fmt_num(p) + ")";
  item.tag = GalleryTag::VAntiderivative;
  item.domain = BallDomain{n, r};
  item.params = {{"r", r}, {"alpha", alpha}, {"n", double(n)}, {"p", p}};
  item.singular_at_origin = p <= double(n);
  item.boundary_zero = true;
  item.value_nonincreasing = true;
  item.radial_value = value;
  item.radial_gradient = urad;
  item.value_rearrangement = {
      [value, omega, n](double t) { return value(std::pow(t / omega, 1.0 / n)); },
      omega * std::pow(r, n), std::nullopt};
  item.gradient_rearrangement = {[prof](double t) { return prof(t); }, prof.support_end, Profile{prof}};
  return item;
}

/// Global lower envelope for u_rad when 1 < p < n: with p1 = np/(n-p), the
/// auxiliary h(t) = t^{-1/p1} ln^{-alpha}(Omega_n r^n e^{p alpha}/t) has its
/// unique minimum at t_crit = Omega_n r^n e^{(p - p1) alpha}, and
/// u_rad(s) >= m (Omega_n s^n)^{-1/n} with m = h(t_crit).
struct LowerEnvelope {
  double p1;
  double t_crit;
  double m;
};

inline LowerEnvelope lower_envelope_constant(double r, double alpha, int n, double p) {
  detail::require_radius(r);
  detail::require_alpha(alpha);
  detail::require_dim(n);
  detail::require_p(p);
  if (!(p < double(n))) throw std::invalid_argument("lower_envelope_constant: requires p < n");
  const double omega = unit_ball_volume(n);
  const double p1 = double(n) * p / (double(n) - p);
  const double T = omega * std::pow(r, n);
  const double A = T * std::exp(p * alpha);
  const double t_crit = T * std::exp(p * alpha - p1 * alpha);
  auto h = [&](double t) { return std::pow(t, -1.0 / p1) * std::pow(std::log(A / t), -alpha); };
  const double m = h(t_crit);
  if (!(m > 0.0)) throw std::logic_error("lower_envelope_constant: minimum not positive");
  // The minimum property and the lifted envelope, probed on log grids.  A
  // violation here is a formula bug, not a data issue.
  auto urad = detail::u_rad_evaluator(r, alpha, n, p);
  for (int i = 1; i < 10000; ++i) {
    const double t = T * std::pow(10.0, -8.0 * (1.0 - double(i) / 10000.0));
    if (h(t) < m * (1.0 - 1e-12))
      throw std::logic_error("lower_envelope_constant: h dips below h(t_crit)");
    const double s = r * std::pow(10.0, -6.0 * (1.0 - double(i) / 10000.0));
    if (urad(s) < m * std::pow(omega * std::pow(s, n), -1.0 / double(n)) * (1.0 - 1e-12))
      throw std::logic_error("lower_envelope_constant: radial envelope violated");
  }
  return {p1, t_crit, m};
}

/// u_r(x) = |x|^{-n/p} on B(0, r): the weak-L^p singularity.  Rearrangement
/// POWER(Omega_n^{1/p}, 1/p) on [0, Omega_n r^n); the weak norm Omega_n^{1/p}
/// survives restriction to any smaller ball.
inline GalleryItem make_power_singularity(double r, int n, double p) {
  detail::require_radius(r);
  detail::require_dim(n);
  detail::require_p(p);
  const double omega = unit_ball_volume(n);
  PowerProfile prof{std::pow(omega, 1.0 / p), 1.0 / p, omega * std::pow(r, n)};
  GalleryItem item;
  item.id = "power_singularity(r=" + detail::fmt_num(r) + ",n=" + std::to_string(n) +
            ",p=" + detail::fmt_num(p) + ")";
  item.tag = GalleryTag::PowerSingularity;
  item.domain = BallDomain{n, r};
  item.params = {{"r", r}, {"n", double(n)}, {"p", p}};
  item.singular_at_origin = true;
  item.value_nonincreasing = true;
  const double np = double(n) / p;
  item.radial_value = [r, np](double s) -> double {
    if (s >= r) return 0.0;
    if (s <= 0.0) return std::numeric_limits<double>::infinity();
    return std::pow(s, -np);
  };
  item.value_rearrangement = {[prof](double t) { return prof(t); }, prof.support_end, Profile{prof}};
  return item;
}

/// C(n,p): the gradient-magnitude coefficient of u_p.
inline double up_gradient_coefficient(int n, double p) {
  return (p == double(n)) ? 1.0 : 1.0 - double(n) / p;
}

/// u_p: ln|x| when p = n > 1, |x|^{1-n/p} otherwise, evaluated on B(0, r).
/// |∇u_p| = |C(n,p)| |x|^{-n/p} with the exact POWER rearrangement; its weak
/// norm |C(n,p)| Omega_n^{1/p} does not depend on r.
inline GalleryItem make_up(int n, double p, double r = 1.0) {
  detail::require_dim(n);
  detail::require_p(p);
  detail::require_radius(r);
  const double omega = unit_ball_volume(n);
  const double C = up_gradient_coefficient(n, p);
  const bool log_branch = p == double(n);  // n > 1 automatic: p > 1 throughout

  GalleryItem item;
  item.id = "up(n=" + std::to_string(n) + ",p=" + detail::fmt_num(p) +
            (r == 1.0 ? std::string() : ",r=" + detail::fmt_num(r)) + ")";
  item.tag = GalleryTag::UpFamily;
  item.domain = BallDomain{n, r};
  item.params = {{"n", double(n)}, {"p", p}, {"r", r}};
  item.singular_at_origin = p <= double(n);
  item.value_nonincreasing = (p < double(n)) || (log_branch && r <= 1.0);
  const double e = 1.0 - double(n) / p;
  item.radial_value = [=](double s) -> double {
    if (s > r) return 0.0;
    if (s <= 0.0) {
      if (p > double(n)) return 0.0;  // |x|^{1-n/p} -> 0
      if (log_branch) return -std::numeric_limits<double>::infinity();
      return std::numeric_limits<double>::infinity();  // negative power blows up
    }
    return log_branch ? std::log(s) : std::pow(s, e);
  };
  const double np = double(n) / p;
  item.radial_gradient = [=](double s) -> double {
    if (s > r) return 0.0;
    if (s <= 0.0) return std::numeric_limits<double>::infinity();
    return std::abs(C) * std::pow(s, -np);
  };
  PowerProfile gprof{std::abs(C) * std::pow(omega, 1.0 / p), 1.0 / p, omega * std::pow(r, n)};
  item.gradient_rearrangement = {[gprof](double t) { return gprof(t); }, gprof.support_end,
                                 Profile{gprof}};
  if (p < double(n)) {
    // |x|^{1-n/p} is a pure negative power; its rearrangement stays in the
    // POWER family with exponent 1/p - 1/n.
    PowerProfile vprof{std::pow(omega, 1.0 / p - 1.0 / n), 1.0 / p - 1.0 / n,
                       omega * std::pow(r, n)};
    item.value_rearrangement = {[vprof](double t) { return vprof(t); }, vprof.support_end,
                                Profile{vprof}};
  } else if (item.value_nonincreasing) {
    // log branch with r <= 1: |ln s| read off at ball measure t.
    const double T = omega * std::pow(r, n);
    item.value_rearrangement = {
        [omega, n](double t) {
          return std::abs(std::log(std::pow(t / omega, 1.0 / double(n))));
        },
        T, std::nullopt};
  }
  return item;
}

/// c(n,p,r): the boundary value of u_p on B(0,r).
inline double up_boundary_constant(int n, double p, double r) {
  return (p == double(n)) ? std::log(r) : std::pow(r, 1.0 - double(n) / p);
}

/// u_{r,p} = u_p - c(n,p,r): vanishes on the boundary; |u_{r,p}| is radially
/// nonincreasing for every (n, p).
inline GalleryItem make_shifted_up(double r, int n, double p) {
  GalleryItem base = make_up(n, p, r);
  const double c = up_boundary_constant(n, p, r);
  const double omega = unit_ball_volume(n);
  GalleryItem item = base;
  item.id = "shifted_up(r=" + detail::fmt_num(r) + ",n=" + std::to_string(n) +
            ",p=" + detail::fmt_num(p) + ")";
  item.tag = GalleryTag::Shifted;
  item.params = {{"r", r}, {"n", double(n)}, {"p", p}};
  item.boundary_zero = true;
  item.value_nonincreasing = true;
  auto parent_value = base.radial_value;
  item.radial_value = [parent_value, c, r](double s) -> double {
    if (s >= r) return 0.0;
    return parent_value(s) - c;
  };
  // |value| at ball measure t; sign analysis: u_p - c has one sign on the ball.
  auto value = item.radial_value;
  item.value_rearrangement = {
      [value, omega, n](double t) { return std::abs(value(std::pow(t / omega, 1.0 / n))); },
      omega * std::pow(r, n), std::nullopt};
  return item;
}

/// Truncation: freeze the value on the small ball of radius R/(k+1), where R
/// is 1 for the u_p family (the paper's u_{p,k}) and the domain radius for
/// everything else (v_{n,p,k}, u_{r,p,k}).  The gradient vanishes inside.
inline GalleryItem truncate(const GalleryItem& item, int k) {
  if (k < 1) throw std::invalid_argument("truncate: requires k >= 1");
  if (!item.value_nonincreasing)
    throw std::invalid_argument("truncate: parent must have a radially nonincreasing magnitude");
  const double R = (item.tag == GalleryTag::UpFamily) ? 1.0 : item.radius();
  const double rho = R / double(k + 1);
  if (!(rho < item.radius()))
    throw std::invalid_argument("truncate: freeze radius not inside the domain");
  const int n = item.dim();
  const double omega = (item.dim() >= 1 && std::holds_alternative<BallDomain>(item.domain))
                           ? unit_ball_volume(n)
                           : 1.0;
  const double measure_rho = std::holds_alternative<BallDomain>(item.domain)
                                 ? omega * std::pow(rho, n)
                                 : rho;

  GalleryItem out;
  out.id = "trunc(k=" + std::to_string(k) + "," + item.id + ")";
  out.tag = GalleryTag::Truncation;
  out.domain = item.domain;
  out.params = item.params;
  out.params["k"] = double(k);
  out.singular_at_origin = false;
  out.boundary_zero = item.boundary_zero;
  out.value_nonincreasing = true;

  auto pv = item.radial_value;
  out.radial_value = [pv, rho](double s) { return pv(std::max(s, rho)); };
  if (item.radial_gradient) {
    auto pg = item.radial_gradient;
    out.radial_gradient = [pg, rho](double s) { return s <= rho ? 0.0 : pg(s); };
  }
  if (item.value_rearrangement.available()) {
    auto pf = item.value_rearrangement.fn;
    const double clip = std::abs(pv(rho));
    out.value_rearrangement = {[pf, clip](double t) { return std::min(pf(t), clip); },
                               item.value_rearrangement.support, std::nullopt};
  }
  if (item.gradient_rearrangement.available()) {
    // {|∇trunc| > v} = {|∇parent| > v} minus the frozen core, so the
    // rearrangement is the parent's shifted by the core measure.
    auto pf = item.gradient_rearrangement.fn;
    out.gradient_rearrangement = {
        [pf, measure_rho](double t) { return pf(t + measure_rho); },
        std::max(0.0, item.gradient_rearrangement.support - measure_rho), std::nullopt};
  }
  return out;
}

// ---------------------------------------------------------------------------
// Shared-grid discretization and the lattice operations.

struct LatticeCell {
  double weight;
  double value;     // signed
  double gradient;  // magnitude
};

struct LatticeField {
  std::vector<LatticeCell> cells;

  [[nodiscard]] double total_measure() const {
    double s = 0.0;
    for (const auto& c : cells) s += c.weight;
    return s;
  }
};

/// Radial shell discretization on the item's domain: geometric shells spanning
/// `head_decades` below the outer radius.  Two items on the same domain with
/// the same knobs produce cell-aligned fields.
inline LatticeField discretize(const GalleryItem& item, int shells = 4096, double head_decades = 12.0) {
  const double r = item.radius();
  const bool ball = std::holds_alternative<BallDomain>(item.domain);
  const int n = item.dim();
  const double omega = ball ? unit_ball_volume(n) : 1.0;
  auto measure_at = [&](double s) { return ball ? omega * std::pow(s, n) : s; };

  LatticeField out;
  out.cells.reserve(shells);
  const double lo = r * std::pow(10.0, -head_decades);
  double prev = 0.0;
  double prev_s = 0.0;
  const double ratio = std::pow(r / lo, 1.0 / shells);
  for (int i = 1; i <= shells; ++i) {
    const double s_hi = (i == shells) ? r : lo * std::pow(ratio, i);
    const double rep = (prev_s == 0.0) ? s_hi / std::sqrt(ratio) : std::sqrt(prev_s * s_hi);
    const double m_hi = measure_at(s_hi);
    LatticeCell cell;
    cell.weight = m_hi - prev;
    cell.value = item.radial_value ? item.radial_value(rep) : 0.0;
    cell.gradient = item.radial_gradient ? item.radial_gradient(rep) : 0.0;
    out.cells.push_back(cell);
    prev = m_hi;
    prev_s = s_hi;
  }
  return out;
}

enum class LatticeOp { Max, Min, Pos, Neg };

/// Cellwise lattice operation.  The gradient of the result selects the active
/// branch: for MAX the larger value's gradient with ties going to b, matching
/// the positive-part convention grad(u+) = grad(u) on {u > 0}, 0 on {u <= 0}
/// with b = 0.  POS/NEG ignore b (treated as the zero field); NEG returns the
/// nonpositive part min(u, 0), so u = POS(u) + NEG(u) and |u| = POS(u) - NEG(u).
inline LatticeField lattice(LatticeOp op, const LatticeField& a, const LatticeField& b) {
  if (op == LatticeOp::Pos || op == LatticeOp::Neg) {
    LatticeField out = a;
    for (auto& c : out.cells) {
      const bool active = (op == LatticeOp::Pos) ? c.value > 0.0 : c.value < 0.0;
      c.value = active ? c.value : 0.0;
      c.gradient = active ? c.gradient : 0.0;
    }
    return out;
  }
  if (a.cells.size() != b.cells.size())
    throw std::invalid_argument("lattice: operands discretized on different grids");
  LatticeField out;
  out.cells.reserve(a.cells.size());
  for (std::size_t i = 0; i < a.cells.size(); ++i) {
    const auto& ca = a.cells[i];
    const auto& cb = b.cells[i];
    if (ca.weight != cb.weight)
      throw std::invalid_argument("lattice: operands discretized on different grids");
    const bool a_active = (op == LatticeOp::Max) ? ca.value > cb.value : ca.value < cb.value;
    LatticeCell cell;
    cell.weight = ca.weight;
    cell.value = (op == LatticeOp::Max) ? std::max(ca.value, cb.value) : std::min(ca.value, cb.value);
    cell.gradient = a_active ? ca.gradient : cb.gradient;
    out.cells.push_back(cell);
  }
  return out;
}

inline LatticeField lattice(LatticeOp op, const LatticeField& a) {
  if (op != LatticeOp::Pos && op != LatticeOp::Neg)
    throw std::invalid_argument("lattice: binary operation needs two operands");
  return lattice(op, a, a);
}

inline LatticeField pos_part(const LatticeField& a) { return lattice(LatticeOp::Pos, a); }
inline LatticeField neg_part(const LatticeField& a) { return lattice(LatticeOp::Neg, a); }

/// The zero field on the same partition.
inline LatticeField zero_like(const LatticeField& f) {
  LatticeField out = f;
  for (auto& c : out.cells) {
    c.value = 0.0;
    c.gradient = 0.0;
  }
  return out;
}

inline SampledField value_field(const LatticeField& f) {
  SampledField out;
  out.cells.reserve(f.cells.size());
  for (const auto& c : f.cells) out.cells.push_back({c.weight, std::abs(c.value)});
  out.validate();
  return out;
}

inline SampledField gradient_field(const LatticeField& f) {
  SampledField out;
  out.cells.reserve(f.cells.size());
  for (const auto& c : f.cells) out.cells.push_back({c.weight, c.gradient});
  out.validate();
  return out;
}

/// Extension by zero to a larger domain: appends one zero cell carrying the
/// extra measure.  Rearrangements, hence all Lorentz norms, are unchanged.
inline LatticeField extend_by_zero(const LatticeField& f, double new_measure) {
  const double cur = f.total_measure();
  if (new_measure < cur * (1.0 - 1e-12))
    throw std::invalid_argument("extend_by_zero: target domain smaller than the current one");
  LatticeField out = f;
  if (new_measure > cur) out.cells.push_back({new_measure - cur, 0.0, 0.0});
  return out;
}

inline SampledField extend_by_zero(const SampledField& f, double new_measure) {
  const double cur = f.total_weight();
  if (new_measure < cur * (1.0 - 1e-12))
    throw std::invalid_argument("extend_by_zero: target domain smaller than the current one");
  SampledField out = f;
  if (new_measure > cur) out.cells.push_back({new_measure - cur, 0.0});
  return out;
}

// ---------------------------------------------------------------------------
// Item id grammar:  name(key=value,...) with one nested item for trunc, e.g.
//   u_radial(r=1,alpha=0.5,n=2,p=3)
//   trunc(k=7,up(n=2,p=2))

namespace detail {

struct IdParser {
  std::string_view s;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < s.size() && s[pos] == ' ') ++pos;
  }
  bool eat(char c) {
    skip_ws();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c))
      throw std::invalid_argument("gallery id: expected '" + std::string(1, c) + "' at position " +
                                  std::to_string(pos) + " in '" + std::string(s) + "'");
  }
  std::string ident() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_')) ++pos;
    if (start == pos) throw std::invalid_argument("gallery id: expected a name in '" + std::string(s) + "'");
    return std::string(s.substr(start, pos - start));
  }
  double number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < s.size() && (std::isdigit(static_cast<unsigned char>(s[pos])) || s[pos] == '.' ||
                              s[pos] == '-' || s[pos] == '+' || s[pos] == 'e' || s[pos] == 'E'))
      ++pos;
    try {
      std::size_t used = 0;
      std::string tok(s.substr(start, pos - start));
      double v = std::stod(tok, &used);
      if (used != tok.size()) throw std::invalid_argument("trailing junk");
      return v;
    } catch (const std::exception&) {
      throw std::invalid_argument("gallery id: bad number at position " + std::to_string(start) +
                                  " in '" + std::string(s) + "'");
    }
  }

  GalleryItem item();
};

inline double take(std::map<std::string, double>& kv, const std::string& key) {
  auto it = kv.find(key);
  if (it == kv.end()) throw std::invalid_argument("gallery id: missing parameter '" + key + "'");
  double v = it->second;
  kv.erase(it);
  return v;
}

inline double take_or(std::map<std::string, double>& kv, const std::string& key, double fallback) {
  auto it = kv.find(key);
  if (it == kv.end()) return fallback;
  double v = it->second;
  kv.erase(it);
  return v;
}

inline int int_param(double v, const std::string& key) {
  int n = static_cast<int>(std::lround(v));
  if (double(n) != v) throw std::invalid_argument("gallery id: parameter '" + key + "' must be an integer");
  return n;
}

inline GalleryItem IdParser::item() {
  const std::string name = ident();
  expect('(');
  std::map<std::string, double> kv;
  std::optional<GalleryItem> nested;
  if (!eat(')')) {
    while (true) {
      skip_ws();
      // A nested item shows up as ident followed by '(' instead of '='.
      std::size_t mark = pos;
      std::string key = ident();
      skip_ws();
      if (pos < s.size() && s[pos] == '(') {
        pos = mark;
        if (nested) throw std::invalid_argument("gallery id: more than one nested item");
        nested = item();
      } else {
        expect('=');
        kv[key] = number();
      }
      if (eat(')')) break;
      expect(',');
    }
  }

  if (name == "u_slice") {
    auto out = make_u_slice(take(kv, "r"), take(kv, "alpha"), take(kv, "p"));
    if (!kv.empty()) throw std::invalid_argument("gallery id: unknown parameter for u_slice");
    return out;
  }
  if (name == "u_radial") {
    auto out = make_u_radial(take(kv, "r"), take(kv, "alpha"),
                             int_param(take(kv, "n"), "n"), take(kv, "p"));
    if (!kv.empty()) throw std::invalid_argument("gallery id: unknown parameter for u_radial");
    return out;
  }
  if (name == "v") {
    auto out = make_v(take(kv, "r"), take(kv, "alpha"), int_param(take(kv, "n"), "n"), take(kv, "p"));
    if (!kv.empty()) throw std::invalid_argument("gallery id: unknown parameter for v");
    return out;
  }
  if (name == "power_singularity") {
    auto out = make_power_singularity(take(kv, "r"), int_param(take(kv, "n"), "n"), take(kv, "p"));
    if (!kv.empty()) throw std::invalid_argument("gallery id: unknown parameter for power_singularity");
    return out;
  }
  if (name == "up") {
    auto out = make_up(int_param(take(kv, "n"), "n"), take(kv, "p"), take_or(kv, "r", 1.0));
    if (!kv.empty()) throw std::invalid_argument("gallery id: unknown parameter for up");
    return out;
  }
  if (name == "shifted_up") {
    auto out = make_shifted_up(take(kv, "r"), int_param(take(kv, "n"), "n"), take(kv, "p"));
    if (!kv.empty()) throw std::invalid_argument("gallery id: unknown parameter for shifted_up");
    return out;
  }
  if (name == "trunc") {
    if (!nested) throw std::invalid_argument("gallery id: trunc needs a nested item");
    auto out = truncate(*nested, int_param(take(kv, "k"), "k"));
    if (!kv.empty()) throw std::invalid_argument("gallery id: unknown parameter for trunc");
    return out;
  }
  throw std::invalid_argument("gallery id: unknown item '" + name + "'");
}

}  // namespace detail

inline GalleryItem parse_gallery_id(const std::string& id) {
  detail::IdParser p{id};
  GalleryItem out = p.item();
  p.skip_ws();
  if (p.pos != p.s.size())
    throw std::invalid_argument("gallery id: trailing characters in '" + id + "'");
  return out;
}

}  // namespace lorentz

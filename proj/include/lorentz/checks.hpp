#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <functional>
#include <limits>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "lorentz/exponents.hpp"
#include "lorentz/fields.hpp"
#include "lorentz/gallery.hpp"
#include "lorentz/geometry.hpp"
#include "lorentz/norms.hpp"
#include "lorentz/profiles.hpp"
#include "lorentz/quadrature.hpp"
#include "lorentz/rearrange.hpp"
#include "lorentz/sampling.hpp"

namespace lorentz {

enum class Verdict { Pass, Fail, Skip };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "PASS";
    case Verdict::Fail: return "FAIL";
    default: return "SKIP";
  }
}

/// One verified claim.  The convention throughout: the claim is lhs <= rhs,
/// margin = rhs - lhs, and PASS means margin >= -slack for the check's
/// declared slack.  Checks asserting a lower bound put the required floor in
/// lhs so the sign convention stays uniform.  SKIP marks inputs ruled out
/// before any comparison (an infinite norm on a factor, say); `note` carries
/// the reason and any secondary measurements.
struct CheckReport {
  std::string check_id;
  std::map<std::string, std::string> params;
  double lhs = 0.0;
  double rhs = 0.0;
  double margin = 0.0;
  Verdict verdict = Verdict::Skip;
  std::int64_t samples = 0;
  std::string note;

  [[nodiscard]] std::string params_string() const {
    std::string out;
    for (const auto& [key, value] : params) {
      if (!out.empty()) out += ';';
      out += key;
      out += '=';
      out += value;
    }
    return out;
  }
};

/// Stable presentation order: by check id, then by serialized parameters.
inline bool report_order(const CheckReport& a, const CheckReport& b) {
  if (a.check_id != b.check_id) return a.check_id < b.check_id;
  return a.params_string() < b.params_string();
}

namespace detail {

inline void set_param(CheckReport& rep, const std::string& key, double v) { rep.params[key] = fmt_num(v); }
inline void set_param(CheckReport& rep, const std::string& key, const char* v) { rep.params[key] = v; }
inline void set_param(CheckReport& rep, const std::string& key, const std::string& v) { rep.params[key] = v; }
inline void set_param(CheckReport& rep, const std::string& key, const Exponent& q) { rep.params[key] = q.str(); }
inline void set_param(CheckReport& rep, const std::string& key, std::int64_t v) {
  rep.params[key] = std::to_string(v);
}

inline void finish_upper_bound(CheckReport& rep, double lhs, double rhs, double slack) {
  rep.lhs = lhs;
  rep.rhs = rhs;
  rep.margin = rhs - lhs;
  rep.verdict = rep.margin >= -slack ? Verdict::Pass : Verdict::Fail;
}

inline ExponentPair dual_pair(const ExponentPair& pq) {
  return ExponentPair(conjugate_exponent(pq.p), conjugate_exponent(pq.q));
}

}  // namespace detail

/// Exact integral of |f g| over the shared partition.
inline double pointwise_product_integral(const SampledField& f, const SampledField& g) {
  if (f.cells.size() != g.cells.size())
    throw std::invalid_argument("pointwise_product_integral: partitions differ");
  double acc = 0.0;
  for (std::size_t i = 0; i < f.cells.size(); ++i) {
    if (f.cells[i].weight != g.cells[i].weight)
      throw std::invalid_argument("pointwise_product_integral: partitions differ");
    acc += f.cells[i].weight * f.cells[i].magnitude * g.cells[i].magnitude;
  }
  return acc;
}

/// Exact integral of a(t) b(t) dt for two step profiles (merged breakpoint walk).
inline double rearranged_product_integral(const StepProfile& a, const StepProfile& b) {
  if (a.is_zero() || b.is_zero()) return 0.0;
  const auto& ea = a.breakpoints();
  const auto& va = a.values();
  const auto& eb = b.breakpoints();
  const auto& vb = b.values();
  double acc = 0.0;
  double prev = 0.0;
  std::size_t i = 0, j = 0;
  while (i < va.size() && j < vb.size()) {
    const double next = std::min(ea[i + 1], eb[j + 1]);
    acc += va[i] * vb[j] * (next - prev);
    prev = next;
    if (ea[i + 1] == next) ++i;
    if (eb[j + 1] == next) ++j;
  }
  return acc;
}

/// The two-sided product inequality: integral of |fg| is at most the integral
/// of the product of rearrangements, which is at most the norm product over
/// the conjugate exponent pairs.  All three quantities are exact finite sums
/// for step data; both gaps are recorded.
inline CheckReport check_holder(const SampledField& f, const SampledField& g, const ExponentPair& pq,
                                const QuadratureSpec& quad = {}) {
  CheckReport rep;
  rep.check_id = "holder_chain";
  detail::set_param(rep, "p", pq.p);
  detail::set_param(rep, "q", pq.q);
  rep.samples = 1;
  const double product = pointwise_product_integral(f, g);
  const StepProfile fs = rearrange(f);
  const StepProfile gs = rearrange(g);
  const double middle = rearranged_product_integral(fs, gs);
  const NormValue nf = quasinorm(fs, pq, quad);
  const NormValue ng = quasinorm(gs, detail::dual_pair(pq), quad);
  if (!nf.is_finite() || !ng.is_finite()) {
    rep.note = "infinite norm on a factor";
    return rep;
  }
  const double rhs = nf.value() * ng.value();
  const double slack = 1e-12 * std::max({product, middle, rhs, 1.0});
  const double gap_lower = middle - product;
  const double gap_upper = rhs - middle;
  rep.lhs = product;
  rep.rhs = rhs;
  rep.margin = std::min(gap_lower, gap_upper);
  rep.verdict = (gap_lower >= -slack && gap_upper >= -slack) ? Verdict::Pass : Verdict::Fail;
  rep.note = "middle=" + detail::fmt_num(middle);
  return rep;
}

/// Norm splitting across a product of exponent pairs: ||f||_{p1,q1} bounded by
/// ||f||_{p2,q2} times the indicator norm of the whole domain at (p3,q3).
/// Requires 1/p1 = 1/p2 + 1/p3 and the matching reciprocal identity for the
/// second exponents (infinity contributing zero).
inline CheckReport check_general_holder(const SampledField& f, const ExponentPair& pq1,
                                        const ExponentPair& pq2, const ExponentPair& pq3,
                                        double omega_measure, const QuadratureSpec& quad = {}) {
  const auto recip = [](const Exponent& q) { return q.is_infinite() ? 0.0 : 1.0 / q.value(); };
  if (std::abs(1.0 / pq1.p - 1.0 / pq2.p - 1.0 / pq3.p) > 1e-12)
    throw std::invalid_argument("check_general_holder: need 1/p1 = 1/p2 + 1/p3");
  if (std::abs(recip(pq1.q) - recip(pq2.q) - recip(pq3.q)) > 1e-12)
    throw std::invalid_argument("check_general_holder: need 1/q1 = 1/q2 + 1/q3");
  if (!(omega_measure > 0.0))
    throw std::invalid_argument("check_general_holder: domain measure must be positive");
  CheckReport rep;
  rep.check_id = "holder_general";
  detail::set_param(rep, "p1", pq1.p);
  detail::set_param(rep, "q1", pq1.q);
  detail::set_param(rep, "p2", pq2.p);
  detail::set_param(rep, "q2", pq2.q);
  detail::set_param(rep, "p3", pq3.p);
  detail::set_param(rep, "q3", pq3.q);
  rep.samples = 1;
  const StepProfile fs = rearrange(f);
  const NormValue lhs = quasinorm(fs, pq1, quad);
  const NormValue n2 = quasinorm(fs, pq2, quad);
  const NormValue n3 = quasinorm(IndicatorProfile(1.0, omega_measure), pq3, quad);
  if (!lhs.is_finite() || !n2.is_finite() || !n3.is_finite()) {
    rep.note = "infinite norm";
    return rep;
  }
  const double rhs = n2.value() * n3.value();
  detail::finish_upper_bound(rep, lhs.value(), rhs, 1e-12 * std::max({lhs.value(), rhs, 1.0}));
  return rep;
}

/// Plain Lebesgue norm of a profile over its support, s >= 1.  For s > 1 this
/// is the diagonal Lorentz quasinorm; s = 1 is handled per family because
/// exponent pairs keep p > 1.
inline NormValue lebesgue_norm(const Profile& f, double s, const QuadratureSpec& quad = {}) {
  if (!(s >= 1.0)) throw std::invalid_argument("lebesgue_norm: requires s >= 1");
  if (s > 1.0) return quasinorm(f, ExponentPair::make(s, s), quad);
  return std::visit(
      [&](const auto& g) -> NormValue {
        using T = std::decay_t<decltype(g)>;
        if constexpr (std::is_same_v<T, StepProfile>) {
          return NormValue::finite(g.total_integral());
        } else if constexpr (std::is_same_v<T, IndicatorProfile>) {
          return NormValue::finite(g.height * g.support_end);
        } else if constexpr (std::is_same_v<T, PowerProfile>) {
          if (g.exponent >= 1.0) return NormValue::infinite(DivergenceReason::HeadDivergence);
          return NormValue::finite(g.coeff * std::pow(g.support_end, 1.0 - g.exponent) / (1.0 - g.exponent));
        } else {
          const double rate = 1.0 - 1.0 / g.p;
          const double w0 = g.edge_log();
          const double alpha = g.alpha;
          const double total =
              std::pow(g.support_end, rate) *
              integrate_decaying([=](double x) { return std::exp(-rate * x) * std::pow(w0 + x, -alpha); },
                                 0.0, rate, quad);
          return NormValue::finite(total);
        }
      },
      f);
}

/// Constant in front of the exponent-loss embedding: the indicator norm of the
/// whole domain at the conjugate-split pair, |Omega| factored out.
inline double embedding_constant(double p, const Exponent& q, double eps) {
  if (!(p > 1.0)) throw std::invalid_argument("embedding_constant: requires p > 1");
  if (!q.is_infinite() && !(q.value() > p)) throw std::invalid_argument("embedding_constant: requires q > p");
  if (!(eps > 0.0 && eps <= p - 1.0))
    throw std::invalid_argument("embedding_constant: requires 0 < eps <= p - 1");
  const double s = p - eps;
  const double inv_q3 = 1.0 / s - (q.is_infinite() ? 0.0 : 1.0 / q.value());
  const double p3 = p * s / eps;
  return std::pow(p3 * inv_q3, inv_q3);
}

/// ||f||_{L^{p-eps}} <= C(p,q,eps) |Omega|^{eps/(p(p-eps))} ||f||_{p,q}.
inline CheckReport check_embedding_eps(const Profile& f, double p, const Exponent& q, double eps,
                                       double omega_measure, const QuadratureSpec& quad = {}) {
  const double c = embedding_constant(p, q, eps);
  if (!(omega_measure > 0.0))
    throw std::invalid_argument("check_embedding_eps: domain measure must be positive");
  CheckReport rep;
  rep.check_id = "embedding_eps";
  detail::set_param(rep, "p", p);
  detail::set_param(rep, "q", q);
  detail::set_param(rep, "eps", eps);
  detail::set_param(rep, "omega", omega_measure);
  rep.samples = 1;
  const NormValue strong = quasinorm(f, ExponentPair(p, q), quad);
  if (!strong.is_finite()) {
    rep.note = std::string("lorentz norm infinite: ") + to_string(strong.reason());
    return rep;
  }
  const double rhs = c * std::pow(omega_measure, eps / (p * (p - eps))) * strong.value();
  const NormValue lhs = lebesgue_norm(f, p - eps, quad);
  if (!lhs.is_finite()) {
    rep.lhs = std::numeric_limits<double>::infinity();
    rep.rhs = rhs;
    rep.margin = -std::numeric_limits<double>::infinity();
    rep.verdict = Verdict::Fail;
    rep.note = "lebesgue norm infinite though the lorentz norm is finite";
    return rep;
  }
  const double slack = std::max(10.0 * quad.rel_tol, 1e-12) * std::max(rhs, 1.0);
  detail::finish_upper_bound(rep, lhs.value(), rhs, slack);
  return rep;
}

/// Quasinorm <= maximal-function norm <= p' * quasinorm.
inline CheckReport check_equivalence(const Profile& f, const ExponentPair& pq,
                                     const QuadratureSpec& quad = {}) {
  CheckReport rep;
  rep.check_id = "norm_equivalence";
  detail::set_param(rep, "p", pq.p);
  detail::set_param(rep, "q", pq.q);
  rep.samples = 1;
  const NormValue quasi = quasinorm(f, pq, quad);
  if (!quasi.is_finite()) {
    rep.note = std::string("quasinorm infinite: ") + to_string(quasi.reason());
    return rep;
  }
  const NormValue with_maximal = starstar_norm(f, pq, quad);
  const double upper = conjugate_exponent(pq.p) * quasi.value();
  if (!with_maximal.is_finite()) {
    rep.lhs = std::numeric_limits<double>::infinity();
    rep.rhs = upper;
    rep.margin = -std::numeric_limits<double>::infinity();
    rep.verdict = Verdict::Fail;
    rep.note = "maximal-function norm infinite though the quasinorm is finite";
    return rep;
  }
  const double mid = with_maximal.value();
  const double slack = std::max(10.0 * quad.rel_tol, 1e-12) * std::max({quasi.value(), upper, 1.0});
  const double gap_lower = mid - quasi.value();
  const double gap_upper = upper - mid;
  rep.lhs = mid;
  rep.rhs = upper;
  rep.margin = std::min(gap_lower, gap_upper);
  rep.verdict = (gap_lower >= -slack && gap_upper >= -slack) ? Verdict::Pass : Verdict::Fail;
  rep.note = "quasinorm=" + detail::fmt_num(quasi.value());
  return rep;
}

/// A function living in the larger Lorentz space but not the smaller one, with
/// its gradient sibling: the computational content of the strict inclusions.
struct WitnessBundle {
  double p = 2.0;
  double q1 = 1.0;
  Exponent q2 = Exponent::infinity();
  double alpha = 1.0;
  GalleryItem function_witness;
  GalleryItem gradient_witness;
  NormValue function_at_q2 = NormValue::finite(0.0);
  NormValue function_at_q1 = NormValue::finite(0.0);
  NormValue gradient_at_q2 = NormValue::finite(0.0);
  NormValue gradient_at_q1 = NormValue::finite(0.0);
  double closed_form_q2 = 0.0;
};

/// Builds the witness pair for q1 < q2: alpha = 1/q1 puts the smaller index
/// exactly at the divergent edge while every q > 1/alpha stays summable.
inline WitnessBundle witness_strict_inclusion(double p, double q1, const Exponent& q2,
                                              const QuadratureSpec& quad = {}) {
  if (!(p > 1.0)) throw std::invalid_argument("witness_strict_inclusion: requires p > 1");
  if (!(q1 >= 1.0)) throw std::invalid_argument("witness_strict_inclusion: requires q1 >= 1");
  if (!q2.is_infinite() && !(q2.value() > q1))
    throw std::invalid_argument("witness_strict_inclusion: requires q1 < q2");
  WitnessBundle b;
  b.p = p;
  b.q1 = q1;
  b.q2 = q2;
  b.alpha = 1.0 / q1;
  b.function_witness = make_u_radial(1.0, b.alpha, 2, p);
  b.gradient_witness = make_v(1.0, b.alpha, 2, p, quad);
  const Profile& fn_prof = *b.function_witness.value_rearrangement.exact;
  const Profile& gr_prof = *b.gradient_witness.gradient_rearrangement.exact;
  const ExponentPair at_q2(p, q2);
  const ExponentPair at_q1 = ExponentPair::make(p, q1);
  b.function_at_q2 = quasinorm(fn_prof, at_q2, quad);
  b.function_at_q1 = quasinorm(fn_prof, at_q1, quad);
  b.gradient_at_q2 = quasinorm(gr_prof, at_q2, quad);
  b.gradient_at_q1 = quasinorm(gr_prof, at_q1, quad);
  const double pa = p * b.alpha;
  b.closed_form_q2 =
      q2.is_infinite()
          ? std::pow(pa, -b.alpha)
          : std::pow(std::pow(pa, 1.0 - q2.value() * b.alpha) / (q2.value() * b.alpha - 1.0),
                     1.0 / q2.value());
  return b;
}

/// Reports for a witness bundle: the finite/infinite split for the function
/// and for the gradient (each PASS requires the q2 norm to match the closed
/// form to rel 1e-8 and the q1 norm to classify as infinite).  When
/// `assert_growth` is set, a third report requires the head-truncated q1
/// integral to grow by more than 10% at each cutoff refinement
/// (1e-6 -> 1e-9 -> 1e-12).
inline std::vector<CheckReport> witness_reports(const WitnessBundle& b, bool assert_growth,
                                                const QuadratureSpec& quad = {}) {
  std::vector<CheckReport> out;
  const auto base_params = [&](CheckReport& rep) {
    detail::set_param(rep, "p", b.p);
    detail::set_param(rep, "q1", b.q1);
    detail::set_param(rep, "q2", b.q2);
    detail::set_param(rep, "alpha", b.alpha);
  };
  const auto split_report = [&](const char* id, const NormValue& at_q2, const NormValue& at_q1) {
    CheckReport rep;
    rep.check_id = id;
    base_params(rep);
    rep.samples = 1;
    if (!at_q2.is_finite()) {
      rep.lhs = std::numeric_limits<double>::infinity();
      rep.rhs = 1e-8;
      rep.margin = -std::numeric_limits<double>::infinity();
      rep.verdict = Verdict::Fail;
      rep.note = "q2 norm infinite";
      return rep;
    }
    const double rel = std::abs(at_q2.value() - b.closed_form_q2) / b.closed_form_q2;
    rep.lhs = rel;
    rep.rhs = 1e-8;
    rep.margin = rep.rhs - rep.lhs;
    const bool split = !at_q1.is_finite();
    rep.verdict = (split && rep.margin >= 0.0) ? Verdict::Pass : Verdict::Fail;
    rep.note = split ? std::string("q1 divergence: ") + to_string(at_q1.reason())
                     : "q1 norm unexpectedly finite";
    rep.note += "; q2 norm=" + detail::fmt_num(at_q2.value());
    return rep;
  };
  out.push_back(split_report("inclusion_function", b.function_at_q2, b.function_at_q1));
  out.push_back(split_report("inclusion_gradient", b.gradient_at_q2, b.gradient_at_q1));
  if (assert_growth) {
    CheckReport rep;
    rep.check_id = "inclusion_growth";
    base_params(rep);
    rep.samples = 3;
    const Profile& prof = *b.function_witness.value_rearrangement.exact;
    const ExponentPair at_q1 = ExponentPair::make(b.p, b.q1);
    const double i6 = truncated_head_integral(prof, at_q1, 1e-6, quad);
    const double i9 = truncated_head_integral(prof, at_q1, 1e-9, quad);
    const double i12 = truncated_head_integral(prof, at_q1, 1e-12, quad);
    const double r1 = i9 / i6;
    const double r2 = i12 / i9;
    rep.lhs = 1.1;
    rep.rhs = std::min(r1, r2);
    rep.margin = rep.rhs - rep.lhs;
    rep.verdict = rep.margin >= 0.0 ? Verdict::Pass : Verdict::Fail;
    rep.note = "ratios=" + detail::fmt_num(r1) + "," + detail::fmt_num(r2);
    out.push_back(rep);
  }
  return out;
}

/// Norms of the restrictions to the shrinking balls B(0, r/2^k), k = 1..k_max.
/// PASS in two shapes: a sequence that decays below 1e-3 of its first entry
/// (absolutely continuous norm), or one constant to rel 1e-9 (the weak-norm
/// invariance of the critical power).  Anything else fails.
inline CheckReport check_ac_norm_profile(const std::string& label, const MeasureProfile& rearr,
                                         double total_measure, int dim, const ExponentPair& pq,
                                         int k_max, const QuadratureSpec& quad = {}) {
  if (k_max < 2) throw std::invalid_argument("check_ac_norm: need k_max >= 2");
  if (!rearr.available()) throw std::invalid_argument("check_ac_norm: rearrangement unavailable");
  CheckReport rep;
  rep.check_id = "ac_norm";
  detail::set_param(rep, "item", label);
  detail::set_param(rep, "p", pq.p);
  detail::set_param(rep, "q", pq.q);
  detail::set_param(rep, "k_max", static_cast<std::int64_t>(k_max));
  rep.samples = k_max;
  std::vector<double> seq;
  for (int k = 1; k <= k_max; ++k) {
    const double m = total_measure * std::ldexp(1.0, -k * dim);
    NormValue nv = NormValue::finite(0.0);
    if (rearr.exact) {
      nv = quasinorm(head_restriction(*rearr.exact, m), pq, quad);
    } else {
      nv = numeric_profile_quasinorm(rearr.fn, std::min(m, rearr.support), pq, quad);
    }
    if (!nv.is_finite()) {
      rep.lhs = std::numeric_limits<double>::infinity();
      rep.rhs = 0.0;
      rep.margin = -std::numeric_limits<double>::infinity();
      rep.verdict = Verdict::Fail;
      rep.note = "restriction norm infinite at k=" + std::to_string(k);
      return rep;
    }
    seq.push_back(nv.value());
  }
  const double first = seq.front();
  const double vmax = *std::max_element(seq.begin(), seq.end());
  const double vmin = *std::min_element(seq.begin(), seq.end());
  const double spread = vmax > 0.0 ? vmax / vmin - 1.0 : 0.0;
  if (spread <= 1e-9) {
    rep.lhs = spread;
    rep.rhs = 1e-9;
    rep.margin = rep.rhs - rep.lhs;
    rep.verdict = Verdict::Pass;
    rep.note = "constant at " + detail::fmt_num(first);
    return rep;
  }
  bool monotone = true;
  for (std::size_t k = 1; k < seq.size(); ++k) {
    if (seq[k] > seq[k - 1] * (1.0 + 1e-9)) monotone = false;
  }
  rep.lhs = seq.back();
  rep.rhs = 1e-3 * first;
  rep.margin = rep.rhs - rep.lhs;
  rep.verdict = (monotone && rep.margin >= 0.0) ? Verdict::Pass : Verdict::Fail;
  rep.note = monotone ? "decreasing" : "not monotone";
  return rep;
}

inline CheckReport check_ac_norm(const GalleryItem& item, const ExponentPair& pq, int k_max,
                                 const QuadratureSpec& quad = {}) {
  if (!item.value_nonincreasing)
    throw std::invalid_argument("check_ac_norm: needs a radially nonincreasing |value|");
  return check_ac_norm_profile(item.id, item.value_rearrangement, item.measure(), item.dim(), pq,
                               k_max, quad);
}

/// Weak-norm distance from the critical power to a bounded comparison
/// function, on each ball B(0, a): must stay above Omega_n^{1/p} less a 1%
/// discretization allowance no matter the bounded function.
inline CheckReport check_distance_bound(const std::function<double(double)>& bounded,
                                        const std::string& label, int n, double p,
                                        const std::vector<double>& radii, int shells = 100000) {
  if (radii.empty()) throw std::invalid_argument("check_distance_bound: need at least one radius");
  CheckReport rep;
  rep.check_id = "weak_distance_bound";
  detail::set_param(rep, "fn", label);
  detail::set_param(rep, "n", static_cast<std::int64_t>(n));
  detail::set_param(rep, "p", p);
  rep.samples = static_cast<std::int64_t>(radii.size());
  const double target = std::pow(unit_ball_volume(n), 1.0 / p);
  double worst = std::numeric_limits<double>::infinity();
  for (double a : radii) {
    const auto diff = [&](double s) { return std::abs(std::pow(s, -double(n) / p) - bounded(s)); };
    const StepProfile prof = rearrange_radial(diff, n, a, shells);
    const NormValue d = quasinorm(prof, ExponentPair::make_inf(p));
    worst = std::min(worst, d.is_finite() ? d.value() : worst);
  }
  rep.lhs = target * (1.0 - 1e-2);
  rep.rhs = worst;
  rep.margin = rep.rhs - rep.lhs;
  rep.verdict = rep.margin >= 0.0 ? Verdict::Pass : Verdict::Fail;
  rep.note = "target=" + detail::fmt_num(target);
  return rep;
}

/// Sampled lower bound for sup |u(x)-u(y)| / |x-y|^beta over the domain.
/// Pairs with a non-finite endpoint value are dropped (the singular families
/// are probed up to, not at, the origin unless the value extends there).
inline double estimate_holder_seminorm(const std::function<double(double)>& radial_value,
                                       const PairSampler& sampler, double beta, std::size_t count) {
  if (!(beta > 0.0 && beta < 1.0))
    throw std::invalid_argument("estimate_holder_seminorm: beta must lie in (0,1)");
  double best = 0.0;
  bool any = false;
  for (std::size_t i = 0; i < count; ++i) {
    const RadialPair pr = sampler.pair_at(i);
    const double d = pr.distance();
    if (!(d > 0.0)) continue;
    const double u1 = radial_value(pr.s1);
    const double u2 = radial_value(pr.s2);
    if (!std::isfinite(u1) || !std::isfinite(u2)) continue;
    best = std::max(best, std::abs(u1 - u2) / std::pow(d, beta));
    any = true;
  }
  if (!any) throw std::domain_error("estimate_holder_seminorm: all sampled pairs degenerate");
  return best;
}

namespace detail {

/// |u'(x)| = amplitude * profile(|x|) for the one-dimensional radial families.
struct RadialDerivative {
  Profile profile;
  double amplitude = 1.0;
};

inline RadialDerivative radial_derivative_1d(const GalleryItem& item) {
  if (item.dim() != 1)
    throw std::invalid_argument("radial_derivative_1d: one-dimensional items only");
  const double r = item.radius();
  if (item.tag == GalleryTag::VAntiderivative) {
    const double p0 = item.params.at("p");
    const double alpha = item.params.at("alpha");
    // (2s)^{-1/p} ln^{-alpha}(e^{p alpha} r / s) split into profile and amplitude
    return {Profile{LogPowerProfile::standard(p0, alpha, r)}, std::pow(2.0, -1.0 / p0)};
  }
  if (item.tag == GalleryTag::UpFamily || item.tag == GalleryTag::Shifted) {
    const double p0 = item.params.at("p");
    const double c = std::abs(up_gradient_coefficient(1, p0));
    return {Profile{PowerProfile(c, 1.0 / p0, r)}, 1.0};
  }
  throw std::invalid_argument("radial_derivative_1d: unsupported item " + item.id);
}

/// Geometric-cell step discretization of amp * profile on radii (0, reach),
/// cell values taken at the right edge so the result never exceeds the true
/// rearrangement.  Appends (value, width) pairs in descending value order.
inline void append_radial_fan(const Profile& prof, double amp, double reach, std::size_t cells,
                              double decades, std::vector<std::pair<double, double>>& out) {
  if (!(reach > 0.0)) return;
  const double inner = reach * std::pow(10.0, -decades);
  const double step = std::pow(reach / inner, 1.0 / double(cells - 1));
  double prev = 0.0;
  double edge = inner;
  for (std::size_t i = 0; i < cells; ++i) {
    if (i + 1 == cells) edge = reach;
    out.emplace_back(amp * profile_value(prof, edge), edge - prev);
    prev = edge;
    edge *= step;
  }
}

inline double one_sided_interval_norm(const RadialDerivative& d, double a, double b,
                                      const ExponentPair& pq, const QuadratureSpec& quad) {
  // radii (a, b) on one side of the origin: |u'| is already nonincreasing there
  if (a == 0.0) {
    const NormValue nv = quasinorm(head_restriction(d.profile, b), pq, quad);
    return d.amplitude * nv.value();
  }
  const Profile& prof = d.profile;
  const double amp = d.amplitude;
  const NormValue nv = numeric_profile_quasinorm(
      [&prof, amp, a, b](double t) { return amp * profile_value(prof, std::min(a + t, b)); }, b - a,
      pq, quad);
  return nv.value();
}

inline double straddle_interval_norm(const RadialDerivative& d, double left_reach, double right_reach,
                                     const ExponentPair& pq, const QuadratureSpec& quad) {
  constexpr std::size_t kCells = 1024;
  constexpr double kDecades = 12.0;
  std::vector<std::pair<double, double>> left, right, merged;
  append_radial_fan(d.profile, d.amplitude, left_reach, kCells, kDecades, left);
  append_radial_fan(d.profile, d.amplitude, right_reach, kCells, kDecades, right);
  merged.reserve(left.size() + right.size());
  std::merge(left.begin(), left.end(), right.begin(), right.end(), std::back_inserter(merged),
             [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<double> breaks(merged.size() + 1, 0.0);
  std::vector<double> values(merged.size());
  for (std::size_t i = 0; i < merged.size(); ++i) {
    values[i] = merged[i].first;
    breaks[i + 1] = breaks[i] + merged[i].second;
  }
  const NormValue nv = quasinorm(StepProfile::make(std::move(breaks), std::move(values)), pq, quad);
  return nv.value();
}

/// Lorentz norm of |u'| restricted to the interval (x, y).
inline double interval_derivative_norm(const RadialDerivative& d, double x, double y,
                                       const ExponentPair& pq, const QuadratureSpec& quad) {
  if (x >= 0.0) return one_sided_interval_norm(d, x, y, pq, quad);
  if (y <= 0.0) return one_sided_interval_norm(d, -y, -x, pq, quad);
  return straddle_interval_norm(d, -x, y, pq, quad);
}

}  // namespace detail

/// The interval constant: indicator norm of (0,1) at the conjugate pair,
/// (p'/q')^{1/q'} with the limiting branches at q = 1 and q = infinity.
inline double morrey_constant_1d(const ExponentPair& pq) {
  const Exponent q_conj = conjugate_exponent(pq.q);
  if (q_conj.is_infinite()) return 1.0;
  return std::pow(conjugate_exponent(pq.p) / q_conj.value(), 1.0 / q_conj.value());
}

/// |u(x)-u(y)| <= C(p,q) |x-y|^{1-1/p} ||u'||_{p,q;(x,y)} over sampled pairs.
/// Subinterval norms: exact when the pair sits on one side of the origin with
/// an endpoint at 0, quadrature one-sided otherwise, and a merged geometric
/// step discretization (a slight underestimate of the right side) when the
/// interval straddles the origin.
inline CheckReport check_morrey_1d(const GalleryItem& item, const ExponentPair& pq,
                                   std::uint64_t seed, std::size_t pairs,
                                   const QuadratureSpec& quad = {}) {
  CheckReport rep;
  rep.check_id = "morrey_interval";
  detail::set_param(rep, "item", item.id);
  detail::set_param(rep, "p", pq.p);
  detail::set_param(rep, "q", pq.q);
  detail::set_param(rep, "seed", static_cast<std::int64_t>(seed));
  const detail::RadialDerivative deriv = detail::radial_derivative_1d(item);
  const NormValue whole = quasinorm(deriv.profile, pq, quad);
  if (!whole.is_finite()) {
    rep.note = std::string("derivative norm infinite: ") + to_string(whole.reason());
    return rep;
  }
  const double c = morrey_constant_1d(pq);
  const double holder_exp = 1.0 - 1.0 / pq.p;
  const PairSampler sampler{item.domain, PairStrategy::RadialGeometric, seed, false};
  double worst_margin = std::numeric_limits<double>::infinity();
  double worst_lhs = 0.0;
  double worst_rhs = 0.0;
  LinePair worst_pair{0.0, 0.0};
  bool all_pass = true;
  const auto value_at = [&](double coord) { return item.radial_value(std::abs(coord)); };
  for (std::size_t i = 0; i < pairs; ++i) {
    const LinePair pr = line_pair_at(sampler, i);
    const double lhs = std::abs(value_at(pr.x) - value_at(pr.y));
    const double norm = detail::interval_derivative_norm(deriv, pr.x, pr.y, pq, quad);
    const double rhs = c * std::pow(pr.y - pr.x, holder_exp) * norm;
    const double slack = std::max(10.0 * quad.rel_tol, 1e-9) * std::max(rhs, 1e-12);
    const double margin = rhs - lhs;
    if (margin < -slack) all_pass = false;
    if (margin < worst_margin) {
      worst_margin = margin;
      worst_lhs = lhs;
      worst_rhs = rhs;
      worst_pair = pr;
    }
  }
  rep.samples = static_cast<std::int64_t>(pairs);
  rep.lhs = worst_lhs;
  rep.rhs = worst_rhs;
  rep.margin = worst_margin;
  rep.verdict = all_pass ? Verdict::Pass : Verdict::Fail;
  rep.note = "worst pair x=" + detail::fmt_num(worst_pair.x) + ",y=" + detail::fmt_num(worst_pair.y);
  return rep;
}

/// Higher dimensions.  For p > n: the sampled seminorm at beta = 1 - n/p must
/// be stable under doubling the sample count (< 5% drift), and its ratio to
/// the gradient norm is recorded.  For p <= n: the seminorm must blow up, by
/// a factor 10 over four decades of shrinking probe radius at a fixed probe
/// exponent of 1/2.
inline CheckReport check_morrey_nd(const GalleryItem& item, const ExponentPair& pq,
                                   std::uint64_t seed, std::size_t samples,
                                   const QuadratureSpec& quad = {}) {
  CheckReport rep;
  detail::set_param(rep, "item", item.id);
  detail::set_param(rep, "p", pq.p);
  detail::set_param(rep, "q", pq.q);
  detail::set_param(rep, "seed", static_cast<std::int64_t>(seed));
  const int n = item.dim();
  if (pq.p > double(n)) {
    rep.check_id = "morrey_ball";
    const double beta = 1.0 - double(n) / pq.p;
    detail::set_param(rep, "beta", beta);
    const PairSampler sampler{item.domain, PairStrategy::RadialGeometric, seed, true};
    const double e1 = estimate_holder_seminorm(item.radial_value, sampler, beta, samples);
    const double e2 = estimate_holder_seminorm(item.radial_value, sampler, beta, 2 * samples);
    rep.samples = static_cast<std::int64_t>(2 * samples);
    const NormValue grad = item.gradient_rearrangement.norm(pq, quad);
    if (!grad.is_finite()) {
      rep.note = std::string("gradient norm infinite: ") + to_string(grad.reason());
      return rep;
    }
    if (grad.value() > 0.0) detail::set_param(rep, "ratio", e2 / grad.value());
    const double drift = e1 > 0.0 ? e2 / e1 - 1.0 : 0.0;
    rep.lhs = drift;
    rep.rhs = 0.05;
    rep.margin = rep.rhs - rep.lhs;
    rep.verdict = (std::isfinite(e2) && rep.margin >= 0.0) ? Verdict::Pass : Verdict::Fail;
    rep.note = "estimate=" + detail::fmt_num(e2);
    return rep;
  }
  rep.check_id = "morrey_blowup";
  const double beta = 0.5;  // 1 - n/p leaves (0,1) here, so probe at a fixed exponent
  detail::set_param(rep, "beta", beta);
  const double r = item.radius();
  std::vector<double> est;
  for (int j = 0; j <= 4; ++j) {
    const double s = r * std::pow(10.0, -j);
    est.push_back(std::abs(item.radial_value(s) - item.radial_value(0.5 * s)) /
                  std::pow(0.5 * s, beta));
  }
  rep.samples = static_cast<std::int64_t>(est.size());
  rep.lhs = 10.0 * est.front();
  rep.rhs = est.back();
  rep.margin = rep.rhs - rep.lhs;
  rep.verdict = (std::isfinite(rep.rhs) && rep.margin >= 0.0) ? Verdict::Pass : Verdict::Fail;
  rep.note = "baseline=" + detail::fmt_num(est.front());
  return rep;
}

/// rho = ||u||_{p,q} / (|Omega|^{1/n} ||grad u||_{p,q}) for boundary-vanishing
/// items: every rho must be finite, the maximum is recorded, and for the
/// antiderivative family rho must be invariant under doubling the domain
/// radius to rel 1e-3.  Items with an infinite gradient norm are skipped by
/// name in the note.
inline CheckReport check_poincare_ratio(const std::vector<GalleryItem>& items, const ExponentPair& pq,
                                        const QuadratureSpec& quad = {}) {
  if (items.empty()) throw std::invalid_argument("check_poincare_ratio: need at least one item");
  CheckReport rep;
  rep.check_id = "poincare_ratio";
  detail::set_param(rep, "p", pq.p);
  detail::set_param(rep, "q", pq.q);
  rep.samples = 0;
  const auto rho_of = [&](const GalleryItem& it) -> std::optional<double> {
    const NormValue grad = it.gradient_rearrangement.norm(pq, quad);
    if (!grad.is_finite()) return std::nullopt;
    if (grad.value() == 0.0) return 0.0;
    const NormValue val = it.value_rearrangement.norm(pq, quad);
    if (!val.is_finite()) return std::numeric_limits<double>::infinity();
    return val.value() / (std::pow(it.measure(), 1.0 / it.dim()) * grad.value());
  };
  double max_rho = 0.0;
  std::string max_id = "-";
  double worst_drift = 0.0;
  bool all_finite = true;
  std::string skipped;
  for (const auto& item : items) {
    if (!item.boundary_zero)
      throw std::invalid_argument("check_poincare_ratio: item does not vanish on the boundary: " +
                                  item.id);
    const auto rho = rho_of(item);
    if (!rho) {
      if (!skipped.empty()) skipped += ",";
      skipped += item.id;
      continue;
    }
    ++rep.samples;
    if (!std::isfinite(*rho)) {
      all_finite = false;
      continue;
    }
    if (*rho > max_rho) {
      max_rho = *rho;
      max_id = item.id;
    }
    if (item.tag == GalleryTag::VAntiderivative && *rho > 0.0) {
      const GalleryItem doubled =
          make_v(2.0 * item.params.at("r"), item.params.at("alpha"), item.dim(),
                 item.params.at("p"), quad);
      const auto rho2 = rho_of(doubled);
      if (rho2 && std::isfinite(*rho2)) {
        worst_drift = std::max(worst_drift, std::abs(*rho2 / *rho - 1.0));
      }
    }
  }
  detail::set_param(rep, "max_rho", max_rho);
  rep.lhs = worst_drift;
  rep.rhs = 1e-3;
  rep.margin = rep.rhs - rep.lhs;
  rep.verdict = (all_finite && rep.samples > 0 && rep.margin >= 0.0) ? Verdict::Pass : Verdict::Fail;
  rep.note = "max rho at " + max_id + (skipped.empty() ? std::string() : "; skipped " + skipped);
  return rep;
}

// ---------------------------------------------------------------------------
// Suites: fixed input matrices over the gallery plus randomized step fields.

struct SuiteConfig {
  std::uint64_t seed = 1;
  QuadratureSpec quad{};
};

namespace detail {

/// Two fields on a shared random partition; magnitudes mix zeros, deliberate
/// ties, and a spread of scales.
inline std::pair<SampledField, SampledField> random_field_pair(std::uint64_t seed,
                                                              std::uint64_t index,
                                                              std::size_t cells) {
  IndexedRng wrng(seed, index * 3);
  IndexedRng frng(seed, index * 3 + 1);
  IndexedRng grng(seed, index * 3 + 2);
  SampledField f, g;
  const auto magnitude = [](IndexedRng& rng) {
    const double roll = rng.unit();
    if (roll < 0.15) return 0.0;
    if (roll < 0.35) return std::floor(8.0 * rng.unit()) * 0.25;
    return std::exp(2.4 * (rng.unit() - 0.5));
  };
  for (std::size_t i = 0; i < cells; ++i) {
    const double w = 0.02 + 0.98 * wrng.unit();
    f.cells.push_back({w, magnitude(frng)});
    g.cells.push_back({w, magnitude(grng)});
  }
  f.validate();
  g.validate();
  return {std::move(f), std::move(g)};
}

/// Folds per-trial reports into one row keeping the worst margin.
struct WorstFold {
  CheckReport worst;
  bool any = false;
  bool all_pass = true;

  void add(const CheckReport& rep) {
    if (rep.verdict == Verdict::Fail) all_pass = false;
    if (!any || rep.margin < worst.margin) worst = rep;
    any = true;
  }

  CheckReport finish(std::int64_t samples, const char* inputs) const {
    CheckReport rep = worst;
    rep.samples = samples;
    set_param(rep, "inputs", inputs);
    if (!all_pass && rep.verdict == Verdict::Pass) rep.verdict = Verdict::Fail;
    return rep;
  }
};

}  // namespace detail

/// Product inequalities: the two-sided chain on randomized step pairs per
/// exponent pair, the indicator equality case, the general-exponent split,
/// and the exponent-loss embedding over the gallery.
inline std::vector<CheckReport> suite_holder(const SuiteConfig& cfg = {}) {
  std::vector<CheckReport> out;
  const std::vector<ExponentPair> grid = {ExponentPair::make(2.0, 1.0), ExponentPair::make(2.0, 2.0),
                                          ExponentPair::make_inf(2.0), ExponentPair::make(3.0, 2.0)};
  constexpr std::size_t kTrials = 1000;
  for (std::size_t gi = 0; gi < grid.size(); ++gi) {
    detail::WorstFold fold;
    for (std::size_t t = 0; t < kTrials; ++t) {
      const auto [f, g] = detail::random_field_pair(cfg.seed + 7919 * gi, t, 50);
      fold.add(check_holder(f, g, grid[gi], cfg.quad));
    }
    out.push_back(fold.finish(kTrials, "random"));
  }
  {
    SampledField chi;
    chi.cells.push_back({1.0, 1.0});
    chi.validate();
    CheckReport rep = check_holder(chi, chi, ExponentPair::make(2.0, 2.0), cfg.quad);
    detail::set_param(rep, "inputs", "indicator");
    out.push_back(rep);
  }
  {
    detail::WorstFold fold;
    const ExponentPair half = ExponentPair::make(4.0, 4.0);
    for (std::size_t t = 0; t < 500; ++t) {
      const auto [f, g] = detail::random_field_pair(cfg.seed ^ 0x5bd1e995u, t, 50);
      (void)g;
      fold.add(check_general_holder(f, ExponentPair::make(2.0, 2.0), half, half, f.total_weight(),
                                    cfg.quad));
    }
    out.push_back(fold.finish(500, "random"));
  }
  {
    SampledField chi;
    chi.cells.push_back({1.0, 1.0});
    chi.validate();
    CheckReport rep = check_general_holder(chi, ExponentPair::make(2.0, 2.0),
                                           ExponentPair::make(4.0, 4.0), ExponentPair::make(4.0, 4.0),
                                           1.0, cfg.quad);
    detail::set_param(rep, "inputs", "indicator");
    out.push_back(rep);
  }
  {
    SampledField zero;
    zero.cells.push_back({1.0, 0.0});
    zero.validate();
    CheckReport rep = check_general_holder(zero, ExponentPair::make(2.0, 2.0),
                                           ExponentPair::make(4.0, 4.0), ExponentPair::make(4.0, 4.0),
                                           1.0, cfg.quad);
    detail::set_param(rep, "inputs", "zero");
    out.push_back(rep);
  }
  const auto embed = [&](const Profile& f, const std::string& label, double p, const Exponent& q,
                         double eps, double omega) {
    CheckReport rep = check_embedding_eps(f, p, q, eps, omega, cfg.quad);
    detail::set_param(rep, "item", label);
    out.push_back(rep);
  };
  {
    const GalleryItem ur = make_power_singularity(1.0, 1, 2.0);
    embed(*ur.value_rearrangement.exact, ur.id, 2.0, Exponent::infinity(), 1.0, ur.measure());
  }
  {
    const GalleryItem slice = make_u_slice(1.0, 1.0, 2.0);
    const Profile& prof = *slice.value_rearrangement.exact;
    embed(prof, slice.id, 2.0, Exponent::infinity(), 1.0, slice.measure());
    embed(prof, slice.id, 2.0, Exponent::finite(4.0), 0.5, slice.measure());
  }
  {
    const GalleryItem slice = make_u_slice(1.0, 0.5, 2.0);
    embed(*slice.value_rearrangement.exact, slice.id, 2.0, Exponent::infinity(), 1.0,
          slice.measure());
  }
  embed(IndicatorProfile(2.0, 0.5), "indicator", 2.0, Exponent::infinity(), 1.0, 0.5);
  embed(StepProfile::make({0.0, 0.25, 1.0, 1.5}, {3.0, 1.0, 0.25}), "step", 3.0,
        Exponent::finite(6.0), 0.8, 1.5);
  return out;
}

/// The sandwich between the quasinorm and the maximal-function norm, plus the
/// closed-form indicator identities at rel 1e-12.
inline std::vector<CheckReport> suite_equivalence(const SuiteConfig& cfg = {}) {
  std::vector<CheckReport> out;
  const auto sandwich = [&](const Profile& f, const std::string& label, const ExponentPair& pq) {
    CheckReport rep = check_equivalence(f, pq, cfg.quad);
    detail::set_param(rep, "item", label);
    out.push_back(rep);
  };
  {
    const GalleryItem slice = make_u_slice(1.0, 1.0, 2.0);
    sandwich(*slice.value_rearrangement.exact, slice.id, ExponentPair::make(2.0, 2.0));
    sandwich(*slice.value_rearrangement.exact, slice.id, ExponentPair::make(2.0, 4.0));
  }
  {
    const GalleryItem slice = make_u_slice(1.0, 0.5, 3.0);
    sandwich(*slice.value_rearrangement.exact, slice.id, ExponentPair::make(3.0, 4.0));
  }
  {
    const GalleryItem ur1 = make_power_singularity(1.0, 1, 2.0);
    sandwich(*ur1.value_rearrangement.exact, ur1.id, ExponentPair::make_inf(2.0));
    const GalleryItem ur2 = make_power_singularity(1.0, 2, 3.0);
    sandwich(*ur2.value_rearrangement.exact, ur2.id, ExponentPair::make_inf(3.0));
  }
  {
    const GalleryItem grad = make_v(1.0, 1.0, 2, 3.0, cfg.quad);
    sandwich(*grad.gradient_rearrangement.exact, "grad " + grad.id, ExponentPair::make(3.0, 2.0));
  }
  sandwich(IndicatorProfile(1.0, 1.0), "indicator", ExponentPair::make(2.0, 2.0));
  sandwich(IndicatorProfile(1.0, 1.0), "indicator", ExponentPair::make(3.0, 1.5));
  sandwich(IndicatorProfile(1.0, 1.0), "indicator", ExponentPair::make_inf(2.0));
  {
    const auto [f, g] = detail::random_field_pair(cfg.seed, 0, 50);
    (void)g;
    const StepProfile fs = rearrange(f);
    sandwich(fs, "random step", ExponentPair::make(2.0, 2.0));
    sandwich(fs, "random step", ExponentPair::make(2.0, 1.0));
  }
  sandwich(StepProfile{}, "zero", ExponentPair::make(2.0, 2.0));
  // indicator closed forms, independently coded
  const auto forms = [&](double p, const Exponent& q, double measure) {
    CheckReport rep;
    rep.check_id = "indicator_forms";
    detail::set_param(rep, "p", p);
    detail::set_param(rep, "q", q);
    detail::set_param(rep, "measure", measure);
    rep.samples = 2;
    const ExponentPair pq(p, q);
    const double root = std::pow(measure, 1.0 / p);
    const double pc = conjugate_exponent(p);
    const double expect_quasi = q.is_infinite() ? root : std::pow(p / q.value(), 1.0 / q.value()) * root;
    const double expect_star =
        q.is_infinite() ? root : root * std::pow(p * pc / q.value(), 1.0 / q.value());
    const Profile chi{IndicatorProfile(1.0, measure)};
    const double got_quasi = quasinorm(chi, pq, cfg.quad).value();
    const double got_star = starstar_norm(chi, pq, cfg.quad).value();
    const double rel = std::max(std::abs(got_quasi - expect_quasi) / expect_quasi,
                                std::abs(got_star - expect_star) / expect_star);
    rep.lhs = rel;
    rep.rhs = 1e-12;
    rep.margin = rep.rhs - rep.lhs;
    rep.verdict = rep.margin >= 0.0 ? Verdict::Pass : Verdict::Fail;
    out.push_back(rep);
  };
  forms(2.0, Exponent::finite(2.0), 1.0);
  forms(2.0, Exponent::finite(1.0), 0.5);
  forms(3.0, Exponent::finite(1.5), 2.0);
  forms(1.5, Exponent::finite(4.0), 3.0);
  return out;
}

/// The strict-inclusion witness grid (with growth assertions; p alpha >= 2
/// throughout so the truncated-head refinements clear the 10% gate), plus the
/// boundary examples checked for their finite/infinite split only.
inline std::vector<CheckReport> suite_inclusion(const SuiteConfig& cfg = {}) {
  std::vector<CheckReport> out;
  const std::vector<double> ps = {4.0, 5.0, 6.0, 8.0};
  const std::vector<std::pair<double, Exponent>> qs = {
      {1.0, Exponent::finite(2.0)},
      {1.0, Exponent::infinity()},
      {2.0, Exponent::finite(4.0)},
      {2.0, Exponent::infinity()},
  };
  for (double p : ps) {
    for (const auto& [q1, q2] : qs) {
      const WitnessBundle b = witness_strict_inclusion(p, q1, q2, cfg.quad);
      for (auto& rep : witness_reports(b, true, cfg.quad)) out.push_back(std::move(rep));
    }
  }
  const std::vector<std::tuple<double, double, Exponent>> boundary = {
      {2.0, 1.0, Exponent::finite(2.0)},
      {2.0, 2.0, Exponent::infinity()},
      {3.0, 1.0, Exponent::infinity()},
  };
  for (const auto& [p, q1, q2] : boundary) {
    const WitnessBundle b = witness_strict_inclusion(p, q1, q2, cfg.quad);
    for (auto& rep : witness_reports(b, false, cfg.quad)) out.push_back(std::move(rep));
  }
  return out;
}

/// Restriction-norm behavior on shrinking balls: power-decay items fall below
/// the 1e-3 gate, the critical power stays exactly constant.
inline std::vector<CheckReport> suite_ac(const SuiteConfig& cfg = {}) {
  std::vector<CheckReport> out;
  out.push_back(check_ac_norm(make_power_singularity(1.0, 1, 2.0), ExponentPair::make_inf(2.0), 8,
                              cfg.quad));
  out.push_back(check_ac_norm(make_power_singularity(1.0, 2, 3.0), ExponentPair::make_inf(3.0), 8,
                              cfg.quad));
  {
    MeasureProfile chi;
    chi.exact = Profile{IndicatorProfile(1.0, 1.0)};
    chi.support = 1.0;
    chi.fn = [](double) { return 1.0; };
    out.push_back(
        check_ac_norm_profile("indicator", chi, 1.0, 1, ExponentPair::make(2.0, 2.0), 22, cfg.quad));
  }
  out.push_back(check_ac_norm(make_up(3, 2.0), ExponentPair::make(2.0, 2.0), 12, cfg.quad));
  out.push_back(check_ac_norm(make_v(1.0, 0.5, 2, 3.0, cfg.quad), ExponentPair::make(3.0, 2.0), 18,
                              cfg.quad));
  return out;
}

/// Interval-case constants and the sampled pairwise inequality across the
/// declared matrix: three one-dimensional items, four exponent pairs.
inline std::vector<CheckReport> suite_morrey1d(const SuiteConfig& cfg = {}) {
  std::vector<CheckReport> out;
  const auto constant = [&](const ExponentPair& pq, double expected) {
    CheckReport rep;
    rep.check_id = "morrey_constant";
    detail::set_param(rep, "p", pq.p);
    detail::set_param(rep, "q", pq.q);
    rep.samples = 1;
    const double got = morrey_constant_1d(pq);
    rep.lhs = std::abs(got - expected);
    rep.rhs = 1e-12;
    rep.margin = rep.rhs - rep.lhs;
    rep.verdict = rep.margin >= 0.0 ? Verdict::Pass : Verdict::Fail;
    rep.note = "constant=" + detail::fmt_num(got);
    out.push_back(rep);
  };
  constant(ExponentPair::make(2.0, 1.0), 1.0);
  constant(ExponentPair::make(2.0, 2.0), 1.0);
  constant(ExponentPair::make_inf(3.0), 1.5);
  const std::vector<GalleryItem> items = {make_v(1.0, 1.0, 1, 3.0, cfg.quad),
                                          make_v(1.0, 0.5, 1, 4.0, cfg.quad),
                                          make_shifted_up(1.0, 1, 3.0)};
  const std::vector<ExponentPair> pqs = {ExponentPair::make(2.0, 1.0), ExponentPair::make(2.0, 2.0),
                                         ExponentPair::make(2.0, 4.0), ExponentPair::make_inf(3.0)};
  constexpr std::size_t kPairs = 10000;
  for (const auto& item : items) {
    for (const auto& pq : pqs) {
      out.push_back(check_morrey_1d(item, pq, cfg.seed, kPairs, cfg.quad));
    }
  }
  return out;
}

/// Ball-case seminorm checks: stability and recorded ratio above the critical
/// dimension, blow-up detection at and below it.
inline std::vector<CheckReport> suite_morreynd(const SuiteConfig& cfg = {}) {
  std::vector<CheckReport> out;
  constexpr std::size_t kSamples = 4000;
  out.push_back(
      check_morrey_nd(make_up(2, 4.0), ExponentPair::make_inf(4.0), cfg.seed, kSamples, cfg.quad));
  out.push_back(check_morrey_nd(make_v(1.0, 1.0, 2, 4.0, cfg.quad), ExponentPair::make(4.0, 2.0),
                                cfg.seed, kSamples, cfg.quad));
  out.push_back(check_morrey_nd(make_v(1.0, 1.0, 2, 2.0, cfg.quad), ExponentPair::make(2.0, 2.0),
                                cfg.seed, kSamples, cfg.quad));
  out.push_back(check_morrey_nd(make_v(1.0, 0.5, 2, 2.0, cfg.quad), ExponentPair::make(2.0, 2.0),
                                cfg.seed, kSamples, cfg.quad));
  out.push_back(
      check_morrey_nd(make_up(2, 2.0), ExponentPair::make(2.0, 2.0), cfg.seed, kSamples, cfg.quad));
  return out;
}

/// Scale-calibrated norm ratios for the boundary-vanishing items.
inline std::vector<CheckReport> suite_poincare(const SuiteConfig& cfg = {}) {
  std::vector<CheckReport> out;
  {
    const std::vector<GalleryItem> items = {
        make_v(1.0, 1.0, 2, 3.0, cfg.quad), make_v(1.0, 0.5, 2, 3.0, cfg.quad),
        make_shifted_up(1.0, 2, 3.0), truncate(make_v(1.0, 1.0, 2, 3.0, cfg.quad), 2)};
    out.push_back(check_poincare_ratio(items, ExponentPair::make_inf(3.0), cfg.quad));
  }
  {
    const std::vector<GalleryItem> items = {make_v(1.0, 1.0, 2, 3.0, cfg.quad),
                                            make_v(1.0, 0.5, 2, 3.0, cfg.quad)};
    out.push_back(check_poincare_ratio(items, ExponentPair::make(3.0, 3.0), cfg.quad));
  }
  return out;
}

inline std::vector<CheckReport> run_suite(const std::string& name, const SuiteConfig& cfg = {}) {
  std::vector<CheckReport> out;
  const auto append = [&](std::vector<CheckReport> part) {
    for (auto& rep : part) out.push_back(std::move(rep));
  };
  if (name == "holder" || name == "all") append(suite_holder(cfg));
  if (name == "equivalence" || name == "all") append(suite_equivalence(cfg));
  if (name == "inclusion" || name == "all") append(suite_inclusion(cfg));
  if (name == "ac" || name == "all") append(suite_ac(cfg));
  if (name == "morrey1d" || name == "all") append(suite_morrey1d(cfg));
  if (name == "morreynd" || name == "all") append(suite_morreynd(cfg));
  if (name == "poincare" || name == "all") append(suite_poincare(cfg));
  if (out.empty()) throw std::invalid_argument("run_suite: unknown suite " + name);
  std::sort(out.begin(), out.end(), report_order);
  return out;
}

}  // namespace lorentz

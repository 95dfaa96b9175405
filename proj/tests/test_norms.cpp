#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <functional>
#include <random>
#include <vector>

#include "lorentz/norms.hpp"
#include "lorentz/serialize.hpp"

using namespace lorentz;
using Catch::Matchers::WithinRel;

namespace {

// Composite Simpson on a uniform grid; the test-side oracle quadrature,
// deliberately unrelated to the adaptive rules used by the library.
double simpson(const std::function<double(double)>& f, double a, double b, int intervals) {
  if (intervals % 2 != 0) ++intervals;
  double h = (b - a) / intervals;
  double s = f(a) + f(b);
  for (int i = 1; i < intervals; ++i) s += f(a + h * i) * (i % 2 ? 4.0 : 2.0);
  return s * h / 3.0;
}

StepProfile worked_step() {
  // 2 on [0, 1), 1 on [1, 3).
  return StepProfile::make({0.0, 1.0, 3.0}, {2.0, 1.0});
}

StepProfile random_step(std::mt19937_64& rng, int max_cells = 6) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  int k = 1 + static_cast<int>(unit(rng) * max_cells);
  std::vector<double> bp{0.0}, vals;
  double t = 0.0, v = 2.0 + 3.0 * unit(rng);
  for (int i = 0; i < k; ++i) {
    t += 0.1 + 2.0 * unit(rng);
    bp.push_back(t);
    vals.push_back(v);
    v *= 0.2 + 0.7 * unit(rng);
  }
  return StepProfile::make(std::move(bp), std::move(vals));
}

}  // namespace

TEST_CASE("log-power profile norms at the matched exponent") {
  auto f = LogPowerProfile::standard(2.0, 1.0, std::numbers::pi);

  SECTION("weak norm") {
    // sup t^{1/p} f(t) = (p alpha)^{-alpha} = 1/2, attained at the support end.
    auto v = quasinorm(Profile{f}, ExponentPair::make_inf(2.0));
    REQUIRE_THAT(v.value(), WithinRel(0.5, 1e-12));
  }
  SECTION("q = 2") {
    // ((p alpha)^{1-q alpha}/(q alpha - 1))^{1/q} = sqrt(1/2).
    auto v = quasinorm(Profile{f}, ExponentPair::make(2.0, 2.0));
    REQUIRE_THAT(v.value(), WithinRel(std::sqrt(0.5), 1e-12));
  }
  SECTION("q = 3") {
    // (2^{-2} / 2)^{1/3} = 1/2 exactly.
    auto v = quasinorm(Profile{f}, ExponentPair::make(2.0, 3.0));
    REQUIRE_THAT(v.value(), WithinRel(0.5, 1e-12));
  }
  SECTION("q = 1 diverges through the logarithm test") {
    auto v = quasinorm(Profile{f}, ExponentPair::make(2.0, 1.0));
    REQUIRE_FALSE(v.is_finite());
    REQUIRE(v.reason() == DivergenceReason::LogExponentTest);
    REQUIRE(v.str() == "INFINITE(LOG_EXPONENT_TEST)");
  }
  SECTION("quadrature path agrees with the closed forms") {
    auto q2 = quasinorm_quadrature(Profile{f}, ExponentPair::make(2.0, 2.0));
    REQUIRE_THAT(q2, WithinRel(std::sqrt(0.5), 1e-9));
    auto q3 = quasinorm_quadrature(Profile{f}, ExponentPair::make(2.0, 3.0));
    REQUIRE_THAT(q3, WithinRel(0.5, 1e-9));
  }
}

TEST_CASE("log-power profile against a smaller primary exponent") {
  // p = 1.5 < 2 shifts weight off the singular head: finite for every q.
  auto f = LogPowerProfile::standard(2.0, 1.0, 1.0);
  auto pq = ExponentPair::make(1.5, 2.0);

  auto v = quasinorm(Profile{f}, pq);
  REQUIRE(v.is_finite());

  // Oracle: || f ||^q = T^{q d} \int_{W0}^inf e^{-q d (w - W0)} w^{-q alpha} dw
  // with d = 1/1.5 - 1/2 = 1/6, W0 = p alpha = 2, by composite Simpson.
  double qd = 2.0 * (1.0 / 1.5 - 0.5);
  double W0 = 2.0;
  double upper = W0 + 60.0 / qd;
  double integral = simpson(
      [&](double w) { return std::exp(-qd * (w - W0)) * std::pow(w, -2.0); }, W0, upper, 200000);
  double oracle = std::pow(integral, 0.5);  // T = 1, so the prefactor drops
  REQUIRE_THAT(v.value(), WithinRel(oracle, 1e-7));

  // The weak norm has the closed form T^d W0^{-alpha}.
  auto w = quasinorm(Profile{f}, ExponentPair::make_inf(1.5));
  REQUIRE_THAT(w.value(), WithinRel(std::pow(1.0, 1.0 / 6.0) * 0.5, 1e-12));
}

TEST_CASE("log-power profile against a larger primary exponent diverges") {
  auto f = LogPowerProfile::standard(2.0, 1.0, 1.0);
  auto v = quasinorm(Profile{f}, ExponentPair::make(3.0, 2.0));
  REQUIRE_FALSE(v.is_finite());
  REQUIRE(v.reason() == DivergenceReason::HeadDivergence);
}

TEST_CASE("indicator norms") {
  SECTION("worked values") {
    Profile e = IndicatorProfile{1.0, 1.0};
    REQUIRE_THAT(quasinorm(e, ExponentPair::make(2.0, 1.0)).value(), WithinRel(2.0, 1e-14));
    REQUIRE_THAT(quasinorm(e, ExponentPair::make(2.0, 2.0)).value(), WithinRel(1.0, 1e-14));
    REQUIRE_THAT(quasinorm(e, ExponentPair::make_inf(2.0)).value(), WithinRel(1.0, 1e-14));
  }
  SECTION("formula grid") {
    for (double p : {1.5, 2.0, 3.0}) {
      for (double h : {0.5, 2.0}) {
        for (double T : {0.25, 1.0, 3.0}) {
          Profile e = IndicatorProfile{h, T};
          for (double q : {1.0, 2.0, 4.0}) {
            double expected = h * std::pow(p / q, 1.0 / q) * std::pow(T, 1.0 / p);
            REQUIRE_THAT(quasinorm(e, ExponentPair::make(p, q)).value(), WithinRel(expected, 1e-14));
          }
          REQUIRE_THAT(quasinorm(e, ExponentPair::make_inf(p)).value(),
                       WithinRel(h * std::pow(T, 1.0 / p), 1e-14));
        }
      }
    }
  }
}

TEST_CASE("power profile norms") {
  SECTION("critical exponent beta = 1/p") {
    // c t^{-1/2} with p = 2: the weak norm is c, every finite q diverges
    // at the head.
    Profile f = PowerProfile{std::sqrt(2.0), 0.5, 1.0};
    auto weak = quasinorm(f, ExponentPair::make_inf(2.0));
    REQUIRE_THAT(weak.value(), WithinRel(std::sqrt(2.0), 1e-14));

    auto v = quasinorm(f, ExponentPair::make(2.0, 5.0));
    REQUIRE_FALSE(v.is_finite());
    REQUIRE(v.reason() == DivergenceReason::HeadDivergence);
  }
  SECTION("subcritical closed form vs quadrature") {
    Profile f = PowerProfile{1.0, 0.25, 2.0};
    auto pq = ExponentPair::make(2.0, 3.0);
    double e = 0.5 - 0.25;
    double expected = std::pow(2.0, e) * std::pow(3.0 * e, -1.0 / 3.0);
    REQUIRE_THAT(quasinorm(f, pq).value(), WithinRel(expected, 1e-13));
    REQUIRE_THAT(quasinorm_quadrature(f, pq), WithinRel(expected, 1e-9));
  }
  SECTION("p = q recovers the Lebesgue norm") {
    // || t^{-1/4} ||_{L^3(0,2)}^3 = int_0^2 t^{-3/4} dt = 4 * 2^{1/4}.
    Profile f = PowerProfile{1.0, 0.25, 2.0};
    double expected = std::pow(4.0 * std::pow(2.0, 0.25), 1.0 / 3.0);
    REQUIRE_THAT(quasinorm(f, ExponentPair::make(3.0, 3.0)).value(), WithinRel(expected, 1e-13));
  }
}

TEST_CASE("step profile norms") {
  auto g = worked_step();

  SECTION("p = q = 2 is the L2 norm") {
    // int f^2 = 4 * 1 + 1 * 2 = 6.
    REQUIRE_THAT(quasinorm(Profile{g}, ExponentPair::make(2.0, 2.0)).value(),
                 WithinRel(std::sqrt(6.0), 1e-14));
  }
  SECTION("weak norm picks the best breakpoint") {
    // max(2 * 1, 1 * sqrt(3)) = 2.
    REQUIRE_THAT(quasinorm(Profile{g}, ExponentPair::make_inf(2.0)).value(), WithinRel(2.0, 1e-14));
  }
  SECTION("closed form vs quadrature on random steps") {
    std::mt19937_64 rng(314159);
    for (int trial = 0; trial < 20; ++trial) {
      Profile f = random_step(rng);
      for (auto pq : {ExponentPair::make(1.5, 1.0), ExponentPair::make(2.0, 2.0),
                      ExponentPair::make(2.5, 4.0), ExponentPair::make(3.0, 1.7)}) {
        REQUIRE_THAT(quasinorm_quadrature(f, pq), WithinRel(quasinorm(f, pq).value(), 1e-9));
      }
    }
  }
  SECTION("homogeneity and dilation") {
    std::mt19937_64 rng(2718);
    auto f = random_step(rng);
    double c = 2.7;
    std::vector<double> scaled_vals, dilated_bp;
    for (double v : f.values()) scaled_vals.push_back(c * v);
    for (double t : f.breakpoints()) dilated_bp.push_back(c * t);
    auto scaled = StepProfile::make(f.breakpoints(), scaled_vals);
    auto dilated = StepProfile::make(dilated_bp, f.values());
    for (auto pq : {ExponentPair::make(2.0, 1.5), ExponentPair::make_inf(3.0)}) {
      double base = quasinorm(Profile{f}, pq).value();
      REQUIRE_THAT(quasinorm(Profile{scaled}, pq).value(), WithinRel(c * base, 1e-13));
      REQUIRE_THAT(quasinorm(Profile{dilated}, pq).value(),
                   WithinRel(std::pow(c, 1.0 / pq.p) * base, 1e-13));
    }
  }
}

TEST_CASE("truncated head integrals") {
  SECTION("critical power profile grows logarithmically") {
    // (t^{1/2} * c t^{-1/2})^2 / t = c^2 / t, so I(eps) = c^2 ln(T/eps).
    Profile f = PowerProfile{1.3, 0.5, 1.0};
    auto pq = ExponentPair::make(2.0, 2.0);
    for (double eps : {1e-6, 1e-9}) {
      double expected = 1.3 * 1.3 * std::log(1.0 / eps);
      REQUIRE_THAT(truncated_head_integral(f, pq, eps), WithinRel(expected, 1e-9));
    }
  }
  SECTION("divergent log-power case grows without bound") {
    // q alpha = 1/2 < 1: I(eps) = 2 (sqrt(ln(A/eps)) - sqrt(W0)).
    auto g = LogPowerProfile::standard(2.0, 0.5, std::numbers::pi);
    Profile f = g;
    auto pq = ExponentPair::make(2.0, 1.0);
    double prev = 0.0;
    for (double eps : {1e-6, 1e-9, 1e-12}) {
      double I = truncated_head_integral(f, pq, eps);
      double expected = 2.0 * (std::sqrt(std::log(g.log_offset / eps)) - std::sqrt(1.0));
      REQUIRE_THAT(I, WithinRel(expected, 1e-8));
      REQUIRE(I > 1.1 * prev);
      prev = I;
    }
  }
  SECTION("convergent case approaches the full integral at a 1/ln(1/eps) rate") {
    auto g = LogPowerProfile::standard(2.0, 1.0, std::numbers::pi);
    auto pq = ExponentPair::make(2.0, 2.0);
    // Exactly I(eps) = 1/W0 - 1/ln(A/eps); the full integral is 1/W0 = 1/2.
    for (double eps : {1e-6, 1e-13}) {
      double expected = 0.5 - 1.0 / std::log(g.log_offset / eps);
      REQUIRE_THAT(truncated_head_integral(Profile{g}, pq, eps), WithinRel(expected, 1e-8));
    }
  }
}

TEST_CASE("maximal-average norms of indicators and powers") {
  SECTION("indicator closed forms") {
    Profile e = IndicatorProfile{1.0, 1.0};
    REQUIRE_THAT(starstar_norm(e, ExponentPair::make(2.0, 2.0)).value(),
                 WithinRel(std::sqrt(2.0), 1e-12));
    REQUIRE_THAT(starstar_norm(e, ExponentPair::make_inf(2.0)).value(), WithinRel(1.0, 1e-12));
  }
  SECTION("critical power attains the sharp comparison constant") {
    // f = t^{-1/2} on (0,1), p = 2: t^{1/2} f**(t) == 2 on the support, so
    // the weak maximal norm equals p' times the weak quasinorm exactly.
    Profile f = PowerProfile{1.0, 0.5, 1.0};
    auto weak = ExponentPair::make_inf(2.0);
    REQUIRE_THAT(starstar_norm(f, weak).value(), WithinRel(2.0, 1e-12));
    REQUIRE_THAT(starstar_norm(f, weak).value(),
                 WithinRel(conjugate_exponent(2.0) * quasinorm(f, weak).value(), 1e-12));
  }
  SECTION("subcritical power closed form") {
    // c_b = c/(1-b); ||f||^q = c_b^q T^{qe} (1/(qe) + p'/q).
    Profile f = PowerProfile{1.0, 0.25, 2.0};
    auto pq = ExponentPair::make(2.0, 3.0);
    double cb = 1.0 / 0.75, e = 0.25;
    double total = std::pow(cb, 3.0) * std::pow(2.0, 3.0 * e) * (1.0 / (3.0 * e) + 2.0 / 3.0);
    REQUIRE_THAT(starstar_norm(f, pq).value(), WithinRel(std::pow(total, 1.0 / 3.0), 1e-10));
  }
}

TEST_CASE("maximal-average norm of a step profile vs direct integration") {
  std::mt19937_64 rng(5551);
  for (int trial = 0; trial < 5; ++trial) {
    auto g = random_step(rng);
    // Cumulative integral of the step profile, exact by arithmetic.
    auto F = [&](double t) {
      double s = 0.0;
      for (std::size_t i = 0; i < g.steps(); ++i) {
        double lo = g.breakpoints()[i], hi = g.breakpoints()[i + 1];
        if (t <= lo) break;
        s += g.values()[i] * (std::min(t, hi) - lo);
      }
      return s;
    };
    double T = g.support_end(), S = F(T);
    for (auto pq : {ExponentPair::make(2.0, 2.0), ExponentPair::make(1.5, 3.0)}) {
      double p = pq.p, q = pq.q_value(), pp = conjugate_exponent(p);
      double t_lo = T * 1e-8;
      REQUIRE(t_lo < g.breakpoints()[1]);
      // Head: f** is the top value below the first breakpoint.
      double head = std::pow(g.values()[0], q) * (p / q) * std::pow(t_lo, q / p);
      // Middle: Simpson in u = ln t of t^{q/p} f**(t)^q.
      double mid = simpson(
          [&](double u) {
            double t = std::exp(u);
            return std::pow(t, q / p) * std::pow(F(t) / t, q);
          },
          std::log(t_lo), std::log(T), 20000);
      // Tail beyond the support: exact power integral.
      double tail = (pp / q) * std::pow(S * std::pow(T, 1.0 / p - 1.0), q);
      double oracle = std::pow(head + mid + tail, 1.0 / q);
      REQUIRE_THAT(starstar_norm(Profile{g}, pq).value(), WithinRel(oracle, 1e-6));
    }
  }
}

TEST_CASE("maximal-average norm of the matched log-power profile") {
  auto g = LogPowerProfile::standard(2.0, 1.0, 1.0);
  auto pq = ExponentPair::make(2.0, 2.0);
  double ss = starstar_norm(Profile{g}, pq).value();

  // Sandwich first: the quasinorm is 1/sqrt 2, the constant is p' = 2.
  double qn = quasinorm(Profile{g}, pq).value();
  REQUIRE(ss >= qn);
  REQUIRE(ss <= 2.0 * qn * (1.0 + 1e-9));

  // Independent evaluation: t^{1/2} f**(t) = Psi(ln(A/t)) with
  // Psi(w) = int_0^inf e^{-s/2} (w+s)^{-1} ds, and
  // ||f||^2 = int_{W0}^inf Psi^2 dw + Psi(W0)^2  (tail beyond the support,
  // with p'/q = 1).  Outer integral by Simpson in y = ln(w/W0).
  auto Psi = [&](double w) {
    return simpson([&](double s) { return std::exp(-0.5 * s) * std::pow(w + s, -1.0) * 1.0; }, 0.0,
                   100.0, 3000);
  };
  double W0 = 2.0, Wmax = 1e7;
  double Y = std::log(Wmax / W0);
  double outer = simpson(
      [&](double y) {
        double w = W0 * std::exp(y);
        return Psi(w) * Psi(w) * w;  // dw = w dy
      },
      0.0, Y, 4000);
  double remainder = 4.0 / Wmax;  // int_Wmax^inf ~ gamma^{-2} w^{-2} dw
  double p0 = Psi(W0);
  double oracle = std::sqrt(outer + remainder + p0 * p0);
  REQUIRE_THAT(ss, WithinRel(oracle, 1e-5));

  // The weak maximal norm is Psi(W0) itself.
  REQUIRE_THAT(starstar_norm(Profile{g}, ExponentPair::make_inf(2.0)).value(),
               WithinRel(p0, 1e-6));
}

TEST_CASE("quasinorm and maximal-average norm sandwich") {
  std::mt19937_64 rng(808);
  std::vector<Profile> profiles;
  profiles.emplace_back(worked_step());
  for (int i = 0; i < 5; ++i) profiles.emplace_back(random_step(rng));
  profiles.emplace_back(IndicatorProfile{1.5, 2.0});
  profiles.emplace_back(PowerProfile{1.0, 0.25, 2.0});
  profiles.emplace_back(LogPowerProfile::standard(2.0, 1.0, 1.0));

  std::vector<ExponentPair> grid{ExponentPair::make(2.0, 2.0),  ExponentPair::make(2.0, 1.5),
                                 ExponentPair::make(3.0, 2.5),  ExponentPair::make(1.5, 4.0),
                                 ExponentPair::make_inf(2.0),   ExponentPair::make_inf(3.0)};

  for (const auto& f : profiles) {
    for (const auto& pq : grid) {
      auto qn = quasinorm(f, pq);
      auto ss = starstar_norm(f, pq);
      REQUIRE(qn.is_finite() == ss.is_finite());
      if (!qn.is_finite()) continue;
      double pp = conjugate_exponent(pq.p);
      REQUIRE(ss.value() >= qn.value() * (1.0 - 1e-9));
      REQUIRE(ss.value() <= pp * qn.value() * (1.0 + 1e-9));
    }
  }
}

TEST_CASE("numeric profile quasinorm matches closed forms") {
  SECTION("power evaluator") {
    PowerProfile f{1.0, 0.25, 2.0};
    auto pq = ExponentPair::make(2.0, 3.0);
    auto v = numeric_profile_quasinorm([&](double t) { return f(t); }, 2.0, pq);
    REQUIRE_THAT(v.value(), WithinRel(quasinorm(Profile{f}, pq).value(), 1e-8));

    auto w = numeric_profile_quasinorm([&](double t) { return f(t); }, 2.0, ExponentPair::make_inf(2.0));
    REQUIRE_THAT(w.value(), WithinRel(quasinorm(Profile{f}, ExponentPair::make_inf(2.0)).value(), 1e-9));
  }
  SECTION("step evaluator") {
    auto g = worked_step();
    auto pq = ExponentPair::make(2.0, 2.0);
    auto v = numeric_profile_quasinorm([&](double t) { return g(t); }, g.support_end(), pq);
    REQUIRE_THAT(v.value(), WithinRel(std::sqrt(6.0), 5e-5));
    // The sup rule lands within a grid cell of the jump; only coarse accuracy
    // is available for discontinuous evaluators.
    auto w = numeric_profile_quasinorm([&](double t) { return g(t); }, g.support_end(),
                                       ExponentPair::make_inf(2.0));
    REQUIRE_THAT(w.value(), WithinRel(2.0, 2e-2));
  }
}

TEST_CASE("restriction norms decay with the measure") {
  SECTION("critical power restrictions keep a constant norm") {
    Profile f = PowerProfile{1.3, 0.5, 4.0};
    auto pq = ExponentPair::make_inf(2.0);
    auto norms = tail_norm(f, pq, {4.0, 2.0, 1.0, 0.125});
    for (const auto& v : norms) REQUIRE_THAT(v.value(), WithinRel(1.3, 1e-14));
  }
  SECTION("indicator restrictions shrink like m^{1/p}") {
    Profile f = IndicatorProfile{2.0, 3.0};
    auto pq = ExponentPair::make(3.0, 2.0);
    auto norms = tail_norm(f, pq, {3.0, 1.0, 0.25, 5.0});
    std::vector<double> ms{3.0, 1.0, 0.25, 3.0};  // restriction caps at the support
    for (std::size_t i = 0; i < ms.size(); ++i) {
      double expected = 2.0 * std::pow(1.5, 0.5) * std::pow(ms[i], 1.0 / 3.0);
      REQUIRE_THAT(norms[i].value(), WithinRel(expected, 1e-14));
    }
  }
}

TEST_CASE("norm values and profiles serialize") {
  auto fin = NormValue::finite(1.25);
  REQUIRE(norm_value_from_json(to_json(fin)).value() == 1.25);
  auto inf = NormValue::infinite(DivergenceReason::LogExponentTest);
  auto back = norm_value_from_json(to_json(inf));
  REQUIRE_FALSE(back.is_finite());
  REQUIRE(back.reason() == DivergenceReason::LogExponentTest);

  std::vector<Profile> profiles{
      Profile{worked_step()},
      Profile{PowerProfile{1.5, 0.5, 2.0}},
      Profile{LogPowerProfile::standard(2.0, 1.0, 3.0)},
      Profile{IndicatorProfile{2.0, 1.0}},
  };
  for (const auto& f : profiles) {
    auto rt = profile_from_json(to_json(f));
    REQUIRE(to_json(rt) == to_json(f));
  }
}

TEST_CASE("norm value guards") {
  REQUIRE_THROWS(NormValue::finite(-1.0));
  REQUIRE_THROWS(NormValue::finite(std::numeric_limits<double>::infinity()));
  REQUIRE_THROWS(NormValue::infinite(DivergenceReason::HeadDivergence).value());
  REQUIRE_THROWS(NormValue::finite(2.0).reason());
  REQUIRE(NormValue::finite(0.25).str() == "0.25");
}

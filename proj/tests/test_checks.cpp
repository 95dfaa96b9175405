#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

#include "lorentz/checks.hpp"

using namespace lorentz;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

SampledField single_cell(double weight, double magnitude) {
  SampledField f;
  f.cells.push_back({weight, magnitude});
  f.validate();
  return f;
}

}  // namespace

TEST_CASE("report params serialize in key order") {
  CheckReport rep;
  rep.check_id = "demo";
  detail::set_param(rep, "p", 2.0);
  detail::set_param(rep, "item", "chi");
  detail::set_param(rep, "q", Exponent::infinity());
  REQUIRE(rep.params_string() == "item=chi;p=2;q=inf");
}

TEST_CASE("report ordering is by id, then params") {
  CheckReport a, b, c;
  a.check_id = "alpha";
  b.check_id = "beta";
  c.check_id = "alpha";
  detail::set_param(a, "p", 2.0);
  detail::set_param(c, "p", 3.0);
  REQUIRE(report_order(a, b));
  REQUIRE(report_order(a, c));
  REQUIRE_FALSE(report_order(c, a));
}

// ---------------------------------------------------------------------------
// Product integrals and the chain inequality.

TEST_CASE("rearranged product integral on a worked pair of steps") {
  const StepProfile a = StepProfile::make({0.0, 1.0, 3.0}, {2.0, 1.0});
  const StepProfile b = StepProfile::make({0.0, 2.0, 3.0}, {3.0, 1.0});
  // pieces: (0,1): 2*3, (1,2): 1*3, (2,3): 1*1
  REQUIRE(rearranged_product_integral(a, b) == 10.0);
  REQUIRE(rearranged_product_integral(a, StepProfile{}) == 0.0);
}

TEST_CASE("pointwise product integral requires a shared partition") {
  const SampledField f{{{1.0, 2.0}, {2.0, 1.0}}};
  const SampledField g{{{1.0, 1.0}}};
  const SampledField h{{{1.0, 1.0}, {1.5, 1.0}}};
  REQUIRE(pointwise_product_integral(f, f) == 6.0);
  REQUIRE_THROWS_AS(pointwise_product_integral(f, g), std::invalid_argument);
  REQUIRE_THROWS_AS(pointwise_product_integral(f, h), std::invalid_argument);
}

TEST_CASE("product chain: indicator against itself is an equality") {
  const SampledField chi = single_cell(1.0, 1.0);
  const CheckReport rep = check_holder(chi, chi, ExponentPair::make(2.0, 2.0));
  REQUIRE(rep.verdict == Verdict::Pass);
  // integral, rearranged integral, and norm product all equal 1
  REQUIRE(rep.lhs == 1.0);
  REQUIRE(rep.rhs == 1.0);
  REQUIRE(rep.margin == 0.0);
}

TEST_CASE("product chain: disjoint supports make the left gap large") {
  const SampledField f{{{1.0, 1.0}, {1.0, 0.0}}};
  const SampledField g{{{1.0, 0.0}, {1.0, 1.0}}};
  const CheckReport rep = check_holder(f, g, ExponentPair::make(2.0, 2.0));
  REQUIRE(rep.verdict == Verdict::Pass);
  REQUIRE(rep.lhs == 0.0);  // the functions never overlap
  // both rearrangements are the unit indicator, so the middle term is 1
  REQUIRE(rep.note == "middle=1");
  REQUIRE(rep.rhs == 1.0);
}

TEST_CASE("product chain holds on random fields at several exponent pairs") {
  const std::vector<ExponentPair> grid = {ExponentPair::make(2.0, 1.0),
                                          ExponentPair::make(2.0, 2.0),
                                          ExponentPair::make_inf(2.0)};
  for (const auto& pq : grid) {
    for (std::uint64_t t = 0; t < 100; ++t) {
      const auto [f, g] = detail::random_field_pair(17, t, 40);
      const CheckReport rep = check_holder(f, g, pq);
      INFO("pq=" << pq.str() << " trial=" << t);
      REQUIRE(rep.verdict == Verdict::Pass);
    }
  }
}

TEST_CASE("rearranging never decreases the product integral") {
  for (std::uint64_t t = 0; t < 200; ++t) {
    const auto [f, g] = detail::random_field_pair(99, t, 30);
    const double pointwise = pointwise_product_integral(f, g);
    const double sorted = rearranged_product_integral(rearrange(f), rearrange(g));
    REQUIRE(pointwise <= sorted * (1.0 + 1e-12) + 1e-15);
  }
}

TEST_CASE("general product splitting validates the exponent arithmetic") {
  const SampledField f = single_cell(1.0, 1.0);
  // 1/2 != 1/3 + 1/4
  REQUIRE_THROWS_AS(check_general_holder(f, ExponentPair::make(2.0, 2.0),
                                         ExponentPair::make(3.0, 3.0), ExponentPair::make(4.0, 4.0),
                                         1.0),
                    std::invalid_argument);
  // second exponents off: 1 != 1/4 + 1/4
  REQUIRE_THROWS_AS(check_general_holder(f, ExponentPair::make(2.0, 1.0),
                                         ExponentPair::make(4.0, 4.0), ExponentPair::make(4.0, 4.0),
                                         1.0),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(check_general_holder(f, ExponentPair::make(2.0, 2.0),
                                         ExponentPair::make(4.0, 4.0), ExponentPair::make(4.0, 4.0),
                                         0.0),
                    std::invalid_argument);
}

TEST_CASE("general product splitting: indicator case is exact") {
  const SampledField chi = single_cell(1.0, 1.0);
  const CheckReport rep =
      check_general_holder(chi, ExponentPair::make(2.0, 2.0), ExponentPair::make(4.0, 4.0),
                           ExponentPair::make(4.0, 4.0), 1.0);
  REQUIRE(rep.verdict == Verdict::Pass);
  // ||chi||_{2,2} = 1 and ||chi||_{4,4}^2 = 1
  REQUIRE_THAT(rep.lhs, WithinAbs(1.0, 1e-15));
  REQUIRE_THAT(rep.rhs, WithinAbs(1.0, 1e-15));
}

TEST_CASE("general product splitting with an infinite second exponent") {
  for (std::uint64_t t = 0; t < 50; ++t) {
    const auto [f, g] = detail::random_field_pair(31, t, 40);
    (void)g;
    const CheckReport rep =
        check_general_holder(f, ExponentPair::make(2.0, 4.0), ExponentPair::make_inf(4.0),
                             ExponentPair::make(4.0, 4.0), f.total_weight());
    REQUIRE(rep.verdict == Verdict::Pass);
  }
}

// ---------------------------------------------------------------------------
// Lebesgue norms and the eps-loss embedding.

TEST_CASE("lebesgue norm at s = 1 by family") {
  const StepProfile step = StepProfile::make({0.0, 1.0, 3.0}, {2.0, 1.0});
  REQUIRE(lebesgue_norm(step, 1.0).value() == 4.0);
  REQUIRE(lebesgue_norm(IndicatorProfile(3.0, 0.5), 1.0).value() == 1.5);
  // integral of 2 t^{-1/2} over (0,1) is 4
  REQUIRE_THAT(lebesgue_norm(PowerProfile(2.0, 0.5, 1.0), 1.0).value(), WithinRel(4.0, 1e-13));
  const NormValue diverged = lebesgue_norm(PowerProfile(1.0, 1.0, 1.0), 1.0);
  REQUIRE_FALSE(diverged.is_finite());
  REQUIRE(diverged.reason() == DivergenceReason::HeadDivergence);
  // integral of t^{-1/2} (2 + ln(1/t))^{-1} over (0,1) = e E_1(1)
  REQUIRE_THAT(lebesgue_norm(LogPowerProfile::standard(2.0, 1.0, 1.0), 1.0).value(),
               WithinRel(0.596347362323194, 1e-9));
  REQUIRE_THAT(lebesgue_norm(LogPowerProfile::standard(3.0, 0.5, 2.0), 1.0).value(),
               WithinRel(1.473425714225516, 1e-9));
  REQUIRE_THROWS_AS(lebesgue_norm(step, 0.5), std::invalid_argument);
}

TEST_CASE("lebesgue norm above 1 matches the diagonal quasinorm") {
  // ||t^{-1/4}||_{L^2(0,1)} = sqrt(2) both ways
  const PowerProfile f(1.0, 0.25, 1.0);
  REQUIRE_THAT(lebesgue_norm(f, 2.0).value(), WithinRel(std::sqrt(2.0), 1e-12));
  REQUIRE_THAT(quasinorm(Profile{f}, ExponentPair::make(2.0, 2.0)).value(),
               WithinRel(std::sqrt(2.0), 1e-12));
}

TEST_CASE("embedding constant: closed values and preconditions") {
  REQUIRE(embedding_constant(2.0, Exponent::infinity(), 1.0) == 2.0);
  REQUIRE_THAT(embedding_constant(2.0, Exponent::finite(4.0), 0.5),
               WithinRel(std::pow(2.5, 5.0 / 12.0), 1e-14));
  REQUIRE_THROWS_AS(embedding_constant(2.0, Exponent::infinity(), 0.0), std::invalid_argument);
  REQUIRE_THROWS_AS(embedding_constant(2.0, Exponent::infinity(), 1.5), std::invalid_argument);
  REQUIRE_THROWS_AS(embedding_constant(2.0, Exponent::finite(2.0), 0.5), std::invalid_argument);
  REQUIRE_THROWS_AS(embedding_constant(1.0, Exponent::infinity(), 0.5), std::invalid_argument);
  // the edge eps = p - 1 is allowed
  REQUIRE(std::isfinite(embedding_constant(3.0, Exponent::infinity(), 2.0)));
}

TEST_CASE("eps-loss embedding: the critical power saturates both sides") {
  const GalleryItem ur = make_power_singularity(1.0, 1, 2.0);
  const CheckReport rep = check_embedding_eps(*ur.value_rearrangement.exact, 2.0,
                                              Exponent::infinity(), 1.0, ur.measure());
  REQUIRE(rep.verdict == Verdict::Pass);
  // |x|^{-1/2} on (-1,1): L^1 norm 4, and 2 * 2^{1/2} * ||f||_{2,inf} = 4
  REQUIRE_THAT(rep.lhs, WithinRel(4.0, 1e-12));
  REQUIRE_THAT(rep.rhs, WithinRel(4.0, 1e-12));
}

TEST_CASE("eps-loss embedding on the log-power slices") {
  const GalleryItem slice = make_u_slice(1.0, 1.0, 2.0);
  const Profile& prof = *slice.value_rearrangement.exact;
  REQUIRE(check_embedding_eps(prof, 2.0, Exponent::infinity(), 1.0, 1.0).verdict == Verdict::Pass);
  REQUIRE(check_embedding_eps(prof, 2.0, Exponent::finite(4.0), 0.5, 1.0).verdict == Verdict::Pass);
}

TEST_CASE("eps-loss embedding skips when the lorentz norm diverges") {
  // exponent 0.6 > 1/2 sends the weak norm to infinity at the origin
  const CheckReport rep = check_embedding_eps(PowerProfile(1.0, 0.6, 1.0), 2.0,
                                              Exponent::infinity(), 1.0, 1.0);
  REQUIRE(rep.verdict == Verdict::Skip);
}

// ---------------------------------------------------------------------------
// The norm sandwich.

TEST_CASE("norm sandwich on the unit indicator, by hand") {
  const CheckReport rep = check_equivalence(IndicatorProfile(1.0, 1.0), ExponentPair::make(2.0, 2.0));
  REQUIRE(rep.verdict == Verdict::Pass);
  // maximal-function norm sqrt(2) sits between 1 and p' = 2
  REQUIRE_THAT(rep.lhs, WithinRel(std::sqrt(2.0), 1e-12));
  REQUIRE_THAT(rep.rhs, WithinRel(2.0, 1e-12));
  REQUIRE(rep.note.find("quasinorm=1") != std::string::npos);
}

TEST_CASE("norm sandwich: critical power attains the upper constant") {
  const CheckReport rep =
      check_equivalence(PowerProfile(1.0, 0.5, 1.0), ExponentPair::make_inf(2.0));
  REQUIRE(rep.verdict == Verdict::Pass);
  // f** doubles f* here, so the upper gap closes
  REQUIRE_THAT(rep.lhs, WithinRel(2.0, 1e-9));
  REQUIRE_THAT(rep.rhs, WithinRel(2.0, 1e-9));
}

TEST_CASE("norm sandwich handles zero and infinite inputs") {
  REQUIRE(check_equivalence(StepProfile{}, ExponentPair::make(2.0, 2.0)).verdict == Verdict::Pass);
  REQUIRE(check_equivalence(PowerProfile(1.0, 0.6, 1.0), ExponentPair::make(2.0, 2.0)).verdict ==
          Verdict::Skip);
}

// ---------------------------------------------------------------------------
// Strict-inclusion witnesses.

TEST_CASE("witness bundle validates its exponents") {
  REQUIRE_THROWS_AS(witness_strict_inclusion(1.0, 1.0, Exponent::infinity()),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(witness_strict_inclusion(2.0, 0.5, Exponent::infinity()),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(witness_strict_inclusion(2.0, 2.0, Exponent::finite(2.0)),
                    std::invalid_argument);
}

TEST_CASE("witness bundle at (2, 1, 2): closed form 1/sqrt(2)") {
  const WitnessBundle b = witness_strict_inclusion(2.0, 1.0, Exponent::finite(2.0));
  REQUIRE(b.alpha == 1.0);
  REQUIRE_THAT(b.closed_form_q2, WithinRel(0.707106781186548, 1e-12));
  REQUIRE(b.function_at_q2.is_finite());
  REQUIRE_FALSE(b.function_at_q1.is_finite());
  REQUIRE(b.function_at_q1.reason() == DivergenceReason::LogExponentTest);
  REQUIRE_FALSE(b.gradient_at_q1.is_finite());
  for (const auto& rep : witness_reports(b, false)) {
    INFO(rep.check_id);
    REQUIRE(rep.verdict == Verdict::Pass);
  }
}

TEST_CASE("witness bundle at (2, 2, inf): alpha = 1/2, weak norm 1") {
  const WitnessBundle b = witness_strict_inclusion(2.0, 2.0, Exponent::infinity());
  REQUIRE(b.alpha == 0.5);
  REQUIRE_THAT(b.closed_form_q2, WithinRel(1.0, 1e-12));
  REQUIRE_THAT(b.function_at_q2.value(), WithinRel(1.0, 1e-10));
  for (const auto& rep : witness_reports(b, false)) REQUIRE(rep.verdict == Verdict::Pass);
}

TEST_CASE("witness bundle at (3, 1, inf): weak norm 1/3") {
  const WitnessBundle b = witness_strict_inclusion(3.0, 1.0, Exponent::infinity());
  REQUIRE_THAT(b.closed_form_q2, WithinRel(1.0 / 3.0, 1e-12));
  for (const auto& rep : witness_reports(b, false)) REQUIRE(rep.verdict == Verdict::Pass);
}

TEST_CASE("witness growth gate passes where the edge offset is large") {
  const WitnessBundle b = witness_strict_inclusion(4.0, 1.0, Exponent::infinity());
  const auto reports = witness_reports(b, true);
  REQUIRE(reports.size() == 3);
  REQUIRE(reports[2].check_id == "inclusion_growth");
  REQUIRE(reports[2].verdict == Verdict::Pass);
  REQUIRE(reports[2].rhs > 1.1);
}

// ---------------------------------------------------------------------------
// Restriction norms on shrinking balls.

TEST_CASE("restriction norms: critical power is exactly scale invariant") {
  const CheckReport rep =
      check_ac_norm(make_power_singularity(1.0, 1, 2.0), ExponentPair::make_inf(2.0), 8);
  REQUIRE(rep.verdict == Verdict::Pass);
  REQUIRE(rep.note.find("constant") != std::string::npos);
}

TEST_CASE("restriction norms: negative power decays below the gate") {
  const CheckReport rep = check_ac_norm(make_up(3, 2.0), ExponentPair::make(2.0, 2.0), 12);
  REQUIRE(rep.verdict == Verdict::Pass);
  REQUIRE(rep.note == "decreasing");
}

TEST_CASE("restriction norms: indicator decays like the measure root") {
  MeasureProfile chi;
  chi.fn = [](double) { return 1.0; };
  chi.support = 1.0;
  chi.exact = Profile{IndicatorProfile(1.0, 1.0)};
  const CheckReport rep =
      check_ac_norm_profile("indicator", chi, 1.0, 1, ExponentPair::make(2.0, 2.0), 22);
  REQUIRE(rep.verdict == Verdict::Pass);
  REQUIRE(rep.note == "decreasing");
}

TEST_CASE("restriction norms reject bad inputs") {
  REQUIRE_THROWS_AS(check_ac_norm(make_up(3, 2.0), ExponentPair::make(2.0, 2.0), 1),
                    std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Weak distance floor.

TEST_CASE("weak distance to bounded functions stays above the floor") {
  const std::vector<double> radii = {1.0, 0.5};
  const auto zero = [](double) { return 0.0; };
  const auto ten = [](double) { return 10.0; };
  const auto quadratic = [](double s) { return 1.0 + s * s; };
  for (int n : {1, 2}) {
    const double p = 2.0;
    for (const auto& [fn, label] :
         std::vector<std::pair<std::function<double(double)>, const char*>>{
             {zero, "zero"}, {ten, "const10"}, {quadratic, "1+s^2"}}) {
      const CheckReport rep = check_distance_bound(fn, label, n, p, radii, 20000);
      INFO("n=" << n << " fn=" << label);
      REQUIRE(rep.verdict == Verdict::Pass);
    }
  }
  REQUIRE_THROWS_AS(check_distance_bound(zero, "zero", 1, 2.0, {}), std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Difference-quotient estimators.

TEST_CASE("seminorm estimator recovers the exact constant for a pure power") {
  const PairSampler sampler{BallDomain{1, 1.0}, PairStrategy::RadialGeometric, 3, true};
  const auto u = [](double s) { return std::pow(s, 0.5); };
  const double est = estimate_holder_seminorm(u, sampler, 0.5, 2000);
  // pinned-origin pairs hit |u(s) - u(0)| / s^{1/2} = 1 exactly
  REQUIRE_THAT(est, WithinAbs(1.0, 1e-12));
}

TEST_CASE("seminorm estimator: constants give zero, bad inputs throw") {
  const PairSampler sampler{BallDomain{2, 1.0}, PairStrategy::Uniform, 5, false};
  const auto c = [](double) { return 4.0; };
  REQUIRE(estimate_holder_seminorm(c, sampler, 0.5, 100) == 0.0);
  REQUIRE_THROWS_AS(estimate_holder_seminorm(c, sampler, 1.5, 100), std::invalid_argument);
  REQUIRE_THROWS_AS(estimate_holder_seminorm(c, sampler, 0.5, 0), std::domain_error);
  const auto nan = [](double) { return std::numeric_limits<double>::quiet_NaN(); };
  REQUIRE_THROWS_AS(estimate_holder_seminorm(nan, sampler, 0.5, 50), std::domain_error);
}

TEST_CASE("seminorm estimates grow with the sample count") {
  const PairSampler sampler{BallDomain{2, 1.0}, PairStrategy::RadialGeometric, 7, true};
  const GalleryItem v = make_v(1.0, 1.0, 2, 4.0);
  double prev = 0.0;
  for (std::size_t count : {250, 500, 1000, 2000}) {
    const double est = estimate_holder_seminorm(v.radial_value, sampler, 0.5, count);
    REQUIRE(est >= prev);
    prev = est;
  }
}

// ---------------------------------------------------------------------------
// Interval-case pointwise bound.

TEST_CASE("interval constant: closed values") {
  REQUIRE(morrey_constant_1d(ExponentPair::make(2.0, 1.0)) == 1.0);
  REQUIRE(morrey_constant_1d(ExponentPair::make(2.0, 2.0)) == 1.0);
  REQUIRE_THAT(morrey_constant_1d(ExponentPair::make_inf(3.0)), WithinRel(1.5, 1e-15));
  REQUIRE_THAT(morrey_constant_1d(ExponentPair::make(2.0, 4.0)),
               WithinRel(std::pow(1.5, 0.75), 1e-14));
}

TEST_CASE("subinterval derivative norms agree across evaluation paths") {
  // constant derivative: every path must give h (p/q)^{1/q} len^{1/p}
  const detail::RadialDerivative d{Profile{IndicatorProfile(2.0, 1.0)}, 1.0};
  const ExponentPair pq = ExponentPair::make(2.0, 1.0);
  const double expect = 2.0 * 2.0 * std::sqrt(0.5);
  REQUIRE_THAT(detail::interval_derivative_norm(d, 0.0, 0.5, pq, {}), WithinRel(expect, 1e-12));
  REQUIRE_THAT(detail::interval_derivative_norm(d, 0.2, 0.7, pq, {}), WithinRel(expect, 1e-6));
  REQUIRE_THAT(detail::interval_derivative_norm(d, -0.25, 0.25, pq, {}), WithinRel(expect, 1e-6));
  REQUIRE_THAT(detail::interval_derivative_norm(d, -0.5, -0.0, pq, {}),
               WithinRel(2.0 * 2.0 * std::sqrt(0.5), 1e-12));
}

TEST_CASE("interval bound holds for the antiderivative family") {
  const GalleryItem item = make_v(1.0, 1.0, 1, 3.0);
  const CheckReport rep = check_morrey_1d(item, ExponentPair::make(2.0, 2.0), 11, 300);
  REQUIRE(rep.verdict == Verdict::Pass);
  REQUIRE(rep.samples == 300);
}

TEST_CASE("interval bound holds for the shifted power family at q = inf") {
  const GalleryItem item = make_shifted_up(1.0, 1, 3.0);
  const CheckReport rep = check_morrey_1d(item, ExponentPair::make_inf(3.0), 11, 300);
  REQUIRE(rep.verdict == Verdict::Pass);
}

TEST_CASE("interval bound skips when the whole-interval norm diverges") {
  // matched log-power at q = 1: the exponent test fails, nothing to compare
  const GalleryItem item = make_v(1.0, 1.0, 1, 3.0);
  const CheckReport rep = check_morrey_1d(item, ExponentPair::make(3.0, 1.0), 11, 10);
  REQUIRE(rep.verdict == Verdict::Skip);
  REQUIRE(rep.note.find("LOG_EXPONENT_TEST") != std::string::npos);
}

// ---------------------------------------------------------------------------
// Ball-case seminorm checks.

TEST_CASE("ball bound: stable estimate above the critical index") {
  const CheckReport rep = check_morrey_nd(make_up(2, 4.0), ExponentPair::make_inf(4.0), 1, 4000);
  REQUIRE(rep.check_id == "morrey_ball");
  REQUIRE(rep.verdict == Verdict::Pass);
  // seminorm exactly 1 against weak gradient norm (1/2) pi^{1/4}
  const double ratio = std::stod(rep.params.at("ratio"));
  REQUIRE_THAT(ratio, WithinRel(1.0 / (0.5 * std::pow(M_PI, 0.25)), 1e-9));
}

TEST_CASE("ball bound: blow-up detected at and below the critical index") {
  const CheckReport log_case = check_morrey_nd(make_up(2, 2.0), ExponentPair::make(2.0, 2.0), 1, 10);
  REQUIRE(log_case.check_id == "morrey_blowup");
  REQUIRE(log_case.verdict == Verdict::Pass);
  // |ln s - ln(s/2)| is constant, so the probe ratio is exactly 10^2
  REQUIRE_THAT(log_case.rhs / (log_case.lhs / 10.0), WithinRel(100.0, 1e-9));

  const CheckReport v_case =
      check_morrey_nd(make_v(1.0, 1.0, 2, 2.0), ExponentPair::make(2.0, 2.0), 1, 10);
  REQUIRE(v_case.check_id == "morrey_blowup");
  REQUIRE(v_case.verdict == Verdict::Pass);
}

// ---------------------------------------------------------------------------
// Scale-calibrated ratios.

TEST_CASE("norm ratio check: antiderivative items are scale invariant") {
  const std::vector<GalleryItem> items = {make_v(1.0, 1.0, 2, 3.0), make_v(1.0, 0.5, 2, 3.0)};
  const CheckReport rep = check_poincare_ratio(items, ExponentPair::make_inf(3.0));
  REQUIRE(rep.verdict == Verdict::Pass);
  REQUIRE(rep.samples == 2);
  REQUIRE(rep.lhs <= 1e-3);  // worst relative drift under r -> 2r
  REQUIRE(std::stod(rep.params.at("max_rho")) > 0.0);
}

TEST_CASE("norm ratio check: infinite gradients are skipped by name") {
  // shifted power family gradient is a matched pure power: infinite at q = 3
  const std::vector<GalleryItem> items = {make_v(1.0, 1.0, 2, 3.0), make_shifted_up(1.0, 2, 3.0)};
  const CheckReport rep = check_poincare_ratio(items, ExponentPair::make(3.0, 3.0));
  REQUIRE(rep.samples == 1);
  REQUIRE(rep.note.find("shifted_up") != std::string::npos);
  REQUIRE(rep.verdict == Verdict::Pass);
}

TEST_CASE("norm ratio check: zero field contributes rho = 0") {
  GalleryItem zero;
  zero.id = "null";
  zero.domain = BallDomain{1, 1.0};
  zero.boundary_zero = true;
  zero.value_nonincreasing = true;
  zero.radial_value = [](double) { return 0.0; };
  zero.value_rearrangement = {[](double) { return 0.0; }, 1.0, Profile{StepProfile{}}};
  zero.gradient_rearrangement = {[](double) { return 0.0; }, 1.0, Profile{StepProfile{}}};
  const CheckReport rep = check_poincare_ratio({zero}, ExponentPair::make(2.0, 2.0));
  REQUIRE(rep.verdict == Verdict::Pass);
  REQUIRE(rep.params.at("max_rho") == "0");
}

TEST_CASE("norm ratio check rejects bad input sets") {
  REQUIRE_THROWS_AS(check_poincare_ratio({}, ExponentPair::make(2.0, 2.0)),
                    std::invalid_argument);
  // the radial lift does not vanish on the boundary
  REQUIRE_THROWS_AS(check_poincare_ratio({make_u_radial(1.0, 1.0, 2, 3.0)},
                                         ExponentPair::make(2.0, 2.0)),
                    std::invalid_argument);
}

// ---------------------------------------------------------------------------
// Suites.

TEST_CASE("suite registry dispatches and rejects unknown names") {
  REQUIRE_THROWS_AS(run_suite("nonsense"), std::invalid_argument);
  const auto reports = run_suite("equivalence");
  REQUIRE(!reports.empty());
  for (const auto& rep : reports) {
    INFO(rep.check_id << " " << rep.params_string());
    REQUIRE(rep.verdict != Verdict::Fail);
  }
  REQUIRE(std::is_sorted(reports.begin(), reports.end(), report_order));
}

TEST_CASE("product suite passes end to end") {
  for (const auto& rep : run_suite("holder")) {
    INFO(rep.check_id << " " << rep.params_string() << " note=" << rep.note);
    REQUIRE(rep.verdict == Verdict::Pass);
  }
}

TEST_CASE("inclusion suite passes end to end") {
  const auto reports = run_suite("inclusion");
  // 16 grid bundles emit three reports, the 3 boundary examples two
  REQUIRE(reports.size() == 16 * 3 + 3 * 2);
  for (const auto& rep : reports) {
    INFO(rep.check_id << " " << rep.params_string() << " note=" << rep.note);
    REQUIRE(rep.verdict == Verdict::Pass);
  }
}

TEST_CASE("restriction suite passes end to end") {
  for (const auto& rep : run_suite("ac")) {
    INFO(rep.check_id << " " << rep.params_string());
    REQUIRE(rep.verdict == Verdict::Pass);
  }
}

TEST_CASE("suites are deterministic replays of the seed") {
  const SuiteConfig cfg{123, {}};
  const auto a = run_suite("morreynd", cfg);
  const auto b = run_suite("morreynd", cfg);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    REQUIRE(a[i].check_id == b[i].check_id);
    REQUIRE(a[i].params_string() == b[i].params_string());
    REQUIRE(a[i].lhs == b[i].lhs);
    REQUIRE(a[i].rhs == b[i].rhs);
    REQUIRE(a[i].margin == b[i].margin);
    REQUIRE(a[i].verdict == b[i].verdict);
  }
  for (const auto& rep : a) REQUIRE(rep.verdict == Verdict::Pass);
}

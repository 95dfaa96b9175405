#pragma once

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <vector>

#include "lorentz/gallery.hpp"

namespace lorentz {

/// A pair of points for difference-quotient checks, reduced to what radial
/// functions can see: two radii and the cosine of the angle between the rays.
/// In one dimension the cosine is +-1 (same side or opposite sides of 0).
struct RadialPair {
  double s1;
  double s2;
  double cos_angle;

  [[nodiscard]] double distance() const {
    const double d2 = s1 * s1 + s2 * s2 - 2.0 * s1 * s2 * cos_angle;
    return d2 > 0.0 ? std::sqrt(d2) : 0.0;
  }

  /// Signed 1-d coordinates (x, y) when the pair lives on the line.
  [[nodiscard]] double x() const { return s1; }
  [[nodiscard]] double y() const { return cos_angle >= 0.0 ? s2 : -s2; }

  [[nodiscard]] bool straddles_origin() const { return cos_angle < 0.0 && s1 > 0.0 && s2 > 0.0; }
};

enum class PairStrategy { Uniform, RadialGeometric, Endpoint };

namespace detail {

/// splitmix64: every pair index gets an independent, reproducible stream, so
/// the first N pairs of a longer run equal the N pairs of a shorter one.
struct IndexedRng {
  std::uint64_t state;

  explicit IndexedRng(std::uint64_t seed, std::uint64_t index)
      : state(seed ^ (0x9e3779b97f4a7c15ULL * (index + 1))) {}

  std::uint64_t next_u64() {
    state += 0x9e3779b97f4a7c15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  double unit() { return double(next_u64() >> 11) * 0x1.0p-53; }

  std::uint64_t below(std::uint64_t n) { return next_u64() % n; }
};

}  // namespace detail

/// Deterministic pair generator over a gallery domain.
///   UNIFORM          both radii uniform in (0, r)
///   RADIAL_GEOMETRIC radii r * 2^{-j}, j = 0..40, clustered at the origin
///   ENDPOINT         one point pinned to the origin or the outer boundary
/// Pairs are a pure function of (seed, index): prefixes are stable when the
/// count grows.  `include_origin` admits pairs with s2 = 0; leave it off for
/// evaluators that are singular there.
struct PairSampler {
  Domain domain{Interval1D{0.0, 1.0}};
  PairStrategy strategy = PairStrategy::Uniform;
  std::uint64_t seed = 0;
  bool include_origin = false;

  [[nodiscard]] RadialPair pair_at(std::uint64_t index) const {
    detail::IndexedRng rng(seed, index);
    const double r = domain_radius(domain);
    const int n = domain_dim(domain);
    const bool interval = std::holds_alternative<Interval1D>(domain);

    auto draw_cos = [&]() -> double {
      if (interval || n == 1) return rng.next_u64() & 1 ? 1.0 : -1.0;
      return 2.0 * rng.unit() - 1.0;
    };

    switch (strategy) {
      case PairStrategy::Uniform: {
        double s1 = r * rng.unit();
        double s2 = r * rng.unit();
        return {s1, s2, draw_cos()};
      }
      case PairStrategy::RadialGeometric: {
        const auto j1 = rng.below(41);
        const double s1 = r * std::pow(2.0, -double(j1));
        double s2;
        if (include_origin && index % 7 == 6) {
          s2 = 0.0;
        } else {
          const auto gap = 1 + rng.below(12);
          s2 = s1 * std::pow(2.0, -double(gap));
        }
        // Every third pair leaves the shared ray; the extremal pairs for the
        // power and log families are the same-ray ones.
        const double c = (index % 3 == 0) ? draw_cos() : 1.0;
        return {s1, s2, c};
      }
      case PairStrategy::Endpoint: {
        const auto j = rng.below(41);
        const double s = r * std::pow(2.0, -double(j));
        if (include_origin && index % 2 == 0) return {s, 0.0, 1.0};
        return {s, r, rng.next_u64() & 1 ? 1.0 : -1.0};
      }
    }
    throw std::logic_error("PairSampler: unreachable strategy");
  }

  [[nodiscard]] std::vector<RadialPair> generate(std::size_t count) const {
    std::vector<RadialPair> out;
    out.reserve(count);
    for (std::size_t i = 0; i < count; ++i) out.push_back(pair_at(i));
    return out;
  }
};

/// Signed 1-d pair (x, y), x < y, drawn over the full interval (-r, r) of a
/// one-dimensional ball, or (0, r) for an interval domain.
struct LinePair {
  double x;
  double y;
};

inline LinePair line_pair_at(const PairSampler& s, std::uint64_t index) {
  detail::IndexedRng rng(s.seed, index ^ 0x5851f42d4c957f2dULL);
  const double r = domain_radius(s.domain);
  const bool full_line = std::holds_alternative<BallDomain>(s.domain);
  const double lo = full_line ? -r : 0.0;
  if (s.strategy == PairStrategy::RadialGeometric && index % 3 != 0) {
    // Intervals clustered toward the origin, where the singular families are
    // tightest: right endpoint a = r*2^{-j}, width a fraction of a.
    const int j = static_cast<int>(rng.below(40));
    const double a = r * std::ldexp(1.0, -j);
    const double width = a * (0.25 + 0.5 * rng.unit());
    if (full_line && index % 2 == 0) return {-0.5 * width, a};
    return {a - width, a};
  }
  if (s.strategy == PairStrategy::Endpoint && index % 2 == 0) {
    const int j = static_cast<int>(index / 2 % 40);
    return {0.0, r * std::ldexp(1.0, -j)};  // one end pinned at the origin
  }
  double x = lo + (r - lo) * rng.unit();
  double y = lo + (r - lo) * rng.unit();
  if (x > y) std::swap(x, y);
  if (x == y) y = x + (r - x) * 0.5;  // degenerate draw, astronomically rare
  return {x, y};
}

inline std::vector<LinePair> line_pairs(const PairSampler& s, std::size_t count) {
  std::vector<LinePair> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) out.push_back(line_pair_at(s, i));
  return out;
}

}  // namespace lorentz

#pragma once

#include <cmath>
#include <stdexcept>
#include <vector>

namespace lorentz {

/// One cell of a finite measure partition: a set of positive measure `weight`
/// on which the field magnitude is constant.
struct Cell {
  double weight;
  double magnitude;
};

/// A simple function on a finite measure space, recorded cell by cell.  Cell
/// order carries no geometric meaning; two fields are comparable cellwise only
/// when they share a partition (same weights in the same order).
struct SampledField {
  std::vector<Cell> cells;

  void validate() const {
    for (const auto& c : cells) {
      if (!(c.weight > 0.0) || !std::isfinite(c.weight))
        throw std::invalid_argument("SampledField: cell weights must be positive and finite");
      if (!(c.magnitude >= 0.0) || !std::isfinite(c.magnitude))
        throw std::invalid_argument("SampledField: cell magnitudes must be nonnegative and finite");
    }
  }

  [[nodiscard]] double total_weight() const {
    double s = 0.0;
    for (const auto& c : cells) s += c.weight;
    return s;
  }
};

/// Pointwise Euclidean magnitude of the vector field (f_1, ..., f_m): cellwise
/// sqrt(sum of squares).  All components must share the cell partition.
inline SampledField vector_magnitude(const std::vector<SampledField>& components) {
  if (components.empty()) throw std::invalid_argument("vector_magnitude: need at least one component");
  const std::size_t m = components.front().cells.size();
  for (const auto& f : components) {
    if (f.cells.size() != m) throw std::invalid_argument("vector_magnitude: components must share the partition");
    for (std::size_t i = 0; i < m; ++i) {
      if (f.cells[i].weight != components.front().cells[i].weight)
        throw std::invalid_argument("vector_magnitude: components must share the partition");
    }
  }
  SampledField out;
  out.cells.reserve(m);
  for (std::size_t i = 0; i < m; ++i) {
    double ss = 0.0;
    for (const auto& f : components) ss += f.cells[i].magnitude * f.cells[i].magnitude;
    out.cells.push_back({components.front().cells[i].weight, std::sqrt(ss)});
  }
  return out;
}

}  // namespace lorentz

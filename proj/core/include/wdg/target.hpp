#pragma once

#include <cstddef>
#include <vector>

#include "wdg/rational.hpp"
#include "wdg/wdg.hpp"

namespace wdg {

struct TargetPoint {
  Assignment input;
  int value = 0;  // 0 or 1
};

/// Partial function f: S -> {0,1} on a graph of `dimension` vertices, with
/// the tolerance ε of the approximation constraint.
class PartialFunctionSpec {
 public:
  /// Validates: dimension >= 1, every input has dimension-1 entries (BadIndex),
  /// targets in {0,1} and ε >= 0 (InvalidArgument). Repeated inputs are kept
  /// as given so contradictory targets surface as infeasibility downstream.
  PartialFunctionSpec(std::size_t dimension, std::vector<TargetPoint> points, Rational epsilon);

  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] const std::vector<TargetPoint>& points() const { return points_; }
  [[nodiscard]] const Rational& epsilon() const { return epsilon_; }

 private:
  std::size_t dimension_;
  std::vector<TargetPoint> points_;
  Rational epsilon_;
};

}  // namespace wdg

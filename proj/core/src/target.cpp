#include "wdg/target.hpp"

#include <utility>

#include "wdg/error.hpp"

namespace wdg {

PartialFunctionSpec::PartialFunctionSpec(std::size_t dimension, std::vector<TargetPoint> points,
                                         Rational epsilon)
    : dimension_(dimension), points_(std::move(points)), epsilon_(std::move(epsilon)) {
  if (dimension_ == 0) throw Error(ErrorCode::BadIndex, "dimension must be at least 1");
  if (epsilon_.sign() < 0) throw Error(ErrorCode::InvalidArgument, "epsilon must be non-negative");
  for (const TargetPoint& p : points_) {
    if (p.input.size() + 1 != dimension_) {
      throw Error(ErrorCode::BadIndex, "target input '" + p.input.to_string() + "' has wrong length for dimension " +
                                           std::to_string(dimension_));
    }
    if (p.value != 0 && p.value != 1) throw Error(ErrorCode::InvalidArgument, "target values must be 0 or 1");
  }
}

}  // namespace wdg

#include "wdg/measurement.hpp"

#include <algorithm>
#include <numeric>

#include "wdg/error.hpp"

namespace wdg::measure {

namespace {

void require_shapes(const CsopMatrices& p) {
  for (const RationalMatrix& m : p.projectors) {
    if (m.rows() != p.total_dim || m.cols() != p.total_dim) {
      throw Error(ErrorCode::ShapeMismatch, "projector is " + std::to_string(m.rows()) + "x" +
                                                std::to_string(m.cols()) + ", expected " +
                                                std::to_string(p.total_dim) + "x" + std::to_string(p.total_dim));
    }
  }
}

std::size_t outcome_order(std::size_t d, std::size_t n) { return std::min(d, n - d); }

}  // namespace

bool validate_csop(const CsopMatrices& p) {
  require_shapes(p);
  if (p.projectors.empty()) return p.total_dim == 0;
  RationalMatrix sum(p.total_dim, p.total_dim);
  for (std::size_t i = 0; i < p.projectors.size(); ++i) {
    const RationalMatrix& a = p.projectors[i];
    if (!a.is_symmetric() || a * a != a) return false;
    for (std::size_t j = i + 1; j < p.projectors.size(); ++j) {
      if (!(a * p.projectors[j]).is_zero()) return false;
    }
    sum += a;
  }
  return sum == RationalMatrix::identity(p.total_dim);
}

CsopProfile profile_of(const CsopMatrices& p) {
  require_shapes(p);
  CsopProfile profile{p.total_dim, {}};
  profile.projector_dims.reserve(p.projectors.size());
  for (const RationalMatrix& m : p.projectors) profile.projector_dims.push_back(rank(m));
  return profile;
}

std::size_t csop_order(const CsopProfile& p) {
  const std::size_t sum = std::accumulate(p.projector_dims.begin(), p.projector_dims.end(), std::size_t{0});
  if (sum != p.total_dim) {
    throw Error(ErrorCode::IncompleteCsop, "projector dims sum to " + std::to_string(sum) + ", expected " +
                                               std::to_string(p.total_dim));
  }
  std::size_t order = 0;
  for (std::size_t d : p.projector_dims) order = std::max(order, outcome_order(d, p.total_dim));
  return order;
}

OrderTrend order_trend(const std::vector<CsopProfile>& profiles, double factor) {
  if (profiles.empty()) throw Error(ErrorCode::InvalidArgument, "order_trend needs at least one profile");
  if (!(factor > 1.0)) throw Error(ErrorCode::InvalidArgument, "factor must exceed 1");
  OrderTrend trend;
  for (const CsopProfile& p : profiles) {
    trend.orders.push_back(csop_order(p));
    std::vector<std::size_t> per_outcome;
    per_outcome.reserve(p.projector_dims.size());
    for (std::size_t d : p.projector_dims) per_outcome.push_back(outcome_order(d, p.total_dim));
    trend.outcome_orders.push_back(std::move(per_outcome));
  }
  trend.threshold = static_cast<double>(std::max<std::size_t>(trend.orders.front(), 1)) * factor;
  trend.bounded = std::all_of(trend.orders.begin(), trend.orders.end(),
                              [&](std::size_t order) { return static_cast<double>(order) < trend.threshold; });
  trend.note = trend.bounded ? "orders stay bounded so far; finite data cannot confirm an asymptotic bound"
                             : "orders grow past the threshold (unbounded so far)";
  return trend;
}

}  // namespace wdg::measure

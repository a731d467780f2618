#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "wdg/rational_matrix.hpp"

namespace wdg::measure {

/// Dimensions of the projectors of a measurement on an n-dimensional space.
struct CsopProfile {
  std::size_t total_dim = 0;
  std::vector<std::size_t> projector_dims;
};

/// Explicit projectors (real rational entries). Small scale only.
struct CsopMatrices {
  std::size_t total_dim = 0;
  std::vector<RationalMatrix> projectors;
};

/// True iff every projector is idempotent and symmetric, distinct projectors
/// multiply to zero, and the projectors sum to the identity.
/// Throws ShapeMismatch unless every matrix is total_dim x total_dim.
bool validate_csop(const CsopMatrices& p);

/// Ranks of the projectors, computed exactly. Throws ShapeMismatch.
CsopProfile profile_of(const CsopMatrices& p);

/// max_i min(d_i, n - d_i). Throws IncompleteCsop if the dims do not sum to n.
std::size_t csop_order(const CsopProfile& p);

struct OrderTrend {
  /// orders[i][z]: min(d_z, n_i - d_z) for outcome z of profile i.
  std::vector<std::vector<std::size_t>> outcome_orders;
  /// csop_order of each profile.
  std::vector<std::size_t> orders;
  /// Bound the orders were compared against: max(first order, 1) * factor.
  double threshold = 0.0;
  bool bounded = true;
  std::string label = "advisory";
  std::string note;
};

/// Descriptive report over profiles of growing instances. `bounded` holds
/// when every order stays below max(orders[0], 1) * factor. A finite sequence
/// can never settle an asymptotic claim, so the result is only advisory.
/// Throws InvalidArgument on an empty sequence or factor <= 1, IncompleteCsop
/// on an invalid profile.
OrderTrend order_trend(const std::vector<CsopProfile>& profiles, double factor = 2.0);

}  // namespace wdg::measure

#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "wdg/rational.hpp"
#include "wdg/target.hpp"
#include "wdg/wdg.hpp"

namespace wdg::hypercube {

/// Largest variable count enumerated exhaustively by default.
inline constexpr std::size_t kDefaultLimit = 26;

struct ScanOptions {
  std::size_t limit = kDefaultLimit;
  /// Worker count; enumeration is split into disjoint prefix blocks. The
  /// result does not depend on this value.
  unsigned threads = 1;
};

struct Extremum {
  Rational value;
  Assignment witness;  // on ties, the lexicographically largest under -1 < +1

  friend bool operator==(const Extremum&, const Extremum&) = default;
};

/// max/min/delta are present only when the cube was enumerated. The bounds
/// 2ε <= δ(D) <= 2·L(g_D) are always filled in.
struct ExtremaReport {
  std::optional<Extremum> max;
  std::optional<Extremum> min;
  std::optional<Rational> delta;
  Rational lower_bound;
  Rational upper_bound;

  [[nodiscard]] bool exact() const { return delta.has_value(); }

  friend bool operator==(const ExtremaReport&, const ExtremaReport&) = default;
};

ExtremaReport extrema(const Wdg& wdg, const ScanOptions& options = {});

struct SupportClasses {
  std::vector<Assignment> s_plus;   // f(x) = 1, sorted
  std::vector<Assignment> s_minus;  // f(x) = 0, sorted
};

/// Inputs (from `domain`, or the whole cube) where f = g_D + K is exactly 1
/// or exactly 0. Throws LimitExceeded when no domain is given and the cube is
/// larger than options.limit variables; BadIndex on mismatched domain points.
SupportClasses support_classes(const Wdg& wdg, const std::optional<std::vector<Assignment>>& domain = std::nullopt,
                               const ScanOptions& options = {});

/// True iff 0 <= f(x) <= 1 on the whole cube. Throws LimitExceeded.
bool range_check(const Wdg& wdg, const ScanOptions& options = {});

/// ε = max over vertices of the summed |w| of incident edges.
Rational vertex_weight_bound(const Wdg& wdg);

/// Weights divided by δ(D), shift set to -min g so that f spans exactly
/// [0, 1]. Throws DegenerateGraph when δ(D) = 0, LimitExceeded when the cube
/// cannot be enumerated.
Wdg normalize_range(const Wdg& wdg, const ScanOptions& options = {});

/// max over the target points of |g_D(x) - f(x) + c|; 0 for an empty target.
Rational approximation_error(const Wdg& wdg, const PartialFunctionSpec& target, const Rational& c);

/// (L(g_D) + |K|)², the classical-cost scale of the bounded-error
/// approximation bound. Diagnostic only.
Rational advantage_indicator(const Wdg& wdg);

/// Visits every point of the cube with its value g_D(x), using the same
/// incremental enumeration as extrema(). Order is unspecified.
void for_each_value(const Wdg& wdg, const std::function<void(const Assignment&, const Rational&)>& visit,
                    std::size_t limit = kDefaultLimit);

}  // namespace wdg::hypercube

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "wdg/rational.hpp"
#include "wdg/target.hpp"
#include "wdg/wdg.hpp"

namespace wdg::opt {

/// Candidate edge set; each pair is a vertex pair (u, v), u != v.
using EdgeTemplate = std::vector<std::pair<std::size_t, std::size_t>>;

/// All pairs u < v over `dimension` vertices, ancilla included.
EdgeTemplate complete_template(std::size_t dimension);

struct SearchOptions {
  /// Annealing iterations per chain.
  std::size_t budget = 20000;
  std::uint64_t seed = 1;
  /// Independent annealing chains. Chain 0 starts from the uniform heuristic.
  std::size_t chains = 4;
  /// Chains run concurrently on this many threads; results do not depend on it.
  unsigned threads = 1;
  /// Largest variable count the solver accepts (every iteration scans the cube).
  std::size_t variable_limit = 16;
  /// Denominator cap of the continued-fraction snap.
  std::uint64_t snap_denominator_cap = std::uint64_t{1} << 16;
  /// Exact oracle evaluations spent on the sign-frozen polish of the best snap.
  std::size_t polish_evaluations = 256;
};

struct OptimizationResult {
  /// Found weights; the shift is the constant C of the approximation constraint.
  Wdg wdg;
  Rational c;
  /// Σ|w| for maximize_l1, δ(D) for minimize_delta.
  Rational objective;
  bool feasible = false;
  std::size_t iterations = 0;
  /// Set once the hypercube oracle has re-checked both constraints exactly.
  bool verified = false;
};

/// max Σ|w(e)|  s.t.  |g_D(x) − f(x) + C| <= ε on S  and  δ(D) = 1.
/// Throws Infeasible when no candidate passes exact verification within the
/// budget (budget exhaustion, not a proof of infeasibility); LimitExceeded
/// when the cube is too large; EmptyTemplate for an empty template.
OptimizationResult maximize_l1(const PartialFunctionSpec& spec, const std::optional<EdgeTemplate>& edge_template,
                               const SearchOptions& options = {});

/// min δ(D)  s.t.  Σ|w(e)| = 1  and  |g_D(x)/δ(D) − f(x) + C| <= ε on S.
OptimizationResult minimize_delta(const PartialFunctionSpec& spec, const std::optional<EdgeTemplate>& edge_template,
                                  const SearchOptions& options = {});

/// Equal positive weights summing to 1 on every template edge.
/// Throws EmptyTemplate, BadIndex, SelfLoop, DuplicateEdge.
Wdg uniform_heuristic(const EdgeTemplate& edge_template, std::size_t dimension);

/// Rescales a minimize_delta result by 1/δ, giving a δ = 1 solution of the
/// maximization problem with objective 1/δ. Throws DegenerateGraph on δ = 0.
OptimizationResult min_to_max(const OptimizationResult& min_result);

/// Best rational approximation with denominator <= cap (continued fractions).
Rational snap_rational(double value, std::uint64_t denominator_cap);

}  // namespace wdg::opt

#pragma once

#include <cstddef>
#include <string_view>
#include <vector>

#include "wdg/rational.hpp"
#include "wdg/wdg.hpp"

namespace wdg::compose {

enum class Mode { And, Or };

std::string_view to_string(Mode mode);
/// "and" / "or" (case-insensitive); throws ParseError.
Mode parse_mode(std::string_view text);

/// Default cap on the entry count (dimension²) of a composed matrix.
inline constexpr std::size_t kDefaultSizeBudget = std::size_t{1} << 20;

struct ComposedResult {
  Wdg wdg;  // composite ancilla at index 0, row-major (i, j) -> i·m + j
  Mode mode = Mode::And;
  Rational predicted_l1;

  [[nodiscard]] const Rational& shift() const { return wdg.shift(); }
};

/// Closed-form L1 norm of the composition from the factors' norms and shifts.
///   AND: (L_a + |K_a|)(L_b + |K_b|) - |K_a K_b|
///   OR:  |1 - K_b| L_a + |1 - K_a| L_b + L_a L_b
Rational predicted_l1(Mode mode, const Rational& l1_a, const Rational& k_a, const Rational& l1_b,
                      const Rational& k_b);

/// f''(x⊗x') = f(x)·f'(x') on product inputs, K'' = K·K'.
/// Throws SizeBudgetExceeded when (d1·d2)² exceeds `size_budget`.
ComposedResult compose_and(const Wdg& a, const Wdg& b, std::size_t size_budget = kDefaultSizeBudget);

/// f''(x⊗x') = f + f' - f·f' on product inputs, K'' = K + K' - K·K'.
ComposedResult compose_or(const Wdg& a, const Wdg& b, std::size_t size_budget = kDefaultSizeBudget);

ComposedResult compose(Mode mode, const Wdg& a, const Wdg& b, std::size_t size_budget = kDefaultSizeBudget);

/// Stage 1 is `base` itself; stage i+1 composes stage i with `base`.
/// Throws InvalidArgument for depth 0 and SizeBudgetExceeded before building
/// any stage that would exceed the budget.
std::vector<ComposedResult> iterate_compose(const Wdg& base, std::size_t depth, Mode mode,
                                            std::size_t size_budget = kDefaultSizeBudget);

/// Row-major Kronecker index of a pair of full vertex vectors, ancilla
/// dropped: the Assignment of x⊗x'.
Assignment tensor_assignment(const Assignment& x, const Assignment& y);

}  // namespace wdg::compose

#include "wdg/composition.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "wdg/error.hpp"
#include "wdg/rational_matrix.hpp"

namespace wdg::compose {

namespace {

void check_budget(std::size_t n, std::size_t m, std::size_t size_budget) {
  const std::size_t dim = n * m;
  if (dim != 0 && (dim > size_budget / dim)) {
    throw Error(ErrorCode::SizeBudgetExceeded, "composite dimension " + std::to_string(dim) +
                                                   " exceeds the entry budget of " + std::to_string(size_budget));
  }
}

ComposedResult finish(RationalMatrix m, Rational shift, Mode mode, Rational predicted) {
  // Both constructions cancel the diagonal exactly; AssociatedMatrix rejects
  // anything else.
  AssociatedMatrix assoc(std::move(m));
  return ComposedResult{wdg_of_matrix(assoc, std::move(shift)), mode, std::move(predicted)};
}

}  // namespace

std::string_view to_string(Mode mode) { return mode == Mode::And ? "and" : "or"; }

Mode parse_mode(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "and") return Mode::And;
  if (lower == "or") return Mode::Or;
  throw Error(ErrorCode::ParseError, "composition mode must be 'and' or 'or', got '" + std::string(text) + "'");
}

Rational predicted_l1(Mode mode, const Rational& l1_a, const Rational& k_a, const Rational& l1_b,
                      const Rational& k_b) {
  if (mode == Mode::And) return (l1_a + abs(k_a)) * (l1_b + abs(k_b)) - abs(k_a * k_b);
  return abs(Rational(1) - k_b) * l1_a + abs(Rational(1) - k_a) * l1_b + l1_a * l1_b;
}

ComposedResult compose_and(const Wdg& a, const Wdg& b, std::size_t size_budget) {
  const std::size_t n = a.dimension();
  const std::size_t m = b.dimension();
  check_budget(n, m, size_budget);
  const Rational& k = a.shift();
  const Rational& kp = b.shift();
  // ½ (M + 2K·I_n/n) ⊗ (M' + 2K'·I_m/m) − 2KK'·(I_n⊗I_m)/(mn)
  const RationalMatrix left = matrix_of(a).entries() + RationalMatrix::identity(n) * (k * 2 / Rational(n));
  const RationalMatrix right = matrix_of(b).entries() + RationalMatrix::identity(m) * (kp * 2 / Rational(m));
  RationalMatrix composite = kronecker(left, right) * Rational(1, 2);
  composite -= RationalMatrix::identity(n * m) * (k * kp * 2 / Rational(n * m));
  return finish(std::move(composite), k * kp, Mode::And, predicted_l1(Mode::And, l1_norm(a), k, l1_norm(b), kp));
}

ComposedResult compose_or(const Wdg& a, const Wdg& b, std::size_t size_budget) {
  const std::size_t n = a.dimension();
  const std::size_t m = b.dimension();
  check_budget(n, m, size_budget);
  const Rational& k = a.shift();
  const Rational& kp = b.shift();
  // K_R = (1−K)·I_n/n,  M_R = K_R − ½M,  composite = 2(K_R⊗K'_R − M_R⊗M'_R)
  const RationalMatrix k_r = RationalMatrix::identity(n) * ((Rational(1) - k) / Rational(n));
  const RationalMatrix kp_r = RationalMatrix::identity(m) * ((Rational(1) - kp) / Rational(m));
  const RationalMatrix m_r = k_r - matrix_of(a).entries() * Rational(1, 2);
  const RationalMatrix mp_r = kp_r - matrix_of(b).entries() * Rational(1, 2);
  RationalMatrix composite = (kronecker(k_r, kp_r) - kronecker(m_r, mp_r)) * Rational(2);
  return finish(std::move(composite), k + kp - k * kp, Mode::Or,
                predicted_l1(Mode::Or, l1_norm(a), k, l1_norm(b), kp));
}

ComposedResult compose(Mode mode, const Wdg& a, const Wdg& b, std::size_t size_budget) {
  return mode == Mode::And ? compose_and(a, b, size_budget) : compose_or(a, b, size_budget);
}

std::vector<ComposedResult> iterate_compose(const Wdg& base, std::size_t depth, Mode mode,
                                            std::size_t size_budget) {
  if (depth == 0) throw Error(ErrorCode::InvalidArgument, "depth must be at least 1");
  std::vector<ComposedResult> stages;
  stages.reserve(depth);
  stages.push_back(ComposedResult{base, mode, l1_norm(base)});
  for (std::size_t i = 1; i < depth; ++i) {
    stages.push_back(compose(mode, stages.back().wdg, base, size_budget));
  }
  return stages;
}

Assignment tensor_assignment(const Assignment& x, const Assignment& y) {
  const std::size_t n = x.size() + 1;
  const std::size_t m = y.size() + 1;
  std::vector<int> values;
  values.reserve(n * m - 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      if (i == 0 && j == 0) continue;
      values.push_back(x.vertex(i) * y.vertex(j));
    }
  }
  return Assignment(std::move(values));
}

}  // namespace wdg::compose

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "wdg/rational.hpp"
#include "wdg/rational_matrix.hpp"

namespace wdg {

/// ±1 values of the non-ancilla vertices v_1..v_{d-1}. The ancilla x_0 is
/// always +1 and is never stored.
class Assignment {
 public:
  Assignment() = default;
  /// Throws BadIndex if any entry is not ±1.
  explicit Assignment(std::vector<int> values);

  static Assignment all_ones(std::size_t length);
  /// '+'/'-' text, one character per variable.
  static Assignment parse(std::string_view text);
  /// Inverse of key(): bit (length-1-i) of `key` set means x_{i+1} = +1.
  static Assignment from_key(std::uint64_t key, std::size_t length);

  [[nodiscard]] std::size_t size() const { return values_.size(); }
  [[nodiscard]] bool empty() const { return values_.empty(); }
  /// Value of variable x_{i+1}.
  [[nodiscard]] int operator[](std::size_t i) const { return values_[i]; }
  /// Value of vertex v, with the ancilla (v = 0) reading as +1.
  [[nodiscard]] int vertex(std::size_t v) const { return v == 0 ? 1 : values_[v - 1]; }
  [[nodiscard]] std::span<const std::int8_t> values() const { return values_; }

  /// Integer encoding whose numeric order equals the lexicographic order of
  /// assignments under -1 < +1 (x_1 is the most significant bit). size() <= 64.
  [[nodiscard]] std::uint64_t key() const;
  [[nodiscard]] std::string to_string() const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  friend std::strong_ordering operator<=>(const Assignment& a, const Assignment& b) {
    return a.values_ <=> b.values_;
  }

 private:
  std::vector<std::int8_t> values_;
};

struct Edge {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational weight;

  friend bool operator==(const Edge&, const Edge&) = default;
};

/// Raw edge as accepted by build_wdg (any orientation, zero weights allowed).
struct EdgeSpec {
  std::size_t u = 0;
  std::size_t v = 0;
  Rational weight;
};

/// Weighted dynamical graph on `dimension` vertices (v_0 is the ancilla)
/// together with the constant K of f = g_D + K.
///
/// Immutable; every instance is canonical: edges sorted by (u, v) with u < v,
/// no duplicates, no zero weights. A singleton edge {v_k} is the edge (0, k).
class Wdg {
 public:
  [[nodiscard]] std::size_t dimension() const { return dimension_; }
  [[nodiscard]] std::size_t variable_count() const { return dimension_ - 1; }
  [[nodiscard]] const std::vector<Edge>& edges() const { return edges_; }
  [[nodiscard]] const Rational& shift() const { return shift_; }

  /// Same graph with a different constant.
  [[nodiscard]] Wdg with_shift(Rational shift) const;
  /// Every weight multiplied by `factor` (shift unchanged).
  [[nodiscard]] Wdg scaled(const Rational& factor) const;

  friend bool operator==(const Wdg&, const Wdg&) = default;

 private:
  friend Wdg build_wdg(std::size_t dimension, std::vector<EdgeSpec> edges, Rational shift);

  std::size_t dimension_ = 1;
  std::vector<Edge> edges_;
  Rational shift_;
};

/// Canonicalizes and validates. Errors: BadIndex (dimension 0 or index out of
/// range), SelfLoop (u == v), DuplicateEdge (same pair twice after ordering).
Wdg build_wdg(std::size_t dimension, std::vector<EdgeSpec> edges, Rational shift = {});

/// Symmetric zero-diagonal matrix M^D. Row/column 0 carries the singleton
/// edges.
class AssociatedMatrix {
 public:
  /// Throws NotSymmetric / NonzeroDiagonal / ShapeMismatch.
  explicit AssociatedMatrix(RationalMatrix entries);

  [[nodiscard]] std::size_t dimension() const { return entries_.rows(); }
  [[nodiscard]] const RationalMatrix& entries() const { return entries_; }
  [[nodiscard]] const Rational& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }

  friend bool operator==(const AssociatedMatrix&, const AssociatedMatrix&) = default;

 private:
  RationalMatrix entries_;
};

AssociatedMatrix matrix_of(const Wdg& wdg);

/// Inverse of matrix_of. Validation errors as for AssociatedMatrix.
Wdg wdg_of_matrix(const RationalMatrix& m, Rational shift = {});
Wdg wdg_of_matrix(const AssociatedMatrix& m, Rational shift = {});

/// g_D(x) = Σ_e s(e,x)·w(e). Throws BadIndex unless x.size() == dimension-1.
Rational evaluate(const Wdg& wdg, const Assignment& x);

/// g_D(x) + K.
Rational f_value(const Wdg& wdg, const Assignment& x);

/// Σ|w(e)|, the Fourier 1-norm of g_D.
Rational l1_norm(const Wdg& wdg);

/// L(g_D + K) = Σ|w(e)| + |K|.
Rational l1_norm_with_shift(const Wdg& wdg);

/// w(M^D) = g_D(1).
Rational total_weight(const Wdg& wdg);

}  // namespace wdg

#include "wdg/wdg.hpp"

#include <algorithm>
#include <utility>

#include "wdg/error.hpp"

namespace wdg {

Assignment::Assignment(std::vector<int> values) {
  values_.reserve(values.size());
  for (int v : values) {
    if (v != 1 && v != -1) throw Error(ErrorCode::BadIndex, "assignment entries must be +1 or -1");
    values_.push_back(static_cast<std::int8_t>(v));
  }
}

Assignment Assignment::all_ones(std::size_t length) { return Assignment(std::vector<int>(length, 1)); }

Assignment Assignment::parse(std::string_view text) {
  std::vector<int> values;
  values.reserve(text.size());
  for (char c : text) {
    if (c == '+') {
      values.push_back(1);
    } else if (c == '-') {
      values.push_back(-1);
    } else {
      throw Error(ErrorCode::ParseError, "assignment must consist of '+' and '-': '" + std::string(text) + "'");
    }
  }
  return Assignment(std::move(values));
}

Assignment Assignment::from_key(std::uint64_t key, std::size_t length) {
  std::vector<int> values(length);
  for (std::size_t i = 0; i < length; ++i) {
    values[i] = ((key >> (length - 1 - i)) & 1U) != 0 ? 1 : -1;
  }
  return Assignment(std::move(values));
}

std::uint64_t Assignment::key() const {
  if (values_.size() > 64) throw Error(ErrorCode::LimitExceeded, "assignment too long for a 64-bit key");
  std::uint64_t k = 0;
  for (std::int8_t v : values_) k = (k << 1U) | (v > 0 ? 1U : 0U);
  return k;
}

std::string Assignment::to_string() const {
  std::string s;
  s.reserve(values_.size());
  for (std::int8_t v : values_) s.push_back(v > 0 ? '+' : '-');
  return s;
}

Wdg Wdg::with_shift(Rational shift) const {
  Wdg copy = *this;
  copy.shift_ = std::move(shift);
  return copy;
}

Wdg Wdg::scaled(const Rational& factor) const {
  if (factor.is_zero()) return build_wdg(dimension_, {}, shift_);
  Wdg copy = *this;
  for (Edge& e : copy.edges_) e.weight *= factor;
  return copy;
}

Wdg build_wdg(std::size_t dimension, std::vector<EdgeSpec> edges, Rational shift) {
  if (dimension == 0) throw Error(ErrorCode::BadIndex, "dimension must be at least 1");
  Wdg wdg;
  wdg.dimension_ = dimension;
  wdg.shift_ = std::move(shift);
  wdg.edges_.reserve(edges.size());
  for (EdgeSpec& e : edges) {
    if (e.u >= dimension || e.v >= dimension) {
      throw Error(ErrorCode::BadIndex, "edge (" + std::to_string(e.u) + "," + std::to_string(e.v) +
                                           ") outside dimension " + std::to_string(dimension));
    }
    if (e.u == e.v) throw Error(ErrorCode::SelfLoop, "self loop at vertex " + std::to_string(e.u));
    if (e.u > e.v) std::swap(e.u, e.v);
    if (e.weight.is_zero()) continue;
    wdg.edges_.push_back(Edge{e.u, e.v, std::move(e.weight)});
  }
  std::sort(wdg.edges_.begin(), wdg.edges_.end(),
            [](const Edge& a, const Edge& b) { return std::pair(a.u, a.v) < std::pair(b.u, b.v); });
  const auto dup = std::adjacent_find(wdg.edges_.begin(), wdg.edges_.end(),
                                      [](const Edge& a, const Edge& b) { return a.u == b.u && a.v == b.v; });
  if (dup != wdg.edges_.end()) {
    throw Error(ErrorCode::DuplicateEdge,
                "edge (" + std::to_string(dup->u) + "," + std::to_string(dup->v) + ") given twice");
  }
  return wdg;
}

AssociatedMatrix::AssociatedMatrix(RationalMatrix entries) : entries_(std::move(entries)) {
  if (!entries_.is_square()) throw Error(ErrorCode::ShapeMismatch, "associated matrix must be square");
  for (std::size_t i = 0; i < entries_.rows(); ++i) {
    if (!entries_(i, i).is_zero()) {
      throw Error(ErrorCode::NonzeroDiagonal, "diagonal entry " + std::to_string(i) + " is nonzero");
    }
  }
  if (!entries_.is_symmetric()) throw Error(ErrorCode::NotSymmetric, "associated matrix must be symmetric");
}

AssociatedMatrix matrix_of(const Wdg& wdg) {
  RationalMatrix m(wdg.dimension(), wdg.dimension());
  for (const Edge& e : wdg.edges()) {
    m(e.u, e.v) = e.weight;
    m(e.v, e.u) = e.weight;
  }
  return AssociatedMatrix(std::move(m));
}

Wdg wdg_of_matrix(const AssociatedMatrix& m, Rational shift) {
  std::vector<EdgeSpec> edges;
  const std::size_t d = m.dimension();
  for (std::size_t i = 0; i < d; ++i) {
    for (std::size_t j = i + 1; j < d; ++j) {
      if (!m(i, j).is_zero()) edges.push_back(EdgeSpec{i, j, m(i, j)});
    }
  }
  return build_wdg(d == 0 ? 1 : d, std::move(edges), std::move(shift));
}

Wdg wdg_of_matrix(const RationalMatrix& m, Rational shift) {
  return wdg_of_matrix(AssociatedMatrix(m), std::move(shift));
}

Rational evaluate(const Wdg& wdg, const Assignment& x) {
  if (x.size() != wdg.variable_count()) {
    throw Error(ErrorCode::BadIndex, "assignment length " + std::to_string(x.size()) + " but graph has " +
                                         std::to_string(wdg.variable_count()) + " variables");
  }
  Rational g;
  for (const Edge& e : wdg.edges()) {
    if (x.vertex(e.u) * x.vertex(e.v) > 0) {
      g += e.weight;
    } else {
      g -= e.weight;
    }
  }
  return g;
}

Rational f_value(const Wdg& wdg, const Assignment& x) { return evaluate(wdg, x) + wdg.shift(); }

Rational l1_norm(const Wdg& wdg) {
  Rational sum;
  for (const Edge& e : wdg.edges()) sum += abs(e.weight);
  return sum;
}

Rational l1_norm_with_shift(const Wdg& wdg) { return l1_norm(wdg) + abs(wdg.shift()); }

Rational total_weight(const Wdg& wdg) {
  Rational sum;
  for (const Edge& e : wdg.edges()) sum += e.weight;
  return sum;
}

}  // namespace wdg

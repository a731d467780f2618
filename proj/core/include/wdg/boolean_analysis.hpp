#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <string>
#include <vector>

#include "wdg/rational.hpp"
#include "wdg/wdg.hpp"

namespace wdg::boolean {

/// Partial function {-1,1}^arity -> {0,1}, given by its table.
class PartialBooleanFunction {
 public:
  explicit PartialBooleanFunction(std::size_t arity) : arity_(arity) {}

  /// Throws BadIndex on wrong input length, InvalidArgument on a value
  /// outside {0,1} or a conflicting redefinition.
  void set(const Assignment& input, int value);

  [[nodiscard]] std::size_t arity() const { return arity_; }
  [[nodiscard]] const std::map<Assignment, int>& table() const { return table_; }

 private:
  std::size_t arity_;
  std::map<Assignment, int> table_;
};

/// F_k(x) = 2^{-k} Π (x_i + 1): 1 iff every bit is +1. Evaluated through the
/// recursion F_i = F_{i-1}·(x_i + 1)/2 with F_1 = (x_1 + 1)/2.
int eval_F(std::span<const int> bits);
int eval_F(const std::vector<int>& bits);

/// Closed form 2^{-k} Π (x_i + 1), kept separate from the recursion so the
/// two can be compared.
Rational eval_F_product(const std::vector<int>& bits);

/// ⊗_i (1, x_i) in row-major order with the empty product (index 0) dropped.
/// Coordinate j-1 holds Π x_i over the bits i set in j, x_1 being the most
/// significant bit.
Assignment tensor_input(const std::vector<int>& bits);

/// Largest k accepted by wdg_for_F (2^k vertices).
inline constexpr std::size_t kMaxFamilyOrder = 20;

/// Member of the F family on 2^k vertices: singleton edges (0, j) of weight
/// 2^{1-k} for every j >= 1 and shift 2^{1-k} - 1, so that on tensor inputs
///   f(tensor_input(bits)) = 2·F_k(bits) - 1.
/// Throws SizeBudgetExceeded for k > kMaxFamilyOrder, InvalidArgument for k = 0.
Wdg wdg_for_F(std::size_t k);

/// F_k restricted to its 2^k tensor inputs, as a partial function of arity 2^k - 1.
PartialBooleanFunction F_table(std::size_t k);

struct CertificateComplexity {
  std::size_t c0 = 0;  // worst minimal certificate over 0-inputs (0 if none)
  std::size_t c1 = 0;  // worst minimal certificate over 1-inputs (0 if none)
  std::size_t c = 0;   // max(c0, c1)

  friend bool operator==(const CertificateComplexity&, const CertificateComplexity&) = default;
};

/// Largest arity certificate_complexity enumerates.
inline constexpr std::size_t kCertificateArityLimit = 20;

/// Brute force over index subsets by increasing size. A subset certifies x
/// when every domain point agreeing with x on it has f = f(x).
/// Throws LimitExceeded above kCertificateArityLimit.
CertificateComplexity certificate_complexity(const PartialBooleanFunction& f);

struct LowerBoundReport {
  std::size_t certificate = 0;
  double scale = 0.0;  // sqrt(certificate)
  std::string note;
};

/// The √C(f) scale of the randomized lower bound R_ε(f) = Ω(√C(f)).
/// Advisory: an asymptotic statement is never checked from finite data.
LowerBoundReport randomized_lower_bound(std::size_t certificate);

}  // namespace wdg::boolean

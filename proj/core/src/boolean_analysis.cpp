#include "wdg/boolean_analysis.hpp"

#include <bit>
#include <cmath>
#include <cstdint>
#include <utility>

#include "wdg/error.hpp"

namespace wdg::boolean {

namespace {

void require_bits(std::span<const int> bits) {
  if (bits.empty()) throw Error(ErrorCode::InvalidArgument, "F needs at least one bit");
  for (int b : bits) {
    if (b != 1 && b != -1) throw Error(ErrorCode::InvalidArgument, "bits must be +1 or -1");
  }
}

// (x + 1) / 2 for x in {-1, 1}.
int indicator(int x) { return (x + 1) / 2; }

int eval_F_recursive(std::span<const int> bits) {
  if (bits.size() == 1) return indicator(bits[0]);
  return eval_F_recursive(bits.first(bits.size() - 1)) * indicator(bits.back());
}

}  // namespace

void PartialBooleanFunction::set(const Assignment& input, int value) {
  if (input.size() != arity_) {
    throw Error(ErrorCode::BadIndex, "input '" + input.to_string() + "' does not have arity " + std::to_string(arity_));
  }
  if (value != 0 && value != 1) throw Error(ErrorCode::InvalidArgument, "boolean values must be 0 or 1");
  const auto [it, inserted] = table_.emplace(input, value);
  if (!inserted && it->second != value) {
    throw Error(ErrorCode::InvalidArgument, "conflicting values for input '" + input.to_string() + "'");
  }
}

int eval_F(std::span<const int> bits) {
  require_bits(bits);
  return eval_F_recursive(bits);
}

int eval_F(const std::vector<int>& bits) { return eval_F(std::span<const int>(bits)); }

Rational eval_F_product(const std::vector<int>& bits) {
  require_bits(bits);
  Rational product(1);
  for (int b : bits) product *= Rational(b + 1, 2);
  return product;
}

Assignment tensor_input(const std::vector<int>& bits) {
  require_bits(bits);
  const std::size_t k = bits.size();
  if (k > kMaxFamilyOrder) throw Error(ErrorCode::SizeBudgetExceeded, "tensor input too large");
  const std::size_t length = std::size_t{1} << k;
  std::vector<int> coords;
  coords.reserve(length - 1);
  for (std::size_t j = 1; j < length; ++j) {
    int product = 1;
    for (std::size_t i = 0; i < k; ++i) {
      if (((j >> (k - 1 - i)) & 1U) != 0) product *= bits[i];
    }
    coords.push_back(product);
  }
  return Assignment(std::move(coords));
}

Wdg wdg_for_F(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (k > kMaxFamilyOrder) {
    throw Error(ErrorCode::SizeBudgetExceeded, "2^" + std::to_string(k) + " vertices exceed the family budget");
  }
  const std::size_t dimension = std::size_t{1} << k;
  const Rational weight(mpz_class(2), mpz_class(dimension));  // 2^{1-k}
  std::vector<EdgeSpec> edges;
  edges.reserve(dimension - 1);
  for (std::size_t j = 1; j < dimension; ++j) edges.push_back(EdgeSpec{0, j, weight});
  // Σ_{S≠∅} prod(S) = 2^k·F - 1, so g = 2F - 2^{1-k}.
  return build_wdg(dimension, std::move(edges), weight - 1);
}

PartialBooleanFunction F_table(std::size_t k) {
  if (k == 0) throw Error(ErrorCode::InvalidArgument, "k must be at least 1");
  if (k > kMaxFamilyOrder) throw Error(ErrorCode::SizeBudgetExceeded, "F table too large");
  PartialBooleanFunction f((std::size_t{1} << k) - 1);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << k); ++mask) {
    std::vector<int> bits(k);
    for (std::size_t i = 0; i < k; ++i) bits[i] = ((mask >> (k - 1 - i)) & 1U) != 0 ? 1 : -1;
    f.set(tensor_input(bits), eval_F(bits));
  }
  return f;
}

CertificateComplexity certificate_complexity(const PartialBooleanFunction& f) {
  const std::size_t n = f.arity();
  if (n > kCertificateArityLimit) {
    throw Error(ErrorCode::LimitExceeded, "arity " + std::to_string(n) + " exceeds the certificate limit of " +
                                              std::to_string(kCertificateArityLimit));
  }
  std::vector<std::pair<std::uint32_t, int>> domain;
  domain.reserve(f.table().size());
  for (const auto& [x, value] : f.table()) domain.emplace_back(static_cast<std::uint32_t>(x.key()), value);

  auto certifies = [&](std::uint32_t x, int value, std::uint32_t mask) {
    for (const auto& [y, other] : domain) {
      if (other != value && ((x ^ y) & mask) == 0) return false;
    }
    return true;
  };
  auto minimal_certificate = [&](std::uint32_t x, int value) -> std::size_t {
    for (std::size_t size = 0; size <= n; ++size) {
      if (size == 0) {
        if (certifies(x, value, 0)) return 0;
        continue;
      }
      // Gosper's hack over all masks with `size` bits.
      std::uint32_t mask = (std::uint32_t{1} << size) - 1;
      const std::uint32_t limit = std::uint32_t{1} << n;
      while (mask < limit) {
        if (certifies(x, value, mask)) return size;
        const std::uint32_t low = mask & (~mask + 1);
        const std::uint32_t ripple = mask + low;
        mask = (((ripple ^ mask) >> 2) / low) | ripple;
      }
    }
    return n;
  };

  CertificateComplexity result;
  for (const auto& [x, value] : domain) {
    const std::size_t size = minimal_certificate(x, value);
    if (value == 0) {
      result.c0 = std::max(result.c0, size);
    } else {
      result.c1 = std::max(result.c1, size);
    }
  }
  result.c = std::max(result.c0, result.c1);
  return result;
}

LowerBoundReport randomized_lower_bound(std::size_t certificate) {
  LowerBoundReport report;
  report.certificate = certificate;
  report.scale = std::sqrt(static_cast<double>(certificate));
  report.note = "advisory: sqrt(C(f)) is the scale of an asymptotic lower bound, not a measured query count";
  return report;
}

}  // namespace wdg::boolean

#pragma once

#include <gmpxx.h>

#include <compare>
#include <concepts>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <type_traits>

namespace wdg {

/// Exact rational number, always in lowest terms with a positive denominator.
///
/// Thin value wrapper over GMP's mpq_class. Every constructor canonicalizes,
/// so two equal values always have identical numerator/denominator pairs and
/// identical string forms.
class Rational {
 public:
  Rational() = default;
  template <std::integral T>
  Rational(T value)  // NOLINT(google-explicit-constructor)
      : value_(widen(value)) {}
  Rational(const mpz_class& numerator, const mpz_class& denominator);
  Rational(long numerator, long denominator);
  explicit Rational(mpq_class value);

  /// Exact binary value of a finite double (no rounding).
  static Rational from_double(double value);

  /// Accepts "p", "p/q" and plain decimals such as "-0.125" or "1e-3".
  /// Throws wdg::Error{ErrorCode::ParseError} on malformed text or q == 0.
  static Rational parse(std::string_view text);

  /// "p" for integers, "p/q" otherwise.
  [[nodiscard]] std::string to_string() const;
  [[nodiscard]] double to_double() const { return value_.get_d(); }

  [[nodiscard]] mpz_class numerator() const { return value_.get_num(); }
  [[nodiscard]] mpz_class denominator() const { return value_.get_den(); }
  [[nodiscard]] const mpq_class& raw() const { return value_; }

  [[nodiscard]] int sign() const { return sgn(value_); }
  [[nodiscard]] bool is_zero() const { return sign() == 0; }
  [[nodiscard]] bool is_integer() const { return value_.get_den() == 1; }

  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws wdg::Error{ErrorCode::DivisionByZero}.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }
  Rational operator-() const;

  friend bool operator==(const Rational& a, const Rational& b) { return cmp(a.value_, b.value_) == 0; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

 private:
  template <std::integral T>
  static auto widen(T value) {
    if constexpr (std::is_signed_v<T>) {
      return static_cast<long>(value);
    } else {
      return static_cast<unsigned long>(value);
    }
  }

  mpq_class value_;
};

Rational abs(const Rational& value);
Rational min(const Rational& a, const Rational& b);
Rational max(const Rational& a, const Rational& b);

/// Least common multiple of the denominators of a range of rationals.
template <typename Range>
mpz_class common_denominator(const Range& values) {
  mpz_class lcm = 1;
  for (const Rational& value : values) {
    mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), value.raw().get_den_mpz_t());
  }
  return lcm;
}

std::ostream& operator<<(std::ostream& os, const Rational& value);

}  // namespace wdg

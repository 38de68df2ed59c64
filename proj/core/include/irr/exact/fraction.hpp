#pragma once

#include <compare>
#include <concepts>
#include <cstdint>
#include <ostream>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace irr {

using Integer = mpz_class;

/// Arbitrary-precision rational, always in lowest terms with a positive
/// denominator. Serializes as "num/denom" ("0/1" for zero).
class Fraction {
 public:
  Fraction() = default;

  template <std::signed_integral T>
  Fraction(T value) : value_(static_cast<long>(value)) {}  // NOLINT(implicit)

  template <std::unsigned_integral T>
  Fraction(T value) : value_(static_cast<unsigned long>(value)) {}  // NOLINT(implicit)

  Fraction(const Integer& value) : value_(value) {}  // NOLINT(implicit)

  /// Throws DomainError when `denominator` is zero.
  Fraction(const Integer& numerator, const Integer& denominator);

  /// Parses "a/b" or "a". Throws DomainError on malformed input.
  static Fraction parse(std::string_view text);

  const Integer& numerator() const { return value_.get_num(); }
  const Integer& denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  Fraction reciprocal() const;
  Fraction abs() const;
  Fraction pow(long exponent) const;

  std::string to_string() const;

  Fraction& operator+=(const Fraction& rhs) { value_ += rhs.value_; return *this; }
  Fraction& operator-=(const Fraction& rhs) { value_ -= rhs.value_; return *this; }
  Fraction& operator*=(const Fraction& rhs) { value_ *= rhs.value_; return *this; }
  /// Throws DomainError on division by zero.
  Fraction& operator/=(const Fraction& rhs);

  friend Fraction operator+(Fraction lhs, const Fraction& rhs) { return lhs += rhs; }
  friend Fraction operator-(Fraction lhs, const Fraction& rhs) { return lhs -= rhs; }
  friend Fraction operator*(Fraction lhs, const Fraction& rhs) { return lhs *= rhs; }
  friend Fraction operator/(Fraction lhs, const Fraction& rhs) { return lhs /= rhs; }
  friend Fraction operator-(const Fraction& f) {
    Fraction out;
    out.value_ = -f.value_;
    return out;
  }

  friend bool operator==(const Fraction& a, const Fraction& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Fraction& a, const Fraction& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  friend std::ostream& operator<<(std::ostream& os, const Fraction& f) { return os << f.to_string(); }

 private:
  mpq_class value_;
};

Integer factorial(unsigned long n);
Integer binomial(long n, unsigned long k);

}  // namespace irr

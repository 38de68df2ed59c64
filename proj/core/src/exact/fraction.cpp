#include "irr/exact/fraction.hpp"

#include <cctype>

#include "irr/errors.hpp"

namespace irr {

Fraction::Fraction(const Integer& numerator, const Integer& denominator) {
  if (denominator == 0) throw DomainError("fraction with zero denominator");
  value_ = mpq_class(numerator, denominator);
  value_.canonicalize();
}

Fraction Fraction::parse(std::string_view text) {
  auto parse_int = [&](std::string_view s) {
    if (s.empty()) throw DomainError("malformed fraction: '" + std::string(text) + "'");
    std::size_t start = (s.front() == '-' || s.front() == '+') ? 1 : 0;
    if (start == s.size()) throw DomainError("malformed fraction: '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i])))
        throw DomainError("malformed fraction: '" + std::string(text) + "'");
    }
    std::string digits(s.front() == '+' ? s.substr(1) : s);
    return Integer(digits, 10);
  };
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Fraction(parse_int(text));
  return Fraction(parse_int(text.substr(0, slash)), parse_int(text.substr(slash + 1)));
}

Fraction Fraction::reciprocal() const {
  if (is_zero()) throw DomainError("reciprocal of zero");
  Fraction out;
  out.value_ = 1 / value_;
  return out;
}

Fraction Fraction::abs() const {
  Fraction out;
  out.value_ = ::abs(value_);
  return out;
}

Fraction Fraction::pow(long exponent) const {
  if (exponent < 0) return reciprocal().pow(-exponent);
  Integer num, den;
  mpz_pow_ui(num.get_mpz_t(), numerator().get_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), denominator().get_mpz_t(), static_cast<unsigned long>(exponent));
  return Fraction(num, den);
}

Fraction& Fraction::operator/=(const Fraction& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

std::string Fraction::to_string() const {
  return numerator().get_str() + "/" + denominator().get_str();
}

Integer factorial(unsigned long n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), n);
  return out;
}

Integer binomial(long n, unsigned long k) {
  Integer out;
  const Integer top(n);
  mpz_bin_ui(out.get_mpz_t(), top.get_mpz_t(), k);
  return out;
}

}  // namespace irr

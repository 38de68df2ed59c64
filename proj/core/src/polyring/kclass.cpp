#include "irr/polyring/kclass.hpp"

#include <algorithm>

#include "irr/errors.hpp"
#include "irr/polyring/series.hpp"

namespace irr {

KClass::KClass(std::size_t truncation, std::vector<Fraction> coeffs, DomainClaim claim)
    : truncation_(truncation), coeffs_(std::move(coeffs)), claim_(claim) {
  if (coeffs_.size() != truncation_ + 1)
    throw DomainError("KClass at truncation " + std::to_string(truncation_) + " needs " +
                      std::to_string(truncation_ + 1) + " coefficients, got " +
                      std::to_string(coeffs_.size()));
  validate();
}

void KClass::validate() const {
  if (auto bad = claim_.first_violation(coeffs_)) {
    throw DomainClaimError("coefficient " + coeffs_[*bad].to_string() + " of u^" + std::to_string(*bad) +
                           " violates claim " + claim_.to_string());
  }
}

KClass KClass::zero(std::size_t truncation, DomainClaim claim) {
  return KClass(truncation, std::vector<Fraction>(truncation + 1), claim);
}

KClass KClass::constant(const Fraction& value, std::size_t truncation, DomainClaim claim) {
  std::vector<Fraction> c(truncation + 1);
  c[0] = value;
  return KClass(truncation, std::move(c), claim);
}

KClass KClass::u(std::size_t truncation) {
  std::vector<Fraction> c(truncation + 1);
  if (truncation >= 1) c[1] = 1;
  return KClass(truncation, std::move(c));
}

bool KClass::is_zero() const {
  return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Fraction& c) { return c.is_zero(); });
}

KClass KClass::with_claim(DomainClaim claim) const { return KClass(truncation_, coeffs_, claim); }

KClass KClass::pow(unsigned long exponent) const {
  return KClass(truncation_, series::pow(coeffs_, exponent), claim_);
}

KClass KClass::compose(const KClass& g) const {
  return KClass(truncation_, series::compose(coeffs_, g.coeffs_), DomainClaim::join(claim_, g.claim_));
}

std::string KClass::to_string() const { return series::format(coeffs_, "u"); }

KClass& KClass::operator+=(const KClass& rhs) {
  coeffs_ = series::add(coeffs_, rhs.coeffs_);
  claim_ = DomainClaim::join(claim_, rhs.claim_);
  validate();
  return *this;
}

KClass& KClass::operator-=(const KClass& rhs) {
  coeffs_ = series::sub(coeffs_, rhs.coeffs_);
  claim_ = DomainClaim::join(claim_, rhs.claim_);
  validate();
  return *this;
}

KClass& KClass::operator*=(const KClass& rhs) {
  coeffs_ = series::mul(coeffs_, rhs.coeffs_);
  claim_ = DomainClaim::join(claim_, rhs.claim_);
  validate();
  return *this;
}

KClass& KClass::operator*=(const Fraction& scalar) {
  coeffs_ = series::scale(coeffs_, scalar);
  if (!claim_.admits(scalar)) claim_ = DomainClaim::rational();
  validate();
  return *this;
}

KClass operator-(const KClass& a) { return a * Fraction(-1); }

KClass line_power(long a, std::size_t truncation) {
  if (a < 0) return invert(line_power(-a, truncation));
  std::vector<Fraction> c(truncation + 1);
  for (std::size_t i = 0; i <= truncation; ++i) c[i] = binomial(a, i);
  return KClass(truncation, std::move(c));
}

KClass invert(const KClass& f) {
  if (f.augmentation().is_zero()) throw SingularError("cannot invert a class with zero augmentation");
  if (!f.claim().is_unit(f.augmentation()))
    throw DomainClaimError("augmentation " + f.augmentation().to_string() + " is not a unit under claim " +
                           f.claim().to_string());
  return KClass(f.truncation(), series::invert(f.coeffs()), f.claim());
}

}  // namespace irr

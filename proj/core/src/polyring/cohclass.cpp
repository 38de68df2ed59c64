#include "irr/polyring/cohclass.hpp"

#include "irr/errors.hpp"
#include "irr/polyring/series.hpp"

namespace irr {

CohClass::CohClass(std::size_t truncation, std::vector<Fraction> coeffs)
    : truncation_(truncation), coeffs_(std::move(coeffs)) {
  if (coeffs_.size() != truncation_ + 1)
    throw DomainError("CohClass at truncation " + std::to_string(truncation_) + " needs " +
                      std::to_string(truncation_ + 1) + " coefficients");
}

CohClass CohClass::zero(std::size_t truncation) {
  return CohClass(truncation, std::vector<Fraction>(truncation + 1));
}

CohClass CohClass::constant(const Fraction& value, std::size_t truncation) {
  CohClass out = zero(truncation);
  out.coeffs_[0] = value;
  return out;
}

CohClass CohClass::exp(const Fraction& c, std::size_t truncation) {
  return CohClass(truncation, series::exp_scaled(c, truncation));
}

CohClass CohClass::log() const {
  if (coeffs_[0] != 1) throw DomainError("log needs constant term 1");
  std::vector<Fraction> h = coeffs_;
  h[0] = 0;
  return CohClass(truncation_, series::log_one_plus(h));
}

CohClass CohClass::inverse() const { return CohClass(truncation_, series::invert(coeffs_)); }

std::string CohClass::to_string() const { return series::format(coeffs_, "e"); }

CohClass& CohClass::operator+=(const CohClass& rhs) {
  coeffs_ = series::add(coeffs_, rhs.coeffs_);
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& rhs) {
  coeffs_ = series::sub(coeffs_, rhs.coeffs_);
  return *this;
}

CohClass& CohClass::operator*=(const CohClass& rhs) {
  coeffs_ = series::mul(coeffs_, rhs.coeffs_);
  return *this;
}

CohClass& CohClass::operator*=(const Fraction& scalar) {
  coeffs_ = series::scale(coeffs_, scalar);
  return *this;
}

}  // namespace irr

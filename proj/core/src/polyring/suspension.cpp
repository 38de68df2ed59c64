#include "irr/polyring/suspension.hpp"

#include "irr/errors.hpp"

namespace irr {

SuspensionClass SuspensionClass::pow(unsigned long n) const {
  if (n == 0) throw DomainError("x^0 is not a reduced class");
  if (n == 1) return *this;
  return zero(truncation(), base_.claim());
}

std::string SuspensionClass::to_string() const { return "(" + base_.to_string() + ")*lambda"; }

SuspensionClass operator*(const SuspensionClass& a, const SuspensionClass& b) {
  if (a.truncation() != b.truncation()) throw DomainError("truncation mismatch");
  return SuspensionClass::zero(a.truncation(), DomainClaim::join(a.base().claim(), b.base().claim()));
}

SphereProductClass SphereProductClass::line_times_bott(long a, std::size_t truncation) {
  KClass line = line_power(a, truncation);
  return SphereProductClass(line, suspend(line));
}

SphereProductClass& SphereProductClass::operator+=(const SphereProductClass& rhs) {
  base_ += rhs.base_;
  suspended_ += rhs.suspended_;
  return *this;
}

SphereProductClass& SphereProductClass::operator-=(const SphereProductClass& rhs) {
  base_ -= rhs.base_;
  suspended_ -= rhs.suspended_;
  return *this;
}

SphereProductClass& SphereProductClass::operator*=(const SphereProductClass& rhs) {
  // (a + s)(b + t) = ab + (a t + b s), s t = 0.
  SuspensionClass cross = base_ * rhs.suspended_ + rhs.base_ * suspended_;
  base_ *= rhs.base_;
  suspended_ = std::move(cross);
  return *this;
}

SphereProductClass SphereProductClass::inverse() const {
  // (a + s)^{-1} = a^{-1} - a^{-2} s.
  KClass a_inv = invert(base_);
  return SphereProductClass(a_inv, -((a_inv * a_inv) * suspended_));
}

}  // namespace irr

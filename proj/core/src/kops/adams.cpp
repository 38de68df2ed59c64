#include "irr/kops/adams.hpp"

#include "irr/errors.hpp"

namespace irr::kops {

namespace {

void require_k(long k) {
  if (k < 2) throw DomainError("operation index k must be >= 2, got " + std::to_string(k));
}

}  // namespace

KClass psi(long k, const KClass& f) {
  const std::size_t n = f.truncation();
  KClass image_of_u = line_power(k, n) - KClass::one(n);
  return f.compose(image_of_u).with_claim(f.claim());
}

SuspensionClass psi_on_suspension(long k, const SuspensionClass& x) {
  return SuspensionClass(psi(k, x.base()) * Fraction(k));
}

SphereProductClass psi(long k, const SphereProductClass& x) {
  return SphereProductClass(psi(k, x.base()), psi_on_suspension(k, x.suspended()));
}

KClass lambda_line(long a, std::size_t truncation) {
  return KClass::one(truncation) - line_power(a, truncation);
}

KClass rho_line(long k, long a, std::size_t truncation) {
  require_k(k);
  const auto claim = DomainClaim::k_inverted(static_cast<std::uint64_t>(k));
  KClass sum = KClass::zero(truncation, claim);
  for (long j = 0; j < k; ++j) sum += line_power(a * j, truncation);
  return sum * Fraction(Integer(1), Integer(k));
}

KClass rho_sum(long k, std::span<const long> exponents, std::size_t truncation) {
  require_k(k);
  KClass product =
      KClass::one(truncation).with_claim(DomainClaim::k_inverted(static_cast<std::uint64_t>(k)));
  for (long a : exponents) product *= rho_line(k, a, truncation);
  return product;
}

SphereProductClass rho_line(long k, const SphereProductClass& line) {
  require_k(k);
  const std::size_t n = line.base().truncation();
  const auto claim = DomainClaim::k_inverted(static_cast<std::uint64_t>(k));
  SphereProductClass power(KClass::one(n), SuspensionClass::zero(n));
  SphereProductClass sum(KClass::zero(n, claim), SuspensionClass::zero(n, claim));
  for (long j = 0; j < k; ++j) {
    sum += power;
    power *= line;
  }
  const Fraction inv_k(Integer(1), Integer(k));
  return SphereProductClass(sum.base() * inv_k, sum.suspended() * inv_k);
}

SphereProductClass rho_on_suspended_line(long k, long a, std::size_t truncation) {
  SphereProductClass twisted = rho_line(k, SphereProductClass::line_times_bott(a, truncation));
  KClass plain = rho_line(k, a, truncation);
  SphereProductClass plain_lifted(plain, SuspensionClass::zero(truncation, plain.claim()));
  return twisted * plain_lifted.inverse();
}

KClass r_line_conjugate(long k, std::size_t truncation) {
  require_k(k);
  const auto claim = DomainClaim::k_inverted(static_cast<std::uint64_t>(k));
  KClass numerator = KClass::zero(truncation, claim);
  for (long j = 0; j <= k - 2; ++j) numerator += line_power(k - 2 - j, truncation) * Fraction(j + 1);
  KClass denominator = KClass::zero(truncation, claim);
  for (long j = 0; j < k; ++j) denominator += line_power(j, truncation);
  return numerator * invert(denominator);
}

KClass r_virtual_conjugate_minus_one(long k, std::size_t truncation) {
  require_k(k);
  if (k % 2 == 0) throw DomainError("r^k([L-bar] - 1) needs odd k so that (k-1)/2 is an integer");
  KClass r = r_line_conjugate(k, truncation);
  return r - KClass::constant(Fraction((k - 1) / 2), truncation);
}

}  // namespace irr::kops

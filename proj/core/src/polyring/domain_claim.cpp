#include "irr/polyring/domain_claim.hpp"

#include <numeric>

#include "irr/errors.hpp"
#include "irr/exact/number_theory.hpp"

namespace irr {

namespace {

// Strips every prime factor of k from |value|; the rest is 1 iff value is
// made only of primes dividing k.
bool divides_power_of(const Integer& value, std::uint64_t k) {
  Integer rest = abs(value);
  if (rest == 0) return false;
  const Integer base(static_cast<unsigned long>(k));
  Integer g;
  while (true) {
    mpz_gcd(g.get_mpz_t(), rest.get_mpz_t(), base.get_mpz_t());
    if (g == 1) break;
    rest /= g;
  }
  return rest == 1;
}

}  // namespace

DomainClaim DomainClaim::p_local(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("P_LOCAL claim needs a prime, got " + std::to_string(p));
  return DomainClaim(Kind::PLocal, p);
}

DomainClaim DomainClaim::k_inverted(std::uint64_t k) {
  if (k < 2) throw DomainError("K_INVERTED claim needs k >= 2");
  return DomainClaim(Kind::KInverted, k);
}

bool DomainClaim::admits(const Fraction& value) const {
  switch (kind_) {
    case Kind::Integral:
      return value.is_integer();
    case Kind::PLocal:
      return vp(value, parameter_).is_p_local();
    case Kind::KInverted:
      return value.is_integer() || divides_power_of(value.denominator(), parameter_);
    case Kind::Rational:
      return true;
  }
  return false;
}

bool DomainClaim::is_unit(const Fraction& value) const {
  if (value.is_zero()) return false;
  switch (kind_) {
    case Kind::Integral:
      return value == 1 || value == -1;
    case Kind::PLocal:
      return vp(value, parameter_).value == 0;
    case Kind::KInverted:
      return divides_power_of(value.numerator(), parameter_) &&
             (value.denominator() == 1 || divides_power_of(value.denominator(), parameter_));
    case Kind::Rational:
      return true;
  }
  return false;
}

std::optional<std::size_t> DomainClaim::first_violation(std::span<const Fraction> coeffs) const {
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (!admits(coeffs[i])) return i;
  return std::nullopt;
}

DomainClaim DomainClaim::join(const DomainClaim& a, const DomainClaim& b) {
  if (a == b) return a;
  if (a.kind_ == Kind::Rational || b.kind_ == Kind::Rational) return rational();
  if (a.kind_ == Kind::Integral) return b;
  if (b.kind_ == Kind::Integral) return a;
  if (a.kind_ == Kind::KInverted && b.kind_ == Kind::KInverted)
    return k_inverted(std::lcm(a.parameter_, b.parameter_));
  if (a.kind_ == Kind::PLocal && b.kind_ == Kind::PLocal) return rational();
  // One P_LOCAL(p), one K_INVERTED(k): Z[1/k] sits inside Z_(p) iff p does not divide k.
  const auto& local = a.kind_ == Kind::PLocal ? a : b;
  const auto& inverted = a.kind_ == Kind::PLocal ? b : a;
  return inverted.parameter_ % local.parameter_ != 0 ? local : rational();
}

std::string DomainClaim::to_string() const {
  switch (kind_) {
    case Kind::Integral:
      return "INTEGRAL";
    case Kind::PLocal:
      return "P_LOCAL(" + std::to_string(parameter_) + ")";
    case Kind::KInverted:
      return "K_INVERTED(" + std::to_string(parameter_) + ")";
    case Kind::Rational:
      return "RATIONAL";
  }
  return "?";
}

DomainClaim DomainClaim::parse(const std::string& text) {
  if (text == "INTEGRAL") return integral();
  if (text == "RATIONAL") return rational();
  auto param = [&](std::size_t prefix) -> std::uint64_t {
    if (text.size() <= prefix + 1 || text.back() != ')')
      throw DomainError("malformed domain claim '" + text + "'");
    return std::stoull(text.substr(prefix, text.size() - prefix - 1));
  };
  if (text.starts_with("P_LOCAL(")) return p_local(param(8));
  if (text.starts_with("K_INVERTED(")) return k_inverted(param(11));
  throw DomainError("unknown domain claim '" + text + "'");
}

}  // namespace irr

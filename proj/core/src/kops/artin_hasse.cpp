#include "irr/kops/artin_hasse.hpp"

#include "irr/errors.hpp"
#include "irr/exact/number_theory.hpp"
#include "irr/kops/adams.hpp"

namespace irr::kops {

namespace {

// Uniform access to the two reduced algebras the logarithm is evaluated in.
struct KClassOps {
  static const KClass& coeff_source(const KClass& x) { return x; }
  static KClass psi_p(std::uint64_t p, const KClass& x) { return psi(static_cast<long>(p), x); }
  static KClass zero_like(const KClass& x, DomainClaim claim) { return KClass::zero(x.truncation(), claim); }
  static std::size_t nilpotency_bound(const KClass& x) { return x.truncation(); }
  static bool in_ideal(const KClass& x) { return x.in_augmentation_ideal(); }
};

struct SuspensionOps {
  static const KClass& coeff_source(const SuspensionClass& x) { return x.base(); }
  static SuspensionClass psi_p(std::uint64_t p, const SuspensionClass& x) {
    return psi_on_suspension(static_cast<long>(p), x);
  }
  static SuspensionClass zero_like(const SuspensionClass& x, DomainClaim claim) {
    return SuspensionClass::zero(x.truncation(), claim);
  }
  static std::size_t nilpotency_bound(const SuspensionClass&) { return 1; }
  static bool in_ideal(const SuspensionClass&) { return true; }
};

std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t out = 1;
  while (exp-- > 0) out *= base;
  return out;
}

template <typename Ops, typename T>
void require_local_ideal(std::uint64_t p, const T& x) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  const auto& claim = Ops::coeff_source(x).claim();
  const bool claim_ok = claim.kind() == DomainClaim::Kind::Integral ||
                        (claim.kind() == DomainClaim::Kind::PLocal && claim.parameter() == p);
  if (!claim_ok) throw DomainError("input must carry claim INTEGRAL or P_LOCAL(" + std::to_string(p) + ")");
  if (!Ops::in_ideal(x)) throw DomainError("input must lie in the augmentation ideal");
}

template <typename Ops, typename T>
T narrow_to_p_local(std::uint64_t p, unsigned t, const T& value) {
  const auto claim = DomainClaim::p_local(p);
  const auto& coeffs = Ops::coeff_source(value).coeffs();
  if (auto bad = claim.first_violation(coeffs)) {
    throw IntegralityViolation(*bad, coeffs[*bad].to_string(),
                               "theta^(" + std::to_string(p) + "^" + std::to_string(t) +
                                   ") is not p-integral: coefficient " + coeffs[*bad].to_string() +
                                   " at index " + std::to_string(*bad));
  }
  return value.with_claim(claim);
}

template <typename Ops, typename T>
T theta_impl(std::uint64_t p, unsigned t, const T& x) {
  require_local_ideal<Ops>(p, x);
  if (t == 0) return x.with_claim(DomainClaim::p_local(p));
  const auto rational = DomainClaim::rational();
  const T top = x.pow(ipow(p, t)).with_claim(rational);
  const T lower = Ops::psi_p(p, x.pow(ipow(p, t - 1))).with_claim(rational);
  const T quotient = (top - lower) * Fraction(Integer(1), Integer(static_cast<unsigned long>(ipow(p, t))));
  return narrow_to_p_local<Ops>(p, t, quotient);
}

template <typename Ops, typename T>
T artin_hasse_impl(std::uint64_t p, const T& x) {
  require_local_ideal<Ops>(p, x);
  const auto claim = DomainClaim::p_local(p);
  const std::size_t bound = Ops::nilpotency_bound(x);
  T sum = Ops::zero_like(x, claim);
  for (std::size_t n = 1; n <= bound; ++n) {
    if (n % p == 0) continue;
    const T xn = x.pow(n);
    T inner = Ops::zero_like(x, claim);
    // theta^(p^t)(x^n) vanishes once n p^(t-1) exceeds the bound.
    for (unsigned t = 0; t == 0 || n * ipow(p, t - 1) <= bound; ++t) inner += theta_impl<Ops>(p, t, xn);
    sum += inner * Fraction(Integer(1), Integer(static_cast<unsigned long>(n)));
  }
  return (-sum).with_claim(claim);
}

}  // namespace

KClass theta(std::uint64_t p, unsigned t, const KClass& x) { return theta_impl<KClassOps>(p, t, x); }

SuspensionClass theta(std::uint64_t p, unsigned t, const SuspensionClass& x) {
  return theta_impl<SuspensionOps>(p, t, x);
}

KClass artin_hasse_log(std::uint64_t p, const KClass& x) { return artin_hasse_impl<KClassOps>(p, x); }

SuspensionClass artin_hasse_log(std::uint64_t p, const SuspensionClass& x) {
  return artin_hasse_impl<SuspensionOps>(p, x);
}

KClass artin_hasse_closed_form(std::uint64_t p, const KClass& x) {
  if (!x.in_augmentation_ideal()) throw DomainError("input must lie in the augmentation ideal");
  const std::size_t n = x.truncation();
  KClass log_one_minus = KClass::zero(n, DomainClaim::rational());
  for (std::size_t m = 1; m <= n; ++m)
    log_one_minus -= x.pow(m) * Fraction(Integer(1), Integer(static_cast<unsigned long>(m)));
  KClass psi_part = psi(static_cast<long>(p), log_one_minus) *
                    Fraction(Integer(1), Integer(static_cast<unsigned long>(p)));
  return psi_part - log_one_minus;
}

KClass l_double_loop(std::uint64_t p, const KClass& f) {
  if (!f.in_augmentation_ideal()) throw DomainError("l_(p) needs an input in the augmentation ideal");
  // 1 + f lambda_C written as 1 - x.
  const SuspensionClass x = -suspend(f);
  return artin_hasse_log(p, x).base();
}

}  // namespace irr::kops

#pragma once

#include <cstdint>

#include "irr/polyring/kclass.hpp"
#include "irr/polyring/suspension.hpp"

namespace irr::kops {

/// theta^(p^t)(x) = (x^(p^t) - psi^p(x^(p^(t-1)))) / p^t for t > 0 and
/// theta^1(x) = x.
///
/// x must lie in the augmentation ideal with claim INTEGRAL or P_LOCAL(p).
/// The division by p^t is carried out over Q and every coefficient is then
/// checked for p-integrality; a failure throws IntegralityViolation naming
/// the coefficient. The result carries claim P_LOCAL(p).
KClass theta(std::uint64_t p, unsigned t, const KClass& x);
SuspensionClass theta(std::uint64_t p, unsigned t, const SuspensionClass& x);

/// Artin-Hasse logarithm evaluated at 1 - x:
///
///   L_(p)(1 - x) = - sum_{(n,p)=1} (1/n) sum_{t>=0} theta^(p^t)(x^n)
///
/// The double sum is finite because x is nilpotent: every term with
/// n p^(t-1) beyond the nilpotency bound vanishes.
KClass artin_hasse_log(std::uint64_t p, const KClass& x);
SuspensionClass artin_hasse_log(std::uint64_t p, const SuspensionClass& x);

/// The rational closed form (psi^p/p - 1) log(1 - x), as displayed alongside
/// the definition, with log(1 - x) = -sum x^m/m. Claim RATIONAL.
KClass artin_hasse_closed_form(std::uint64_t p, const KClass& x);

/// Double loop l_(p) of the Artin-Hasse logarithm: the class g with
///   g lambda_C = L_(p)(1 + f lambda_C),
/// evaluated literally in the square-zero suspension model.
KClass l_double_loop(std::uint64_t p, const KClass& f);

}  // namespace irr::kops

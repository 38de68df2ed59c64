#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

#include "irr/polyring/kclass.hpp"
#include "irr/polyring/suspension.hpp"

namespace irr::kops {

/// Adams operation: the ring endomorphism with psi^k(L^a) = L^(ak), applied
/// by substituting u -> (1+u)^k - 1. Any integer k is accepted (k = -1 is
/// complex conjugation). Preserves the domain claim.
KClass psi(long k, const KClass& f);

/// psi^k(a lambda_C) = k psi^k(a) lambda_C: psi^k acts on the reduced
/// K-theory of S^2 as multiplication by k.
SuspensionClass psi_on_suspension(long k, const SuspensionClass& x);
SphereProductClass psi(long k, const SphereProductClass& x);

/// K-theory Thom class of L^a: 1 - L^a.
KClass lambda_line(long a, std::size_t truncation);

/// rho^k(L^a) = (1 + L^a + ... + L^(a(k-1)))/k with claim K_INVERTED(k).
/// Requires k >= 2.
KClass rho_line(long k, long a, std::size_t truncation);

/// rho^k of L^(a_1) + ... + L^(a_m): product of rho_line terms.
KClass rho_sum(long k, std::span<const long> exponents, std::size_t truncation);

/// rho^k on a line bundle M of X x S^2: (1 + M + ... + M^(k-1))/k.
SphereProductClass rho_line(long k, const SphereProductClass& line);

/// rho^k of the suspended class L^a lambda_C, by multiplicativity:
/// rho^k(L^a (1+lambda_C)) rho^k(L^a)^(-1). The result is a unit
/// 1 + (...) lambda_C.
SphereProductClass rho_on_suspended_line(long k, long a, std::size_t truncation);

/// r^k of the conjugate line bundle:
///   (L^(k-2) + 2 L^(k-3) + ... + (k-2) L + (k-1)) / (1 + L + ... + L^(k-1))
/// with claim K_INVERTED(k). Requires k >= 2.
KClass r_line_conjugate(long k, std::size_t truncation);

/// r^k([L-bar] - 1) = r^k(L-bar) - (k-1)/2. Requires odd k >= 3.
KClass r_virtual_conjugate_minus_one(long k, std::size_t truncation);

}  // namespace irr::kops

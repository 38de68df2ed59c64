#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>

#include "irr/exact/fraction.hpp"
#include "irr/polyring/cohclass.hpp"
#include "irr/polyring/kclass.hpp"

namespace irr::chern {

/// s_n evaluated against e^n: the coefficient n! ch_n(f).
struct GradedEvaluation {
  std::size_t degree_index = 0;  // cohomological degree 2 * degree_index
  Fraction value;
};

/// Chern character: the ring homomorphism with L^a -> exp(a e), i.e.
/// u -> exp(e) - 1, truncated at the truncation of f.
CohClass ch(const KClass& f);

/// m! times the coefficient of e^m in ch(f). Throws DomainError when
/// m exceeds the truncation of f.
Fraction s_eval(std::size_t m, const KClass& f);
GradedEvaluation s_graded(std::size_t m, const KClass& f);

/// psi^k_H: multiplies the degree-2n part by k^n.
CohClass psi_H(long k, const CohClass& c);

/// bh(L) = (e^x - 1)/x as a truncated series in x = c_1(L).
CohClass bh_line(std::size_t order);

struct SeriesIdentityReport {
  std::size_t order = 0;
  bool pass = false;
  std::optional<std::size_t> first_mismatch;  // degree index of the first bad coefficient
  CohClass lhs;
  CohClass rhs;
};

/// log((e^x - 1)/x) = x/2 + sum_{n>=1} (-1)^(n-1) (B_n/2n) x^(2n)/(2n)!
/// checked coefficientwise through x^order. Requires order >= 1.
SeriesIdentityReport bh_log_identity_check(std::size_t order);

/// psi^k_H(bh(L)) = ch(rho^k(L)) bh(L) through x^order. Requires k >= 2.
SeriesIdentityReport bh_psi_identity_check(long k, std::size_t order);

/// Eigenvalue of (r^k)^* on the rank-one primitives of H^(4n-2)(BU):
///
///   s_(2n-1)(r^k([L-bar] - 1)) / s_(2n-1)([L-bar] - 1)
///
/// at truncation 2n + 2 (or `truncation` when given, which must be at least
/// 2n - 1). Additivity of r^k makes the image of s_(2n-1) primitive, and the
/// primitives in that degree have rank one, so one nonvanishing evaluation
/// on L-bar - 1 determines the scalar. Requires k odd, gcd(k, p) = 1.
Fraction rk_eigenvalue(std::uint64_t p, long k, std::size_t n,
                       std::optional<std::size_t> truncation = std::nullopt);

/// The closed form (-1)^(n-1) (k^(2n) - 1) B_n / 2n.
Fraction rk_eigenvalue_closed_form(long k, std::size_t n);

/// s_n(L-bar - 1) = (-1)^n, the rational shadow of kappa_n = (-1)^n kappa-bar_n.
/// Returns the computed evaluation; requires truncation >= n.
Fraction kappa_sign_shadow(std::size_t n, std::size_t truncation);

}  // namespace irr::chern

#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "irr/exact/fraction.hpp"
#include "irr/polyring/domain_claim.hpp"

namespace irr {

/// An element of K(CP^N): a polynomial in u = L - 1 truncated at u^(N+1),
/// with exact rational coefficients and a validated domain claim.
///
/// Arithmetic requires equal truncations (DomainError otherwise). The claim
/// of a result is the weakest claim consistent with the operands and is
/// re-checked against the computed coefficients. Equality compares
/// truncation and coefficients only.
class KClass {
 public:
  /// `coeffs` must have length truncation+1; throws DomainClaimError if a
  /// coefficient is outside `claim`.
  KClass(std::size_t truncation, std::vector<Fraction> coeffs,
         DomainClaim claim = DomainClaim::integral());

  static KClass zero(std::size_t truncation, DomainClaim claim = DomainClaim::integral());
  static KClass constant(const Fraction& value, std::size_t truncation,
                         DomainClaim claim = DomainClaim::integral());
  static KClass one(std::size_t truncation) { return constant(1, truncation); }
  /// u = L - 1 (zero when truncation is 0).
  static KClass u(std::size_t truncation);

  std::size_t truncation() const { return truncation_; }
  const std::vector<Fraction>& coeffs() const { return coeffs_; }
  const Fraction& coefficient(std::size_t i) const { return coeffs_.at(i); }
  const DomainClaim& claim() const { return claim_; }
  /// Value at u = 0.
  const Fraction& augmentation() const { return coeffs_[0]; }

  bool is_zero() const;
  bool in_augmentation_ideal() const { return augmentation().is_zero(); }

  /// Same coefficients under another claim; throws DomainClaimError when a
  /// coefficient is not admitted.
  KClass with_claim(DomainClaim claim) const;

  KClass pow(unsigned long exponent) const;
  /// f(g) for g in the augmentation ideal.
  KClass compose(const KClass& g) const;

  std::string to_string() const;

  KClass& operator+=(const KClass& rhs);
  KClass& operator-=(const KClass& rhs);
  KClass& operator*=(const KClass& rhs);
  KClass& operator*=(const Fraction& scalar);

  friend KClass operator+(KClass a, const KClass& b) { return a += b; }
  friend KClass operator-(KClass a, const KClass& b) { return a -= b; }
  friend KClass operator*(KClass a, const KClass& b) { return a *= b; }
  friend KClass operator*(KClass a, const Fraction& c) { return a *= c; }
  friend KClass operator*(const Fraction& c, KClass a) { return a *= c; }
  friend KClass operator-(const KClass& a);

  friend bool operator==(const KClass& a, const KClass& b) {
    return a.truncation_ == b.truncation_ && a.coeffs_ == b.coeffs_;
  }

 private:
  void validate() const;

  std::size_t truncation_;
  std::vector<Fraction> coeffs_;
  DomainClaim claim_;
};

/// L^a expanded in u. Negative exponents invert the unit 1 + u by a
/// geometric series, which terminates because u is nilpotent.
KClass line_power(long a, std::size_t truncation);

/// Two-sided inverse. Throws SingularError for zero augmentation and
/// DomainClaimError when the augmentation is not a unit of the claimed ring.
KClass invert(const KClass& f);

}  // namespace irr

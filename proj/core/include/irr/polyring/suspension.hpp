#pragma once

#include <cstddef>
#include <string>

#include "irr/polyring/kclass.hpp"

namespace irr {

/// An element a * lambda_C of the reduced K-theory of X_+ smash S^2, where
/// lambda_C = L_1 - 1 is the Bott class. The suspension isomorphism is
/// multiplication by lambda_C, so the class is stored through its base a.
/// All products of two suspended classes vanish.
class SuspensionClass {
 public:
  explicit SuspensionClass(KClass base) : base_(std::move(base)) {}

  static SuspensionClass zero(std::size_t truncation, DomainClaim claim = DomainClaim::integral()) {
    return SuspensionClass(KClass::zero(truncation, claim));
  }

  const KClass& base() const { return base_; }
  std::size_t truncation() const { return base_.truncation(); }
  bool is_zero() const { return base_.is_zero(); }

  /// x^n: x itself for n = 1, zero for n >= 2. Throws DomainError for n = 0
  /// (the unit is not a reduced class).
  SuspensionClass pow(unsigned long n) const;

  SuspensionClass with_claim(DomainClaim claim) const { return SuspensionClass(base_.with_claim(claim)); }

  std::string to_string() const;

  SuspensionClass& operator+=(const SuspensionClass& rhs) { base_ += rhs.base_; return *this; }
  SuspensionClass& operator-=(const SuspensionClass& rhs) { base_ -= rhs.base_; return *this; }
  SuspensionClass& operator*=(const Fraction& c) { base_ *= c; return *this; }

  friend SuspensionClass operator+(SuspensionClass a, const SuspensionClass& b) { return a += b; }
  friend SuspensionClass operator-(SuspensionClass a, const SuspensionClass& b) { return a -= b; }
  friend SuspensionClass operator-(const SuspensionClass& a) { return SuspensionClass(-a.base_); }
  friend SuspensionClass operator*(SuspensionClass a, const Fraction& c) { return a *= c; }
  friend SuspensionClass operator*(const Fraction& c, SuspensionClass a) { return a *= c; }
  /// Module action of K(X) on the suspension.
  friend SuspensionClass operator*(const KClass& f, const SuspensionClass& a) {
    return SuspensionClass(f * a.base_);
  }
  /// Square-zero law.
  friend SuspensionClass operator*(const SuspensionClass& a, const SuspensionClass& b);

  friend bool operator==(const SuspensionClass&, const SuspensionClass&) = default;

 private:
  KClass base_;
};

inline SuspensionClass suspend(KClass f) { return SuspensionClass(std::move(f)); }

/// An element a + b * lambda_C of K(X x S^2) = K(X)[lambda_C]/(lambda_C^2):
/// a class pulled back from X plus a suspended class.
class SphereProductClass {
 public:
  SphereProductClass(KClass base, SuspensionClass suspended)
      : base_(std::move(base)), suspended_(std::move(suspended)) {}

  /// The pullback of a line bundle L^a on X tensored with the Bott line L_1:
  /// L^a (1 + lambda_C).
  static SphereProductClass line_times_bott(long a, std::size_t truncation);

  const KClass& base() const { return base_; }
  const SuspensionClass& suspended() const { return suspended_; }

  SphereProductClass& operator+=(const SphereProductClass& rhs);
  SphereProductClass& operator-=(const SphereProductClass& rhs);
  SphereProductClass& operator*=(const SphereProductClass& rhs);

  friend SphereProductClass operator+(SphereProductClass a, const SphereProductClass& b) { return a += b; }
  friend SphereProductClass operator-(SphereProductClass a, const SphereProductClass& b) { return a -= b; }
  friend SphereProductClass operator*(SphereProductClass a, const SphereProductClass& b) { return a *= b; }

  /// Inverse of a unit; requires an invertible base.
  SphereProductClass inverse() const;

  friend bool operator==(const SphereProductClass&, const SphereProductClass&) = default;

 private:
  KClass base_;
  SuspensionClass suspended_;
};

}  // namespace irr

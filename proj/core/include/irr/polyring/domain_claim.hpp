#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>

#include "irr/exact/fraction.hpp"

namespace irr {

/// Which subring of Q the coefficients of a class are claimed to lie in.
/// Claims are validated predicates on exact rational coefficients, never a
/// separate representation.
class DomainClaim {
 public:
  enum class Kind { Integral, PLocal, KInverted, Rational };

  static DomainClaim integral() { return DomainClaim(Kind::Integral, 0); }
  /// Z_(p); throws DomainError unless p is prime.
  static DomainClaim p_local(std::uint64_t p);
  /// Z[1/k]; throws DomainError for k < 2.
  static DomainClaim k_inverted(std::uint64_t k);
  static DomainClaim rational() { return DomainClaim(Kind::Rational, 0); }

  Kind kind() const { return kind_; }
  /// p for PLocal, k for KInverted, 0 otherwise.
  std::uint64_t parameter() const { return parameter_; }

  bool admits(const Fraction& value) const;
  /// Whether `value` is a unit of the claimed ring.
  bool is_unit(const Fraction& value) const;
  /// Index of the first coefficient not admitted, if any.
  std::optional<std::size_t> first_violation(std::span<const Fraction> coeffs) const;

  /// Weakest claim consistent with both rings (the smallest listed ring
  /// containing both).
  static DomainClaim join(const DomainClaim& a, const DomainClaim& b);

  /// "INTEGRAL", "P_LOCAL(p)", "K_INVERTED(k)", "RATIONAL".
  std::string to_string() const;
  static DomainClaim parse(const std::string& text);

  friend bool operator==(const DomainClaim&, const DomainClaim&) = default;

 private:
  DomainClaim(Kind kind, std::uint64_t parameter) : kind_(kind), parameter_(parameter) {}

  Kind kind_;
  std::uint64_t parameter_;
};

}  // namespace irr

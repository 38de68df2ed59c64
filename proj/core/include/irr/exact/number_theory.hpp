#pragma once

#include <cstdint>
#include <optional>
#include <string>

#include "irr/exact/fraction.hpp"

namespace irr {

/// p-adic valuation; an empty value is the valuation of zero (INFINITE).
struct PValuation {
  std::uint64_t prime = 2;
  std::optional<std::int64_t> value;

  bool is_infinite() const { return !value.has_value(); }
  /// True iff the valued number lies in Z_(p).
  bool is_p_local() const { return is_infinite() || *value >= 0; }
  std::string to_string() const { return value ? std::to_string(*value) : "INFINITE"; }

  friend bool operator==(const PValuation&, const PValuation&) = default;
};

/// Trial division; adequate for the desk-scale primes used here.
bool is_prime(std::uint64_t n);

/// Throws DomainError if p is not prime.
PValuation vp(const Integer& value, std::uint64_t p);
PValuation vp(const Fraction& value, std::uint64_t p);

/// Multiplicative order of `base` modulo `modulus` (gcd must be 1).
std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t modulus);

/// k used in the Theorem A argument: for odd p the smallest odd k >= 3 whose
/// residue generates (Z/p^2)^*, for p = 2 the value 3 (k = +-3 mod 8).
std::uint64_t choose_k(std::uint64_t p);

struct DenominatorValuationReport {
  std::uint64_t p = 0;
  std::uint64_t n = 0;
  std::uint64_t k = 0;
  Integer power_minus_one;  // k^(2n) - 1
  Integer target;           // Denom(B_n/2n), doubled when p = 2
  PValuation lhs;           // v_p(k^(2n) - 1)
  PValuation rhs;           // v_p(target)
  bool pass = false;
};

/// Checks v_p(k^(2n) - 1) = v_p(Denom(B_n/2n)) (p odd) or
/// v_2(k^(2n) - 1) = v_2(2 Denom(B_n/2n)) (p = 2), with k = choose_k(p)
/// unless given explicitly.
DenominatorValuationReport denominator_valuation_check(std::uint64_t p, std::uint64_t n,
                                                       std::optional<std::uint64_t> k = std::nullopt);

}  // namespace irr

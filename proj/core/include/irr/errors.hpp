#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace irr {

/// Precondition failure: an argument outside the operation's domain.
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Inverting a class whose augmentation is zero.
class SingularError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A coefficient (or augmentation) is not admissible in the claimed
/// coefficient domain; the caller has to widen the claim.
class DomainClaimError : public DomainError {
 public:
  using DomainError::DomainError;
};

/// A division that should be exact in Z_(p) was not. Never expected to fire;
/// carries the offending coefficient for diagnosis.
class IntegralityViolation : public std::runtime_error {
 public:
  IntegralityViolation(std::size_t index, std::string coefficient, const std::string& what)
      : std::runtime_error(what), index_(index), coefficient_(std::move(coefficient)) {}

  std::size_t index() const noexcept { return index_; }
  const std::string& coefficient() const noexcept { return coefficient_; }

 private:
  std::size_t index_;
  std::string coefficient_;
};

}  // namespace irr

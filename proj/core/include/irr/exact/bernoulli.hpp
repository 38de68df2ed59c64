#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "irr/exact/fraction.hpp"

namespace irr {

/// Bernoulli numbers in the topologist's convention, all positive:
///
///   z/(e^z - 1) + z/2 = 1 + sum_{n>=1} (-1)^(n-1) B_n z^(2n) / (2n)!
///
/// so B_1 = 1/6, B_2 = 1/30, B_3 = 1/42. Values are read off the exact power
/// series expansion of the left-hand side.
class BernoulliTable {
 public:
  explicit BernoulliTable(std::size_t max_index);

  std::size_t max_index() const { return values_.size(); }

  /// 1-based; throws DomainError outside 1..max_index.
  const Fraction& at(std::size_t n) const;

  /// Coefficients of z^0..z^(2 max_index) of
  /// 1 + sum (-1)^(n-1) B_n z^(2n)/(2n)! built from the stored values.
  std::vector<Fraction> reconstructed_series() const;

  /// Coefficients of z^0..z^order of z/(e^z - 1) + z/2.
  static std::vector<Fraction> generating_series(std::size_t order);

 private:
  std::vector<Fraction> values_;
};

/// B_n, n >= 1. Memoized behind a shared table; safe to call concurrently.
/// Throws DomainError for n = 0.
Fraction bernoulli(std::size_t n);

/// (Num, Denom) of B_n/2n in lowest terms; both positive.
std::pair<Integer, Integer> num_denom(std::size_t n);

}  // namespace irr

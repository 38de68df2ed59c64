#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "irr/exact/fraction.hpp"

namespace irr {

/// An element of H^*(CP^N; Q): a polynomial in the Euler class e = c_1(L),
/// truncated at e^(N+1). The coefficient of e^i sits in degree 2i.
class CohClass {
 public:
  CohClass(std::size_t truncation, std::vector<Fraction> coeffs);

  static CohClass zero(std::size_t truncation);
  static CohClass constant(const Fraction& value, std::size_t truncation);
  /// exp(c e), e.g. ch(L^a) = exp(a e).
  static CohClass exp(const Fraction& c, std::size_t truncation);

  std::size_t truncation() const { return truncation_; }
  const std::vector<Fraction>& coeffs() const { return coeffs_; }
  /// Coefficient of e^degree_index, i.e. the degree-2*degree_index part.
  const Fraction& coefficient(std::size_t degree_index) const { return coeffs_.at(degree_index); }

  /// log of a class with constant term 1.
  CohClass log() const;
  CohClass inverse() const;

  std::string to_string() const;

  CohClass& operator+=(const CohClass& rhs);
  CohClass& operator-=(const CohClass& rhs);
  CohClass& operator*=(const CohClass& rhs);
  CohClass& operator*=(const Fraction& scalar);

  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator*(CohClass a, const CohClass& b) { return a *= b; }
  friend CohClass operator*(CohClass a, const Fraction& c) { return a *= c; }
  friend CohClass operator*(const Fraction& c, CohClass a) { return a *= c; }

  friend bool operator==(const CohClass&, const CohClass&) = default;

 private:
  std::size_t truncation_;
  std::vector<Fraction> coeffs_;
};

}  // namespace irr

#pragma once

#include <span>
#include <string>
#include <vector>

#include "irr/exact/fraction.hpp"

// Dense truncated power-series kernels shared by KClass and CohClass.
// Every vector has the same length N+1; products drop terms of degree > N.
namespace irr::series {

std::vector<Fraction> add(std::span<const Fraction> a, std::span<const Fraction> b);
std::vector<Fraction> sub(std::span<const Fraction> a, std::span<const Fraction> b);
std::vector<Fraction> mul(std::span<const Fraction> a, std::span<const Fraction> b);
std::vector<Fraction> scale(std::span<const Fraction> a, const Fraction& c);
std::vector<Fraction> pow(std::span<const Fraction> a, unsigned long exponent);

/// a(g) truncated; g must have zero constant term.
std::vector<Fraction> compose(std::span<const Fraction> a, std::span<const Fraction> g);

/// Two-sided inverse via a0^{-1} sum_i (-h)^i with a = a0 (1 + h); a0 != 0.
std::vector<Fraction> invert(std::span<const Fraction> a);

/// log(1 + h) = sum_{m>=1} (-1)^(m-1) h^m / m for h with zero constant term.
std::vector<Fraction> log_one_plus(std::span<const Fraction> h);

/// exp(c * t) truncated.
std::vector<Fraction> exp_scaled(const Fraction& c, std::size_t truncation);

/// "c0 + c1 var + c2 var^2 ..." with zero terms omitted; "0" for zero.
std::string format(std::span<const Fraction> a, const std::string& var);

}  // namespace irr::series

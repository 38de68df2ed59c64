#include <doctest.h>

#include <numeric>

#include "generators.hpp"
#include "irr/errors.hpp"
#include "irr/exact/bernoulli.hpp"
#include "irr/exact/number_theory.hpp"

using irr::Fraction;
using irr::Integer;

namespace {

// Akiyama-Tanigawa: yields the signed b_m with b_1 = +1/2.
std::vector<Fraction> akiyama_tanigawa(std::size_t m_max) {
  std::vector<Fraction> a(m_max + 1), out;
  for (std::size_t m = 0; m <= m_max; ++m) {
    a[m] = Fraction(Integer(1), Integer(static_cast<unsigned long>(m + 1)));
    for (std::size_t j = m; j >= 1; --j) a[j - 1] = Fraction(j) * (a[j - 1] - a[j]);
    out.push_back(a[0]);
  }
  return out;
}

Integer staudt_clausen_denominator(std::size_t n) {
  Integer d = 1;
  for (std::uint64_t q = 2; q <= 2 * n + 1; ++q)
    if (irr::is_prime(q) && (2 * n) % (q - 1) == 0) d *= static_cast<unsigned long>(q);
  return d;
}

std::uint64_t brute_order(std::uint64_t k, std::uint64_t m) {
  std::uint64_t x = k % m;
  for (std::uint64_t e = 1;; ++e) {
    if (x == 1) return e;
    x = x * k % m;
  }
}

}  // namespace

TEST_CASE("fraction canonical form and serialization") {
  CHECK(Fraction(Integer(4), Integer(-6)).to_string() == "-2/3");
  CHECK(Fraction().to_string() == "0/1");
  CHECK(Fraction(7).to_string() == "7/1");
  CHECK(Fraction::parse("10/4") == Fraction(Integer(5), Integer(2)));
  CHECK(Fraction::parse("-3") == Fraction(-3));
  CHECK_THROWS_AS(Fraction(Integer(1), Integer(0)), irr::DomainError);
  CHECK_THROWS_AS(Fraction(1) / Fraction(0), irr::DomainError);
  CHECK_THROWS_AS(Fraction(0).reciprocal(), irr::DomainError);
  CHECK(Fraction(Integer(2), Integer(3)).pow(-2) == Fraction(Integer(9), Integer(4)));
  CHECK(Fraction(-1) < Fraction(Integer(-1), Integer(2)));
}

TEST_CASE("fraction field axioms (random)") {
  for (int trial = 0; trial < 300; ++trial) {
    const Fraction a = gen::fraction(), b = gen::fraction(), c = gen::fraction();
    CHECK((a + b) + c == a + (b + c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * b == b * a);
    CHECK(a - a == Fraction());
    if (!a.is_zero()) CHECK(a * a.reciprocal() == Fraction(1));
    CHECK(Fraction::parse(a.to_string()) == a);
  }
}

TEST_CASE("Bernoulli values against Akiyama-Tanigawa") {
  const auto b = akiyama_tanigawa(60);
  const irr::BernoulliTable table(30);
  for (std::size_t n = 1; n <= 30; ++n) {
    const Fraction signed_b = b[2 * n];
    CHECK(table.at(n) == (n % 2 == 1 ? signed_b : -signed_b));
    CHECK(table.at(n) > Fraction());
  }
  CHECK(irr::bernoulli(1) == Fraction(Integer(1), Integer(6)));
  CHECK(irr::bernoulli(2) == Fraction(Integer(1), Integer(30)));
  CHECK_THROWS_AS(irr::bernoulli(0), irr::DomainError);
  CHECK_THROWS_AS(table.at(31), irr::DomainError);
}

TEST_CASE("von Staudt-Clausen denominators") {
  for (std::size_t n = 1; n <= 40; ++n) CHECK(irr::bernoulli(n).denominator() == staudt_clausen_denominator(n));
}

TEST_CASE("Num/Denom of B_n/2n") {
  CHECK(irr::num_denom(1) == std::pair<Integer, Integer>(1, 12));
  CHECK(irr::num_denom(2) == std::pair<Integer, Integer>(1, 120));
  CHECK(irr::num_denom(6) == std::pair<Integer, Integer>(691, 32760));
}

TEST_CASE("generating series reconstructs from the table") {
  const irr::BernoulliTable table(30);
  CHECK(table.reconstructed_series() == irr::BernoulliTable::generating_series(60));
}

TEST_CASE("p-adic valuation") {
  CHECK(irr::vp(Integer(48), 2).value == 4);
  CHECK(irr::vp(Fraction(Integer(5), Integer(18)), 3).value == -2);
  CHECK(irr::vp(Integer(0), 5).is_infinite());
  CHECK(irr::vp(Fraction(Integer(7), Integer(9)), 3).is_p_local() == false);
  CHECK_THROWS_AS(irr::vp(Integer(8), 4), irr::DomainError);
}

TEST_CASE("choose_k generates (Z/p^2)^*") {
  CHECK(irr::choose_k(2) == 3);
  for (std::uint64_t p : {3, 5, 7, 11, 13, 17, 19, 23}) {
    const std::uint64_t k = irr::choose_k(p);
    CHECK(k % 2 == 1);
    CHECK(std::gcd(k, p) == 1);
    CHECK(brute_order(k, p * p) == p * (p - 1));
    CHECK(irr::multiplicative_order(k, p * p) == p * (p - 1));
    for (std::uint64_t smaller = 3; smaller < k; smaller += 2)
      CHECK((std::gcd(smaller, p) != 1 || brute_order(smaller, p * p) != p * (p - 1)));
  }
}

TEST_CASE("denominator valuation step") {
  for (std::uint64_t p : {3, 5, 7, 11})
    for (std::uint64_t n = 1; n <= 20; ++n) CHECK(irr::denominator_valuation_check(p, n).pass);
  for (std::uint64_t n = 1; n <= 20; ++n) {
    const auto r = irr::denominator_valuation_check(2, n, 3);
    CHECK(r.pass);
    CHECK(r.target == 2 * irr::num_denom(n).second);
  }
  // 11 = 1 mod 5 is no generator: 5 | 11^2 - 1 while 5 does not divide 12.
  CHECK_FALSE(irr::denominator_valuation_check(5, 1, 11).pass);
}

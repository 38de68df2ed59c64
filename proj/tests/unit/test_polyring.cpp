#include <doctest.h>

#include "generators.hpp"
#include "irr/errors.hpp"
#include "irr/polyring/cohclass.hpp"
#include "irr/polyring/series.hpp"
#include "irr/polyring/suspension.hpp"

using irr::DomainClaim;
using irr::Fraction;
using irr::Integer;
using irr::KClass;

namespace {

// coefficient of u^i in (1+u)^a, any integer a
Fraction generalized_binomial(long a, std::size_t i) {
  Fraction out = 1;
  for (std::size_t j = 0; j < i; ++j) out *= Fraction(a - static_cast<long>(j)) / Fraction(j + 1);
  return out;
}

}  // namespace

TEST_CASE("domain claims") {
  CHECK(DomainClaim::parse("P_LOCAL(5)") == DomainClaim::p_local(5));
  CHECK(DomainClaim::parse("K_INVERTED(3)").to_string() == "K_INVERTED(3)");
  CHECK_THROWS_AS(DomainClaim::p_local(4), irr::DomainError);
  CHECK_THROWS_AS(DomainClaim::parse("MYSTERY"), irr::DomainError);
  const Fraction third(Integer(1), Integer(3));
  CHECK(DomainClaim::p_local(5).admits(third));
  CHECK_FALSE(DomainClaim::p_local(3).admits(third));
  CHECK(DomainClaim::k_inverted(6).admits(third));
  CHECK_FALSE(DomainClaim::integral().admits(third));
  CHECK(DomainClaim::p_local(3).is_unit(Fraction(2)));
  CHECK_FALSE(DomainClaim::p_local(3).is_unit(Fraction(6)));

  using C = DomainClaim;
  CHECK(C::join(C::integral(), C::p_local(3)) == C::p_local(3));
  CHECK(C::join(C::p_local(3), C::p_local(5)) == C::rational());
  CHECK(C::join(C::k_inverted(4), C::k_inverted(6)) == C::k_inverted(12));
  CHECK(C::join(C::p_local(3), C::k_inverted(5)) == C::p_local(3));
  CHECK(C::join(C::p_local(3), C::k_inverted(6)) == C::rational());
  CHECK(C::join(C::rational(), C::integral()) == C::rational());
}

TEST_CASE("claim validation at construction") {
  const Fraction half(Integer(1), Integer(2));
  CHECK_THROWS_AS(KClass(2, {0, half, 0}), irr::DomainClaimError);
  CHECK_NOTHROW(KClass(2, {0, half, 0}, DomainClaim::p_local(3)));
  CHECK_THROWS_AS(KClass(2, {0, 1}), irr::DomainError);
  CHECK((KClass::u(3) * half).claim() == DomainClaim::rational());
}

TEST_CASE("line powers match the generalized binomial series") {
  for (long a = -5; a <= 5; ++a) {
    const KClass l = irr::line_power(a, 9);
    for (std::size_t i = 0; i <= 9; ++i) CHECK(l.coefficient(i) == generalized_binomial(a, i));
  }
  CHECK(irr::line_power(3, 6) * irr::line_power(-3, 6) == KClass::one(6));
}

TEST_CASE("ring axioms in K(CP^N) (random)") {
  for (int trial = 0; trial < 150; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::small_int(0, 10));
    const KClass a = gen::rational_class(n), b = gen::rational_class(n), c = gen::rational_class(n);
    CHECK((a + b) + c == a + (b + c));
    CHECK(a + b == b + a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * b == b * a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * KClass::one(n) == a);
    CHECK(a + KClass::zero(n) == a);
    CHECK(a - a == KClass::zero(n));
    if (!a.augmentation().is_zero()) CHECK(a * irr::invert(a.with_claim(DomainClaim::rational())) == KClass::one(n));
  }
}

TEST_CASE("u is nilpotent at the truncation") {
  CHECK(KClass::u(4).pow(5).is_zero());
  CHECK_FALSE(KClass::u(4).pow(4).is_zero());
}

TEST_CASE("inversion failures") {
  CHECK_THROWS_AS(irr::invert(KClass::u(3)), irr::SingularError);
  CHECK_THROWS_AS(irr::invert(KClass::constant(2, 3)), irr::DomainClaimError);
  CHECK(irr::invert(KClass::constant(2, 3).with_claim(DomainClaim::p_local(3))).augmentation() ==
        Fraction(Integer(1), Integer(2)));
}

TEST_CASE("truncated series kernels") {
  const std::vector<Fraction> x{0, 1, 0, 0, 0, 0};
  const auto e = irr::series::exp_scaled(1, 5);
  // log(1 + (e^x - 1)) = x
  auto em1 = e;
  em1[0] = 0;
  CHECK(irr::series::log_one_plus(em1) == x);
  CHECK(irr::series::mul(e, irr::series::invert(e)) == std::vector<Fraction>{1, 0, 0, 0, 0, 0});
  CHECK_THROWS_AS(irr::series::add(x, std::vector<Fraction>{0, 1}), irr::DomainError);
  CHECK_THROWS_AS(irr::series::invert(x), irr::SingularError);
  CHECK_THROWS_AS(irr::series::compose(e, e), irr::DomainError);
}

TEST_CASE("cohomology classes") {
  for (int trial = 0; trial < 40; ++trial) {
    const Fraction a = gen::fraction(), b = gen::fraction();
    CHECK(irr::CohClass::exp(a, 8) * irr::CohClass::exp(b, 8) == irr::CohClass::exp(a + b, 8));
    CHECK(irr::CohClass::exp(a, 8).log() == irr::CohClass(8, {0, a, 0, 0, 0, 0, 0, 0, 0}));
    CHECK(irr::CohClass::exp(a, 8).inverse() == irr::CohClass::exp(-a, 8));
  }
  CHECK_THROWS_AS(irr::CohClass::constant(2, 3).log(), irr::DomainError);
}

TEST_CASE("suspension is square-zero") {
  const auto s = irr::suspend(KClass::u(4));
  CHECK((s * s).is_zero());
  CHECK(s.pow(1) == s);
  CHECK(s.pow(3).is_zero());
  CHECK_THROWS_AS(s.pow(0), irr::DomainError);
  const auto line = irr::SphereProductClass::line_times_bott(2, 5);
  const auto inv = line.inverse();
  CHECK(line * inv == irr::SphereProductClass(KClass::one(5), irr::SuspensionClass::zero(5)));
}

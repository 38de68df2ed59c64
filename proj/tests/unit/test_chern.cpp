#include <doctest.h>

#include "generators.hpp"
#include "irr/chern/chern.hpp"
#include "irr/errors.hpp"
#include "irr/exact/number_theory.hpp"
#include "irr/kops/adams.hpp"

using irr::CohClass;
using irr::Fraction;
using irr::Integer;
using irr::KClass;
namespace chern = irr::chern;

namespace {

Fraction q(long n, long d) { return Fraction(Integer(n), Integer(d)); }

}  // namespace

TEST_CASE("ch(L^a) = e^(a e)") {
  for (long a = -4; a <= 4; ++a) CHECK(chern::ch(irr::line_power(a, 10)) == CohClass::exp(a, 10));
}

TEST_CASE("ch is a ring map and intertwines psi (random)") {
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = static_cast<std::size_t>(gen::small_int(1, 9));
    const KClass a = gen::rational_class(n), b = gen::rational_class(n);
    CHECK(chern::ch(a * b) == chern::ch(a) * chern::ch(b));
    CHECK(chern::ch(a + b) == chern::ch(a) + chern::ch(b));
    for (long k : {-2L, 2L, 3L, 5L}) CHECK(chern::ch(irr::kops::psi(k, a)) == chern::psi_H(k, chern::ch(a)));
  }
}

TEST_CASE("s_n = n! ch_n") {
  // s_n(L - 1) = 1 for every n
  for (std::size_t m = 1; m <= 8; ++m) CHECK(chern::s_eval(m, irr::line_power(1, 8) - KClass::one(8)) == Fraction(1));
  CHECK(chern::s_graded(3, KClass::u(5)).degree_index == 3);
  CHECK_THROWS_AS(chern::s_eval(6, KClass::u(5)), irr::DomainError);
  for (std::size_t m = 1; m <= 9; ++m) CHECK(chern::kappa_sign_shadow(m, 9) == Fraction(m % 2 == 0 ? 1 : -1));
}

TEST_CASE("bh series identities through order 30") {
  const auto log_report = chern::bh_log_identity_check(30);
  CHECK(log_report.pass);
  CHECK_FALSE(log_report.first_mismatch.has_value());
  CHECK(chern::bh_log_identity_check(2).pass);
  for (long k = 2; k <= 7; ++k) CHECK(chern::bh_psi_identity_check(k, 30).pass);
  CHECK(chern::bh_line(3) == CohClass(3, {1, q(1, 2), q(1, 6), q(1, 24)}));
}

TEST_CASE("r^k eigenvalues: worked instances") {
  CHECK(chern::rk_eigenvalue(3, 5, 1) == Fraction(2));
  CHECK(chern::rk_eigenvalue(5, 3, 1) == q(2, 3));
  CHECK(chern::rk_eigenvalue(3, 5, 2) == q(-26, 5));
  const std::vector<Fraction> k3{q(2, 3), q(-2, 3), q(26, 9), q(-82, 3)};
  const std::vector<Fraction> k7{4, -20, q(3268, 7), -24020};
  for (std::size_t n = 1; n <= 4; ++n) {
    CHECK(chern::rk_eigenvalue_closed_form(3, n) == k3[n - 1]);
    CHECK(chern::rk_eigenvalue_closed_form(7, n) == k7[n - 1]);
  }
}

TEST_CASE("r^k eigenvalue grid is p-local and truncation independent") {
  for (std::uint64_t p : {3, 5, 7}) {
    const long k = static_cast<long>(irr::choose_k(p));
    for (std::size_t n = 1; n <= 6; ++n) {
      const Fraction e = chern::rk_eigenvalue(p, k, n);
      CHECK(e == chern::rk_eigenvalue_closed_form(k, n));
      CHECK(irr::vp(e, p).is_p_local());
      CHECK(e == chern::rk_eigenvalue(p, k, n, 2 * n - 1));
      CHECK(e == chern::rk_eigenvalue(p, k, n, 2 * n + 7));
    }
  }
  CHECK_THROWS_AS(chern::rk_eigenvalue(3, 4, 1), irr::DomainError);
  CHECK_THROWS_AS(chern::rk_eigenvalue(3, 3, 1), irr::DomainError);
  CHECK_THROWS_AS(chern::rk_eigenvalue(3, 5, 3, 4), irr::DomainError);
}

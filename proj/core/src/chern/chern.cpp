#include "irr/chern/chern.hpp"

#include <numeric>

#include "irr/errors.hpp"
#include "irr/exact/bernoulli.hpp"
#include "irr/exact/number_theory.hpp"
#include "irr/kops/adams.hpp"
#include "irr/polyring/series.hpp"

namespace irr::chern {

CohClass ch(const KClass& f) {
  const std::size_t n = f.truncation();
  std::vector<Fraction> image_of_u = series::exp_scaled(1, n);
  image_of_u[0] = 0;
  return CohClass(n, series::compose(f.coeffs(), image_of_u));
}

Fraction s_eval(std::size_t m, const KClass& f) {
  if (m > f.truncation())
    throw DomainError("s_" + std::to_string(m) + " needs truncation >= " + std::to_string(m) + ", got " +
                      std::to_string(f.truncation()));
  return ch(f).coefficient(m) * Fraction(factorial(m));
}

GradedEvaluation s_graded(std::size_t m, const KClass& f) { return {m, s_eval(m, f)}; }

CohClass psi_H(long k, const CohClass& c) {
  std::vector<Fraction> out = c.coeffs();
  for (std::size_t i = 0; i < out.size(); ++i) out[i] *= Fraction(k).pow(static_cast<long>(i));
  return CohClass(c.truncation(), std::move(out));
}

CohClass bh_line(std::size_t order) {
  std::vector<Fraction> c(order + 1);
  for (std::size_t i = 0; i <= order; ++i) c[i] = Fraction(Integer(1), factorial(i + 1));
  return CohClass(order, std::move(c));
}

namespace {

SeriesIdentityReport compare(std::size_t order, CohClass lhs, CohClass rhs) {
  SeriesIdentityReport report{order, true, std::nullopt, std::move(lhs), std::move(rhs)};
  for (std::size_t i = 0; i <= order; ++i) {
    if (report.lhs.coefficient(i) != report.rhs.coefficient(i)) {
      report.pass = false;
      report.first_mismatch = i;
      break;
    }
  }
  return report;
}

}  // namespace

SeriesIdentityReport bh_log_identity_check(std::size_t order) {
  if (order == 0) throw DomainError("bh log identity needs order >= 1");
  CohClass lhs = bh_line(order).log();
  std::vector<Fraction> rhs(order + 1);
  rhs[1] = Fraction(Integer(1), Integer(2));
  for (std::size_t n = 1; 2 * n <= order; ++n) {
    Fraction term = bernoulli(n) / Fraction(2 * n) / Fraction(factorial(2 * n));
    rhs[2 * n] = (n % 2 == 1) ? term : -term;
  }
  return compare(order, std::move(lhs), CohClass(order, std::move(rhs)));
}

SeriesIdentityReport bh_psi_identity_check(long k, std::size_t order) {
  if (k < 2) throw DomainError("bh psi identity needs k >= 2");
  CohClass bh = bh_line(order);
  return compare(order, psi_H(k, bh), ch(kops::rho_line(k, 1, order)) * bh);
}

Fraction rk_eigenvalue(std::uint64_t p, long k, std::size_t n, std::optional<std::size_t> truncation) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
  if (n == 0) throw DomainError("eigenvalue index n must be >= 1");
  if (k < 3 || k % 2 == 0) throw DomainError("eigenvalue needs odd k >= 3");
  if (std::gcd(static_cast<std::uint64_t>(k), p) != 1) throw DomainError("eigenvalue needs gcd(k, p) = 1");
  const std::size_t m = 2 * n - 1;
  const std::size_t N = truncation.value_or(2 * n + 2);
  if (N < m) throw DomainError("truncation too small for s_" + std::to_string(m));

  const KClass test_class = line_power(-1, N) - KClass::one(N);
  const Fraction image = s_eval(m, kops::r_virtual_conjugate_minus_one(k, N));
  const Fraction source = s_eval(m, test_class);
  const Fraction eigenvalue = image / source;
  if (!vp(eigenvalue, p).is_p_local())
    throw IntegralityViolation(0, eigenvalue.to_string(), "eigenvalue " + eigenvalue.to_string() +
                                                              " is not " + std::to_string(p) + "-local");
  return eigenvalue;
}

Fraction rk_eigenvalue_closed_form(long k, std::size_t n) {
  const Fraction power = Fraction(k).pow(static_cast<long>(2 * n)) - Fraction(1);
  Fraction value = power * bernoulli(n) / Fraction(2 * n);
  return (n % 2 == 1) ? value : -value;
}

Fraction kappa_sign_shadow(std::size_t n, std::size_t truncation) {
  if (truncation < n) throw DomainError("kappa sign shadow needs truncation >= n");
  return s_eval(n, line_power(-1, truncation) - KClass::one(truncation));
}

}  // namespace irr::chern

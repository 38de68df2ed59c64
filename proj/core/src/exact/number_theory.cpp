#include "irr/exact/number_theory.hpp"

#include <vector>

#include "irr/errors.hpp"
#include "irr/exact/bernoulli.hpp"

namespace irr {

namespace {

void require_prime(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  Integer out;
  const Integer b(static_cast<unsigned long>(base)), mod(static_cast<unsigned long>(m));
  mpz_powm_ui(out.get_mpz_t(), b.get_mpz_t(), exp, mod.get_mpz_t());
  return out.get_ui();
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  const Integer product = Integer(static_cast<unsigned long>(a)) * static_cast<unsigned long>(b);
  return Integer(product % static_cast<unsigned long>(m)).get_ui();
}

std::vector<std::uint64_t> prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = 2; q * q <= n; ++q) {
    if (n % q != 0) continue;
    out.push_back(q);
    while (n % q == 0) n /= q;
  }
  if (n > 1) out.push_back(n);
  return out;
}

std::uint64_t gcd(std::uint64_t a, std::uint64_t b) {
  while (b != 0) {
    a %= b;
    std::swap(a, b);
  }
  return a;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

PValuation vp(const Integer& value, std::uint64_t p) {
  require_prime(p);
  PValuation out{p, std::nullopt};
  if (value == 0) return out;
  Integer rest;
  const Integer prime(static_cast<unsigned long>(p));
  out.value = static_cast<std::int64_t>(mpz_remove(rest.get_mpz_t(), value.get_mpz_t(), prime.get_mpz_t()));
  return out;
}

PValuation vp(const Fraction& value, std::uint64_t p) {
  require_prime(p);
  if (value.is_zero()) return {p, std::nullopt};
  return {p, *vp(value.numerator(), p).value - *vp(value.denominator(), p).value};
}

std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t modulus) {
  if (modulus < 2 || gcd(base % modulus, modulus) != 1)
    throw DomainError("multiplicative order needs gcd(base, modulus) = 1");
  std::uint64_t order = 1;
  std::uint64_t power = base % modulus;
  while (power != 1 % modulus) {
    power = mul_mod(power, base, modulus);
    ++order;
  }
  return order;
}

std::uint64_t choose_k(std::uint64_t p) {
  require_prime(p);
  if (p == 2) return 3;
  const std::uint64_t modulus = p * p;
  const std::uint64_t group_order = p * (p - 1);
  const auto factors = prime_factors(group_order);
  for (std::uint64_t k = 3;; k += 2) {
    if (k % p == 0) continue;
    bool generates = true;
    for (auto q : factors) {
      if (pow_mod(k, group_order / q, modulus) == 1) {
        generates = false;
        break;
      }
    }
    if (generates) return k;
  }
}

DenominatorValuationReport denominator_valuation_check(std::uint64_t p, std::uint64_t n,
                                                       std::optional<std::uint64_t> k) {
  require_prime(p);
  if (n == 0) throw DomainError("denominator valuation check needs n >= 1");
  DenominatorValuationReport report;
  report.p = p;
  report.n = n;
  report.k = k.value_or(choose_k(p));
  Integer power;
  mpz_ui_pow_ui(power.get_mpz_t(), report.k, 2 * n);
  report.power_minus_one = power - 1;
  report.target = num_denom(n).second;
  if (p == 2) report.target *= 2;
  report.lhs = vp(report.power_minus_one, p);
  report.rhs = vp(report.target, p);
  report.pass = report.lhs == report.rhs;
  return report;
}

}  // namespace irr

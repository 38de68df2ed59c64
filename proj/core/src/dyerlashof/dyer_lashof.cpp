#include "irr/dyerlashof/dyer_lashof.hpp"

#include "irr/chern/chern.hpp"
#include "irr/errors.hpp"
#include "irr/exact/bernoulli.hpp"
#include "irr/exact/number_theory.hpp"

namespace irr::dyerlashof {

namespace {

void require_odd_prime(std::uint64_t p) {
  if (p == 2) throw DomainError("homology operations are only modelled for odd primes");
  if (!is_prime(p)) throw DomainError(std::to_string(p) + " is not prime");
}

std::uint64_t reduce(const Integer& value, std::uint64_t p) {
  Integer r;
  mpz_fdiv_r_ui(r.get_mpz_t(), value.get_mpz_t(), p);
  return r.get_ui();
}

std::uint64_t reduce(const Fraction& value, std::uint64_t p) {
  const Integer modulus(static_cast<unsigned long>(p));
  Integer inverse;
  if (mpz_invert(inverse.get_mpz_t(), value.denominator().get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw DomainError("cannot reduce " + value.to_string() + " mod " + std::to_string(p));
  return reduce(Integer(value.numerator() * inverse), p);
}

}  // namespace

std::int64_t AdmissibleWord::degree(std::uint64_t p) const {
  std::int64_t d = base_degree;
  for (const auto& e : entries) d += 2 * e.i * static_cast<std::int64_t>(p - 1) - e.epsilon;
  return d;
}

std::string AdmissibleWord::to_string() const {
  std::string out;
  for (const auto& e : entries) {
    if (e.epsilon == 1) out += "b ";
    out += "Q^" + std::to_string(e.i) + " ";
  }
  return out + "(y_" + std::to_string(base_degree) + ")";
}

bool is_admissible(const AdmissibleWord& word, std::uint64_t p) {
  require_odd_prime(p);
  const auto& I = word.entries;
  if (I.empty()) return true;
  const auto pp = static_cast<std::int64_t>(p);
  for (const auto& e : I)
    if ((e.epsilon != 0 && e.epsilon != 1) || e.i < 1) return false;
  for (std::size_t j = 1; j < I.size(); ++j)
    if (I[j - 1].i > pp * I[j].i - I[j].epsilon) return false;
  std::int64_t excess = 2 * I[0].i;
  for (std::size_t j = 1; j < I.size(); ++j) excess -= 2 * I[j].i * (pp - 1) - I[j].epsilon;
  return excess > word.base_degree;
}

LeadingHomologyClass q_on_bu(std::int64_t j, std::int64_t n, std::uint64_t p) {
  require_odd_prime(p);
  LeadingHomologyClass out;
  out.prime = p;
  out.generator_index = n + j * static_cast<std::int64_t>(p - 1);
  Integer coefficient = (j >= 1 && n >= 0) ? binomial(j - 1, static_cast<unsigned long>(n)) : Integer(0);
  if ((j + n - 1) % 2 != 0) coefficient = -coefficient;
  out.coefficient = reduce(coefficient, p);
  return out;
}

std::uint64_t s_generator_pairing(std::int64_t m, std::uint64_t p) {
  require_odd_prime(p);
  if (m < 1) throw DomainError("s_m pairing needs m >= 1");
  const auto degree = static_cast<std::size_t>(m);
  return reduce(chern::kappa_sign_shadow(degree, degree), p);
}

std::uint64_t pair_primitive_s(std::int64_t m, const LeadingHomologyClass& c) {
  if (c.generator_index != m || c.coefficient == 0) return 0;
  return c.coefficient * s_generator_pairing(m, c.prime) % c.prime;
}

std::uint64_t kappa_pairing(std::int64_t, const AdmissibleWord& word, std::uint64_t p) {
  require_odd_prime(p);
  if (word.entries.empty()) throw DomainError("kappa pairing is defined here on nonempty operations only");
  return 0;
}

AkitaCertificate akita_counterexample(std::uint64_t p) {
  require_odd_prime(p);
  AkitaCertificate cert;
  cert.prime = p;
  const auto n = static_cast<std::int64_t>(p);
  cert.kappa_index = 2 * n - 1;

  cert.q2_a1 = q_on_bu(2, 1, p);
  cert.kappa_bar_pairing = pair_primitive_s(cert.kappa_index, cert.q2_a1);
  cert.expected_pairing = p - 1;  // (-1)^(2p-1) = -1

  const AdmissibleWord q2{{{0, 2}}, 2};
  cert.kappa_pairing = kappa_pairing(cert.kappa_index, q2, p);

  cert.sum_pairing = (cert.kappa_pairing + cert.kappa_bar_pairing) % p;
  cert.kappa_differs_from_minus_kappa_bar = cert.sum_pairing != 0;

  const auto [num, denom] = num_denom(static_cast<std::size_t>(p));
  cert.num_bernoulli = num.get_str();
  cert.denom_bernoulli = denom.get_str();
  cert.numerator_is_p_unit = vp(num, p).value == 0;

  // Rational relation between the two families in degree 2n - 1, read off
  // s_(2n-1)(L-bar - 1) = (-1)^(2n-1).
  const auto m = static_cast<std::size_t>(cert.kappa_index);
  const Fraction relation_sign = chern::kappa_sign_shadow(m, m);
  const Fraction akita_sign = (n % 2 == 1) ? Fraction(1) : Fraction(-1);  // (-1)^(n-1)
  const Fraction theorem_sign = -akita_sign;                              // (-1)^n
  cert.rational_signs_consistent = theorem_sign * relation_sign == akita_sign;
  cert.conjecture_forces_equality = cert.numerator_is_p_unit && cert.rational_signs_consistent;

  cert.conjecture_fails = cert.q2_a1.coefficient != 0 && cert.kappa_bar_pairing == cert.expected_pairing &&
                          cert.kappa_pairing == 0 && cert.kappa_differs_from_minus_kappa_bar &&
                          cert.conjecture_forces_equality;

  cert.genus_threshold = 8 * n - 3;
  cert.notes.push_back("pairing convention: <s_m, a_m> = s_m(L-bar - 1) = (-1)^m");
  cert.notes.push_back("genus threshold 8p-3 is quoted from the homological stability range, not computed");
  cert.notes.push_back("passage from the universal class to surface bundles uses the stable homology of mapping class groups (cited)");
  return cert;
}

}  // namespace irr::dyerlashof

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace irr::dyerlashof {

/// One factor beta^epsilon Q^i of a composite operation.
struct WordEntry {
  int epsilon = 0;     // 0 or 1
  std::int64_t i = 1;  // positive

  friend bool operator==(const WordEntry&, const WordEntry&) = default;
};

/// Q^I = beta^e1 Q^i1 beta^e2 Q^i2 ... beta^ek Q^ik applied to a class of
/// degree base_degree; the last entry acts first.
struct AdmissibleWord {
  std::vector<WordEntry> entries;
  std::int64_t base_degree = 0;

  /// deg Q^I(y) = deg y + sum (2 i_j (p-1) - epsilon_j).
  std::int64_t degree(std::uint64_t p) const;
  /// "b Q^2 Q^1 (y_2)" style rendering.
  std::string to_string() const;

  friend bool operator==(const AdmissibleWord&, const AdmissibleWord&) = default;
};

/// Both conditions on I = (e1, i1, ..., ek, ik) for p odd:
///   i_(j-1) <= p i_j - e_j                            (j >= 2)
///   2 i_1 - sum_{j>=2} (2 i_j (p-1) - e_j) > deg x    (k >= 1)
/// The empty word (the class itself) is admissible. Throws DomainError
/// unless p is an odd prime.
bool is_admissible(const AdmissibleWord& word, std::uint64_t p);

/// Mod-p homology class of BU known up to decomposables:
/// coefficient * a_(generator_index) + decomposables.
struct LeadingHomologyClass {
  std::uint64_t prime = 3;
  std::int64_t generator_index = 0;
  std::uint64_t coefficient = 0;  // residue in 0..p-1
  bool unknown_decomposables = true;

  bool is_zero_leading() const { return coefficient == 0; }
};

/// Leading term of Q^j(a_n) in H_*(BU; F_p):
///   (-1)^(j+n-1) binom(j-1, n) a_(n + j(p-1)) + decomposables.
LeadingHomologyClass q_on_bu(std::int64_t j, std::int64_t n, std::uint64_t p);

/// <s_m, a_m> = (-1)^m mod p, following from a_n being the image of the
/// generator under L-bar - 1 and s_m(L-bar - 1) = (-1)^m.
std::uint64_t s_generator_pairing(std::int64_t m, std::uint64_t p);

/// <s_m, c>: coefficient * <s_m, a_gen>, zero unless gen = m. Decomposables
/// pair to zero because s_m is primitive.
std::uint64_t pair_primitive_s(std::int64_t m, const LeadingHomologyClass& c);

/// <sigma^*(e^m), Q^I(a_base)>: suspension classes annihilate every nonempty
/// homology operation, so this is 0. Throws DomainError on an empty word.
std::uint64_t kappa_pairing(std::int64_t m, const AdmissibleWord& word, std::uint64_t p);

struct AkitaCertificate {
  std::uint64_t prime = 0;
  std::int64_t kappa_index = 0;  // 2p - 1

  // (a) <kappa-bar_(2p-1), Q^2(a-bar_1)> = <s_(2p-1), Q^2(a_1)>.
  LeadingHomologyClass q2_a1;
  std::uint64_t kappa_bar_pairing = 0;
  std::uint64_t expected_pairing = 0;  // (-1)^(2p-1) mod p

  // (b) <kappa_(2p-1), Q^2(a_1)>.
  std::uint64_t kappa_pairing = 0;

  // (c) <kappa + kappa-bar, Q^2(a_1)> != 0, so kappa != -kappa-bar mod p.
  std::uint64_t sum_pairing = 0;
  bool kappa_differs_from_minus_kappa_bar = false;

  // (d) Akita's relation D s = (-1)^(n-1) N kappa together with
  // D s = (-1)^n N kappa-bar (valid p-locally) gives
  // (-1)^n N (kappa + kappa-bar) = 0, with N = Num(B_p/2p).
  std::string num_bernoulli;            // Num(B_p/2p)
  std::string denom_bernoulli;          // Denom(B_p/2p)
  bool numerator_is_p_unit = false;     // so the relation forces kappa = -kappa-bar mod p
  bool rational_signs_consistent = false;  // (-1)^(n-1) kappa = (-1)^n kappa-bar given kappa-bar = -kappa
  bool conjecture_forces_equality = false;

  bool conjecture_fails = false;

  // (e) Reported, not computed.
  std::int64_t genus_threshold = 0;  // 8p - 3

  std::vector<std::string> notes;
};

/// Machine-checked counterexample for an odd prime p. Throws DomainError
/// for p = 2 (unsupported) or non-prime p.
AkitaCertificate akita_counterexample(std::uint64_t p);

}  // namespace irr::dyerlashof

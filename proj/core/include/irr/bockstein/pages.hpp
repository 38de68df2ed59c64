#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "irr/bockstein/fp_matrix.hpp"

namespace irr::bockstein {

enum class ModelKind {
  Type1,  // P{y} (x) E{x}, d^1 y = x, deg x = deg y - 1
  Type2,  // E{z} (x) P{y}, d^1 z = y, deg z = deg y + 1
};

std::string to_string(ModelKind kind);

/// y^y_exp times the odd generator (x for TYPE1, z for TYPE2) when `odd`.
struct Monomial {
  std::int64_t y_exp = 0;
  bool odd = false;

  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// One of the two model differential algebras over F_p, truncated at
/// max_degree. Homological grading: differentials lower degree by one.
struct ModelDGA {
  ModelKind kind = ModelKind::Type1;
  std::uint64_t p = 3;
  std::int64_t deg_even_gen = 2;  // deg y
  std::int64_t max_degree = 0;    // D

  std::int64_t odd_gen_degree() const { return kind == ModelKind::Type1 ? deg_even_gen - 1 : deg_even_gen + 1; }
  std::int64_t degree(const Monomial& m) const { return m.y_exp * deg_even_gen + (m.odd ? odd_gen_degree() : 0); }
  std::string name(const Monomial& m) const;

  /// All monomials of degree <= max_degree, grouped by degree.
  std::vector<std::vector<Monomial>> basis_by_degree() const;
};

/// Throws DomainError for odd or non-positive deg, D < deg, or p not an
/// odd prime.
ModelDGA build_model(ModelKind kind, std::uint64_t p, std::int64_t deg, std::int64_t max_degree);

/// The differential on a page, in terms of page generators
/// P = y^poly_exp and O = y^odd_exp * (x or z):
///   TYPE1: d(P^m) = m P^(m-1) O, d(P^m O) = 0
///   TYPE2: d(O P^m) = P^(m+1),   d(P^m) = 0
/// or identically zero.
struct PageRule {
  ModelKind kind = ModelKind::Type1;
  bool zero = false;
  std::int64_t poly_exp = 1;
  std::int64_t odd_exp = 0;

  /// Image (monomial, coefficient) of a basis monomial; nullopt when the
  /// image is zero. Sets `expressible` to false when the monomial is not a
  /// product of page generators.
  std::optional<std::pair<Monomial, std::int64_t>> apply(const Monomial& m, bool& expressible) const;
  std::string describe(const ModelDGA& model) const;
};

/// One page E^r with its differential d^r, reliable through valid_degree.
struct PageBasis {
  int page_index = 1;
  std::int64_t valid_degree = 0;
  std::vector<std::vector<Monomial>> basis_by_degree;
  /// differential[q]: C_q -> C_(q-1); rows index basis_by_degree[q-1].
  std::vector<FpMatrix> differential;
  PageRule rule;
  /// Survivors the installed rule cannot be applied to, or whose image is
  /// not itself a survivor.
  std::vector<Monomial> inconsistencies;
  /// Homology classes without a monomial representative (none expected).
  bool monomial_homology = true;

  std::size_t dimension(std::int64_t degree) const;
  bool contains(const Monomial& m, const ModelDGA& model) const;
};

/// Pages E^1..E^r_max. E^1 is the model with d^1; each E^(r+1) is the
/// homology of E^r computed by row reduction over F_p, carrying the
/// differential installed from the closed-form generator rule
/// d^(r+1)(y^(p^r)) = y^(p^r - 1) x. Requires r_max >= 1.
std::vector<PageBasis> compute_pages(const ModelDGA& model, int r_max);

/// d o d = 0 on every degree of the page.
bool squares_to_zero(const PageBasis& page);

/// sum_(q <= up_to) (-1)^q dim E^r_q.
std::int64_t euler_characteristic(const PageBasis& page, std::int64_t up_to);

struct PageRow {
  int page = 0;
  std::int64_t degree = 0;
  std::size_t computed_dim = 0;
  std::size_t predicted_dim = 0;
  bool match = false;
};

struct PageReport {
  ModelDGA model;
  int r_max = 0;
  std::vector<PageRow> rows;
  bool dimensions_match = false;
  bool differentials_match = false;  // source and target of d^(r+1)(y^(p^r)) both survive
  bool consistent = false;           // no inconsistencies, monomial homology, d o d = 0
  /// Degrees where the variant exponent p^(r-1) on the exterior generator
  /// would disagree with the computation.
  std::size_t alt_exponent_mismatches = 0;
  bool pass = false;
  std::vector<std::string> notes;
};

/// Predicted dim of E^(r+1)_q from P{y^(p^r)} (x) E{y^(e) x} with
/// e = p^r - 1 (TYPE1), or Z/p in degree 0 (TYPE2, r >= 1).
std::size_t predicted_dimension(const ModelDGA& model, int r, std::int64_t degree,
                                std::int64_t exterior_exponent);

/// Compares E^(r+1) for r = 1..r_max against the closed form in every
/// reliable degree.
PageReport verify_page_formula(const ModelDGA& model, int r_max);

}  // namespace irr::bockstein

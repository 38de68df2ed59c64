#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "irr/dyerlashof/dyer_lashof.hpp"

namespace irr::bockstein {

/// All admissible words Q^I(y), y running over classes of the given base
/// degrees, with deg Q^I(y) even and at most max_degree. The empty word (y
/// itself) is included when deg y is even. Ordered by base (input order),
/// then degree, then word length, then entries. Bockstein partners are not
/// assigned. Throws DomainError unless p is an odd prime.
std::vector<dyerlashof::AdmissibleWord> enumerate_e1_generators(std::uint64_t p,
                                                                std::span<const std::int64_t> base_degrees,
                                                                std::int64_t max_degree);

}  // namespace irr::bockstein

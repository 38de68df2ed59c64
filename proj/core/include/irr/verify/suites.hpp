#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "irr/verify/check_report.hpp"

namespace irr::verify {

/// Settings shared by every suite; `all` reads them from a flat JSON config.
struct SuiteConfig {
  std::vector<std::uint64_t> primes{2, 3, 5, 7};
  std::optional<std::int64_t> k;
  std::int64_t n_max = 6;
  std::int64_t truncation = 8;
  std::int64_t deg = 2;
  std::int64_t pages = 3;
  std::optional<std::int64_t> max_deg;  // default 2 * deg * p^3
  bool timing = false;
};

/// Parses the flat JSON object {"prime": 3 | [2,3], "k": 5, "n-max": 6,
/// "truncation": 8, "deg": 2, "pages": 3, "max-deg": 60, "timing": false}.
/// Unknown keys or wrong types throw UsageError.
SuiteConfig parse_config(const std::string& json_text);
SuiteConfig load_config(const std::string& path);

/// B_1..B_n_max, Num/Denom(B_n/2n), and the generating-series round trip.
std::vector<CheckReport> run_bernoulli(std::int64_t n_max);

/// For n <= n_max: the r^k eigenvalue against its closed form, the
/// denominator valuation step, and the assembled coefficient identity.
std::vector<CheckReport> run_theorem_a(std::uint64_t p, std::int64_t n_max, std::optional<std::int64_t> k);

/// r^k eigenvalues for n <= n_max, each at two truncations.
std::vector<CheckReport> run_eigenvalue(std::uint64_t p, std::int64_t n_max, std::optional<std::int64_t> k);

/// The counterexample certificate, one row per component. p must be odd.
std::vector<CheckReport> run_akita(std::uint64_t p);

/// theta integrality sweep, closed-form sign, and l_(p) evaluation.
std::vector<CheckReport> run_artin_hasse(std::uint64_t p, std::int64_t truncation);

/// Page-by-page comparison for both model types. max_deg defaults to
/// 2 * deg * p^3.
std::vector<CheckReport> run_bockstein(std::uint64_t p, std::int64_t deg, std::int64_t pages,
                                       std::optional<std::int64_t> max_deg);

/// Every suite over the configured primes; suites run concurrently, rows
/// come back sorted.
std::vector<CheckReport> run_all(const SuiteConfig& config);

}  // namespace irr::verify

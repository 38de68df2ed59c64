#pragma once

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <nlohmann/json.hpp>

#include "irr/polyring/cohclass.hpp"
#include "irr/polyring/kclass.hpp"

namespace irr::verify {

/// Bad flags, bad parameter combinations or an unreadable config (exit 2).
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Status { Pass, Fail, Error };

std::string to_string(Status status);

using ParamValue = std::variant<std::int64_t, std::string>;
using Parameters = std::map<std::string, ParamValue>;

/// One verified identity. status is PASS iff lhs == rhs, or, for checks
/// whose outcome is a verdict, iff the verdict holds.
struct CheckReport {
  std::string check_name;
  Parameters parameters;
  Status status = Status::Error;
  std::string lhs;
  std::string rhs;
  std::vector<std::string> notes;
  std::int64_t elapsed_ms = 0;
  /// Which mathematical statement the row audits, in words.
  std::string anchor;
};

/// PASS iff lhs == rhs.
CheckReport compare_report(std::string check_name, Parameters parameters, std::string lhs, std::string rhs,
                           std::string anchor);
/// PASS iff verdict.
CheckReport verdict_report(std::string check_name, Parameters parameters, bool verdict, std::string lhs,
                           std::string rhs, std::string anchor);

/// Orders rows by (check_name, parameters).
void sort_reports(std::vector<CheckReport>& reports);

/// 0 if every row passes, 1 otherwise (including an empty list: 0).
int exit_code(const std::vector<CheckReport>& reports);

nlohmann::json to_json(const CheckReport& report);
nlohmann::json to_json(const std::vector<CheckReport>& reports);
CheckReport report_from_json(const nlohmann::json& j);

/// {"claim": "...", "coeffs": ["a/b", ...], "truncation": N}
nlohmann::json to_json(const KClass& f);
KClass kclass_from_json(const nlohmann::json& j);
/// {"coeffs": [...], "truncation": N}
nlohmann::json to_json(const CohClass& c);
CohClass cohclass_from_json(const nlohmann::json& j);

/// Fixed-width text table, one line per row.
std::string format_table(const std::vector<CheckReport>& reports);

}  // namespace irr::verify

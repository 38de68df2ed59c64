#include "irr/verify/check_report.hpp"

#include <algorithm>
#include <sstream>

namespace irr::verify {

std::string to_string(Status status) {
  switch (status) {
    case Status::Pass:
      return "PASS";
    case Status::Fail:
      return "FAIL";
    case Status::Error:
      return "ERROR";
  }
  return "ERROR";
}

namespace {

Status status_from_string(const std::string& s) {
  if (s == "PASS") return Status::Pass;
  if (s == "FAIL") return Status::Fail;
  if (s == "ERROR") return Status::Error;
  throw UsageError("unknown status '" + s + "'");
}

std::string param_to_string(const ParamValue& v) {
  return std::visit(
      [](const auto& x) -> std::string {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, std::string>) return x;
        else return std::to_string(x);
      },
      v);
}

}  // namespace

CheckReport compare_report(std::string check_name, Parameters parameters, std::string lhs, std::string rhs,
                           std::string anchor) {
  CheckReport r;
  r.check_name = std::move(check_name);
  r.parameters = std::move(parameters);
  r.status = lhs == rhs ? Status::Pass : Status::Fail;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.anchor = std::move(anchor);
  return r;
}

CheckReport verdict_report(std::string check_name, Parameters parameters, bool verdict, std::string lhs,
                           std::string rhs, std::string anchor) {
  CheckReport r;
  r.check_name = std::move(check_name);
  r.parameters = std::move(parameters);
  r.status = verdict ? Status::Pass : Status::Fail;
  r.lhs = std::move(lhs);
  r.rhs = std::move(rhs);
  r.anchor = std::move(anchor);
  return r;
}

void sort_reports(std::vector<CheckReport>& reports) {
  std::stable_sort(reports.begin(), reports.end(), [](const CheckReport& a, const CheckReport& b) {
    if (a.check_name != b.check_name) return a.check_name < b.check_name;
    return a.parameters < b.parameters;
  });
}

int exit_code(const std::vector<CheckReport>& reports) {
  return std::all_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == Status::Pass; })
             ? 0
             : 1;
}

nlohmann::json to_json(const CheckReport& report) {
  nlohmann::json params = nlohmann::json::object();
  for (const auto& [key, value] : report.parameters)
    std::visit([&](const auto& x) { params[key] = x; }, value);
  return nlohmann::json{{"anchor", report.anchor},
                        {"check_name", report.check_name},
                        {"elapsed_ms", report.elapsed_ms},
                        {"lhs", report.lhs},
                        {"notes", report.notes},
                        {"parameters", params},
                        {"rhs", report.rhs},
                        {"status", to_string(report.status)}};
}

nlohmann::json to_json(const std::vector<CheckReport>& reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) out.push_back(to_json(r));
  return out;
}

CheckReport report_from_json(const nlohmann::json& j) {
  CheckReport r;
  r.anchor = j.at("anchor").get<std::string>();
  r.check_name = j.at("check_name").get<std::string>();
  r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
  r.lhs = j.at("lhs").get<std::string>();
  r.rhs = j.at("rhs").get<std::string>();
  r.notes = j.at("notes").get<std::vector<std::string>>();
  r.status = status_from_string(j.at("status").get<std::string>());
  for (const auto& [key, value] : j.at("parameters").items()) {
    if (value.is_number_integer()) r.parameters[key] = value.get<std::int64_t>();
    else r.parameters[key] = value.get<std::string>();
  }
  return r;
}

nlohmann::json to_json(const KClass& f) {
  std::vector<std::string> coeffs;
  for (const auto& c : f.coeffs()) coeffs.push_back(c.to_string());
  return nlohmann::json{{"claim", f.claim().to_string()}, {"coeffs", coeffs}, {"truncation", f.truncation()}};
}

KClass kclass_from_json(const nlohmann::json& j) {
  std::vector<Fraction> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(Fraction::parse(c.get<std::string>()));
  return KClass(j.at("truncation").get<std::size_t>(), std::move(coeffs),
                DomainClaim::parse(j.at("claim").get<std::string>()));
}

nlohmann::json to_json(const CohClass& c) {
  std::vector<std::string> coeffs;
  for (const auto& x : c.coeffs()) coeffs.push_back(x.to_string());
  return nlohmann::json{{"coeffs", coeffs}, {"truncation", c.truncation()}};
}

CohClass cohclass_from_json(const nlohmann::json& j) {
  std::vector<Fraction> coeffs;
  for (const auto& c : j.at("coeffs")) coeffs.push_back(Fraction::parse(c.get<std::string>()));
  return CohClass(j.at("truncation").get<std::size_t>(), std::move(coeffs));
}

std::string format_table(const std::vector<CheckReport>& reports) {
  std::ostringstream os;
  for (const auto& r : reports) {
    std::string params;
    for (const auto& [key, value] : r.parameters) {
      if (!params.empty()) params += " ";
      params += key + "=" + param_to_string(value);
    }
    os << "[" << to_string(r.status) << "] " << r.check_name;
    if (!params.empty()) os << " (" << params << ")";
    os << "  lhs=" << r.lhs << "  rhs=" << r.rhs;
    if (r.elapsed_ms > 0) os << "  " << r.elapsed_ms << "ms";
    os << "\n";
    for (const auto& note : r.notes) os << "    note: " << note << "\n";
  }
  return os.str();
}

}  // namespace irr::verify

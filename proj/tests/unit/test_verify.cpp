#include <doctest.h>

#include "generators.hpp"
#include "irr/verify/check_report.hpp"
#include "irr/verify/suites.hpp"

namespace v = irr::verify;

namespace {

bool has_note(const std::vector<v::CheckReport>& rows, const std::string& fragment) {
  for (const auto& r : rows)
    for (const auto& n : r.notes)
      if (n.find(fragment) != std::string::npos) return true;
  return false;
}

bool all_pass(const std::vector<v::CheckReport>& rows) { return !rows.empty() && v::exit_code(rows) == 0; }

}  // namespace

TEST_CASE("CheckReport JSON round trip and key order") {
  v::CheckReport r = v::compare_report("demo", {{"p", std::int64_t{3}}, {"kind", std::string("TYPE1")}}, "2/3", "2/3",
                                       "anchor text");
  r.notes.push_back("a note");
  const auto j = v::to_json(r);
  CHECK(j.dump() ==
        R"({"anchor":"anchor text","check_name":"demo","elapsed_ms":0,"lhs":"2/3","notes":["a note"],)"
        R"("parameters":{"kind":"TYPE1","p":3},"rhs":"2/3","status":"PASS"})");
  const auto back = v::report_from_json(j);
  CHECK(v::to_json(back) == j);
  CHECK(v::compare_report("x", {}, "1/1", "2/1", "").status == v::Status::Fail);
}

TEST_CASE("class JSON round trip") {
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = gen::rational_class(6);
    CHECK(v::kclass_from_json(v::to_json(f)) == f);
    CHECK(v::kclass_from_json(v::to_json(f)).claim() == f.claim());
  }
  const irr::CohClass c(2, {1, irr::Fraction(irr::Integer(1), irr::Integer(2)), 0});
  CHECK(v::cohclass_from_json(v::to_json(c)) == c);
}

TEST_CASE("exit codes and ordering") {
  std::vector<v::CheckReport> rows{v::compare_report("b", {}, "1", "1", ""),
                                   v::compare_report("a", {{"n", std::int64_t{10}}}, "1", "1", ""),
                                   v::compare_report("a", {{"n", std::int64_t{2}}}, "1", "1", "")};
  v::sort_reports(rows);
  CHECK(rows[0].check_name == "a");
  CHECK(std::get<std::int64_t>(rows[0].parameters.at("n")) == 2);
  CHECK(v::exit_code(rows) == 0);
  rows.push_back(v::verdict_report("c", {}, false, "", "", ""));
  CHECK(v::exit_code(rows) == 1);
}

TEST_CASE("config parsing") {
  const auto c = v::parse_config(R"({"prime": [3, 5], "n-max": 4, "k": 7, "timing": true})");
  CHECK(c.primes == std::vector<std::uint64_t>{3, 5});
  CHECK(c.n_max == 4);
  CHECK(c.k == 7);
  CHECK(c.timing);
  CHECK(v::parse_config(R"({"prime": 7})").primes == std::vector<std::uint64_t>{7});
  CHECK(v::parse_config("{}").truncation == 8);
  CHECK_THROWS_AS(v::parse_config(R"({"colour": 1})"), v::UsageError);
  CHECK_THROWS_AS(v::parse_config(R"({"n-max": "six"})"), v::UsageError);
  CHECK_THROWS_AS(v::parse_config(R"({"prime": 4})"), v::UsageError);
  CHECK_THROWS_AS(v::parse_config("[1, 2]"), v::UsageError);
  CHECK_THROWS_AS(v::parse_config("{"), v::UsageError);
  CHECK_THROWS_AS(v::load_config("/nonexistent/config.json"), v::UsageError);
}

TEST_CASE("suite examples") {
  const auto bern = v::run_bernoulli(2);
  CHECK(all_pass(bern));
  CHECK(has_note(v::run_bernoulli(1), "Denom(B_1/2) = 12"));
  CHECK_THROWS_AS(v::run_bernoulli(0), v::UsageError);

  CHECK(all_pass(v::run_theorem_a(3, 2, std::nullopt)));
  const auto two = v::run_theorem_a(2, 1, std::nullopt);
  CHECK(all_pass(two));
  CHECK(has_note(two, "extra factor of 2"));
  CHECK_THROWS_AS(v::run_theorem_a(3, 2, 3), v::UsageError);
  CHECK_THROWS_AS(v::run_theorem_a(4, 2, std::nullopt), v::UsageError);

  CHECK(all_pass(v::run_eigenvalue(5, 3, std::nullopt)));

  const auto akita = v::run_akita(5);
  CHECK(all_pass(akita));
  bool saw_pairing = false;
  for (const auto& r : akita)
    if (r.check_name == "akita.kappa_bar_pairing") saw_pairing = r.lhs == "4 mod 5";
  CHECK(saw_pairing);
  CHECK_THROWS_AS(v::run_akita(2), v::UsageError);

  const auto ah = v::run_artin_hasse(3, 8);
  CHECK(all_pass(ah));
  CHECK(has_note(ah, "computed l(x) = x - psi^p(x)"));
  CHECK(all_pass(v::run_artin_hasse(2, 6)));
  CHECK(all_pass(v::run_artin_hasse(3, 0)));

  CHECK(all_pass(v::run_bockstein(3, 2, 3, 60)));
  CHECK_THROWS_AS(v::run_bockstein(3, 3, 3, std::nullopt), v::UsageError);
}

TEST_CASE("run_all is green and byte-stable") {
  const v::SuiteConfig config;
  const auto first = v::run_all(config);
  CHECK(v::exit_code(first) == 0);
  CHECK(v::to_json(first).dump() == v::to_json(v::run_all(config)).dump());
}

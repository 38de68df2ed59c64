// irrcheck: runs the verification suites and prints CheckReport rows.
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "irr/errors.hpp"
#include "irr/verify/suites.hpp"

namespace {

using irr::verify::CheckReport;
using irr::verify::SuiteConfig;
using irr::verify::UsageError;

struct Options {
  std::vector<std::uint64_t> primes;
  std::optional<std::int64_t> k;
  std::optional<std::int64_t> n_max;
  std::optional<std::int64_t> truncation;
  std::optional<std::int64_t> deg;
  std::optional<std::int64_t> pages;
  std::optional<std::int64_t> max_deg;
  std::string config_path;
  bool json = false;
  bool timing = false;
};

void add_common(CLI::App* cmd, Options& o) {
  cmd->add_flag("--json", o.json, "emit a JSON array instead of a table");
  cmd->add_flag("--timing", o.timing, "record elapsed_ms per row (output no longer byte-stable)");
  cmd->add_option("--config", o.config_path, "flat JSON object with the same keys as the flags");
}

// Flags override the config file, which overrides the defaults.
SuiteConfig resolve(const Options& o) {
  SuiteConfig c = o.config_path.empty() ? SuiteConfig{} : irr::verify::load_config(o.config_path);
  if (!o.primes.empty()) c.primes = o.primes;
  if (o.k) c.k = o.k;
  if (o.n_max) c.n_max = *o.n_max;
  if (o.truncation) c.truncation = *o.truncation;
  if (o.deg) c.deg = *o.deg;
  if (o.pages) c.pages = *o.pages;
  if (o.max_deg) c.max_deg = o.max_deg;
  if (o.timing) c.timing = true;
  return c;
}

std::uint64_t single_prime(const SuiteConfig& c) {
  if (c.primes.size() != 1) throw UsageError("this subcommand takes exactly one --prime");
  return c.primes.front();
}

template <class F>
std::vector<CheckReport> timed(bool timing, F&& run) {
  const auto start = std::chrono::steady_clock::now();
  auto rows = run();
  if (timing) {
    const auto ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
    for (auto& r : rows) r.elapsed_ms = ms;
  }
  irr::verify::sort_reports(rows);
  return rows;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification of the integral Riemann-Roch identities"};
  app.require_subcommand(1);
  Options o;

  auto* bern = app.add_subcommand("bernoulli", "Bernoulli table, Num/Denom(B_n/2n), series round trip");
  bern->add_option("--n-max", o.n_max);

  auto* thm = app.add_subcommand("theorem-a", "eigenvalue, denominator valuation and coefficient identity");
  auto* eig = app.add_subcommand("eigenvalue", "r^k eigenvalues on odd primitives");
  for (auto* cmd : {thm, eig}) {
    cmd->add_option("--prime", o.primes)->expected(1);
    cmd->add_option("--k", o.k);
    cmd->add_option("--n-max", o.n_max);
  }

  auto* akita = app.add_subcommand("akita", "pairing certificate refuting the integral conjecture");
  akita->add_option("--prime", o.primes)->expected(1);

  auto* ah = app.add_subcommand("artin-hasse", "theta integrality, closed-form sign, double loop");
  ah->add_option("--prime", o.primes)->expected(1);
  ah->add_option("--truncation", o.truncation);

  auto* bock = app.add_subcommand("bockstein", "Bockstein pages of the model algebras");
  bock->add_option("--prime", o.primes)->expected(1);
  bock->add_option("--deg", o.deg);
  bock->add_option("--pages", o.pages);
  bock->add_option("--max-deg", o.max_deg);

  auto* all = app.add_subcommand("all", "every suite over the configured primes");
  all->add_option("--prime", o.primes, "repeatable");
  all->add_option("--k", o.k);
  all->add_option("--n-max", o.n_max);
  all->add_option("--truncation", o.truncation);
  all->add_option("--deg", o.deg);
  all->add_option("--pages", o.pages);
  all->add_option("--max-deg", o.max_deg);

  for (auto* cmd : {bern, thm, eig, akita, ah, bock, all}) add_common(cmd, o);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  std::vector<CheckReport> rows;
  try {
    const SuiteConfig c = resolve(o);
    if (*bern) {
      rows = timed(c.timing, [&] { return irr::verify::run_bernoulli(c.n_max); });
    } else if (*thm) {
      rows = timed(c.timing, [&] { return irr::verify::run_theorem_a(single_prime(c), c.n_max, c.k); });
    } else if (*eig) {
      rows = timed(c.timing, [&] { return irr::verify::run_eigenvalue(single_prime(c), c.n_max, c.k); });
    } else if (*akita) {
      rows = timed(c.timing, [&] { return irr::verify::run_akita(single_prime(c)); });
    } else if (*ah) {
      rows = timed(c.timing, [&] { return irr::verify::run_artin_hasse(single_prime(c), c.truncation); });
    } else if (*bock) {
      rows = timed(c.timing, [&] { return irr::verify::run_bockstein(single_prime(c), c.deg, c.pages, c.max_deg); });
    } else {
      rows = irr::verify::run_all(c);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const irr::DomainError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  if (o.json) std::cout << irr::verify::to_json(rows).dump(2) << "\n";
  else std::cout << irr::verify::format_table(rows);
  return irr::verify::exit_code(rows);
}

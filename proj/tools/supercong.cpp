// supercong: sweep verification suites over primes and parameter grids.
//
//   supercong verify theorem1 --primes 3..13 --rst 1..2 --output json
//   supercong scan open-question --primes 5..31 --dims 2..4

#include <CLI11.hpp>

#include <cstdlib>
#include <iostream>
#include <optional>
#include <string>

#include "supercong/errors.hpp"
#include "supercong/suite.hpp"

namespace {

using supercong::ConfigError;

template <typename T>
std::optional<T> env_number(const char* name) {
  const char* raw = std::getenv(name);
  if (raw == nullptr || *raw == '\0') {
    return std::nullopt;
  }
  try {
    std::size_t used = 0;
    const unsigned long long value = std::stoull(raw, &used);
    if (used != std::string(raw).size()) {
      throw std::invalid_argument(raw);
    }
    return static_cast<T>(value);
  } catch (const std::exception&) {
    throw ConfigError(std::string(name) + " must be a non-negative integer");
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Prime-sweep verification of binomial-sum supercongruences"};
  app.require_subcommand(1);

  supercong::SuiteConfig config;
  supercong::ScanConfig scan;
  std::string suite = "all";
  std::string primes = "3..13";
  std::string rst = "1..2";
  std::string prop7_dims = "4..5";
  std::string output = "table";
  std::string scan_primes = "3..13";
  std::string dims = "2..4";
  std::optional<std::uint32_t> jobs;
  std::optional<std::uint64_t> budget;

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite,
                     "identities, congruences, theorem1, theoremTT, section5, section6, wz, abelian, "
                     "decomposition or all")
      ->capture_default_str();
  verify->add_option("--primes", primes, "Inclusive prime range lo..hi")->capture_default_str();
  verify->add_option("--n-max", config.n_max, "Size cap for identities, WZ pairs and abelian squares")
      ->capture_default_str();
  verify->add_option("--rst", rst, "Radius range for the triple and double sums")->capture_default_str();
  verify->add_option("--ij-max", config.ij_max, "Block index cap for shifted binomials and the decomposition")
      ->capture_default_str();
  verify->add_option("--prop7-dims", prop7_dims, "Dimension range of the n-fold multinomial sums")
      ->capture_default_str();
  verify->add_option("--jobs,-j", jobs, "Worker threads (env SUPERCONG_JOBS)");
  verify->add_option("--term-budget", budget, "Largest box an oracle may enumerate (env SUPERCONG_TERM_BUDGET)");
  verify->add_option("--output,-o", output, "table, json or csv")->capture_default_str();
  verify->add_flag("--fail-fast", config.fail_fast, "Stop after the first failing check");
  verify->add_flag("--timing", config.timing, "Record wall time per check (output is then not reproducible)");
  verify->add_flag("--explore-double-binom", config.explore_double_binom,
                   "Also evaluate the double binomial identity at every n <= n-max");

  auto* scan_cmd = app.add_subcommand("scan", "Exploratory scans that assert nothing");
  auto* open_question = scan_cmd->add_subcommand("open-question", "Truncated versus full squared multinomial sums mod p");
  scan_cmd->require_subcommand(1);
  open_question->add_option("--primes", scan_primes, "Inclusive prime range lo..hi")->capture_default_str();
  open_question->add_option("--dims", dims, "Dimension range")->capture_default_str();
  open_question->add_option("--jobs,-j", jobs, "Worker threads (env SUPERCONG_JOBS)");
  open_question->add_option("--term-budget", budget, "Largest box an oracle may enumerate");
  open_question->add_option("--output,-o", output, "table, json or csv")->capture_default_str();
  open_question->add_flag("--timing", scan.timing, "Record wall time per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    const auto env_jobs = env_number<std::uint32_t>("SUPERCONG_JOBS");
    const auto env_budget = env_number<std::uint64_t>("SUPERCONG_TERM_BUDGET");
    const std::uint32_t job_count = jobs.value_or(env_jobs.value_or(1));
    const std::uint64_t term_budget = budget.value_or(env_budget.value_or(supercong::kDefaultTermBudget));
    const supercong::OutputFormat format = supercong::output_from_string(output);

    if (verify->parsed()) {
      config.suite = supercong::suite_from_string(suite);
      config.primes = supercong::parse_range(primes);
      config.rst = supercong::parse_range(rst);
      config.prop7_dims = supercong::parse_range(prop7_dims);
      config.jobs = job_count;
      config.term_budget = term_budget;
      config.output = format;
      return supercong::run_suite(config, std::cout, std::cerr);
    }
    scan.primes = supercong::parse_range(scan_primes);
    scan.dims = supercong::parse_range(dims);
    scan.jobs = job_count;
    scan.term_budget = term_budget;
    scan.output = format;
    return supercong::run_open_question_scan(scan, std::cout, std::cerr);
  } catch (const ConfigError& e) {
    std::cerr << "configuration error: " << e.what() << '\n';
    return 2;
  }
}

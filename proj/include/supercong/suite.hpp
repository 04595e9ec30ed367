#pragma once

#include <cstdint>
#include <functional>
#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "supercong/report.hpp"
#include "supercong/theorems.hpp"

namespace supercong {

enum class SuiteId { identities, congruences, theorem1, theoremTT, section5, section6, wz, abelian, decomposition, all };

std::string_view to_string(SuiteId id);
/// Throws ConfigError.
SuiteId suite_from_string(std::string_view name);

enum class OutputFormat { table, json, csv };

std::string_view to_string(OutputFormat format);
OutputFormat output_from_string(std::string_view name);

/// Inclusive integer range written "lo..hi" (or a single "n").
struct Range {
  std::int64_t lo = 0;
  std::int64_t hi = 0;

  friend bool operator==(const Range&, const Range&) = default;
};

/// Throws ConfigError on malformed text.
Range parse_range(std::string_view text);

struct SuiteConfig {
  SuiteId suite = SuiteId::all;
  Range primes{3, 13};
  std::uint32_t n_max = 30;
  Range rst{1, 2};
  std::uint32_t ij_max = 2;
  Range prop7_dims{4, 5};
  std::uint32_t jobs = 1;
  std::uint64_t term_budget = kDefaultTermBudget;
  OutputFormat output = OutputFormat::table;
  bool fail_fast = false;
  bool timing = false;
  bool explore_double_binom = false;
};

/// Throws ConfigError.
void validate(const SuiteConfig& config);

struct Task {
  std::string suite;
  std::string check_id;
  std::uint64_t prime = 0;
  Params params;
  std::function<CheckReport()> run;
};

/// Every check of the configured suite, in canonical order
/// (suite, check id, prime, params).
std::vector<Task> plan_suite(const SuiteConfig& config);

/// Runs tasks on `jobs` threads and returns reports in task order. A check
/// that throws becomes a failing report carrying the message. With fail_fast
/// no task after the first failure (in task order) is reported.
std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks, std::uint32_t jobs, bool fail_fast, bool timing);

void write_reports(std::ostream& out, const std::vector<CheckReport>& reports, OutputFormat format);

/// 0 when every report passes (info counts as passing), 1 otherwise.
int exit_status(const std::vector<CheckReport>& reports);

/// Validates, plans, runs and writes. Returns 0, 1, or 2 on configuration error.
int run_suite(const SuiteConfig& config, std::ostream& out, std::ostream& diag);

struct ScanConfig {
  Range primes{3, 13};
  Range dims{2, 4};
  std::uint32_t jobs = 1;
  std::uint64_t term_budget = kDefaultTermBudget;
  OutputFormat output = OutputFormat::table;
  bool timing = false;
};

/// Exploratory residues of the truncated versus full squared sums.
int run_open_question_scan(const ScanConfig& config, std::ostream& out, std::ostream& diag);

}  // namespace supercong

#include "supercong/suite.hpp"

#include <algorithm>
#include <array>
#include <atomic>
#include <charconv>
#include <chrono>
#include <iomanip>
#include <mutex>
#include <ostream>
#include <sstream>
#include <thread>
#include <tuple>

#include <json.hpp>

#include "supercong/congruences.hpp"
#include "supercong/identities.hpp"
#include "supercong/wz.hpp"

namespace supercong {

namespace {

constexpr std::array<std::string_view, 10> kSuiteNames = {
    "identities", "congruences", "theorem1", "theoremTT", "section5",
    "section6",   "wz",          "abelian",  "decomposition", "all"};

constexpr std::int64_t kMaxPrime = 1 << 20;  // keeps p^3 inside a 64-bit residue

std::vector<std::uint32_t> primes_in(Range range, std::uint32_t min_prime = 3) {
  std::vector<std::uint32_t> out;
  for (std::int64_t p = std::max<std::int64_t>(range.lo, min_prime); p <= range.hi; ++p) {
    if (is_prime(static_cast<std::uint64_t>(p))) {
      out.push_back(static_cast<std::uint32_t>(p));
    }
  }
  return out;
}

class Planner {
 public:
  explicit Planner(const SuiteConfig& config) : config_(config) {}

  void add(std::string suite, std::string check_id, std::uint64_t prime, Params params,
           std::function<CheckReport()> run) {
    tasks_.push_back({std::move(suite), std::move(check_id), prime, std::move(params), std::move(run)});
  }

  std::vector<Task> finish() {
    std::stable_sort(tasks_.begin(), tasks_.end(), [](const Task& a, const Task& b) {
      return std::tie(a.suite, a.check_id, a.prime, a.params) < std::tie(b.suite, b.check_id, b.prime, b.params);
    });
    return std::move(tasks_);
  }

  void identities() {
    const std::int64_t n_max = config_.n_max;
    for (const IdentityId id : all_identities()) {
      const std::string name(to_string(id));
      auto check = [this, &name, id](Params params) {
        add("identities", name, 0, params, [id, params] { return check_identity(id, params); });
      };
      switch (id) {
        case IdentityId::DOUBLE_BINOM:
          for (const std::uint32_t p : primes_in(config_.primes)) {
            add("identities", name, p, Params{{"p", p}},
                [id, p] { return check_identity(id, Params{{"p", p}}); });
          }
          break;
        case IdentityId::INV_BINOM:
          for (std::int64_t k = 0; k <= n_max; ++k) {
            check(Params{{"k", k}});
          }
          break;
        case IdentityId::HOCKEY:
          for (const std::int64_t big_m : spread(n_max)) {
            for (std::int64_t big_n = 0; big_n <= n_max; ++big_n) {
              check(Params{{"M", big_m}, {"N", big_n}});
            }
          }
          break;
        case IdentityId::VANDERMONDE:
          for (std::int64_t b = 0; b <= n_max; ++b) {
            check(Params{{"b", b}});
          }
          break;
        default:
          for (std::int64_t n = 0; n <= n_max; ++n) {
            check(Params{{"n", n}});
          }
      }
    }
    if (config_.explore_double_binom) {
      for (std::uint32_t n = 1; n <= std::max<std::uint32_t>(1, config_.n_max); ++n) {
        add("identities", "DOUBLE_BINOM_EXPLORE", 0, Params{{"n", n}}, [n] { return explore_double_binom(n); });
      }
    }
  }

  void congruences() {
    for (const std::uint32_t p : primes_in(config_.primes)) {
      for (const HarmonicCongruenceSpec& spec : harmonic_congruence_catalog()) {
        if (p < spec.min_prime) {
          continue;
        }
        const HarmonicCongruenceId id = spec.id;
        add("congruences", std::string(to_string(id)), p, {}, [id, p] { return check_harmonic_congruence(id, p); });
      }
      for (const LemmaId id : all_lemmas()) {
        if (p < min_prime(id)) {
          continue;
        }
        for (const Params& params : lemma_parameter_grid(id, p)) {
          add("congruences", std::string(to_string(id)), p, params,
              [id, p, params] { return check_lemma_congruence(id, p, params); });
        }
      }
      for (const CCId id : all_cc()) {
        for (std::uint32_t i = 0; i <= config_.ij_max; ++i) {
          for (std::uint32_t j = 0; j <= config_.ij_max; ++j) {
            for (const Params& extra : cc_parameter_grid(id, p)) {
              Params record{{"i", i}, {"j", j}};
              for (const auto& [key, value] : extra.entries()) {
                record.set(key, value);
              }
              add("congruences", std::string(to_string(id)), p, record,
                  [id, p, i, j, extra] { return check_cc(id, p, i, j, extra); });
            }
          }
        }
      }
    }
  }

  void theorems(bool squared) {
    const std::uint64_t budget = config_.term_budget;
    for (const std::uint32_t p : primes_in(config_.primes)) {
      for_each_rst([&](std::uint32_t r, std::uint32_t s, std::uint32_t t) {
        const Params params{{"r", r}, {"s", s}, {"t", t}};
        if (squared) {
          add("theoremTT", "THEOREM_TT", p, params, [=] { return verify_theoremTT(p, r, s, t, budget); });
        } else {
          add("theorem1", "THEOREM1", p, params, [=] { return verify_theorem1(p, r, s, t, budget); });
        }
      });
    }
  }

  void decomposition() {
    const std::uint64_t budget = config_.term_budget;
    for (const std::uint32_t p : primes_in(config_.primes)) {
      for (std::uint32_t i = 0; i <= config_.ij_max; ++i) {
        for (std::uint32_t j = 0; j <= config_.ij_max; ++j) {
          for (std::int64_t t = config_.rst.lo; t <= config_.rst.hi; ++t) {
            const auto tt = static_cast<std::uint32_t>(t);
            add("decomposition", "DECOMP", p, Params{{"i", i}, {"j", j}, {"t", t}},
                [=] { return decomposition_check(p, i, j, tt); });
          }
        }
      }
      for_each_rst([&](std::uint32_t r, std::uint32_t s, std::uint32_t t) {
        add("decomposition", "DECOMP_TOTAL", p, Params{{"r", r}, {"s", s}, {"t", t}},
            [=] { return decomposition_total_check(p, r, s, t, budget); });
      });
    }
  }

  void section5() {
    for (const std::uint32_t p : primes_in(config_.primes)) {
      for (const Section5Id id : all_section5()) {
        const std::string name(to_string(id));
        if (id == Section5Id::NEWS2_2) {
          for (std::uint32_t b = 0; b <= (p - 1) / 2; ++b) {
            add("section5", name, p, Params{{"b", b}}, [=] { return verify_section5_step(id, p, b); });
          }
        } else {
          add("section5", name, p, {}, [=] { return verify_section5_step(id, p); });
        }
      }
    }
  }

  void section6() {
    const std::uint64_t budget = config_.term_budget;
    for (const Section6Id id : all_section6()) {
      const std::string name(to_string(id));
      for (const std::uint32_t p : primes_in(config_.primes, min_prime(id))) {
        auto check = [&](const Params& params) {
          add("section6", name, p, params, [=] { return verify_section6(id, p, params, budget); });
        };
        switch (id) {
          case Section6Id::PLAIN_DOUBLE:
          case Section6Id::SUPER5:
            for (std::int64_t r = config_.rst.lo; r <= config_.rst.hi; ++r) {
              for (std::int64_t s = config_.rst.lo; s <= config_.rst.hi; ++s) {
                check(Params{{"r", r}, {"s", s}});
              }
            }
            break;
          case Section6Id::PROP7:
            for (std::int64_t n = config_.prop7_dims.lo; n <= config_.prop7_dims.hi; ++n) {
              // every radius vector in {1, 2}^n
              for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                Params params{{"n", n}};
                for (std::int64_t d = 0; d < n; ++d) {
                  params.set("r" + std::to_string(d + 1), 1 + ((mask >> d) & 1));
                }
                check(params);
              }
            }
            break;
          default:
            check({});
        }
      }
    }
  }

  void wz() {
    const std::uint32_t n_max = std::max<std::uint32_t>(2, config_.n_max);
    for (const WZPairId id : {WZPairId::FW, WZPairId::TG}) {
      add("wz", std::string(to_string(id)), 0, Params{{"n_max", n_max}}, [=] { return verify_wz(id, n_max); });
    }
  }

  void abelian() {
    for (std::uint32_t alphabet = 1; alphabet <= 3; ++alphabet) {
      for (std::uint32_t n = 0; n <= std::min<std::uint32_t>(config_.n_max, 6); ++n) {
        const Params params{{"alphabet", alphabet}, {"n", n}};
        add("abelian", "ORACLE", 0, params, [=] { return verify_abelian(AbelianId::ORACLE, params); });
      }
    }
    for (std::uint32_t n = 0; n <= config_.n_max; ++n) {
      const Params params{{"n", n}};
      add("abelian", "CENTRAL", 0, params, [=] { return verify_abelian(AbelianId::CENTRAL, params); });
    }
    for (const std::uint32_t p : primes_in(config_.primes)) {
      add("abelian", "PARTIAL_SUM", p, {}, [=] { return verify_abelian(AbelianId::PARTIAL_SUM, Params{{"p", p}}); });
    }
  }

 private:
  template <typename Visit>
  void for_each_rst(Visit visit) const {
    for (std::int64_t r = config_.rst.lo; r <= config_.rst.hi; ++r) {
      for (std::int64_t s = config_.rst.lo; s <= config_.rst.hi; ++s) {
        for (std::int64_t t = config_.rst.lo; t <= config_.rst.hi; ++t) {
          visit(static_cast<std::uint32_t>(r), static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(t));
        }
      }
    }
  }

  static std::vector<std::int64_t> spread(std::int64_t top) {
    std::vector<std::int64_t> values = {0, 1, 2, top / 2, top};
    std::erase_if(values, [top](std::int64_t v) { return v > top; });
    std::sort(values.begin(), values.end());
    values.erase(std::unique(values.begin(), values.end()), values.end());
    return values;
  }

  const SuiteConfig& config_;
  std::vector<Task> tasks_;
};

CheckReport failed_report(const Task& task, const std::string& message) {
  CheckReport report;
  report.suite = task.suite;
  report.check_id = task.check_id;
  report.prime = task.prime;
  report.params = task.params;
  report.status = Status::fail;
  report.note = message;
  return report;
}

CheckReport run_one(const Task& task, bool timing) {
  const auto start = std::chrono::steady_clock::now();
  CheckReport report;
  try {
    report = task.run();
  } catch (const std::exception& e) {
    report = failed_report(task, e.what());
  }
  report.elapsed = timing ? std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
                          : std::chrono::duration<double, std::milli>(0);
  return report;
}

std::string csv_field(const std::string& value) {
  if (value.find_first_of(",\"\n") == std::string::npos) {
    return value;
  }
  std::string quoted = "\"";
  for (const char c : value) {
    if (c == '"') {
      quoted += '"';
    }
    quoted += c;
  }
  return quoted + '"';
}

std::string elapsed_text(const CheckReport& report) {
  std::ostringstream out;
  out << std::fixed << std::setprecision(3) << report.elapsed.count();
  return out.str();
}

std::string modulus_text(const CheckReport& report) {
  if (!report.modulus) {
    return "exact";
  }
  return std::to_string(report.modulus->p()) + "^" + std::to_string(report.modulus->k());
}

void write_json(std::ostream& out, const std::vector<CheckReport>& reports) {
  for (const CheckReport& report : reports) {
    nlohmann::ordered_json record;
    record["suite"] = report.suite;
    record["check_id"] = report.check_id;
    record["prime"] = report.prime == 0 ? nlohmann::ordered_json(nullptr) : nlohmann::ordered_json(report.prime);
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const auto& [key, value] : report.params.entries()) {
      params[key] = value;
    }
    record["params"] = params;
    if (report.modulus) {
      record["modulus"] = {{"p", report.modulus->p()}, {"k", report.modulus->k()}};
    } else {
      record["modulus"] = nullptr;
    }
    record["lhs"] = report.lhs;
    record["rhs"] = report.rhs;
    record["status"] = std::string(to_string(report.status));
    record["elapsed_ms"] = report.elapsed.count();
    if (!report.note.empty()) {
      record["note"] = report.note;
    }
    out << record.dump() << '\n';
  }
}

void write_csv(std::ostream& out, const std::vector<CheckReport>& reports) {
  out << "suite,check_id,prime,params,modulus_p,modulus_k,lhs,rhs,status,elapsed_ms,note\n";
  for (const CheckReport& report : reports) {
    out << csv_field(report.suite) << ',' << csv_field(report.check_id) << ','
        << (report.prime == 0 ? std::string() : std::to_string(report.prime)) << ','
        << csv_field(report.params.flat()) << ','
        << (report.modulus ? std::to_string(report.modulus->p()) : std::string()) << ','
        << (report.modulus ? std::to_string(report.modulus->k()) : std::string()) << ',' << csv_field(report.lhs)
        << ',' << csv_field(report.rhs) << ',' << to_string(report.status) << ',' << elapsed_text(report) << ','
        << csv_field(report.note) << '\n';
  }
}

void write_table(std::ostream& out, const std::vector<CheckReport>& reports) {
  for (const CheckReport& report : reports) {
    out << std::left << std::setw(5) << to_string(report.status) << ' ' << std::setw(14) << report.suite << ' '
        << std::setw(20) << report.check_id << ' ' << std::setw(5)
        << (report.prime == 0 ? std::string("-") : std::to_string(report.prime)) << ' ' << std::setw(24)
        << (report.params.empty() ? std::string("-") : report.params.flat()) << " mod " << modulus_text(report)
        << "  " << report.lhs << " vs " << report.rhs;
    if (!report.note.empty()) {
      out << "  [" << report.note << ']';
    }
    if (report.elapsed.count() > 0) {
      out << "  " << elapsed_text(report) << "ms";
    }
    out << '\n';
  }
}

void summarize(std::ostream& diag, const std::vector<CheckReport>& reports) {
  const auto failed = std::count_if(reports.begin(), reports.end(),
                                    [](const CheckReport& r) { return r.status == Status::fail; });
  diag << reports.size() << " checks, " << failed << " failed\n";
}

void check_range(const Range& range, std::string_view what, std::int64_t floor, std::int64_t ceiling) {
  if (range.lo > range.hi) {
    throw ConfigError(std::string(what) + " range is empty (lo > hi)");
  }
  if (range.lo < floor || range.hi > ceiling) {
    throw ConfigError(std::string(what) + " range must lie in [" + std::to_string(floor) + ", " +
                      std::to_string(ceiling) + "]");
  }
}

}  // namespace

std::string_view to_string(SuiteId id) { return kSuiteNames[static_cast<std::size_t>(id)]; }

SuiteId suite_from_string(std::string_view name) {
  for (std::size_t i = 0; i < kSuiteNames.size(); ++i) {
    if (kSuiteNames[i] == name) {
      return static_cast<SuiteId>(i);
    }
  }
  throw ConfigError("unknown suite '" + std::string(name) + "'");
}

std::string_view to_string(OutputFormat format) {
  switch (format) {
    case OutputFormat::table:
      return "table";
    case OutputFormat::json:
      return "json";
    case OutputFormat::csv:
      return "csv";
  }
  return "table";
}

OutputFormat output_from_string(std::string_view name) {
  for (const OutputFormat format : {OutputFormat::table, OutputFormat::json, OutputFormat::csv}) {
    if (to_string(format) == name) {
      return format;
    }
  }
  throw ConfigError("unknown output format '" + std::string(name) + "'");
}

Range parse_range(std::string_view text) {
  auto number = [&](std::string_view part) {
    std::int64_t value = 0;
    const auto [end, ec] = std::from_chars(part.data(), part.data() + part.size(), value);
    if (part.empty() || ec != std::errc() || end != part.data() + part.size()) {
      throw ConfigError("malformed range '" + std::string(text) + "'");
    }
    return value;
  };
  const std::size_t dots = text.find("..");
  if (dots == std::string_view::npos) {
    const std::int64_t value = number(text);
    return {value, value};
  }
  return {number(text.substr(0, dots)), number(text.substr(dots + 2))};
}

void validate(const SuiteConfig& config) {
  check_range(config.primes, "prime", 0, kMaxPrime);
  check_range(config.rst, "rst", 1, 64);
  check_range(config.prop7_dims, "prop7 dimension", 1, 16);
  if (config.jobs < 1) {
    throw ConfigError("jobs must be at least 1");
  }
  if (config.term_budget < 1) {
    throw ConfigError("term budget must be at least 1");
  }
  if (config.n_max > 100000) {
    throw ConfigError("n-max must be at most 100000");
  }
  if (config.ij_max > 64) {
    throw ConfigError("ij-max must be at most 64");
  }
}

std::vector<Task> plan_suite(const SuiteConfig& config) {
  Planner planner(config);
  const bool all = config.suite == SuiteId::all;
  auto selected = [&](SuiteId id) { return all || config.suite == id; };
  if (selected(SuiteId::identities)) planner.identities();
  if (selected(SuiteId::congruences)) planner.congruences();
  if (selected(SuiteId::theorem1)) planner.theorems(false);
  if (selected(SuiteId::theoremTT)) planner.theorems(true);
  if (selected(SuiteId::section5)) planner.section5();
  if (selected(SuiteId::section6)) planner.section6();
  if (selected(SuiteId::wz)) planner.wz();
  if (selected(SuiteId::abelian)) planner.abelian();
  if (selected(SuiteId::decomposition)) planner.decomposition();
  return planner.finish();
}

std::vector<CheckReport> run_tasks(const std::vector<Task>& tasks, std::uint32_t jobs, bool fail_fast, bool timing) {
  std::vector<CheckReport> results(tasks.size());
  std::vector<char> done(tasks.size(), 0);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> first_failure{tasks.size()};

  // Indices are claimed in increasing order, so every task before the first
  // failure has been claimed by the time workers observe it and will finish.
  auto worker = [&] {
    for (;;) {
      const std::size_t index = next.fetch_add(1);
      if (index >= tasks.size() || (fail_fast && index > first_failure.load())) {
        return;
      }
      results[index] = run_one(tasks[index], timing);
      done[index] = 1;
      if (fail_fast && results[index].status == Status::fail) {
        std::size_t seen = first_failure.load();
        while (index < seen && !first_failure.compare_exchange_weak(seen, index)) {
        }
      }
    }
  };

  const std::uint32_t count = std::max<std::uint32_t>(1, std::min<std::size_t>(jobs, tasks.size()));
  std::vector<std::thread> pool;
  for (std::uint32_t i = 1; i < count; ++i) {
    pool.emplace_back(worker);
  }
  worker();
  for (std::thread& thread : pool) {
    thread.join();
  }

  if (fail_fast && first_failure.load() < tasks.size()) {
    results.resize(first_failure.load() + 1);
  }
  return results;
}

void write_reports(std::ostream& out, const std::vector<CheckReport>& reports, OutputFormat format) {
  switch (format) {
    case OutputFormat::table:
      write_table(out, reports);
      break;
    case OutputFormat::json:
      write_json(out, reports);
      break;
    case OutputFormat::csv:
      write_csv(out, reports);
      break;
  }
}

int exit_status(const std::vector<CheckReport>& reports) {
  return std::any_of(reports.begin(), reports.end(), [](const CheckReport& r) { return r.status == Status::fail; })
             ? 1
             : 0;
}

int run_suite(const SuiteConfig& config, std::ostream& out, std::ostream& diag) {
  try {
    validate(config);
  } catch (const ConfigError& e) {
    diag << "configuration error: " << e.what() << '\n';
    return 2;
  }
  const std::vector<Task> tasks = plan_suite(config);
  const std::vector<CheckReport> reports = run_tasks(tasks, config.jobs, config.fail_fast, config.timing);
  write_reports(out, reports, config.output);
  out.flush();
  summarize(diag, reports);
  return exit_status(reports);
}

int run_open_question_scan(const ScanConfig& config, std::ostream& out, std::ostream& diag) {
  try {
    check_range(config.primes, "prime", 0, kMaxPrime);
    check_range(config.dims, "dimension", 2, 16);
    if (config.jobs < 1) {
      throw ConfigError("jobs must be at least 1");
    }
  } catch (const ConfigError& e) {
    diag << "configuration error: " << e.what() << '\n';
    return 2;
  }
  std::vector<Task> tasks;
  for (const std::uint32_t p : primes_in(config.primes)) {
    for (std::int64_t n = config.dims.lo; n <= config.dims.hi; ++n) {
      const auto dims = static_cast<std::uint32_t>(n);
      const std::uint64_t budget = config.term_budget;
      tasks.push_back({"open-question", "OPEN_QUESTION", p, Params{{"n", n}},
                       [=] { return open_question_report(p, dims, budget); }});
    }
  }
  const std::vector<CheckReport> reports = run_tasks(tasks, config.jobs, false, config.timing);
  write_reports(out, reports, config.output);
  out.flush();
  summarize(diag, reports);
  return exit_status(reports);
}

}  // namespace supercong

#pragma once

// Run configuration, complexity tables, verification suites and their
// CSV/JSON renderings.

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <filesystem>
#include <functional>
#include <mutex>
#include <optional>
#include <string>
#include <thread>
#include <vector>

#include <json.hpp>

#include "cyclo/complexity.hpp"

namespace cyclo {

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::optional<nlohmann::json> word;  // catalog name (string) or word spec
  std::size_t n_from = 1;
  std::size_t n_to = 16;
  std::string format = "csv";
  Budget budget;
  std::vector<std::string> suites;
  std::optional<std::string> out;
  bool timing = false;

  /// Keys: word, n ("A..B" or [A, B]), format, budget, suites (string or
  /// list), out, timing.  Any other key is a ConfigError.
  static RunConfig parse(const nlohmann::json& j);
  static RunConfig load(const std::filesystem::path& path);
};

/// "A..B" or a single "N"; throws ConfigError.
std::pair<std::size_t, std::size_t> parse_range(const std::string& text);

Source config_source(const RunConfig& cfg);

// --- complexity tables ------------------------------------------------------

struct ComplexityRow {
  ComplexityRecord record;
  bool exhausted = false;
};

struct ComplexityTable {
  std::string word;
  std::vector<ComplexityRow> rows;
  bool complete() const;
};

/// Rows n_from..n_to.  Stops at the first length whose prefix budget runs
/// out, recording that length as a flagged row.
ComplexityTable run_complexity(const RunConfig& cfg);
ComplexityTable complexity_table(const InfiniteWordSource& src, std::size_t n_from,
                                 std::size_t n_to, const Budget& budget = {});

std::string emit_csv(const ComplexityTable& table);
nlohmann::json to_json(const ComplexityTable& table);

// --- suites -----------------------------------------------------------------

enum class Status { Pass, Fail, Info };

struct Check {
  std::string claim;
  nlohmann::json parameters = nlohmann::json::object();
  nlohmann::json expected;
  nlohmann::json observed;
  Status status = Status::Pass;
  std::string provenance;
};

struct SuiteReport {
  std::string suite;
  std::string claim;
  std::vector<Check> checks;
  double runtime_seconds = 0;

  bool pass() const;
  Check& add(Check c);
};

const std::vector<std::string>& suite_ids();
/// Throws ConfigError for an unknown id.
SuiteReport run_suite(const std::string& id, const RunConfig& cfg = {});

nlohmann::json to_json(const SuiteReport& report, bool with_runtime = false);
std::string emit_text(const SuiteReport& report);

/// Writes via a temporary file and a rename.
void write_atomic(const std::filesystem::path& path, const std::string& bytes);

/// fn(0..count-1) on up to hardware_concurrency threads; results by index.
template <typename T>
std::vector<T> parallel_map(std::size_t count, const std::function<T(std::size_t)>& fn) {
  std::vector<std::optional<T>> slots(count);
  std::atomic<std::size_t> next{0};
  std::exception_ptr error;
  std::mutex mu;
  const auto work = [&] {
    for (std::size_t i; (i = next++) < count;) {
      try {
        slots[i] = fn(i);
      } catch (...) {
        std::lock_guard lock(mu);
        if (!error) error = std::current_exception();
        next = count;
      }
    }
  };
  const std::size_t threads =
      std::min<std::size_t>(std::max(1u, std::thread::hardware_concurrency()), count);
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(work);
  }
  if (error) std::rethrow_exception(error);
  std::vector<T> out;
  out.reserve(count);
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace cyclo

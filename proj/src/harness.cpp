#include "cyclo/harness.hpp"

#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include <unistd.h>

#include "cyclo/catalog.hpp"
#include "cyclo/error.hpp"

namespace cyclo {

using nlohmann::json;

// --- configuration ----------------------------------------------------------

std::pair<std::size_t, std::size_t> parse_range(const std::string& text) {
  const auto to_size = [&](const std::string& s) -> std::size_t {
    if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
      throw ConfigError("bad range \"" + text + "\": expected A..B");
    return std::stoull(s);
  };
  const auto dots = text.find("..");
  const std::size_t a = to_size(text.substr(0, dots));
  const std::size_t b = dots == std::string::npos ? a : to_size(text.substr(dots + 2));
  if (a > b) throw ConfigError("bad range \"" + text + "\": start exceeds end");
  return {a, b};
}

RunConfig RunConfig::parse(const json& j) {
  if (!j.is_object()) throw ConfigError("config: expected a JSON object");
  static const std::set<std::string> known{"word", "n", "format", "budget", "suites", "out", "timing"};
  for (const auto& [key, value] : j.items())
    if (!known.count(key)) throw ConfigError("config: unknown key \"" + key + "\"");

  RunConfig cfg;
  try {
    if (j.contains("word")) {
      const auto& w = j.at("word");
      if (!w.is_string() && !w.is_object())
        throw ConfigError("config: word must be a catalog name or a word spec object");
      cfg.word = w;
    }
    if (j.contains("n")) {
      const auto& n = j.at("n");
      if (n.is_string()) {
        std::tie(cfg.n_from, cfg.n_to) = parse_range(n.get<std::string>());
      } else if (n.is_number_integer() && n.get<std::int64_t>() >= 0) {
        cfg.n_from = cfg.n_to = n.get<std::size_t>();
      } else if (n.is_array() && n.size() == 2) {
        cfg.n_from = n[0].get<std::size_t>();
        cfg.n_to = n[1].get<std::size_t>();
        if (cfg.n_from > cfg.n_to) throw ConfigError("config: n range start exceeds end");
      } else {
        throw ConfigError("config: n must be \"A..B\", an integer or [A, B]");
      }
    }
    if (j.contains("format")) {
      cfg.format = j.at("format").get<std::string>();
      if (cfg.format != "csv" && cfg.format != "json" && cfg.format != "text")
        throw ConfigError("config: format must be csv, json or text");
    }
    if (j.contains("budget")) {
      const auto& b = j.at("budget");
      if (!b.is_number_integer() || b.get<std::int64_t>() <= 0)
        throw ConfigError("config: budget must be a positive integer");
      cfg.budget.max_prefix = j.at("budget").get<std::size_t>();
    }
    if (j.contains("suites")) {
      const auto& s = j.at("suites");
      if (s.is_string()) cfg.suites = {s.get<std::string>()};
      else cfg.suites = s.get<std::vector<std::string>>();
      for (const auto& id : cfg.suites)
        if (std::find(suite_ids().begin(), suite_ids().end(), id) == suite_ids().end())
          throw ConfigError("config: unknown suite \"" + id + "\"");
    }
    if (j.contains("out")) cfg.out = j.at("out").get<std::string>();
    if (j.contains("timing")) cfg.timing = j.at("timing").get<bool>();
  } catch (const json::exception& e) {
    throw ConfigError(std::string("config: ") + e.what());
  }
  return cfg;
}

RunConfig RunConfig::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot read config " + path.string());
  json j;
  try {
    j = json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError("config " + path.string() + " is not valid JSON: " + e.what());
  }
  return parse(j);
}

Source config_source(const RunConfig& cfg) {
  if (!cfg.word) throw ConfigError("no word given");
  if (cfg.word->is_string()) return resolve_word(cfg.word->get<std::string>());
  return make_source(*cfg.word);
}

// --- tables -----------------------------------------------------------------

bool ComplexityTable::complete() const {
  return std::none_of(rows.begin(), rows.end(), [](const auto& r) { return r.exhausted; });
}

ComplexityTable complexity_table(const InfiniteWordSource& src, std::size_t n_from,
                                 std::size_t n_to, const Budget& budget) {
  ComplexityTable table{src.id(), {}};
  const std::size_t count = n_to - n_from + 1;
  auto rows = parallel_map<ComplexityRow>(count, [&](std::size_t i) {
    const std::size_t n = n_from + i;
    try {
      return ComplexityRow{complexity_record(src, n, budget), false};
    } catch (const BudgetExhausted& e) {
      ComplexityRow row;
      row.record.n = n;
      row.record.provenance = Provenance{e.prefix_reached(), "budget-exhausted", false, {}};
      row.exhausted = true;
      return row;
    }
  });
  for (auto& row : rows) {
    table.rows.push_back(std::move(row));
    if (table.rows.back().exhausted) break;
  }
  return table;
}

ComplexityTable run_complexity(const RunConfig& cfg) {
  const auto src = config_source(cfg);
  return complexity_table(*src, cfg.n_from, cfg.n_to, cfg.budget);
}

std::string emit_csv(const ComplexityTable& table) {
  std::ostringstream os;
  os << "n,p,a,c,mf\n";
  for (const auto& row : table.rows) {
    const auto& r = row.record;
    if (row.exhausted)
      os << r.n << ",,,,\n";
    else
      os << r.n << ',' << r.p << ',' << r.a << ',' << r.c << ',' << r.mf << '\n';
  }
  return os.str();
}

json to_json(const ComplexityTable& table) {
  json rows = json::array();
  for (const auto& row : table.rows) {
    const auto& r = row.record;
    json j = {{"n", r.n}};
    if (!row.exhausted) {
      j["p"] = r.p;
      j["a"] = r.a;
      j["c"] = r.c;
      j["mf"] = r.mf;
    }
    j["provenance"] = r.provenance.method;
    j["prefix"] = r.provenance.prefix_length;
    rows.push_back(std::move(j));
  }
  return {{"schema_version", kSchemaVersion},
          {"word", table.word},
          {"complete", table.complete()},
          {"rows", std::move(rows)}};
}

// --- reports ----------------------------------------------------------------

bool SuiteReport::pass() const {
  return std::none_of(checks.begin(), checks.end(),
                      [](const Check& c) { return c.status == Status::Fail; });
}

Check& SuiteReport::add(Check c) {
  checks.push_back(std::move(c));
  return checks.back();
}

namespace {

const char* status_name(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Info: return "info";
  }
  return "?";
}

}  // namespace

json to_json(const SuiteReport& report, bool with_runtime) {
  json checks = json::array();
  for (const auto& c : report.checks) {
    json j = {{"claim", c.claim},
              {"parameters", c.parameters},
              {"expected", c.expected},
              {"observed", c.observed},
              {"status", status_name(c.status)}};
    if (!c.provenance.empty()) j["provenance"] = c.provenance;
    checks.push_back(std::move(j));
  }
  json j = {{"schema_version", kSchemaVersion},
            {"suite", report.suite},
            {"claim", report.claim},
            {"pass", report.pass()},
            {"checks", std::move(checks)}};
  if (with_runtime) j["runtime_seconds"] = report.runtime_seconds;
  return j;
}

std::string emit_text(const SuiteReport& report) {
  std::ostringstream os;
  os << "suite " << report.suite << ": " << report.claim << '\n';
  std::size_t passed = 0, failed = 0;
  for (const auto& c : report.checks) {
    os << "  [" << status_name(c.status) << "] " << c.claim;
    if (!c.parameters.empty()) os << ' ' << c.parameters.dump();
    os << "\n         expected " << c.expected.dump() << ", observed " << c.observed.dump() << '\n';
    if (c.status == Status::Pass) ++passed;
    if (c.status == Status::Fail) ++failed;
  }
  os << "suite " << report.suite << ": " << (report.pass() ? "PASS" : "FAIL") << " (" << passed
     << " passed, " << failed << " failed)\n";
  return os.str();
}

void write_atomic(const std::filesystem::path& path, const std::string& bytes) {
  auto tmp = path;
  tmp += ".tmp." + std::to_string(::getpid());
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw std::runtime_error("cannot write " + tmp.string());
    out << bytes;
    out.flush();
    if (!out) throw std::runtime_error("write failed for " + tmp.string());
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::filesystem::remove(tmp);
    throw std::runtime_error("cannot move output into place at " + path.string() + ": " +
                             ec.message());
  }
}

}  // namespace cyclo

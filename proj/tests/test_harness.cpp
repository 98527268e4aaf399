#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cyclo/error.hpp"
#include "cyclo/harness.hpp"

using namespace cyclo;
using nlohmann::json;

namespace {

RunConfig config(const json& j) { return RunConfig::parse(j); }

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string line; std::getline(in, line);) out.push_back(line);
  return out;
}

}  // namespace

TEST_CASE("ranges") {
  CHECK(parse_range("3..7") == std::pair<std::size_t, std::size_t>{3, 7});
  CHECK(parse_range("5") == std::pair<std::size_t, std::size_t>{5, 5});
  CHECK_THROWS_AS(parse_range("7..3"), ConfigError);
  CHECK_THROWS_AS(parse_range("a..3"), ConfigError);
  CHECK_THROWS_AS(parse_range(""), ConfigError);
}

TEST_CASE("configs are parsed strictly") {
  const auto cfg = config({{"word", "thue-morse"}, {"n", "1..8"}, {"format", "json"},
                           {"budget", 4096}, {"suites", {"christoffel"}}, {"timing", true}});
  CHECK(cfg.n_from == 1);
  CHECK(cfg.n_to == 8);
  CHECK(cfg.format == "json");
  CHECK(cfg.budget.max_prefix == 4096);
  CHECK(cfg.suites == std::vector<std::string>{"christoffel"});
  CHECK(cfg.timing);
  CHECK(config({{"n", json::array({2, 5})}}).n_to == 5);

  CHECK_THROWS_AS(config({{"colour", "blue"}}), ConfigError);
  CHECK_THROWS_AS(config({{"format", "xml"}}), ConfigError);
  CHECK_THROWS_AS(config({{"budget", 0}}), ConfigError);
  CHECK_THROWS_AS(config({{"budget", -5}}), ConfigError);
  CHECK_THROWS_AS(config({{"suites", {"nope"}}}), ConfigError);
  CHECK_THROWS_AS(config({{"n", json::array({5, 2})}}), ConfigError);
  CHECK_THROWS_AS(config({{"word", 3}}), ConfigError);
  CHECK_THROWS_AS(config(json::array()), ConfigError);
  CHECK_THROWS_AS(config_source(RunConfig{}), ConfigError);
}

TEST_CASE("configs load from files") {
  const auto dir = std::filesystem::temp_directory_path() / "cyclo-harness-test";
  std::filesystem::create_directories(dir);
  {
    std::ofstream(dir / "ok.json") << R"({"word": {"kind": "ultimately_periodic", "period": "01"}, "n": 3})";
    std::ofstream(dir / "bad.json") << "{not json";
  }
  const auto cfg = RunConfig::load(dir / "ok.json");
  CHECK(cfg.n_from == 3);
  CHECK(config_source(cfg)->prefix(4).str() == "0101");
  CHECK_THROWS_AS(RunConfig::load(dir / "bad.json"), ConfigError);
  CHECK_THROWS_AS(RunConfig::load(dir / "missing.json"), ConfigError);
  std::filesystem::remove_all(dir);
}

TEST_CASE("complexity tables") {
  const auto tm = run_complexity(config({{"word", "thue-morse"}, {"n", "4"}}));
  REQUIRE(tm.rows.size() == 1);
  CHECK(tm.rows[0].record.p == 10);
  CHECK(tm.rows[0].record.a == 3);
  CHECK(tm.rows[0].record.c == 4);
  CHECK(lines(emit_csv(tm)) == std::vector<std::string>{"n,p,a,c,mf", "4,10,3,4,0"});

  const auto fib = run_complexity(config({{"word", "fibonacci"}, {"n", "1..8"}}));
  REQUIRE(fib.rows.size() == 8);
  for (const auto& row : fib.rows) CHECK(row.record.p == row.record.n + 1);

  const auto zero = run_complexity(config({{"word", "constant"}, {"n", "1..5"}}));
  for (const auto& row : zero.rows) {
    CHECK(row.record.p == 1);
    CHECK(row.record.a == 1);
    CHECK(row.record.c == 1);
  }
}

TEST_CASE("csv header and json schema") {
  const auto table = run_complexity(config({{"word", "fibonacci"}, {"n", "1..3"}}));
  CHECK(lines(emit_csv(table)).front() == "n,p,a,c,mf");
  const auto j = to_json(table);
  CHECK(j.at("schema_version") == kSchemaVersion);
  CHECK(j.at("word") == "fibonacci");
  CHECK(j.at("complete") == true);
  REQUIRE(j.at("rows").size() == 3);
  for (const char* key : {"n", "p", "a", "c", "mf", "provenance", "prefix"})
    CHECK(j.at("rows")[0].contains(key));
}

TEST_CASE("budget exhaustion flags rows and stops the table") {
  const auto table =
      run_complexity(config({{"word", "thue-morse"}, {"n", "1..60"}, {"budget", 200}}));
  CHECK_FALSE(table.complete());
  REQUIRE_FALSE(table.rows.empty());
  const auto& last = table.rows.back();
  CHECK(last.exhausted);
  CHECK(last.record.provenance.method == "budget-exhausted");
  for (std::size_t i = 0; i + 1 < table.rows.size(); ++i) CHECK_FALSE(table.rows[i].exhausted);
  const auto j = to_json(table);
  CHECK(j.at("complete") == false);
  CHECK(j.at("rows").back().at("provenance") == "budget-exhausted");
  CHECK_FALSE(j.at("rows").back().contains("c"));
  CHECK(lines(emit_csv(table)).back() == std::to_string(last.record.n) + ",,,,");
}

TEST_CASE("suites") {
  CHECK(suite_ids().size() == 10);
  CHECK_THROWS_AS(run_suite("no-such-suite"), ConfigError);

  const auto chr = run_suite("christoffel");
  CHECK(chr.pass());
  const auto j = to_json(chr);
  for (const char* key : {"schema_version", "suite", "claim", "pass", "checks"})
    CHECK(j.contains(key));
  CHECK_FALSE(j.contains("runtime_seconds"));
  CHECK(to_json(chr, true).contains("runtime_seconds"));
  CHECK(emit_text(chr).find("suite christoffel: PASS") != std::string::npos);

  const auto sec4 = run_suite("sec4-examples");
  CHECK(sec4.pass());
  CHECK(to_json(sec4).dump().find("[3,4]") != std::string::npos);

  RunConfig with_word;
  with_word.word = "thue-morse";
  CHECK_THROWS_AS(run_suite("christoffel", with_word), ConfigError);
}

TEST_CASE("a failed check fails the report") {
  SuiteReport r{"x", "claim", {}, 0};
  r.add(Check{"ok", json::object(), 1, 1, Status::Pass, {}});
  r.add(Check{"note", json::object(), 1, 2, Status::Info, {}});
  CHECK(r.pass());
  r.add(Check{"bad", json::object(), 1, 2, Status::Fail, {}});
  CHECK_FALSE(r.pass());
  CHECK(emit_text(r).find("FAIL (1 passed, 1 failed)") != std::string::npos);
}

TEST_CASE("output is deterministic") {
  const auto cfg = config({{"word", "paperfolding"}, {"n", "1..40"}});
  CHECK(emit_csv(run_complexity(cfg)) == emit_csv(run_complexity(cfg)));
  CHECK(to_json(run_complexity(cfg)).dump() == to_json(run_complexity(cfg)).dump());
  CHECK(to_json(run_suite("christoffel")).dump() == to_json(run_suite("christoffel")).dump());
}

TEST_CASE("atomic writes") {
  const auto path = std::filesystem::temp_directory_path() / "cyclo-atomic-test.txt";
  write_atomic(path, "first\n");
  write_atomic(path, "second\n");
  std::ifstream in(path);
  std::string s((std::istreambuf_iterator<char>(in)), {});
  CHECK(s == "second\n");
  for (const auto& e : std::filesystem::directory_iterator(path.parent_path()))
    CHECK(e.path().filename().string().find("cyclo-atomic-test.txt.tmp") == std::string::npos);
  std::filesystem::remove(path);
  CHECK_THROWS(write_atomic("/nonexistent-dir/x/y.txt", "z"));
}

TEST_CASE("parallel_map keeps order and propagates errors") {
  const auto v = parallel_map<std::size_t>(100, [](std::size_t i) { return i * i; });
  for (std::size_t i = 0; i < 100; ++i) CHECK(v[i] == i * i);
  CHECK_THROWS_AS(parallel_map<int>(10,
                                    [](std::size_t i) -> int {
                                      if (i == 7) throw InvalidArgument("seven");
                                      return 0;
                                    }),
                  InvalidArgument);
}

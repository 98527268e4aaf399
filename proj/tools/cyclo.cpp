// cyclo: command-line front end.
//
//   cyclo generate    --word NAME --length L
//   cyclo complexity  --word NAME --n A..B [--format csv|json] [--budget N] [--out PATH]
//   cyclo christoffel --r R --s S [--format text|json]
//   cyclo language    --forbid 11,000 --n A..B [--list]
//   cyclo verify      [--suite ID]... [--format text|json] [--timing]
//
// Exit status: 0 on success, 1 when a check fails or a prefix budget runs
// out, 2 on usage or configuration errors.

#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "cyclo/catalog.hpp"
#include "cyclo/error.hpp"
#include "cyclo/harness.hpp"
#include "cyclo/languages.hpp"
#include "cyclo/sturmian.hpp"

namespace {

using namespace cyclo;
using nlohmann::json;

struct Options {
  std::string config;
  std::string word;
  std::string n;
  std::string format;
  std::size_t budget = 0;
  std::string out;
  bool timing = false;
  std::size_t length = 64;
  std::uint64_t r = 0, s = 0;
  std::string forbid;
  std::string alphabet = "01";
  bool list = false;
  std::vector<std::string> suites;
};

RunConfig make_config(const Options& o) {
  RunConfig cfg = o.config.empty() ? RunConfig{} : RunConfig::load(o.config);
  if (!o.word.empty()) cfg.word = json(o.word);
  if (!o.n.empty()) std::tie(cfg.n_from, cfg.n_to) = parse_range(o.n);
  if (!o.format.empty()) cfg.format = o.format;
  if (o.budget) cfg.budget.max_prefix = o.budget;
  if (!o.out.empty()) cfg.out = o.out;
  if (o.timing) cfg.timing = true;
  if (!o.suites.empty()) cfg.suites = o.suites;
  return cfg;
}

void emit(const RunConfig& cfg, const std::string& bytes) {
  if (cfg.out)
    write_atomic(*cfg.out, bytes);
  else
    std::cout << bytes << std::flush;
}

int cmd_generate(const Options& o) {
  const auto cfg = make_config(o);
  const auto src = config_source(cfg);
  emit(cfg, src->prefix(o.length).str() + "\n");
  return 0;
}

int cmd_complexity(const Options& o) {
  const auto cfg = make_config(o);
  const auto table = run_complexity(cfg);
  emit(cfg, cfg.format == "json" ? to_json(table).dump(2) + "\n" : emit_csv(table));
  if (!table.complete()) {
    std::cerr << "cyclo: prefix budget exhausted at n=" << table.rows.back().record.n << "\n";
    return 1;
  }
  return 0;
}

int cmd_christoffel(const Options& o) {
  const auto arr = christoffel_array(o.r, o.s);
  RunConfig cfg;
  if (!o.out.empty()) cfg.out = o.out;
  if (o.format == "json") {
    std::vector<std::string> rows;
    for (const auto& w : arr.rows) rows.push_back(w.str());
    const json j = {{"schema_version", kSchemaVersion}, {"r", o.r},        {"s", o.s},
                    {"rows", rows},                      {"violations", arr.violations()}};
    emit(cfg, j.dump(2) + "\n");
  } else {
    emit(cfg, arr.str());
  }
  return arr.violations().empty() ? 0 : 1;
}

int cmd_language(const Options& o) {
  const Alphabet alphabet(o.alphabet);
  std::vector<Word> forbidden;
  std::stringstream ss(o.forbid);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) forbidden.push_back(Word::parse(item, alphabet));
  const auto L = FactorialLanguage::from_forbidden(forbidden, alphabet);
  const auto [from, to] = parse_range(o.n.empty() ? "1..8" : o.n);
  RunConfig cfg;
  if (!o.out.empty()) cfg.out = o.out;

  json rows = json::array();
  std::ostringstream csv;
  csv << "n,size,c,mf\n";
  for (std::size_t n = std::max<std::size_t>(from, 1); n <= to; ++n) {
    const auto c = cyclic_complexity_L(L, n);
    const auto mf = mf_of_language(L, n).size();
    const auto size = L.slice_size(n);
    csv << n << ',' << size << ',' << c.count << ',' << mf << '\n';
    json row = {{"n", n}, {"size", size}, {"c", c.count}, {"mf", mf}};
    if (o.list) {
      json classes = json::array();
      for (const auto& cls : c.inventory.classes) {
        std::vector<std::string> members;
        for (const auto& w : cls.members) members.push_back(w.str());
        classes.push_back(members);
      }
      row["classes"] = classes;
      for (const auto& cls : c.inventory.classes) {
        csv << "#";
        for (const auto& w : cls.members) csv << ' ' << w;
        csv << '\n';
      }
    }
    rows.push_back(std::move(row));
  }
  if (o.format == "json") {
    std::vector<std::string> f;
    for (const auto& w : L.forbidden()) f.push_back(w.str());
    emit(cfg, json{{"schema_version", kSchemaVersion}, {"forbidden", f}, {"rows", rows}}.dump(2) +
                  "\n");
  } else {
    emit(cfg, csv.str());
  }
  return 0;
}

int cmd_verify(const Options& o) {
  auto cfg = make_config(o);
  if (cfg.format == "csv") cfg.format = o.format.empty() ? "text" : o.format;
  const auto ids = cfg.suites.empty() ? suite_ids() : cfg.suites;
  bool ok = true;
  std::string text;
  json reports = json::array();
  for (const auto& id : ids) {
    const auto report = run_suite(id, cfg);
    ok = ok && report.pass();
    if (cfg.format == "json")
      reports.push_back(to_json(report, cfg.timing));
    else {
      text += emit_text(report);
      if (cfg.timing) text += "  runtime " + std::to_string(report.runtime_seconds) + " s\n";
    }
  }
  if (cfg.format == "json") {
    const json j = reports.size() == 1 ? reports[0]
                                       : json{{"schema_version", kSchemaVersion},
                                              {"pass", ok},
                                              {"reports", reports}};
    emit(cfg, j.dump(2) + "\n");
  } else {
    emit(cfg, text);
  }
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Cyclic complexity of infinite words"};
  app.require_subcommand(1);
  Options o;

  const auto word_opts = [&](CLI::App* sub) {
    sub->add_option("--word", o.word, "catalog name or inline JSON word spec");
    sub->add_option("--config", o.config, "JSON run configuration")->check(CLI::ExistingFile);
    sub->add_option("--budget", o.budget, "prefix budget in symbols")->check(CLI::PositiveNumber);
    sub->add_option("--out", o.out, "write output to PATH");
  };

  auto* gen = app.add_subcommand("generate", "print a prefix of a word");
  word_opts(gen);
  gen->add_option("--length", o.length, "prefix length");

  auto* cx = app.add_subcommand("complexity", "table of p, a, c, mf");
  word_opts(cx);
  cx->add_option("--n", o.n, "length range A..B");
  cx->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));

  auto* ch = app.add_subcommand("christoffel", "Christoffel array of (r, s)");
  ch->add_option("--r", o.r)->required();
  ch->add_option("--s", o.s)->required();
  ch->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  ch->add_option("--out", o.out);

  auto* lang = app.add_subcommand("language", "language of a finite antidictionary");
  lang->add_option("--forbid", o.forbid, "comma-separated forbidden words")->required();
  lang->add_option("--alphabet", o.alphabet);
  lang->add_option("--n", o.n, "length range A..B");
  lang->add_option("--format", o.format)->check(CLI::IsMember({"csv", "json"}));
  lang->add_flag("--list", o.list, "list conjugacy classes");
  lang->add_option("--out", o.out);

  auto* ver = app.add_subcommand("verify", "run verification suites");
  word_opts(ver);
  ver->add_option("--suite", o.suites, "suite id (repeatable); default all");
  ver->add_option("--format", o.format)->check(CLI::IsMember({"text", "json"}));
  ver->add_flag("--timing", o.timing, "include runtimes");
  ver->add_option("--n", o.n);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    if (*gen) return cmd_generate(o);
    if (*cx) return cmd_complexity(o);
    if (*ch) return cmd_christoffel(o);
    if (*lang) return cmd_language(o);
    if (*ver) return cmd_verify(o);
  } catch (const ConfigError& e) {
    std::cerr << "cyclo: " << e.what() << "\n";
    return 2;
  } catch (const InvalidArgument& e) {
    std::cerr << "cyclo: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExhausted& e) {
    std::cerr << "cyclo: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "cyclo: " << e.what() << "\n";
    return 1;
  }
  return 2;
}

#include "cyclo/catalog.hpp"

#include <algorithm>
#include <set>

#include "cyclo/error.hpp"

namespace cyclo {

using nlohmann::json;

namespace {

void only_keys(const json& j, std::initializer_list<const char*> allowed, const std::string& where) {
  if (!j.is_object()) throw ConfigError(where + ": expected an object");
  const std::set<std::string> ok(allowed.begin(), allowed.end());
  for (const auto& [key, value] : j.items())
    if (!ok.count(key)) throw ConfigError(where + ": unknown key \"" + key + "\"");
}

template <typename T>
T get(const json& j, const char* key, const std::string& where) {
  if (!j.contains(key)) throw ConfigError(where + ": missing \"" + key + "\"");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception&) {
    throw ConfigError(where + ": \"" + key + "\" has the wrong type");
  }
}

template <typename T>
T get_or(const json& j, const char* key, T fallback, const std::string& where) {
  return j.contains(key) ? get<T>(j, key, where) : fallback;
}

Repeat parse_repeat(const json& j, const std::string& where) {
  const auto r = get_or<std::string>(j, "repeat", "last", where);
  if (r == "last") return Repeat::Last;
  if (r == "cycle") return Repeat::Cycle;
  throw ConfigError(where + ": repeat must be \"last\" or \"cycle\"");
}

Symbol parse_letter(const std::string& s, const Alphabet& alphabet, const std::string& where) {
  const auto w = Word::parse(s, alphabet);
  if (w.size() != 1) throw ConfigError(where + ": expected a single letter, got \"" + s + "\"");
  return w[0];
}

SlotSubstitution parse_slot(const json& j, const Alphabet& alphabet, const std::string& where) {
  only_keys(j, {"u", "v", "slot"}, where);
  Word u = Word::parse(get<std::string>(j, "u", where), alphabet);
  Word v = Word::parse(get_or<std::string>(j, "v", "", where), alphabet);
  const auto slot = get_or<std::string>(j, "slot", "identity", where);
  if (slot == "identity") return SlotSubstitution::identity(std::move(u), std::move(v));
  if (slot == "swap") return SlotSubstitution::swap(std::move(u), std::move(v));
  const auto images = Word::parse(slot, alphabet);
  SlotSubstitution m{std::move(u), std::move(v),
                     std::vector<Symbol>(images.letters().begin(), images.letters().end())};
  m.to_morphism();  // validates the bijection
  return m;
}

Source build(const json& spec) {
  const std::string where = "word spec";
  if (!spec.is_object()) throw ConfigError(where + ": expected an object");
  const auto kind = get<std::string>(spec, "kind", where);
  const Alphabet alphabet(get_or<std::string>(spec, "alphabet", "01", where));
  const auto id = get_or<std::string>(spec, "id", "", where);
  const std::string at = where + " (" + kind + ")";

  if (kind == "fixed_point") {
    only_keys(spec, {"kind", "id", "alphabet", "images", "slot", "seed"}, at);
    const Symbol seed = parse_letter(get_or<std::string>(spec, "seed", "0", at), alphabet, at);
    if (spec.contains("images") == spec.contains("slot"))
      throw ConfigError(at + ": give exactly one of \"images\" and \"slot\"");
    if (spec.contains("slot"))
      return fixed_point(parse_slot(spec.at("slot"), alphabet, at + ".slot"), seed, id);
    return fixed_point(
        Morphism::parse(get<std::vector<std::string>>(spec, "images", at), alphabet), seed, id);
  }
  if (kind == "s_adic") {
    only_keys(spec, {"kind", "id", "alphabet", "substitutions", "repeat"}, at);
    const auto& list = spec.at("substitutions");
    if (!list.is_array() || list.empty()) throw ConfigError(at + ": substitutions must be a non-empty list");
    std::vector<SlotSubstitution> seq;
    for (const auto& s : list) seq.push_back(parse_slot(s, alphabet, at + ".substitutions"));
    return s_adic_limit(std::move(seq), parse_repeat(spec, at), id);
  }
  if (kind == "toeplitz") {
    only_keys(spec, {"kind", "id", "alphabet", "patterns", "repeat"}, at);
    if (alphabet.symbols() != "01") throw ConfigError(at + ": Toeplitz words are binary");
    std::vector<ToeplitzPattern> patterns;
    for (const auto& p : get<std::vector<std::string>>(spec, "patterns", at))
      patterns.push_back(ToeplitzPattern::parse(p));
    if (patterns.empty()) throw ConfigError(at + ": patterns must be non-empty");
    return toeplitz(std::move(patterns), parse_repeat(spec, at), id);
  }
  if (kind == "paperfolding") {
    only_keys(spec, {"kind", "id", "folds", "repeat"}, at);
    FoldSequence folds;
    for (const auto& f : get<std::vector<std::string>>(spec, "folds", at)) {
      if (f == "tau") folds.folds.push_back(Fold::Tau);
      else if (f == "tau_bar") folds.folds.push_back(Fold::TauBar);
      else throw ConfigError(at + ": folds are \"tau\" or \"tau_bar\"");
    }
    if (folds.folds.empty()) throw ConfigError(at + ": folds must be non-empty");
    folds.repeat = parse_repeat(spec, at);
    return paperfolding(std::move(folds), id);
  }
  if (kind == "mechanical") {
    only_keys(spec, {"kind", "id", "head", "tail", "intercept"}, at);
    Slope s{get_or<std::vector<std::uint64_t>>(spec, "head", {}, at),
            get<std::vector<std::uint64_t>>(spec, "tail", at), std::nullopt};
    if (spec.contains("intercept")) s.intercept = Rational::parse(get<std::string>(spec, "intercept", at));
    s.validate();
    return mechanical(std::move(s), id);
  }
  if (kind == "ultimately_periodic") {
    only_keys(spec, {"kind", "id", "alphabet", "preperiod", "period"}, at);
    return ultimately_periodic(Word::parse(get_or<std::string>(spec, "preperiod", "", at), alphabet),
                               Word::parse(get<std::string>(spec, "period", at), alphabet), id);
  }
  throw ConfigError(where + ": unknown kind \"" + kind + "\"");
}

CatalogEntry entry(std::string name, std::string description, json spec, bool periodic = false) {
  spec["id"] = name;
  return {std::move(name), std::move(description), std::move(spec), periodic};
}

std::vector<CatalogEntry> build_catalog() {
  const json swap_pd = {{"u", "0"}, {"v", ""}, {"slot", "swap"}};
  const json id_010 = {{"u", "01"}, {"v", ""}, {"slot", "identity"}};
  const json id_0v1 = {{"u", "0"}, {"v", "1"}, {"slot", "identity"}};
  return {
      entry("thue-morse", "fixed point of 0->01, 1->10",
            {{"kind", "fixed_point"}, {"images", {"01", "10"}}, {"seed", "0"}}),
      entry("fibonacci", "fixed point of 0->01, 1->0",
            {{"kind", "fixed_point"}, {"images", {"01", "0"}}, {"seed", "0"}}),
      entry("fibonacci-mechanical", "characteristic word of slope [0;2,(1)]",
            {{"kind", "mechanical"}, {"head", {2}}, {"tail", {1}}}),
      entry("silver", "characteristic word of slope [0;(2)]",
            {{"kind", "mechanical"}, {"tail", {2}}}),
      entry("sturmian-3-1", "characteristic word of slope [0;3,(1)]",
            {{"kind", "mechanical"}, {"head", {3}}, {"tail", {1}}}),
      entry("sturmian-1-2", "characteristic word of slope [0;1,(2)]",
            {{"kind", "mechanical"}, {"head", {1}}, {"tail", {2}}}),
      entry("fibonacci-shifted", "mechanical word of slope [0;2,(1)], intercept 1/3",
            {{"kind", "mechanical"}, {"head", {2}}, {"tail", {1}}, {"intercept", "1/3"}}),
      entry("period-doubling", "fixed point of 0->01, 1->00 (u=0, v=empty, swapped slot)",
            {{"kind", "fixed_point"}, {"slot", swap_pd}, {"seed", "0"}}),
      entry("period-doubling-s-adic", "limit of the constant sequence u=0, v=empty, swapped slot",
            {{"kind", "s_adic"}, {"substitutions", {swap_pd}}}),
      entry("slot-010", "fixed point of 0->010, 1->011 (u=01, v=empty)",
            {{"kind", "fixed_point"}, {"slot", id_010}, {"seed", "0"}}),
      entry("slot-010-s-adic", "limit of the constant sequence u=01, v=empty",
            {{"kind", "s_adic"}, {"substitutions", {id_010}}}),
      entry("s-adic-mixed", "limit of u=01,v=empty alternating with u=0,v=1",
            {{"kind", "s_adic"}, {"substitutions", {id_010, id_0v1}}, {"repeat", "cycle"}}),
      entry("s-adic-mixed-swap", "limit of u=01,v=empty alternating with u=0,v=empty, swapped slot",
            {{"kind", "s_adic"}, {"substitutions", {id_010, swap_pd}}, {"repeat", "cycle"}}),
      entry("paperfolding", "regular paperfolding word, all folds tau",
            {{"kind", "paperfolding"}, {"folds", {"tau"}}}),
      entry("paperfolding-bar", "paperfolding word, all folds tau_bar",
            {{"kind", "paperfolding"}, {"folds", {"tau_bar"}}}),
      entry("paperfolding-alt", "paperfolding word, folds tau, tau_bar, tau, ...",
            {{"kind", "paperfolding"}, {"folds", {"tau", "tau_bar"}}, {"repeat", "cycle"}}),
      entry("paperfolding-alt-bar", "paperfolding word, folds tau_bar, tau, tau_bar, ...",
            {{"kind", "paperfolding"}, {"folds", {"tau_bar", "tau"}}, {"repeat", "cycle"}}),
      entry("toeplitz-0?1?", "Toeplitz word of the pattern 0?1?",
            {{"kind", "toeplitz"}, {"patterns", {"0?1?"}}}),
      entry("constant", "0 repeated",
            {{"kind", "ultimately_periodic"}, {"period", "0"}}, true),
      entry("alternating", "01 repeated",
            {{"kind", "ultimately_periodic"}, {"period", "01"}}, true),
      entry("one-then-zeros", "1 followed by 0 repeated",
            {{"kind", "ultimately_periodic"}, {"preperiod", "1"}, {"period", "0"}}, true),
      entry("preperiodic", "110 followed by 01001 repeated",
            {{"kind", "ultimately_periodic"}, {"preperiod", "110"}, {"period", "01001"}}, true),
      entry("ternary-periodic", "0120 repeated over {0,1,2}",
            {{"kind", "ultimately_periodic"}, {"alphabet", "012"}, {"period", "0120"}}, true),
      entry("tau-pair-x", "image of (010011)^omega under 0->010, 1->011",
            {{"kind", "ultimately_periodic"}, {"period", "010011010010011011"}}, true),
      entry("tau-pair-y", "image of (101100)^omega under 0->010, 1->011",
            {{"kind", "ultimately_periodic"}, {"period", "011010011011010010"}}, true),
  };
}

}  // namespace

Source make_source(const json& spec) {
  try {
    return build(spec);
  } catch (const ConfigError&) {
    throw;
  } catch (const InvalidArgument& e) {
    throw ConfigError(std::string("word spec: ") + e.what());
  }
}

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = build_catalog();
  return entries;
}

const CatalogEntry* find_entry(std::string_view name) {
  for (const auto& e : catalog())
    if (e.name == name) return &e;
  return nullptr;
}

Source resolve_word(std::string_view name_or_json) {
  if (const auto* e = find_entry(name_or_json)) return make_source(e->spec);
  const auto first = name_or_json.find_first_not_of(" \t\n");
  if (first != std::string_view::npos && name_or_json[first] == '{') {
    json spec;
    try {
      spec = json::parse(name_or_json);
    } catch (const json::parse_error& e) {
      throw ConfigError(std::string("word spec is not valid JSON: ") + e.what());
    }
    return make_source(spec);
  }
  throw ConfigError("unknown word \"" + std::string(name_or_json) + "\"");
}

}  // namespace cyclo

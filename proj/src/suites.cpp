#include <algorithm>
#include <chrono>
#include <map>
#include <numeric>
#include <set>

#include "cyclo/catalog.hpp"
#include "cyclo/error.hpp"
#include "cyclo/harness.hpp"
#include "cyclo/languages.hpp"
#include "cyclo/sturmian.hpp"

namespace cyclo {

using nlohmann::json;

namespace {

Check check(std::string claim, json parameters, json expected, json observed, bool ok,
            std::string provenance = {}) {
  return Check{std::move(claim), std::move(parameters), std::move(expected), std::move(observed),
               ok ? Status::Pass : Status::Fail, std::move(provenance)};
}

Check info(std::string claim, json parameters, json expected, json observed) {
  return Check{std::move(claim), std::move(parameters), std::move(expected), std::move(observed),
               Status::Info, {}};
}

Source named(std::string_view name) {
  const auto* e = find_entry(name);
  if (!e) throw std::logic_error("missing catalog entry " + std::string(name));
  return make_source(e->spec);
}

std::vector<std::string> strings(const std::vector<Word>& words) {
  std::vector<std::string> out;
  for (const auto& w : words) out.push_back(w.str());
  return out;
}

/// c(n) for n = lo..hi, evaluated in parallel.
std::vector<std::size_t> c_values(const InfiniteWordSource& src, std::size_t lo, std::size_t hi,
                                  const Budget& budget) {
  return parallel_map<std::size_t>(hi - lo + 1, [&](std::size_t i) {
    return cyclic_class_count(factors(src, lo + i, budget));
  });
}

std::string provenance_at(const InfiniteWordSource& src, std::size_t n, const Budget& budget) {
  return src.id() + " n=" + std::to_string(n) + ": " + factors(src, n, budget).provenance().str();
}

/// Sources the suite runs on: the configured word, or the given catalog names.
std::vector<Source> sources_for(const RunConfig& cfg, const std::vector<std::string>& names) {
  if (cfg.word) return {config_source(cfg)};
  std::vector<Source> out;
  for (const auto& n : names) out.push_back(named(n));
  return out;
}

std::vector<std::string> all_catalog_names() {
  std::vector<std::string> out;
  for (const auto& e : catalog()) out.push_back(e.name);
  return out;
}

// --- thm1 -------------------------------------------------------------------

void periodic_checks(SuiteReport& r, const InfiniteWordSource& src, const Budget& budget) {
  const auto [pre, per] = *src.periodicity();
  const std::size_t lo = pre + per + 1, hi = pre + per + 4 * per;
  const auto c = c_values(src, lo, hi + per, budget);
  const json params = {{"word", src.id()}, {"preperiod", pre}, {"period", per},
                       {"n_from", lo}, {"n_to", hi}};

  std::vector<std::size_t> window(c.begin(), c.begin() + (hi - lo + 1));
  const bool constant = std::adjacent_find(window.begin(), window.end(), std::not_equal_to<>()) ==
                        window.end();
  r.add(check("c is constant beyond preperiod + period", params, "a single value", window,
              constant, provenance_at(src, hi, budget)));

  bool repeats = true, bounded = true;
  for (std::size_t i = 0; i < window.size(); ++i) {
    repeats = repeats && c[i + per] == c[i];
    bounded = bounded && c[i] <= pre + per;
  }
  r.add(check("c(n + period) = c(n) and c(n) <= preperiod + period beyond preperiod + period",
              params, true, repeats && bounded, repeats && bounded));
}

void aperiodic_checks(SuiteReport& r, const InfiniteWordSource& src, const Budget& budget) {
  constexpr std::size_t kTarget = 8, kMaxN = 4096;
  json reached = json::object();
  std::size_t best = 0, n = 1, min_c = SIZE_MAX;
  for (; n <= kMaxN && best < kTarget; ++n) {
    const auto c = cyclic_class_count(factors(src, n, budget));
    min_c = std::min(min_c, c);
    for (std::size_t m = best + 1; m <= std::min(c, kTarget); ++m) reached[std::to_string(m)] = n;
    best = std::max(best, c);
  }
  r.add(check("c(n) >= M at some n <= 4096 for every M <= 8",
              {{"word", src.id()}, {"M_max", kTarget}, {"n_max", kMaxN}}, "every M reached",
              {{"first_n_per_M", reached}}, best >= kTarget, provenance_at(src, n - 1, budget)));
  r.add(check("c(n) >= 2 on the scanned lengths", {{"word", src.id()}, {"n_to", n - 1}}, ">= 2",
              min_c, min_c >= 2));
  r.add(check("p(n) >= n + 1 for n <= 64", {{"word", src.id()}}, true,
              looks_aperiodic(src, 64, budget), looks_aperiodic(src, 64, budget)));
}

void common_checks(SuiteReport& r, const InfiniteWordSource& src, const Budget& budget) {
  constexpr std::size_t N = 64;
  const auto records = parallel_map<ComplexityRecord>(
      N, [&](std::size_t i) { return complexity_record(src, i + 1, budget); });
  bool sandwich = true;
  std::vector<std::size_t> ones;
  for (const auto& rec : records) {
    sandwich = sandwich && rec.a <= rec.c && rec.c <= rec.p;
    if (rec.c == 1) ones.push_back(rec.n);
  }
  r.add(check("a(n) <= c(n) <= p(n) for n <= 64", {{"word", src.id()}}, true, sandwich, sandwich));
  const auto per = src.periodicity();
  const bool purely_periodic = per && per->first == 0;
  r.add(check("c(n) = 1 for some n only if the word is periodic",
              {{"word", src.id()}, {"n_to", N}},
              ones.empty() ? json("no n with c(n) = 1 required") : json("periodic word"),
              {{"lengths_with_c_1", ones}, {"periodic", purely_periodic}},
              ones.empty() || purely_periodic));
}

void suite_thm1(SuiteReport& r, const RunConfig& cfg) {
  const auto names = all_catalog_names();
  for (const auto& src : sources_for(cfg, names)) {
    if (src->periodicity())
      periodic_checks(r, *src, cfg.budget);
    else
      aperiodic_checks(r, *src, cfg.budget);
    common_checks(r, *src, cfg.budget);
  }
}

// --- lem-balanced ------------------------------------------------------------

void suite_lem_balanced(SuiteReport& r, const RunConfig& cfg) {
  constexpr std::size_t N = 64;
  for (const auto& src : sources_for(cfg, all_catalog_names())) {
    const auto c = c_values(*src, 1, N, cfg.budget);
    const std::size_t C = *std::max_element(c.begin(), c.end());
    std::vector<std::size_t> unbalanced;
    for (std::size_t n = 1; n <= N; ++n) {
      const auto words = factors(*src, n, cfg.budget).words();
      if (!is_c_balanced(words, C)) unbalanced.push_back(n);
    }
    r.add(check("factors of every length n <= N are C-balanced, C = max c(n) over n <= N",
                {{"word", src->id()}, {"N", N}, {"C", C}}, json::array(), unbalanced,
                unbalanced.empty(), provenance_at(*src, N, cfg.budget)));
  }
}

// --- Sturmian suites ----------------------------------------------------------

struct SturmianCase {
  std::string name;
  Slope slope;
};

std::vector<SturmianCase> sturmian_cases() {
  std::vector<SturmianCase> out;
  for (const char* name : {"fibonacci-mechanical", "silver", "sturmian-3-1", "sturmian-1-2"}) {
    const auto& spec = find_entry(name)->spec;
    Slope s{spec.value("head", std::vector<std::uint64_t>{}),
            spec.at("tail").get<std::vector<std::uint64_t>>(), std::nullopt};
    out.push_back({name, std::move(s)});
  }
  return out;
}

void suite_lem_bis2(SuiteReport& r, const RunConfig& cfg) {
  constexpr std::size_t N = 200, P = 256;
  for (const auto& [name, slope] : sturmian_cases()) {
    const auto src = named(name);
    const json params = {{"word", name}, {"slope", slope.str()}};

    struct Row {
      std::size_t p = 0, right_special = 0, c = 0;
      bool reversal_closed = true;
      std::vector<std::size_t> sizes;
    };
    const auto rows = parallel_map<Row>(P + 1, [&](std::size_t n) {
      Row row;
      const auto slice = factors(*src, n, cfg.budget);
      row.p = slice.size();
      row.right_special = special_factors(*src, n, Side::Right, cfg.budget).size();
      for (std::size_t i = 0; i < slice.size(); ++i)
        row.reversal_closed = row.reversal_closed && slice.contains(reverse(slice.word(i)));
      if (n >= 1 && n <= N) {
        const auto inv = inventory_of(slice);
        row.c = inv.class_count();
        row.sizes = inv.class_sizes();
      }
      return row;
    });

    std::vector<std::size_t> bad_p, bad_special, bad_reversal;
    for (std::size_t n = 0; n <= P; ++n) {
      if (rows[n].p != n + 1) bad_p.push_back(n);
      if (rows[n].right_special != 1) bad_special.push_back(n);
      if (!rows[n].reversal_closed) bad_reversal.push_back(n);
    }
    r.add(check("p(n) = n + 1 for n <= 256", params, json::array(), {{"failing_n", bad_p}},
                bad_p.empty(), provenance_at(*src, P, cfg.budget)));
    r.add(check("exactly one right special factor of each length n <= 256", params,
                json::array(), {{"failing_n", bad_special}}, bad_special.empty()));
    r.add(check("the factors of each length n <= 256 are closed under reversal", params,
                json::array(), {{"failing_n", bad_reversal}}, bad_reversal.empty()));

    const auto bis = bispecial_factors(slope, N - 2, cfg.budget);
    std::set<std::size_t> expected{1};
    bool central = true;
    for (const auto& b : bis) {
      expected.insert(b.word.size() + 2);
      central = central && b.p > 0 && is_palindrome(b.word);
    }
    std::vector<std::size_t> observed, bad_sizes;
    for (std::size_t n = 1; n <= N; ++n) {
      if (rows[n].c != 2) continue;
      observed.push_back(n);
      const std::vector<std::size_t> want =
          n == 1 ? std::vector<std::size_t>{1, 1} : std::vector<std::size_t>{n, 1};
      if (rows[n].sizes != want) bad_sizes.push_back(n);
    }
    const std::vector<std::size_t> exp(expected.begin(), expected.end());
    r.add(check("c(n) = 2 exactly at n = 1 and at bispecial lengths + 2, n <= 200", params, exp,
                observed, exp == observed));
    r.add(check("classes at lengths with c(n) = 2 have sizes {n, 1}", params, json::array(),
                {{"failing_n", bad_sizes}}, bad_sizes.empty()));
    std::vector<std::size_t> lengths;
    for (const auto& b : bis) lengths.push_back(b.word.size());
    r.add(check("bispecial factors are central palindromes whose periods (p, q) grow to "
                "(p + q, p) or (p + q, q)",
                params, true, {{"bispecial_lengths", lengths}},
                central && follows_period_rule(bis)));
  }

  // Two constructions of the same word.
  const auto fp = named("fibonacci"), mech = named("fibonacci-mechanical");
  const Word a = fp->prefix(4096), b = mech->prefix(4096);
  r.add(check("the fixed point of 0->01, 1->0 is the characteristic word of slope [0;2,(1)]",
              {{"prefix", 4096}}, true, a == b, a == b));
}

void suite_thm2_separation(SuiteReport& r, const RunConfig& cfg) {
  constexpr std::size_t N = 512;
  const auto cases = sturmian_cases();
  std::vector<Source> srcs;
  for (const auto& c : cases) srcs.push_back(named(c.name));
  srcs.push_back(named("fibonacci-shifted"));

  const std::size_t k = srcs.size();
  const auto flat = parallel_map<std::size_t>(k * N, [&](std::size_t i) {
    return cyclic_class_count(factors(*srcs[i / N], i % N + 1, cfg.budget));
  });
  const auto c_at = [&](std::size_t s, std::size_t n) { return flat[s * N + n - 1]; };

  for (std::size_t i = 0; i < cases.size(); ++i) {
    for (std::size_t j = i + 1; j < cases.size(); ++j) {
      std::optional<std::size_t> least;
      for (std::size_t n = 1; n <= N && !least; ++n)
        if (c_at(i, n) != c_at(j, n)) least = n;
      const json params = {{"x", cases[i].name}, {"y", cases[j].name}, {"n_max", N}};
      if (least) {
        r.add(check("distinct slopes give distinct cyclic complexities", params,
                    "some n <= 512 with c_x(n) != c_y(n)",
                    {{"least_n", *least}, {"c_x", c_at(i, *least)}, {"c_y", c_at(j, *least)}},
                    true));
      } else {
        r.add(info("distinct slopes give distinct cyclic complexities (inconclusive within budget)",
                   params, "some n <= 512 with c_x(n) != c_y(n)", "none found"));
      }
    }
  }

  bool same = true;
  for (std::size_t n = 1; n <= N; ++n) same = same && c_at(0, n) == c_at(k - 1, n);
  r.add(check("same slope, different intercept: equal cyclic complexity for n <= 512",
              {{"x", "fibonacci-mechanical"}, {"y", "fibonacci-shifted"}}, true, same, same));
  bool equal_sets = true;
  for (std::size_t n = 1; n <= 64; ++n)
    equal_sets = equal_sets && factors(*srcs[0], n, cfg.budget).words() ==
                                   factors(*srcs[k - 1], n, cfg.budget).words();
  r.add(check("same slope, different intercept: equal factor sets for n <= 64",
              {{"x", "fibonacci-mechanical"}, {"y", "fibonacci-shifted"}}, true, equal_sets,
              equal_sets));
}

// --- substitutive suites -----------------------------------------------------

/// c at the lengths base^e, e = 0..e_max.
void power_lengths(SuiteReport& r, const std::string& name, std::size_t base, std::size_t e_max,
                   const RunConfig& cfg) {
  const auto src = named(name);
  std::vector<std::size_t> lengths{1};
  for (std::size_t e = 1; e <= e_max; ++e) lengths.push_back(lengths.back() * base);
  const auto c = parallel_map<std::size_t>(lengths.size(), [&](std::size_t i) {
    return cyclic_class_count(factors(*src, lengths[i], cfg.budget));
  });
  const bool aperiodic = looks_aperiodic(*src, 64, cfg.budget);
  r.add(check("the fixed point is aperiodic (p(n) >= n + 1 for n <= 64)", {{"word", name}}, true,
              aperiodic, aperiodic));
  json observed = json::object();
  for (std::size_t i = 0; i < lengths.size(); ++i) observed[std::to_string(lengths[i])] = c[i];
  const bool ok = std::all_of(c.begin(), c.end(), [](auto v) { return v == 2; });
  r.add(check("c(k^n) = 2", {{"word", name}, {"k", base}, {"n_max", e_max}}, "2 at every length",
              observed, ok, provenance_at(*src, lengths.back(), cfg.budget)));
}

void suite_prop_unif(SuiteReport& r, const RunConfig& cfg) {
  power_lengths(r, "period-doubling", 2, 14, cfg);
  power_lengths(r, "slot-010", 3, 8, cfg);
}

/// |mu_1 o ... o mu_n(0)| for the stages of an s-adic catalog entry, up to `cap`.
std::vector<std::size_t> stage_lengths(const json& spec, std::size_t cap) {
  const auto& subs = spec.at("substitutions");
  const bool cycle = spec.value("repeat", std::string("last")) == "cycle";
  std::vector<std::size_t> out;
  std::size_t len = 1;
  for (std::size_t i = 0;; ++i) {
    const auto& s = cycle || i < subs.size() ? subs[i % subs.size()] : subs.back();
    const std::size_t k =
        s.at("u").get<std::string>().size() + s.value("v", std::string()).size() + 1;
    if (len * k > cap) break;
    len *= k;
    out.push_back(len);
  }
  return out;
}

void suite_prop_mor(SuiteReport& r, const RunConfig& cfg) {
  constexpr std::size_t kCap = 20000;
  for (const char* name :
       {"period-doubling-s-adic", "slot-010-s-adic", "s-adic-mixed", "s-adic-mixed-swap"}) {
    const auto src = named(name);
    const auto lengths = stage_lengths(find_entry(name)->spec, kCap);
    const auto c = parallel_map<std::size_t>(lengths.size(), [&](std::size_t i) {
      return cyclic_class_count(factors(*src, lengths[i], cfg.budget));
    });
    const bool aperiodic = looks_aperiodic(*src, 64, cfg.budget);
    r.add(check("the limit word is aperiodic (p(n) >= n + 1 for n <= 64)", {{"word", name}}, true,
                aperiodic, aperiodic));
    json observed = json::object();
    for (std::size_t i = 0; i < lengths.size(); ++i) observed[std::to_string(lengths[i])] = c[i];
    const bool ok = std::all_of(c.begin(), c.end(), [](auto v) { return v == 2; });
    r.add(check("c = 2 at every stage length |mu_1 o ... o mu_n(0)|",
                {{"word", name}, {"max_length", kCap}}, "2 at every stage length", observed, ok,
                provenance_at(*src, lengths.back(), cfg.budget)));
  }
}

void suite_prop_paper(SuiteReport& r, const RunConfig& cfg) {
  constexpr std::size_t kMaxE = 10;
  const std::vector<std::string> names{"paperfolding", "paperfolding-bar", "paperfolding-alt",
                                       "paperfolding-alt-bar"};
  for (const auto& src : sources_for(cfg, names)) {
    std::vector<std::size_t> lengths;
    for (std::size_t e = 1; e <= kMaxE; ++e) lengths.push_back(std::size_t{4} << e);
    const auto c = parallel_map<std::size_t>(lengths.size(), [&](std::size_t i) {
      return cyclic_class_count(factors(*src, lengths[i], cfg.budget));
    });
    json observed = json::object();
    for (std::size_t i = 0; i < lengths.size(); ++i) observed[std::to_string(lengths[i])] = c[i];
    const bool ok = std::all_of(c.begin(), c.end(), [](auto v) { return v == 4; });
    r.add(check("c(4 * 2^n) = 4 for 1 <= n <= 10", {{"word", src->id()}}, "4 at every length",
                observed, ok, provenance_at(*src, lengths.back(), cfg.budget)));

    std::vector<std::size_t> bad;
    for (std::size_t n = 7; n <= 64; ++n)
      if (factor_complexity(*src, n, cfg.budget) != 4 * n) bad.push_back(n);
    r.add(check("p(n) = 4n for 7 <= n <= 64", {{"word", src->id()}}, json::array(),
                {{"failing_n", bad}}, bad.empty()));
  }

  constexpr std::size_t L = std::size_t{1} << 14;
  const Word toeplitz_prefix = named("toeplitz-0?1?")->prefix(L);
  const Word folding_prefix = named("paperfolding")->prefix(L);
  const bool same = toeplitz_prefix == folding_prefix;
  r.add(check("the Toeplitz word of 0?1? equals lim tau^n(00)", {{"prefix", L}}, true, same, same));
}

// --- Thue-Morse --------------------------------------------------------------

void suite_tm_lemmas(SuiteReport& r, const RunConfig& cfg) {
  const auto tm = named("thue-morse");
  const Budget& budget = cfg.budget;

  // Length-4 factors and their position parity.
  const std::vector<std::string> even4{"0101", "0110", "1001", "1010"};
  const std::vector<std::string> odd4{"0010", "0011", "0100", "1011", "1100", "1101"};
  std::vector<std::string> all4 = even4;
  all4.insert(all4.end(), odd4.begin(), odd4.end());
  std::sort(all4.begin(), all4.end());
  const auto f4 = strings(factors(*tm, 4, budget).words());
  r.add(check("the ten factors of length 4", {{"n", 4}}, all4, f4, f4 == all4,
              provenance_at(*tm, 4, budget)));

  constexpr std::size_t kParityPrefix = std::size_t{1} << 14;
  const Word text = tm->prefix(kParityPrefix);
  const auto parity_sets = [&](std::size_t n) {
    std::map<std::string, int> mask;  // bit 0: even start, bit 1: odd start (0-based)
    const auto s = text.str();
    for (std::size_t i = 0; i + n <= s.size(); ++i) mask[s.substr(i, n)] |= 1 << (i % 2);
    return mask;
  };
  {
    std::vector<std::string> even, odd, both;
    for (const auto& [w, m] : parity_sets(4))
      (m == 3 ? both : m == 1 ? even : odd).push_back(w);
    const bool ok = even == even4 && odd == odd4 && both.empty();
    r.add(check("length-4 factors split into even-position and odd-position occurrences",
                {{"prefix", kParityPrefix}, {"positions", "0-based"}},
                {{"even", even4}, {"odd", odd4}, {"both", json::array()}},
                {{"even", even}, {"odd", odd}, {"both", both}}, ok));
  }
  {
    std::vector<std::size_t> mixed;
    for (std::size_t n = 4; n <= 64; ++n)
      for (const auto& [w, m] : parity_sets(n))
        if (m == 3) {
          mixed.push_back(n);
          break;
        }
    r.add(check("for 4 <= n <= 64 no factor occurs at both parities", {{"prefix", kParityPrefix}},
                json::array(), {{"failing_n", mixed}}, mixed.empty()));
  }

  // p and f recurrences, 2 <= n <= 512.
  constexpr std::size_t N = 512;
  const auto be = parallel_map<BeginEnd>(2 * N + 2, [&](std::size_t n) {
    return n < 2 ? BeginEnd{} : begin_end_counts(*tm, n, budget);
  });
  const auto p = [&](std::size_t n) { return be[n].same + be[n].different; };
  const auto faa = [&](std::size_t n) { return be[n].same; };
  const auto fab = [&](std::size_t n) { return be[n].different; };
  std::vector<std::size_t> bad_p, bad_f, bad_third, bad_linear;
  for (std::size_t n = 2; n <= N; ++n) {
    if (p(2 * n) != p(n) + p(n + 1) || p(2 * n + 1) != 2 * p(n + 1)) bad_p.push_back(n);
    if (faa(2 * n) != fab(n) + fab(n + 1) || fab(2 * n) != faa(n) + faa(n + 1) ||
        faa(2 * n + 1) != 2 * faa(n + 1) || fab(2 * n + 1) != 2 * fab(n + 1))
      bad_f.push_back(n);
    if (3 * faa(n) < p(n) || 3 * fab(n) < p(n)) bad_third.push_back(n);
    if (faa(n) + 1 < n || fab(n) + 1 < n) bad_linear.push_back(n);
  }
  const json range = {{"n_from", 2}, {"n_to", N}};
  r.add(check("p(2n) = p(n) + p(n+1) and p(2n+1) = 2p(n+1)", range, json::array(),
              {{"failing_n", bad_p}}, bad_p.empty(), provenance_at(*tm, 2 * N + 1, budget)));
  r.add(check("f_aa(2n) = f_ab(n) + f_ab(n+1), f_ab(2n) = f_aa(n) + f_aa(n+1), "
              "f_aa(2n+1) = 2f_aa(n+1), f_ab(2n+1) = 2f_ab(n+1)",
              range, json::array(), {{"failing_n", bad_f}}, bad_f.empty()));
  r.add(check("f_aa(n) >= p(n)/3 and f_ab(n) >= p(n)/3", range, json::array(),
              {{"failing_n", bad_third}}, bad_third.empty()));
  r.add(check("f_aa(n) >= n - 1 and f_ab(n) >= n - 1", range, json::array(),
              {{"failing_n", bad_linear}}, bad_linear.empty()));

  // Dyadic minima of c.
  constexpr std::size_t K = 11;
  const auto c = c_values(*tm, 1, (std::size_t{2} << K) - 1, budget);
  std::vector<std::size_t> minima;
  for (std::size_t k = 0; k <= K; ++k)
    minima.push_back(*std::min_element(c.begin() + ((std::size_t{1} << k) - 1),
                                       c.begin() + ((std::size_t{2} << k) - 1)));
  const bool monotone = std::is_sorted(minima.begin(), minima.end());
  r.add(check("min of c(n) over [2^k, 2^(k+1)) is non-decreasing in k", {{"k_max", K}},
              "non-decreasing", minima, monotone,
              provenance_at(*tm, (std::size_t{2} << K) - 1, budget)));
  r.add(check("min of c(n) over [2^5, 2^6) is at least 4", {{"k", 5}}, ">= 4", minima[5],
              minima[5] >= 4));

  // Lower-bound constructions behind the growth of c.
  constexpr std::size_t kFrom = 5, kTo = 128;
  struct Evidence {
    std::size_t candidates = 0;
    bool even_ok = true, odd_ok = true;
    std::size_t max_mates = 0;
  };
  const Morphism mu = Morphism::parse({"01", "10"});
  const auto ev = parallel_map<Evidence>(kTo - kFrom + 1, [&](std::size_t i) {
    const std::size_t n = kFrom + i;
    Evidence e;
    const auto even_inv = inventory_of(factors(*tm, 2 * n, budget));
    const auto odd_inv = inventory_of(factors(*tm, 2 * n + 1, budget));
    for (const auto& u : factors(*tm, n + 1, budget).words()) {
      if (u[0] == u[n]) continue;
      ++e.candidates;
      const Word m = mu.apply(u);
      const auto* ce = even_inv.find(m.factor(1, 2 * n));
      e.even_ok = e.even_ok && ce && ce->members.size() == 1;
      const auto* co = odd_inv.find(m.factor(0, 2 * n + 1));
      e.odd_ok = e.odd_ok && co && co->members.size() <= 7;
      if (co) e.max_mates = std::max(e.max_mates, co->members.size() - 1);
    }
    return e;
  });
  std::vector<std::size_t> few, even_bad, odd_bad;
  std::size_t max_mates = 0;
  for (std::size_t i = 0; i < ev.size(); ++i) {
    const std::size_t n = kFrom + i;
    if (ev[i].candidates < n) few.push_back(n);
    if (!ev[i].even_ok) even_bad.push_back(n);
    if (!ev[i].odd_ok) odd_bad.push_back(n);
    max_mates = std::max(max_mates, ev[i].max_mates);
  }
  const json cons = {{"n_from", kFrom}, {"n_to", kTo}};
  r.add(check("at least n factors of length n+1 begin and end with different letters", cons,
              json::array(), {{"failing_n", few}}, few.empty()));
  r.add(check("each mu(u) with first and last letter removed is alone in its class (length 2n)",
              cons, json::array(), {{"failing_n", even_bad}}, even_bad.empty()));
  r.add(check("each mu(u) with last letter removed has at most 6 other factors in its class "
              "(length 2n+1)",
              cons, json::array(), {{"failing_n", odd_bad}, {"max_other_factors", max_mates}},
              odd_bad.empty()));
  r.add(info("sharper bound of at most 3 other factors for the odd-length construction", cons,
             "<= 3", {{"max_other_factors", max_mates}, {"holds", max_mates <= 3}}));
}

// --- antidictionaries and the periodic pair ------------------------------------

FactorialLanguage language(std::initializer_list<const char*> forbidden) {
  std::vector<Word> f;
  for (const char* s : forbidden) f.push_back(Word::parse(s));
  return FactorialLanguage::from_forbidden(std::move(f));
}

void suite_sec4_examples(SuiteReport& r, const RunConfig& cfg) {
  constexpr std::size_t N = 36;
  const auto x = named("tau-pair-x"), y = named("tau-pair-y");
  const Morphism tau = Morphism::parse({"010", "011"});
  const bool images = x->prefix(18) == tau.apply(Word::parse("010011")) &&
                      y->prefix(18) == tau.apply(Word::parse("101100"));
  r.add(check("the pair are the images of (010011)^omega and (101100)^omega under 0->010, 1->011",
              json::object(), true, images, images));
  const auto minimal_period = [](const InfiniteWordSource& s) {
    return periods(s.prefix(54)).front();
  };
  const std::size_t px = minimal_period(*x), py = minimal_period(*y);
  r.add(check("each word of the pair has least period 18", json::object(), {18, 18}, {px, py},
              px == 18 && py == 18));
  const auto cx = c_values(*x, 1, N, cfg.budget), cy = c_values(*y, 1, N, cfg.budget);
  r.add(check("equal cyclic complexity for 1 <= n <= 36", {{"n_to", N}}, cx, cy, cx == cy,
              provenance_at(*x, N, cfg.budget)));
  const bool related = languages_isomorphic_or_mirror(*x, *y, N, cfg.budget);
  r.add(check("the factor sets are neither isomorphic nor mirror images", {{"n_to", N}}, false,
              related, !related));

  const auto lx = language({"11", "000"}), ly = language({"11", "101"});
  const auto c5x = cyclic_complexity_L(lx, 5).count, c5y = cyclic_complexity_L(ly, 5).count;
  r.add(check("c(5) for the antidictionaries {11, 000} and {11, 101}", {{"n", 5}}, {3, 4},
              {c5x, c5y}, c5x == 3 && c5y == 4));
  const auto slice = strings(lx.slice(5));
  const std::vector<std::string> seven{"00100", "00101", "01001", "01010",
                                       "10010", "10100", "10101"};
  r.add(check("the antidictionary {11, 000} admits exactly 7 words of length 5",
              {{"forbidden", {"11", "000"}}}, seven, slice, slice == seven));
  const std::vector<std::string> listed{"00100", "00101", "01001", "10010", "10100", "10101"};
  std::vector<std::string> missing;
  std::set_difference(slice.begin(), slice.end(), listed.begin(), listed.end(),
                      std::back_inserter(missing));
  r.add(info("words of length 5 outside {00100, 00101, 01001, 10010, 10100, 10101}",
             {{"forbidden", {"11", "000"}}}, json::array(), missing));
  const std::vector<std::string> listed_y{"00000", "10000", "10010", "10001"};
  std::set<std::string> keys;
  for (const auto& s : listed_y) keys.insert(canonical_rotation(Word::parse(s)).str());
  const bool pairwise = keys.size() == listed_y.size() &&
                        std::all_of(listed_y.begin(), listed_y.end(),
                                    [&](const auto& s) { return ly.contains(Word::parse(s)); });
  r.add(check("00000, 10000, 10010, 10001 avoid {11, 101} and are pairwise non-conjugate",
              json::object(), true, pairwise, pairwise));
  std::vector<std::size_t> mfx, mfy;
  for (std::size_t n = 1; n <= 12; ++n) {
    mfx.push_back(mf_of_language(lx, n).size());
    mfy.push_back(mf_of_language(ly, n).size());
  }
  r.add(check("{11, 000} and {11, 101} have equal minimal forbidden factor counts, n <= 12",
              json::object(), mfx, mfy, mfx == mfy));

  constexpr std::size_t M = 14;
  const auto la = language({"000111"}), lb = language({"001111"});
  std::vector<std::size_t> ca, cb;
  for (std::size_t n = 1; n <= M; ++n) {
    ca.push_back(cyclic_complexity_L(la, n).count);
    cb.push_back(cyclic_complexity_L(lb, n).count);
  }
  r.add(check("{000111} and {001111} give equal cyclic complexity for n <= 14", {{"n_to", M}}, ca,
              cb, ca == cb));
  const bool rel = languages_isomorphic_or_mirror(la, lb, 8);
  r.add(check("{000111} and {001111} give languages neither isomorphic nor mirror images",
              {{"n_to", 8}}, false, rel, !rel));
}

// --- Christoffel ---------------------------------------------------------------

void suite_christoffel(SuiteReport& r, const RunConfig& cfg) {
  const std::vector<std::string> expected_rows{"00100101", "00101001", "01001001", "01001010",
                                               "01010010", "10010010", "10010100", "10100100"};
  const auto a53 = christoffel_array(5, 3);
  const auto rows = strings(a53.rows);
  r.add(check("the (5,3)-Christoffel array", {{"r", 5}, {"s", 3}}, expected_rows, rows,
              rows == expected_rows));

  const auto fib = named("fibonacci");
  std::vector<std::string> with_53, others;
  for (const auto& w : factors(*fib, 8, cfg.budget).words()) {
    const auto pv = parikh(w);
    (pv[0] == 5 ? with_53 : others).push_back(w.str());
  }
  r.add(check("the rows are the length-8 Fibonacci factors with 5 zeros; the other factor is "
              "10100101",
              json::object(), {{"rows", expected_rows}, {"other", {"10100101"}}},
              {{"rows", with_53}, {"other", others}},
              with_53 == expected_rows && others == std::vector<std::string>{"10100101"}));

  constexpr std::uint64_t kMaxSum = 40;
  std::size_t arrays = 0;
  json failures = json::array();
  json inverse_failures = json::array();
  for (std::uint64_t total = 2; total <= kMaxSum; ++total) {
    for (std::uint64_t rr = 1; rr < total; ++rr) {
      const std::uint64_t s = total - rr;
      if (std::gcd(rr, s) != 1) continue;
      ++arrays;
      const auto arr = christoffel_array(rr, s);
      auto v = arr.violations();
      const Word cw = christoffel_word(rr, s);
      if (cw != canonical_rotation(cw)) v.push_back("least-conjugate");
      if (!v.empty()) failures.push_back({{"r", rr}, {"s", s}, {"violations", v}});

      const auto central = is_central(cw.factor(1, cw.size() - 2));
      bool ok = false;
      if (central) {
        const auto m = central->p + central->q;
        const auto ip = inverse_mod(central->p % m, m), iq = inverse_mod(central->q % m, m);
        ok = m == total && ip && iq &&
             std::multiset<std::uint64_t>{*ip, *iq} == std::multiset<std::uint64_t>{rr % m, s % m};
      }
      if (!ok) inverse_failures.push_back({{"r", rr}, {"s", s}});
    }
  }
  r.add(check("array invariants and least-conjugate property for coprime r + s <= 40",
              {{"max_sum", kMaxSum}, {"arrays", arrays}}, json::array(), failures,
              failures.empty()));
  r.add(check("{r, s} = {p^-1, q^-1} mod (p + q) for the central word of each Christoffel word",
              {{"max_sum", kMaxSum}}, json::array(), inverse_failures, inverse_failures.empty()));
}

struct SuiteDef {
  const char* id;
  const char* claim;
  void (*run)(SuiteReport&, const RunConfig&);
  bool accepts_word;
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs{
      {"thm1", "An infinite word is ultimately periodic if and only if its cyclic complexity is bounded.",
       suite_thm1, true},
      {"lem-balanced",
       "If c(n) <= C for every n, the factors of each length are C-balanced.", suite_lem_balanced,
       true},
      {"lem-bis2",
       "For a Sturmian word, c(n) = 2 exactly when n = 1 or there is a bispecial factor of length "
       "n - 2, and then one class has n elements and the other one.",
       suite_lem_bis2, false},
      {"thm2-separation",
       "Sturmian words with equal cyclic complexity have the same slope; distinct slopes are "
       "separated at some finite length.",
       suite_thm2_separation, false},
      {"prop-unif",
       "For an aperiodic fixed point of a -> u slot(a) v with k = |u| + |v| + 1, c(k^n) = 2.",
       suite_prop_unif, false},
      {"prop-mor",
       "An aperiodic limit of substitutions a -> u_i slot(a) v_i has c = 2 at the lengths "
       "|mu_1 o ... o mu_n(0)|, so liminf c = 2.",
       suite_prop_mor, false},
      {"prop-paper", "Every paperfolding word w satisfies c_w(4 * 2^n) = 4 for n >= 1.",
       suite_prop_paper, true},
      {"tm-lemmas",
       "Thue-Morse: p and f satisfy the doubling recurrences, f_aa, f_ab >= max(p/3, n - 1), and "
       "c grows without bound along dyadic ranges.",
       suite_tm_lemmas, false},
      {"sec4-examples",
       "Equal cyclic complexity does not force isomorphic factor sets, and equal minimal "
       "forbidden factor complexity does not force equal cyclic complexity.",
       suite_sec4_examples, false},
      {"christoffel",
       "The sorted conjugates of a Christoffel word form an array whose rows differ by adjacent "
       "swaps and whose first and last columns are 0^r 1^s and 1^s 0^r.",
       suite_christoffel, false},
  };
  return defs;
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& d : suites()) out.push_back(d.id);
    return out;
  }();
  return ids;
}

SuiteReport run_suite(const std::string& id, const RunConfig& cfg) {
  const auto it = std::find_if(suites().begin(), suites().end(),
                               [&](const SuiteDef& d) { return id == d.id; });
  if (it == suites().end()) throw ConfigError("unknown suite \"" + id + "\"");
  if (cfg.word && !it->accepts_word)
    throw ConfigError("suite " + id + " runs on fixed words and takes no word");

  SuiteReport report{it->id, it->claim, {}, 0};
  const auto start = std::chrono::steady_clock::now();
  try {
    it->run(report, cfg);
  } catch (const BudgetExhausted& e) {
    report.add(check("all factor sets certified within the prefix budget",
                     {{"budget", e.budget()}, {"n", e.factor_length()}}, "certified",
                     "budget-exhausted", false));
  }
  report.runtime_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace cyclo

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/catalog.hpp"
#include "cyclo/complexity.hpp"
#include "cyclo/error.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

Word W(std::string_view s) { return Word::parse(s); }

Source named(std::string_view name) { return resolve_word(name); }

std::set<std::string> strs(const std::vector<Word>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(w.str());
  return out;
}

std::string repeat_to(const std::string& pre, const std::string& per, std::size_t L) {
  std::string s = pre;
  while (s.size() < L) s += per;
  return s.substr(0, L);
}

}  // namespace

TEST_CASE("factor sets") {
  CHECK(strs(factors(*named("thue-morse"), 4).words()) ==
        std::set<std::string>{"0101", "0110", "1001", "1010", "0010", "0011", "0100", "1011",
                              "1100", "1101"});
  CHECK(strs(factors(*named("fibonacci"), 2).words()) == std::set<std::string>{"00", "01", "10"});
  CHECK(strs(factors(*named("alternating"), 3).words()) == std::set<std::string>{"010", "101"});
  CHECK(factors(*named("fibonacci"), 0).size() == 1);
}

TEST_CASE("factor, abelian and cyclic complexity examples") {
  CHECK(factor_complexity(*named("fibonacci"), 8) == 9);
  CHECK(factor_complexity(*named("thue-morse"), 4) == 10);
  CHECK(factor_complexity(*named("constant"), 17) == 1);
  CHECK(abelian_complexity(*named("fibonacci"), 8) == 2);
  CHECK(abelian_complexity(*named("thue-morse"), 4) == 3);
  CHECK(abelian_complexity(*named("thue-morse"), 0) == 1);

  const auto tm = cyclic_complexity(*named("thue-morse"), 4);
  CHECK(tm.count == 4);
  std::set<std::set<std::string>> classes;
  for (const auto& c : tm.inventory.classes) classes.insert(strs(c.members));
  CHECK(classes == std::set<std::set<std::string>>{{"0101", "1010"},
                                                   {"0110", "1001", "0011", "1100"},
                                                   {"0010", "0100"},
                                                   {"1011", "1101"}});

  const auto fib = cyclic_complexity(*named("fibonacci"), 8);
  CHECK(fib.count == 2);
  CHECK(fib.inventory.class_sizes() == std::vector<std::size_t>{8, 1});

  const auto p011 = ultimately_periodic(W(""), W("011"));
  CHECK(cyclic_complexity(*p011, 3).count == 1);
}

TEST_CASE("minimal forbidden factors") {
  CHECK(strs(minimal_forbidden(*named("fibonacci"), 2)) == std::set<std::string>{"11"});
  CHECK(strs(minimal_forbidden(*named("thue-morse"), 3)) == std::set<std::string>{"000", "111"});
  CHECK(strs(minimal_forbidden(*named("constant"), 1)) == std::set<std::string>{"1"});
  CHECK_THROWS_AS(minimal_forbidden(*named("constant"), 0), InvalidArgument);
}

TEST_CASE("begin/end counts") {
  const auto tm4 = begin_end_counts(*named("thue-morse"), 4);
  CHECK(tm4.same == 6);
  CHECK(tm4.different == 4);
  const auto tm2 = begin_end_counts(*named("thue-morse"), 2);
  CHECK(tm2.same == 2);
  CHECK(tm2.different == 2);
  const auto alt = begin_end_counts(*named("alternating"), 3);
  CHECK(alt.same == 2);
  CHECK(alt.different == 0);
  CHECK_THROWS_AS(begin_end_counts(*named("ternary-periodic"), 3), InvalidArgument);
  CHECK_THROWS_AS(begin_end_counts(*named("thue-morse"), 1), InvalidArgument);
}

TEST_CASE("special factors") {
  const auto fib = named("fibonacci");
  CHECK(strs(special_factors(*fib, 1, Side::Right)) == std::set<std::string>{"0"});
  CHECK(strs(special_factors(*fib, 6, Side::Both)) == std::set<std::string>{"010010"});
  for (std::size_t n = 0; n <= 40; ++n) {
    CHECK(special_factors(*fib, n, Side::Right).size() == 1);
    CHECK(special_factors(*fib, n, Side::Left).size() == 1);
  }
  CHECK(strs(special_factors(*fib, 2, Side::Right)) == std::set<std::string>{"10"});
  CHECK_THROWS_AS(special_factors(*named("ternary-periodic"), 2, Side::Right), InvalidArgument);
}

TEST_CASE("sandwich a <= c <= p across the catalog") {
  for (const auto& e : catalog()) {
    const auto src = make_source(e.spec);
    for (std::size_t n = 1; n <= 48; ++n) {
      const auto r = complexity_record(*src, n);
      CHECK(r.a <= r.c);
      CHECK(r.c <= r.p);
    }
  }
}

TEST_CASE("complexity agrees with window-scan oracles on random ultimately periodic words") {
  oracle::Rng rng{2024};
  for (int trial = 0; trial < 200; ++trial) {
    const auto pre = rng.word("01", rng.below(5));
    const auto per = rng.word("01", 1 + rng.below(8));
    const auto src = ultimately_periodic(W(pre), W(per));
    for (std::size_t n = 1; n <= 16; ++n) {
      const auto text = repeat_to(pre, per, pre.size() + 4 * per.size() + n);
      const auto f = oracle::factors_of(text, n);
      const auto shorter = oracle::factors_of(text, n - 1);
      const auto r = complexity_record(*src, n);
      CHECK(r.p == f.size());
      CHECK(r.a == oracle::abelian_count(f));
      CHECK(r.c == oracle::cyclic_count(f));
      CHECK(r.mf == oracle::minimal_forbidden(shorter, f, "01", n).size());
      CHECK(strs(factors(*src, n).words()) == f);
    }
  }
}

TEST_CASE("cyclic class count matches the inventory on long slices") {
  for (const char* name : {"thue-morse", "paperfolding", "period-doubling", "fibonacci"})
    for (std::size_t n : {63u, 64u, 65u, 200u, 257u}) {
      const auto slice = factors(*named(name), n);
      CHECK(cyclic_class_count(slice) == inventory_of(slice).class_count());
    }
}

TEST_CASE("minimal forbidden from slices") {
  const auto shorter = FactorSlice::from_words(std::vector<Word>{W("0"), W("1")}, 1);
  const auto slice = FactorSlice::from_words(std::vector<Word>{W("01"), W("10"), W("00")}, 2);
  CHECK(strs(minimal_forbidden(shorter, slice)) == std::set<std::string>{"11"});
}

TEST_CASE("sufficiency is recorded") {
  const auto fib = factors(*named("fibonacci-mechanical"), 30);
  CHECK(fib.provenance().prefix_length >= 30);
  CHECK_FALSE(fib.provenance().method.empty());
  const auto tm = factors(*named("thue-morse"), 30);
  CHECK(tm.provenance().sufficient);
  CHECK_FALSE(tm.provenance().str().empty());
}

TEST_CASE("budget exhaustion is reported, never truncated") {
  Budget tiny{64};
  CHECK_THROWS_AS(factors(*named("thue-morse"), 40, tiny), BudgetExhausted);
  try {
    factors(*named("thue-morse"), 40, tiny);
  } catch (const BudgetExhausted& e) {
    CHECK(e.factor_length() == 40);
    CHECK(e.budget() == 64);
  }
}

TEST_CASE("aperiodicity heuristic") {
  CHECK(looks_aperiodic(*named("thue-morse")));
  CHECK_FALSE(looks_aperiodic(*named("alternating")));
}

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cyclo/error.hpp"
#include "cyclo/languages.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

Word W(std::string_view s) { return Word::parse(s); }

FactorialLanguage lang(std::initializer_list<const char*> forbidden) {
  std::vector<Word> f;
  for (const char* s : forbidden) f.push_back(W(s));
  return FactorialLanguage::from_forbidden(f);
}

std::set<std::string> strs(const std::vector<Word>& ws) {
  std::set<std::string> out;
  for (const auto& w : ws) out.insert(w.str());
  return out;
}

/// Words of length n avoiding every element of `forbidden`, by substring scan.
oracle::Set naive_slice(const std::vector<std::string>& forbidden, std::size_t n,
                        const std::string& alphabet = "01") {
  oracle::Set out;
  for (const auto& w : oracle::all_words(alphabet, n)) {
    bool ok = true;
    for (const auto& f : forbidden) ok = ok && w.find(f) == std::string::npos;
    if (ok) out.insert(w);
  }
  return out;
}

const std::vector<std::vector<std::string>> kAntidictionaries = {
    {"11", "000"}, {"11", "101"}, {"000111"}, {"001111"}, {"11"},
    {"00", "111"}, {"010", "1001"}, {"0000", "11011", "1111"},
};

}  // namespace

TEST_CASE("construction") {
  CHECK_THROWS_AS(lang({""}), InvalidArgument);
  CHECK(strs(lang({"0", "1"}).slice(0)) == std::set<std::string>{""});
  CHECK(lang({"0", "1"}).slice(1).empty());
  CHECK_THROWS_AS(FactorialLanguage::from_forbidden({Word::parse("2", Alphabet("012"))}),
                  InvalidArgument);
}

TEST_CASE("slices from the counterexamples") {
  CHECK(strs(lang({"11", "000"}).slice(5)) ==
        std::set<std::string>{"00100", "00101", "01001", "01010", "10010", "10100", "10101"});
  const auto y5 = strs(lang({"11", "101"}).slice(5));
  CHECK(y5.size() == 9);
  for (const char* w : {"00000", "10000", "10010", "10001"}) CHECK(y5.count(w) == 1);
  CHECK(lang({"11", "101"}).slice_size(5) == 9);
}

TEST_CASE("c_L examples") {
  CHECK(cyclic_complexity_L(lang({"11", "000"}), 5).count == 3);
  CHECK(cyclic_complexity_L(lang({"11", "101"}), 5).count == 4);
  const auto c = cyclic_complexity_L(lang({"11"}), 2);
  CHECK(c.count == 2);
  CHECK(c.inventory.class_sizes() == std::vector<std::size_t>{2, 1});
}

TEST_CASE("minimality and mf") {
  CHECK(is_minimal_antidictionary({W("11"), W("101")}));
  CHECK_FALSE(is_minimal_antidictionary({W("11"), W("110")}));
  const auto y = lang({"11", "101"});
  CHECK(strs(mf_of_language(y, 2)) == std::set<std::string>{"11"});
  CHECK(strs(mf_of_language(y, 3)) == std::set<std::string>{"101"});
  CHECK(strs(mf_of_language(lang({"000111"}), 6)) == std::set<std::string>{"000111"});
}

TEST_CASE("automaton enumeration equals the naive filter for n <= 14") {
  for (const auto& f : kAntidictionaries) {
    std::vector<Word> fw;
    for (const auto& s : f) fw.push_back(W(s));
    const auto L = FactorialLanguage::from_forbidden(fw);
    for (std::size_t n = 0; n <= 14; ++n) {
      const auto expected = naive_slice(f, n);
      CHECK(strs(L.slice(n)) == expected);
      CHECK(L.slice_size(n) == expected.size());
      CHECK(L.factor_slice(n).size() == expected.size());
    }
    for (const auto& w : oracle::all_words("01", 9))
      CHECK(L.contains(W(w)) == naive_slice(f, 9).count(w));
  }
}

TEST_CASE("ternary languages") {
  const Alphabet abc("012");
  const auto L = FactorialLanguage::from_forbidden(
      {Word::parse("00", abc), Word::parse("12", abc), Word::parse("210", abc)}, abc);
  for (std::size_t n = 0; n <= 8; ++n)
    CHECK(strs(L.slice(n)) == naive_slice({"00", "12", "210"}, n, "012"));
}

TEST_CASE("slices are factorial") {
  for (const auto& f : kAntidictionaries) {
    std::vector<Word> fw;
    for (const auto& s : f) fw.push_back(W(s));
    const auto L = FactorialLanguage::from_forbidden(fw);
    for (std::size_t n = 1; n <= 12; ++n) {
      const auto shorter = strs(L.slice(n - 1));
      for (const auto& w : L.slice(n)) {
        const auto s = w.str();
        CHECK(shorter.count(s.substr(1)) == 1);
        CHECK(shorter.count(s.substr(0, n - 1)) == 1);
      }
    }
  }
}

TEST_CASE("mf of a minimal antidictionary is the antidictionary") {
  for (const auto& f : kAntidictionaries) {
    std::vector<Word> fw;
    std::size_t longest = 0;
    for (const auto& s : f) {
      fw.push_back(W(s));
      longest = std::max(longest, s.size());
    }
    REQUIRE(is_minimal_antidictionary(fw));
    const auto L = FactorialLanguage::from_forbidden(fw);
    for (std::size_t n = 1; n <= longest + 2; ++n) {
      const auto naive = oracle::minimal_forbidden(naive_slice(f, n - 1), naive_slice(f, n), "01", n);
      CHECK(strs(mf_of_language(L, n)) == naive);
      std::set<std::string> of_length;
      for (const auto& s : f)
        if (s.size() == n) of_length.insert(s);
      CHECK(naive == of_length);
    }
  }
}

TEST_CASE("isomorphism and mirror") {
  const auto a = lang({"000111"}), b = lang({"001111"});
  CHECK_FALSE(languages_isomorphic_or_mirror(a, b, 8));
  for (std::size_t n = 1; n <= 8; ++n)
    CHECK(cyclic_complexity_L(a, n).count == cyclic_complexity_L(b, n).count);
  const auto x = lang({"11", "101", "0001"});
  CHECK(languages_isomorphic_or_mirror(x, x, 10));
  CHECK(languages_isomorphic_or_mirror(x, x.mirror(), 10));
  CHECK(languages_isomorphic_or_mirror(x, x.rename({1, 0}), 10));
  CHECK_FALSE(languages_isomorphic_or_mirror(lang({"11", "000"}), lang({"11", "101"}), 6));
}

TEST_CASE("renaming and mirroring preserve p, a and c") {
  for (const auto& f : kAntidictionaries) {
    std::vector<Word> fw;
    for (const auto& s : f) fw.push_back(W(s));
    const auto L = FactorialLanguage::from_forbidden(fw);
    for (const auto& M : {L.mirror(), L.rename({1, 0}), L.rename({1, 0}).mirror()}) {
      for (std::size_t n = 1; n <= 12; ++n) {
        const auto s1 = L.factor_slice(n), s2 = M.factor_slice(n);
        CHECK(s1.size() == s2.size());
        CHECK(abelian_class_count(s1) == abelian_class_count(s2));
        CHECK(cyclic_class_count(s1) == cyclic_class_count(s2));
      }
    }
  }
}

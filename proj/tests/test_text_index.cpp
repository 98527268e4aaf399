#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <memory>

#include "cyclo/text_index.hpp"
#include "oracles.hpp"

using namespace cyclo;

namespace {

std::string window(const std::string& s, std::uint32_t start, std::size_t n) {
  return s.substr(start, n);
}

Text to_text(const std::string& s) {
  Text t;
  for (char c : s) t.push_back(static_cast<Symbol>(c - '0'));
  return t;
}

void compare_backends(const std::string& s, std::size_t sigma) {
  auto text = std::make_shared<const Text>(to_text(s));
  const TextIndex index(text, sigma);
  for (std::size_t n = 0; n <= s.size() + 1; ++n) {
    const auto expected = oracle::factors_of(s, n);
    const auto sa = index.distinct_factor_starts(n);
    const auto scan = scan_distinct_factors(*text, n);
    REQUIRE(sa.size() == expected.size());
    CHECK(index.distinct_factor_count(n) == expected.size());
    REQUIRE(scan.size() == expected.size());
    auto it = expected.begin();
    for (std::size_t i = 0; i < sa.size(); ++i, ++it) {
      CHECK(window(s, sa[i], n) == *it);
      CHECK(window(s, scan[i], n) == *it);
    }
  }
}

}  // namespace

TEST_CASE("suffix array is sorted and lcp is exact") {
  const std::string s = "0110100110010110";
  const TextIndex index(std::make_shared<const Text>(to_text(s)), 2);
  const auto sa = index.suffix_array();
  const auto lcp = index.lcp();
  REQUIRE(sa.size() == s.size());
  for (std::size_t i = 1; i < sa.size(); ++i) {
    const auto a = s.substr(sa[i - 1]), b = s.substr(sa[i]);
    CHECK(a < b);
    std::size_t l = 0;
    while (l < a.size() && l < b.size() && a[l] == b[l]) ++l;
    CHECK(lcp[i] == l);
  }
}

TEST_CASE("empty text") {
  const TextIndex index(std::make_shared<const Text>(), 2);
  CHECK(index.distinct_factor_count(0) == 1);
  CHECK(index.distinct_factor_count(1) == 0);
  CHECK(scan_distinct_factors({}, 1).empty());
}

TEST_CASE("backends agree with the window-scan oracle on random binary texts") {
  oracle::Rng rng{1};
  for (int trial = 0; trial < 60; ++trial) compare_backends(rng.word("01", 1 + rng.below(80)), 2);
}

TEST_CASE("backends agree with the window-scan oracle on random ternary texts") {
  oracle::Rng rng{2};
  for (int trial = 0; trial < 60; ++trial) compare_backends(rng.word("012", 1 + rng.below(60)), 3);
}

TEST_CASE("backends agree on highly repetitive texts") {
  compare_backends(std::string(50, '0'), 2);
  std::string s;
  for (int i = 0; i < 30; ++i) s += "001";
  compare_backends(s, 2);
}

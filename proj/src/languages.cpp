#include "cyclo/languages.hpp"

#include <algorithm>
#include <deque>
#include <functional>
#include <numeric>

#include "cyclo/error.hpp"

namespace cyclo {

bool is_minimal_antidictionary(const std::vector<Word>& forbidden) {
  for (std::size_t i = 0; i < forbidden.size(); ++i)
    for (std::size_t j = 0; j < forbidden.size(); ++j) {
      if (i == j) continue;
      if (forbidden[i] == forbidden[j]) return false;
      if (forbidden[i].size() <= forbidden[j].size() &&
          (forbidden[i].empty() || !occurrences(forbidden[j], forbidden[i]).empty()))
        return false;
    }
  return true;
}

FactorialLanguage FactorialLanguage::from_forbidden(std::vector<Word> forbidden,
                                                    const Alphabet& alphabet) {
  for (const auto& w : forbidden) {
    if (w.empty()) throw InvalidArgument("the empty word cannot be forbidden");
    if (!(w.alphabet() == alphabet)) throw InvalidArgument("forbidden word over another alphabet");
  }
  std::sort(forbidden.begin(), forbidden.end());
  forbidden.erase(std::unique(forbidden.begin(), forbidden.end()), forbidden.end());
  return FactorialLanguage(alphabet, std::move(forbidden));
}

FactorialLanguage::FactorialLanguage(Alphabet alphabet, std::vector<Word> forbidden)
    : alphabet_(std::move(alphabet)), forbidden_(std::move(forbidden)) {
  const std::size_t sigma = alphabet_.size();

  // Trie.
  std::vector<std::int32_t> go(sigma, -1);
  std::vector<char> match{0};
  for (const auto& w : forbidden_) {
    std::int32_t s = 0;
    for (const auto a : w.letters()) {
      auto& slot = go[static_cast<std::size_t>(s) * sigma + a];
      if (slot < 0) {
        slot = static_cast<std::int32_t>(match.size());
        match.push_back(0);
        go.resize(go.size() + sigma, -1);
      }
      s = go[static_cast<std::size_t>(s) * sigma + a];
    }
    match[static_cast<std::size_t>(s)] = 1;
  }

  // Failure links, completing the transition function breadth first.
  const std::size_t states = match.size();
  std::vector<std::int32_t> fail(states, 0);
  std::deque<std::int32_t> queue;
  for (std::size_t a = 0; a < sigma; ++a) {
    auto& t = go[a];
    if (t < 0) {
      t = 0;
    } else {
      fail[static_cast<std::size_t>(t)] = 0;
      queue.push_back(t);
    }
  }
  while (!queue.empty()) {
    const auto s = static_cast<std::size_t>(queue.front());
    queue.pop_front();
    match[s] = match[s] || match[static_cast<std::size_t>(fail[s])];
    for (std::size_t a = 0; a < sigma; ++a) {
      auto& t = go[s * sigma + a];
      const auto via_fail = go[static_cast<std::size_t>(fail[s]) * sigma + a];
      if (t < 0) {
        t = via_fail;
      } else {
        fail[static_cast<std::size_t>(t)] = via_fail;
        queue.push_back(t);
      }
    }
  }

  // Keep the states that have not seen a forbidden word.
  std::vector<std::int32_t> id(states, kDead);
  std::int32_t live = 0;
  for (std::size_t s = 0; s < states; ++s)
    if (!match[s]) id[s] = live++;
  next_.assign(static_cast<std::size_t>(live) * sigma, kDead);
  for (std::size_t s = 0; s < states; ++s) {
    if (match[s]) continue;
    for (std::size_t a = 0; a < sigma; ++a)
      next_[static_cast<std::size_t>(id[s]) * sigma + a] =
          id[static_cast<std::size_t>(go[s * sigma + a])];
  }
}

bool FactorialLanguage::contains(const Word& w) const {
  if (!(w.alphabet() == alphabet_)) return false;
  std::int32_t s = 0;
  for (const auto a : w.letters()) {
    s = step(s, a);
    if (s == kDead) return false;
  }
  return true;
}

std::vector<Word> FactorialLanguage::slice(std::size_t n) const {
  std::vector<Word> out;
  std::vector<Symbol> buf(n);
  const std::size_t sigma = alphabet_.size();
  const std::function<void(std::size_t, std::int32_t)> walk = [&](std::size_t depth,
                                                                  std::int32_t s) {
    if (depth == n) {
      out.emplace_back(alphabet_, buf);
      return;
    }
    for (std::size_t a = 0; a < sigma; ++a) {
      const auto t = step(s, static_cast<Symbol>(a));
      if (t == kDead) continue;
      buf[depth] = static_cast<Symbol>(a);
      walk(depth + 1, t);
    }
  };
  walk(0, 0);
  return out;
}

FactorSlice FactorialLanguage::factor_slice(std::size_t n) const {
  const auto words = slice(n);
  return FactorSlice::from_words(words, n, alphabet_);
}

std::uint64_t FactorialLanguage::slice_size(std::size_t n) const {
  const std::size_t sigma = alphabet_.size();
  std::vector<std::uint64_t> ways(state_count(), 0), next(state_count());
  ways[0] = 1;
  for (std::size_t i = 0; i < n; ++i) {
    std::fill(next.begin(), next.end(), 0);
    for (std::size_t s = 0; s < ways.size(); ++s) {
      if (!ways[s]) continue;
      for (std::size_t a = 0; a < sigma; ++a) {
        const auto t = next_[s * sigma + a];
        if (t != kDead) next[static_cast<std::size_t>(t)] += ways[s];
      }
    }
    ways.swap(next);
  }
  return std::accumulate(ways.begin(), ways.end(), std::uint64_t{0});
}

FactorialLanguage FactorialLanguage::mirror() const {
  std::vector<Word> f;
  for (const auto& w : forbidden_) f.push_back(reverse(w));
  return from_forbidden(std::move(f), alphabet_);
}

FactorialLanguage FactorialLanguage::rename(const std::vector<Symbol>& perm) const {
  const std::size_t sigma = alphabet_.size();
  std::vector<Symbol> check(perm);
  std::sort(check.begin(), check.end());
  if (perm.size() != sigma || std::adjacent_find(check.begin(), check.end()) != check.end() ||
      (sigma && check.back() >= sigma))
    throw InvalidArgument("rename needs a permutation of the alphabet");
  std::vector<Word> f;
  for (const auto& w : forbidden_) {
    std::vector<Symbol> letters;
    for (const auto a : w.letters()) letters.push_back(perm[a]);
    f.emplace_back(alphabet_, std::move(letters));
  }
  return from_forbidden(std::move(f), alphabet_);
}

CyclicComplexity cyclic_complexity_L(const FactorialLanguage& L, std::size_t n) {
  if (n == 0) throw InvalidArgument("cyclic_complexity_L needs n >= 1");
  auto inv = conjugacy_inventory(L.slice(n), n);
  const auto count = inv.class_count();
  return {count, std::move(inv)};
}

std::vector<Word> mf_of_language(const FactorialLanguage& L, std::size_t n) {
  if (n == 0) throw InvalidArgument("mf_of_language needs n >= 1");
  return minimal_forbidden(L.factor_slice(n - 1), L.factor_slice(n));
}

namespace {

using SliceFn = std::function<std::vector<Word>(std::size_t)>;

bool related(const SliceFn& a, const SliceFn& b, std::size_t sigma_a, const Alphabet& alpha_b,
             std::size_t N) {
  if (sigma_a != alpha_b.size()) return false;
  std::vector<std::vector<Word>> sa, sb;
  for (std::size_t n = 0; n <= N; ++n) {
    sa.push_back(a(n));
    auto s = b(n);
    std::sort(s.begin(), s.end());
    sb.push_back(std::move(s));
  }
  std::vector<Symbol> perm(sigma_a);
  std::iota(perm.begin(), perm.end(), Symbol{0});
  do {
    for (const bool mirrored : {false, true}) {
      bool all = true;
      for (std::size_t n = 0; n <= N && all; ++n) {
        std::vector<Word> mapped;
        for (const auto& w : sa[n]) {
          std::vector<Symbol> letters;
          for (const auto x : w.letters()) letters.push_back(perm[x]);
          if (mirrored) std::reverse(letters.begin(), letters.end());
          mapped.emplace_back(alpha_b, std::move(letters));
        }
        std::sort(mapped.begin(), mapped.end());
        all = mapped == sb[n];
      }
      if (all) return true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

}  // namespace

bool languages_isomorphic_or_mirror(const FactorialLanguage& a, const FactorialLanguage& b,
                                    std::size_t N) {
  return related([&](std::size_t n) { return a.slice(n); },
                 [&](std::size_t n) { return b.slice(n); }, a.alphabet().size(), b.alphabet(), N);
}

bool languages_isomorphic_or_mirror(const InfiniteWordSource& a, const InfiniteWordSource& b,
                                    std::size_t N, const Budget& budget) {
  return related([&](std::size_t n) { return factors(a, n, budget).words(); },
                 [&](std::size_t n) { return factors(b, n, budget).words(); },
                 a.alphabet().size(), b.alphabet(), N);
}

}  // namespace cyclo

#include "cyclo/text_index.hpp"

#include <algorithm>
#include <cstring>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "cyclo/error.hpp"

namespace cyclo {

namespace {

// Prefix doubling with two counting-sort passes per round.
std::vector<std::uint32_t> build_suffix_array(std::span<const Symbol> s,
                                              std::size_t sigma) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> sa(n), rank(n), tmp(n), cnt;
  if (n == 0) return sa;

  cnt.assign(std::max(sigma, n) + 1, 0);
  for (std::size_t i = 0; i < n; ++i) ++cnt[s[i]];
  for (std::size_t c = 1; c < cnt.size(); ++c) cnt[c] += cnt[c - 1];
  for (std::size_t i = n; i-- > 0;) sa[--cnt[s[i]]] = static_cast<std::uint32_t>(i);
  rank[sa[0]] = 0;
  std::uint32_t classes = 1;
  for (std::size_t i = 1; i < n; ++i) {
    if (s[sa[i]] != s[sa[i - 1]]) ++classes;
    rank[sa[i]] = classes - 1;
  }

  std::vector<std::uint32_t> order(n);
  for (std::size_t k = 1; classes < n; k <<= 1) {
    // Order by second key: suffixes without a second half come first.
    std::size_t p = 0;
    for (std::size_t i = n - k; i < n; ++i) order[p++] = static_cast<std::uint32_t>(i);
    for (std::size_t i = 0; i < n; ++i)
      if (sa[i] >= k) order[p++] = static_cast<std::uint32_t>(sa[i] - k);
    // Stable counting sort by first key.
    std::fill(cnt.begin(), cnt.begin() + classes, 0);
    for (std::size_t i = 0; i < n; ++i) ++cnt[rank[i]];
    for (std::size_t c = 1; c < classes; ++c) cnt[c] += cnt[c - 1];
    for (std::size_t i = n; i-- > 0;) sa[--cnt[rank[order[i]]]] = order[i];

    tmp[sa[0]] = 0;
    classes = 1;
    for (std::size_t i = 1; i < n; ++i) {
      const auto a = sa[i - 1], b = sa[i];
      const bool same = rank[a] == rank[b] &&
                        (a + k < n ? rank[a + k] : std::numeric_limits<std::uint32_t>::max()) ==
                            (b + k < n ? rank[b + k] : std::numeric_limits<std::uint32_t>::max());
      if (!same) ++classes;
      tmp[b] = classes - 1;
    }
    rank.swap(tmp);
  }
  return sa;
}

// Kasai et al.
std::vector<std::uint32_t> build_lcp(std::span<const Symbol> s,
                                     std::span<const std::uint32_t> sa) {
  const std::size_t n = s.size();
  std::vector<std::uint32_t> rank(n), lcp(n, 0);
  for (std::size_t i = 0; i < n; ++i) rank[sa[i]] = static_cast<std::uint32_t>(i);
  std::size_t h = 0;
  for (std::size_t i = 0; i < n; ++i) {
    if (rank[i] == 0) {
      h = 0;
      continue;
    }
    const std::size_t j = sa[rank[i] - 1];
    while (i + h < n && j + h < n && s[i + h] == s[j + h]) ++h;
    lcp[rank[i]] = static_cast<std::uint32_t>(h);
    if (h > 0) --h;
  }
  return lcp;
}

}  // namespace

TextIndex::TextIndex(std::shared_ptr<const Text> text, std::size_t alphabet_size)
    : text_(std::move(text)) {
  if (text_->size() >= std::numeric_limits<std::uint32_t>::max())
    throw InvalidArgument("text too long to index");
  sa_ = build_suffix_array(*text_, alphabet_size);
  lcp_ = build_lcp(*text_, sa_);
}

template <typename Visit>
void TextIndex::for_each_distinct(std::size_t n, Visit&& visit) const {
  const std::size_t len = size();
  if (n == 0) {
    visit(0u);
    return;
  }
  // A suffix long enough to hold a window starts a new factor iff it shares
  // fewer than n letters with the previous long-enough suffix.
  std::size_t run = std::numeric_limits<std::size_t>::max();
  bool seen = false;
  for (std::size_t i = 0; i < len; ++i) {
    if (i > 0) run = std::min<std::size_t>(run, lcp_[i]);
    if (len - sa_[i] < n) continue;
    if (!seen || run < n) visit(sa_[i]);
    seen = true;
    run = std::numeric_limits<std::size_t>::max();
  }
}

std::vector<std::uint32_t> TextIndex::distinct_factor_starts(std::size_t n) const {
  std::vector<std::uint32_t> out;
  for_each_distinct(n, [&](std::uint32_t s) { out.push_back(s); });
  return out;
}

std::size_t TextIndex::distinct_factor_count(std::size_t n) const {
  std::size_t count = 0;
  for_each_distinct(n, [&](std::uint32_t) { ++count; });
  return count;
}

std::vector<std::uint32_t> scan_distinct_factors(std::span<const Symbol> text,
                                                 std::size_t n) {
  std::vector<std::uint32_t> starts;
  if (n == 0) return {0};
  if (text.size() < n) return starts;

  constexpr std::uint64_t kMod = (std::uint64_t{1} << 61) - 1;
  constexpr std::uint64_t kBase = 1'000'003;
  const auto mulmod = [](std::uint64_t a, std::uint64_t b) {
    const auto p = static_cast<unsigned __int128>(a) * b;
    std::uint64_t r = static_cast<std::uint64_t>(p & kMod) +
                      static_cast<std::uint64_t>(p >> 61);
    if (r >= kMod) r -= kMod;
    return r;
  };
  std::uint64_t top = 1;  // kBase^(n-1)
  for (std::size_t i = 1; i < n; ++i) top = mulmod(top, kBase);

  std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> seen;
  std::uint64_t h = 0;
  for (std::size_t i = 0; i < n; ++i) h = (mulmod(h, kBase) + text[i] + 1) % kMod;
  for (std::size_t start = 0;; ++start) {
    auto& bucket = seen[h];
    const bool fresh = std::none_of(bucket.begin(), bucket.end(), [&](std::uint32_t s) {
      return std::memcmp(text.data() + s, text.data() + start, n) == 0;
    });
    if (fresh) {
      bucket.push_back(static_cast<std::uint32_t>(start));
      starts.push_back(static_cast<std::uint32_t>(start));
    }
    if (start + n >= text.size()) break;
    h = (h + kMod - mulmod(top, text[start] + 1u)) % kMod;
    h = (mulmod(h, kBase) + text[start + n] + 1) % kMod;
  }
  std::sort(starts.begin(), starts.end(), [&](std::uint32_t a, std::uint32_t b) {
    return std::memcmp(text.data() + a, text.data() + b, n) < 0;
  });
  return starts;
}

}  // namespace cyclo

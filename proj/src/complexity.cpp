#include "cyclo/complexity.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <map>
#include <set>
#include <sstream>

#include "cyclo/error.hpp"

namespace cyclo {

std::string Provenance::str() const {
  std::ostringstream os;
  os << (sufficient ? "" : "budget-exhausted ") << method << " prefix=" << prefix_length;
  return os.str();
}

// --- FactorSlice ------------------------------------------------------------

FactorSlice::FactorSlice(Alphabet alphabet, std::size_t n, std::shared_ptr<const Text> text,
                         std::vector<std::uint32_t> starts, Provenance provenance)
    : alphabet_(std::move(alphabet)),
      n_(n),
      text_(std::move(text)),
      starts_(std::move(starts)),
      provenance_(std::move(provenance)) {}

FactorSlice FactorSlice::from_words(std::span<const Word> words, std::size_t n,
                                    const Alphabet& alphabet) {
  std::set<Word> unique;
  for (const auto& w : words) {
    if (w.size() != n) throw InvalidArgument("from_words: word of wrong length");
    if (!(w.alphabet() == alphabet)) throw InvalidArgument("from_words: alphabet mismatch");
    unique.insert(w);
  }
  auto text = std::make_shared<Text>();
  std::vector<std::uint32_t> starts;
  for (const auto& w : unique) {
    starts.push_back(static_cast<std::uint32_t>(text->size()));
    text->insert(text->end(), w.letters().begin(), w.letters().end());
  }
  Provenance prov{text->size(), "explicit", true, {}};
  return FactorSlice(alphabet, n, std::move(text), std::move(starts), std::move(prov));
}

std::span<const Symbol> FactorSlice::view(std::size_t i) const {
  return std::span<const Symbol>(*text_).subspan(starts_.at(i), n_);
}

Word FactorSlice::word(std::size_t i) const {
  const auto v = view(i);
  return Word(alphabet_, std::vector<Symbol>(v.begin(), v.end()));
}

std::vector<Word> FactorSlice::words() const {
  std::vector<Word> out;
  out.reserve(size());
  for (std::size_t i = 0; i < size(); ++i) out.push_back(word(i));
  return out;
}

bool FactorSlice::contains(std::span<const Symbol> w) const {
  if (w.size() != n_) return false;
  if (n_ == 0) return !starts_.empty();
  const Symbol* base = text_->data();
  const auto it = std::lower_bound(starts_.begin(), starts_.end(), w.data(),
                                   [&](std::uint32_t s, const Symbol* key) {
                                     return std::memcmp(base + s, key, n_) < 0;
                                   });
  return it != starts_.end() && std::memcmp(base + *it, w.data(), n_) == 0;
}

bool FactorSlice::contains(const Word& w) const {
  return w.alphabet() == alphabet_ && contains(w.letters());
}

// --- enumeration ------------------------------------------------------------

FactorSlice factors(const InfiniteWordSource& src, std::size_t n, const Budget& budget) {
  if (n == 0) {
    return FactorSlice(src.alphabet(), 0, std::make_shared<const Text>(), {0},
                       Provenance{0, "empty-factor", true, {}});
  }
  if (const auto cert = src.certified_prefix(n)) {
    if (*cert > budget.max_prefix) throw BudgetExhausted(n, 0, budget.max_prefix);
    // Rounding up keeps neighbouring lengths on one cached index.
    std::size_t L = std::bit_ceil(std::max<std::size_t>(*cert, 64));
    if (L > budget.max_prefix) L = *cert;
    const auto idx = src.index(L);
    auto starts = idx->distinct_factor_starts(n);
    Provenance prov{L, src.sufficiency_method(), true, {{L, starts.size()}}};
    return FactorSlice(src.alphabet(), n, idx->shared_text(), std::move(starts),
                       std::move(prov));
  }

  Provenance prov{0, src.sufficiency_method(), false, {}};
  std::size_t L = src.first_probe(n);
  std::size_t previous = 0;
  int stable = 0;
  for (;;) {
    if (L > budget.max_prefix) throw BudgetExhausted(n, prov.prefix_length, budget.max_prefix);
    const auto idx = src.index(L);
    const std::size_t count = idx->distinct_factor_count(n);
    prov.probes.emplace_back(L, count);
    prov.prefix_length = L;
    // Prefixes are nested, so equal counts mean equal sets.
    stable = (prov.probes.size() > 1 && count == previous) ? stable + 1 : 0;
    previous = count;
    if (stable >= src.stable_rounds()) {
      prov.sufficient = true;
      return FactorSlice(src.alphabet(), n, idx->shared_text(),
                         idx->distinct_factor_starts(n), std::move(prov));
    }
    L = src.next_probe(L);
  }
}

std::size_t factor_complexity(const InfiniteWordSource& src, std::size_t n,
                              const Budget& budget) {
  return factors(src, n, budget).size();
}

std::size_t abelian_class_count(const FactorSlice& slice) {
  std::set<ParikhVector> vectors;
  for (std::size_t i = 0; i < slice.size(); ++i)
    vectors.insert(parikh(slice.view(i), slice.alphabet().size()));
  return vectors.size();
}

std::size_t abelian_complexity(const InfiniteWordSource& src, std::size_t n,
                               const Budget& budget) {
  return abelian_class_count(factors(src, n, budget));
}

namespace {

std::uint64_t hash_bytes(const Symbol* p, std::size_t n) {
  constexpr std::uint64_t kMul = 0xbf58476d1ce4e5b9ULL;
  std::uint64_t h[4] = {n * 0x9e3779b97f4a7c15ULL, 0x243f6a8885a308d3ULL, 0x13198a2e03707344ULL,
                        0xa4093822299f31d0ULL};
  std::size_t i = 0;
  for (; i + 32 <= n; i += 32) {
    for (int lane = 0; lane < 4; ++lane) {
      std::uint64_t x;
      std::memcpy(&x, p + i + 8 * lane, 8);
      h[lane] = std::rotl(h[lane] ^ x, 29) * kMul;
    }
  }
  for (; i + 8 <= n; i += 8) {
    std::uint64_t x;
    std::memcpy(&x, p + i, 8);
    h[0] = std::rotl(h[0] ^ x, 29) * kMul;
  }
  std::uint64_t tail = 0;
  std::memcpy(&tail, p + i, n - i);
  std::uint64_t out = std::rotl(h[0] ^ tail, 29) * kMul;
  for (int lane = 1; lane < 4; ++lane) out = std::rotl(out ^ h[lane], 31) * kMul;
  return out ^ (out >> 31);
}

// Three-way comparison of rotation ra of a with rotation rb of b.
int compare_rotations(const Symbol* a, std::size_t ra, const Symbol* b, std::size_t rb,
                      std::size_t n) {
  std::size_t done = 0;
  while (done < n) {
    const std::size_t pa = (ra + done) % n, pb = (rb + done) % n;
    const std::size_t run = std::min(n - pa, n - pb);
    const std::size_t len = std::min(run, n - done);
    if (const int c = std::memcmp(a + pa, b + pb, len)) return c;
    done += len;
  }
  return 0;
}

struct RotationKey {
  std::uint64_t hash;
  std::uint32_t index;
  std::uint32_t shift;
};

// Classes among the factors `members` of slice, keyed by least rotation.
std::size_t count_by_least_rotation(const FactorSlice& slice,
                                    std::span<const std::uint32_t> members) {
  const std::size_t n = slice.length();
  std::vector<Symbol> doubled(2 * n);
  std::vector<RotationKey> keys(members.size());
  for (std::size_t k = 0; k < members.size(); ++k) {
    const auto v = slice.view(members[k]);
    std::copy(v.begin(), v.end(), std::copy(v.begin(), v.end(), doubled.begin()));
    const auto r = least_rotation_doubled(doubled.data(), n);
    keys[k] = {hash_bytes(doubled.data() + r, n), members[k], static_cast<std::uint32_t>(r)};
  }
  const auto cmp = [&](const RotationKey& x, const RotationKey& y) {
    return compare_rotations(slice.view(x.index).data(), x.shift, slice.view(y.index).data(),
                             y.shift, n);
  };
  std::sort(keys.begin(), keys.end(),
            [](const RotationKey& x, const RotationKey& y) { return x.hash < y.hash; });
  // Runs of equal hashes are almost always one class; verify, and sort the
  // run exactly when they are not.
  std::size_t distinct = 0;
  for (auto lo = keys.begin(); lo != keys.end();) {
    auto hi = std::find_if(lo, keys.end(), [&](const RotationKey& k) { return k.hash != lo->hash; });
    if (std::all_of(lo + 1, hi, [&](const RotationKey& k) { return cmp(*lo, k) == 0; })) {
      ++distinct;
    } else {
      std::sort(lo, hi, [&](const RotationKey& x, const RotationKey& y) { return cmp(x, y) < 0; });
      ++distinct;
      for (auto it = lo + 1; it != hi; ++it)
        if (cmp(*(it - 1), *it) != 0) ++distinct;
    }
    lo = hi;
  }
  return distinct;
}

}  // namespace

std::size_t cyclic_class_count(const FactorSlice& slice) {
  const std::size_t count = slice.size();
  if (slice.length() == 0 || count == 0) return count;
  std::vector<std::uint32_t> all(count);
  for (std::size_t i = 0; i < count; ++i) all[i] = static_cast<std::uint32_t>(i);
  return count_by_least_rotation(slice, all);
}

ConjugacyInventory inventory_of(const FactorSlice& slice) {
  const auto words = slice.words();
  return conjugacy_inventory(words, slice.length());
}

CyclicComplexity cyclic_complexity(const InfiniteWordSource& src, std::size_t n,
                                   const Budget& budget) {
  const auto slice = factors(src, n, budget);
  auto inv = inventory_of(slice);
  const auto count = inv.class_count();
  return {count, std::move(inv)};
}

// --- forbidden / special factors --------------------------------------------

std::vector<Word> minimal_forbidden(const FactorSlice& shorter, const FactorSlice& slice) {
  const std::size_t n = slice.length();
  if (n == 0 || shorter.length() + 1 != n)
    throw InvalidArgument("minimal_forbidden needs slices of lengths n-1 and n, n >= 1");
  const auto sigma = slice.alphabet().size();
  std::vector<Word> out;
  std::vector<Symbol> v(n);
  for (std::size_t i = 0; i < shorter.size(); ++i) {
    const auto u = shorter.view(i);
    std::copy(u.begin(), u.end(), v.begin());
    for (std::size_t a = 0; a < sigma; ++a) {
      v[n - 1] = static_cast<Symbol>(a);
      if (!shorter.contains(std::span<const Symbol>(v).subspan(1))) continue;
      if (slice.contains(v)) continue;
      out.emplace_back(slice.alphabet(), v);
    }
  }
  return out;
}

std::vector<Word> minimal_forbidden(const InfiniteWordSource& src, std::size_t n,
                                    const Budget& budget) {
  if (n == 0) throw InvalidArgument("minimal_forbidden needs n >= 1");
  return minimal_forbidden(factors(src, n - 1, budget), factors(src, n, budget));
}

BeginEnd begin_end_counts(const FactorSlice& slice) {
  if (slice.alphabet().size() != 2)
    throw InvalidArgument("begin_end_counts is defined for binary words");
  if (slice.length() < 2) throw InvalidArgument("begin_end_counts needs n >= 2");
  BeginEnd out;
  for (std::size_t i = 0; i < slice.size(); ++i) {
    const auto v = slice.view(i);
    (v.front() == v.back() ? out.same : out.different)++;
  }
  return out;
}

BeginEnd begin_end_counts(const InfiniteWordSource& src, std::size_t n, const Budget& budget) {
  return begin_end_counts(factors(src, n, budget));
}

std::vector<Word> special_factors(const FactorSlice& extended, Side side) {
  if (extended.alphabet().size() != 2)
    throw InvalidArgument("special_factors is defined for binary words");
  if (extended.length() == 0) throw InvalidArgument("special_factors needs a slice of length >= 1");
  const std::size_t n = extended.length() - 1;
  std::map<std::vector<Symbol>, unsigned> right, left;  // bitmask of extensions
  for (std::size_t i = 0; i < extended.size(); ++i) {
    const auto v = extended.view(i);
    right[{v.begin(), v.begin() + static_cast<std::ptrdiff_t>(n)}] |= 1u << v[n];
    left[{v.begin() + 1, v.end()}] |= 1u << v[0];
  }
  std::set<std::vector<Symbol>> special;
  const auto add = [&](const auto& table, auto&& keep) {
    for (const auto& [w, mask] : table)
      if (std::popcount(mask) >= 2 && keep(w)) special.insert(w);
  };
  const auto is_two_sided = [](const auto& table, const std::vector<Symbol>& w) {
    const auto it = table.find(w);
    return it != table.end() && std::popcount(it->second) >= 2;
  };
  switch (side) {
    case Side::Right:
      add(right, [](const auto&) { return true; });
      break;
    case Side::Left:
      add(left, [](const auto&) { return true; });
      break;
    case Side::Both:
      add(right, [&](const auto& w) { return is_two_sided(left, w); });
      break;
  }
  std::vector<Word> out;
  for (const auto& w : special) out.emplace_back(extended.alphabet(), w);
  return out;
}

std::vector<Word> special_factors(const InfiniteWordSource& src, std::size_t n, Side side,
                                  const Budget& budget) {
  return special_factors(factors(src, n + 1, budget), side);
}

// --- records ----------------------------------------------------------------

ComplexityRecord complexity_record(const InfiniteWordSource& src, std::size_t n,
                                   const Budget& budget) {
  const auto slice = factors(src, n, budget);
  ComplexityRecord rec;
  rec.n = n;
  rec.p = slice.size();
  rec.a = abelian_class_count(slice);
  rec.c = cyclic_class_count(slice);
  rec.mf = n == 0 ? 0 : minimal_forbidden(factors(src, n - 1, budget), slice).size();
  rec.provenance = slice.provenance();
  return rec;
}

bool looks_aperiodic(const InfiniteWordSource& src, std::size_t n_max, const Budget& budget) {
  for (std::size_t n = 1; n <= n_max; ++n)
    if (factor_complexity(src, n, budget) < n + 1) return false;
  return true;
}

}  // namespace cyclo

#include "cyclo/word.hpp"

#include <algorithm>
#include <bit>
#include <cstring>
#include <map>
#include <numeric>
#include <set>

#include "cyclo/error.hpp"

namespace cyclo {

// --- Alphabet ---------------------------------------------------------------

Alphabet::Alphabet(std::string symbols) : symbols_(std::move(symbols)) {
  if (symbols_.empty()) throw InvalidArgument("alphabet must not be empty");
  if (symbols_.size() > 255) throw InvalidArgument("alphabet too large");
  for (std::size_t i = 0; i < symbols_.size(); ++i) {
    if (symbols_[i] == '?')
      throw InvalidArgument("'?' is reserved for Toeplitz holes");
    if (symbols_.find(symbols_[i], i + 1) != std::string::npos)
      throw InvalidArgument("duplicate symbol in alphabet '" + symbols_ + "'");
  }
}

const Alphabet& Alphabet::binary() {
  static const Alphabet kBinary("01");
  return kBinary;
}

std::optional<Symbol> Alphabet::index_of(char c) const noexcept {
  const auto pos = symbols_.find(c);
  if (pos == std::string::npos) return std::nullopt;
  return static_cast<Symbol>(pos);
}

// --- Word -------------------------------------------------------------------

Word::Word(Alphabet alphabet, std::vector<Symbol> letters)
    : alphabet_(std::move(alphabet)), letters_(std::move(letters)) {
  for (const auto s : letters_)
    if (s >= alphabet_.size())
      throw InvalidArgument("letter index out of range for alphabet '" +
                            alphabet_.symbols() + "'");
}

Word Word::parse(std::string_view text, const Alphabet& alphabet) {
  std::vector<Symbol> letters;
  letters.reserve(text.size());
  for (const char c : text) {
    const auto idx = alphabet.index_of(c);
    if (!idx)
      throw InvalidArgument(std::string("symbol '") + c +
                            "' not in alphabet '" + alphabet.symbols() + "'");
    letters.push_back(*idx);
  }
  Word w(alphabet);
  w.letters_ = std::move(letters);
  return w;
}

Word Word::factor(std::size_t pos, std::size_t len) const {
  if (pos > size() || len > size() - pos)
    throw InvalidArgument("factor out of range");
  Word w(alphabet_);
  w.letters_.assign(letters_.begin() + static_cast<std::ptrdiff_t>(pos),
                    letters_.begin() + static_cast<std::ptrdiff_t>(pos + len));
  return w;
}

std::string Word::str() const {
  std::string s;
  s.reserve(size());
  for (const auto l : letters_) s.push_back(alphabet_.symbol(l));
  return s;
}

Word Word::operator+(const Word& other) const {
  if (!(alphabet_ == other.alphabet_))
    throw InvalidArgument("concatenation across alphabets");
  Word w(alphabet_);
  w.letters_.reserve(size() + other.size());
  w.letters_ = letters_;
  w.letters_.insert(w.letters_.end(), other.letters_.begin(),
                    other.letters_.end());
  return w;
}

std::strong_ordering operator<=>(const Word& a, const Word& b) {
  if (!(a.alphabet_ == b.alphabet_))
    throw InvalidArgument("comparison across alphabets");
  return std::lexicographical_compare_three_way(
      a.letters_.begin(), a.letters_.end(), b.letters_.begin(),
      b.letters_.end());
}

std::ostream& operator<<(std::ostream& os, const Word& w) {
  return os << w.str();
}

// --- Parikh vectors ---------------------------------------------------------

std::size_t ParikhVector::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::size_t{0});
}

std::string ParikhVector::str() const {
  std::string s = "(";
  for (std::size_t i = 0; i < counts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(counts_[i]);
  }
  return s + ")";
}

ParikhVector parikh(std::span<const Symbol> letters,
                    std::size_t alphabet_size) {
  std::vector<std::size_t> counts(alphabet_size, 0);
  for (const auto l : letters) ++counts[l];
  return ParikhVector(std::move(counts));
}

ParikhVector parikh(const Word& w) {
  return parikh(w.letters(), w.alphabet().size());
}

// --- Rotations --------------------------------------------------------------

namespace {

// Length of the common prefix of a and b, capped at n.
std::size_t common_prefix(const Symbol* a, const Symbol* b, std::size_t n) {
  std::size_t k = 0;
  for (; k + 32 <= n; k += 32) {
    std::uint64_t x[4], y[4];
    std::memcpy(x, a + k, 32);
    std::memcpy(y, b + k, 32);
    if (((x[0] ^ y[0]) | (x[1] ^ y[1]) | (x[2] ^ y[2]) | (x[3] ^ y[3])) != 0) break;
  }
  while (k + 8 <= n) {
    std::uint64_t x, y;
    std::memcpy(&x, a + k, 8);
    std::memcpy(&y, b + k, 8);
    if (x != y) {
      if constexpr (std::endian::native == std::endian::little)
        return k + static_cast<std::size_t>(std::countr_zero(x ^ y) / 8);
      break;
    }
    k += 8;
  }
  while (k < n && a[k] == b[k]) ++k;
  return k;
}

}  // namespace

std::size_t least_rotation_doubled(const Symbol* s, std::size_t n) {
  // Candidates i < j; every other start below j is already ruled out.  A
  // mismatch after k equal letters rules out the k+1 starts beginning at the
  // losing candidate.
  std::size_t i = 0, j = 1;
  while (j < n) {
    const std::size_t k = common_prefix(s + i, s + j, n);
    if (k == n) break;
    if (s[i + k] > s[j + k]) {
      i = std::max(i + k + 1, j);
      j = i + 1;
    } else {
      j += k + 1;
    }
  }
  return i;
}

std::size_t least_rotation(std::span<const Symbol> letters) {
  const std::size_t n = letters.size();
  if (n <= 1) return 0;
  thread_local std::vector<Symbol> doubled;
  doubled.resize(2 * n);
  std::copy(letters.begin(), letters.end(), doubled.begin());
  std::copy(letters.begin(), letters.end(), doubled.begin() + n);
  return least_rotation_doubled(doubled.data(), n);
}

Word rotate(const Word& w, std::size_t k) {
  if (w.empty()) return w;
  k %= w.size();
  std::vector<Symbol> out(w.letters().begin() + static_cast<std::ptrdiff_t>(k),
                          w.letters().end());
  out.insert(out.end(), w.letters().begin(),
             w.letters().begin() + static_cast<std::ptrdiff_t>(k));
  return Word(w.alphabet(), std::move(out));
}

Word canonical_rotation(const Word& w) {
  if (w.empty()) throw InvalidArgument("canonical_rotation of the empty word");
  return rotate(w, least_rotation(w.letters()));
}

bool are_conjugate(const Word& u, const Word& v) {
  if (!(u.alphabet() == v.alphabet()) || u.size() != v.size()) return false;
  if (u.empty()) return true;
  return canonical_rotation(u) == canonical_rotation(v);
}

// --- Periods, palindromes, occurrences --------------------------------------

namespace {

// Knuth-Morris-Pratt failure function: fail[i] = longest proper border of
// pattern[0..i).
std::vector<std::size_t> failure_function(std::span<const Symbol> pattern) {
  std::vector<std::size_t> fail(pattern.size() + 1, 0);
  std::size_t k = 0;
  for (std::size_t i = 1; i < pattern.size(); ++i) {
    while (k > 0 && pattern[i] != pattern[k]) k = fail[k];
    if (pattern[i] == pattern[k]) ++k;
    fail[i + 1] = k;
  }
  return fail;
}

}  // namespace

std::vector<std::size_t> periods(const Word& w) {
  if (w.empty()) return {};
  const auto fail = failure_function(w.letters());
  std::vector<std::size_t> out;
  // Borders of w, longest first, give periods shortest first.
  for (std::size_t b = fail[w.size()];; b = fail[b]) {
    out.push_back(w.size() - b);
    if (b == 0) break;
  }
  return out;
}

Word reverse(const Word& w) {
  std::vector<Symbol> out(w.letters().rbegin(), w.letters().rend());
  return Word(w.alphabet(), std::move(out));
}

bool is_palindrome(const Word& w) {
  return std::equal(w.letters().begin(),
                    w.letters().begin() + static_cast<std::ptrdiff_t>(w.size() / 2),
                    w.letters().rbegin());
}

std::vector<std::size_t> occurrences(const Word& text, const Word& u) {
  if (u.empty()) throw InvalidArgument("occurrences of the empty word");
  if (!(text.alphabet() == u.alphabet()))
    throw InvalidArgument("occurrences across alphabets");
  const auto fail = failure_function(u.letters());
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    while (k > 0 && (k == u.size() || text[i] != u[k])) k = fail[k];
    if (text[i] == u[k]) ++k;
    if (k == u.size()) out.push_back(i + 2 - u.size());
  }
  return out;
}

// --- Balance ----------------------------------------------------------------

bool is_c_balanced(std::span<const Word> words, std::size_t C) {
  if (C < 1) throw InvalidArgument("balance constant must be at least 1");
  if (words.empty()) return true;
  const auto n = words.front().size();
  const auto k = words.front().alphabet().size();
  std::vector<std::size_t> lo(k, n), hi(k, 0);
  for (const auto& w : words) {
    if (w.size() != n)
      throw InvalidArgument("is_c_balanced requires words of equal length");
    const auto pv = parikh(w);
    for (std::size_t a = 0; a < k; ++a) {
      lo[a] = std::min(lo[a], pv[a]);
      hi[a] = std::max(hi[a], pv[a]);
    }
  }
  for (std::size_t a = 0; a < k; ++a)
    if (hi[a] - lo[a] > C) return false;
  return true;
}

bool is_balanced_word(const Word& w, std::size_t C) {
  const std::size_t n = w.size();
  const std::size_t k = w.alphabet().size();
  // prefix[a][i] = occurrences of a in w[0..i)
  std::vector<std::vector<std::size_t>> prefix(k,
                                               std::vector<std::size_t>(n + 1));
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t i = 0; i < n; ++i)
      prefix[a][i + 1] = prefix[a][i] + (w[i] == a ? 1 : 0);
  for (std::size_t len = 1; len < n; ++len) {
    for (std::size_t a = 0; a < k; ++a) {
      std::size_t lo = len, hi = 0;
      for (std::size_t i = 0; i + len <= n; ++i) {
        const auto c = prefix[a][i + len] - prefix[a][i];
        lo = std::min(lo, c);
        hi = std::max(hi, c);
      }
      if (hi - lo > C) return false;
    }
  }
  return true;
}

// --- Conjugacy inventories --------------------------------------------------

std::vector<std::size_t> ConjugacyInventory::class_sizes() const {
  std::vector<std::size_t> sizes;
  sizes.reserve(classes.size());
  for (const auto& c : classes) sizes.push_back(c.members.size());
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

const ConjugacyClass* ConjugacyInventory::find(const Word& w) const {
  if (w.size() != length || w.empty()) return nullptr;
  const auto key = canonical_rotation(w);
  const auto it = std::lower_bound(
      classes.begin(), classes.end(), key,
      [](const ConjugacyClass& c, const Word& k) { return c.key < k; });
  if (it == classes.end() || !(it->key == key)) return nullptr;
  if (!std::binary_search(it->members.begin(), it->members.end(), w))
    return nullptr;
  return &*it;
}

ConjugacyInventory conjugacy_inventory(std::span<const Word> words,
                                       std::size_t n) {
  ConjugacyInventory inv;
  inv.length = n;
  if (n == 0) {
    if (!words.empty()) inv.classes.push_back({words.front(), {words.front()}});
    return inv;
  }
  std::map<Word, std::set<Word>> groups;
  for (const auto& w : words) {
    if (w.size() != n)
      throw InvalidArgument("conjugacy_inventory: word of wrong length");
    groups[canonical_rotation(w)].insert(w);
  }
  inv.classes.reserve(groups.size());
  for (auto& [key, members] : groups)
    inv.classes.push_back({key, {members.begin(), members.end()}});
  return inv;
}

}  // namespace cyclo

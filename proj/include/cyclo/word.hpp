#pragma once

// Finite words over small ordered alphabets and the primitives the rest of
// the library is built on: Parikh vectors, rotations and conjugacy, periods,
// palindromes, occurrences and balance.
//
// Positions reported to callers (occurrences) are 1-based.  Internal
// accessors (operator[], factor) are 0-based like any C++ container.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclo {

using Symbol = std::uint8_t;

/// A non-empty, totally ordered set of distinct printable symbols.  The
/// order is the order in which the symbols are given.
class Alphabet {
 public:
  /// Throws InvalidArgument for empty, duplicated or reserved ('?') symbols.
  explicit Alphabet(std::string symbols);

  static const Alphabet& binary();

  std::size_t size() const noexcept { return symbols_.size(); }
  char symbol(Symbol index) const { return symbols_.at(index); }
  std::optional<Symbol> index_of(char c) const noexcept;
  const std::string& symbols() const noexcept { return symbols_; }

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::string symbols_;
};

/// Immutable finite word: a sequence of symbol indices tied to an alphabet.
class Word {
 public:
  Word() : alphabet_(Alphabet::binary()) {}
  explicit Word(Alphabet alphabet) : alphabet_(std::move(alphabet)) {}
  Word(Alphabet alphabet, std::vector<Symbol> letters);

  /// Reads one symbol per character.
  static Word parse(std::string_view text,
                    const Alphabet& alphabet = Alphabet::binary());

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  std::size_t size() const noexcept { return letters_.size(); }
  bool empty() const noexcept { return letters_.empty(); }
  Symbol operator[](std::size_t i) const { return letters_[i]; }
  std::span<const Symbol> letters() const noexcept { return letters_; }

  /// 0-based factor starting at pos.
  Word factor(std::size_t pos, std::size_t len) const;
  std::string str() const;

  Word operator+(const Word& other) const;

  friend bool operator==(const Word& a, const Word& b) {
    return a.letters_ == b.letters_ && a.alphabet_ == b.alphabet_;
  }
  /// Lexicographic order in the alphabet's declared order.  Comparing words
  /// over different alphabets throws InvalidArgument.
  friend std::strong_ordering operator<=>(const Word& a, const Word& b);

 private:
  Alphabet alphabet_;
  std::vector<Symbol> letters_;
};

std::ostream& operator<<(std::ostream& os, const Word& w);

/// Per-symbol occurrence counts, indexed by alphabet order.
class ParikhVector {
 public:
  explicit ParikhVector(std::vector<std::size_t> counts)
      : counts_(std::move(counts)) {}

  std::size_t size() const noexcept { return counts_.size(); }
  std::size_t operator[](std::size_t i) const { return counts_[i]; }
  std::size_t total() const noexcept;
  const std::vector<std::size_t>& counts() const noexcept { return counts_; }
  std::string str() const;

  friend bool operator==(const ParikhVector&, const ParikhVector&) = default;
  friend auto operator<=>(const ParikhVector&, const ParikhVector&) = default;

 private:
  std::vector<std::size_t> counts_;
};

ParikhVector parikh(const Word& w);
ParikhVector parikh(std::span<const Symbol> letters, std::size_t alphabet_size);

/// Offset r such that letters[r..] letters[..r] is the least rotation.  Among
/// equal rotations the smallest offset is returned.  Linear time.
std::size_t least_rotation(std::span<const Symbol> letters);
/// Same, for s[0..n) given s[n..2n) == s[0..n).
std::size_t least_rotation_doubled(const Symbol* s, std::size_t n);

/// Lexicographically least rotation; rejects the empty word.
Word canonical_rotation(const Word& w);

/// w[k..] w[..k]; k is taken modulo |w|.
Word rotate(const Word& w, std::size_t k);

bool are_conjugate(const Word& u, const Word& v);

/// All p in [1, |w|] such that w[i] == w[i+p] wherever both exist, ascending.
std::vector<std::size_t> periods(const Word& w);

Word reverse(const Word& w);
bool is_palindrome(const Word& w);

/// 1-based starting positions of u in text, ascending.  Overlaps counted.
std::vector<std::size_t> occurrences(const Word& text, const Word& u);

/// True iff every two words of `words` differ by at most C in each letter
/// count.  All words must share one length; C must be at least 1.
bool is_c_balanced(std::span<const Word> words, std::size_t C);

/// True iff the factors of w of every length are C-balanced.
bool is_balanced_word(const Word& w, std::size_t C = 1);

struct ConjugacyClass {
  Word key;                    // least rotation
  std::vector<Word> members;   // sorted, duplicate-free
};

/// Words of one length grouped into conjugacy classes, ordered by key.
struct ConjugacyInventory {
  std::size_t length = 0;
  std::vector<ConjugacyClass> classes;

  std::size_t class_count() const noexcept { return classes.size(); }
  /// Class sizes, largest first.
  std::vector<std::size_t> class_sizes() const;
  /// The class having w as a member, or nullptr.
  const ConjugacyClass* find(const Word& w) const;
};

/// Groups `words` (all of length n) by conjugacy.  Duplicates are merged.
ConjugacyInventory conjugacy_inventory(std::span<const Word> words,
                                       std::size_t n);

}  // namespace cyclo

#pragma once

// Factorial languages given by a finite set of forbidden words, recognized
// by an Aho-Corasick automaton with the matching states removed.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "cyclo/complexity.hpp"
#include "cyclo/word.hpp"

namespace cyclo {

/// No element is a factor of another element.
bool is_minimal_antidictionary(const std::vector<Word>& forbidden);

class FactorialLanguage {
 public:
  /// All words over `alphabet` avoiding every element of `forbidden` as a
  /// factor.  Throws InvalidArgument if the empty word is forbidden or an
  /// element is over another alphabet.
  static FactorialLanguage from_forbidden(std::vector<Word> forbidden,
                                          const Alphabet& alphabet = Alphabet::binary());

  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const std::vector<Word>& forbidden() const noexcept { return forbidden_; }
  std::size_t state_count() const noexcept { return next_.size() / alphabet_.size(); }

  bool contains(const Word& w) const;
  /// L ∩ A^n in lexicographic order.
  std::vector<Word> slice(std::size_t n) const;
  FactorSlice factor_slice(std::size_t n) const;
  std::uint64_t slice_size(std::size_t n) const;

  /// The language of reversed words, and the language under a renaming
  /// perm[a] of the letters.
  FactorialLanguage mirror() const;
  FactorialLanguage rename(const std::vector<Symbol>& perm) const;

 private:
  FactorialLanguage(Alphabet alphabet, std::vector<Word> forbidden);

  static constexpr std::int32_t kDead = -1;
  std::int32_t step(std::int32_t state, Symbol a) const {
    return next_[static_cast<std::size_t>(state) * alphabet_.size() + a];
  }

  Alphabet alphabet_;
  std::vector<Word> forbidden_;
  std::vector<std::int32_t> next_;  // live states only; kDead on a match
};

CyclicComplexity cyclic_complexity_L(const FactorialLanguage& L, std::size_t n);

/// MF(L) ∩ A^n, from the slices of lengths n - 1 and n (n >= 1).
std::vector<Word> mf_of_language(const FactorialLanguage& L, std::size_t n);

/// True iff for some letter renaming, optionally followed by reversal, the
/// slices of lengths 0..N coincide.
bool languages_isomorphic_or_mirror(const FactorialLanguage& a, const FactorialLanguage& b,
                                    std::size_t N);
bool languages_isomorphic_or_mirror(const InfiniteWordSource& a, const InfiniteWordSource& b,
                                    std::size_t N, const Budget& budget = {});

}  // namespace cyclo

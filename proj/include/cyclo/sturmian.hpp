#pragma once

// Central words, Christoffel words and arrays, and the Sturmian factor
// machinery built on mechanical words.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/complexity.hpp"
#include "cyclo/generators.hpp"
#include "cyclo/rational.hpp"
#include "cyclo/word.hpp"

namespace cyclo {

/// A palindrome with coprime periods p >= q and length p + q - 2.
struct CentralWord {
  Word word;
  std::size_t p = 0;
  std::size_t q = 0;
};

/// The central record of w, or nullopt.  The empty word is central with
/// periods (1, 1) and a^n with periods (n + 1, 1).  Binary words only.
std::optional<CentralWord> is_central(const Word& w);

/// w = p1 01 p2 = p2 10 p1.  nullopt when w is a power of a single letter
/// (the empty word included).  Throws InvalidArgument if w is not central.
std::optional<std::pair<Word, Word>> central_decomposition(const Word& w);

/// Lower Christoffel word with r zeros and s ones (r, s >= 1, coprime).
Word christoffel_word(std::uint64_t r, std::uint64_t s);

/// All r + s conjugates of christoffel_word(r, s), sorted.
struct ChristoffelArray {
  std::uint64_t r = 0;
  std::uint64_t s = 0;
  std::vector<Word> rows;

  std::size_t size() const noexcept { return rows.size(); }
  Word column(std::size_t j) const;
  /// Names of the structural properties that fail; empty when all hold.
  std::vector<std::string> violations() const;
  std::string str() const;
};

ChristoffelArray christoffel_array(std::uint64_t r, std::uint64_t s);

/// Length-n factors of the Sturmian word of slope s (exactly n + 1 of them).
FactorSlice sturmian_factor_slice(const Slope& s, std::size_t n, const Budget& budget = {});

/// Bispecial factors of the mechanical word of slope s with length <= N,
/// shortest first, each with its central periods.
std::vector<CentralWord> bispecial_factors(const Slope& s, std::size_t N,
                                           const Budget& budget = {});
std::vector<std::size_t> bispecial_lengths(const Slope& s, std::size_t N,
                                           const Budget& budget = {});

/// Each successor (p', q') of (p, q) has p' = p + q and q' in {p, q}.
bool follows_period_rule(const std::vector<CentralWord>& chain);

/// |w|_1 / |w| for binary w; throws on the empty word.
Rational slope_of(const Word& w);

/// Inverse of a modulo m, if gcd(a, m) = 1.
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m);

}  // namespace cyclo

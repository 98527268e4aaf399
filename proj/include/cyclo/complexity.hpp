#pragma once

// Factor enumeration over infinite-word sources and the complexity
// functions built on it: factor (p), abelian (a), cyclic (c) and
// minimal-forbidden-factor (mf) complexity, special factors, and the
// begin/end letter statistics of binary words.

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/generators.hpp"
#include "cyclo/text_index.hpp"
#include "cyclo/word.hpp"

namespace cyclo {

/// How a factor set was obtained and why it is believed complete.
struct Provenance {
  std::size_t prefix_length = 0;
  std::string method;
  bool sufficient = true;
  /// (prefix length, factor count) for every probe made.
  std::vector<std::pair<std::size_t, std::size_t>> probes;

  std::string str() const;
};

/// Prefix budget in symbols (one byte each).
struct Budget {
  std::size_t max_prefix = std::size_t{1} << 24;
};

/// The distinct factors of one length, in lexicographic order.  Factors are
/// stored as windows into a shared text and materialized on demand.
class FactorSlice {
 public:
  FactorSlice(Alphabet alphabet, std::size_t n, std::shared_ptr<const Text> text,
              std::vector<std::uint32_t> starts, Provenance provenance);

  /// Slice holding exactly `words` (deduplicated), all of length n.
  static FactorSlice from_words(std::span<const Word> words, std::size_t n,
                                const Alphabet& alphabet = Alphabet::binary());

  std::size_t length() const noexcept { return n_; }
  std::size_t size() const noexcept { return starts_.size(); }
  const Alphabet& alphabet() const noexcept { return alphabet_; }
  const Provenance& provenance() const noexcept { return provenance_; }

  std::span<const Symbol> view(std::size_t i) const;
  /// The shared text and the start of each factor in it.
  const Text& text() const noexcept { return *text_; }
  std::span<const std::uint32_t> starts() const noexcept { return starts_; }
  Word word(std::size_t i) const;
  std::vector<Word> words() const;

  bool contains(std::span<const Symbol> w) const;
  bool contains(const Word& w) const;

 private:
  Alphabet alphabet_;
  std::size_t n_;
  std::shared_ptr<const Text> text_;
  std::vector<std::uint32_t> starts_;
  Provenance provenance_;
};

/// Distinct length-n factors of src.  Throws BudgetExhausted when no prefix
/// within budget can be shown sufficient.
FactorSlice factors(const InfiniteWordSource& src, std::size_t n, const Budget& budget = {});

std::size_t factor_complexity(const InfiniteWordSource& src, std::size_t n,
                              const Budget& budget = {});
std::size_t abelian_complexity(const InfiniteWordSource& src, std::size_t n,
                               const Budget& budget = {});

struct CyclicComplexity {
  std::size_t count = 0;
  ConjugacyInventory inventory;
};
CyclicComplexity cyclic_complexity(const InfiniteWordSource& src, std::size_t n,
                                   const Budget& budget = {});

/// Counts on an existing slice; these avoid materializing every factor.
std::size_t abelian_class_count(const FactorSlice& slice);
std::size_t cyclic_class_count(const FactorSlice& slice);
ConjugacyInventory inventory_of(const FactorSlice& slice);

/// Words v of length n absent from src whose length-(n-1) prefix and suffix
/// both occur.  Sorted.
std::vector<Word> minimal_forbidden(const InfiniteWordSource& src, std::size_t n,
                                    const Budget& budget = {});
/// Same, from the slices of lengths n-1 and n.
std::vector<Word> minimal_forbidden(const FactorSlice& shorter, const FactorSlice& slice);

struct BeginEnd {
  std::size_t same = 0;       // first letter == last letter
  std::size_t different = 0;
};
BeginEnd begin_end_counts(const InfiniteWordSource& src, std::size_t n,
                          const Budget& budget = {});
BeginEnd begin_end_counts(const FactorSlice& slice);

enum class Side { Left, Right, Both };

/// Length-n factors with at least two extensions on `side`, read off the
/// slice of length n+1.  Binary alphabets only.
std::vector<Word> special_factors(const InfiniteWordSource& src, std::size_t n, Side side,
                                  const Budget& budget = {});
std::vector<Word> special_factors(const FactorSlice& extended, Side side);

struct ComplexityRecord {
  std::size_t n = 0;
  std::size_t p = 0;
  std::size_t a = 0;
  std::size_t c = 0;
  std::size_t mf = 0;
  Provenance provenance;
};

ComplexityRecord complexity_record(const InfiniteWordSource& src, std::size_t n,
                                   const Budget& budget = {});

/// Morse-Hedlund at desk scale: p(n) >= n+1 for every 1 <= n <= n_max.
bool looks_aperiodic(const InfiniteWordSource& src, std::size_t n_max = 64,
                     const Budget& budget = {});

}  // namespace cyclo

#pragma once

// Deterministic infinite words, all exposed through InfiniteWordSource: a
// monotone prefix provider plus the hints the factor enumerator uses to
// decide when a prefix is long enough.

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "cyclo/rational.hpp"
#include "cyclo/text_index.hpp"
#include "cyclo/word.hpp"

namespace cyclo {

/// How a finitely described sequence continues past its explicit entries.
enum class Repeat { Last, Cycle };

class InfiniteWordSource {
 public:
  virtual ~InfiniteWordSource() = default;
  InfiniteWordSource(const InfiniteWordSource&) = delete;
  InfiniteWordSource& operator=(const InfiniteWordSource&) = delete;

  const std::string& id() const noexcept { return id_; }
  const Alphabet& alphabet() const noexcept { return alphabet_; }

  /// First L letters.  prefix(L) is a prefix of prefix(L') for L <= L'.
  Word prefix(std::size_t L) const;
  std::shared_ptr<const Text> prefix_text(std::size_t L) const;

  /// Suffix-array index over prefix_text(L); a few recent lengths are kept.
  std::shared_ptr<const TextIndex> index(std::size_t L) const;

  // --- prefix sufficiency -------------------------------------------------
  // A source either certifies a prefix length that provably contains every
  // length-n factor, or offers a growing probe schedule on which the
  // enumerator looks for a factor set that stops changing.

  virtual std::optional<std::size_t> certified_prefix(std::size_t n) const;
  virtual std::size_t first_probe(std::size_t n) const;
  virtual std::size_t next_probe(std::size_t current) const;
  /// Number of consecutive unchanged probes required.
  virtual int stable_rounds() const { return 1; }
  virtual std::string sufficiency_method() const { return "doubling"; }

  /// (preperiod, period) when the source is ultimately periodic by
  /// construction.
  virtual std::optional<std::pair<std::size_t, std::size_t>> periodicity()
      const {
    return std::nullopt;
  }

 protected:
  InfiniteWordSource(std::string id, Alphabet alphabet)
      : id_(std::move(id)), alphabet_(std::move(alphabet)) {}

  /// Produce at least L letters.  Called with the cache lock held.
  virtual Text generate(std::size_t L) const = 0;

 private:
  std::string id_;
  Alphabet alphabet_;
  mutable std::mutex mu_;
  mutable std::shared_ptr<const Text> cache_;
  mutable std::vector<std::shared_ptr<const TextIndex>> indexes_;
};

using Source = std::shared_ptr<const InfiniteWordSource>;

// --- substitutions ----------------------------------------------------------

/// Letter-to-word map over one alphabet.
struct Morphism {
  Alphabet alphabet;
  std::vector<Word> images;  // indexed by symbol

  /// images given as strings, one per symbol in alphabet order.
  static Morphism parse(const std::vector<std::string>& images,
                        const Alphabet& alphabet = Alphabet::binary());

  const Word& image(Symbol a) const { return images.at(a); }
  Word apply(const Word& w) const;
  bool is_uniform() const;
};

/// a -> u . slot(a) . v, slot a bijection of the alphabet.
struct SlotSubstitution {
  Word u;
  Word v;
  std::vector<Symbol> slot;  // slot[a]

  static SlotSubstitution identity(Word u, Word v);
  /// Binary only: 0 <-> 1 in the slot.
  static SlotSubstitution swap(Word u, Word v);

  std::size_t k() const noexcept { return u.size() + v.size() + 1; }
  bool identity_slot() const noexcept;
  Morphism to_morphism() const;
};

// --- Toeplitz and paperfolding ---------------------------------------------

/// A periodic pattern over alphabet + '?', the '?' marking holes.
class ToeplitzPattern {
 public:
  static ToeplitzPattern parse(std::string_view pattern,
                               const Alphabet& alphabet = Alphabet::binary());

  std::size_t period() const noexcept { return cells_.size(); }
  /// Symbol at i mod period, or nullopt for a hole.
  std::optional<Symbol> at(std::size_t i) const;
  std::string str() const { return text_; }

 private:
  std::vector<int> cells_;  // -1 for '?'
  std::string text_;
};

enum class Fold { Tau, TauBar };

struct FoldSequence {
  std::vector<Fold> folds;
  Repeat repeat = Repeat::Last;
  Fold at(std::size_t i) const;
};

// --- slopes -----------------------------------------------------------------

struct Convergent {
  std::uint64_t p;
  std::uint64_t q;
};

/// alpha = [0; a1, a2, ...] in (0,1): explicit partial quotients followed by
/// a periodic tail, plus an intercept (nullopt: characteristic word).
struct Slope {
  std::vector<std::uint64_t> head;
  std::vector<std::uint64_t> tail;
  std::optional<Rational> intercept;

  static Slope periodic(std::vector<std::uint64_t> head,
                        std::vector<std::uint64_t> tail);
  /// Finite head continued by 1s forever.
  static Slope extend_with_ones(std::vector<std::uint64_t> head);
  static Slope fibonacci();

  /// Partial quotient a_i, i >= 1.
  std::uint64_t quotient(std::size_t i) const;
  /// Convergents p_i/q_i for i = 0 .. until q_i > q_min (inclusive).
  std::vector<Convergent> convergents(std::uint64_t q_min) const;
  double value() const;
  std::string str() const;
  void validate() const;
};

// --- constructions ----------------------------------------------------------

/// Fixed point of m starting with seed: m(seed) must begin with seed and be
/// longer than one letter.
Source fixed_point(const Morphism& m, Symbol seed, std::string id = {});
Source fixed_point(const SlotSubstitution& m, Symbol seed, std::string id = {});

/// lim mu_1 o mu_2 o ... o mu_n(0); every u_i must be non-empty.
Source s_adic_limit(std::vector<SlotSubstitution> seq, Repeat repeat,
                    std::string id = {});

/// Stage 0 is the first pattern; each later stage fills the remaining holes
/// with the next pattern.  A finite list continues per `repeat`.
Source toeplitz(std::vector<ToeplitzPattern> patterns,
                Repeat repeat = Repeat::Last, std::string id = {});

/// Limit of tau_0 o tau_1 o ... o tau_n(00), with tau(ab..) = 0a1b..
/// and tau_bar(ab..) = 1a0b...
Source paperfolding(FoldSequence folds, std::string id = {});

/// Stage word tau_0 o ... o tau_{n-1}(00), of length 2^(n+1).
Word paperfolding_stage(const FoldSequence& folds, std::size_t n);

/// Lower mechanical word x_k = floor((k+1)a + r) - floor(k a + r), evaluated
/// exactly between consecutive convergents.  The characteristic intercept
/// is r = a.
Source mechanical(Slope slope, std::string id = {});

Source ultimately_periodic(Word preperiod, Word period, std::string id = {});

}  // namespace cyclo

#pragma once

// Suffix array with LCP over a finite text.  Once built, the distinct
// factors of any length n are read off in one linear pass, already in
// lexicographic order.

#include <cstddef>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "cyclo/word.hpp"

namespace cyclo {

using Text = std::vector<Symbol>;

class TextIndex {
 public:
  TextIndex(std::shared_ptr<const Text> text, std::size_t alphabet_size);

  std::size_t size() const noexcept { return text_->size(); }
  std::span<const Symbol> text() const noexcept { return *text_; }
  const std::shared_ptr<const Text>& shared_text() const noexcept {
    return text_;
  }

  /// Start of one occurrence of each distinct length-n factor, in
  /// lexicographic order of the factors.
  std::vector<std::uint32_t> distinct_factor_starts(std::size_t n) const;
  std::size_t distinct_factor_count(std::size_t n) const;

  std::span<const std::uint32_t> suffix_array() const noexcept { return sa_; }
  /// lcp()[i] = longest common prefix of suffixes sa[i-1] and sa[i].
  std::span<const std::uint32_t> lcp() const noexcept { return lcp_; }

 private:
  template <typename Visit>
  void for_each_distinct(std::size_t n, Visit&& visit) const;

  std::shared_ptr<const Text> text_;
  std::vector<std::uint32_t> sa_;
  std::vector<std::uint32_t> lcp_;
};

/// Independent backend: rolling-hash window scan with exact verification on
/// hash hits.  Same output contract as TextIndex::distinct_factor_starts.
std::vector<std::uint32_t> scan_distinct_factors(std::span<const Symbol> text,
                                                 std::size_t n);

}  // namespace cyclo

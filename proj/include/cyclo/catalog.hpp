#pragma once

// JSON word specs and the catalog of named words.
//
// A word spec is an object with a "kind" and kind-specific fields.
// Unknown fields are errors.  Words are strings over "alphabet" (default
// "01").
//
//   {"kind": "fixed_point", "images": ["01", "10"], "seed": "0"}
//   {"kind": "fixed_point", "slot": {"u": "0", "v": "", "slot": "swap"}, "seed": "0"}
//   {"kind": "s_adic", "substitutions": [{"u": "0", "v": "", "slot": "swap"}],
//    "repeat": "last" | "cycle"}
//   {"kind": "toeplitz", "patterns": ["0?1?"], "repeat": "last"}
//   {"kind": "paperfolding", "folds": ["tau", "tau_bar"], "repeat": "cycle"}
//   {"kind": "mechanical", "head": [2], "tail": [1], "intercept": "1/3"}
//   {"kind": "ultimately_periodic", "preperiod": "1", "period": "0"}
//
// Every kind also accepts "id".  A slot is "identity", "swap", or the slot
// images written as a word ("10" for the swap over {0,1}).  A mechanical
// word without "intercept" is the characteristic word of its slope.

#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "cyclo/generators.hpp"

namespace cyclo {

Source make_source(const nlohmann::json& spec);

struct CatalogEntry {
  std::string name;
  std::string description;
  nlohmann::json spec;
  /// Ultimately periodic by construction (preperiod, period known).
  bool periodic = false;
};

const std::vector<CatalogEntry>& catalog();
const CatalogEntry* find_entry(std::string_view name);

/// A catalog name, or an inline JSON word spec.
Source resolve_word(std::string_view name_or_json);

}  // namespace cyclo

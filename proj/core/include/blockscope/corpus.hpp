#pragma once

#include <functional>
#include <string>
#include <vector>

#include "blockscope/hopf.hpp"

namespace blockscope {

struct CorpusEntry {
  std::string name;
  std::string summary;
  std::function<HopfAlgebra()> build;
  int cap = 10;  // shipped degree cap
};

/// The fixed desk-scale corpus, in a stable order.
const std::vector<CorpusEntry>& corpus();

/// Corpus members plus auxiliary builtins (truncated polynomial algebras).
const std::vector<CorpusEntry>& builtins();

/// Canonical builtin name for user input: ASCII "x" or the multiplication
/// sign, round or square brackets, and an omitted "@p" suffix when unique.
/// Throws PreconditionError listing the known names otherwise.
const CorpusEntry& find_builtin(const std::string& name);

HopfAlgebra builtin_algebra(const std::string& name);

}  // namespace blockscope

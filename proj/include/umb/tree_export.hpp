#pragma once

#include <string>
#include <vector>

#include "umb/word.hpp"

namespace umb {

// Graphviz text for the binary prefix tree of the given words: one node per
// prefix, edges labeled 0/1, children listed 0 (left) before 1 (right).
// Words must be nonempty and of equal length; duplicates are collapsed.
std::string tree_export(const std::vector<BinaryWord>& words);

}  // namespace umb

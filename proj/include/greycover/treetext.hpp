#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greycover/balance.hpp"
#include "greycover/model.hpp"

namespace greycover {

// Text form of a tree:
//   node  := '(' color { ws node } ')'
//   color := 'u' | 'w' | 'g'
// Vertex ids are assigned in the order nodes open (pre-order), so the root
// is id 0 and children keep their written order.

struct ParseOutcome {
    std::optional<WhiteGreyTree> tree;       // set iff no errors at all
    std::vector<std::string> parse_errors;   // grammar problems, with offsets
    std::vector<Violation> violations;       // color-rule problems
};

ParseOutcome parse_tree(const std::string& text);

// Canonical form: single spaces, children in stored order, no trailing
// whitespace.
std::string serialize_tree(const WhiteGreyTree& t);

// Same grammar with colors ignored; neighbor lists are parent first, then
// children in written order (the root has children only).
std::optional<UnrootedTree> parse_unrooted(const std::string& text,
                                           std::string* error = nullptr);

// Re-serialization rooted at vertex 0, honoring neighbor order; every vertex
// prints as 'u'.
std::string serialize_unrooted(const UnrootedTree& t);

}  // namespace greycover

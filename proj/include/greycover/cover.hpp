#pragma once

#include <optional>
#include <string>
#include <vector>

#include "greycover/model.hpp"

namespace greycover {

enum class PathKind { Short, GreyPath, Long };

std::string to_string(PathKind k);

// A simple path given by its vertex sequence; endpoints must be colored.
// Cost: a single colored vertex or a path between two grey vertices costs 1,
// anything else costs 2.
struct Path {
    std::vector<VertexId> vertices;
    PathKind kind = PathKind::Short;
    int cost = 1;

    bool operator==(const Path&) const = default;
};

// The unique tree path from a to b (possibly a == b), with kind and cost
// assigned.  Throws std::invalid_argument when an endpoint is uncolored.
Path path_cost(const WhiteGreyTree& t, VertexId a, VertexId b);

// Kind/cost for an existing vertex sequence (assumed a valid path).
PathKind classify_path(const WhiteGreyTree& t, const std::vector<VertexId>& vertices);

struct Cover {
    std::vector<Path> paths;

    int total_cost() const {
        int s = 0;
        for (const auto& p : paths) s += p.cost;
        return s;
    }
};

// A cover is accepted when every path is simple with adjacent consecutive
// vertices and colored endpoints, and every colored vertex of the tree lies
// on at least one path.  Paths may overlap freely.
struct CoverCheck {
    bool valid = false;
    int total = 0;                      // sum of path costs (when valid)
    std::vector<std::string> problems;  // empty iff valid
};

CoverCheck validate_cover(const WhiteGreyTree& t, const Cover& c);

// Optimal cover of a white subtree by itself.  Costs
//   leaves + 1  when the leaf count is odd and no short leaf exists,
//   leaves      otherwise
// (short leaf: chain to the nearest branching vertex has no colored vertex).
// Even leaf counts pair all leaves through a balanced vertex; an odd count
// first spends a one-vertex path on a short leaf, or, lacking one, a path
// from a leaf up to the last colored vertex below its nearest branching
// vertex.
struct WhiteCover {
    Cover cover;    // paths in subtree ids
    int cost = 0;
};

WhiteCover white_cover(const DerivedSubtree& tw);

struct CostReport {
    CaseAnalysis analysis;
    int cost_tw = 0;     // optimal cost within the white subtree
    int grey_term = 0;   // max(0, ceil((g - free_paths)/2))
    int total = 0;       // cost_tw + grey_term
};

CostReport cost(const WhiteGreyTree& t);

// Explicit optimal cover of the whole tree, matching cost(t).total.  The
// white subtree's cover is arranged so its free paths can absorb grey
// leaves; leftover grey leaves pair up through the root, one possibly left
// on a one-vertex path.  At most two paths mix white and grey.
struct BuiltCover {
    Cover cover;         // paths in source-tree ids
    CostReport report;
};

BuiltCover build_cover(const WhiteGreyTree& t);

// Restriction of a path to the white subtree: the surviving contiguous run
// of subtree vertices, re-labelled to subtree ids, with leading and trailing
// uncolored vertices stripped.  Empty restrictions yield nullopt.
std::optional<Path> trace(const WhiteGreyTree& t, const DerivedSubtree& tw,
                          const Path& p);

// Trace of every path of a cover, dropping empty restrictions.
Cover trace_cover(const WhiteGreyTree& t, const DerivedSubtree& tw,
                  const Cover& c);

// Paths carrying at least two colored vertices of which exactly one is a
// grey leaf of the tree.
std::vector<Path> mixed_paths(const WhiteGreyTree& t, const Cover& c);

}  // namespace greycover

#pragma once

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "greycover/balance.hpp"
#include "greycover/cover.hpp"
#include "greycover/model.hpp"

namespace greycover {

struct TooLargeError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct OracleLimit {
    int max_colored = 16;
    long long max_paths_expanded = 200'000'000;   // safety valve
};

struct ExactCost {
    int cost = 0;
    Cover witness;
};

// Exhaustive minimum over all covers, by dynamic programming on the set of
// covered colored vertices; candidate paths are every single colored vertex
// and every colored-endpoint pair.  Throws TooLargeError beyond the limits.
ExactCost exact_cost(const WhiteGreyTree& t, const OracleLimit& limit = {});

// Whether some perfect matching of the leaves yields paths that all contain
// v and together use every edge.  Requires an even leaf count <= max_leaves
// (all matchings are enumerated).
bool exists_hub_cover(const UnrootedTree& t, VertexId v, int max_leaves = 8);

// Every valid white-grey tree with 2..max_vertices vertices, one per
// isomorphism class under child reordering (children canonically sorted by
// serialized form).  max_vertices <= 10.
std::vector<WhiteGreyTree> enumerate_trees(int max_vertices);

// Every unrooted tree with 1..max_vertices vertices, one per isomorphism
// class.  max_vertices <= 10.
std::vector<UnrootedTree> enumerate_unrooted(int max_vertices);

struct GenParams {
    std::uint64_t seed = 0;
    int max_vertices = 17;
    double grey_leaf_probability = 0.3;
    double chain_probability = 0.5;   // bias toward unary (chain) vertices
};

// Seeded random valid tree; never exceeds max_vertices.
WhiteGreyTree random_tree(const GenParams& params);

// Seeded random unrooted tree with exactly n_leaves leaves (n_leaves >= 2).
UnrootedTree random_unrooted(std::uint64_t seed, int n_leaves);

}  // namespace greycover

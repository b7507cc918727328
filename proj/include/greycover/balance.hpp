#pragma once

#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace greycover {

using VertexId = int;

// A plain unrooted tree on vertices 0..n-1.  Neighbor lists keep insertion
// order; it stands in for a planar embedding, so traversals that depend on
// it (the antipodal pairing) honor it.
struct UnrootedTree {
    std::vector<std::vector<VertexId>> adj;

    explicit UnrootedTree(int n = 0) : adj(n) {}

    int size() const { return static_cast<int>(adj.size()); }
    int degree(VertexId v) const { return static_cast<int>(adj[v].size()); }
    bool is_leaf(VertexId v) const { return degree(v) == 1; }

    void add_edge(VertexId a, VertexId b) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
};

bool is_tree(const UnrootedTree& t);
int leaf_count(const UnrootedTree& t);
std::vector<VertexId> leaves_of(const UnrootedTree& t);

struct NoEvenLeavesError : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct NotBalancedError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Number of leaves l whose path to v uses the edge {v, nbr}; l == v never
// counts.  nbr must be adjacent to v.
int delta(const UnrootedTree& t, VertexId v, VertexId nbr);

// No incident edge may hide more leaves than all other incident edges
// combined: for all e at v, delta(v,e) <= sum of delta over the others.
// The two-vertex tree is the lone exception: both its vertices count as
// balanced even though the inequality fails at them.
bool is_balanced(const UnrootedTree& t, VertexId v);

// Reference implementation: is_balanced applied to every vertex.
std::vector<VertexId> all_balanced(const UnrootedTree& t);

// Same set as all_balanced, computed in O(n) by one rooted pass of subtree
// leaf counts (an internal vertex is balanced iff no side holds more than
// half of all leaves).
std::vector<VertexId> all_balanced_linear(const UnrootedTree& t);

// Smallest-id balanced vertex, via the linear pass.  Requires an even leaf
// count.
VertexId find_balanced_linear(const UnrootedTree& t);

// Walk that starts anywhere and repeatedly steps across the (unique) edge
// hiding too many leaves until it reaches a balanced vertex.  Requires an
// even leaf count.
struct WalkTrace {
    std::vector<VertexId> visited;   // starts at the seed, never repeats
    VertexId result = -1;            // last visited vertex; balanced
};

WalkTrace find_balanced_walk(const UnrootedTree& t, VertexId start);

// A perfect matching of the leaves; the path connecting every pair passes
// through the hub vertex.
struct Pairing {
    std::vector<std::pair<VertexId, VertexId>> pairs;
    VertexId hub = -1;
};

// Greedy pairing through a balanced vertex: repeatedly match leaves from the
// two branches holding the most unmatched leaves (ties: smaller branch-root
// id; within a branch, smallest leaf id first).  Throws NoEvenLeavesError on
// an odd leaf count and NotBalancedError when leaves would be stranded.
Pairing pair_through(const UnrootedTree& t, VertexId hub);

// Pairing by antipodes: enumerate the leaves l_0..l_{2n-1} in first-visit
// order of a depth-first traversal from vertex 0 honoring stored neighbor
// order, and match l_i with l_{i+n}.  The hub is the smallest-id vertex
// common to all pair paths.
Pairing antipodal_pairing(const UnrootedTree& t);

// Unique path between two vertices, inclusive.
std::vector<VertexId> tree_path(const UnrootedTree& t, VertexId a, VertexId b);

// Smallest-id vertex lying on every listed endpoint pair's path, if any.
std::optional<VertexId> common_vertex(
    const UnrootedTree& t,
    const std::vector<std::pair<VertexId, VertexId>>& endpoint_pairs);

}  // namespace greycover

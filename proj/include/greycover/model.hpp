#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace greycover {

using VertexId = int;

enum class Color : std::uint8_t { Uncolored, White, Grey };

// Exact integer ceiling of x/2, correct for negatives: ceil(-1/2) == 0.
constexpr int ceil_div2(int x) { return x >= 0 ? (x + 1) / 2 : -((-x) / 2); }

// Why a rooted tree fails validation.  `vertex` identifies the offending
// vertex where one exists; whole-tree failures carry -1.
enum class TreeErrorKind {
    NotATree,
    RootColored,
    UncoloredNonBranching,
    GreyNotRootChild,
    WhiteLeafAtRoot,
    NonRootLeafNotWhite,
};

struct Violation {
    TreeErrorKind kind;
    VertexId vertex = -1;

    bool operator==(const Violation&) const = default;
};

std::string describe(const Violation& v);

// A rooted tree whose colors obey the structural rules:
//   - the root is uncolored;
//   - grey vertices appear only as children of the root;
//   - every uncolored vertex other than the root has degree >= 3;
//   - every leaf that is not a child of the root is white;
//   - every leaf that is a child of the root is grey.
// Vertices are dense ids 0..n-1; `parent[root]` is -1; children keep their
// insertion order.
struct WhiteGreyTree {
    std::vector<VertexId> parent;
    std::vector<std::vector<VertexId>> children;
    std::vector<Color> color;
    VertexId root = 0;

    int size() const { return static_cast<int>(parent.size()); }
    bool is_leaf(VertexId v) const { return children[v].empty() && v != root; }
    bool is_colored(VertexId v) const { return color[v] != Color::Uncolored; }
    int degree(VertexId v) const {
        return static_cast<int>(children[v].size()) + (v == root ? 0 : 1);
    }
};

struct BuildResult {
    std::optional<WhiteGreyTree> tree;   // set iff violations is empty
    std::vector<Violation> violations;
};

// Validates the parent/color arrays and assembles the tree.  `parent[i]` is
// the parent of vertex i, -1 exactly at the root.
BuildResult build_tree(const std::vector<VertexId>& parent,
                       const std::vector<Color>& color);

// Color-rule check for an already-assembled tree shape.
std::vector<Violation> check_rules(const WhiteGreyTree& t);

struct TreeStats {
    int white_leaves = 0;   // leaves colored white
    int grey_leaves = 0;    // leaves colored grey (internal greys not counted)
    int colored = 0;        // all white or grey vertices
};

TreeStats stats(const WhiteGreyTree& t);

// The white subtree: the tree with every grey leaf removed, and the root
// itself removed when that deletion leaves it with degree <= 1.  The result
// keeps the rooted representation but is NOT revalidated: its top vertex may
// be colored or have small degree.
struct DerivedSubtree {
    WhiteGreyTree tree;                 // shape only; color rules may not hold
    std::vector<VertexId> to_original;  // subtree id -> id in the source tree
    bool removed_root = false;

    std::optional<VertexId> from_original(VertexId original) const;
};

DerivedSubtree derive_white_subtree(const WhiteGreyTree& t);

enum class CaseTag {
    NoDanger_OddNoShort,
    NoDanger_Otherwise,
    Danger_OddNoShort,
    Danger_OddOneWhiteDangerousShort,
    Danger_Otherwise,
};

std::string to_string(CaseTag tag);

struct CaseAnalysis {
    TreeStats stats;
    DerivedSubtree tw;
    int tw_leaves = 0;
    // Leaves of the white subtree whose chain up to the nearest branching
    // vertex (degree >= 3 in the subtree) passes through no colored vertex.
    // A leaf directly adjacent to a branching vertex always qualifies.
    std::vector<VertexId> short_leaves_tw;   // subtree ids, ascending
    std::vector<VertexId> dangerous;         // source-tree ids, top first
    CaseTag case_tag = CaseTag::NoDanger_Otherwise;
    int free_paths = 0;                      // per-case: 1, 0, 2, 0, 1
};

CaseAnalysis classify(const WhiteGreyTree& t);

// Degree-1 vertices of a (possibly derived) tree shape, ascending.  The root
// counts when its degree is 1.  Empty for shapes with fewer than two
// vertices.
std::vector<VertexId> shape_leaves(const WhiteGreyTree& shape);

// Neighbors of v: parent first (absent at the root), then children in order.
std::vector<VertexId> neighbors(const WhiteGreyTree& t, VertexId v);

// Leaves of the shape whose chain up to the nearest branching vertex (degree
// >= 3) passes through no colored vertex; a leaf adjacent to a branching
// vertex always qualifies.  Ascending ids.  A bare-chain shape has none.
std::vector<VertexId> short_leaves_of(const WhiteGreyTree& shape);

// Colored vertices strictly between the root and the first branching vertex,
// when the root has exactly one child that is not a grey leaf.  When that
// child's subtree is a bare chain, every chain vertex except the terminal
// leaf.  Empty when the unique child is itself branching or no unique child
// exists.
std::vector<VertexId> dangerous_vertices(const WhiteGreyTree& t);

// (w + ceil(g/2), w + ceil(g/2) + 1).
std::pair<int, int> bounds(const WhiteGreyTree& t);

}  // namespace greycover

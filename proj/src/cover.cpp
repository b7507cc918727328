#include "greycover/cover.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>

#include "greycover/balance.hpp"

namespace greycover {

std::string to_string(PathKind k) {
    switch (k) {
        case PathKind::Short: return "Short";
        case PathKind::GreyPath: return "GreyPath";
        case PathKind::Long: return "Long";
    }
    return "?";
}

PathKind classify_path(const WhiteGreyTree& t, const std::vector<VertexId>& vertices) {
    if (vertices.empty())
        throw std::invalid_argument("classify_path: empty path");
    if (vertices.size() == 1) return PathKind::Short;
    return t.color[vertices.front()] == Color::Grey &&
                   t.color[vertices.back()] == Color::Grey
               ? PathKind::GreyPath
               : PathKind::Long;
}

namespace {

int cost_of(PathKind k) { return k == PathKind::Long ? 2 : 1; }

Path make_path(const WhiteGreyTree& t, std::vector<VertexId> vertices) {
    Path p;
    p.vertices = std::move(vertices);
    p.kind = classify_path(t, p.vertices);
    p.cost = cost_of(p.kind);
    return p;
}

}  // namespace

Path path_cost(const WhiteGreyTree& t, VertexId a, VertexId b) {
    if (!t.is_colored(a) || !t.is_colored(b))
        throw std::invalid_argument("path_cost: endpoints must be colored");
    std::vector<char> on_a(t.size(), 0);
    for (VertexId u = a; u != -1; u = t.parent[u]) on_a[u] = 1;
    VertexId meet = b;
    while (!on_a[meet]) meet = t.parent[meet];
    std::vector<VertexId> verts;
    for (VertexId u = a;; u = t.parent[u]) {
        verts.push_back(u);
        if (u == meet) break;
    }
    std::vector<VertexId> tail;
    for (VertexId u = b; u != meet; u = t.parent[u]) tail.push_back(u);
    verts.insert(verts.end(), tail.rbegin(), tail.rend());
    return make_path(t, std::move(verts));
}

CoverCheck validate_cover(const WhiteGreyTree& t, const Cover& c) {
    CoverCheck out;
    const int n = t.size();
    std::vector<char> covered(n, 0);
    auto complain = [&](std::string msg) { out.problems.push_back(std::move(msg)); };

    for (std::size_t i = 0; i < c.paths.size(); ++i) {
        const Path& p = c.paths[i];
        std::string label = "path " + std::to_string(i);
        out.total += p.cost;
        if (p.vertices.empty()) {
            complain(label + " is empty");
            continue;
        }
        bool in_range = true;
        for (VertexId v : p.vertices)
            if (v < 0 || v >= n) {
                complain(label + " mentions out-of-range vertex " + std::to_string(v));
                in_range = false;
            }
        if (!in_range) continue;
        for (VertexId v : p.vertices) covered[v] = 1;

        auto sorted = p.vertices;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            complain(label + " repeats a vertex");
        for (std::size_t k = 1; k < p.vertices.size(); ++k) {
            VertexId x = p.vertices[k - 1], y = p.vertices[k];
            if (t.parent[x] != y && t.parent[y] != x)
                complain(label + ": vertices " + std::to_string(x) + " and " +
                         std::to_string(y) + " are not adjacent");
        }
        if (!t.is_colored(p.vertices.front()) || !t.is_colored(p.vertices.back()))
            complain(label + " has an uncolored endpoint");
        else {
            PathKind expect = classify_path(t, p.vertices);
            if (p.kind != expect)
                complain(label + " is labelled " + to_string(p.kind) + " but is " +
                         to_string(expect));
            if (p.cost != cost_of(expect))
                complain(label + " has cost " + std::to_string(p.cost) +
                         " instead of " + std::to_string(cost_of(expect)));
        }
    }

    for (VertexId v = 0; v < n; ++v)
        if (t.is_colored(v) && !covered[v])
            complain("colored vertex " + std::to_string(v) + " is not covered");

    out.valid = out.problems.empty();
    return out;
}

namespace {

// A cover path that may later be stretched to absorb a grey leaf: replacing
// it with the tree path from a grey leaf to far_end keeps the cost and still
// covers everything the original did.
struct FreeSlot {
    std::size_t path_index;
    VertexId far_end;   // shape id
};

struct ShapeCover {
    std::vector<Path> paths;   // shape ids
    int cost = 0;
    std::vector<FreeSlot> slots;
};

// The chain from a leaf toward its nearest branching vertex: the leaf itself
// plus every degree-2 vertex strictly before the walk's stop (a vertex of
// degree >= 3, or the far end of a bare path).
std::vector<VertexId> leaf_chain(const WhiteGreyTree& shape, VertexId leaf) {
    std::vector<VertexId> walk{leaf};
    VertexId prev = leaf;
    VertexId cur = neighbors(shape, leaf).front();
    while (shape.degree(cur) == 2) {
        walk.push_back(cur);
        auto nbrs = neighbors(shape, cur);
        VertexId next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
        prev = cur;
        cur = next;
    }
    return walk;
}

// Leaf pairing of the alive portion of the shape through a balanced vertex,
// as concrete paths in shape ids.
std::vector<Path> pair_alive(const WhiteGreyTree& shape, const std::vector<char>& alive) {
    std::vector<VertexId> orig_of;
    std::vector<VertexId> comp_of(shape.size(), -1);
    for (VertexId v = 0; v < shape.size(); ++v)
        if (alive[v]) {
            comp_of[v] = static_cast<VertexId>(orig_of.size());
            orig_of.push_back(v);
        }
    UnrootedTree u(static_cast<int>(orig_of.size()));
    for (VertexId v = 0; v < shape.size(); ++v) {
        if (!alive[v] || v == shape.root) continue;
        VertexId p = shape.parent[v];
        if (p >= 0 && alive[p]) u.add_edge(comp_of[p], comp_of[v]);
    }
    Pairing pairing = pair_through(u, find_balanced_linear(u));
    std::vector<Path> out;
    out.reserve(pairing.pairs.size());
    for (auto [x, y] : pairing.pairs) {
        std::vector<VertexId> verts;
        for (VertexId v : tree_path(u, x, y)) verts.push_back(orig_of[v]);
        out.push_back(make_path(shape, std::move(verts)));
    }
    return out;
}

// Shared construction behind white_cover and build_cover.  The arranged
// variant steers its choices so the returned slots really are stretchable;
// the plain variant always takes the smallest id.
ShapeCover cover_shape(const WhiteGreyTree& shape, bool arranged) {
    ShapeCover out;
    if (shape.size() == 0) return out;
    if (shape.size() == 1) {
        if (shape.is_colored(0)) {
            out.paths.push_back(make_path(shape, {0}));
            out.cost = 1;
        }
        return out;
    }

    auto leaves = shape_leaves(shape);
    auto shorts = short_leaves_of(shape);
    const bool odd = leaves.size() % 2 == 1;
    const bool danger = shape.degree(0) == 1;   // the top hangs off a chain

    std::vector<char> alive(shape.size(), 1);
    std::optional<FreeSlot> late_slot;   // attached to the first path, if any

    if (odd) {
        std::optional<Path> first;
        if (!shorts.empty()) {
            VertexId pick;
            if (arranged && danger) {
                bool top_short = std::find(shorts.begin(), shorts.end(), 0) != shorts.end();
                if (top_short && shape.color[0] == Color::Grey) {
                    // One-vertex path on the grey top: stretches to a grey-grey
                    // path later.
                    pick = 0;
                    late_slot = FreeSlot{0, 0};
                } else if (top_short && shorts.size() == 1) {
                    pick = 0;   // forced; nothing stretchable remains
                } else {
                    pick = shorts.front() == 0 ? shorts[1] : shorts.front();
                }
            } else {
                pick = shorts.front();
            }
            first = make_path(shape, {pick});
            for (VertexId v : leaf_chain(shape, pick)) alive[v] = 0;
        } else {
            // No short leaf: one path from a leaf through every colored
            // vertex of its chain.  The arranged variant needs the chain to
            // climb straight toward the top (and must leave the top alone),
            // so it skips any leaf whose chain touches vertex 0.
            VertexId pick = -1;
            for (VertexId leaf : leaves) {
                if (arranged) {
                    auto walk = leaf_chain(shape, leaf);
                    if (std::find(walk.begin(), walk.end(), 0) != walk.end()) continue;
                }
                pick = leaf;
                break;
            }
            if (pick < 0)
                throw std::logic_error("cover_shape: no usable leaf for the odd path");
            auto walk = leaf_chain(shape, pick);
            std::size_t last_colored = 0;
            for (std::size_t k = 0; k < walk.size(); ++k)
                if (shape.is_colored(walk[k])) last_colored = k;
            first = make_path(shape, {walk.begin(), walk.begin() + last_colored + 1});
            for (VertexId v : walk) alive[v] = 0;
            late_slot = FreeSlot{0, pick};
        }
        out.paths.push_back(std::move(*first));
    }

    auto pairs = pair_alive(shape, alive);
    std::size_t pair_base = out.paths.size();
    for (auto& p : pairs) out.paths.push_back(std::move(p));

    if (arranged && danger && alive[0]) {
        // The pair through the dangerous top stretches to a grey leaf: the
        // grey-to-partner path runs through the root and the top.
        for (std::size_t k = pair_base; k < out.paths.size(); ++k) {
            const auto& verts = out.paths[k].vertices;
            if (verts.front() == 0)
                out.slots.push_back(FreeSlot{k, verts.back()});
        }
    }
    if (late_slot) out.slots.push_back(*late_slot);

    for (const Path& p : out.paths) out.cost += p.cost;
    return out;
}

}  // namespace

WhiteCover white_cover(const DerivedSubtree& tw) {
    ShapeCover sc = cover_shape(tw.tree, false);
    WhiteCover out;
    out.cover.paths = std::move(sc.paths);
    out.cost = sc.cost;
    if (tw.tree.size() >= 2) {
        int leaves = static_cast<int>(shape_leaves(tw.tree).size());
        bool bump = leaves % 2 == 1 && short_leaves_of(tw.tree).empty();
        if (out.cost != leaves + (bump ? 1 : 0))
            throw std::logic_error("white_cover: cost disagrees with the formula");
    }
    return out;
}

CostReport cost(const WhiteGreyTree& t) {
    CostReport r;
    r.analysis = classify(t);
    int extra = 0;
    switch (r.analysis.case_tag) {
        case CaseTag::NoDanger_OddNoShort: extra = 1; break;
        case CaseTag::NoDanger_Otherwise: extra = 0; break;
        case CaseTag::Danger_OddNoShort: extra = 2; break;
        case CaseTag::Danger_OddOneWhiteDangerousShort: extra = 1; break;
        case CaseTag::Danger_Otherwise: extra = 1; break;
    }
    r.cost_tw = r.analysis.stats.white_leaves + extra;
    r.grey_term = std::max(
        0, ceil_div2(r.analysis.stats.grey_leaves - r.analysis.free_paths));
    r.total = r.cost_tw + r.grey_term;
    return r;
}

BuiltCover build_cover(const WhiteGreyTree& t) {
    BuiltCover out;
    out.report = cost(t);
    const CaseAnalysis& a = out.report.analysis;

    ShapeCover sc = cover_shape(a.tw.tree, true);
    if (sc.cost != out.report.cost_tw)
        throw std::logic_error("build_cover: white part disagrees with the formula");
    if (sc.slots.size() != static_cast<std::size_t>(a.free_paths))
        throw std::logic_error("build_cover: wrong number of stretchable paths");

    for (const Path& p : sc.paths) {
        Path mapped = p;
        for (VertexId& v : mapped.vertices) v = a.tw.to_original[v];
        out.cover.paths.push_back(std::move(mapped));
    }

    std::vector<VertexId> grey_leaves;
    for (VertexId c : t.children[t.root])
        if (t.is_leaf(c) && t.color[c] == Color::Grey) grey_leaves.push_back(c);

    // Absorb one grey leaf per stretchable path, smallest ids first.
    std::size_t absorbed =
        std::min(grey_leaves.size(), sc.slots.size());
    for (std::size_t k = 0; k < absorbed; ++k) {
        const FreeSlot& slot = sc.slots[k];
        Path stretched =
            path_cost(t, grey_leaves[k], a.tw.to_original[slot.far_end]);
        if (stretched.cost != out.cover.paths[slot.path_index].cost)
            throw std::logic_error("build_cover: stretching changed a path cost");
        out.cover.paths[slot.path_index] = std::move(stretched);
    }

    // Leftover grey leaves pair up through the root; an odd one stands alone.
    for (std::size_t k = absorbed; k + 1 < grey_leaves.size(); k += 2)
        out.cover.paths.push_back(
            make_path(t, {grey_leaves[k], t.root, grey_leaves[k + 1]}));
    if ((grey_leaves.size() - absorbed) % 2 == 1)
        out.cover.paths.push_back(make_path(t, {grey_leaves.back()}));

    CoverCheck chk = validate_cover(t, out.cover);
    if (!chk.valid)
        throw std::logic_error("build_cover: produced an invalid cover: " +
                               chk.problems.front());
    if (chk.total != out.report.total)
        throw std::logic_error("build_cover: cover cost disagrees with the formula");
    return out;
}

std::optional<Path> trace(const WhiteGreyTree& t, const DerivedSubtree& tw,
                          const Path& p) {
    (void)t;
    std::vector<VertexId> run;
    bool inside = false;
    bool seen_run = false;
    for (VertexId v : p.vertices) {
        auto sub = tw.from_original(v);
        if (sub) {
            if (!inside && seen_run)
                throw std::invalid_argument("trace: path re-enters the subtree");
            inside = true;
            seen_run = true;
            run.push_back(*sub);
        } else {
            inside = false;
        }
    }
    std::size_t lo = 0, hi = run.size();
    while (lo < hi && !tw.tree.is_colored(run[lo])) ++lo;
    while (hi > lo && !tw.tree.is_colored(run[hi - 1])) --hi;
    if (lo == hi) return std::nullopt;
    return make_path(tw.tree, {run.begin() + lo, run.begin() + hi});
}

Cover trace_cover(const WhiteGreyTree& t, const DerivedSubtree& tw, const Cover& c) {
    Cover out;
    for (const Path& p : c.paths)
        if (auto q = trace(t, tw, p)) out.paths.push_back(std::move(*q));
    return out;
}

std::vector<Path> mixed_paths(const WhiteGreyTree& t, const Cover& c) {
    std::vector<Path> out;
    for (const Path& p : c.paths) {
        int colored = 0, grey_leaves = 0;
        for (VertexId v : p.vertices) {
            if (t.is_colored(v)) ++colored;
            if (t.is_leaf(v) && t.color[v] == Color::Grey) ++grey_leaves;
        }
        if (colored >= 2 && grey_leaves == 1) out.push_back(p);
    }
    return out;
}

}  // namespace greycover

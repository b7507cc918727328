#include "greycover/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace greycover {

std::string describe(const Violation& v) {
    std::string where = v.vertex >= 0 ? " at vertex " + std::to_string(v.vertex) : "";
    switch (v.kind) {
        case TreeErrorKind::NotATree:
            return "input is not a single connected tree";
        case TreeErrorKind::RootColored:
            return "root must be uncolored" + where;
        case TreeErrorKind::UncoloredNonBranching:
            return "uncolored non-root vertex must have degree >= 3" + where;
        case TreeErrorKind::GreyNotRootChild:
            return "grey vertex must be a child of the root" + where;
        case TreeErrorKind::WhiteLeafAtRoot:
            return "leaf child of the root must be grey" + where;
        case TreeErrorKind::NonRootLeafNotWhite:
            return "leaf not at the root must be white" + where;
    }
    return "unknown violation";
}

std::vector<Violation> check_rules(const WhiteGreyTree& t) {
    std::vector<Violation> out;
    if (t.color[t.root] != Color::Uncolored)
        out.push_back({TreeErrorKind::RootColored, t.root});
    for (VertexId v = 0; v < t.size(); ++v) {
        if (v == t.root) continue;
        if (t.color[v] == Color::Uncolored && t.degree(v) < 3)
            out.push_back({TreeErrorKind::UncoloredNonBranching, v});
        if (t.color[v] == Color::Grey && t.parent[v] != t.root)
            out.push_back({TreeErrorKind::GreyNotRootChild, v});
        if (t.is_leaf(v)) {
            if (t.parent[v] == t.root) {
                if (t.color[v] == Color::White)
                    out.push_back({TreeErrorKind::WhiteLeafAtRoot, v});
            } else if (t.color[v] != Color::White) {
                out.push_back({TreeErrorKind::NonRootLeafNotWhite, v});
            }
        }
    }
    return out;
}

BuildResult build_tree(const std::vector<VertexId>& parent,
                       const std::vector<Color>& color) {
    if (parent.size() != color.size())
        throw std::invalid_argument("parent and color arrays differ in length");

    const int n = static_cast<int>(parent.size());
    auto not_a_tree = [] {
        return BuildResult{std::nullopt, {Violation{TreeErrorKind::NotATree, -1}}};
    };
    if (n == 0) return not_a_tree();

    WhiteGreyTree t;
    t.parent = parent;
    t.color = color;
    t.children.assign(n, {});
    int roots = 0;
    for (VertexId v = 0; v < n; ++v) {
        if (parent[v] == -1) {
            ++roots;
            t.root = v;
        } else if (parent[v] < 0 || parent[v] >= n || parent[v] == v) {
            return not_a_tree();
        } else {
            t.children[parent[v]].push_back(v);
        }
    }
    if (roots != 1) return not_a_tree();

    // Reachability from the root doubles as the acyclicity check.
    std::vector<VertexId> stack{t.root};
    int seen = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        ++seen;
        for (VertexId c : t.children[v]) stack.push_back(c);
    }
    if (seen != n) return not_a_tree();

    auto violations = check_rules(t);
    if (!violations.empty()) return {std::nullopt, std::move(violations)};
    return {std::move(t), {}};
}

TreeStats stats(const WhiteGreyTree& t) {
    TreeStats s;
    for (VertexId v = 0; v < t.size(); ++v) {
        if (t.color[v] != Color::Uncolored) ++s.colored;
        if (t.is_leaf(v)) {
            if (t.color[v] == Color::White) ++s.white_leaves;
            if (t.color[v] == Color::Grey) ++s.grey_leaves;
        }
    }
    return s;
}

std::optional<VertexId> DerivedSubtree::from_original(VertexId original) const {
    auto it = std::lower_bound(to_original.begin(), to_original.end(), original);
    if (it == to_original.end() || *it != original) return std::nullopt;
    return static_cast<VertexId>(it - to_original.begin());
}

DerivedSubtree derive_white_subtree(const WhiteGreyTree& t) {
    auto is_grey_leaf = [&](VertexId v) {
        return t.is_leaf(v) && t.color[v] == Color::Grey;
    };

    std::vector<VertexId> kept_root_children;
    for (VertexId c : t.children[t.root])
        if (!is_grey_leaf(c)) kept_root_children.push_back(c);

    DerivedSubtree sub;
    sub.removed_root = kept_root_children.size() <= 1;

    VertexId top;
    if (!sub.removed_root) {
        top = t.root;
    } else if (kept_root_children.size() == 1) {
        top = kept_root_children.front();
    } else {
        return sub;   // all children were grey leaves: empty subtree
    }

    // Pre-order from the top, skipping grey leaves.  Original ids are
    // themselves pre-order, so to_original comes out strictly increasing.
    std::vector<VertexId> order;
    std::vector<VertexId> stack{top};
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        order.push_back(v);
        const auto& ch = t.children[v];
        for (auto it = ch.rbegin(); it != ch.rend(); ++it)
            if (!is_grey_leaf(*it)) stack.push_back(*it);
    }
    std::sort(order.begin(), order.end());

    const int m = static_cast<int>(order.size());
    sub.to_original = order;
    sub.tree.parent.assign(m, -1);
    sub.tree.children.assign(m, {});
    sub.tree.color.resize(m);
    sub.tree.root = 0;
    for (int v = 0; v < m; ++v) {
        VertexId orig = order[v];
        sub.tree.color[v] = t.color[orig];
        if (orig == top) continue;
        VertexId p = *sub.from_original(t.parent[orig]);
        sub.tree.parent[v] = p;
        sub.tree.children[p].push_back(v);
    }
    return sub;
}

std::vector<VertexId> dangerous_vertices(const WhiteGreyTree& t) {
    auto is_grey_leaf = [&](VertexId v) {
        return t.is_leaf(v) && t.color[v] == Color::Grey;
    };
    std::vector<VertexId> candidates;
    for (VertexId c : t.children[t.root])
        if (!is_grey_leaf(c)) candidates.push_back(c);
    if (candidates.size() != 1) return {};

    std::vector<VertexId> chain;
    VertexId cur = candidates.front();
    while (!t.is_leaf(cur) && t.degree(cur) == 2) {
        chain.push_back(cur);
        cur = t.children[cur].front();
    }
    // Stopped at a branching vertex (excluded) or at the terminal leaf of a
    // bare chain (also excluded).
    return chain;
}

std::vector<VertexId> shape_leaves(const WhiteGreyTree& shape) {
    std::vector<VertexId> out;
    if (shape.size() < 2) return out;
    for (VertexId v = 0; v < shape.size(); ++v)
        if (shape.degree(v) == 1) out.push_back(v);
    return out;
}

std::vector<VertexId> neighbors(const WhiteGreyTree& t, VertexId v) {
    std::vector<VertexId> out;
    if (v != t.root) out.push_back(t.parent[v]);
    for (VertexId c : t.children[v]) out.push_back(c);
    return out;
}

std::vector<VertexId> short_leaves_of(const WhiteGreyTree& shape) {
    std::vector<VertexId> out;
    for (VertexId leaf : shape_leaves(shape)) {
        // Walk toward the nearest branching vertex; the leaf is short when
        // the walk meets no colored vertex strictly in between.
        VertexId prev = leaf;
        VertexId cur = neighbors(shape, leaf).front();
        bool colored_between = false;
        while (shape.degree(cur) == 2) {
            if (shape.color[cur] != Color::Uncolored) colored_between = true;
            auto nbrs = neighbors(shape, cur);
            VertexId next = nbrs[0] == prev ? nbrs[1] : nbrs[0];
            prev = cur;
            cur = next;
        }
        if (shape.degree(cur) >= 3 && !colored_between) out.push_back(leaf);
    }
    return out;
}

CaseAnalysis classify(const WhiteGreyTree& t) {
    CaseAnalysis a;
    a.stats = stats(t);
    a.tw = derive_white_subtree(t);
    a.dangerous = dangerous_vertices(t);

    const WhiteGreyTree& tw = a.tw.tree;
    a.tw_leaves = static_cast<int>(shape_leaves(tw).size());
    a.short_leaves_tw = short_leaves_of(tw);

    const bool danger = !a.dangerous.empty();
    const bool odd = a.tw_leaves % 2 == 1;
    const bool has_short = !a.short_leaves_tw.empty();
    if (!danger) {
        if (odd && !has_short) {
            a.case_tag = CaseTag::NoDanger_OddNoShort;
            a.free_paths = 1;
        } else {
            a.case_tag = CaseTag::NoDanger_Otherwise;
            a.free_paths = 0;
        }
    } else if (odd && !has_short) {
        a.case_tag = CaseTag::Danger_OddNoShort;
        a.free_paths = 2;
    } else if (odd && a.short_leaves_tw.size() == 1 && a.short_leaves_tw[0] == tw.root &&
               tw.color[tw.root] == Color::White) {
        a.case_tag = CaseTag::Danger_OddOneWhiteDangerousShort;
        a.free_paths = 0;
    } else {
        a.case_tag = CaseTag::Danger_Otherwise;
        a.free_paths = 1;
    }
    return a;
}

std::pair<int, int> bounds(const WhiteGreyTree& t) {
    TreeStats s = stats(t);
    int lower = s.white_leaves + ceil_div2(s.grey_leaves);
    return {lower, lower + 1};
}

std::string to_string(CaseTag tag) {
    switch (tag) {
        case CaseTag::NoDanger_OddNoShort: return "NoDanger_OddNoShort";
        case CaseTag::NoDanger_Otherwise: return "NoDanger_Otherwise";
        case CaseTag::Danger_OddNoShort: return "Danger_OddNoShort";
        case CaseTag::Danger_OddOneWhiteDangerousShort:
            return "Danger_OddOneWhiteDangerousShort";
        case CaseTag::Danger_Otherwise: return "Danger_Otherwise";
    }
    return "?";
}

}  // namespace greycover

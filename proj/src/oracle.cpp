#include "greycover/oracle.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <random>
#include <string>

#include "greycover/treetext.hpp"

namespace greycover {

ExactCost exact_cost(const WhiteGreyTree& t, const OracleLimit& limit) {
    std::vector<VertexId> colored;
    for (VertexId v = 0; v < t.size(); ++v)
        if (t.is_colored(v)) colored.push_back(v);
    const int m = static_cast<int>(colored.size());
    if (m > limit.max_colored)
        throw TooLargeError("exact_cost: " + std::to_string(m) +
                            " colored vertices exceed the limit of " +
                            std::to_string(limit.max_colored));
    ExactCost out;
    if (m == 0) return out;

    std::vector<int> bit_of(t.size(), -1);
    for (int i = 0; i < m; ++i) bit_of[colored[i]] = i;

    // Any path in a cover can be shrunk to the path between its first and
    // last colored vertices without losing coverage or gaining cost, so the
    // single colored vertices and the colored-endpoint pairs are a complete
    // candidate set.
    struct Candidate {
        std::uint32_t mask;
        Path path;
    };
    std::vector<Candidate> cands;
    for (int i = 0; i < m; ++i)
        cands.push_back({1u << i, path_cost(t, colored[i], colored[i])});
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            Candidate c{0, path_cost(t, colored[i], colored[j])};
            for (VertexId v : c.path.vertices)
                if (bit_of[v] >= 0) c.mask |= 1u << bit_of[v];
            cands.push_back(std::move(c));
        }

    std::vector<std::vector<int>> by_bit(m);
    for (int k = 0; k < static_cast<int>(cands.size()); ++k)
        for (int b = 0; b < m; ++b)
            if (cands[k].mask & (1u << b)) by_bit[b].push_back(k);

    const std::uint32_t full = m == 32 ? ~0u : (1u << m) - 1;
    constexpr int kInf = 1 << 29;
    std::vector<int> best(full + 1, kInf);
    std::vector<std::uint32_t> prev_mask(full + 1, 0);
    std::vector<int> used(full + 1, -1);
    best[0] = 0;
    long long expanded = 0;
    for (std::uint32_t mask = 0; mask < full; ++mask) {
        if (best[mask] >= kInf) continue;
        int b = std::countr_one(mask);   // lowest uncovered colored vertex
        expanded += static_cast<long long>(by_bit[b].size());
        if (expanded > limit.max_paths_expanded)
            throw TooLargeError("exact_cost: search budget exhausted");
        for (int k : by_bit[b]) {
            std::uint32_t nm = mask | cands[k].mask;
            int score = best[mask] + cands[k].path.cost;
            if (score < best[nm]) {
                best[nm] = score;
                prev_mask[nm] = mask;
                used[nm] = k;
            }
        }
    }

    out.cost = best[full];
    for (std::uint32_t mask = full; mask != 0; mask = prev_mask[mask])
        out.witness.paths.push_back(cands[used[mask]].path);
    std::reverse(out.witness.paths.begin(), out.witness.paths.end());
    return out;
}

bool exists_hub_cover(const UnrootedTree& t, VertexId v, int max_leaves) {
    auto leaves = leaves_of(t);
    const int l = static_cast<int>(leaves.size());
    if (l % 2 != 0)
        throw NoEvenLeavesError("exists_hub_cover: odd number of leaves");
    if (l > max_leaves)
        throw TooLargeError("exists_hub_cover: too many leaves to enumerate");
    const int n = t.size();
    if (l == 0) return true;   // no pairs needed, no edges to cover

    // Root at 0 once so each edge is keyed by its child endpoint.
    std::vector<VertexId> parent(n, -1);
    {
        std::vector<VertexId> stack{0};
        std::vector<char> seen(n, 0);
        seen[0] = 1;
        while (!stack.empty()) {
            VertexId x = stack.back();
            stack.pop_back();
            for (VertexId nb : t.adj[x])
                if (!seen[nb]) {
                    seen[nb] = 1;
                    parent[nb] = x;
                    stack.push_back(nb);
                }
        }
    }

    struct PairPath {
        std::vector<VertexId> edge_children;   // edges as child-end ids
        bool has_v = false;
    };
    std::vector<std::vector<PairPath>> paths(l, std::vector<PairPath>(l));
    for (int i = 0; i < l; ++i)
        for (int j = i + 1; j < l; ++j) {
            auto verts = tree_path(t, leaves[i], leaves[j]);
            PairPath pp;
            for (std::size_t k = 1; k < verts.size(); ++k)
                pp.edge_children.push_back(
                    parent[verts[k]] == verts[k - 1] ? verts[k] : verts[k - 1]);
            pp.has_v = std::find(verts.begin(), verts.end(), v) != verts.end();
            paths[i][j] = std::move(pp);
        }

    std::vector<std::pair<int, int>> chosen;
    // All perfect matchings of the leaves, pruning pairs whose path misses v.
    std::function<bool(unsigned)> search = [&](unsigned remaining) -> bool {
        if (remaining == 0) {
            std::vector<char> covered(n, 0);
            int distinct = 0;
            for (auto [i, j] : chosen)
                for (VertexId c : paths[i][j].edge_children)
                    if (!covered[c]) {
                        covered[c] = 1;
                        ++distinct;
                    }
            return distinct == n - 1;
        }
        int i = std::countr_zero(remaining);
        for (int j = i + 1; j < l; ++j) {
            if (!(remaining & (1u << j))) continue;
            if (!paths[i][j].has_v) continue;
            chosen.emplace_back(i, j);
            if (search(remaining & ~(1u << i) & ~(1u << j))) return true;
            chosen.pop_back();
        }
        return false;
    };
    return search((1u << l) - 1);
}

namespace {

// Pool item for the canonical enumerators: a serialized subtree plus its
// vertex count.  Pools stay sorted by string, so nondecreasing index picks
// produce each child multiset exactly once, already canonically ordered.
struct Piece {
    std::string str;
    int size;
};

void sort_pool(std::vector<Piece>& pool) {
    std::sort(pool.begin(), pool.end(),
              [](const Piece& a, const Piece& b) { return a.str < b.str; });
}

// Every multiset of pool items with the exact size budget and at least
// min_count members, as nondecreasing index sequences.
void for_each_multiset(const std::vector<Piece>& pool, int budget, int min_count,
                       const std::function<void(const std::vector<int>&)>& cb) {
    std::vector<int> acc;
    std::function<void(int, int)> rec = [&](int left, int floor_idx) {
        if (left == 0) {
            if (static_cast<int>(acc.size()) >= min_count) cb(acc);
            return;
        }
        for (int k = floor_idx; k < static_cast<int>(pool.size()); ++k) {
            if (pool[k].size > left) continue;
            acc.push_back(k);
            rec(left - pool[k].size, k);
            acc.pop_back();
        }
    };
    rec(budget, 0);
}

std::string compose(const char* color, const std::vector<Piece>& pool,
                    const std::vector<int>& picks) {
    std::string s = "(";
    s += color;
    for (int k : picks) {
        s += ' ';
        s += pool[k].str;
    }
    s += ')';
    return s;
}

}  // namespace

std::vector<WhiteGreyTree> enumerate_trees(int max_vertices) {
    if (max_vertices > 10)
        throw TooLargeError("enumerate_trees: limited to 10 vertices");
    std::vector<WhiteGreyTree> out;
    if (max_vertices < 2) return out;

    // deep[k]: subtrees hanging below a child of the root.  A deep leaf is
    // white; a deep internal vertex is white (any children) or uncolored
    // (at least two children, so its degree is at least three).
    std::vector<std::vector<Piece>> deep(max_vertices);
    deep[1].push_back({"(w)", 1});
    std::vector<Piece> flat;   // all deep pieces smaller than the current k
    flat.push_back(deep[1][0]);
    for (int k = 2; k < max_vertices; ++k) {
        sort_pool(flat);
        for_each_multiset(flat, k - 1, 1, [&](const std::vector<int>& picks) {
            deep[k].push_back({compose("w", flat, picks), k});
        });
        for_each_multiset(flat, k - 1, 2, [&](const std::vector<int>& picks) {
            deep[k].push_back({compose("u", flat, picks), k});
        });
        for (const Piece& p : deep[k]) flat.push_back(p);
    }

    // Children of the root: a lone vertex must be a grey leaf; larger
    // subtrees have a grey, white, or uncolored top, uncolored again needing
    // two children.
    sort_pool(flat);
    std::vector<std::vector<Piece>> rootchild(max_vertices);
    rootchild[1].push_back({"(g)", 1});
    for (int k = 2; k < max_vertices; ++k) {
        for (const char* color : {"g", "w"})
            for_each_multiset(flat, k - 1, 1, [&](const std::vector<int>& picks) {
                rootchild[k].push_back({compose(color, flat, picks), k});
            });
        for_each_multiset(flat, k - 1, 2, [&](const std::vector<int>& picks) {
            rootchild[k].push_back({compose("u", flat, picks), k});
        });
    }

    std::vector<Piece> rc_flat;
    for (int k = 1; k < max_vertices; ++k)
        for (const Piece& p : rootchild[k]) rc_flat.push_back(p);
    sort_pool(rc_flat);

    for (int n = 2; n <= max_vertices; ++n) {
        for_each_multiset(rc_flat, n - 1, 1, [&](const std::vector<int>& picks) {
            ParseOutcome parsed = parse_tree(compose("u", rc_flat, picks));
            if (!parsed.tree)
                throw std::logic_error("enumerate_trees: emitted an invalid tree");
            out.push_back(std::move(*parsed.tree));
        });
    }
    return out;
}

std::vector<UnrootedTree> enumerate_unrooted(int max_vertices) {
    if (max_vertices > 10)
        throw TooLargeError("enumerate_unrooted: limited to 10 vertices");
    std::vector<UnrootedTree> out;
    if (max_vertices < 1) return out;

    // All rooted shapes (colors irrelevant), then dedup by the canonical
    // form re-rooted at a centroid.
    std::vector<Piece> flat{{"(u)", 1}};
    std::vector<std::vector<Piece>> shape(max_vertices + 1);
    shape[1] = flat;
    for (int k = 2; k <= max_vertices; ++k) {
        sort_pool(flat);
        for_each_multiset(flat, k - 1, 1, [&](const std::vector<int>& picks) {
            shape[k].push_back({compose("u", flat, picks), k});
        });
        for (const Piece& p : shape[k]) flat.push_back(p);
    }

    std::vector<std::string> seen;
    for (int n = 1; n <= max_vertices; ++n) {
        for (const Piece& p : shape[n]) {
            auto tree = parse_unrooted(p.str);
            if (!tree)
                throw std::logic_error("enumerate_unrooted: emitted a bad shape");
            const UnrootedTree& t = *tree;

            // Centroids: vertices minimizing the largest component left by
            // their removal.
            std::vector<int> sub(n, 1);
            std::vector<VertexId> order, par(n, -1);
            {
                std::vector<VertexId> stack{0};
                std::vector<char> vis(n, 0);
                vis[0] = 1;
                while (!stack.empty()) {
                    VertexId x = stack.back();
                    stack.pop_back();
                    order.push_back(x);
                    for (VertexId nb : t.adj[x])
                        if (!vis[nb]) {
                            vis[nb] = 1;
                            par[nb] = x;
                            stack.push_back(nb);
                        }
                }
            }
            for (auto it = order.rbegin(); it != order.rend(); ++it)
                if (par[*it] >= 0) sub[par[*it]] += sub[*it];
            int best = n + 1;
            std::vector<VertexId> centroids;
            for (VertexId c = 0; c < n; ++c) {
                int heavy = n - sub[c];
                for (VertexId nb : t.adj[c])
                    if (par[nb] == c) heavy = std::max(heavy, sub[nb]);
                if (heavy < best) {
                    best = heavy;
                    centroids = {c};
                } else if (heavy == best) {
                    centroids.push_back(c);
                }
            }

            std::function<std::string(VertexId, VertexId)> canon =
                [&](VertexId x, VertexId from) -> std::string {
                std::vector<std::string> parts;
                for (VertexId nb : t.adj[x])
                    if (nb != from) parts.push_back(canon(nb, x));
                std::sort(parts.begin(), parts.end());
                std::string s = "(";
                for (const auto& part : parts) s += part;
                s += ')';
                return s;
            };
            std::string key = std::to_string(n) + ":";
            std::string best_form;
            for (VertexId c : centroids) {
                std::string form = canon(c, -1);
                if (best_form.empty() || form < best_form) best_form = form;
            }
            key += best_form;
            if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
            seen.push_back(key);
            out.push_back(t);
        }
    }
    return out;
}

namespace {

double unit_real(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

}  // namespace

WhiteGreyTree random_tree(const GenParams& params) {
    if (params.max_vertices < 2)
        throw std::invalid_argument("random_tree: need room for at least 2 vertices");
    std::mt19937_64 rng(params.seed);
    const int n_target =
        2 + static_cast<int>(rng() % static_cast<std::uint64_t>(params.max_vertices - 1));

    std::vector<VertexId> parent{-1};
    std::vector<Color> color{Color::Uncolored};

    struct Todo {
        VertexId parent;
        int budget;
        bool root_child;
    };
    std::vector<Todo> todo;

    // Split the non-root budget among the root's children.
    {
        int remaining = n_target - 1;
        std::vector<int> parts;
        while (remaining > 0) {
            int part = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(remaining));
            parts.push_back(part);
            remaining -= part;
        }
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            todo.push_back({0, *it, true});
    }

    while (!todo.empty()) {
        Todo item = todo.back();
        todo.pop_back();
        VertexId id = static_cast<VertexId>(parent.size());
        parent.push_back(item.parent);

        Color col;
        if (item.budget == 1) {
            col = item.root_child ? Color::Grey : Color::White;
        } else if (item.root_child) {
            double r = unit_real(rng);
            if (r < params.grey_leaf_probability)
                col = Color::Grey;
            else if (item.budget >= 3 && r < params.grey_leaf_probability + 0.3)
                col = Color::Uncolored;
            else
                col = Color::White;
        } else {
            col = item.budget >= 3 && unit_real(rng) < 0.3 ? Color::Uncolored
                                                           : Color::White;
        }
        color.push_back(col);
        if (item.budget == 1) continue;

        int slots = item.budget - 1;
        int k;
        if (col == Color::Uncolored) {
            k = 2 + static_cast<int>(rng() % static_cast<std::uint64_t>(slots - 1));
        } else if (slots == 1 || unit_real(rng) < params.chain_probability) {
            k = 1;
        } else {
            k = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(slots));
        }
        std::vector<int> parts(k, 1);
        for (int extra = slots - k; extra > 0; --extra)
            ++parts[rng() % static_cast<std::uint64_t>(k)];
        for (auto it = parts.rbegin(); it != parts.rend(); ++it)
            todo.push_back({id, *it, false});
    }

    BuildResult built = build_tree(parent, color);
    if (!built.tree)
        throw std::logic_error("random_tree: generated an invalid tree");
    return std::move(*built.tree);
}

UnrootedTree random_unrooted(std::uint64_t seed, int n_leaves) {
    if (n_leaves < 2)
        throw std::invalid_argument("random_unrooted: need at least 2 leaves");
    std::mt19937_64 rng(seed);

    // Random internal skeleton, shrunk until every degree<=1 slot can take a
    // mandatory leaf.
    int t = 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(2 * n_leaves));
    std::vector<VertexId> attach;   // skeleton: vertex i>=1 hangs off attach[i]
    int tries = 0;
    while (true) {
        attach.assign(t, -1);
        for (int i = 1; i < t; ++i)
            attach[i] = static_cast<VertexId>(rng() % static_cast<std::uint64_t>(i));
        std::vector<int> deg(t, 0);
        for (int i = 1; i < t; ++i) {
            ++deg[i];
            ++deg[attach[i]];
        }
        int slots = 0;
        for (int i = 0; i < t; ++i)
            if (deg[i] <= 1) ++slots;
        if (slots <= n_leaves) break;
        t = ++tries > 100 ? 1 : 1 + static_cast<int>(rng() % static_cast<std::uint64_t>(t));
    }

    UnrootedTree out(t + n_leaves);
    for (int i = 1; i < t; ++i) out.add_edge(attach[i], i);
    std::vector<int> deg(t, 0);
    for (int i = 1; i < t; ++i) {
        ++deg[i];
        ++deg[attach[i]];
    }
    int next_leaf = t;
    for (int i = 0; i < t && next_leaf < t + n_leaves; ++i)
        if (deg[i] <= 1) out.add_edge(i, next_leaf++);
    while (next_leaf < t + n_leaves)
        out.add_edge(static_cast<VertexId>(rng() % static_cast<std::uint64_t>(t)),
                     next_leaf++);
    return out;
}

}  // namespace greycover

#include "greycover/balance.hpp"

#include <algorithm>
#include <stdexcept>

namespace greycover {

bool is_tree(const UnrootedTree& t) {
    const int n = t.size();
    if (n == 0) return false;
    long long twice_edges = 0;
    for (VertexId v = 0; v < n; ++v) twice_edges += t.degree(v);
    if (twice_edges != 2LL * (n - 1)) return false;
    std::vector<char> seen(n, 0);
    std::vector<VertexId> stack{0};
    seen[0] = 1;
    int count = 0;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        ++count;
        for (VertexId nb : t.adj[v])
            if (!seen[nb]) {
                seen[nb] = 1;
                stack.push_back(nb);
            }
    }
    return count == n;
}

int leaf_count(const UnrootedTree& t) {
    int c = 0;
    for (VertexId v = 0; v < t.size(); ++v)
        if (t.is_leaf(v)) ++c;
    return c;
}

std::vector<VertexId> leaves_of(const UnrootedTree& t) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < t.size(); ++v)
        if (t.is_leaf(v)) out.push_back(v);
    return out;
}

int delta(const UnrootedTree& t, VertexId v, VertexId nbr) {
    const auto& nbrs = t.adj[v];
    if (std::find(nbrs.begin(), nbrs.end(), nbr) == nbrs.end())
        throw std::invalid_argument("delta: edge not incident to vertex");
    // Count leaves in nbr's component once the edge {v, nbr} is cut.
    std::vector<VertexId> stack{nbr};
    std::vector<char> seen(t.size(), 0);
    seen[v] = 1;
    seen[nbr] = 1;
    int leaves = 0;
    while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        if (t.is_leaf(u)) ++leaves;
        for (VertexId nb : t.adj[u])
            if (!seen[nb]) {
                seen[nb] = 1;
                stack.push_back(nb);
            }
    }
    return leaves;
}

bool is_balanced(const UnrootedTree& t, VertexId v) {
    if (t.size() == 2) return true;   // lone edge: both ends, by convention
    std::vector<int> d;
    d.reserve(t.degree(v));
    int sum = 0;
    for (VertexId nb : t.adj[v]) {
        d.push_back(delta(t, v, nb));
        sum += d.back();
    }
    for (int x : d)
        if (x > sum - x) return false;
    return true;
}

std::vector<VertexId> all_balanced(const UnrootedTree& t) {
    std::vector<VertexId> out;
    for (VertexId v = 0; v < t.size(); ++v)
        if (is_balanced(t, v)) out.push_back(v);
    return out;
}

namespace {

// Rooted-at-0 traversal order plus parent pointers, iteratively.
struct Rooting {
    std::vector<VertexId> order;    // pre-order
    std::vector<VertexId> parent;   // -1 at vertex 0
};

Rooting root_at_zero(const UnrootedTree& t) {
    Rooting r;
    r.parent.assign(t.size(), -1);
    r.order.reserve(t.size());
    std::vector<VertexId> stack{0};
    std::vector<char> seen(t.size(), 0);
    seen[0] = 1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        r.order.push_back(v);
        for (auto it = t.adj[v].rbegin(); it != t.adj[v].rend(); ++it)
            if (!seen[*it]) {
                seen[*it] = 1;
                r.parent[*it] = v;
                stack.push_back(*it);
            }
    }
    return r;
}

}  // namespace

std::vector<VertexId> all_balanced_linear(const UnrootedTree& t) {
    const int n = t.size();
    if (n == 1) return {0};
    if (n == 2) return {0, 1};

    Rooting r = root_at_zero(t);
    const int total = leaf_count(t);
    // Leaves below each vertex in the rooted view; a degree-1 vertex counts
    // itself.
    std::vector<int> down(n, 0);
    for (auto it = r.order.rbegin(); it != r.order.rend(); ++it) {
        VertexId v = *it;
        if (t.is_leaf(v)) down[v] += 1;
        if (r.parent[v] >= 0) down[r.parent[v]] += down[v];
    }

    std::vector<VertexId> out;
    for (VertexId v = 0; v < n; ++v) {
        if (t.is_leaf(v)) continue;   // a leaf hides everything behind one edge
        int max_side = total - down[v];
        for (VertexId nb : t.adj[v])
            if (nb != r.parent[v]) max_side = std::max(max_side, down[nb]);
        if (2 * max_side <= total) out.push_back(v);
    }
    return out;
}

VertexId find_balanced_linear(const UnrootedTree& t) {
    if (leaf_count(t) % 2 != 0)
        throw NoEvenLeavesError("find_balanced_linear: odd number of leaves");
    auto found = all_balanced_linear(t);
    if (found.empty())
        throw std::logic_error("find_balanced_linear: no balanced vertex found");
    return found.front();
}

WalkTrace find_balanced_walk(const UnrootedTree& t, VertexId start) {
    if (leaf_count(t) % 2 != 0)
        throw NoEvenLeavesError("find_balanced_walk: odd number of leaves");
    WalkTrace trace;
    std::vector<char> visited(t.size(), 0);
    VertexId cur = start;
    while (true) {
        if (visited[cur])
            throw std::logic_error("find_balanced_walk: revisited a vertex");
        visited[cur] = 1;
        trace.visited.push_back(cur);
        if (is_balanced(t, cur)) break;
        // Step across the edge hiding too many leaves (largest delta; ties
        // to the smaller neighbor id).
        int sum = 0;
        std::vector<int> d;
        d.reserve(t.degree(cur));
        for (VertexId nb : t.adj[cur]) {
            d.push_back(delta(t, cur, nb));
            sum += d.back();
        }
        VertexId next = -1;
        int best = -1;
        for (size_t k = 0; k < d.size(); ++k) {
            if (d[k] <= sum - d[k]) continue;   // not oversaturated
            VertexId nb = t.adj[cur][k];
            if (d[k] > best || (d[k] == best && nb < next)) {
                best = d[k];
                next = nb;
            }
        }
        if (next < 0)
            throw std::logic_error("find_balanced_walk: stuck without progress");
        cur = next;
    }
    trace.result = cur;
    return trace;
}

std::vector<VertexId> tree_path(const UnrootedTree& t, VertexId a, VertexId b) {
    std::vector<VertexId> parent(t.size(), -2);
    std::vector<VertexId> stack{a};
    parent[a] = -1;
    while (!stack.empty()) {
        VertexId v = stack.back();
        stack.pop_back();
        if (v == b) break;
        for (VertexId nb : t.adj[v])
            if (parent[nb] == -2) {
                parent[nb] = v;
                stack.push_back(nb);
            }
    }
    std::vector<VertexId> path;
    for (VertexId v = b; v != -1; v = parent[v]) path.push_back(v);
    std::reverse(path.begin(), path.end());
    return path;
}

Pairing pair_through(const UnrootedTree& t, VertexId hub) {
    auto leaves = leaves_of(t);
    if (leaves.size() % 2 != 0)
        throw NoEvenLeavesError("pair_through: odd number of leaves");
    Pairing out;
    out.hub = hub;
    if (t.size() == 2) {
        out.pairs.emplace_back(0, 1);
        return out;
    }
    if (!is_balanced(t, hub))
        throw NotBalancedError("pair_through: vertex is not balanced");

    // One bucket of unmatched leaves per branch at the hub, keyed by the
    // branch root (the hub's neighbor), each sorted ascending.
    struct Branch {
        VertexId root;
        std::vector<VertexId> pending;   // ascending; consumed from the front
        size_t next = 0;
        int remaining() const { return static_cast<int>(pending.size() - next); }
    };
    std::vector<Branch> branches;
    {
        std::vector<char> seen(t.size(), 0);
        seen[hub] = 1;
        for (VertexId b : t.adj[hub]) {
            Branch br;
            br.root = b;
            std::vector<VertexId> stack{b};
            seen[b] = 1;
            while (!stack.empty()) {
                VertexId v = stack.back();
                stack.pop_back();
                if (t.is_leaf(v)) br.pending.push_back(v);
                for (VertexId nb : t.adj[v])
                    if (!seen[nb]) {
                        seen[nb] = 1;
                        stack.push_back(nb);
                    }
            }
            std::sort(br.pending.begin(), br.pending.end());
            branches.push_back(std::move(br));
        }
        std::sort(branches.begin(), branches.end(),
                  [](const Branch& x, const Branch& y) { return x.root < y.root; });
    }

    int left = static_cast<int>(leaves.size());
    while (left > 0) {
        // The two branches holding the most unmatched leaves; ties favor the
        // smaller branch root.  The sort above makes a linear max-scan do
        // both tie-breaks at once.
        int i1 = -1, i2 = -1;
        for (int i = 0; i < static_cast<int>(branches.size()); ++i) {
            int rem = branches[i].remaining();
            if (rem == 0) continue;
            if (i1 < 0 || rem > branches[i1].remaining()) {
                i2 = i1;
                i1 = i;
            } else if (i2 < 0 || rem > branches[i2].remaining()) {
                i2 = i;
            }
        }
        if (i2 < 0)
            throw std::logic_error("pair_through: leaves stranded in one branch");
        if (i1 > i2) std::swap(i1, i2);   // emit with the smaller root first
        VertexId x = branches[i1].pending[branches[i1].next++];
        VertexId y = branches[i2].pending[branches[i2].next++];
        out.pairs.emplace_back(std::min(x, y), std::max(x, y));
        left -= 2;
    }

    // The greedy choice is validated, never trusted: every induced path must
    // run through the hub and the union must use each edge.
    std::vector<char> edge_done(t.size(), 0);   // edge keyed by its child end
    Rooting r = root_at_zero(t);
    long long edges_left = t.size() - 1;
    for (auto [x, y] : out.pairs) {
        auto path = tree_path(t, x, y);
        if (std::find(path.begin(), path.end(), hub) == path.end())
            throw std::logic_error("pair_through: a pair path misses the hub");
        for (size_t k = 1; k < path.size(); ++k) {
            VertexId child = r.parent[path[k]] == path[k - 1] ? path[k] : path[k - 1];
            if (!edge_done[child]) {
                edge_done[child] = 1;
                --edges_left;
            }
        }
    }
    if (edges_left != 0)
        throw std::logic_error("pair_through: some edge is left uncovered");
    return out;
}

Pairing antipodal_pairing(const UnrootedTree& t) {
    // First-visit order under a DFS from vertex 0 that honors stored
    // neighbor order: this plays the role of walking around the embedding.
    std::vector<VertexId> leaves;
    {
        struct Frame {
            VertexId v;
            VertexId from;
            size_t next = 0;
        };
        std::vector<Frame> st{{0, -1, 0}};
        if (t.size() > 0 && t.is_leaf(0)) leaves.push_back(0);
        while (!st.empty()) {
            Frame& f = st.back();
            bool descended = false;
            while (f.next < t.adj[f.v].size()) {
                VertexId nb = t.adj[f.v][f.next++];
                if (nb == f.from) continue;
                if (t.is_leaf(nb)) leaves.push_back(nb);
                VertexId v = f.v;
                st.push_back({nb, v, 0});
                descended = true;
                break;
            }
            if (!descended) st.pop_back();
        }
    }
    if (leaves.size() % 2 != 0)
        throw NoEvenLeavesError("antipodal_pairing: odd number of leaves");
    if (leaves.empty()) return Pairing{{}, 0};  // single vertex: nothing to pair

    Pairing out;
    const int n = static_cast<int>(leaves.size()) / 2;
    for (int i = 0; i < n; ++i)
        out.pairs.emplace_back(leaves[i], leaves[i + n]);
    auto hub = common_vertex(t, out.pairs);
    if (!hub)
        throw std::logic_error("antipodal_pairing: pair paths share no vertex");
    out.hub = *hub;
    return out;
}

std::optional<VertexId> common_vertex(
    const UnrootedTree& t,
    const std::vector<std::pair<VertexId, VertexId>>& endpoint_pairs) {
    if (endpoint_pairs.empty()) return std::nullopt;
    std::vector<char> common(t.size(), 1);
    for (auto [a, b] : endpoint_pairs) {
        std::vector<char> on_path(t.size(), 0);
        for (VertexId v : tree_path(t, a, b)) on_path[v] = 1;
        for (VertexId v = 0; v < t.size(); ++v) common[v] &= on_path[v];
    }
    for (VertexId v = 0; v < t.size(); ++v)
        if (common[v]) return v;
    return std::nullopt;
}

}  // namespace greycover

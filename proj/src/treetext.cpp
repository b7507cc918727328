#include "greycover/treetext.hpp"

#include <cctype>

namespace greycover {

namespace {

bool is_ws(char c) { return c == ' ' || c == '\t' || c == '\n' || c == '\r'; }

struct RawParse {
    std::vector<VertexId> parent;
    std::vector<Color> color;
    std::vector<std::string> errors;
};

// node := '(' color { ws node } ')';  color in {u, w, g}.  Whitespace is
// free between tokens.  Vertex ids follow opening order (pre-order).
RawParse parse_raw(const std::string& s) {
    RawParse r;
    auto fail = [&](size_t pos, const std::string& what) {
        // Point end-of-input errors at the last meaningful character, not
        // past any trailing newline.
        size_t end = s.size();
        while (end > 0 && is_ws(s[end - 1])) --end;
        pos = std::min(pos, end);
        size_t line = 1, col = 1;
        for (size_t k = 0; k < pos && k < s.size(); ++k) {
            if (s[k] == '\n') {
                ++line;
                col = 1;
            } else {
                ++col;
            }
        }
        r.errors.push_back("syntax error at line " + std::to_string(line) +
                           ", column " + std::to_string(col) + ": " + what);
    };

    size_t i = 0;
    std::vector<VertexId> stack;
    bool closed_root = false;
    while (true) {
        while (i < s.size() && is_ws(s[i])) ++i;
        if (i >= s.size()) break;
        if (closed_root) {
            fail(i, "trailing input after the tree");
            return r;
        }
        char c = s[i];
        if (c == '(') {
            ++i;
            while (i < s.size() && is_ws(s[i])) ++i;
            if (i >= s.size() || (s[i] != 'u' && s[i] != 'w' && s[i] != 'g')) {
                fail(i, "expected a color ('u', 'w' or 'g')");
                return r;
            }
            VertexId id = static_cast<VertexId>(r.parent.size());
            r.parent.push_back(stack.empty() ? -1 : stack.back());
            r.color.push_back(s[i] == 'u'   ? Color::Uncolored
                              : s[i] == 'w' ? Color::White
                                            : Color::Grey);
            stack.push_back(id);
            ++i;
        } else if (c == ')') {
            if (stack.empty()) {
                fail(i, "unbalanced ')'");
                return r;
            }
            stack.pop_back();
            if (stack.empty()) closed_root = true;
            ++i;
        } else {
            fail(i, std::string("unexpected character '") + c + "'");
            return r;
        }
    }
    if (r.parent.empty()) {
        fail(s.size(), "expected '('");
    } else if (!stack.empty()) {
        fail(s.size(), "unexpected end of input (unclosed '(')");
    }
    return r;
}

char color_char(Color c) {
    switch (c) {
        case Color::Uncolored: return 'u';
        case Color::White: return 'w';
        case Color::Grey: return 'g';
    }
    return '?';
}

}  // namespace

ParseOutcome parse_tree(const std::string& text) {
    ParseOutcome out;
    RawParse raw = parse_raw(text);
    if (!raw.errors.empty()) {
        out.parse_errors = std::move(raw.errors);
        return out;
    }
    BuildResult built = build_tree(raw.parent, raw.color);
    out.violations = std::move(built.violations);
    out.tree = std::move(built.tree);
    return out;
}

std::string serialize_tree(const WhiteGreyTree& t) {
    std::string out;
    if (t.size() == 0) return out;
    // Explicit stack: non-negative entry = open vertex, negative = close.
    std::vector<long> work{t.root};
    while (!work.empty()) {
        long x = work.back();
        work.pop_back();
        if (x < 0) {
            out += ')';
            continue;
        }
        VertexId v = static_cast<VertexId>(x);
        if (v != t.root) out += ' ';
        out += '(';
        out += color_char(t.color[v]);
        work.push_back(-1);
        const auto& ch = t.children[v];
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) work.push_back(*it);
    }
    return out;
}

std::optional<UnrootedTree> parse_unrooted(const std::string& text,
                                           std::string* error) {
    RawParse raw = parse_raw(text);
    if (!raw.errors.empty()) {
        if (error) *error = raw.errors.front();
        return std::nullopt;
    }
    const int n = static_cast<int>(raw.parent.size());
    UnrootedTree t(n);
    // Parent first, then children in written order: ids are pre-order, so a
    // single ascending sweep appending both directions achieves exactly that.
    for (VertexId v = 0; v < n; ++v)
        if (raw.parent[v] >= 0) t.add_edge(raw.parent[v], v);
    return t;
}

std::string serialize_unrooted(const UnrootedTree& t) {
    std::string out;
    if (t.size() == 0) return out;
    // DFS from vertex 0 honoring neighbor order; every vertex prints as 'u'.
    struct Frame {
        VertexId v;
        VertexId from;
        size_t next = 0;
    };
    std::vector<Frame> st{{0, -1, 0}};
    out += "(u";
    while (!st.empty()) {
        Frame& f = st.back();
        bool descended = false;
        while (f.next < t.adj[f.v].size()) {
            VertexId nb = t.adj[f.v][f.next++];
            if (nb == f.from) continue;
            out += " (u";
            st.push_back({nb, f.v, 0});
            descended = true;
            break;
        }
        if (!descended) {
            out += ')';
            st.pop_back();
        }
    }
    return out;
}

}  // namespace greycover

#include "greycover/model.hpp"
#include "greycover/treetext.hpp"

#include <doctest.h>

#include <algorithm>

using namespace greycover;

namespace {

WhiteGreyTree parse_ok(const std::string& text) {
    auto out = parse_tree(text);
    REQUIRE(out.tree.has_value());
    return *out.tree;
}

bool has_violation(const std::vector<Violation>& vs, TreeErrorKind kind, VertexId vertex) {
    return std::find(vs.begin(), vs.end(), Violation{kind, vertex}) != vs.end();
}

// A running example: root - grey leaf + a dangerous white child whose
// subtree branches into three white chains.
const char* kExample = "(u (g) (w (u (w (w)) (w (w)) (w (w)))))";

}  // namespace

TEST_CASE("ceil_div2") {
    CHECK(ceil_div2(0) == 0);
    CHECK(ceil_div2(1) == 1);
    CHECK(ceil_div2(2) == 1);
    CHECK(ceil_div2(5) == 3);
    CHECK(ceil_div2(-1) == 0);
    CHECK(ceil_div2(-2) == -1);
}

TEST_CASE("build accepts valid trees") {
    auto t = parse_ok(kExample);
    CHECK(t.size() == 10);
    CHECK(t.root == 0);
    CHECK(t.color[0] == Color::Uncolored);
    CHECK(t.color[1] == Color::Grey);
    CHECK(t.color[2] == Color::White);
    CHECK(t.parent[0] == -1);
    CHECK(t.parent[3] == 2);
    CHECK(t.children[3] == std::vector<VertexId>({4, 6, 8}));
    CHECK(t.degree(0) == 2);
    CHECK(t.degree(3) == 4);
    CHECK(t.is_leaf(1));
    CHECK(!t.is_leaf(0));
    CHECK(t.is_colored(1));
    CHECK(!t.is_colored(3));

    CHECK(parse_ok("(u (g))").size() == 2);
    CHECK(parse_ok("(u (u (w) (w)))").size() == 4);
    CHECK(parse_ok("(u)").size() == 1);
}

TEST_CASE("rule violations, possibly several per vertex") {
    auto bad = [](const std::string& text) {
        auto out = parse_tree(text);
        REQUIRE(!out.tree.has_value());
        REQUIRE(out.parse_errors.empty());
        return out.violations;
    };

    auto vs = bad("(w (w))");
    CHECK(has_violation(vs, TreeErrorKind::RootColored, 0));
    CHECK(has_violation(vs, TreeErrorKind::WhiteLeafAtRoot, 1));

    vs = bad("(u (w))");
    CHECK(vs.size() == 1);
    CHECK(has_violation(vs, TreeErrorKind::WhiteLeafAtRoot, 1));

    vs = bad("(u (u (w)))");
    CHECK(vs.size() == 1);
    CHECK(has_violation(vs, TreeErrorKind::UncoloredNonBranching, 1));

    // An inner grey leaf breaks two rules at once.
    vs = bad("(u (g (g)))");
    CHECK(has_violation(vs, TreeErrorKind::GreyNotRootChild, 2));
    CHECK(has_violation(vs, TreeErrorKind::NonRootLeafNotWhite, 2));

    vs = bad("(u (w) (g))");
    CHECK(has_violation(vs, TreeErrorKind::WhiteLeafAtRoot, 1));
}

TEST_CASE("build_tree structural errors") {
    CHECK_THROWS_AS(build_tree({-1}, {Color::Uncolored, Color::Grey}), std::invalid_argument);

    auto two_roots = build_tree({-1, -1}, {Color::Uncolored, Color::Grey});
    REQUIRE(!two_roots.tree.has_value());
    CHECK(has_violation(two_roots.violations, TreeErrorKind::NotATree, -1));

    auto cycle = build_tree({-1, 2, 1}, {Color::Uncolored, Color::Grey, Color::Grey});
    REQUIRE(!cycle.tree.has_value());
    CHECK(has_violation(cycle.violations, TreeErrorKind::NotATree, -1));

    auto out_of_range = build_tree({-1, 7}, {Color::Uncolored, Color::Grey});
    REQUIRE(!out_of_range.tree.has_value());
    CHECK(has_violation(out_of_range.violations, TreeErrorKind::NotATree, -1));
}

TEST_CASE("describe mentions the offending vertex") {
    CHECK(describe({TreeErrorKind::GreyNotRootChild, 5}) ==
          "grey vertex must be a child of the root at vertex 5");
    CHECK(describe({TreeErrorKind::NotATree, -1}) == "input is not a single connected tree");
}

TEST_CASE("stats counts leaves by color") {
    auto s = stats(parse_ok(kExample));
    CHECK(s.white_leaves == 3);
    CHECK(s.grey_leaves == 1);
    CHECK(s.colored == 8);

    s = stats(parse_ok("(u (g))"));
    CHECK(s.white_leaves == 0);
    CHECK(s.grey_leaves == 1);
    CHECK(s.colored == 1);
}

TEST_CASE("white subtree removes grey leaves and a degenerate root") {
    auto dw = derive_white_subtree(parse_ok(kExample));
    CHECK(dw.removed_root);
    CHECK(dw.tree.size() == 8);
    CHECK(dw.tree.root == 0);
    CHECK(dw.to_original[0] == 2);  // the dangerous child becomes the top
    CHECK(dw.from_original(2) == 0);
    CHECK(!dw.from_original(0).has_value());
    CHECK(!dw.from_original(1).has_value());
    CHECK(shape_leaves(dw.tree).size() == 4);

    // Only grey leaves disappear; a grey top survives.
    auto grey_top = derive_white_subtree(parse_ok("(u (g) (g (u (w) (w) (w))))"));
    CHECK(grey_top.removed_root);
    CHECK(grey_top.tree.size() == 5);
    CHECK(grey_top.tree.color[0] == Color::Grey);
    CHECK(shape_leaves(grey_top.tree).size() == 4);

    // Nothing left at all.
    auto empty = derive_white_subtree(parse_ok("(u (g))"));
    CHECK(empty.removed_root);
    CHECK(empty.tree.size() == 0);

    // Root kept when two children survive.
    auto kept = derive_white_subtree(parse_ok("(u (w (w)) (u (w (w)) (w (w))))"));
    CHECK(!kept.removed_root);
    CHECK(kept.tree.size() == 8);
    CHECK(kept.to_original[0] == 0);
}

TEST_CASE("dangerous vertices trace the chain below a lone child") {
    CHECK(dangerous_vertices(parse_ok(kExample)) == std::vector<VertexId>({2}));
    CHECK(dangerous_vertices(parse_ok("(u (g) (g) (u (w) (w) (w)))")).empty());
    CHECK(dangerous_vertices(parse_ok("(u (w (w (u (w (w)) (w (w))))))")) ==
          std::vector<VertexId>({1, 2}));
    CHECK(dangerous_vertices(parse_ok("(u (g (u (w) (w))))")) == std::vector<VertexId>({1}));
    CHECK(dangerous_vertices(parse_ok("(u (g))")).empty());
}

TEST_CASE("case analysis assigns tags and free paths") {
    auto tag_of = [](const std::string& text) {
        return classify(parse_ok(text));
    };

    auto a = tag_of(kExample);
    CHECK(a.case_tag == CaseTag::Danger_Otherwise);
    CHECK(a.free_paths == 1);
    CHECK(a.tw_leaves == 4);
    CHECK(a.dangerous == std::vector<VertexId>({2}));

    a = tag_of("(u (g) (g) (u (w) (w) (w)))");
    CHECK(a.case_tag == CaseTag::NoDanger_Otherwise);
    CHECK(a.free_paths == 0);
    CHECK(a.tw_leaves == 3);

    a = tag_of("(u (g) (g) (w (w (u (w (w)) (w (w))))))");
    CHECK(a.case_tag == CaseTag::Danger_OddNoShort);
    CHECK(a.free_paths == 2);
    CHECK(a.stats.white_leaves == 2);
    CHECK(a.stats.grey_leaves == 2);

    a = tag_of("(u (g) (w (u (w (w)) (w (w)))))");
    CHECK(a.case_tag == CaseTag::Danger_OddOneWhiteDangerousShort);
    CHECK(a.free_paths == 0);
    CHECK(a.short_leaves_tw == std::vector<VertexId>({0}));

    a = tag_of("(u (w (w)) (u (w (w)) (w (w))))");
    CHECK(a.case_tag == CaseTag::NoDanger_OddNoShort);
    CHECK(a.free_paths == 1);
    CHECK(a.short_leaves_tw.empty());

    // A short leaf may sit behind an uncolored degree-2 stretch of the
    // shape; only colored vertices on the way block shortness.
    a = tag_of("(u (u (w) (u (w (w)) (w (w)))))");
    CHECK(a.case_tag == CaseTag::NoDanger_Otherwise);
    CHECK(a.free_paths == 0);
    CHECK(a.short_leaves_tw.size() == 1);

    // Grey top adjacent to the branching vertex is itself short.
    a = tag_of("(u (g (u (w) (w))))");
    CHECK(a.case_tag == CaseTag::Danger_Otherwise);
    CHECK(a.free_paths == 1);

    CHECK(to_string(CaseTag::Danger_OddNoShort) == "Danger_OddNoShort");
}

TEST_CASE("cost bounds") {
    auto b = bounds(parse_ok(kExample));
    CHECK(b == std::make_pair(4, 5));
    CHECK(bounds(parse_ok("(u (g))")) == std::make_pair(1, 2));
    CHECK(bounds(parse_ok("(u (g) (g))")) == std::make_pair(1, 2));
    CHECK(bounds(parse_ok("(u (g) (g) (w (w (u (w (w)) (w (w))))))")) == std::make_pair(3, 4));
}

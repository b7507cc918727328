#include "greycover/cover.hpp"
#include "greycover/treetext.hpp"

#include <doctest.h>

using namespace greycover;

namespace {

WhiteGreyTree parse_ok(const std::string& text) {
    auto out = parse_tree(text);
    REQUIRE(out.tree.has_value());
    return *out.tree;
}

int total_of(const Cover& c) {
    int sum = 0;
    for (auto& p : c.paths) sum += p.cost;
    return sum;
}

const char* kExample = "(u (g) (w (u (w (w)) (w (w)) (w (w)))))";

}  // namespace

TEST_CASE("path classification") {
    auto t = parse_ok("(u (g) (g))");
    CHECK(classify_path(t, {1}) == PathKind::Short);
    CHECK(classify_path(t, {1, 0, 2}) == PathKind::GreyPath);

    auto e = parse_ok(kExample);
    CHECK(classify_path(e, {4}) == PathKind::Short);
    CHECK(classify_path(e, {1, 0, 2}) == PathKind::Long);   // grey-white mix
    CHECK(classify_path(e, {5, 4, 3, 6, 7}) == PathKind::Long);
    CHECK_THROWS_AS(classify_path(e, {}), std::invalid_argument);

    CHECK(to_string(PathKind::Short) == "Short");
    CHECK(to_string(PathKind::GreyPath) == "GreyPath");
    CHECK(to_string(PathKind::Long) == "Long");
}

TEST_CASE("path_cost builds the unique tree path") {
    auto t = parse_ok("(u (g) (g))");
    auto p = path_cost(t, 1, 2);
    CHECK(p.vertices == std::vector<VertexId>({1, 0, 2}));
    CHECK(p.kind == PathKind::GreyPath);
    CHECK(p.cost == 1);

    auto e = parse_ok(kExample);
    p = path_cost(e, 5, 7);
    CHECK(p.vertices == std::vector<VertexId>({5, 4, 3, 6, 7}));
    CHECK(p.kind == PathKind::Long);
    CHECK(p.cost == 2);

    p = path_cost(e, 4, 4);
    CHECK(p.vertices == std::vector<VertexId>({4}));
    CHECK(p.kind == PathKind::Short);
    CHECK(p.cost == 1);

    // Endpoints must be colored.
    CHECK_THROWS_AS(path_cost(e, 0, 4), std::invalid_argument);
    CHECK_THROWS_AS(path_cost(e, 4, 3), std::invalid_argument);
}

TEST_CASE("validate_cover spots malformed and incomplete covers") {
    auto t = parse_ok("(u (g) (g))");

    Cover good{{path_cost(t, 1, 2)}};
    auto cc = validate_cover(t, good);
    CHECK(cc.valid);
    CHECK(cc.total == 1);
    CHECK(cc.problems.empty());

    Cover partial{{path_cost(t, 1, 1)}};
    cc = validate_cover(t, partial);
    CHECK(!cc.valid);
    REQUIRE(cc.problems.size() == 1);
    CHECK(cc.problems[0].find("vertex 2") != std::string::npos);

    Cover broken{{Path{{1, 2}, PathKind::GreyPath, 1}}};  // 1-2 is not an edge
    cc = validate_cover(t, broken);
    CHECK(!cc.valid);

    Cover mislabeled{{Path{{1, 0, 2}, PathKind::Long, 2}}};
    cc = validate_cover(t, mislabeled);
    CHECK(!cc.valid);

    auto e = parse_ok(kExample);
    Cover uncolored_end{{Path{{0, 2}, PathKind::Long, 2}}};
    cc = validate_cover(e, uncolored_end);
    CHECK(!cc.valid);
}

TEST_CASE("white_cover frozen examples") {
    // Even leaf count: pure leaf pairing, all long paths.
    auto wc = white_cover(derive_white_subtree(parse_ok(kExample)));
    CHECK(wc.cost == 4);
    REQUIRE(wc.cover.paths.size() == 2);
    CHECK(wc.cover.paths[0].kind == PathKind::Long);
    CHECK(wc.cover.paths[1].kind == PathKind::Long);
    CHECK(total_of(wc.cover) == 4);

    // A bare white path: one long path, no halving.
    wc = white_cover(derive_white_subtree(parse_ok("(u (w (w (w))))")));
    CHECK(wc.cost == 2);
    REQUIRE(wc.cover.paths.size() == 1);
    CHECK(wc.cover.paths[0].kind == PathKind::Long);

    // Odd leaves, no short leaf: a half-path appears.
    wc = white_cover(derive_white_subtree(parse_ok("(u (g) (u (w (w)) (w (w)) (w (w))))")));
    CHECK(wc.cost == 4);
    bool has_half = false;
    for (auto& p : wc.cover.paths) has_half |= (p.vertices.size() == 2);
    CHECK(has_half);

    // Odd leaves with a short leaf: the short leaf costs one on its own.
    wc = white_cover(derive_white_subtree(parse_ok("(u (g (u (w) (w))))")));
    CHECK(wc.cost == 3);

    // Empty white subtree.
    wc = white_cover(derive_white_subtree(parse_ok("(u (g))")));
    CHECK(wc.cost == 0);
    CHECK(wc.cover.paths.empty());
}

TEST_CASE("cost closed form, frozen against the exact oracle") {
    auto total = [](const std::string& text) { return cost(parse_ok(text)).total; };

    CHECK(total(kExample) == 4);
    CHECK(total("(u (g))") == 1);
    CHECK(total("(u (g) (g))") == 1);
    CHECK(total("(u (g) (g (u (w) (w) (w))))") == 4);
    CHECK(total("(u (g) (g) (u (w) (w) (w)))") == 4);
    CHECK(total("(u (g) (g) (w (w (u (w (w)) (w (w))))))") == 4);
    CHECK(total("(u (g) (w (u (w (w)) (w (w)))))") == 4);
    CHECK(total("(u (u (w) (u (w (w)) (w (w)))))") == 3);
    CHECK(total("(u (w (w (u (w (w)) (w (w))))))") == 4);
    CHECK(total("(u (w (w)) (u (w (w)) (w (w))))") == 4);
    CHECK(total("(u (g (u (w) (w))))") == 3);
    CHECK(total("(u (g) (g (u (w) (w))))") == 3);

    auto r = cost(parse_ok(kExample));
    CHECK(r.cost_tw == 4);
    CHECK(r.grey_term == 0);
    CHECK(r.analysis.case_tag == CaseTag::Danger_Otherwise);

    // Two grey leaves, no free path: one extra grey-grey path.
    r = cost(parse_ok("(u (g) (g) (u (w) (w) (w)))"));
    CHECK(r.cost_tw == 3);
    CHECK(r.grey_term == 1);

    // Two free paths absorb both grey leaves.
    r = cost(parse_ok("(u (g) (g) (w (w (u (w (w)) (w (w))))))"));
    CHECK(r.cost_tw == 4);
    CHECK(r.grey_term == 0);
}

TEST_CASE("cost exceeds the coarse upper bound only in one corner") {
    auto t = parse_ok("(u (w (w (u (w (w)) (w (w))))))");
    auto r = cost(t);
    auto b = bounds(t);
    CHECK(r.total == b.second + 1);
    CHECK(r.analysis.case_tag == CaseTag::Danger_OddNoShort);
    CHECK(r.analysis.stats.grey_leaves == 0);
    CHECK(r.total >= b.first);
}

TEST_CASE("build_cover produces a validating optimal cover") {
    auto t = parse_ok(kExample);
    auto built = build_cover(t);
    CHECK(built.report.total == 4);
    auto cc = validate_cover(t, built.cover);
    CHECK(cc.valid);
    CHECK(cc.total == 4);
    REQUIRE(built.cover.paths.size() == 2);
    // Deterministic construction: the grey leaf is absorbed into the
    // top-to-leaf pair path through the root.
    CHECK(built.cover.paths[0].vertices == std::vector<VertexId>({1, 0, 2, 3, 4, 5}));
    CHECK(built.cover.paths[1].vertices == std::vector<VertexId>({7, 6, 3, 8, 9}));
    CHECK(mixed_paths(t, built.cover).size() == 1);

    auto gg = parse_ok("(u (g) (g))");
    built = build_cover(gg);
    REQUIRE(built.cover.paths.size() == 1);
    CHECK(built.cover.paths[0].vertices == std::vector<VertexId>({1, 0, 2}));
    CHECK(built.cover.paths[0].kind == PathKind::GreyPath);
    CHECK(mixed_paths(gg, built.cover).empty());

    auto case1 = parse_ok("(u (g) (g) (w (w (u (w (w)) (w (w))))))");
    built = build_cover(case1);
    CHECK(validate_cover(case1, built.cover).valid);
    CHECK(built.report.total == 4);
    CHECK(mixed_paths(case1, built.cover).size() == 2);

    auto grey_short = parse_ok("(u (g) (g (u (w) (w))))");
    built = build_cover(grey_short);
    CHECK(validate_cover(grey_short, built.cover).valid);
    CHECK(built.report.total == 3);
    CHECK(mixed_paths(grey_short, built.cover).size() == 1);

    // Leftover grey leaves pair up through the root; an odd one stands alone.
    auto greys = parse_ok("(u (g) (g) (g))");
    built = build_cover(greys);
    CHECK(built.report.total == 2);
    CHECK(validate_cover(greys, built.cover).valid);
    CHECK(mixed_paths(greys, built.cover).empty());
}

TEST_CASE("trace restricts a path to the white subtree") {
    auto t = parse_ok(kExample);
    auto tw = derive_white_subtree(t);

    // Mixed path: the grey leaf and root fall away.
    auto tr = trace(t, tw, Path{{1, 0, 2, 3, 4, 5}, PathKind::Long, 2});
    REQUIRE(tr.has_value());
    CHECK(tr->vertices == std::vector<VertexId>({0, 1, 2, 3}));
    CHECK(tr->kind == PathKind::Long);
    CHECK(tr->cost == 2);

    // A path living entirely inside the white subtree keeps its shape.
    tr = trace(t, tw, path_cost(t, 5, 7));
    REQUIRE(tr.has_value());
    CHECK(tr->vertices == std::vector<VertexId>({3, 2, 1, 4, 5}));

    // A pure grey path vanishes.
    auto gg = parse_ok("(u (g) (g))");
    auto gg_tw = derive_white_subtree(gg);
    CHECK(!trace(gg, gg_tw, path_cost(gg, 1, 2)).has_value());

    // Tracing a whole cover preserves the white cost.
    auto built = build_cover(t);
    auto traced = trace_cover(t, tw, built.cover);
    CHECK(total_of(traced) == cost(t).cost_tw);
}

TEST_CASE("mixed_paths picks covers with exactly one grey-leaf endpoint") {
    auto t = parse_ok(kExample);
    auto built = build_cover(t);
    auto mixed = mixed_paths(t, built.cover);
    REQUIRE(mixed.size() == 1);
    CHECK(mixed[0].vertices.front() == 1);

    // A grey-grey path has two grey leaves: not mixed.  A short grey path
    // has only one colored vertex: not mixed either.
    auto gg = parse_ok("(u (g) (g))");
    CHECK(mixed_paths(gg, Cover{{path_cost(gg, 1, 2)}}).empty());
    CHECK(mixed_paths(gg, Cover{{path_cost(gg, 1, 1)}}).empty());
}

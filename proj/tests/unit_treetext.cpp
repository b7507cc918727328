#include "greycover/treetext.hpp"

#include <doctest.h>

using namespace greycover;

TEST_CASE("parse assigns pre-order ids") {
    auto out = parse_tree("(u (g))");
    REQUIRE(out.tree.has_value());
    CHECK(out.tree->size() == 2);
    CHECK(out.tree->root == 0);
    CHECK(out.tree->color[1] == Color::Grey);

    out = parse_tree("(u (g) (w (u (w (w)) (w (w)) (w (w)))))");
    REQUIRE(out.tree.has_value());
    CHECK(out.tree->size() == 10);
    CHECK(out.tree->parent == std::vector<VertexId>({-1, 0, 0, 2, 3, 4, 3, 6, 3, 8}));
}

TEST_CASE("serialize is canonical and round-trip stable") {
    const std::string example = "(u (g) (w (u (w (w)) (w (w)) (w (w)))))";
    auto out = parse_tree(example);
    REQUIRE(out.tree.has_value());
    CHECK(serialize_tree(*out.tree) == example);

    out = parse_tree("(u   (g) )");
    REQUIRE(out.tree.has_value());
    CHECK(serialize_tree(*out.tree) == "(u (g))");

    out = parse_tree("(u\n  (g)\n  (g))");
    REQUIRE(out.tree.has_value());
    CHECK(serialize_tree(*out.tree) == "(u (g) (g))");

    out = parse_tree("(u)");
    REQUIRE(out.tree.has_value());
    CHECK(serialize_tree(*out.tree) == "(u)");
}

TEST_CASE("syntax errors report line and column") {
    auto out = parse_tree("(u (g)");
    REQUIRE(!out.tree.has_value());
    REQUIRE(out.parse_errors.size() == 1);
    CHECK(out.parse_errors[0] ==
          "syntax error at line 1, column 7: unexpected end of input (unclosed '(')");

    out = parse_tree("(x)");
    REQUIRE(out.parse_errors.size() == 1);
    CHECK(out.parse_errors[0].find("line 1, column 2") != std::string::npos);
    CHECK(out.parse_errors[0].find("expected a color") != std::string::npos);

    out = parse_tree("(u (g)) (u)");
    REQUIRE(out.parse_errors.size() == 1);
    CHECK(out.parse_errors[0].find("trailing input") != std::string::npos);

    out = parse_tree("(u\n (q))");
    REQUIRE(out.parse_errors.size() == 1);
    CHECK(out.parse_errors[0].find("line 2, column 3") != std::string::npos);

    out = parse_tree("");
    REQUIRE(out.parse_errors.size() == 1);
    CHECK(out.parse_errors[0].find("expected '('") != std::string::npos);

    out = parse_tree("(u))");
    REQUIRE(out.parse_errors.size() == 1);
}

TEST_CASE("rule violations surface through parse_tree") {
    auto out = parse_tree("(w (w))");
    REQUIRE(!out.tree.has_value());
    CHECK(out.parse_errors.empty());
    CHECK(out.violations.size() == 2);
}

TEST_CASE("unrooted parsing ignores colors and keeps neighbor order") {
    std::string err;
    auto u = parse_unrooted("(u (u) (u) (u) (u (u)))", &err);
    REQUIRE(u.has_value());
    CHECK(u->size() == 6);
    CHECK(u->adj[0] == std::vector<VertexId>({1, 2, 3, 4}));
    CHECK(u->adj[4] == std::vector<VertexId>({0, 5}));  // parent first
    CHECK(u->degree(0) == 4);
    CHECK(u->is_leaf(5));

    // Colors are accepted but irrelevant.
    auto v = parse_unrooted("(w (g) (g) (g) (g (w)))", &err);
    REQUIRE(v.has_value());
    CHECK(v->adj == u->adj);

    auto bad = parse_unrooted("(u (u)", &err);
    CHECK(!bad.has_value());
    CHECK(err.find("unexpected end of input") != std::string::npos);
}

TEST_CASE("unrooted serialization round trips") {
    std::string err;
    auto u = parse_unrooted("(u (u (u)) (u) (u (u (u))))", &err);
    REQUIRE(u.has_value());
    auto text = serialize_unrooted(*u);
    CHECK(text == "(u (u (u)) (u) (u (u (u))))");
    auto again = parse_unrooted(text, &err);
    REQUIRE(again.has_value());
    CHECK(again->adj == u->adj);
}

#include <doctest.h>

#include "foresthopf/enumerator.hpp"
#include "foresthopf/textio.hpp"
#include "oracles.hpp"

using namespace foresthopf;

TEST_CASE("decorations and leaves") {
    CHECK(leaf(Decoration::sigma()).text() == "@");
    CHECK(leaf(Decoration::generator("x")).text() == "x");
    CHECK_THROWS_AS(Decoration::generator("1"), FormatError);
    CHECK_THROWS_AS(Decoration::generator("@"), FormatError);
    CHECK_THROWS_AS(Decoration::generator(""), FormatError);
    CHECK_THROWS_AS(Decoration::generator("2x"), FormatError);
    CHECK(valid_generator_name("x_1"));
    CHECK(valid_generator_name("_tmp"));
}

TEST_CASE("grafting") {
    CHECK(bplus(Forest()).text() == "@");
    CHECK(bplus(parse_forest("x")).text() == "@[x]");
    CHECK(bplus(parse_forest("@[x] x")).text() == "@[@[x] x]");
}

TEST_CASE("concatenation is monoidal") {
    const Forest f = parse_forest("x @");
    CHECK(concat(Forest(), f) == f);
    CHECK(concat(f, Forest()) == f);
    CHECK(concat(parse_forest("x"), parse_forest("@")).text() == "x @");
    CHECK(concat(parse_forest("x @"), parse_forest("y")).text() == "x @ y");
    CHECK(concat(concat(parse_forest("x"), parse_forest("@")), parse_forest("y")) ==
          concat(parse_forest("x"), concat(parse_forest("@"), parse_forest("y"))));
}

TEST_CASE("depth") {
    CHECK(Forest().depth() == 0);
    CHECK(parse_forest("x").depth() == 0);
    CHECK(parse_forest("@").depth() == 1);
    CHECK(parse_forest("@[x]").depth() == 1);
    CHECK(parse_forest("@[@ x]").depth() == 2);
    CHECK(parse_forest("@[@]").depth() == 2);
    CHECK(parse_forest("x @[@] y").depth() == 2);
}

TEST_CASE("breadth and vertex count") {
    CHECK(Forest().breadth() == 0);
    CHECK(parse_forest("@[x]").breadth() == 1);
    CHECK(parse_forest("x @ y").breadth() == 3);
    CHECK(Forest().vertex_count() == 0);
    CHECK(parse_forest("@[y @[x]]").vertex_count() == 4);
    CHECK(parse_forest("@[@ x] @[y @[z]] @[w]").vertex_count() == 9);
}

TEST_CASE("hl order on the worked examples") {
    SUBCASE("single tree") {
        const Forest f = parse_forest("@[y @[x]]");
        const auto order = hl_order(f);
        REQUIRE(order.size() == 4);
        // root, inner sigma, x, y
        CHECK(order[0].path.empty());
        CHECK(label_at(f, order[0]).is_sigma());
        CHECK(order[1].path == std::vector<std::size_t>{1});
        CHECK(label_at(f, order[1]).is_sigma());
        CHECK(label_at(f, order[2]).name() == "x");
        CHECK(label_at(f, order[3]).name() == "y");
    }
    SUBCASE("three trees") {
        const Forest f = parse_forest("@[@ x] @[y @[z]] @[w]");
        const auto order = hl_order(f);
        REQUIRE(order.size() == 9);
        // root of T3, w, root of T2, inner sigma of T2, z, y, root of T1, x, sigma leaf of T1
        const std::vector<std::size_t> trees = {2, 2, 1, 1, 1, 1, 0, 0, 0};
        for (std::size_t i = 0; i < 9; ++i) CHECK(order[i].tree == trees[i]);
        CHECK(label_at(f, order[1]).name() == "w");
        CHECK(label_at(f, order[4]).name() == "z");
        CHECK(label_at(f, order[5]).name() == "y");
        CHECK(label_at(f, order[7]).name() == "x");
        CHECK(label_at(f, order[8]).is_sigma());
        CHECK(order[8].path == std::vector<std::size_t>{0});
    }
    SUBCASE("singleton and empty") {
        CHECK(hl_order(parse_forest("x")).size() == 1);
        CHECK(hl_order(Forest()).empty());
    }
}

TEST_CASE("split_at matches the worked examples") {
    const Forest f = parse_forest("@[y @[x]]");
    auto [b0, r0] = split_at(f, 0);  // the root
    CHECK(b0.text() == "y @[x]");
    CHECK(r0.text() == "1");
    auto [b1, r1] = split_at(f, 1);  // inner sigma
    CHECK(b1.text() == "y x");
    CHECK(r1.text() == "@");
    auto [b3, r3] = split_at(f, 3);  // y
    CHECK(b3.text() == "1");
    CHECK(r3.text() == "@[@[x]]");

    auto [bs, rs] = split_at(parse_forest("x"), 0);
    CHECK(bs.empty());
    CHECK(rs.empty());

    CHECK_THROWS_AS(split_at(f, 4), std::out_of_range);
    CHECK_THROWS_AS(split_at(Forest(), 0), std::out_of_range);
}

TEST_CASE("tree invariant rejects decorated internal vertices") {
    CHECK_THROWS_AS(Tree(Decoration::generator("x"), {Tree(Decoration::sigma())}),
                    std::domain_error);
}

TEST_CASE("hl_order realizes the definitional comparison") {
    for (std::size_t n = 0; n <= 5; ++n) {
        ForestEnumerator en(n, {"x", "y"});
        while (auto f = en.next()) {
            const auto order = hl_order(*f);
            for (std::size_t i = 0; i < order.size(); ++i)
                for (std::size_t j = 0; j < order.size(); ++j)
                    CHECK(oracles::hl_less_oracle(order[i], order[j]) == (i < j));
        }
    }
}

TEST_CASE("structural invariants over the enumerated basis") {
    for (std::size_t n = 0; n <= 5; ++n) {
        ForestEnumerator en(n, {"x", "y"});
        while (auto f = en.next()) {
            const auto order = hl_order(*f);
            REQUIRE(order.size() == n);
            for (VertexRef a = 0; a < n; ++a) {
                auto [above, below] = split_at(*f, a);
                CHECK(above.vertex_count() + below.vertex_count() == n - 1);
                // position k has |B| = n - 1 - k, strictly decreasing
                CHECK(above.vertex_count() == n - 1 - a);
            }
            // B+ section: grafting then reading children recovers the forest
            const Tree grafted = bplus(*f);
            CHECK(Forest(grafted.children()) == *f);
            CHECK(grafted.depth() == f->depth() + 1);
        }
    }
    // breadth is additive under concatenation
    ForestEnumerator left(2, {"x"});
    while (auto a = left.next()) {
        ForestEnumerator right(3, {"x"});
        while (auto b = right.next())
            CHECK(concat(*a, *b).breadth() == a->breadth() + b->breadth());
    }
}

#include <algorithm>
#include <set>
#include <vector>

#include "doctest.h"
#include "sunweave/block.hpp"

using namespace sunweave;

TEST_CASE("block edge expansion by kind") {
    auto has = [](const std::vector<Edge>& es, int a, int b) {
        return std::find(es.begin(), es.end(), edge(a, b)) != es.end();
    };

    auto tri_edges = block_edges(triangle(0, 1, 2));
    CHECK(tri_edges.size() == 3);
    CHECK(has(tri_edges, 0, 1));
    CHECK(has(tri_edges, 1, 2));
    CHECK(has(tri_edges, 0, 2));

    auto sun_edges = block_edges(sun(0, 1, 2, 9, 10, 11));
    CHECK(sun_edges.size() == 6);
    CHECK(has(sun_edges, 0, 9));
    CHECK(has(sun_edges, 1, 10));
    CHECK(has(sun_edges, 2, 11));

    auto bull_edges = block_edges(bull(14, 16, 13, 2, 19));
    CHECK(bull_edges.size() == 5);
    CHECK(has(bull_edges, 14, 16));
    CHECK(has(bull_edges, 16, 13));
    CHECK(has(bull_edges, 13, 14));
    CHECK(has(bull_edges, 16, 2));
    CHECK(has(bull_edges, 13, 19));

    auto kite_edges = block_edges(kite(1, 2, 0, 11));
    CHECK(kite_edges.size() == 4);
    CHECK(has(kite_edges, 0, 11));

    SUBCASE("all expansions are duplicate-free") {
        for (const auto& es : {tri_edges, sun_edges, bull_edges, kite_edges}) {
            std::set<Edge> uniq(es.begin(), es.end());
            CHECK(uniq.size() == es.size());
        }
    }
}

TEST_CASE("degree-2 vertex sets by kind") {
    CHECK(degree2_vertices(triangle(0, 1, 2)) == std::vector<int>{0, 1, 2});
    CHECK(degree2_vertices(kite(1, 2, 0, 11)) == std::vector<int>{1, 2});
    CHECK(degree2_vertices(bull(14, 16, 13, 2, 19)) == std::vector<int>{14});
    CHECK(degree2_vertices(sun(0, 1, 2, 9, 10, 11)).empty());
}

TEST_CASE("malformed blocks are rejected") {
    CHECK_THROWS_AS(triangle(0, 0, 2), MalformedBlock);
    CHECK_THROWS_AS(sun(0, 1, 2, 0, 4, 5), MalformedBlock);
    CHECK_THROWS_AS(kite(3, 4, 5, -1), MalformedBlock);
}

TEST_CASE("orbit expansion") {
    SUBCASE("triangle orbit mod 13 covers 39 distinct edges") {
        auto blocks = orbit_expand(triangle(0, 1, 4), 13);
        REQUIRE(blocks.size() == 13);
        std::set<Edge> seen;
        for (const auto& b : blocks)
            for (const auto& e : block_edges(b)) seen.insert(e);
        CHECK(seen.size() == 39);
    }

    SUBCASE("kite orbit on listed shifts") {
        std::vector<int> shifts;
        for (int i = 0; i < 10; ++i) shifts.push_back(2 * i);
        auto blocks = orbit_expand(kite(4, 11, 0, 8), 20, shifts);
        REQUIRE(blocks.size() == 10);
        for (const auto& b : blocks) CHECK(b.kind == BlockKind::kite);
        CHECK(blocks[1].v[0] == 6);
        CHECK(blocks[1].v[3] == 10);
    }

    SUBCASE("identity shift") {
        std::vector<int> shifts{0};
        auto blocks = orbit_expand(triangle(0, 1, 2), 5, shifts);
        REQUIRE(blocks.size() == 1);
        CHECK(blocks[0] == triangle(0, 1, 2));
    }

    SUBCASE("translation collisions surface as malformed blocks") {
        CHECK_THROWS_AS(orbit_expand(triangle(0, 1, 3), 3), MalformedBlock);
    }
}

#include <algorithm>
#include <random>
#include <set>

#include "doctest.h"
#include "sunweave/bipartite.hpp"
#include "sunweave/triple_system.hpp"

using namespace sunweave;

namespace {

// Exact union check: every edge id appears in exactly one part.
bool covers_exactly_once(const BipartiteGraph& g, const MatchingPartition& p) {
    std::vector<int> count(g.edges.size(), 0);
    for (const auto& part : p.parts)
        for (int e : part) {
            if (e < 0 || e >= static_cast<int>(g.edges.size())) return false;
            ++count[e];
        }
    return std::all_of(count.begin(), count.end(), [](int c) { return c == 1; });
}

BipartiteGraph random_graph(std::mt19937_64& rng) {
    BipartiteGraph g;
    g.left = 1 + static_cast<int>(rng() % 40);
    g.right = 1 + static_cast<int>(rng() % 40);
    int edges = static_cast<int>(rng() % 301);
    for (int i = 0; i < edges; ++i)
        g.add_edge(static_cast<int>(rng() % g.left), static_cast<int>(rng() % g.right));
    return g;
}

}  // namespace

TEST_CASE("konig coloring small shapes") {
    SUBCASE("star") {
        BipartiteGraph g;
        g.left = 1;
        g.right = 3;
        for (int r = 0; r < 3; ++r) g.add_edge(0, r);
        auto p = konig_edge_coloring(g);
        REQUIRE(p.parts.size() == 3);
        for (const auto& part : p.parts) CHECK(part.size() == 1);
    }

    SUBCASE("2-regular cycle splits into two perfect matchings") {
        BipartiteGraph g;
        g.left = g.right = 4;
        for (int i = 0; i < 4; ++i) {
            g.add_edge(i, i);
            g.add_edge(i, (i + 1) % 4);
        }
        auto p = konig_edge_coloring(g);
        REQUIRE(p.parts.size() == 2);
        CHECK(p.parts[0].size() == 4);
        CHECK(p.parts[1].size() == 4);
        CHECK(covers_exactly_once(g, p));
    }

    SUBCASE("empty graph") {
        BipartiteGraph g;
        g.left = g.right = 2;
        CHECK(konig_edge_coloring(g).parts.empty());
    }
}

TEST_CASE("konig coloring on random multigraphs") {
    std::mt19937_64 rng(20240901);
    for (int trial = 0; trial < 30; ++trial) {
        BipartiteGraph g = random_graph(rng);
        auto p = konig_edge_coloring(g);
        CHECK(p.parts.size() == static_cast<std::size_t>(g.max_degree()));
        for (const auto& part : p.parts) CHECK(is_matching(g, part));
        CHECK(covers_exactly_once(g, p));
    }
}

TEST_CASE("konig coloring saturates every point of an incidence graph") {
    for (int n : {7, 13, 19}) {
        BipartiteGraph g = incidence_graph(generate_sts(n));
        auto p = konig_edge_coloring(g);
        REQUIRE(p.parts.size() == static_cast<std::size_t>((n - 1) / 2));
        for (const auto& part : p.parts) CHECK(unsaturated_left(g, part).empty());
    }
}

TEST_CASE("rebalance_pair moves exactly one edge") {
    SUBCASE("single transfer") {
        BipartiteGraph g;
        g.left = g.right = 1;
        g.add_edge(0, 0);
        auto [m2, n2] = rebalance_pair(g, std::vector<int>{0}, std::vector<int>{});
        CHECK(m2.empty());
        CHECK(n2 == std::vector<int>{0});
    }

    SUBCASE("path of length three") {
        // a-b-c-d as left 0 - right 0 - left 1 - right 1
        BipartiteGraph g;
        g.left = g.right = 2;
        g.add_edge(0, 0);  // M
        g.add_edge(1, 0);
        g.add_edge(1, 1);  // M
        auto [m2, n2] = rebalance_pair(g, std::vector<int>{0, 2}, std::vector<int>{});
        CHECK(m2.size() == 1);
        CHECK(n2.size() == 1);
        CHECK(is_matching(g, m2));
        CHECK(is_matching(g, n2));
    }

    SUBCASE("precondition |m| > |n| enforced") {
        BipartiteGraph g;
        g.left = g.right = 2;
        g.add_edge(0, 0);
        g.add_edge(1, 1);
        CHECK_THROWS_AS(
            rebalance_pair(g, std::vector<int>{0}, std::vector<int>{1}),
            std::invalid_argument);
    }
}

TEST_CASE("rebalance_pair randomized contract") {
    std::mt19937_64 rng(77001);
    int done = 0;
    while (done < 60) {
        BipartiteGraph g = random_graph(rng);
        if (g.edges.empty()) continue;
        // Greedily split edge ids into two disjoint matchings.
        std::vector<int> m, n;
        std::vector<char> lm(g.left, 0), rm(g.right, 0), ln(g.left, 0), rn(g.right, 0);
        for (std::size_t e = 0; e < g.edges.size(); ++e) {
            auto [l, r] = g.edges[e];
            if (!lm[l] && !rm[r] && (rng() & 1)) {
                m.push_back(static_cast<int>(e));
                lm[l] = rm[r] = 1;
            } else if (!ln[l] && !rn[r] && (rng() & 1)) {
                n.push_back(static_cast<int>(e));
                ln[l] = rn[r] = 1;
            }
        }
        if (m.size() <= n.size()) continue;
        auto [m2, n2] = rebalance_pair(g, m, n);
        CHECK(m2.size() == m.size() - 1);
        CHECK(n2.size() == n.size() + 1);
        CHECK(is_matching(g, m2));
        CHECK(is_matching(g, n2));
        std::set<int> before(m.begin(), m.end());
        before.insert(n.begin(), n.end());
        std::set<int> after(m2.begin(), m2.end());
        after.insert(n2.begin(), n2.end());
        CHECK(after.size() == m2.size() + n2.size());
        CHECK(before == after);
        ++done;
    }
}

TEST_CASE("redistribute_to_profile hits exact sizes") {
    TripleSystem s = generate_sts(19);
    BipartiteGraph g = incidence_graph(s);
    auto base = konig_edge_coloring(g);

    // Deficiency profile (2,3,3,3,3,4,...,4) over Delta+2 = 11 parts.
    std::vector<int> deficiency{2, 3, 3, 3, 3, 4, 4, 4, 4, 4, 4};
    std::vector<int> targets;
    for (int d : deficiency) targets.push_back(19 - d);
    auto p = redistribute_to_profile(g, base, targets);

    REQUIRE(p.parts.size() == targets.size());
    for (std::size_t i = 0; i < targets.size(); ++i) {
        CHECK(p.parts[i].size() == static_cast<std::size_t>(targets[i]));
        CHECK(is_matching(g, p.parts[i]));
    }
    CHECK(covers_exactly_once(g, p));

    SUBCASE("each point is unsaturated by exactly two parts") {
        std::vector<int> misses(g.left, 0);
        for (const auto& part : p.parts)
            for (int x : unsaturated_left(g, part)) ++misses[x];
        for (int x = 0; x < g.left; ++x) CHECK(misses[x] == 2);
    }

    SUBCASE("wrong target sum is rejected") {
        std::vector<int> bad = targets;
        bad.back() -= 1;
        CHECK_THROWS_AS(redistribute_to_profile(g, base, bad), std::invalid_argument);
    }
}

TEST_CASE("saturating_matching") {
    SUBCASE("perfect matching in K_{3,3}") {
        BipartiteGraph g;
        g.left = g.right = 3;
        for (int l = 0; l < 3; ++l)
            for (int r = 0; r < 3; ++r) g.add_edge(l, r);
        auto res = saturating_matching(g, std::vector<int>{0, 1, 2});
        REQUIRE(res.edge_ids.has_value());
        CHECK(res.edge_ids->size() == 3);
        CHECK(is_matching(g, *res.edge_ids));
    }

    SUBCASE("isolated target yields a Hall witness") {
        BipartiteGraph g;
        g.left = 2;
        g.right = 2;
        g.add_edge(0, 0);
        auto res = saturating_matching(g, std::vector<int>{0, 1});
        CHECK(!res.edge_ids.has_value());
        CHECK(!res.hall_witness.empty());
    }
}

TEST_CASE("partition_missing_graph") {
    SUBCASE("single requirement covering a perfect matching") {
        BipartiteGraph g;
        g.left = g.right = 3;
        for (int i = 0; i < 3; ++i) {
            g.add_edge(i, i);
            g.add_edge(i, (i + 1) % 3);
        }
        std::vector<std::vector<int>> req{{0, 1, 2}, {0, 1, 2}};
        auto parts = partition_missing_graph(g, req);
        REQUIRE(parts.size() == 2);
        for (const auto& part : parts) {
            CHECK(part.size() == 3);
            CHECK(is_matching(g, part));
        }
    }

    SUBCASE("demands must equal degrees") {
        BipartiteGraph g;
        g.left = 2;
        g.right = 2;
        g.add_edge(0, 0);
        g.add_edge(1, 0);
        std::vector<std::vector<int>> req{{0}, {1}};
        CHECK_THROWS_AS(partition_missing_graph(g, req), SearchError);
    }
}

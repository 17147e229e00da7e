#include <algorithm>
#include <array>
#include <set>

#include "doctest.h"
#include "sunweave/embedder.hpp"
#include "sunweave/io.hpp"
#include "sunweave/sun_factory.hpp"
#include "sunweave/triple_system.hpp"

using namespace sunweave;

namespace {

// The three invariants every certificate must satisfy beyond verify_embedding:
// exact sun count, image triangles, and fresh-point pendant accounting.
void check_counting_identities(const EmbeddingCertificate& c) {
    int n = c.sts.order;
    int order = n + c.u;
    CHECK(c.design.blocks.size() ==
          static_cast<std::size_t>(order * (order - 1) / 12));

    // Bipartite accounting: each X-U edge is used exactly once over all blocks.
    std::vector<std::vector<char>> used(n, std::vector<char>(c.u, 0));
    int cross = 0;
    for (const auto& b : c.design.blocks)
        for (const auto& e : block_edges(b)) {
            bool a_in_x = e.a < n, b_in_x = e.b < n;
            if (a_in_x == b_in_x) continue;
            int x = a_in_x ? e.a : e.b;
            int u = (a_in_x ? e.b : e.a) - n;
            CHECK(!used[x][u]);
            used[x][u] = 1;
            ++cross;
        }
    CHECK(cross == n * c.u);
}

EmbeddingCertificate embed_order(int n, const EmbedOptions& opts = {}) {
    return embed(generate_sts(n), opts);
}

}  // namespace

TEST_CASE("u_min formulas and exceptions") {
    CHECK(u_min(1) == 0);
    CHECK(u_min(3) == 6);
    CHECK(u_min(7) == 6);
    CHECK(u_min(9) == 7);
    CHECK(u_min(13) == 11);
    CHECK(u_min(15) == 9);
    CHECK(u_min(19) == 9);
    CHECK(u_min(21) == 12);
    CHECK(u_min(25) == 12);
    CHECK(u_min(27) == 13);
    CHECK(u_min(31) == 17);
    CHECK(u_min(33) == 16);
    CHECK(u_min(37) == 20);
    CHECK(u_min(39) == 21);
    CHECK(u_min(43) == 21);
    CHECK(u_min(99) == 49);
    CHECK_THROWS_AS(u_min(5), std::invalid_argument);
    CHECK_THROWS_AS(u_min(12), std::invalid_argument);
}

TEST_CASE("partial_embed consumes the whole incidence graph") {
    TripleSystem s = skolem(7);
    PartialEmbedding pe = partial_embed(s);
    CHECK(pe.design.points == 10);
    CHECK(pe.design.partial);
    REQUIRE(pe.image_suns.size() == 7);
    CHECK(verify_decomposition(pe.design).ok);

    // Every sun's tips are three distinct matching-vertices.
    for (std::size_t i = 0; i < pe.image_suns.size(); ++i) {
        const Block& b = pe.image_suns[i];
        REQUIRE(b.kind == BlockKind::sun);
        std::set<int> tips{b.v[3], b.v[4], b.v[5]};
        CHECK(tips.size() == 3);
        for (int t : tips) CHECK(t >= 7);
        std::array<int, 3> tri{b.v[0], b.v[1], b.v[2]};
        std::sort(tri.begin(), tri.end());
        CHECK(tri == s.triples[i]);
    }
}

TEST_CASE("pair_classes_to_suns consumes both classes exactly") {
    TripleSystem s = kts(9);
    REQUIRE(s.resolution.size() >= 2);
    std::vector<std::array<int, 3>> p, q;
    for (int idx : s.resolution[0]) p.push_back(s.triples[idx]);
    for (int idx : s.resolution[1]) q.push_back(s.triples[idx]);

    auto suns = pair_classes_to_suns(p, q);
    REQUIRE(suns.size() == 3);

    Design d;
    d.points = 9;
    std::vector<Edge> host;
    for (const auto& t : p) {
        host.push_back(edge(t[0], t[1]));
        host.push_back(edge(t[1], t[2]));
        host.push_back(edge(t[0], t[2]));
    }
    for (const auto& t : q) {
        host.push_back(edge(t[0], t[1]));
        host.push_back(edge(t[1], t[2]));
        host.push_back(edge(t[0], t[2]));
    }
    d.host_edges = host;
    d.blocks = suns;
    CHECK(verify_decomposition(d).ok);

    // Triangles are exactly the triangles of p.
    for (std::size_t i = 0; i < suns.size(); ++i) {
        std::array<int, 3> tri = suns[i].triangle_vertices();
        std::sort(tri.begin(), tri.end());
        CHECK(std::find(p.begin(), p.end(), tri) != p.end());
    }
}

TEST_CASE("embedding the exceptional orders") {
    for (int n : {3, 7, 9}) {
        EmbeddingCertificate c = embed_order(n);
        CHECK(c.u == u_min(n));
        auto rep = verify_embedding(c);
        INFO("n = " << n);
        for (const auto& v : rep.violations) INFO(v);
        CHECK(rep.ok);
        check_counting_identities(c);
    }

    SUBCASE("both STS(13) classes reach order 24") {
        for (auto which : {Sts13Class::cyclic, Sts13Class::noncyclic}) {
            EmbeddingCertificate c = embed(sts13(which));
            CHECK(c.u == 11);
            CHECK(verify_embedding(c).ok);
            check_counting_identities(c);
        }
    }
}

TEST_CASE("direct sun-system route") {
    EmbeddingCertificate c = embed_order(19);
    CHECK(c.u == 9);
    CHECK(c.design.blocks.size() == 63);
    CHECK(verify_embedding(c).ok);
    check_counting_identities(c);
}

TEST_CASE("fixed-partition route") {
    EmbeddingCertificate c = embed_order(21);
    CHECK(c.u == 12);
    auto rep = verify_embedding(c);
    for (const auto& v : rep.violations) INFO(v);
    CHECK(rep.ok);
    check_counting_identities(c);
}

TEST_CASE("kirkman route at the smallest order") {
    EmbeddingCertificate c = embed_order(15);
    CHECK(c.u == 9);
    CHECK(verify_embedding(c).ok);
    check_counting_identities(c);
}

TEST_CASE("verify_embedding rejects tampered certificates") {
    EmbeddingCertificate c = embed_order(9);
    REQUIRE(verify_embedding(c).ok);

    SUBCASE("map entry pointing at the wrong sun") {
        std::swap(c.sun_of_triple[0], c.sun_of_triple[1]);
        CHECK(!verify_embedding(c).ok);
    }
    SUBCASE("understated u") {
        c.u -= 1;
        CHECK(!verify_embedding(c).ok);
    }
    SUBCASE("broken design") {
        c.design.blocks.pop_back();
        CHECK(!verify_embedding(c).ok);
    }
    SUBCASE("non-injective map") {
        c.sun_of_triple[1] = c.sun_of_triple[0];
        CHECK(!verify_embedding(c).ok);
    }
}

TEST_CASE("embed rejects junk input") {
    TripleSystem s = bose(9);
    s.triples.pop_back();
    CHECK_THROWS_AS(embed(s), std::invalid_argument);
}

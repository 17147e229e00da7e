#include "doctest.h"
#include "json.hpp"
#include "sunweave/io.hpp"
#include "sunweave/sun_factory.hpp"
#include "sunweave/triple_system.hpp"

using namespace sunweave;

TEST_CASE("design JSON round trip") {
    Design d = sun_system(9);
    auto j = design_to_json(d);
    Design back = design_from_json(j);
    CHECK(back.points == d.points);
    CHECK(back.partial == d.partial);
    CHECK(back.blocks == d.blocks);
}

TEST_CASE("design text round trip") {
    Design d;
    d.points = 8;
    d.partial = true;
    d.blocks = {triangle(0, 1, 2), kite(3, 4, 5, 6), bull(1, 3, 5, 0, 2),
                sun(0, 1, 2, 5, 6, 7)};
    Design back = design_from_text(design_to_text(d));
    CHECK(back.points == 8);
    CHECK(back.partial);
    CHECK(back.blocks == d.blocks);
}

TEST_CASE("text parser accepts table notation with markup") {
    Design d = design_from_text(
        "# embedding table excerpt\n"
        "points 16\n"
        "partial\n"
        "(**0**,**1**,**2**; 9,10,11)\n"
        "  (0,3,6; 11,13,5),\n");
    CHECK(d.points == 16);
    CHECK(d.partial);
    REQUIRE(d.blocks.size() == 2);
    CHECK(d.blocks[0] == sun(0, 1, 2, 9, 10, 11));
    CHECK(d.blocks[1] == sun(0, 3, 6, 11, 13, 5));
}

TEST_CASE("malformed inputs raise ParseError") {
    CHECK_THROWS_AS(design_from_text("(0,1)\n"), ParseError);
    CHECK_THROWS_AS(design_from_text("(0,1,2,3,4,5,6,7)\n"), ParseError);
    CHECK_THROWS_AS(design_from_json(nlohmann::json{{"points", 3}}), ParseError);
    CHECK_THROWS_AS(triples_from_text("(0,1,2; 3)\n"), ParseError);
}

TEST_CASE("triple system JSON keeps the resolution") {
    TripleSystem s = kts(9);
    TripleSystem back = triples_from_json(triples_to_json(s));
    CHECK(back.order == 9);
    CHECK(back.triples == s.triples);
    CHECK(back.resolution == s.resolution);
}

TEST_CASE("triples text round trip") {
    TripleSystem s = bose(9);
    TripleSystem back = triples_from_text(triples_to_text(s));
    CHECK(back.order == s.order);
    CHECK(back.triples == s.triples);
}

TEST_CASE("certificate JSON round trip") {
    EmbeddingCertificate c;
    c.sts = bose(3);
    c.u = 6;
    c.design.points = 9;
    c.design.blocks = {sun(0, 1, 2, 3, 4, 5)};
    c.design.partial = true;
    c.sun_of_triple = {0};
    EmbeddingCertificate back = certificate_from_json(certificate_to_json(c));
    CHECK(back.sts.order == 3);
    CHECK(back.sts.triples == c.sts.triples);
    CHECK(back.u == 6);
    CHECK(back.design.blocks == c.design.blocks);
    CHECK(back.sun_of_triple == c.sun_of_triple);
}

#include <algorithm>
#include <map>

#include "sunweave/io.hpp"
#include "sunweave/sun_factory.hpp"

namespace sunweave {

namespace {

// Stock embeddings for the orders whose minimum lies above the parity
// bound. The first blocks of each list are the suns whose triangles carry
// the embedded system; the embedded points are 0..n-1.

// STS(7) inside a sun system of order 13.
constexpr std::string_view kTable7 = R"(
points 13
(0,1,2; 7,8,9)
(0,3,4; 8,7,9)
(0,5,6; 9,8,10)
(1,3,5; 9,8,7)
(1,4,6; 10,7,12)
(2,3,6; 7,9,8)
(2,4,5; 8,11,9)
(0,10,11; 12,5,3)
(1,7,12; 11,8,5)
(2,10,12; 11,9,8)
(4,8,10; 12,9,3)
(9,11,12; 7,5,3)
(6,7,11; 9,10,8)
)";

// STS(9) inside a sun system of order 16.
constexpr std::string_view kTable9 = R"(
points 16
(0,1,2; 9,10,11)
(0,3,6; 10,15,9)
(0,4,8; 11,9,13)
(0,5,7; 12,9,15)
(1,3,8; 9,10,11)
(1,4,7; 11,10,9)
(1,5,6; 12,10,13)
(2,3,7; 9,11,12)
(2,4,6; 10,11,12)
(2,5,8; 12,13,14)
(3,4,5; 9,12,14)
(6,7,8; 11,10,9)
(0,13,15; 14,7,8)
(1,14,15; 13,4,9)
(3,12,14; 13,15,11)
(2,13,14; 15,4,7)
(5,11,12; 15,7,10)
(6,10,14; 15,8,9)
(9,12,13; 10,8,11)
(10,11,15; 13,9,4)
)";

// The cyclic STS(13) inside a sun system of order 24. The first 26 suns
// carry the base-block orbits of {0,1,4} and {0,2,7} mod 13.
constexpr std::string_view kTable13 = R"(
points 24
(0,1,4; 13,18,14)
(1,2,5; 13,23,14)
(2,3,6; 13,18,14)
(3,4,7; 13,15,14)
(4,5,8; 13,15,14)
(5,6,9; 13,18,19)
(6,7,10; 13,15,14)
(7,8,11; 13,15,14)
(8,9,12; 13,20,15)
(9,10,0; 13,15,14)
(10,11,1; 13,16,14)
(11,12,2; 13,16,14)
(12,0,3; 13,15,23)
(0,2,7; 16,22,21)
(1,3,8; 15,19,16)
(2,4,9; 15,16,14)
(3,5,10; 14,16,17)
(4,6,11; 17,15,18)
(5,7,12; 17,16,14)
(6,8,0; 16,17,18)
(7,9,1; 17,15,16)
(8,10,2; 18,16,17)
(9,11,3; 16,15,17)
(10,12,4; 18,17,19)
(11,0,5; 17,19,18)
(12,1,6; 18,17,19)
(0,17,20; 21,6,1)
(1,19,21; 22,2,3)
(2,16,18; 20,3,4)
(3,15,20; 22,13,4)
(4,21,22; 23,2,0)
(5,19,20; 21,7,6)
(6,21,23; 22,8,0)
(7,18,20; 22,9,8)
(8,19,22; 23,10,5)
(9,17,21; 22,13,10)
(10,20,22; 23,11,12)
(11,19,23; 21,12,1)
(12,20,21; 23,13,14)
(13,14,16; 18,15,17)
(13,22,23; 19,11,5)
(14,17,19; 18,15,16)
(14,20,23; 22,16,7)
(15,16,21; 19,23,13)
(15,18,22; 23,19,16)
(17,18,23; 22,21,9)
)";

// Swapping these four suns for the four below turns the table above into an
// embedding of the non-cyclic STS(13); the triangles trade over the same
// pair set, the tips are untouched as a multiset per vertex.
constexpr std::string_view kTrade13Out = R"(
points 24
(0,1,4; 13,18,14)
(0,2,7; 16,22,21)
(2,4,9; 15,16,14)
(7,9,1; 17,15,16)
)";

constexpr std::string_view kTrade13In = R"(
points 24
(9,1,4; 14,18,16)
(9,2,7; 15,22,17)
(0,2,4; 16,15,14)
(0,1,7; 13,16,21)
)";

EmbeddingTable table_from_text(std::string_view text, int n) {
    EmbeddingTable t;
    t.design = design_from_text(text);
    t.sts.order = n;
    const std::size_t count = static_cast<std::size_t>(n) * (n - 1) / 6;
    for (std::size_t i = 0; i < count; ++i) {
        std::array<int, 3> tr = t.design.blocks.at(i).triangle_vertices();
        std::sort(tr.begin(), tr.end());
        t.sts.triples.push_back(tr);
        t.sun_of_triple.push_back(static_cast<int>(i));
    }
    return t;
}

}  // namespace

std::string_view embedding_table_text(int n) {
    switch (n) {
        case 7: return kTable7;
        case 9: return kTable9;
        case 13: return kTable13;
        default:
            throw std::invalid_argument("no stock embedding for order " +
                                        std::to_string(n));
    }
}

EmbeddingTable embedding_table_sts7() { return table_from_text(kTable7, 7); }

EmbeddingTable embedding_table_sts9() { return table_from_text(kTable9, 9); }

EmbeddingTable embedding_table_sts13(Sts13Class which) {
    EmbeddingTable t = table_from_text(kTable13, 13);
    if (which == Sts13Class::cyclic) return t;

    const Design out = design_from_text(kTrade13Out);
    const Design in = design_from_text(kTrade13In);
    for (std::size_t i = 0; i < out.blocks.size(); ++i) {
        auto it = std::find(t.design.blocks.begin(), t.design.blocks.end(),
                            out.blocks[i]);
        if (it == t.design.blocks.end())
            throw std::logic_error("trade block missing from the stock table");
        *it = in.blocks[i];
    }
    t.sts.triples.clear();
    t.sun_of_triple.clear();
    const std::size_t count = 26;
    for (std::size_t i = 0; i < count; ++i) {
        std::array<int, 3> tr = t.design.blocks[i].triangle_vertices();
        std::sort(tr.begin(), tr.end());
        t.sts.triples.push_back(tr);
        t.sun_of_triple.push_back(static_cast<int>(i));
    }
    return t;
}

}  // namespace sunweave

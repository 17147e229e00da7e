#include <initializer_list>

#include "sunweave/sun_factory.hpp"

namespace sunweave {

namespace {

void append(std::vector<Block>& g, const Block& b) { g.push_back(b); }

void append_orbit(std::vector<Block>& g, const Block& base, int modulus,
                  std::initializer_list<int> shifts) {
    for (int s : shifts) g.push_back(translate(base, s, modulus));
}

void append_orbit(std::vector<Block>& g, const Block& base, int modulus) {
    for (int s = 0; s < modulus; ++s) g.push_back(translate(base, s, modulus));
}

std::vector<int> range(int lo, int hi, int step = 1) {
    std::vector<int> out;
    for (int i = lo; i <= hi; i += step) out.push_back(i);
    return out;
}

void append_orbit(std::vector<Block>& g, const Block& base, int modulus,
                  const std::vector<int>& shifts) {
    for (int s : shifts) g.push_back(translate(base, s, modulus));
}

GroupedPartition partition21() {
    GroupedPartition gp;
    gp.modulus = 12;
    gp.groups.resize(4);
    auto& a1 = gp.groups[0];
    append(a1, kite(1, 2, 0, 11));
    append(a1, kite(3, 7, 2, 5));
    append(a1, kite(0, 4, 3, 9));
    auto& a2 = gp.groups[1];
    append(a2, triangle(0, 5, 6));
    append(a2, triangle(1, 8, 11));
    append(a2, triangle(7, 4, 10));
    append(a2, kite(2, 9, 8, 10));
    append(a2, bull(3, 1, 5, 10, 8));
    auto& a3 = gp.groups[2];
    append(a3, triangle(0, 9, 10));
    append(a3, triangle(3, 6, 8));
    append(a3, triangle(5, 7, 11));
    append(a3, kite(2, 4, 11, 6));
    append(a3, bull(1, 7, 9, 6, 11));
    auto& a4 = gp.groups[3];
    append(a4, triangle(0, 7, 8));
    append(a4, triangle(3, 10, 11));
    append(a4, kite(5, 9, 4, 8));
    append(a4, kite(1, 4, 6, 9));
    append(a4, kite(2, 6, 10, 5));
    return gp;
}

GroupedPartition partition31() {
    GroupedPartition gp;
    gp.modulus = 17;
    gp.groups.resize(4);
    auto& a1 = gp.groups[0];
    append_orbit(a1, kite(0, 4, 1, 7), 17, {2, 3, 4, 5, 11, 12, 13, 14});
    append(a1, bull(10, 12, 0, 3, 7));
    auto& a2 = gp.groups[1];
    append_orbit(a2, kite(0, 4, 1, 7), 17, {0, 1, 6, 7, 8, 9, 15, 16});
    append(a2, bull(14, 7, 9, 2, 0));
    auto& a3 = gp.groups[2];
    append_orbit(a3, kite(0, 7, 2, 10), 17, {1, 4, 13, 15, 16});
    append(a3, kite(10, 14, 11, 0));
    append(a3, bull(9, 4, 2, 12, 0));
    append(a3, bull(12, 2, 14, 10, 5));
    auto& a4 = gp.groups[3];
    append_orbit(a4, kite(0, 7, 2, 10), 17, {3, 5, 6, 8, 9, 11, 14});
    return gp;
}

GroupedPartition partition37() {
    GroupedPartition gp;
    gp.modulus = 20;
    gp.groups.resize(5);
    append_orbit(gp.groups[0], kite(4, 11, 0, 8), 20, range(0, 18, 2));
    append_orbit(gp.groups[1], kite(5, 12, 1, 9), 20, range(0, 18, 2));
    auto& a3 = gp.groups[2];
    append(a3, bull(14, 16, 13, 2, 19));
    append(a3, bull(4, 6, 3, 16, 9));
    auto& a4 = gp.groups[3];
    append_orbit(a4, kite(1, 3, 0, 6), 20, {0, 12, 17});
    append(a4, kite(7, 12, 2, 17));
    append(a4, kite(16, 17, 19, 14));
    append(a4, bull(5, 7, 4, 17, 10));
    append(a4, bull(6, 8, 5, 18, 11));
    append(a4, bull(8, 10, 7, 15, 13));
    append(a4, bull(11, 9, 8, 4, 14));
    append(a4, bull(10, 12, 9, 17, 15));
    append(a4, bull(2, 4, 1, 14, 16));
    auto& a5 = gp.groups[4];
    append_orbit(a5, kite(1, 3, 0, 6), 20, {14, 15});
    append(a5, kite(5, 10, 0, 15));
    append(a5, kite(8, 13, 3, 18));
    append(a5, kite(0, 2, 19, 4));
    append(a5, bull(3, 5, 2, 15, 8));
    append(a5, bull(7, 9, 6, 19, 12));
    append(a5, bull(11, 13, 10, 18, 16));
    // Source table reads (12,14,11;19,17); tail 19 duplicates edge {14,19}
    // (also in the kite (16,17,19;14)) and leaves {9,14} uncovered. The
    // single-symbol repair 19 -> 9 is unique; see TRANSCRIPTION_NOTES.md.
    append(a5, bull(12, 14, 11, 9, 17));
    append(a5, bull(1, 18, 19, 4, 5));
    append(a5, bull(6, 11, 1, 16, 7));
    return gp;
}

GroupedPartition partition45() {
    GroupedPartition gp;
    gp.modulus = 24;
    gp.groups.resize(5);
    auto& a1 = gp.groups[0];
    append_orbit(a1, kite(1, 13, 7, 19), 24, {0, 1, 2, 3, 4});
    append(a1, bull(8, 16, 0, 22, 12));
    append(a1, bull(9, 17, 1, 23, 19));
    append(a1, bull(10, 18, 2, 6, 20));
    append(a1, bull(19, 11, 3, 0, 21));
    append(a1, bull(20, 12, 4, 6, 22));
    append(a1, bull(21, 13, 5, 19, 23));
    append(a1, bull(22, 14, 6, 20, 0));
    append(a1, bull(7, 15, 23, 21, 12));
    append_orbit(gp.groups[1], triangle(0, 1, 5), 24, range(0, 21, 3));
    append_orbit(gp.groups[2], triangle(1, 2, 6), 24, range(0, 21, 3));
    append_orbit(gp.groups[3], triangle(2, 3, 7), 24, range(0, 21, 3));
    auto& a5 = gp.groups[4];
    {
        std::vector<int> shifts;
        for (int i = 0; i < 24; ++i)
            if (i != 11 && i != 23) shifts.push_back(i);
        append_orbit(a5, sun(1, 3, 10, 12, 6, 20), 24, shifts);
    }
    append(a5, sun(0, 2, 9, 18, 5, 19));
    append(a5, sun(12, 14, 21, 18, 17, 7));
    return gp;
}

GroupedPartition partition55() {
    GroupedPartition gp;
    gp.modulus = 29;
    gp.groups.resize(4);
    auto& a1 = gp.groups[0];
    append_orbit(a1, kite(13, 27, 0, 25), 29, range(3, 13));
    append(a1, bull(15, 0, 2, 25, 27));
    append(a1, bull(12, 14, 27, 10, 13));
    append(a1, bull(28, 13, 15, 0, 11));
    append(a1, bull(14, 0, 16, 27, 12));
    auto& a2 = gp.groups[1];
    {
        std::vector<int> shifts{1};
        for (int i = 17; i <= 28; ++i) shifts.push_back(i);
        append_orbit(a2, kite(13, 27, 0, 25), 29, shifts);
    }
    append_orbit(gp.groups[2], bull(0, 10, 11, 2, 6), 29);
    append_orbit(gp.groups[3], bull(0, 9, 12, 2, 6), 29);
    return gp;
}

GroupedPartition partition61() {
    GroupedPartition gp;
    gp.modulus = 32;
    gp.groups.resize(5);
    auto& a1 = gp.groups[0];
    append_orbit(a1, kite(0, 10, 29, 9), 32, {0, 1, 2, 3, 6, 17, 18, 19, 20});
    append(a1, kite(14, 22, 6, 30));
    append_orbit(a1, bull(23, 10, 13, 22, 29), 32, {0, 1, 2});
    append_orbit(a1, bull(4, 23, 26, 3, 18), 32, {0, 1, 3, 4, 5});
    append(a1, bull(26, 13, 16, 25, 24));
    append(a1, bull(21, 18, 31, 30, 7));
    auto& a2 = gp.groups[1];
    append_orbit(a2, kite(8, 16, 0, 24), 32, {0, 1, 2, 3, 4, 5});
    append(a2, kite(4, 14, 1, 13));
    append(a2, kite(0, 22, 19, 31));
    append(a2, kite(2, 24, 21, 1));
    append_orbit(a2, bull(1, 20, 23, 0, 15), 32, {0, 2, 5});
    append(a2, bull(5, 2, 15, 14, 7));
    append_orbit(gp.groups[2], bull(17, 4, 7, 16, 23), 32, {0, 1, 2, 3, 4, 5});
    append_orbit(gp.groups[3], bull(9, 0, 2, 11, 17), 32);
    append_orbit(gp.groups[4], bull(5, 0, 1, 6, 15), 32);
    return gp;
}

GroupedPartition partition69() {
    GroupedPartition gp;
    gp.modulus = 36;
    gp.groups.resize(6);
    append_orbit(gp.groups[0], bull(4, 2, 0, 6, 34), 36, {15, 18, 21, 24, 27, 30});
    auto& a2 = gp.groups[1];
    append_orbit(a2, bull(4, 2, 0, 6, 34), 36, {0, 3, 6, 9, 12, 33});
    for (int i = 0; i <= 5; ++i) {
        append(a2, translate(bull(24, 12, 0, 30, 18), i, 36));
        append(a2, translate(kite(30, 18, 6, 24), i, 36));
    }
    append_orbit(gp.groups[2], kite(0, 7, 15, 1), 36, range(0, 34, 2));
    append_orbit(gp.groups[3], kite(1, 8, 16, 2), 36, range(0, 34, 2));
    append_orbit(gp.groups[4], bull(9, 20, 0, 3, 13), 36);
    auto& a6 = gp.groups[5];
    for (int i = 0; i <= 3; ++i) {
        const int s = 9 * i;
        append(a6, translate(sun(0, 6, 1, 10, 32, 11), s, 36));
        append(a6, translate(sun(1, 7, 2, 5, 11, 12), s, 36));
        append(a6, translate(sun(2, 8, 3, 5, 9, 13), s, 36));
        append(a6, translate(sun(3, 9, 4, 6, 14, 8), s, 36));
        append(a6, translate(sun(4, 10, 5, 1, 7, 8), s, 36));
        append(a6, translate(sun(5, 11, 6, 35, 8, 9), s, 36));
        append(a6, translate(sun(6, 12, 7, 16, 9, 17), s, 36));
        append(a6, translate(sun(7, 13, 8, 4, 23, 18), s, 36));
    }
    return gp;
}

}  // namespace

GroupedPartition fixed_grouped_partition(int n) {
    switch (n) {
        case 21: return partition21();
        case 31: return partition31();
        case 37: return partition37();
        case 45: return partition45();
        case 55: return partition55();
        case 61: return partition61();
        case 69: return partition69();
        default:
            throw std::invalid_argument("no fixed grouped partition for order " +
                                        std::to_string(n));
    }
}

}  // namespace sunweave

#include "sunweave/triple_system.hpp"

namespace sunweave {

namespace {

// v = 9: the affine plane of order 3, the unique KTS(9).
const std::vector<std::vector<std::array<int, 3>>> kKts9 = {
    {{0, 1, 2}, {3, 4, 5}, {6, 7, 8}},
    {{0, 3, 6}, {1, 4, 7}, {2, 5, 8}},
    {{0, 4, 8}, {1, 5, 6}, {2, 3, 7}},
    {{0, 5, 7}, {1, 3, 8}, {2, 4, 6}},
};

// v = 21 and v = 33: found once by kts_search (rotational over Z_7 and Z_11
// respectively: the first (v/3 - 1)/2 classes are transversal orbits, the
// rest are translates of one base class) and frozen for determinism.
const std::vector<std::vector<std::array<int, 3>>> kKts21 = {
    {{0, 9, 20}, {1, 10, 14}, {2, 11, 15}, {3, 12, 16}, {4, 13, 17}, {5, 7, 18}, {6, 8, 19}},
    {{0, 10, 15}, {1, 11, 16}, {2, 12, 17}, {3, 13, 18}, {4, 7, 19}, {5, 8, 20}, {6, 9, 14}},
    {{0, 8, 16}, {1, 9, 17}, {2, 10, 18}, {3, 11, 19}, {4, 12, 20}, {5, 13, 14}, {6, 7, 15}},
    {{0, 4, 6}, {1, 8, 18}, {2, 13, 20}, {3, 9, 15}, {5, 10, 19}, {7, 11, 12}, {14, 16, 17}},
    {{0, 1, 5}, {2, 9, 19}, {3, 7, 14}, {4, 10, 16}, {6, 11, 20}, {8, 12, 13}, {15, 17, 18}},
    {{1, 2, 6}, {3, 10, 20}, {4, 8, 15}, {5, 11, 17}, {0, 12, 14}, {7, 9, 13}, {16, 18, 19}},
    {{0, 2, 3}, {4, 11, 14}, {5, 9, 16}, {6, 12, 18}, {1, 13, 15}, {7, 8, 10}, {17, 19, 20}},
    {{1, 3, 4}, {5, 12, 15}, {6, 10, 17}, {0, 13, 19}, {2, 7, 16}, {8, 9, 11}, {14, 18, 20}},
    {{2, 4, 5}, {6, 13, 16}, {0, 11, 18}, {1, 7, 20}, {3, 8, 17}, {9, 10, 12}, {14, 15, 19}},
    {{3, 5, 6}, {0, 7, 17}, {1, 12, 19}, {2, 8, 14}, {4, 9, 18}, {10, 11, 13}, {15, 16, 20}},
};

const std::vector<std::vector<std::array<int, 3>>> kKts33 = {
    {{0, 20, 32}, {1, 21, 22}, {2, 11, 23}, {3, 12, 24}, {4, 13, 25}, {5, 14, 26},
     {6, 15, 27}, {7, 16, 28}, {8, 17, 29}, {9, 18, 30}, {10, 19, 31}},
    {{0, 21, 24}, {1, 11, 25}, {2, 12, 26}, {3, 13, 27}, {4, 14, 28}, {5, 15, 29},
     {6, 16, 30}, {7, 17, 31}, {8, 18, 32}, {9, 19, 22}, {10, 20, 23}},
    {{0, 17, 28}, {1, 18, 29}, {2, 19, 30}, {3, 20, 31}, {4, 21, 32}, {5, 11, 22},
     {6, 12, 23}, {7, 13, 24}, {8, 14, 25}, {9, 15, 26}, {10, 16, 27}},
    {{0, 12, 30}, {1, 13, 31}, {2, 14, 32}, {3, 15, 22}, {4, 16, 23}, {5, 17, 24},
     {6, 18, 25}, {7, 19, 26}, {8, 20, 27}, {9, 21, 28}, {10, 11, 29}},
    {{0, 18, 26}, {1, 19, 27}, {2, 20, 28}, {3, 21, 29}, {4, 11, 30}, {5, 12, 31},
     {6, 13, 32}, {7, 14, 22}, {8, 15, 23}, {9, 16, 24}, {10, 17, 25}},
    {{0, 7, 25}, {1, 23, 32}, {2, 8, 10}, {3, 11, 26}, {4, 15, 31}, {5, 6, 19},
     {9, 13, 14}, {12, 16, 21}, {17, 20, 30}, {18, 24, 27}, {22, 28, 29}},
    {{1, 8, 26}, {2, 22, 24}, {0, 3, 9}, {4, 12, 27}, {5, 16, 32}, {6, 7, 20},
     {10, 14, 15}, {11, 13, 17}, {18, 21, 31}, {19, 25, 28}, {23, 29, 30}},
    {{2, 9, 27}, {3, 23, 25}, {1, 4, 10}, {5, 13, 28}, {6, 17, 22}, {7, 8, 21},
     {0, 15, 16}, {12, 14, 18}, {11, 19, 32}, {20, 26, 29}, {24, 30, 31}},
    {{3, 10, 28}, {4, 24, 26}, {0, 2, 5}, {6, 14, 29}, {7, 18, 23}, {8, 9, 11},
     {1, 16, 17}, {13, 15, 19}, {12, 20, 22}, {21, 27, 30}, {25, 31, 32}},
    {{0, 4, 29}, {5, 25, 27}, {1, 3, 6}, {7, 15, 30}, {8, 19, 24}, {9, 10, 12},
     {2, 17, 18}, {14, 16, 20}, {13, 21, 23}, {11, 28, 31}, {22, 26, 32}},
    {{1, 5, 30}, {6, 26, 28}, {2, 4, 7}, {8, 16, 31}, {9, 20, 25}, {0, 10, 13},
     {3, 18, 19}, {15, 17, 21}, {11, 14, 24}, {12, 29, 32}, {22, 23, 27}},
    {{2, 6, 31}, {7, 27, 29}, {3, 5, 8}, {9, 17, 32}, {10, 21, 26}, {0, 1, 14},
     {4, 19, 20}, {11, 16, 18}, {12, 15, 25}, {13, 22, 30}, {23, 24, 28}},
    {{3, 7, 32}, {8, 28, 30}, {4, 6, 9}, {10, 18, 22}, {0, 11, 27}, {1, 2, 15},
     {5, 20, 21}, {12, 17, 19}, {13, 16, 26}, {14, 23, 31}, {24, 25, 29}},
    {{4, 8, 22}, {9, 29, 31}, {5, 7, 10}, {0, 19, 23}, {1, 12, 28}, {2, 3, 16},
     {6, 11, 21}, {13, 18, 20}, {14, 17, 27}, {15, 24, 32}, {25, 26, 30}},
    {{5, 9, 23}, {10, 30, 32}, {0, 6, 8}, {1, 20, 24}, {2, 13, 29}, {3, 4, 17},
     {7, 11, 12}, {14, 19, 21}, {15, 18, 28}, {16, 22, 25}, {26, 27, 31}},
    {{6, 10, 24}, {0, 22, 31}, {1, 7, 9}, {2, 21, 25}, {3, 14, 30}, {4, 5, 18},
     {8, 12, 13}, {11, 15, 20}, {16, 19, 29}, {17, 23, 26}, {27, 28, 32}},
};

TripleSystem from_classes(int v,
                          const std::vector<std::vector<std::array<int, 3>>>& classes) {
    TripleSystem s;
    s.order = v;
    for (const auto& cls : classes) {
        s.resolution.emplace_back();
        for (const auto& t : cls) {
            s.resolution.back().push_back(static_cast<int>(s.triples.size()));
            std::array<int, 3> st = t;
            std::sort(st.begin(), st.end());
            s.triples.push_back(st);
        }
    }
    return s;
}

}  // namespace

TripleSystem kts(int v) {
    switch (v) {
        case 9: return from_classes(9, kKts9);
        case 21: return from_classes(21, kKts21);
        case 33: return from_classes(33, kKts33);
        default:
            throw std::invalid_argument("no stock Kirkman system of order " +
                                        std::to_string(v));
    }
}

}  // namespace sunweave

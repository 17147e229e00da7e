#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sunweave/bipartite.hpp"
#include "sunweave/common.hpp"

namespace sunweave {

// Steiner triple system on points 0..order-1: every pair of points lies in
// exactly one triple. Orders exist iff order == 1 or 3 (mod 6).
// resolution, when present, lists triple indices by parallel class.
struct TripleSystem {
    int order = 0;
    std::vector<std::array<int, 3>> triples;  // each sorted ascending
    std::vector<std::vector<int>> resolution;

    bool has_resolution() const { return !resolution.empty(); }
};

struct TripleSystemReport {
    bool ok = false;
    std::vector<std::string> problems;
};

// Checks exact pair coverage and, if a resolution is attached, that each
// class partitions the point set.
TripleSystemReport verify_triple_system(const TripleSystem& s);

bool sts_order_admissible(int n);

// Quasigroup construction for n == 3 (mod 6).
TripleSystem bose(int n);

// Half-idempotent quasigroup construction for n == 1 (mod 6), n > 1.
TripleSystem skolem(int n);

enum class Sts13Class { cyclic, noncyclic };

// The two isomorphism classes on 13 points. The cyclic one is the orbit
// closure of {0,1,4} and {0,2,7} mod 13; the other differs by a trade of
// four triples.
TripleSystem sts13(Sts13Class which);

// Dispatches on the residue of n. n == 1 gives the empty system.
TripleSystem generate_sts(int n);

// Kirkman system: resolvable STS. Shipped for v in {9, 21, 33};
// 21 and 33 were found once by kts_search and frozen below.
TripleSystem kts(int v);

// Randomized class-by-class search for a resolvable STS(v).
TripleSystem kts_search(int v, std::uint64_t seed = kDefaultSeed,
                        long long max_steps = 40'000'000);

// Left = points, right = triples; one edge per incidence. Left degree is
// (order-1)/2, right degree 3.
BipartiteGraph incidence_graph(const TripleSystem& s);

// Point bijection mapping the triples of a onto the triples of b, if any.
std::optional<std::vector<int>> sts_isomorphism(const TripleSystem& a,
                                                const TripleSystem& b);

TripleSystem relabel(const TripleSystem& s, std::span<const int> map);

}  // namespace sunweave

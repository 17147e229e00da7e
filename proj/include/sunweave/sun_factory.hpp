#pragma once

#include <cstdint>
#include <filesystem>
#include <string_view>
#include <vector>

#include "sunweave/design.hpp"
#include "sunweave/triple_system.hpp"

namespace sunweave {

// 3-sun systems of order m exist iff m == 0, 1, 4 or 9 (mod 12); the lone
// exception is m = 4 itself, too small to hold a six-vertex block.
bool sun_order_admissible(int m);

// Cache location: $SUNWEAVE_CACHE_DIR, else ~/.cache/sunweave.
std::filesystem::path sun_cache_dir();

// Sun decomposition of K_m. Randomized local search with restarts, plus an
// exhaustive fallback for m <= 16. Results are cached on disk keyed by m;
// cached designs are re-verified before use.
Design sun_system(int m, std::uint64_t seed = kDefaultSeed);
Design sun_system_uncached(int m, std::uint64_t seed = kDefaultSeed);

// {bull, sun} decomposition of K_u for u = 12k+h, h in {5,8,9,12}, k >= 3,
// built from fixed base-block orbits. Its 2-degree profile is exactly
// bull_sun_expected_d2: 2 at 6k, 3 at {0, 4k+1, 6k+1, 6k+2}, 4 elsewhere.
Design bull_sun_design(int k, int h);
std::vector<int> bull_sun_expected_d2(int k, int h);

// Grouped block partition of K_modulus. Groups drive the matching
// completion: group j absorbs one matching, one edge ending at each of its
// degree-2 slots. A vertex appears at most once as a degree-2 slot per group.
struct GroupedPartition {
    int modulus = 0;
    std::vector<std::vector<Block>> groups;

    std::vector<Block> all_blocks() const;
    // Per group: degree-2 slot labels of its blocks, block order, kept flat
    // so slot r of group j corresponds to one concrete block vertex.
    std::vector<std::vector<int>> degree2_slots() const;
};

// Hand-built partitions for n in {21, 31, 37, 45, 55, 61, 69}, on
// modulus (n+3)/2 points. Group degree-2 slot sets are duplicate-free.
GroupedPartition fixed_grouped_partition(int n);

// Fully worked small embeddings: the system, the host design, and the
// triple -> sun map. For n = 13 both point classes are covered.
struct EmbeddingTable {
    TripleSystem sts;
    Design design;
    std::vector<int> sun_of_triple;
};

EmbeddingTable embedding_table_sts7();
EmbeddingTable embedding_table_sts9();
EmbeddingTable embedding_table_sts13(Sts13Class which);

// The shipped block lists in text form, one block per line. The leading
// blocks whose triangles realize the embedded system come first.
std::string_view embedding_table_text(int n);

}  // namespace sunweave

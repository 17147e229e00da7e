#pragma once

#include <cstdint>
#include <vector>

#include "sunweave/bipartite.hpp"
#include "sunweave/design.hpp"
#include "sunweave/sun_factory.hpp"
#include "sunweave/triple_system.hpp"

namespace sunweave {

// Minimum number of extra points that lets an STS(n) embed into a 3-sun
// system of order n + u. Equals (n-1)/2 for n == 1,3,9,19 (mod 24) and
// (n+3)/2 for n == 7,13,15,21 (mod 24), with four small exceptions:
// u_min(3)=6, u_min(7)=6, u_min(9)=7, u_min(13)=11. u_min(1)=0.
int u_min(int n);

// An embedding witness. The design lives on points 0..n+u-1 with the
// system's points 0..n-1; sun_of_triple[i] is the design block whose
// triangle equals triple i.
struct EmbeddingCertificate {
    TripleSystem sts;
    int u = 0;
    Design design;
    std::vector<int> sun_of_triple;
};

struct EmbeddingReport {
    bool ok = false;
    std::vector<std::string> violations;
};

// Re-derives every claim of the certificate: the system is an STS, the
// design is a 3-sun decomposition of the complete graph on n+u points, the
// map matches triples to triangles bijectively into the blocks, u clears
// the parity lower bound, and u == u_min(n).
EmbeddingReport verify_embedding(const EmbeddingCertificate& c);

struct EmbedOptions {
    std::uint64_t seed = kDefaultSeed;
    // Attempts at re-running the matching redistribution when the missing
    // graph refuses to split along the group requirements.
    int completion_retries = 64;
};

// Delta+ coloring of the incidence graph turned into a partial design:
// triple t becomes a sun whose tips name the matchings covering t.
struct PartialEmbedding {
    Design design;  // partial, on n + matchings.parts.size() points
    BipartiteGraph incidence;
    MatchingPartition matchings;
    std::vector<Block> image_suns;  // one per triple, same order
};

PartialEmbedding partial_embed(const TripleSystem& s);

// Attaches one matching edge to every degree-2 slot of each group, turning
// triangles into kites/bulls/suns and kites/bulls into suns. Blocks are
// shifted by label_offset; matching left endpoints stay put.
std::vector<Block> complete_blocks_with_matchings(
    const GroupedPartition& groups, const BipartiteGraph& missing,
    const std::vector<std::vector<int>>& group_matchings, int label_offset);

// Pairs two parallel classes of a resolvable system into suns: each
// triangle of q donates its edges as pendants hung on triangles of p.
std::vector<Block> pair_classes_to_suns(
    std::span<const std::array<int, 3>> p_class,
    std::span<const std::array<int, 3>> q_class);

// Construction routes. embed() dispatches; each route is also callable
// directly when the order qualifies.
EmbeddingCertificate embed(const TripleSystem& s, const EmbedOptions& opts = {});

// u = (n-1)/2: matchings become pendant tips, a 3-sun system fills K_u.
EmbeddingCertificate embed_via_sun_system(const TripleSystem& s,
                                          const EmbedOptions& opts = {});
// u = (n+3)/2 >= 79 route: bull/sun decomposition of K_u completed to suns.
EmbeddingCertificate embed_via_bull_design(const TripleSystem& s,
                                           const EmbedOptions& opts = {});
// n in {15, 39, 63}: grouped partition carved out of a Kirkman system
// on (n+3)/2 points.
EmbeddingCertificate embed_via_kirkman(const TripleSystem& s,
                                       const EmbedOptions& opts = {});
// n in {21, 31, 37, 45, 55, 61, 69}: shipped grouped partitions.
EmbeddingCertificate embed_via_fixed_partition(const TripleSystem& s,
                                               const EmbedOptions& opts = {});
// n in {3, 7, 9, 13}: stock tables (n=3: a relabeled sun system of order 9).
EmbeddingCertificate embed_small_order(const TripleSystem& s,
                                       const EmbedOptions& opts = {});

}  // namespace sunweave

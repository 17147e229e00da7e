#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "sunweave/common.hpp"

namespace sunweave {

// Bipartite multigraph. Edges are (left, right) pairs; parallel edges are
// allowed and kept distinct by index.
struct BipartiteGraph {
    int left = 0;
    int right = 0;
    std::vector<std::pair<int, int>> edges;

    void add_edge(int l, int r);
    std::vector<int> left_degrees() const;
    std::vector<int> right_degrees() const;
    int max_degree() const;
};

// Pairwise disjoint matchings of one graph, stored as edge-index lists.
struct MatchingPartition {
    std::vector<std::vector<int>> parts;

    std::vector<int> part_sizes() const;
    std::size_t total_edges() const;
};

bool is_matching(const BipartiteGraph& g, std::span<const int> edge_ids);

// Left vertices missed by the given matching, ascending.
std::vector<int> unsaturated_left(const BipartiteGraph& g,
                                  std::span<const int> edge_ids);

// Proper edge coloring with max_degree colors, found by alternating-path
// recoloring. Every part is a matching; every vertex of full degree is
// saturated by every part.
MatchingPartition konig_edge_coloring(const BipartiteGraph& g);

// Given disjoint matchings with |m| > |n|, flips one alternating component
// of their union to move a single edge from m to n. Returns the new pair.
std::pair<std::vector<int>, std::vector<int>> rebalance_pair(
    const BipartiteGraph& g, std::span<const int> m, std::span<const int> n);

// Reshapes a partition into target_sizes.size() disjoint matchings whose
// sizes match target_sizes exactly, by repeated single-edge transfers.
// Largest targets are filled first from the largest parts, so the call
// succeeds whenever the sorted part sizes dominate the sorted targets
// prefix-wise (always true for a konig coloring of a graph whose maximum
// degree does not exceed the part count); otherwise throws SearchError.
MatchingPartition redistribute_to_profile(const BipartiteGraph& g,
                                          const MatchingPartition& base,
                                          std::span<const int> target_sizes,
                                          std::uint64_t seed = kDefaultSeed);

struct SaturatingMatching {
    // Edge ids of a matching saturating every requested right vertex, or
    // nullopt together with a Hall violator drawn from the targets.
    std::optional<std::vector<int>> edge_ids;
    std::vector<int> hall_witness;
};

SaturatingMatching saturating_matching(const BipartiteGraph& g,
                                       std::span<const int> right_targets);

// Splits the edge set into requirements.size() matchings where matching j
// covers each right vertex listed in requirements[j] exactly once and no
// other right vertex. Right vertices may repeat across requirement sets but
// not within one. Throws SearchError when no split exists.
std::vector<std::vector<int>> partition_missing_graph(
    const BipartiteGraph& g, const std::vector<std::vector<int>>& requirements);

}  // namespace sunweave

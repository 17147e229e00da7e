#pragma once

#include <optional>
#include <string>

#include "sunweave/block.hpp"

namespace sunweave {

// A set of blocks claimed to partition the edge set of a host graph on
// points 0..points-1. The host is the complete graph unless host_edges is
// set. A partial design may leave host edges uncovered; covering an edge
// twice is never allowed.
struct Design {
    int points = 0;
    std::optional<std::vector<Edge>> host_edges;
    bool partial = false;
    std::vector<Block> blocks;

    bool complete_host() const { return !host_edges.has_value(); }
    // Materialized host edge list, sorted.
    std::vector<Edge> host() const;
};

struct DecompositionReport {
    bool ok = false;
    std::vector<Edge> missing;     // host edges covered zero times
    std::vector<Edge> duplicated;  // edges covered more than once
    std::vector<Edge> foreign;     // covered edges outside the host
    std::vector<std::string> problems;  // malformed blocks, label range errors

    std::string summary() const;
};

// Exact multiset comparison of the blocks' edges against the host.
// Makes no assumption about how the design was produced.
DecompositionReport verify_decomposition(const Design& d);

// d2[x] = number of blocks in which x has degree exactly 2.
std::vector<int> two_degree_profile(const Design& d);
std::vector<int> two_degree_profile(std::span<const Block> blocks, int points);

// map must be a permutation of 0..d.points-1.
Design relabel(const Design& d, std::span<const int> map);

}  // namespace sunweave

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string_view>
#include <vector>

namespace sunweave {

// Unordered vertex pair, stored with a < b.
struct Edge {
    int a = 0;
    int b = 0;
    auto operator<=>(const Edge&) const = default;
};

// Canonicalizes the endpoint order. Loops are rejected.
Edge edge(int x, int y);

struct MalformedBlock : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

enum class BlockKind : std::uint8_t { triangle, kite, bull, sun };

int vertex_count(BlockKind k);
std::string_view kind_name(BlockKind k);
BlockKind kind_from_name(std::string_view name);

// A triangle plus 0..3 pendant edges, written the usual way:
//   triangle (a,b,c)
//   kite     (a,b,c; d)       pendant {c,d}
//   bull     (a,b,c; d,e)     pendants {b,d}, {c,e}
//   sun      (a,b,c; d,e,f)   pendants {a,d}, {b,e}, {c,f}
// Only the first vertex_count(kind) entries of v are meaningful.
struct Block {
    BlockKind kind = BlockKind::triangle;
    std::array<int, 6> v{};

    std::span<const int> vertices() const {
        return {v.data(), static_cast<std::size_t>(vertex_count(kind))};
    }
    std::array<int, 3> triangle_vertices() const { return {v[0], v[1], v[2]}; }
    bool operator==(const Block&) const = default;
};

Block triangle(int a, int b, int c);
Block kite(int a, int b, int c, int d);
Block bull(int a, int b, int c, int d, int e);
Block sun(int a, int b, int c, int d, int e, int f);
Block make_block(BlockKind kind, std::span<const int> labels);

// Edges in a fixed order: the three triangle edges, then the pendants.
std::vector<Edge> block_edges(const Block& b);

// Vertices of degree exactly 2 inside the block, ascending.
// triangle: a,b,c   kite: a,b   bull: a   sun: none
std::vector<int> degree2_vertices(const Block& b);

// Adds shift to every label mod modulus. Throws if labels collide.
Block translate(const Block& b, int shift, int modulus);

// map[old] = new; every label of b must index into map.
Block relabel(const Block& b, std::span<const int> map);

// Translates base by each shift in turn. Base labels must lie in Z_modulus.
std::vector<Block> orbit_expand(const Block& base, int modulus,
                                std::span<const int> shifts);

// All modulus translates 0..modulus-1.
std::vector<Block> orbit_expand(const Block& base, int modulus);

}  // namespace sunweave

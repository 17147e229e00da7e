#include "sunweave/block.hpp"

#include <algorithm>
#include <string>

namespace sunweave {

Edge edge(int x, int y) {
    if (x == y) throw MalformedBlock("edge endpoints coincide: " + std::to_string(x));
    if (x > y) std::swap(x, y);
    return Edge{x, y};
}

int vertex_count(BlockKind k) {
    switch (k) {
        case BlockKind::triangle: return 3;
        case BlockKind::kite: return 4;
        case BlockKind::bull: return 5;
        case BlockKind::sun: return 6;
    }
    return 0;
}

std::string_view kind_name(BlockKind k) {
    switch (k) {
        case BlockKind::triangle: return "triangle";
        case BlockKind::kite: return "kite";
        case BlockKind::bull: return "bull";
        case BlockKind::sun: return "sun";
    }
    return "?";
}

BlockKind kind_from_name(std::string_view name) {
    if (name == "triangle") return BlockKind::triangle;
    if (name == "kite") return BlockKind::kite;
    if (name == "bull") return BlockKind::bull;
    if (name == "sun") return BlockKind::sun;
    throw MalformedBlock("unknown block kind: " + std::string(name));
}

namespace {

void check_block(const Block& b) {
    auto vs = b.vertices();
    for (std::size_t i = 0; i < vs.size(); ++i) {
        if (vs[i] < 0)
            throw MalformedBlock("negative label " + std::to_string(vs[i]));
        for (std::size_t j = i + 1; j < vs.size(); ++j)
            if (vs[i] == vs[j])
                throw MalformedBlock("repeated label " + std::to_string(vs[i]) +
                                     " in " + std::string(kind_name(b.kind)));
    }
}

}  // namespace

Block make_block(BlockKind kind, std::span<const int> labels) {
    if (static_cast<int>(labels.size()) != vertex_count(kind))
        throw MalformedBlock(std::string(kind_name(kind)) + " needs " +
                             std::to_string(vertex_count(kind)) + " labels, got " +
                             std::to_string(labels.size()));
    Block b;
    b.kind = kind;
    std::copy(labels.begin(), labels.end(), b.v.begin());
    check_block(b);
    return b;
}

Block triangle(int a, int b, int c) {
    const int v[] = {a, b, c};
    return make_block(BlockKind::triangle, v);
}

Block kite(int a, int b, int c, int d) {
    const int v[] = {a, b, c, d};
    return make_block(BlockKind::kite, v);
}

Block bull(int a, int b, int c, int d, int e) {
    const int v[] = {a, b, c, d, e};
    return make_block(BlockKind::bull, v);
}

Block sun(int a, int b, int c, int d, int e, int f) {
    const int v[] = {a, b, c, d, e, f};
    return make_block(BlockKind::sun, v);
}

std::vector<Edge> block_edges(const Block& b) {
    std::vector<Edge> out;
    out.reserve(6);
    out.push_back(edge(b.v[0], b.v[1]));
    out.push_back(edge(b.v[1], b.v[2]));
    out.push_back(edge(b.v[2], b.v[0]));
    switch (b.kind) {
        case BlockKind::triangle: break;
        case BlockKind::kite:
            out.push_back(edge(b.v[2], b.v[3]));
            break;
        case BlockKind::bull:
            out.push_back(edge(b.v[1], b.v[3]));
            out.push_back(edge(b.v[2], b.v[4]));
            break;
        case BlockKind::sun:
            out.push_back(edge(b.v[0], b.v[3]));
            out.push_back(edge(b.v[1], b.v[4]));
            out.push_back(edge(b.v[2], b.v[5]));
            break;
    }
    return out;
}

std::vector<int> degree2_vertices(const Block& b) {
    std::vector<int> out;
    switch (b.kind) {
        case BlockKind::triangle: out = {b.v[0], b.v[1], b.v[2]}; break;
        case BlockKind::kite: out = {b.v[0], b.v[1]}; break;
        case BlockKind::bull: out = {b.v[0]}; break;
        case BlockKind::sun: break;
    }
    std::sort(out.begin(), out.end());
    return out;
}

Block translate(const Block& b, int shift, int modulus) {
    if (modulus <= 0) throw MalformedBlock("modulus must be positive");
    Block out = b;
    for (int i = 0; i < vertex_count(b.kind); ++i) {
        int x = (b.v[i] + shift) % modulus;
        if (x < 0) x += modulus;
        out.v[i] = x;
    }
    check_block(out);
    return out;
}

Block relabel(const Block& b, std::span<const int> map) {
    Block out = b;
    for (int i = 0; i < vertex_count(b.kind); ++i) {
        int x = b.v[i];
        if (x < 0 || static_cast<std::size_t>(x) >= map.size())
            throw MalformedBlock("label " + std::to_string(x) + " outside the relabel map");
        out.v[i] = map[x];
    }
    check_block(out);
    return out;
}

std::vector<Block> orbit_expand(const Block& base, int modulus,
                                std::span<const int> shifts) {
    std::vector<Block> out;
    out.reserve(shifts.size());
    for (int s : shifts) out.push_back(translate(base, s, modulus));
    return out;
}

std::vector<Block> orbit_expand(const Block& base, int modulus) {
    std::vector<int> shifts(modulus);
    for (int i = 0; i < modulus; ++i) shifts[i] = i;
    return orbit_expand(base, modulus, shifts);
}

}  // namespace sunweave

#include "sunweave/design.hpp"

#include <algorithm>
#include <map>
#include <sstream>

namespace sunweave {

std::vector<Edge> Design::host() const {
    std::vector<Edge> out;
    if (host_edges) {
        out = *host_edges;
    } else {
        out.reserve(static_cast<std::size_t>(points) * (points - 1) / 2);
        for (int a = 0; a < points; ++a)
            for (int b = a + 1; b < points; ++b) out.push_back(Edge{a, b});
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::string DecompositionReport::summary() const {
    std::ostringstream os;
    os << (ok ? "ok" : "not a decomposition");
    if (!missing.empty()) os << "; " << missing.size() << " host edges uncovered";
    if (!duplicated.empty()) os << "; " << duplicated.size() << " edges covered twice";
    if (!foreign.empty()) os << "; " << foreign.size() << " edges outside the host";
    for (const auto& p : problems) os << "; " << p;
    return os.str();
}

DecompositionReport verify_decomposition(const Design& d) {
    DecompositionReport rep;
    if (d.points < 0) {
        rep.problems.push_back("negative point count");
        return rep;
    }

    std::vector<Edge> covered;
    for (std::size_t i = 0; i < d.blocks.size(); ++i) {
        const Block& b = d.blocks[i];
        bool in_range = true;
        for (int x : b.vertices())
            if (x < 0 || x >= d.points) {
                rep.problems.push_back("block " + std::to_string(i) + ": label " +
                                       std::to_string(x) + " outside 0.." +
                                       std::to_string(d.points - 1));
                in_range = false;
            }
        if (!in_range) continue;
        try {
            for (Edge e : block_edges(b)) covered.push_back(e);
        } catch (const MalformedBlock& mb) {
            rep.problems.push_back("block " + std::to_string(i) + ": " + mb.what());
        }
    }
    std::sort(covered.begin(), covered.end());

    std::vector<Edge> host = d.host();
    if (d.host_edges) {
        for (const Edge& e : host)
            if (e.a < 0 || e.b >= d.points || e.a >= e.b)
                rep.problems.push_back("host edge outside the point range");
    }

    // Merge walk over two sorted lists; host edges are distinct by contract.
    std::size_t ci = 0;
    for (std::size_t hi = 0; hi < host.size(); ++hi) {
        if (hi + 1 < host.size() && host[hi + 1] == host[hi]) {
            rep.problems.push_back("host edge listed twice");
            continue;
        }
        while (ci < covered.size() && covered[ci] < host[hi]) {
            rep.foreign.push_back(covered[ci]);
            while (ci + 1 < covered.size() && covered[ci + 1] == covered[ci]) ++ci;
            ++ci;
        }
        if (ci < covered.size() && covered[ci] == host[hi]) {
            ++ci;
            if (ci < covered.size() && covered[ci] == host[hi]) {
                rep.duplicated.push_back(host[hi]);
                while (ci < covered.size() && covered[ci] == host[hi]) ++ci;
            }
        } else {
            rep.missing.push_back(host[hi]);
        }
    }
    while (ci < covered.size()) {
        rep.foreign.push_back(covered[ci]);
        while (ci + 1 < covered.size() && covered[ci + 1] == covered[ci]) ++ci;
        ++ci;
    }

    rep.ok = rep.duplicated.empty() && rep.foreign.empty() && rep.problems.empty() &&
             (d.partial || rep.missing.empty());
    return rep;
}

std::vector<int> two_degree_profile(std::span<const Block> blocks, int points) {
    std::vector<int> d2(points, 0);
    for (const Block& b : blocks)
        for (int x : degree2_vertices(b)) {
            if (x < 0 || x >= points)
                throw std::out_of_range("block label outside the point range");
            ++d2[x];
        }
    return d2;
}

std::vector<int> two_degree_profile(const Design& d) {
    return two_degree_profile(d.blocks, d.points);
}

Design relabel(const Design& d, std::span<const int> map) {
    if (static_cast<int>(map.size()) != d.points)
        throw std::invalid_argument("relabel map size differs from the point count");
    std::vector<char> hit(d.points, 0);
    for (int x : map) {
        if (x < 0 || x >= d.points || hit[x])
            throw std::invalid_argument("relabel map is not a permutation");
        hit[x] = 1;
    }
    Design out;
    out.points = d.points;
    out.partial = d.partial;
    if (d.host_edges) {
        out.host_edges.emplace();
        out.host_edges->reserve(d.host_edges->size());
        for (const Edge& e : *d.host_edges)
            out.host_edges->push_back(edge(map[e.a], map[e.b]));
    }
    out.blocks.reserve(d.blocks.size());
    for (const Block& b : d.blocks) out.blocks.push_back(relabel(b, map));
    return out;
}

}  // namespace sunweave

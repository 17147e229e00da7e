#include "sunweave/bipartite.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <string>

namespace sunweave {

void BipartiteGraph::add_edge(int l, int r) {
    if (l < 0 || l >= left || r < 0 || r >= right)
        throw std::invalid_argument("edge endpoint outside the vertex ranges");
    edges.emplace_back(l, r);
}

std::vector<int> BipartiteGraph::left_degrees() const {
    std::vector<int> d(left, 0);
    for (auto [l, r] : edges) ++d[l];
    return d;
}

std::vector<int> BipartiteGraph::right_degrees() const {
    std::vector<int> d(right, 0);
    for (auto [l, r] : edges) ++d[r];
    return d;
}

int BipartiteGraph::max_degree() const {
    int m = 0;
    for (int d : left_degrees()) m = std::max(m, d);
    for (int d : right_degrees()) m = std::max(m, d);
    return m;
}

std::vector<int> MatchingPartition::part_sizes() const {
    std::vector<int> s;
    s.reserve(parts.size());
    for (const auto& p : parts) s.push_back(static_cast<int>(p.size()));
    return s;
}

std::size_t MatchingPartition::total_edges() const {
    std::size_t n = 0;
    for (const auto& p : parts) n += p.size();
    return n;
}

bool is_matching(const BipartiteGraph& g, std::span<const int> edge_ids) {
    std::vector<char> l(g.left, 0), r(g.right, 0);
    for (int id : edge_ids) {
        if (id < 0 || static_cast<std::size_t>(id) >= g.edges.size()) return false;
        auto [a, b] = g.edges[id];
        if (l[a] || r[b]) return false;
        l[a] = r[b] = 1;
    }
    return true;
}

std::vector<int> unsaturated_left(const BipartiteGraph& g,
                                  std::span<const int> edge_ids) {
    std::vector<char> hit(g.left, 0);
    for (int id : edge_ids) hit[g.edges[id].first] = 1;
    std::vector<int> out;
    for (int x = 0; x < g.left; ++x)
        if (!hit[x]) out.push_back(x);
    return out;
}

MatchingPartition konig_edge_coloring(const BipartiteGraph& g) {
    const int delta = g.max_degree();
    MatchingPartition mp;
    mp.parts.assign(std::max(delta, 0), {});
    if (g.edges.empty()) return mp;

    const int n = g.left + g.right;  // right vertex r lives at g.left + r
    // slot[v][c] = edge currently colored c at v, or -1
    std::vector<std::vector<int>> slot(n, std::vector<int>(delta, -1));
    std::vector<int> color(g.edges.size(), -1);

    auto vert_l = [&](int e) { return g.edges[e].first; };
    auto vert_r = [&](int e) { return g.left + g.edges[e].second; };

    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e) {
        const int x = vert_l(e), y = vert_r(e);
        int a = -1, b = -1;  // a free at x, b free at y
        for (int c = 0; c < delta; ++c) {
            if (a == -1 && slot[x][c] == -1) a = c;
            if (b == -1 && slot[y][c] == -1) b = c;
        }
        if (slot[y][a] != -1) {
            // Swap colors a and b along the alternating chain out of y. The
            // (a,b)-subgraph has max degree 2 and y misses color b, so the
            // chain is a path; it cannot reach x, which misses color a.
            std::vector<int> chain;
            int v = y, want = a;
            while (slot[v][want] != -1) {
                int f = slot[v][want];
                chain.push_back(f);
                v = vert_l(f) == v ? vert_r(f) : vert_l(f);
                want = want == a ? b : a;
            }
            for (int f : chain) {
                slot[vert_l(f)][color[f]] = -1;
                slot[vert_r(f)][color[f]] = -1;
            }
            for (int f : chain) {
                color[f] = color[f] == a ? b : a;
                slot[vert_l(f)][color[f]] = f;
                slot[vert_r(f)][color[f]] = f;
            }
        }
        slot[x][a] = e;
        slot[y][a] = e;
        color[e] = a;
    }
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        mp.parts[color[e]].push_back(e);
    return mp;
}

namespace {

void check_disjoint_matchings(const BipartiteGraph& g, std::span<const int> m,
                              std::span<const int> n) {
    if (!is_matching(g, m) || !is_matching(g, n))
        throw std::invalid_argument("rebalance_pair expects two matchings");
    std::vector<char> used(g.edges.size(), 0);
    for (int id : m) used[id] = 1;
    for (int id : n)
        if (used[id]) throw std::invalid_argument("matchings share an edge");
}

// Components of the union of two disjoint matchings are alternating paths
// and even cycles, so per component the counts differ by at most one.
// Returns edge ids of one component holding more m-edges than n-edges.
std::vector<int> heavier_component(const BipartiteGraph& g,
                                   std::span<const int> m,
                                   std::span<const int> n) {
    const int nv = g.left + g.right;
    std::vector<int> at_m(nv, -1), at_n(nv, -1);
    auto ends = [&](int id) {
        return std::pair<int, int>{g.edges[id].first, g.left + g.edges[id].second};
    };
    for (int id : m) {
        auto [a, b] = ends(id);
        at_m[a] = at_m[b] = id;
    }
    for (int id : n) {
        auto [a, b] = ends(id);
        at_n[a] = at_n[b] = id;
    }
    std::vector<char> seen_v(nv, 0);
    for (int start = 0; start < nv; ++start) {
        if (seen_v[start] || (at_m[start] == -1 && at_n[start] == -1)) continue;
        int balance = 0;
        std::vector<int> stack{start};
        std::vector<int> comp_edges;
        seen_v[start] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            for (int id : {at_m[v], at_n[v]}) {
                if (id == -1) continue;
                auto [a, b] = ends(id);
                int w = a == v ? b : a;
                bool dup = false;
                for (int c : comp_edges)
                    if (c == id) dup = true;
                if (dup) continue;
                comp_edges.push_back(id);
                balance += (at_m[a] == id) ? 1 : -1;
                if (!seen_v[w]) {
                    seen_v[w] = 1;
                    stack.push_back(w);
                }
            }
        }
        if (balance > 0) return comp_edges;
    }
    return {};
}

}  // namespace

std::pair<std::vector<int>, std::vector<int>> rebalance_pair(
    const BipartiteGraph& g, std::span<const int> m, std::span<const int> n) {
    check_disjoint_matchings(g, m, n);
    if (m.size() <= n.size())
        throw std::invalid_argument("rebalance_pair needs |m| > |n|");

    std::vector<int> comp = heavier_component(g, m, n);
    if (comp.empty()) throw std::logic_error("no component favors the larger matching");

    std::vector<char> flip(g.edges.size(), 0);
    for (int id : comp) flip[id] = 1;
    std::vector<int> m2, n2;
    m2.reserve(m.size() - 1);
    n2.reserve(n.size() + 1);
    for (int id : m)
        (flip[id] ? n2 : m2).push_back(id);
    for (int id : n)
        (flip[id] ? m2 : n2).push_back(id);
    std::sort(m2.begin(), m2.end());
    std::sort(n2.begin(), n2.end());
    if (!is_matching(g, m2) || !is_matching(g, n2))
        throw std::logic_error("component flip broke a matching");
    if (m2.size() != m.size() - 1 || n2.size() != n.size() + 1)
        throw std::logic_error("component flip moved more than one edge");
    return {std::move(m2), std::move(n2)};
}

MatchingPartition redistribute_to_profile(const BipartiteGraph& g,
                                          const MatchingPartition& base,
                                          std::span<const int> target_sizes,
                                          std::uint64_t seed) {
    const std::size_t k = target_sizes.size();
    if (k < base.parts.size())
        throw std::invalid_argument("cannot shrink the number of parts");
    long long want = 0;
    for (int t : target_sizes) {
        if (t < 0) throw std::invalid_argument("negative target size");
        want += t;
    }
    if (want != static_cast<long long>(base.total_edges()))
        throw std::invalid_argument("target sizes do not sum to the edge count");

    std::vector<std::vector<int>> parts = base.parts;
    parts.resize(k);

    // A flip only moves an edge from a strictly larger part to a strictly
    // smaller one, so the maximum part size never grows. Serving the largest
    // target first and freezing the part that fills it keeps the big parts
    // from being drained below a size some unfilled slot still needs (that
    // loss is irreversible and was the failure mode of naive pairing).
    std::vector<int> slots(k);
    std::iota(slots.begin(), slots.end(), 0);
    std::stable_sort(slots.begin(), slots.end(),
                     [&](int a, int b) { return target_sizes[a] > target_sizes[b]; });

    std::mt19937_64 rng(seed);
    std::vector<char> frozen(k, 0);
    std::vector<int> part_of_slot(k, -1);
    for (int slot : slots) {
        const std::size_t target = static_cast<std::size_t>(target_sizes[slot]);
        // Claim the largest unfrozen part; the seed only breaks ties.
        int pick = -1;
        int ties = 0;
        for (std::size_t p = 0; p < k; ++p) {
            if (frozen[p]) continue;
            if (pick == -1 || parts[p].size() > parts[pick].size()) {
                pick = static_cast<int>(p);
                ties = 1;
            } else if (parts[p].size() == parts[pick].size() &&
                       rng() % static_cast<std::uint64_t>(++ties) == 0) {
                pick = static_cast<int>(p);
            }
        }
        if (pick == -1 || parts[pick].size() < target)
            throw SearchError(
                "matching redistribution cannot reach the requested profile: "
                "part sizes fall short of the remaining targets");
        while (parts[pick].size() > target) {
            // Donate to the smallest unfrozen part. One always exists below
            // the donor: unfrozen sizes sum to the unfilled targets, all of
            // which are at most `target` < the donor's size.
            int recv = -1;
            for (std::size_t p = 0; p < k; ++p) {
                if (frozen[p] || static_cast<int>(p) == pick) continue;
                if (recv == -1 || parts[p].size() < parts[recv].size())
                    recv = static_cast<int>(p);
            }
            if (recv == -1 || parts[recv].size() >= parts[pick].size())
                throw std::logic_error("redistribution lost its donation target");
            auto flipped = rebalance_pair(g, parts[pick], parts[recv]);
            parts[pick] = std::move(flipped.first);
            parts[recv] = std::move(flipped.second);
        }
        frozen[pick] = 1;
        part_of_slot[slot] = pick;
    }

    MatchingPartition out;
    out.parts.resize(k);
    for (std::size_t i = 0; i < k; ++i) out.parts[i] = std::move(parts[part_of_slot[i]]);
    for (std::size_t i = 0; i < k; ++i)
        if (!is_matching(g, out.parts[i]) ||
            static_cast<int>(out.parts[i].size()) != target_sizes[i])
            throw std::logic_error("redistribution produced a wrong part");
    return out;
}

SaturatingMatching saturating_matching(const BipartiteGraph& g,
                                       std::span<const int> right_targets) {
    std::vector<std::vector<int>> adj(g.right);  // right -> incident edge ids
    for (int e = 0; e < static_cast<int>(g.edges.size()); ++e)
        adj[g.edges[e].second].push_back(e);

    std::vector<int> match_l(g.left, -1);   // left -> edge id
    std::vector<int> match_r(g.right, -1);  // right -> edge id
    std::vector<char> vis_l(g.left, 0);
    std::vector<int> touched_r;

    // Alternating DFS from a right vertex into unmatched left vertices.
    auto augment = [&](auto&& self, int r) -> bool {
        touched_r.push_back(r);
        for (int e : adj[r]) {
            int x = g.edges[e].first;
            if (vis_l[x]) continue;
            vis_l[x] = 1;
            if (match_l[x] == -1 || self(self, g.edges[match_l[x]].second)) {
                match_l[x] = e;
                match_r[r] = e;
                return true;
            }
        }
        return false;
    };

    SaturatingMatching out;
    for (int r : right_targets) {
        if (r < 0 || r >= g.right)
            throw std::invalid_argument("target outside the right vertex range");
        if (match_r[r] != -1) continue;  // repeated target
        std::fill(vis_l.begin(), vis_l.end(), 0);
        touched_r.clear();
        if (!augment(augment, r)) {
            // Right vertices explored by the failed search form a Hall
            // violator: all their left neighbours are matched within it.
            std::sort(touched_r.begin(), touched_r.end());
            touched_r.erase(std::unique(touched_r.begin(), touched_r.end()),
                            touched_r.end());
            out.hall_witness = std::move(touched_r);
            return out;
        }
    }
    std::vector<int> ids;
    for (int r : right_targets)
        if (match_r[r] != -1) ids.push_back(match_r[r]);
    std::sort(ids.begin(), ids.end());
    ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
    out.edge_ids = std::move(ids);
    return out;
}

std::vector<std::vector<int>> partition_missing_graph(
    const BipartiteGraph& g, const std::vector<std::vector<int>>& requirements) {
    const int E = static_cast<int>(g.edges.size());
    const int k = static_cast<int>(requirements.size());

    // need[j][r] = 1 iff requirement j still wants an edge at right vertex r.
    std::vector<std::vector<char>> need(k, std::vector<char>(g.right, 0));
    std::vector<int> demand_r(g.right, 0);
    long long total_need = 0;
    for (int j = 0; j < k; ++j)
        for (int r : requirements[j]) {
            if (r < 0 || r >= g.right)
                throw std::invalid_argument("requirement names a missing right vertex");
            if (need[j][r])
                throw std::invalid_argument("requirement lists a right vertex twice");
            need[j][r] = 1;
            ++demand_r[r];
            ++total_need;
        }
    if (total_need != E)
        throw SearchError("requirement sizes sum to " + std::to_string(total_need) +
                          " but the graph has " + std::to_string(E) + " edges");
    auto rdeg = g.right_degrees();
    for (int r = 0; r < g.right; ++r)
        if (demand_r[r] != rdeg[r])
            throw SearchError("right vertex " + std::to_string(r) + " has degree " +
                              std::to_string(rdeg[r]) + " but demand " +
                              std::to_string(demand_r[r]));

    std::vector<int> assign(E, -1);
    std::vector<std::vector<char>> occupied(k, std::vector<char>(g.left, 0));

    // Candidate groups per edge under the current partial assignment.
    auto candidates = [&](int e) {
        std::vector<int> cs;
        auto [x, r] = g.edges[e];
        for (int j = 0; j < k; ++j)
            if (need[j][r] && !occupied[j][x]) cs.push_back(j);
        return cs;
    };

    long long nodes = 0;
    const long long node_cap = 50'000'000;
    auto dfs = [&](auto&& self) -> bool {
        if (++nodes > node_cap) throw SearchError("missing-graph split exceeded its node budget");
        int best = -1;
        std::vector<int> best_cs;
        for (int e = 0; e < E; ++e) {
            if (assign[e] != -1) continue;
            auto cs = candidates(e);
            if (cs.empty()) return false;
            if (best == -1 || cs.size() < best_cs.size()) {
                best = e;
                best_cs = std::move(cs);
                if (best_cs.size() == 1) break;
            }
        }
        if (best == -1) return true;
        auto [x, r] = g.edges[best];
        for (int j : best_cs) {
            assign[best] = j;
            need[j][r] = 0;
            occupied[j][x] = 1;
            if (self(self)) return true;
            assign[best] = -1;
            need[j][r] = 1;
            occupied[j][x] = 0;
        }
        return false;
    };

    if (!dfs(dfs))
        throw SearchError("no matching split meets the per-group requirements");

    std::vector<std::vector<int>> out(k);
    for (int e = 0; e < E; ++e) out[assign[e]].push_back(e);
    for (int j = 0; j < k; ++j)
        if (out[j].size() != requirements[j].size())
            throw std::logic_error("split lost an edge");
    return out;
}

}  // namespace sunweave

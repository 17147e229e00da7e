#include "sunweave/embedder.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <string>

namespace sunweave {

int u_min(int n) {
    if (!sts_order_admissible(n))
        throw std::invalid_argument("no Steiner triple system of order " +
                                    std::to_string(n));
    switch (n) {
        case 1: return 0;
        case 3: return 6;
        case 7: return 6;
        case 9: return 7;
        case 13: return 11;
        default: break;
    }
    const int r = n % 24;
    if (r == 1 || r == 3 || r == 9 || r == 19) return (n - 1) / 2;
    return (n + 3) / 2;
}

namespace {

int parity_lower_bound(int n) {
    if (n <= 1) return 0;
    const int r = n % 24;
    const bool bumped = r == 7 || r == 13 || r == 15 || r == 21;
    return (n - 1) / 2 + (bumped ? 2 : 0);
}

// Image suns for the triples: triple i keeps its three points and hangs its
// pendant tips on the matchings covering its incidence edges.
std::vector<Block> image_suns_from_parts(const TripleSystem& s,
                                         const BipartiteGraph& incidence,
                                         const MatchingPartition& parts,
                                         int offset) {
    std::vector<int> part_of(incidence.edges.size(), -1);
    for (std::size_t p = 0; p < parts.parts.size(); ++p)
        for (int id : parts.parts[p]) part_of[id] = static_cast<int>(p);
    for (int po : part_of)
        if (po == -1) throw std::logic_error("incidence edge missing from the partition");

    std::vector<Block> suns;
    suns.reserve(s.triples.size());
    for (std::size_t ti = 0; ti < s.triples.size(); ++ti) {
        // incidence edges of triple ti are 3ti, 3ti+1, 3ti+2 in point order
        const auto& t = s.triples[ti];
        int m0 = part_of[3 * ti], m1 = part_of[3 * ti + 1], m2 = part_of[3 * ti + 2];
        if (m0 == m1 || m1 == m2 || m0 == m2)
            throw std::logic_error("triple tips collide: edges at one triple share a part");
        suns.push_back(sun(t[0], t[1], t[2], offset + m0, offset + m1, offset + m2));
    }
    return suns;
}

EmbeddingCertificate assemble(const TripleSystem& s, int u,
                              std::vector<Block> blocks) {
    EmbeddingCertificate cert;
    cert.sts = s;
    cert.u = u;
    cert.design.points = s.order + u;
    cert.design.blocks = std::move(blocks);
    cert.sun_of_triple.resize(s.triples.size());
    std::iota(cert.sun_of_triple.begin(), cert.sun_of_triple.end(), 0);
    return cert;
}

void require_valid_sts(const TripleSystem& s) {
    auto rep = verify_triple_system(s);
    if (!rep.ok)
        throw std::invalid_argument("input is not a Steiner triple system: " +
                                    rep.problems[0]);
}

}  // namespace

PartialEmbedding partial_embed(const TripleSystem& s) {
    require_valid_sts(s);
    if (s.order < 7)
        throw std::invalid_argument("partial embedding needs order at least 7");
    PartialEmbedding pe;
    pe.incidence = incidence_graph(s);
    pe.matchings = konig_edge_coloring(pe.incidence);
    const int delta = (s.order - 1) / 2;
    if (static_cast<int>(pe.matchings.parts.size()) != delta)
        throw std::logic_error("incidence coloring used the wrong number of parts");
    for (const auto& part : pe.matchings.parts)
        if (!unsaturated_left(pe.incidence, part).empty())
            throw std::logic_error("a matching misses a point of full degree");
    pe.image_suns = image_suns_from_parts(s, pe.incidence, pe.matchings, s.order);
    pe.design.points = s.order + delta;
    pe.design.partial = true;
    pe.design.blocks = pe.image_suns;
    return pe;
}

EmbeddingCertificate embed_via_sun_system(const TripleSystem& s,
                                          const EmbedOptions& opts) {
    const int n = s.order;
    const int r = n % 24;
    if (!(r == 1 || r == 3 || r == 9 || r == 19) || n < 19)
        throw std::invalid_argument("order does not qualify for the direct route");
    PartialEmbedding pe = partial_embed(s);
    const int u = (n - 1) / 2;
    Design tail = sun_system(u, opts.seed);
    std::vector<Block> blocks = pe.image_suns;
    std::vector<int> shift(u);
    std::iota(shift.begin(), shift.end(), n);
    for (const Block& b : tail.blocks) blocks.push_back(relabel(b, shift));
    return assemble(s, u, std::move(blocks));
}

std::vector<Block> complete_blocks_with_matchings(
    const GroupedPartition& groups, const BipartiteGraph& missing,
    const std::vector<std::vector<int>>& group_matchings, int label_offset) {
    if (group_matchings.size() != groups.groups.size())
        throw std::invalid_argument("one matching per group is required");
    std::vector<Block> out;
    for (std::size_t j = 0; j < groups.groups.size(); ++j) {
        // tip_at[i]: point attached to design vertex i by this group's matching
        std::map<int, int> tip_at;
        for (int id : group_matchings[j]) {
            auto [x, i] = missing.edges.at(id);
            if (!tip_at.emplace(i, x).second)
                throw std::invalid_argument("matching touches a slot twice");
        }
        for (const Block& b : groups.groups[j]) {
            std::vector<int> tips;
            for (int v : degree2_vertices(b)) {
                auto it = tip_at.find(v);
                if (it == tip_at.end())
                    throw std::invalid_argument("no matching edge for a degree-2 slot");
                tips.push_back(it->second);
                tip_at.erase(it);
            }
            const int o = label_offset;
            switch (b.kind) {
                case BlockKind::triangle: {
                    // degree2_vertices sorts a,b,c; tips follow that order
                    auto d2 = degree2_vertices(b);
                    out.push_back(sun(d2[0] + o, d2[1] + o, d2[2] + o, tips[0],
                                      tips[1], tips[2]));
                    break;
                }
                case BlockKind::kite: {
                    // the old pendant hangs at v[2]; new tips go to v[0], v[1]
                    auto d2 = degree2_vertices(b);
                    out.push_back(sun(d2[0] + o, d2[1] + o, b.v[2] + o, tips[0],
                                      tips[1], b.v[3] + o));
                    break;
                }
                case BlockKind::bull:
                    out.push_back(sun(b.v[0] + o, b.v[1] + o, b.v[2] + o, tips[0],
                                      b.v[3] + o, b.v[4] + o));
                    break;
                case BlockKind::sun:
                    out.push_back(relabel(b, [&] {
                        std::vector<int> m(groups.modulus);
                        std::iota(m.begin(), m.end(), o);
                        return m;
                    }()));
                    break;
            }
        }
        if (!tip_at.empty())
            throw std::invalid_argument("matching has an edge no slot consumes");
    }
    return out;
}

namespace {

// Shared tail for the u = (n+3)/2 routes that carve K_u into grouped
// blocks: reshape the incidence matchings to the partition's 2-degree
// profile, split the missing graph along the groups, and complete.
EmbeddingCertificate complete_with_partition(const TripleSystem& s,
                                             const GroupedPartition& gp,
                                             const EmbedOptions& opts) {
    const int n = s.order;
    const int u = (n + 3) / 2;
    if (gp.modulus != u) throw std::logic_error("partition modulus mismatch");

    std::vector<Block> all = gp.all_blocks();
    std::vector<int> d2 = two_degree_profile(all, u);
    if (std::accumulate(d2.begin(), d2.end(), 0) != 2 * n)
        throw std::logic_error("partition 2-degrees do not sum to 2n");
    {
        Design host;
        host.points = u;
        host.blocks = all;
        auto rep = verify_decomposition(host);
        if (!rep.ok)
            throw std::logic_error("grouped partition is not a decomposition: " +
                                   rep.summary());
    }

    BipartiteGraph inc = incidence_graph(s);
    MatchingPartition base = konig_edge_coloring(inc);
    std::vector<int> targets(u);
    for (int i = 0; i < u; ++i) targets[i] = n - d2[i];
    const auto requirements = gp.degree2_slots();

    std::mt19937_64 rng(opts.seed);
    std::string last_error = "no attempt made";
    for (int attempt = 0; attempt < opts.completion_retries; ++attempt) {
        MatchingPartition shuffled = base;
        if (attempt > 0)
            std::shuffle(shuffled.parts.begin(), shuffled.parts.end(), rng);
        try {
            MatchingPartition parts =
                redistribute_to_profile(inc, shuffled, targets, opts.seed + attempt);

            BipartiteGraph missing;
            missing.left = n;
            missing.right = u;
            for (int i = 0; i < u; ++i)
                for (int x : unsaturated_left(inc, parts.parts[i])) missing.add_edge(x, i);

            auto split = partition_missing_graph(missing, requirements);
            std::vector<Block> blocks = image_suns_from_parts(s, inc, parts, n);
            std::vector<Block> completed =
                complete_blocks_with_matchings(gp, missing, split, n);
            blocks.insert(blocks.end(), completed.begin(), completed.end());
            return assemble(s, u, std::move(blocks));
        } catch (const SearchError& e) {
            last_error = e.what();
        }
    }
    throw SearchError("missing-graph completion failed after " +
                      std::to_string(opts.completion_retries) +
                      " redistributions; last: " + last_error);
}

}  // namespace

std::vector<Block> pair_classes_to_suns(std::span<const std::array<int, 3>> p_class,
                                        std::span<const std::array<int, 3>> q_class) {
    if (p_class.size() != q_class.size())
        throw std::invalid_argument("parallel classes differ in size");
    const int nt = static_cast<int>(p_class.size());

    // Slot = (p triangle, corner). Every point lies in exactly one p
    // triangle, so a q edge {a,b} has exactly two candidate slots: attach at
    // a or at b. Both edge and slot degrees are 2, so the candidate graph is
    // a disjoint union of even cycles and the forced walk below settles it.
    std::map<int, std::pair<int, int>> p_corner;  // point -> (triangle, corner)
    for (int ti = 0; ti < nt; ++ti)
        for (int c = 0; c < 3; ++c) {
            if (!p_corner.emplace(p_class[ti][c], std::make_pair(ti, c)).second)
                throw std::invalid_argument("first class repeats a point");
        }

    struct QEdge {
        int a, b;  // attach candidates: at a or at b
    };
    std::vector<QEdge> edges;
    for (const auto& t : q_class) {
        edges.push_back({t[0], t[1]});
        edges.push_back({t[0], t[2]});
        edges.push_back({t[1], t[2]});
    }
    std::vector<int> attach(edges.size(), -1);  // chosen attach point
    std::map<int, int> edge_at_point;           // attach point -> edge index
    std::map<int, std::vector<int>> edges_of_point;
    for (std::size_t e = 0; e < edges.size(); ++e) {
        edges_of_point[edges[e].a].push_back(static_cast<int>(e));
        edges_of_point[edges[e].b].push_back(static_cast<int>(e));
    }
    for (const auto& [pt, es] : edges_of_point)
        if (es.size() != 2)
            throw std::invalid_argument("second class is not a parallel class");

    for (std::size_t e0 = 0; e0 < edges.size(); ++e0) {
        if (attach[e0] != -1) continue;
        int e = static_cast<int>(e0);
        int at = edges[e].a;
        while (attach[e] == -1) {
            attach[e] = at;
            edge_at_point[at] = e;
            // The other edge touching `at` may no longer use it.
            const auto& es = edges_of_point[at];
            int other = es[0] == e ? es[1] : es[0];
            if (attach[other] != -1) break;
            e = other;
            at = edges[e].a == at ? edges[e].b : edges[e].a;
        }
    }

    std::vector<std::array<int, 3>> tips(nt, {-1, -1, -1});
    for (std::size_t e = 0; e < edges.size(); ++e) {
        int at = attach[e];
        int tip = edges[e].a == at ? edges[e].b : edges[e].a;
        auto it = p_corner.find(at);
        if (it == p_corner.end())
            throw std::invalid_argument("classes cover different point sets");
        auto [ti, corner] = it->second;
        if (tips[ti][corner] != -1)
            throw std::logic_error("two pendants landed on one corner");
        tips[ti][corner] = tip;
    }
    std::vector<Block> suns;
    for (int ti = 0; ti < nt; ++ti) {
        for (int c = 0; c < 3; ++c)
            if (tips[ti][c] == -1) throw std::logic_error("corner left bare");
        suns.push_back(sun(p_class[ti][0], p_class[ti][1], p_class[ti][2],
                           tips[ti][0], tips[ti][1], tips[ti][2]));
    }
    return suns;
}

EmbeddingCertificate embed_via_kirkman(const TripleSystem& s,
                                       const EmbedOptions& opts) {
    const int n = s.order;
    if (n % 24 != 15)
        throw std::invalid_argument("the Kirkman route needs n == 15 (mod 24)");
    require_valid_sts(s);
    const int u = (n + 3) / 2;
    TripleSystem K = kts(u);

    auto class_triples = [&](int c) {
        std::vector<std::array<int, 3>> out;
        for (int ti : K.resolution[c]) out.push_back(K.triples[ti]);
        return out;
    };

    const auto p1 = class_triples(0);
    const auto p2 = class_triples(1);
    const std::array<int, 3> t = p1[0];

    // The class-2 triangles through t's corners; distinct, or two of them
    // would share a pair with t.
    std::array<int, 3> host_of{-1, -1, -1};
    for (int c = 0; c < 3; ++c)
        for (std::size_t i = 0; i < p2.size(); ++i)
            if (std::find(p2[i].begin(), p2[i].end(), t[c]) != p2[i].end())
                host_of[c] = static_cast<int>(i);
    if (host_of[0] == host_of[1] || host_of[1] == host_of[2] ||
        host_of[0] == host_of[2])
        throw std::logic_error("pair uniqueness failed across classes");

    GroupedPartition gp;
    gp.modulus = u;
    gp.groups.resize(5);
    for (std::size_t i = 1; i < p1.size(); ++i)
        gp.groups[0].push_back(triangle(p1[i][0], p1[i][1], p1[i][2]));
    for (std::size_t i = 0; i < p2.size(); ++i) {
        if (static_cast<int>(i) == host_of[0] || static_cast<int>(i) == host_of[1] ||
            static_cast<int>(i) == host_of[2])
            continue;
        gp.groups[1].push_back(triangle(p2[i][0], p2[i][1], p2[i][2]));
    }
    // Kites: edge {t[c], t[c+1]} hangs off the class-2 triangle through t[c].
    for (int c = 0; c < 3; ++c) {
        const auto& tri = p2[host_of[c]];
        const int at = t[c], tip = t[(c + 1) % 3];
        std::array<int, 2> rest{};
        int k = 0;
        for (int v : tri)
            if (v != at) rest[k++] = v;
        gp.groups[1].push_back(kite(rest[0], rest[1], at, tip));
    }
    for (const auto& tri : class_triples(2))
        gp.groups[2].push_back(triangle(tri[0], tri[1], tri[2]));
    for (const auto& tri : class_triples(3))
        gp.groups[3].push_back(triangle(tri[0], tri[1], tri[2]));
    for (std::size_t c = 4; c + 1 < K.resolution.size(); c += 2) {
        auto p = class_triples(static_cast<int>(c));
        auto q = class_triples(static_cast<int>(c + 1));
        for (const Block& b : pair_classes_to_suns(p, q)) gp.groups[4].push_back(b);
    }

    return complete_with_partition(s, gp, opts);
}

EmbeddingCertificate embed_via_fixed_partition(const TripleSystem& s,
                                               const EmbedOptions& opts) {
    require_valid_sts(s);
    return complete_with_partition(s, fixed_grouped_partition(s.order), opts);
}

EmbeddingCertificate embed_via_bull_design(const TripleSystem& s,
                                           const EmbedOptions& opts) {
    const int n = s.order;
    const int r = n % 24;
    if (!(r == 7 || r == 13 || r == 15 || r == 21) || n < 79)
        throw std::invalid_argument("the bull route needs n == 7,13,15,21 (mod 24), n >= 79");
    require_valid_sts(s);
    const int u = (n + 3) / 2;
    const int h = u % 12 == 0 ? 12 : u % 12;
    const int k = (u - h) / 12;
    Design host = bull_sun_design(k, h);
    const std::vector<int> d2 = two_degree_profile(host);

    BipartiteGraph inc = incidence_graph(s);
    MatchingPartition base = konig_edge_coloring(inc);
    std::vector<int> targets(u);
    for (int i = 0; i < u; ++i) targets[i] = n - d2[i];
    MatchingPartition parts = redistribute_to_profile(inc, base, targets, opts.seed);

    // Matching i is identified with host vertex i. Each bull's degree-2
    // vertex i picks up one point missed by matching i; any pairing works,
    // so take both sides in ascending order.
    std::vector<std::vector<int>> missing_at(u);
    for (int i = 0; i < u; ++i) missing_at[i] = unsaturated_left(inc, parts.parts[i]);

    std::vector<Block> blocks = image_suns_from_parts(s, inc, parts, n);
    std::vector<std::vector<int>> cursor(u);
    for (const Block& b : host.blocks) {
        if (b.kind == BlockKind::sun) {
            std::vector<int> shift(u);
            std::iota(shift.begin(), shift.end(), n);
            blocks.push_back(relabel(b, shift));
            continue;
        }
        if (b.kind != BlockKind::bull)
            throw std::logic_error("host design may only hold bulls and suns");
        const int i = b.v[0];
        auto& used = cursor[i];
        if (used.size() >= missing_at[i].size())
            throw std::logic_error("bull count exceeds the missing degree");
        int x = missing_at[i][used.size()];
        used.push_back(x);
        blocks.push_back(
            sun(b.v[0] + n, b.v[1] + n, b.v[2] + n, x, b.v[3] + n, b.v[4] + n));
    }
    for (int i = 0; i < u; ++i)
        if (cursor[i].size() != missing_at[i].size())
            throw std::logic_error("a missing edge was never attached");
    return assemble(s, u, std::move(blocks));
}

EmbeddingCertificate embed_small_order(const TripleSystem& s,
                                       const EmbedOptions& opts) {
    require_valid_sts(s);
    const int n = s.order;
    if (n == 3) {
        Design host = sun_system(9, opts.seed);
        const Block& pick = host.blocks.front();
        // Send the picked sun's triangle to {0,1,2}, everything else up.
        std::vector<int> map(9, -1);
        map[pick.v[0]] = 0;
        map[pick.v[1]] = 1;
        map[pick.v[2]] = 2;
        int next = 3;
        for (int v = 0; v < 9; ++v)
            if (map[v] == -1) map[v] = next++;
        EmbeddingCertificate cert;
        cert.sts = s;
        cert.u = 6;
        cert.design = relabel(host, map);
        cert.sun_of_triple = {0};
        return cert;
    }

    EmbeddingTable table;
    std::optional<std::vector<int>> iso;
    if (n == 7) {
        table = embedding_table_sts7();
        iso = sts_isomorphism(s, table.sts);
    } else if (n == 9) {
        table = embedding_table_sts9();
        iso = sts_isomorphism(s, table.sts);
    } else if (n == 13) {
        table = embedding_table_sts13(Sts13Class::cyclic);
        iso = sts_isomorphism(s, table.sts);
        if (!iso) {
            table = embedding_table_sts13(Sts13Class::noncyclic);
            iso = sts_isomorphism(s, table.sts);
        }
    } else {
        throw std::invalid_argument("no stock embedding for order " + std::to_string(n));
    }
    if (!iso) throw std::logic_error("input matches no stock system of its order");

    const int m = table.design.points;
    // iso maps input points onto table points; pull the design back.
    std::vector<int> back(m);
    std::iota(back.begin(), back.end(), 0);
    for (int x = 0; x < n; ++x) back[(*iso)[x]] = x;

    EmbeddingCertificate cert;
    cert.sts = s;
    cert.u = m - n;
    cert.design = relabel(table.design, back);

    std::map<std::array<int, 3>, int> sun_of;  // table triple -> sun index
    for (std::size_t j = 0; j < table.sts.triples.size(); ++j)
        sun_of[table.sts.triples[j]] = table.sun_of_triple[j];
    for (const auto& t : s.triples) {
        std::array<int, 3> img{(*iso)[t[0]], (*iso)[t[1]], (*iso)[t[2]]};
        std::sort(img.begin(), img.end());
        auto it = sun_of.find(img);
        if (it == sun_of.end()) throw std::logic_error("triple image is not in the table");
        cert.sun_of_triple.push_back(it->second);
    }
    return cert;
}

EmbeddingCertificate embed(const TripleSystem& s, const EmbedOptions& opts) {
    require_valid_sts(s);
    const int n = s.order;
    if (n == 1) {
        EmbeddingCertificate cert;
        cert.sts = s;
        cert.u = 0;
        cert.design.points = 1;
        return cert;
    }
    if (n == 3 || n == 7 || n == 9 || n == 13) return embed_small_order(s, opts);
    const int r = n % 24;
    if (r == 1 || r == 3 || r == 9 || r == 19) return embed_via_sun_system(s, opts);
    if (r == 15 && n <= 63) return embed_via_kirkman(s, opts);
    if (n == 21 || n == 31 || n == 37 || n == 45 || n == 55 || n == 61 || n == 69)
        return embed_via_fixed_partition(s, opts);
    return embed_via_bull_design(s, opts);
}

EmbeddingReport verify_embedding(const EmbeddingCertificate& c) {
    EmbeddingReport rep;
    auto flag = [&rep](const std::string& msg) { rep.violations.push_back(msg); };

    const int n = c.sts.order;
    auto sts_rep = verify_triple_system(c.sts);
    if (!sts_rep.ok)
        for (const auto& p : sts_rep.problems) flag("system: " + p);

    if (c.design.points != n + c.u)
        flag("design has " + std::to_string(c.design.points) + " points, expected " +
             std::to_string(n + c.u));
    if (c.design.partial) flag("design is marked partial");
    if (c.design.host_edges) flag("design host is not the complete graph");
    for (std::size_t i = 0; i < c.design.blocks.size(); ++i)
        if (c.design.blocks[i].kind != BlockKind::sun) {
            flag("block " + std::to_string(i) + " is not a sun");
            break;
        }
    auto dec = verify_decomposition(c.design);
    if (!dec.ok) flag("design: " + dec.summary());

    if (c.sun_of_triple.size() != c.sts.triples.size()) {
        flag("map covers " + std::to_string(c.sun_of_triple.size()) + " of " +
             std::to_string(c.sts.triples.size()) + " triples");
    } else {
        std::set<int> seen;
        for (std::size_t i = 0; i < c.sts.triples.size(); ++i) {
            int bi = c.sun_of_triple[i];
            if (bi < 0 || bi >= static_cast<int>(c.design.blocks.size())) {
                flag("map entry " + std::to_string(i) + " out of range");
                continue;
            }
            if (!seen.insert(bi).second) flag("two triples map to one sun");
            std::array<int, 3> tri = c.design.blocks[bi].triangle_vertices();
            std::sort(tri.begin(), tri.end());
            if (tri != c.sts.triples[i])
                flag("triple " + std::to_string(i) + " differs from its sun's triangle");
        }
    }

    if (c.u < parity_lower_bound(n))
        flag("u=" + std::to_string(c.u) + " is below the parity lower bound " +
             std::to_string(parity_lower_bound(n)));
    try {
        const int want = u_min(n);
        if (c.u != want)
            flag("u=" + std::to_string(c.u) + " is not the minimum " +
                 std::to_string(want));
    } catch (const std::invalid_argument&) {
        // order already flagged above
    }

    rep.ok = rep.violations.empty();
    return rep;
}

}  // namespace sunweave

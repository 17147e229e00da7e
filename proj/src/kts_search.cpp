#include <algorithm>
#include <array>
#include <numeric>
#include <random>
#include <utility>
#include <vector>

#include "sunweave/triple_system.hpp"

namespace sunweave {

namespace {

// Rotational ansatz on Z_q x {0,1,2}, v = 3q, q odd. The shift i -> i+1 acts
// on the point set; (q-1)/2 classes are orbits of transversal triples
// {(0,0),(a,1),(a+e,2)}, and the remaining q classes are the translates of
// one base parallel class. The base class must cover every within-group
// difference exactly once and every cross difference not claimed by a fixed
// transversal orbit exactly once; finding it is a small exact-cover search.
struct Rotational {
    int q, v, f;
    std::vector<int> a, e;         // fixed-class parameters, f of each
    std::vector<char> busy;
    std::vector<char> win_used;    // [group][reduced difference]
    std::vector<char> cross_used;  // [pair class][difference]
    std::vector<std::array<int, 3>> cur;  // base class, labels g*q + i
    std::vector<int> ord;
    std::mt19937_64& rng;
    long long nodes = 0, cap;

    Rotational(int qq, std::mt19937_64& r, long long node_cap)
        : q(qq), v(3 * qq), f((qq - 1) / 2), rng(r), cap(node_cap) {
        busy.assign(v, 0);
        win_used.assign(3 * (q / 2 + 1), 0);
        cross_used.assign(3 * q, 0);
        ord.resize(v);
        std::iota(ord.begin(), ord.end(), 0);
    }

    int red(int d) const {
        d %= q;
        if (d < 0) d += q;
        return std::min(d, q - d);
    }
    char& win(int g, int dval) { return win_used[g * (q / 2 + 1) + dval]; }
    char& cross(int c, int d) { return cross_used[c * q + d]; }
    static int cross_class(int g1, int g2) {  // g1 < g2
        return g1 == 0 ? (g2 == 1 ? 0 : 2) : 1;
    }

    // Random fixed-class parameters; false when the 0-2 differences clash.
    bool choose_fixed() {
        std::vector<int> as(q), es(q);
        std::iota(as.begin(), as.end(), 0);
        std::iota(es.begin(), es.end(), 0);
        std::shuffle(as.begin(), as.end(), rng);
        std::shuffle(es.begin(), es.end(), rng);
        a.assign(as.begin(), as.begin() + f);
        e.assign(es.begin(), es.begin() + f);
        std::vector<char> seen(q, 0);
        for (int j = 0; j < f; ++j) {
            int b = (a[j] + e[j]) % q;
            if (seen[b]) return false;
            seen[b] = 1;
        }
        for (int j = 0; j < f; ++j) {
            cross(0, a[j]) = 1;
            cross(1, e[j]) = 1;
            cross(2, (a[j] + e[j]) % q) = 1;
        }
        return true;
    }

    // Marks (or rolls back) the difference footprint of a label-sorted
    // triple; with check set, fails if any needed difference is taken.
    bool mark(const std::array<int, 3>& t, char val, bool check) {
        char* cells[3];
        int ns = 0;
        for (int x = 0; x < 3; ++x)
            for (int y = x + 1; y < 3; ++y) {
                int gx = t[x] / q, gy = t[y] / q;
                int ix = t[x] % q, iy = t[y] % q;
                char* cell = gx == gy
                                 ? &win(gx, red(iy - ix))
                                 : &cross(cross_class(gx, gy), ((iy - ix) % q + q) % q);
                if (check) {
                    if (*cell) return false;
                    for (int s = 0; s < ns; ++s)
                        if (cells[s] == cell) return false;
                }
                cells[ns++] = cell;
            }
        for (int s = 0; s < ns; ++s) *cells[s] = val;
        return true;
    }

    bool place(const std::array<int, 3>& t) {
        if (!mark(t, 1, true)) return false;
        busy[t[0]] = busy[t[1]] = busy[t[2]] = 1;
        cur.push_back(t);
        return true;
    }
    void unplace() {
        auto t = cur.back();
        cur.pop_back();
        busy[t[0]] = busy[t[1]] = busy[t[2]] = 0;
        mark(t, 0, false);
    }

    bool fill() {
        if (++nodes > cap) return false;
        if (static_cast<int>(cur.size()) == q) return true;
        int x = 0;
        while (busy[x]) ++x;
        for (int yi = 0; yi < v; ++yi) {
            int y = ord[yi];
            if (y <= x || busy[y]) continue;
            for (int zi = 0; zi < v; ++zi) {
                int z = ord[zi];
                if (z <= y || busy[z]) continue;
                if (!place({x, y, z})) continue;
                if (fill()) return true;
                unplace();
            }
        }
        return false;
    }

    TripleSystem assemble() const {
        TripleSystem s;
        s.order = v;
        auto push_class = [&](const std::vector<std::array<int, 3>>& cls) {
            s.resolution.emplace_back();
            for (auto t : cls) {
                std::sort(t.begin(), t.end());
                s.resolution.back().push_back(static_cast<int>(s.triples.size()));
                s.triples.push_back(t);
            }
        };
        for (int j = 0; j < f; ++j) {
            std::vector<std::array<int, 3>> cls;
            for (int i = 0; i < q; ++i)
                cls.push_back({i, q + (i + a[j]) % q, 2 * q + (i + a[j] + e[j]) % q});
            push_class(cls);
        }
        for (int shift = 0; shift < q; ++shift) {
            std::vector<std::array<int, 3>> cls;
            for (const auto& t : cur) {
                std::array<int, 3> u;
                for (int k = 0; k < 3; ++k)
                    u[k] = (t[k] / q) * q + (t[k] % q + shift) % q;
                cls.push_back(u);
            }
            push_class(cls);
        }
        return s;
    }
};

// Direct class-by-class backtracking: complete one parallel class at a time
// over the unused pairs, branching on the point with the fewest legal triple
// completions. Covers the orders the rotational ansatz cannot (v = 15 has no
// resolution invariant under a fixed-point-free 5-shift).
struct ClassSearch {
    int v, classes, per_class;
    std::vector<char> pair_used;
    std::vector<char> busy;
    std::vector<std::array<int, 3>> cur;   // triples of the class in progress
    std::vector<std::array<int, 3>> done;  // completed classes, class-major
    std::vector<int> ord;
    std::mt19937_64& rng;
    long long nodes = 0, total_nodes = 0;

    ClassSearch(int order, std::mt19937_64& r)
        : v(order), classes((order - 1) / 2), per_class(order / 3), rng(r) {
        pair_used.assign(static_cast<std::size_t>(v) * v, 0);
        busy.assign(v, 0);
        ord.resize(v);
        std::iota(ord.begin(), ord.end(), 0);
    }
    bool used(int a, int b) const { return pair_used[static_cast<std::size_t>(a) * v + b]; }
    void set_pair(int a, int b, char val) {
        pair_used[static_cast<std::size_t>(a) * v + b] = val;
        pair_used[static_cast<std::size_t>(b) * v + a] = val;
    }
    void put(int x, int y, int z, char val) {
        set_pair(x, y, val);
        set_pair(x, z, val);
        set_pair(y, z, val);
        busy[x] = busy[y] = busy[z] = val;
        if (val) cur.push_back({x, y, z});
        else cur.pop_back();
    }

    bool fill_class(long long cap) {
        if (++nodes > cap) return false;
        if (static_cast<int>(cur.size()) == per_class) return true;
        int best_x = -1;
        std::vector<std::pair<int, int>> cands, best;
        std::size_t limit = static_cast<std::size_t>(v) * v;
        for (int x = 0; x < v; ++x) {
            if (busy[x]) continue;
            cands.clear();
            for (int yi = 0; yi < v && cands.size() < limit; ++yi) {
                int y = ord[yi];
                if (y == x || busy[y] || used(x, y)) continue;
                for (int zi = yi + 1; zi < v; ++zi) {
                    int z = ord[zi];
                    if (z == x || busy[z] || used(x, z) || used(y, z)) continue;
                    cands.emplace_back(y, z);
                    if (cands.size() >= limit) break;
                }
            }
            if (cands.empty()) return false;
            if (cands.size() < limit) {
                limit = cands.size();
                best_x = x;
                best.swap(cands);
                if (limit == 1) break;
            }
        }
        for (auto [y, z] : best) {
            put(best_x, y, z, 1);
            if (fill_class(cap)) return true;
            put(best_x, y, z, 0);
        }
        return false;
    }

    bool build(int class_tries, long long class_cap) {
        // The first class costs nothing: relabel any resolution onto it.
        for (int x = 0; x < v; x += 3) {
            cur.clear();
            put(x, x + 1, x + 2, 1);
            done.push_back({x, x + 1, x + 2});
        }
        std::fill(busy.begin(), busy.end(), 0);
        for (int c = 1; c < classes; ++c) {
            bool ok = false;
            for (int t = 0; t < class_tries && !ok; ++t) {
                std::shuffle(ord.begin(), ord.end(), rng);
                cur.clear();
                total_nodes += nodes;
                nodes = 0;
                ok = fill_class(class_cap);
                if (!ok)
                    while (!cur.empty()) {
                        auto tr = cur.back();
                        put(tr[0], tr[1], tr[2], 0);
                    }
            }
            if (!ok) return false;
            for (const auto& t : cur) done.push_back(t);
            std::fill(busy.begin(), busy.end(), 0);
        }
        return true;
    }

    TripleSystem assemble() const {
        TripleSystem s;
        s.order = v;
        for (int c = 0; c < classes; ++c) {
            s.resolution.emplace_back();
            for (int i = 0; i < per_class; ++i) {
                auto t = done[static_cast<std::size_t>(c) * per_class + i];
                std::sort(t.begin(), t.end());
                s.resolution.back().push_back(static_cast<int>(s.triples.size()));
                s.triples.push_back(t);
            }
        }
        return s;
    }
};

TripleSystem checked(TripleSystem s) {
    auto rep = verify_triple_system(s);
    if (!rep.ok) throw std::logic_error("search returned a bad system: " + rep.problems[0]);
    return s;
}

}  // namespace

TripleSystem kts_search(int v, std::uint64_t seed, long long max_steps) {
    if (v % 6 != 3 || v < 3)
        throw std::invalid_argument("resolvable systems need v == 3 (mod 6)");
    if (v == 3) {
        TripleSystem s;
        s.order = 3;
        s.triples.push_back({0, 1, 2});
        s.resolution.push_back({0});
        return s;
    }

    int q = v / 3;
    std::mt19937_64 rng(seed);

    // Rotational construction first: for most small orders it lands within
    // a few tries and a few thousand nodes.
    long long nodes_left = max_steps / 2;
    for (int attempt = 0; attempt < 200 && nodes_left > 0; ++attempt) {
        Rotational rot(q, rng, std::min(nodes_left, 2'000'000LL));
        if (!rot.choose_fixed()) continue;
        std::shuffle(rot.ord.begin(), rot.ord.end(), rng);
        bool hit = rot.fill();
        nodes_left -= rot.nodes;
        if (hit) return checked(rot.assemble());
    }

    // Class-by-class fallback for orders without the rotational structure.
    nodes_left = max_steps / 2;
    while (nodes_left > 0) {
        ClassSearch cs(v, rng);
        bool hit = cs.build(25, std::min(nodes_left, 400'000LL));
        nodes_left -= cs.total_nodes + cs.nodes;
        if (hit) return checked(cs.assemble());
    }
    throw SearchError("no resolvable system of order " + std::to_string(v) +
                      " found within the step budget");
}

}  // namespace sunweave

#include "sunweave/triple_system.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <string>

namespace sunweave {

namespace {

std::array<int, 3> sorted_triple(int a, int b, int c) {
    std::array<int, 3> t{a, b, c};
    std::sort(t.begin(), t.end());
    if (t[0] == t[1] || t[1] == t[2])
        throw std::invalid_argument("triple with repeated point");
    return t;
}

}  // namespace

bool sts_order_admissible(int n) {
    return n >= 1 && (n % 6 == 1 || n % 6 == 3);
}

TripleSystemReport verify_triple_system(const TripleSystem& s) {
    TripleSystemReport rep;
    const int n = s.order;
    if (!sts_order_admissible(n)) {
        rep.problems.push_back("order " + std::to_string(n) + " is not 1 or 3 mod 6");
        return rep;
    }
    if (s.triples.size() != static_cast<std::size_t>(n) * (n - 1) / 6)
        rep.problems.push_back("wrong number of triples");

    std::vector<char> pair_seen(static_cast<std::size_t>(n) * n, 0);
    auto pid = [n](int a, int b) { return static_cast<std::size_t>(a) * n + b; };
    for (const auto& t : s.triples) {
        if (t[0] < 0 || t[2] >= n) {
            rep.problems.push_back("triple out of range");
            continue;
        }
        if (t[0] >= t[1] || t[1] >= t[2]) {
            rep.problems.push_back("triple not strictly ascending");
            continue;
        }
        const int ps[3][2] = {{t[0], t[1]}, {t[0], t[2]}, {t[1], t[2]}};
        for (auto& p : ps) {
            if (pair_seen[pid(p[0], p[1])]) {
                rep.problems.push_back("pair {" + std::to_string(p[0]) + "," +
                                       std::to_string(p[1]) + "} covered twice");
            }
            pair_seen[pid(p[0], p[1])] = 1;
        }
    }
    if (rep.problems.empty())
        for (int a = 0; a < n; ++a)
            for (int b = a + 1; b < n; ++b)
                if (!pair_seen[pid(a, b)]) {
                    rep.problems.push_back("pair {" + std::to_string(a) + "," +
                                           std::to_string(b) + "} uncovered");
                    break;
                }

    if (s.has_resolution()) {
        if (n % 6 != 3) rep.problems.push_back("resolvable order must be 3 mod 6");
        if (s.resolution.size() != static_cast<std::size_t>((n - 1) / 2))
            rep.problems.push_back("wrong number of parallel classes");
        std::vector<char> used(s.triples.size(), 0);
        for (const auto& cls : s.resolution) {
            std::vector<char> hit(n, 0);
            for (int ti : cls) {
                if (ti < 0 || ti >= static_cast<int>(s.triples.size())) {
                    rep.problems.push_back("resolution indexes a missing triple");
                    continue;
                }
                if (used[ti]) rep.problems.push_back("triple in two classes");
                used[ti] = 1;
                for (int x : s.triples[ti]) {
                    if (hit[x]) rep.problems.push_back("class covers a point twice");
                    hit[x] = 1;
                }
            }
            if (std::find(hit.begin(), hit.end(), 0) != hit.end())
                rep.problems.push_back("class misses a point");
        }
        if (std::find(used.begin(), used.end(), 0) != used.end())
            rep.problems.push_back("triple in no class");
    }

    rep.ok = rep.problems.empty();
    return rep;
}

TripleSystem bose(int n) {
    if (n % 6 != 3 || n < 3)
        throw std::invalid_argument("bose needs n == 3 (mod 6)");
    const int q = n / 3;  // odd
    const int t = (q - 1) / 2;
    // Idempotent commutative quasigroup on Z_q: i*k = (i+k)(t+1) mod q.
    auto mul = [q, t](int i, int k) { return static_cast<int>((static_cast<long long>(i + k) * (t + 1)) % q); };
    auto pt = [q](int i, int j) { return i + j * q; };
    TripleSystem s;
    s.order = n;
    for (int i = 0; i < q; ++i)
        s.triples.push_back(sorted_triple(pt(i, 0), pt(i, 1), pt(i, 2)));
    for (int i = 0; i < q; ++i)
        for (int k = i + 1; k < q; ++k)
            for (int j = 0; j < 3; ++j)
                s.triples.push_back(
                    sorted_triple(pt(i, j), pt(k, j), pt(mul(i, k), (j + 1) % 3)));
    return s;
}

TripleSystem skolem(int n) {
    if (n % 6 != 1 || n < 7)
        throw std::invalid_argument("skolem needs n == 1 (mod 6), n >= 7");
    const int t = n / 6;
    const int q = 2 * t;
    // Half-idempotent commutative quasigroup on Z_q: i*k = sigma(i+k) where
    // sigma(2x) = x and sigma(2x+1) = t+x, so i*i = i for i < t and
    // (t+i)*(t+i) = i.
    auto sigma = [t](int v) { return v % 2 == 0 ? v / 2 : t + v / 2; };
    auto mul = [q, sigma](int i, int k) { return sigma((i + k) % q); };
    auto pt = [q](int i, int j) { return i + j * q; };
    const int inf = 6 * t;
    TripleSystem s;
    s.order = n;
    for (int i = 0; i < t; ++i)
        s.triples.push_back(sorted_triple(pt(i, 0), pt(i, 1), pt(i, 2)));
    for (int i = 0; i < t; ++i)
        for (int j = 0; j < 3; ++j)
            s.triples.push_back(sorted_triple(inf, pt(t + i, j), pt(i, (j + 1) % 3)));
    for (int i = 0; i < q; ++i)
        for (int k = i + 1; k < q; ++k)
            for (int j = 0; j < 3; ++j)
                s.triples.push_back(
                    sorted_triple(pt(i, j), pt(k, j), pt(mul(i, k), (j + 1) % 3)));
    return s;
}

TripleSystem sts13(Sts13Class which) {
    TripleSystem s;
    s.order = 13;
    for (int sft = 0; sft < 13; ++sft) {
        s.triples.push_back(sorted_triple(sft, (sft + 1) % 13, (sft + 4) % 13));
        s.triples.push_back(sorted_triple(sft, (sft + 2) % 13, (sft + 7) % 13));
    }
    if (which == Sts13Class::noncyclic) {
        // Trade four triples for four new ones over the same six pairs.
        const std::vector<std::array<int, 3>> out = {
            sorted_triple(0, 1, 4), sorted_triple(0, 2, 7),
            sorted_triple(2, 4, 9), sorted_triple(1, 7, 9)};
        const std::vector<std::array<int, 3>> in = {
            sorted_triple(1, 4, 9), sorted_triple(2, 7, 9),
            sorted_triple(0, 2, 4), sorted_triple(0, 1, 7)};
        for (const auto& t : out) {
            auto it = std::find(s.triples.begin(), s.triples.end(), t);
            if (it == s.triples.end())
                throw std::logic_error("traded triple not present");
            s.triples.erase(it);
        }
        s.triples.insert(s.triples.end(), in.begin(), in.end());
    }
    std::sort(s.triples.begin(), s.triples.end());
    return s;
}

TripleSystem generate_sts(int n) {
    if (!sts_order_admissible(n))
        throw std::invalid_argument("no Steiner triple system of order " +
                                    std::to_string(n));
    if (n == 1) {
        TripleSystem s;
        s.order = 1;
        return s;
    }
    if (n == 3) {
        TripleSystem s;
        s.order = 3;
        s.triples.push_back({0, 1, 2});
        return s;
    }
    return n % 6 == 3 ? bose(n) : skolem(n);
}

BipartiteGraph incidence_graph(const TripleSystem& s) {
    BipartiteGraph g;
    g.left = s.order;
    g.right = static_cast<int>(s.triples.size());
    for (int ti = 0; ti < g.right; ++ti)
        for (int x : s.triples[ti]) g.add_edge(x, ti);
    return g;
}

TripleSystem relabel(const TripleSystem& s, std::span<const int> map) {
    if (static_cast<int>(map.size()) != s.order)
        throw std::invalid_argument("relabel map size differs from the order");
    TripleSystem out;
    out.order = s.order;
    out.resolution = s.resolution;
    for (const auto& t : s.triples)
        out.triples.push_back(sorted_triple(map[t[0]], map[t[1]], map[t[2]]));
    return out;
}

namespace {

// Backtracking point-map search. Points are mapped in order; each partial
// map must send covered pairs of `a` to covered pairs of `b` consistently.
struct IsoSearch {
    const TripleSystem& a;
    const TripleSystem& b;
    int n;
    std::vector<std::vector<int>> third_a;  // pair (x,y) -> third point, else -1
    std::vector<std::vector<int>> third_b;
    std::vector<int> map;     // a -> b, -1 unset
    std::vector<char> used;   // b labels taken

    explicit IsoSearch(const TripleSystem& sa, const TripleSystem& sb)
        : a(sa), b(sb), n(sa.order) {
        third_a = thirds(a);
        third_b = thirds(b);
        map.assign(n, -1);
        used.assign(n, 0);
    }

    static std::vector<std::vector<int>> thirds(const TripleSystem& s) {
        std::vector<std::vector<int>> t(s.order, std::vector<int>(s.order, -1));
        for (const auto& tr : s.triples) {
            t[tr[0]][tr[1]] = t[tr[1]][tr[0]] = tr[2];
            t[tr[0]][tr[2]] = t[tr[2]][tr[0]] = tr[1];
            t[tr[1]][tr[2]] = t[tr[2]][tr[1]] = tr[0];
        }
        return t;
    }

    bool consistent(int x) const {
        for (int y = 0; y < x; ++y) {
            int z = third_a[x][y];
            int zb = third_b[map[x]][map[y]];
            if (map[z] != -1) {
                if (map[z] != zb) return false;
            } else if (used[zb]) {
                return false;
            }
        }
        return true;
    }

    bool place(int x) {
        if (x == n) return true;
        for (int v = 0; v < n; ++v) {
            if (used[v]) continue;
            map[x] = v;
            used[v] = 1;
            if (consistent(x) && place(x + 1)) return true;
            map[x] = -1;
            used[v] = 0;
        }
        return false;
    }
};

}  // namespace

std::optional<std::vector<int>> sts_isomorphism(const TripleSystem& a,
                                                const TripleSystem& b) {
    if (a.order != b.order || a.triples.size() != b.triples.size()) return std::nullopt;
    if (a.order == 0) return std::vector<int>{};
    if (!verify_triple_system(a).ok || !verify_triple_system(b).ok)
        throw std::invalid_argument("isomorphism search expects valid systems");
    IsoSearch search(a, b);
    if (!search.place(0)) return std::nullopt;
    return search.map;
}

}  // namespace sunweave

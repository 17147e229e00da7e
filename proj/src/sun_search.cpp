#include <algorithm>
#include <random>

#include "sunweave/sun_factory.hpp"

namespace sunweave {

bool sun_order_admissible(int m) {
    if (m < 0) return false;
    int r = m % 12;
    if (r != 0 && r != 1 && r != 4 && r != 9) return false;
    return m != 4;  // a sun needs six vertices; K_4 has no room
}

namespace {

// Shared scoreboard: which block covers each K_m edge, plus the uncovered
// edge pool with O(1) removal.
struct CoverState {
    int m;
    std::vector<int> cover;          // edge id -> block slot, or -1
    std::vector<Block> slots;
    std::vector<char> alive;
    std::vector<int> free_slots;
    std::vector<int> uncovered;      // edge ids
    std::vector<int> pos;            // edge id -> index in uncovered, or -1

    explicit CoverState(int order) : m(order) {
        cover.assign(static_cast<std::size_t>(m) * m, -1);
        pos.assign(static_cast<std::size_t>(m) * m, -1);
        for (int a = 0; a < m; ++a)
            for (int b = a + 1; b < m; ++b) {
                pos[eid(a, b)] = static_cast<int>(uncovered.size());
                uncovered.push_back(eid(a, b));
            }
    }

    int eid(int a, int b) const { return a < b ? a * m + b : b * m + a; }

    void mark_covered(int id, int slot) {
        cover[id] = slot;
        int p = pos[id];
        int last = uncovered.back();
        uncovered[p] = last;
        pos[last] = p;
        uncovered.pop_back();
        pos[id] = -1;
    }

    void mark_uncovered(int id) {
        cover[id] = -1;
        pos[id] = static_cast<int>(uncovered.size());
        uncovered.push_back(id);
    }

    void edge_ids_of(const Block& b, int out[6]) const {
        const auto& v = b.v;
        out[0] = eid(v[0], v[1]);
        out[1] = eid(v[1], v[2]);
        out[2] = eid(v[0], v[2]);
        out[3] = eid(v[0], v[3]);
        out[4] = eid(v[1], v[4]);
        out[5] = eid(v[2], v[5]);
    }

    int place(const Block& b) {
        int slot;
        if (!free_slots.empty()) {
            slot = free_slots.back();
            free_slots.pop_back();
            slots[slot] = b;
            alive[slot] = 1;
        } else {
            slot = static_cast<int>(slots.size());
            slots.push_back(b);
            alive.push_back(1);
        }
        int ids[6];
        edge_ids_of(b, ids);
        for (int id : ids) mark_covered(id, slot);
        return slot;
    }

    void evict(int slot) {
        int ids[6];
        edge_ids_of(slots[slot], ids);
        for (int id : ids) mark_uncovered(id);
        alive[slot] = 0;
        free_slots.push_back(slot);
    }

    std::vector<Block> blocks() const {
        std::vector<Block> out;
        for (std::size_t i = 0; i < slots.size(); ++i)
            if (alive[i]) out.push_back(slots[i]);
        return out;
    }
};

// Distinct blocks covering any edge of b.
int collision_count(const CoverState& st, const Block& b, int scratch[6]) {
    int ids[6];
    st.edge_ids_of(b, ids);
    int k = 0;
    for (int id : ids) {
        int c = st.cover[id];
        if (c == -1) continue;
        bool seen = false;
        for (int i = 0; i < k; ++i) seen |= scratch[i] == c;
        if (!seen) scratch[k++] = c;
    }
    return k;
}

// Samples suns through edge (a,b), preferring vertices that keep the sun's
// remaining edges on uncovered ground.
struct Climber {
    CoverState& st;
    std::mt19937_64& rng;
    std::vector<int> good, any;  // scratch vertex pools

    bool covered(int x, int y) const { return st.cover[st.eid(x, y)] != -1; }

    // A vertex outside `taken` minimizing covered() hits against the probes;
    // prefers a 0-hit vertex, falls back to any legal one.
    template <typename Score>
    int pick(std::initializer_list<int> taken, Score&& score) {
        good.clear();
        any.clear();
        for (int v = 0; v < st.m; ++v) {
            bool used = false;
            for (int t : taken) used |= v == t;
            if (used) continue;
            any.push_back(v);
            if (score(v)) good.push_back(v);
        }
        if (!good.empty()) return good[rng() % good.size()];
        if (!any.empty()) return any[rng() % any.size()];
        return -1;
    }

    Block candidate(int a, int b) {
        int role = static_cast<int>(rng() % 3);
        if (role == 0) {
            int c = pick({a, b}, [&](int v) { return !covered(a, v) && !covered(b, v); });
            int ta = pick({a, b, c}, [&](int v) { return !covered(a, v); });
            int tb = pick({a, b, c, ta}, [&](int v) { return !covered(b, v); });
            int tc = pick({a, b, c, ta, tb}, [&](int v) { return !covered(c, v); });
            return sun(a, b, c, ta, tb, tc);
        }
        int x = role == 1 ? a : b, tip = role == 1 ? b : a;
        int p = pick({x, tip}, [&](int v) { return !covered(x, v); });
        int q = pick({x, tip, p}, [&](int v) { return !covered(x, v) && !covered(p, v); });
        int tp = pick({x, tip, p, q}, [&](int v) { return !covered(p, v); });
        int tq = pick({x, tip, p, q, tp}, [&](int v) { return !covered(q, v); });
        return sun(x, p, q, tip, tp, tq);
    }

    bool run(long long max_steps) {
        const int width = 8;
        int scratch[6];
        for (long long step = 0; step < max_steps && !st.uncovered.empty(); ++step) {
            int id = st.uncovered[rng() % st.uncovered.size()];
            int a = id / st.m, b = id % st.m;
            Block best{};
            int best_cost = 7;
            for (int c = 0; c < width; ++c) {
                Block cand = candidate(a, b);
                int cost = collision_count(st, cand, scratch);
                if (cost < best_cost) {
                    best_cost = cost;
                    best = cand;
                    if (cost == 0) break;
                }
            }
            int k = collision_count(st, best, scratch);
            for (int i = 0; i < k; ++i) st.evict(scratch[i]);
            st.place(best);
        }
        return st.uncovered.empty();
    }
};

// Exhaustive cover of the lexicographically first uncovered edge, trying
// candidate vertices in the order given by `ord`. Reshuffling `ord` between
// restarts turns the backtracker into a Las Vegas search: run times are
// heavy-tailed, so a small node cap plus many restarts beats one long run.
struct ExactSearch {
    CoverState& st;
    std::vector<int>& ord;  // candidate vertex order, |ord| == m
    long long nodes = 0;
    long long node_cap;

    bool covered(int a, int b) const { return st.cover[st.eid(a, b)] != -1; }

    bool all_free(const Block& b) const {
        int ids[6];
        st.edge_ids_of(b, ids);
        for (int id : ids)
            if (st.cover[id] != -1) return false;
        return true;
    }

    bool run() {
        if (++nodes > node_cap) throw SearchError("exact sun cover exceeded its node budget");
        if (st.uncovered.empty()) return true;
        int id = *std::min_element(st.uncovered.begin(), st.uncovered.end());
        int a = id / st.m, b = id % st.m;

        auto try_block = [&](const Block& cand) {
            if (!all_free(cand)) return false;
            int slot = st.place(cand);
            if (run()) return true;
            st.evict(slot);
            return false;
        };

        // (a,b) in the triangle.
        for (int c : ord) {
            if (c == a || c == b || covered(a, c) || covered(b, c)) continue;
            for (int ta : ord) {
                if (ta == a || ta == b || ta == c || covered(a, ta)) continue;
                for (int tb : ord) {
                    if (tb == a || tb == b || tb == c || tb == ta || covered(b, tb)) continue;
                    for (int tc : ord) {
                        if (tc == a || tc == b || tc == c || tc == ta || tc == tb ||
                            covered(c, tc))
                            continue;
                        if (try_block(sun(a, b, c, ta, tb, tc))) return true;
                    }
                }
            }
        }
        // (a,b) pendant: x in the triangle, other end the tip.
        for (int flip = 0; flip < 2; ++flip) {
            int x = flip ? b : a, tip = flip ? a : b;
            for (int pi = 0; pi < st.m; ++pi) {
                int p = ord[pi];
                if (p == a || p == b || covered(x, p)) continue;
                for (int qi = pi + 1; qi < st.m; ++qi) {
                    int q = ord[qi];
                    if (q == a || q == b || covered(x, q) || covered(p, q)) continue;
                    for (int tp : ord) {
                        if (tp == x || tp == p || tp == q || tp == tip || covered(p, tp))
                            continue;
                        for (int tq : ord) {
                            if (tq == x || tq == p || tq == q || tq == tip || tq == tp ||
                                covered(q, tq))
                                continue;
                            if (try_block(sun(x, p, q, tip, tp, tq))) return true;
                        }
                    }
                }
            }
        }
        return false;
    }
};

}  // namespace

Design sun_system_uncached(int m, std::uint64_t seed) {
    if (!sun_order_admissible(m))
        throw std::invalid_argument("no 3-sun system of order " + std::to_string(m));
    Design d;
    d.points = m;
    if (m <= 1) return d;  // K_0 and K_1 have no edges

    auto finish = [&](std::vector<Block> blocks) {
        d.blocks = std::move(blocks);
        auto rep = verify_decomposition(d);
        if (!rep.ok) throw std::logic_error("sun search returned a bad design");
        return d;
    };

    // Phase 1: hill climbing. Each move covers a random uncovered edge with
    // the least-colliding of a few sampled suns; evicting k blocks to place
    // one frees 6(k-1) edges, so the uncovered count only moves in steps of
    // six and the endgame needs the last six uncovered edges to form a sun
    // exactly. Up to m ~ 27 the walk reaches that shape almost immediately;
    // past that it plateaus, so larger orders skip straight to phase 2.
    if (m <= 27) {
        for (int restart = 0; restart < 6; ++restart) {
            CoverState st(m);
            std::mt19937_64 rng(seed + 0x9e3779b97f4a7c15ULL * restart);
            Climber climber{st, rng, {}, {}};
            climber.good.reserve(m);
            climber.any.reserve(m);
            if (climber.run(4000LL * m * m)) return finish(st.blocks());
        }
    }

    // Phase 2: exact backtracking over randomized candidate orders. Solved
    // restarts finish within a few thousand nodes; stuck ones are abandoned
    // at the cap and reshuffled. Every admissible order through 49 closes in
    // seconds this way, and the restart budget makes failure vanishingly
    // unlikely rather than impossible-to-rule-out.
    std::mt19937_64 rng(seed ^ 0xb5ad4eceda1ce2a9ULL);
    std::vector<int> ord(m);
    for (int i = 0; i < m; ++i) ord[i] = i;
    for (int restart = 0; restart < 1500; ++restart) {
        std::shuffle(ord.begin(), ord.end(), rng);
        CoverState st(m);
        ExactSearch ex{st, ord, 0, 100'000};
        try {
            if (ex.run()) return finish(st.blocks());
        } catch (const SearchError&) {
            // node cap hit: reshuffle and retry
        }
    }
    throw SearchError("no sun decomposition of K_" + std::to_string(m) +
                      " found within the restart budget");
}

}  // namespace sunweave

#include "sunweave/sun_factory.hpp"

namespace sunweave {

std::vector<int> bull_sun_expected_d2(int k, int h) {
    const int u = 12 * k + h;
    std::vector<int> d2(u, 4);
    d2[6 * k] = 2;
    d2[0] = d2[4 * k + 1] = d2[6 * k + 1] = d2[6 * k + 2] = 3;
    return d2;
}

// Base-block construction over Z_u, u = 12k+h. Three bull orbits carry the
// low differences; one orbit is punctured at five shifts and repaired by
// five ad hoc suns that reuse the punctured blocks' edges; the rest is
// h-specific. The 2-degree profile comes out as bull_sun_expected_d2.
Design bull_sun_design(int k, int h) {
    if (k < 3 || (h != 5 && h != 8 && h != 9 && h != 12))
        throw std::invalid_argument("bull_sun_design needs k >= 3, h in {5,8,9,12}");
    const int u = 12 * k + h;
    Design d;
    d.points = u;
    auto& bl = d.blocks;

    auto push_orbit = [&](const Block& base, const std::vector<int>& shifts) {
        for (int s : shifts) bl.push_back(translate(base, s, u));
    };
    auto full = [&](const Block& base) {
        for (int s = 0; s < u; ++s) bl.push_back(translate(base, s, u));
    };
    auto iota = [](int lo, int hi) {  // lo..hi inclusive
        std::vector<int> v;
        for (int i = lo; i <= hi; ++i) v.push_back(i);
        return v;
    };

    full(bull(0, 6 * k - 2, 4 * k + 3, 3 * k, 6 * k - 1));
    push_orbit(bull(6 * k, 0, 4 * k + 1, 6 * k + 2, 6 * k + 1), iota(1, u - 1));
    {
        const int skip[5] = {0, 4 * k + 1, 6 * k, 6 * k + 1, 6 * k + 2};
        std::vector<int> shifts;
        for (int s = 0; s < u; ++s) {
            bool keep = true;
            for (int x : skip) keep &= s != x;
            if (keep) shifts.push_back(s);
        }
        push_orbit(bull(0, 6 * k - 1, 4 * k + 2, 3 * k, 6 * k), shifts);
    }
    for (int j = 0; j <= k - 4; ++j)
        full(sun(5 * k + 1 + j, 5 * k - j, 0, 3 * k, k, u - 2 - 2 * j));
    bl.push_back(sun(6 * k - 1, 4 * k + 2, 0, 3 * k, 6 * k, 4 * k + 1));
    bl.push_back(sun(10 * k, 8 * k + 3, 4 * k + 1, 7 * k + 1, 10 * k + 1, 6 * k));
    bl.push_back(sun(12 * k - 1, 10 * k + 2, 6 * k, 9 * k, 12 * k, 0));
    bl.push_back(sun(12 * k, 10 * k + 3, 6 * k + 1, 9 * k + 1, 12 * k + 1, 4 * k + 1));
    bl.push_back(sun(12 * k + 1, 10 * k + 4, 6 * k + 2, 9 * k + 2, 12 * k + 2, 0));

    switch (h) {
        case 5:
            full(bull(6 * k + 1, 0, 3 * k, 3 * k + 2, 6 * k + 3));
            break;
        case 8:
            push_orbit(bull(6 * k + 3, 0, 3 * k, 6 * k + 4, 9 * k + 1), iota(0, 3 * k + 1));
            push_orbit(bull(9 * k + 5, 3 * k + 2, 6 * k + 2, 6 * k + 4, 12 * k + 3),
                       iota(0, 3 * k + 1));
            push_orbit(bull(12 * k + 7, 6 * k + 4, 9 * k + 4, 9 * k + 5, 3 * k - 3),
                       iota(0, 6 * k + 3));
            push_orbit(sun(0, 3 * k + 2, 9 * k + 6, 3 * k + 1, 6 * k + 3, 6 * k + 4),
                       iota(0, 3 * k + 1));
            break;
        case 9:
            full(bull(6 * k + 1, 0, 3 * k, 3 * k + 3, 9 * k + 3));
            for (int i = 0; i <= 4 * k + 2; ++i)
                bl.push_back(translate(
                    sun(0, 3 * k + 2, 6 * k + 4, 6 * k + 5, 9 * k + 7, 9 * k + 6), 3 * i, u));
            break;
        case 12:
            push_orbit(bull(6 * k + 1, 0, 3 * k, 6 * k + 6, 9 * k + 5), iota(0, 3 * k + 2));
            push_orbit(bull(9 * k + 4, 3 * k + 3, 6 * k + 3, 6 * k + 6, 12 * k + 8),
                       iota(0, 3 * k + 2));
            push_orbit(bull(12 * k + 7, 6 * k + 6, 9 * k + 6, 12 * k + 9, 3 * k - 1),
                       iota(0, 6 * k + 5));
            push_orbit(sun(0, 3 * k + 3, 9 * k + 9, 6 * k + 3, 9 * k + 6, 6 * k + 6),
                       iota(0, 3 * k + 2));
            for (int i = 0; i <= 4 * k + 3; ++i)
                bl.push_back(translate(
                    sun(0, 3 * k + 2, 6 * k + 4, 6 * k + 8, 9 * k + 10, 9 * k + 6), 3 * i, u));
            break;
    }

    auto rep = verify_decomposition(d);
    if (!rep.ok)
        throw std::logic_error("bull/sun table for u=" + std::to_string(u) +
                               " failed verification: " + rep.summary());
    if (two_degree_profile(d) != bull_sun_expected_d2(k, h))
        throw std::logic_error("bull/sun table for u=" + std::to_string(u) +
                               " has the wrong 2-degree profile");
    return d;
}

}  // namespace sunweave

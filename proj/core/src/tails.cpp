#include "sqroot/tails.hpp"

#include <algorithm>
#include <tuple>

namespace sqroot {

std::vector<TailMatch> detect_tails(const Graph& g)
{
    using Index = Graph::Index;
    std::vector<TailMatch> found;

    for (Index v1 = 0; v1 < g.order(); ++v1) {
        if (g.degree(v1) != 2)
            continue;
        const auto ends = g.neighbors(v1);
        for (int flip = 0; flip < 2; ++flip) {
            const Index v2 = ends[flip];
            const Index v3 = ends[1 - flip];
            if (!g.adjacent(v2, v3) || g.degree(v2) != 3)
                continue;
            Index v = v1;
            for (auto w : g.neighbors(v2))
                if (w != v1 && w != v3)
                    v = w;
            if (v == v1 || !g.adjacent(v3, v))
                continue;
            // N(v) contains v2 and v3, so N(v) != {v2, v3} means deg(v) > 2
            if (g.degree(v) <= 2)
                continue;

            TailMatch match{g.label(v), g.label(v1), g.label(v2), g.label(v3), {}};
            bool ok = true;
            for (auto w : g.neighbors(v3)) {
                if (w == v1 || w == v2 || w == v)
                    continue;
                if (!g.adjacent(v, w)) {
                    ok = false;
                    break;
                }
                match.x.insert(g.label(w));
            }
            if (ok)
                found.push_back(std::move(match));
        }
    }
    std::sort(found.begin(), found.end(), [](const TailMatch& p, const TailMatch& q) {
        return std::tie(p.v, p.v1, p.v2, p.v3) < std::tie(q.v, q.v1, q.v2, q.v3);
    });
    return found;
}

} // namespace sqroot

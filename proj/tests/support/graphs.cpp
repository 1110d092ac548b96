#include "graphs.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_map>

#include "sqroot/planarity.hpp"

namespace sqroot::testing {

namespace {

std::vector<std::string> labels(std::size_t n, const std::string& prefix)
{
    std::vector<std::string> out;
    for (std::size_t i = 0; i < n; ++i)
        out.push_back(prefix + std::to_string(i));
    return out;
}

} // namespace

Graph complete(std::size_t n, const std::string& prefix)
{
    std::vector<std::pair<std::string, std::string>> edges;
    auto vs = labels(n, prefix);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            edges.emplace_back(vs[i], vs[j]);
    return Graph::from_edges(vs, edges);
}

Graph cycle(std::size_t n, const std::string& prefix)
{
    std::vector<std::pair<std::string, std::string>> edges;
    auto vs = labels(n, prefix);
    for (std::size_t i = 0; i < n; ++i)
        edges.emplace_back(vs[i], vs[(i + 1) % n]);
    return Graph::from_edges(vs, edges);
}

Graph path(std::size_t n, const std::string& prefix)
{
    std::vector<std::pair<std::string, std::string>> edges;
    auto vs = labels(n, prefix);
    for (std::size_t i = 0; i + 1 < n; ++i)
        edges.emplace_back(vs[i], vs[i + 1]);
    return Graph::from_edges(vs, edges);
}

Graph star(std::size_t leaves)
{
    auto vs = labels(leaves, "v");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& v : vs)
        edges.emplace_back("z", v);
    vs.push_back("z");
    return Graph::from_edges(vs, edges);
}

Graph complete_bipartite(std::size_t a, std::size_t b)
{
    auto left = labels(a, "l");
    auto right = labels(b, "r");
    std::vector<std::pair<std::string, std::string>> edges;
    for (const auto& x : left)
        for (const auto& y : right)
            edges.emplace_back(x, y);
    auto vs = left;
    vs.insert(vs.end(), right.begin(), right.end());
    return Graph::from_edges(vs, edges);
}

Graph cube()
{
    auto vs = labels(8, "q");
    std::vector<std::pair<std::string, std::string>> edges;
    for (int i = 0; i < 8; ++i)
        for (int bit = 0; bit < 3; ++bit) {
            const int j = i ^ (1 << bit);
            if (i < j)
                edges.emplace_back(vs[i], vs[j]);
        }
    return Graph::from_edges(vs, edges);
}

Graph edgeless(std::size_t n, const std::string& prefix) { return Graph::from_edges(labels(n, prefix), {}); }

Graph grid(std::size_t rows, std::size_t cols)
{
    std::vector<std::string> vs;
    std::vector<std::pair<std::string, std::string>> edges;
    auto name = [](std::size_t r, std::size_t c) { return "g" + std::to_string(r) + "_" + std::to_string(c); };
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) {
            vs.push_back(name(r, c));
            if (r > 0)
                edges.emplace_back(name(r - 1, c), name(r, c));
            if (c > 0)
                edges.emplace_back(name(r, c - 1), name(r, c));
        }
    return Graph::from_edges(vs, edges);
}

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

Graph from_mask(std::size_t n, std::uint64_t mask)
{
    auto vs = labels(n, "v");
    std::vector<std::pair<std::string, std::string>> edges;
    std::size_t bit = 0;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j, ++bit)
            if ((mask >> bit) & 1u)
                edges.emplace_back(vs[i], vs[j]);
    return Graph::from_edges(vs, edges);
}

Graph random_graph(std::size_t n, double p, std::mt19937_64& rng)
{
    std::bernoulli_distribution coin(p);
    auto vs = labels(n, "v");
    std::vector<std::pair<std::string, std::string>> edges;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            if (coin(rng))
                edges.emplace_back(vs[i], vs[j]);
    return Graph::from_edges(vs, edges);
}

std::vector<std::uint32_t> rows_of(const Graph& g)
{
    std::vector<std::uint32_t> rows(g.order(), 0);
    for (auto [a, b] : g.edge_indices()) {
        rows[a] |= 1u << b;
        rows[b] |= 1u << a;
    }
    return rows;
}

std::vector<std::uint32_t> oracle_square(const std::vector<std::uint32_t>& rows)
{
    std::vector<std::uint32_t> out(rows.size(), 0);
    for (std::size_t v = 0; v < rows.size(); ++v) {
        std::uint32_t r = rows[v];
        for (std::size_t w = 0; w < rows.size(); ++w)
            if ((rows[v] >> w) & 1u)
                r |= rows[w];
        out[v] = r & ~(1u << v);
    }
    return out;
}

std::vector<std::vector<std::uint32_t>> oracle_all_roots(const Graph& g)
{
    const auto target = rows_of(g);
    const auto& edges = g.edge_indices();
    std::vector<std::vector<std::uint32_t>> roots;
    for (std::uint64_t subset = 0; subset < (std::uint64_t{1} << edges.size()); ++subset) {
        std::vector<std::uint32_t> rows(g.order(), 0);
        for (std::size_t e = 0; e < edges.size(); ++e)
            if ((subset >> e) & 1u) {
                rows[edges[e].first] |= 1u << edges[e].second;
                rows[edges[e].second] |= 1u << edges[e].first;
            }
        if (oracle_square(rows) == target)
            roots.push_back(rows);
    }
    return roots;
}

namespace {

// Minor search on graphs given as (vertex count, row masks).
struct MinorSearch {
    std::map<std::vector<std::uint32_t>, bool> memo;

    static bool is_k5(const std::vector<std::uint32_t>& rows)
    {
        if (rows.size() != 5)
            return false;
        for (std::size_t v = 0; v < 5; ++v)
            if (static_cast<std::size_t>(__builtin_popcount(rows[v])) != 4)
                return false;
        return true;
    }

    static bool contains_k33(const std::vector<std::uint32_t>& rows)
    {
        if (rows.size() != 6)
            return false;
        for (std::uint32_t side = 0; side < 64; ++side) {
            if (__builtin_popcount(side) != 3 || !(side & 1u))
                continue;
            bool all = true;
            for (std::size_t v = 0; v < 6 && all; ++v)
                if ((side >> v) & 1u)
                    all = (rows[v] & ~side & 63u) == (~side & 63u);
            if (all)
                return true;
        }
        return false;
    }

    static std::vector<std::uint32_t> canonical(const std::vector<std::uint32_t>& rows)
    {
        // smallest relabelling under all permutations (n <= 6)
        const std::size_t n = rows.size();
        std::vector<std::size_t> perm(n);
        for (std::size_t i = 0; i < n; ++i)
            perm[i] = i;
        std::vector<std::uint32_t> best;
        do {
            std::vector<std::uint32_t> r(n, 0);
            for (std::size_t v = 0; v < n; ++v)
                for (std::size_t w = 0; w < n; ++w)
                    if ((rows[v] >> w) & 1u)
                        r[perm[v]] |= 1u << perm[w];
            if (best.empty() || r < best)
                best = r;
        } while (std::next_permutation(perm.begin(), perm.end()));
        return best;
    }

    static std::vector<std::uint32_t> drop_vertex(const std::vector<std::uint32_t>& rows, std::size_t v)
    {
        std::vector<std::uint32_t> out;
        for (std::size_t w = 0; w < rows.size(); ++w) {
            if (w == v)
                continue;
            const std::uint32_t low = rows[w] & ((1u << v) - 1);
            const std::uint32_t high = (rows[w] >> (v + 1)) << v;
            out.push_back(low | high);
        }
        return out;
    }

    bool has_forbidden_minor(const std::vector<std::uint32_t>& rows)
    {
        if (rows.size() < 5)
            return false;
        if (is_k5(rows) || contains_k33(rows))
            return true;
        const auto key = canonical(rows);
        if (auto it = memo.find(key); it != memo.end())
            return it->second;

        bool found = false;
        const std::size_t n = rows.size();
        for (std::size_t v = 0; v < n && !found; ++v)
            found = has_forbidden_minor(drop_vertex(rows, v));
        for (std::size_t v = 0; v < n && !found; ++v)
            for (std::size_t w = v + 1; w < n && !found; ++w) {
                if (!((rows[v] >> w) & 1u))
                    continue;
                auto deleted = rows;
                deleted[v] &= ~(1u << w);
                deleted[w] &= ~(1u << v);
                found = has_forbidden_minor(deleted);
                if (found)
                    break;
                // contract w into v
                auto merged = rows;
                merged[v] |= merged[w];
                for (std::size_t x = 0; x < n; ++x)
                    if ((merged[x] >> w) & 1u)
                        merged[x] |= 1u << v;
                merged[v] &= ~((1u << v) | (1u << w));
                found = has_forbidden_minor(drop_vertex(merged, w));
            }
        memo.emplace(key, found);
        return found;
    }
};

} // namespace

bool oracle_planar(const Graph& g)
{
    static MinorSearch search;
    return !search.has_forbidden_minor(rows_of(g));
}

bool oracle_three_colorable(const Graph& g)
{
    const std::size_t n = g.order();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= 3;
    std::vector<int> colour(n);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3)
            colour[i] = static_cast<int>(c % 3);
        bool proper = true;
        for (auto [a, b] : g.edge_indices())
            if (colour[a] == colour[b]) {
                proper = false;
                break;
            }
        if (proper)
            return true;
    }
    return false;
}

bool oracle_setsplit(const SetSplitInstance& inst)
{
    const std::size_t n = inst.ground_set.size();
    std::map<std::string, std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i)
        pos[inst.ground_set[i]] = i;
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i)
        total *= 3;
    std::vector<int> part(n);
    for (std::uint64_t code = 0; code < total; ++code) {
        std::uint64_t c = code;
        for (std::size_t i = 0; i < n; ++i, c /= 3)
            part[i] = static_cast<int>(c % 3);
        bool ok = true;
        for (const auto& subset : inst.collection) {
            int hit = 0;
            for (const auto& e : subset)
                hit |= 1 << part[pos.at(e)];
            if (hit != 7) {
                ok = false;
                break;
            }
        }
        if (ok)
            return true;
    }
    return false;
}

SetSplitInstance random_instance(std::mt19937_64& rng, std::size_t max_ground, std::size_t max_sets)
{
    while (true) {
        const std::size_t n = std::uniform_int_distribution<std::size_t>(3, max_ground)(rng);
        const std::size_t k = std::uniform_int_distribution<std::size_t>(1, max_sets)(rng);
        std::vector<std::string> ground;
        for (std::size_t i = 0; i < n; ++i)
            ground.push_back("s" + std::to_string(i));
        std::vector<std::vector<std::string>> collection;
        for (std::size_t j = 0; j < k; ++j) {
            const std::size_t size = std::uniform_int_distribution<std::size_t>(3, std::min<std::size_t>(n, 4))(rng);
            auto shuffled = ground;
            std::shuffle(shuffled.begin(), shuffled.end(), rng);
            shuffled.resize(size);
            collection.push_back(shuffled);
        }
        auto inst = SetSplitInstance::make(ground, collection);
        if (is_planar(incidence_graph(inst)))
            return inst;
    }
}

Partition3 make_partition(std::set<std::string> p1, std::set<std::string> p2, std::set<std::string> p3)
{
    Partition3 p;
    p.parts[0] = std::move(p1);
    p.parts[1] = std::move(p2);
    p.parts[2] = std::move(p3);
    return p;
}

SetSplitInstance four_triples()
{
    return SetSplitInstance::make({"1", "2", "3", "4"},
                                  {{"2", "3", "4"}, {"1", "3", "4"}, {"1", "2", "4"}, {"1", "2", "3"}});
}

} // namespace sqroot::testing

#include "sqroot/coloring.hpp"

#include <set>

#include "sqroot/error.hpp"
#include "sqroot/planarity.hpp"

namespace sqroot {

ColoringInstance ColoringInstance::make(Graph g)
{
    if (!is_planar(g))
        throw Error(ErrorCode::NotPlanar, "3-colouring input graph is not planar");
    return ColoringInstance{std::move(g)};
}

ColoringReduction color_to_setsplit(const ColoringInstance& ci)
{
    const Graph& g = ci.graph;
    if (!is_planar(g))
        throw Error(ErrorCode::NotPlanar, "3-colouring input graph is not planar");
    if (g.size() == 0)
        throw Error(ErrorCode::EmptyEdgeSet, "graph has no edges, the reduced collection would be empty");

    ColoringReduction red;
    std::set<std::string> used(g.vertices().begin(), g.vertices().end());
    GraphBuilder augmented;
    for (const auto& v : g.vertices()) {
        red.instance.ground_set.push_back(v);
        red.origin.emplace(v, ElementOrigin::Vertex);
        augmented.add_vertex(v);
    }
    for (const auto& e : g.edges()) {
        std::string z = "z_" + e.u + "_" + e.v;
        while (used.count(z))
            z += '\'';
        used.insert(z);
        red.instance.ground_set.push_back(z);
        red.instance.collection.push_back({e.u, e.v, z});
        red.origin.emplace(z, ElementOrigin::Subdivision);
        red.subdivided_edge.emplace(z, e);
        augmented.add_vertex(z);
    }
    for (const auto& e : g.edges())
        augmented.add_edge(e.u, e.v);
    for (const auto& [z, e] : red.subdivided_edge) {
        augmented.add_edge(z, e.u);
        augmented.add_edge(z, e.v);
    }
    red.augmented = augmented.build();
    return red;
}

bool is_proper_coloring(const Graph& g, const Coloring3& f)
{
    for (const auto& v : g.vertices()) {
        auto it = f.assignment.find(v);
        if (it == f.assignment.end() || it->second < 1 || it->second > 3)
            return false;
    }
    for (const auto& e : g.edges())
        if (f.assignment.at(e.u) == f.assignment.at(e.v))
            return false;
    return true;
}

Coloring3 lift_coloring(const ColoringReduction& red, const Coloring3& on_original)
{
    Coloring3 out;
    for (const auto& [label, origin] : red.origin) {
        if (origin != ElementOrigin::Vertex)
            continue;
        auto it = on_original.assignment.find(label);
        if (it == on_original.assignment.end())
            throw Error(ErrorCode::ImproperColoring, "vertex '" + label + "' has no colour");
        out.assignment.emplace(label, it->second);
    }
    for (const auto& [z, e] : red.subdivided_edge) {
        const int a = out.assignment.at(e.u);
        const int b = out.assignment.at(e.v);
        if (a == b)
            throw Error(ErrorCode::ImproperColoring, "edge '" + e.u + "' -- '" + e.v + "' is monochromatic");
        out.assignment.emplace(z, 6 - a - b);
    }
    if (!is_proper_coloring(red.augmented, out))
        throw Error(ErrorCode::ImproperColoring, "colouring of the original graph is not proper");
    return out;
}

Partition3 coloring_to_partition(const ColoringReduction& red, const Coloring3& f)
{
    if (!is_proper_coloring(red.augmented, f))
        throw Error(ErrorCode::ImproperColoring, "not a proper 3-colouring of the augmented graph");
    Partition3 p;
    for (const auto& v : red.augmented.vertices())
        p.parts[f.assignment.at(v) - 1].insert(v);
    return p;
}

Coloring3 partition_to_coloring(const ColoringReduction& red, const Partition3& p)
{
    bool valid = false;
    try {
        valid = verify_partition(red.instance, p);
    }
    catch (const Error& e) {
        throw Error(ErrorCode::InvalidPartition, e.what());
    }
    if (!valid)
        throw Error(ErrorCode::InvalidPartition, "some triple does not meet all three parts");

    Coloring3 f;
    for (int i = 0; i < 3; ++i)
        for (const auto& v : p.parts[i])
            f.assignment.emplace(v, i + 1);
    if (!is_proper_coloring(red.augmented, f))
        throw Error(ErrorCode::ConstructionSelfCheckFailed, "colouring from a valid partition is improper");
    return f;
}

Coloring3 restrict_coloring(const Coloring3& f, const Graph& g)
{
    Coloring3 out;
    for (const auto& v : g.vertices()) {
        auto it = f.assignment.find(v);
        if (it != f.assignment.end())
            out.assignment.emplace(v, it->second);
    }
    return out;
}

std::optional<Coloring3> find_3_coloring(const Graph& g, std::uint64_t max_assignments)
{
    const std::size_t n = g.order();
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < n; ++i) {
        space *= 3;
        if (space > max_assignments)
            throw Error(ErrorCode::BudgetExceeded, "3^" + std::to_string(n) + " colourings exceed the budget of "
                                                       + std::to_string(max_assignments));
    }

    std::vector<int> colour(n, 0);
    auto fits = [&](std::size_t v) {
        for (auto w : g.neighbors(v))
            if (w < v && colour[w] == colour[v])
                return false;
        return true;
    };
    std::size_t pos = 0;
    while (true) {
        if (pos == n) {
            Coloring3 f;
            for (std::size_t v = 0; v < n; ++v)
                f.assignment.emplace(g.label(v), colour[v]);
            return f;
        }
        ++colour[pos];
        if (colour[pos] > 3) {
            colour[pos] = 0;
            if (pos == 0)
                return std::nullopt;
            --pos;
            continue;
        }
        if (fits(pos))
            ++pos;
    }
}

} // namespace sqroot

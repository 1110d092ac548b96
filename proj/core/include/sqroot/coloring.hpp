#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>

#include "sqroot/graph.hpp"
#include "sqroot/setsplit.hpp"

namespace sqroot {

/// Planar 3-colouring instance. make() throws NotPlanar.
struct ColoringInstance {
    Graph graph;

    static ColoringInstance make(Graph g);
};

/// Colours are 1, 2, 3.
struct Coloring3 {
    std::map<std::string, int> assignment;

    bool operator==(const Coloring3&) const = default;
};

enum class ElementOrigin { Vertex, Subdivision };

/// Output of the colouring -> set splitting reduction. `augmented` is the
/// input graph with one extra vertex z per edge, adjacent to both ends.
struct ColoringReduction {
    SetSplitInstance instance;
    Graph augmented;
    std::map<std::string, ElementOrigin> origin;
    std::map<std::string, VertexPair> subdivided_edge; ///< z label -> edge it sits on
};

/// Ground set = V(G) followed by one z per edge (edge order of the input);
/// one triple {x, y, z_xy} per edge. Throws NotPlanar, EmptyEdgeSet.
ColoringReduction color_to_setsplit(const ColoringInstance& ci);

bool is_proper_coloring(const Graph& g, const Coloring3& f);

/// Extends a proper colouring of the original graph to the augmented graph;
/// each z takes the colour unused by its two neighbours. Throws ImproperColoring.
Coloring3 lift_coloring(const ColoringReduction& red, const Coloring3& on_original);

/// Colour classes as parts. Throws ImproperColoring unless f is a proper,
/// total colouring of the augmented graph.
Partition3 coloring_to_partition(const ColoringReduction& red, const Coloring3& f);

/// Part i becomes colour i+1. Throws InvalidPartition unless p solves the
/// reduced instance; the result is re-checked for properness.
Coloring3 partition_to_coloring(const ColoringReduction& red, const Partition3& p);

/// Restriction of f to the vertices of g.
Coloring3 restrict_coloring(const Coloring3& f, const Graph& g);

/// Lexicographically first proper 3-colouring (vertex order, colours 1..3).
/// Throws BudgetExceeded when 3^n > max_assignments.
std::optional<Coloring3> find_3_coloring(const Graph& g, std::uint64_t max_assignments = default_setsplit_budget);

} // namespace sqroot

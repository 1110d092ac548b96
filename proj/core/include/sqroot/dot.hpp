#pragma once

#include <map>
#include <string>
#include <vector>

#include "sqroot/gadget.hpp"
#include "sqroot/graph.hpp"

namespace sqroot {

struct DotExport {
    std::string text;
    /// One entry per vertex that had no role in the supplied role map.
    std::vector<std::string> warnings;
};

/// Undirected Graphviz output. With a role map, gadget roles get distinct
/// shapes and fill colours; vertices missing from the map keep the default
/// style and produce a warning.
DotExport to_dot(const Graph& g, const std::map<std::string, VertexRole>* roles = nullptr);

} // namespace sqroot

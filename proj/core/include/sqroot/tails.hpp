#pragma once

#include <set>
#include <string>
#include <vector>

#include "sqroot/graph.hpp"

namespace sqroot {

/// X-tail (v1, v2, v3) at v:
///   N(v1) = {v2, v3}, N(v2) = {v1, v3, v}, N(v3) = {v1, v2, v} + X,
///   X ⊆ N(v) \ {v2, v3}, N(v) != {v2, v3}.
/// In every square root H of the graph: N_H(v1) = {v2}, N_H(v2) = {v1, v3},
/// N_H(v3) = {v2, v} and N_H(v) = {v3} + X.
struct TailMatch {
    std::string v;
    std::string v1;
    std::string v2;
    std::string v3;
    std::set<std::string> x;

    auto operator<=>(const TailMatch&) const = default;
};

/// Every tail of g, ordered by (v, v1, v2, v3). Symmetric or overlapping
/// matches are all reported.
std::vector<TailMatch> detect_tails(const Graph& g);

} // namespace sqroot

#pragma once

#include <array>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sqroot/graph.hpp"
#include "sqroot/setsplit.hpp"

namespace sqroot {

enum class RoleKind { Element, SetVertex, SetTail, A, B, BTail };

std::string_view to_string(RoleKind kind);
std::optional<RoleKind> parse_role_kind(std::string_view name);

/// Gadget role of a vertex. The label is a function of the role:
///   Element(s)      x:<s>
///   SetVertex(c)    c:<c>
///   SetTail(c, j)   xc:<j>:<c>
///   A(i), B(i)      a:<i>, b:<i>
///   BTail(i, j)     bt:<i>:<j>
/// with c the 0-based subset index and i, j in 1..3.
struct VertexRole {
    RoleKind kind = RoleKind::Element;
    std::string element;
    std::size_t set = 0;
    int i = 0;
    int j = 0;

    static VertexRole element_of(std::string s) { return {RoleKind::Element, std::move(s), 0, 0, 0}; }
    static VertexRole set_vertex(std::size_t c) { return {RoleKind::SetVertex, {}, c, 0, 0}; }
    static VertexRole set_tail(std::size_t c, int j) { return {RoleKind::SetTail, {}, c, 0, j}; }
    static VertexRole a(int i) { return {RoleKind::A, {}, 0, i, 0}; }
    static VertexRole b(int i) { return {RoleKind::B, {}, 0, i, 0}; }
    static VertexRole b_tail(int i, int j) { return {RoleKind::BTail, {}, 0, i, j}; }

    std::string label() const;

    bool operator==(const VertexRole&) const = default;
};

/// Edge families (i)-(vii) of the construction, in order.
inline constexpr std::size_t gadget_family_count = 7;

struct LabeledGadgetGraph {
    Graph graph;
    std::map<std::string, VertexRole> roles;
    SetSplitInstance instance;
    /// Edges contributed by each family while building.
    std::array<std::size_t, gadget_family_count> family_sizes{};
};

/// {a:1, a:2, a:3, b:1, b:2, b:3}
std::vector<std::string> gadget_apex_labels();

/// Builds the square-root instance for a set splitting instance.
/// Vertices: x_s per element; x_c plus a three-vertex tail per subset;
/// a_i, b_i and a three-vertex tail at each b_i. Edge families:
///   (i)   x_s x_s' for distinct elements
///   (ii)  a_i x_s, b_i x_s
///   (iii) a_i x_c, b_i x_c
///   (iv)  x_c x_c' for intersecting subsets
///   (v)   tail at x_c with X = {x_s : s in c}
///   (vi)  a_i b_j for all i, j; b_i b_j for i < j
///   (vii) tail at b_i with X = {x_s : s in S} + {a_i}
/// Throws InvalidInstance (validate_instance failed) or EmptyCollection.
LabeledGadgetGraph setsplit_to_graph(const SetSplitInstance& inst);

/// Square root built from a valid partition: the tail paths, x_c x_s for
/// s in c, b_i x_s for all s, b_i a_i, and x_s a_i for s in S_i.
/// Re-verifies square(H) == G and that H minus the six a/b vertices is
/// planar before returning. Throws InvalidPartition, or
/// ConstructionSelfCheckFailed if the self-check fails.
Graph partition_to_root(const LabeledGadgetGraph& gg, const Partition3& p);

/// S_1 = {s : x_s a_1 in H}, S_2 = {s : x_s a_2 in H}, S_3 = the rest.
/// Throws NotASquareRoot, or DisjointnessViolated if some x_s is adjacent
/// to two of the a_i (impossible for a genuine root).
Partition3 root_to_partition(const LabeledGadgetGraph& gg, const Graph& h);

} // namespace sqroot

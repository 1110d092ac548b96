#include "sqroot/gadget.hpp"

#include <algorithm>
#include <set>

#include "sqroot/error.hpp"
#include "sqroot/planarity.hpp"

namespace sqroot {

std::string_view to_string(RoleKind kind)
{
    switch (kind) {
    case RoleKind::Element: return "Element";
    case RoleKind::SetVertex: return "SetVertex";
    case RoleKind::SetTail: return "SetTail";
    case RoleKind::A: return "A";
    case RoleKind::B: return "B";
    case RoleKind::BTail: return "BTail";
    }
    return "?";
}

std::optional<RoleKind> parse_role_kind(std::string_view name)
{
    for (auto k : {RoleKind::Element, RoleKind::SetVertex, RoleKind::SetTail, RoleKind::A, RoleKind::B,
                   RoleKind::BTail})
        if (to_string(k) == name)
            return k;
    return std::nullopt;
}

std::string VertexRole::label() const
{
    switch (kind) {
    case RoleKind::Element: return "x:" + element;
    case RoleKind::SetVertex: return "c:" + std::to_string(set);
    case RoleKind::SetTail: return "xc:" + std::to_string(j) + ":" + std::to_string(set);
    case RoleKind::A: return "a:" + std::to_string(i);
    case RoleKind::B: return "b:" + std::to_string(i);
    case RoleKind::BTail: return "bt:" + std::to_string(i) + ":" + std::to_string(j);
    }
    return {};
}

std::vector<std::string> gadget_apex_labels()
{
    return {"a:1", "a:2", "a:3", "b:1", "b:2", "b:3"};
}

namespace {

std::string x(const std::string& s) { return VertexRole::element_of(s).label(); }
std::string xc(std::size_t c) { return VertexRole::set_vertex(c).label(); }
std::string xct(std::size_t c, int j) { return VertexRole::set_tail(c, j).label(); }
std::string a(int i) { return VertexRole::a(i).label(); }
std::string b(int i) { return VertexRole::b(i).label(); }
std::string bt(int i, int j) { return VertexRole::b_tail(i, j).label(); }

} // namespace

LabeledGadgetGraph setsplit_to_graph(const SetSplitInstance& inst)
{
    const auto violations = validate_instance(inst);
    if (!violations.empty()) {
        std::string msg = "instance fails validation:";
        for (const auto& v : violations)
            msg += " " + v.describe();
        throw Error(ErrorCode::InvalidInstance, msg);
    }
    if (inst.collection.empty())
        throw Error(ErrorCode::EmptyCollection, "the reduction needs at least one subset");

    LabeledGadgetGraph gg;
    gg.instance = inst;
    GraphBuilder builder;
    auto add = [&](VertexRole role) {
        auto label = role.label();
        builder.add_vertex(label);
        gg.roles.emplace(std::move(label), std::move(role));
    };

    const auto& S = inst.ground_set;
    const auto& C = inst.collection;

    for (const auto& s : S)
        add(VertexRole::element_of(s));
    for (std::size_t c = 0; c < C.size(); ++c) {
        add(VertexRole::set_vertex(c));
        for (int j = 1; j <= 3; ++j)
            add(VertexRole::set_tail(c, j));
    }
    for (int i = 1; i <= 3; ++i)
        add(VertexRole::a(i));
    for (int i = 1; i <= 3; ++i)
        add(VertexRole::b(i));
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            add(VertexRole::b_tail(i, j));

    auto& count = gg.family_sizes;
    auto edge = [&](std::size_t family, const std::string& u, const std::string& v) {
        builder.add_edge(u, v);
        ++count[family];
    };

    // (i)
    for (std::size_t p = 0; p < S.size(); ++p)
        for (std::size_t q = p + 1; q < S.size(); ++q)
            edge(0, x(S[p]), x(S[q]));
    // (ii)
    for (int i = 1; i <= 3; ++i)
        for (const auto& s : S) {
            edge(1, a(i), x(s));
            edge(1, b(i), x(s));
        }
    // (iii)
    for (int i = 1; i <= 3; ++i)
        for (std::size_t c = 0; c < C.size(); ++c) {
            edge(2, a(i), xc(c));
            edge(2, b(i), xc(c));
        }
    // (iv)
    std::vector<std::set<std::string>> members;
    for (const auto& c : C)
        members.emplace_back(c.begin(), c.end());
    for (std::size_t c1 = 0; c1 < C.size(); ++c1)
        for (std::size_t c2 = c1 + 1; c2 < C.size(); ++c2)
            if (std::any_of(members[c1].begin(), members[c1].end(),
                            [&](const std::string& s) { return members[c2].count(s) != 0; }))
                edge(3, xc(c1), xc(c2));
    // (v)
    for (std::size_t c = 0; c < C.size(); ++c) {
        edge(4, xct(c, 1), xct(c, 2));
        edge(4, xct(c, 1), xct(c, 3));
        edge(4, xct(c, 2), xct(c, 3));
        edge(4, xct(c, 2), xc(c));
        edge(4, xct(c, 3), xc(c));
        for (const auto& s : C[c]) {
            edge(4, xct(c, 3), x(s));
            edge(4, xc(c), x(s));
        }
    }
    // (vi)
    for (int i = 1; i <= 3; ++i)
        for (int j = 1; j <= 3; ++j)
            edge(5, a(i), b(j));
    for (int i = 1; i <= 3; ++i)
        for (int j = i + 1; j <= 3; ++j)
            edge(5, b(i), b(j));
    // (vii)
    for (int i = 1; i <= 3; ++i) {
        edge(6, bt(i, 1), bt(i, 2));
        edge(6, bt(i, 1), bt(i, 3));
        edge(6, bt(i, 2), bt(i, 3));
        edge(6, bt(i, 2), b(i));
        edge(6, bt(i, 3), b(i));
        for (const auto& s : S)
            edge(6, bt(i, 3), x(s));
        edge(6, bt(i, 3), a(i));
    }

    gg.graph = builder.build();
    return gg;
}

Graph partition_to_root(const LabeledGadgetGraph& gg, const Partition3& p)
{
    bool valid = false;
    try {
        valid = verify_partition(gg.instance, p);
    }
    catch (const Error& e) {
        throw Error(ErrorCode::InvalidPartition, e.what());
    }
    if (!valid)
        throw Error(ErrorCode::InvalidPartition, "some subset does not meet all three parts");

    const auto& S = gg.instance.ground_set;
    const auto& C = gg.instance.collection;
    GraphBuilder builder;
    for (const auto& v : gg.graph.vertices())
        builder.add_vertex(v);

    // paths forced by the tails
    for (std::size_t c = 0; c < C.size(); ++c) {
        builder.add_edge(xct(c, 1), xct(c, 2));
        builder.add_edge(xct(c, 2), xct(c, 3));
        builder.add_edge(xct(c, 3), xc(c));
        for (const auto& s : C[c])
            builder.add_edge(xc(c), x(s));
    }
    for (int i = 1; i <= 3; ++i) {
        builder.add_edge(bt(i, 1), bt(i, 2));
        builder.add_edge(bt(i, 2), bt(i, 3));
        builder.add_edge(bt(i, 3), b(i));
        for (const auto& s : S)
            builder.add_edge(b(i), x(s));
        builder.add_edge(b(i), a(i));
    }
    // the chosen partition
    for (int i = 1; i <= 3; ++i)
        for (const auto& s : p.parts[i - 1])
            builder.add_edge(x(s), a(i));

    Graph h = builder.build();
    if (!verify_square_root(h, gg.graph))
        throw Error(ErrorCode::ConstructionSelfCheckFailed, "constructed root does not square to the gadget graph");
    const auto apex = gadget_apex_labels();
    if (!is_apex_with(h, apex).remainder_planar)
        throw Error(ErrorCode::ConstructionSelfCheckFailed, "constructed root minus the a/b vertices is not planar");
    return h;
}

Partition3 root_to_partition(const LabeledGadgetGraph& gg, const Graph& h)
{
    if (!verify_square_root(h, gg.graph))
        throw Error(ErrorCode::NotASquareRoot, "graph does not square to the gadget graph");

    std::array<std::set<std::string>, 3> touching;
    for (const auto& s : gg.instance.ground_set) {
        int hits = 0;
        for (int i = 1; i <= 3; ++i) {
            if (h.has_edge(x(s), a(i))) {
                touching[i - 1].insert(s);
                ++hits;
            }
        }
        if (hits > 1)
            throw Error(ErrorCode::DisjointnessViolated,
                        "element '" + s + "' is adjacent to " + std::to_string(hits) + " of the a_i in a square root");
    }

    Partition3 p;
    p.parts[0] = touching[0];
    p.parts[1] = touching[1];
    for (const auto& s : gg.instance.ground_set)
        if (!touching[0].count(s) && !touching[1].count(s))
            p.parts[2].insert(s);

    if (!verify_partition(gg.instance, p))
        throw Error(ErrorCode::ConstructionSelfCheckFailed, "partition extracted from a square root is not splitting");
    return p;
}

} // namespace sqroot

#include "sqroot/graph.hpp"

#include <algorithm>
#include <bit>

#include "sqroot/error.hpp"

namespace sqroot {

VertexPair::VertexPair(std::string a, std::string b)
{
    if (a == b)
        throw Error(ErrorCode::SelfLoop, "pair '" + a + "' has equal endpoints");
    if (b < a)
        std::swap(a, b);
    u = std::move(a);
    v = std::move(b);
}

Graph Graph::from_edges(const std::vector<std::string>& vertices,
                        const std::vector<std::pair<std::string, std::string>>& edges)
{
    GraphBuilder builder;
    for (const auto& v : vertices)
        builder.add_vertex(v);
    for (const auto& [a, b] : edges)
        builder.add_edge(a, b);
    return builder.build();
}

std::optional<Graph::Index> Graph::find(std::string_view label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        return std::nullopt;
    return it->second;
}

Graph::Index Graph::index(std::string_view label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        throw Error(ErrorCode::UnknownVertex, "no vertex '" + std::string(label) + "'");
    return it->second;
}

bool Graph::has_edge(std::string_view a, std::string_view b) const
{
    auto ia = find(a);
    auto ib = find(b);
    return ia && ib && adjacent(*ia, *ib);
}

std::vector<VertexPair> Graph::edges() const
{
    std::vector<VertexPair> out;
    out.reserve(edges_.size());
    for (auto [a, b] : edges_)
        out.emplace_back(labels_[a], labels_[b]);
    return out;
}

bool Graph::same_vertex_set(const Graph& other) const
{
    if (order() != other.order())
        return false;
    return std::all_of(labels_.begin(), labels_.end(), [&](const std::string& l) { return other.contains(l); });
}

bool operator==(const Graph& a, const Graph& b)
{
    if (a.size() != b.size() || !a.same_vertex_set(b))
        return false;
    for (auto [x, y] : a.edges_)
        if (!b.adjacent(b.index(a.labels_[x]), b.index(a.labels_[y])))
            return false;
    return true;
}

GraphBuilder& GraphBuilder::add_vertex(std::string label)
{
    if (label.empty())
        throw Error(ErrorCode::UnknownVertex, "empty vertex label");
    if (has_vertex(label))
        throw Error(ErrorCode::DuplicateVertex, "vertex '" + label + "' declared twice");
    index_.emplace(label, labels_.size());
    labels_.push_back(std::move(label));
    return *this;
}

GraphBuilder::Index GraphBuilder::index(std::string_view label) const
{
    auto it = index_.find(label);
    if (it == index_.end())
        throw Error(ErrorCode::UnknownVertex, "no vertex '" + std::string(label) + "'");
    return it->second;
}

GraphBuilder& GraphBuilder::add_edge(std::string_view a, std::string_view b)
{
    return add_edge(index(a), index(b));
}

GraphBuilder& GraphBuilder::add_edge(Index a, Index b)
{
    if (a >= labels_.size() || b >= labels_.size())
        throw Error(ErrorCode::UnknownVertex, "edge endpoint index out of range");
    if (a == b)
        throw Error(ErrorCode::SelfLoop, "loop at '" + labels_[a] + "'");
    if (labels_[b] < labels_[a])
        std::swap(a, b);
    if (!seen_.insert({a, b}).second)
        throw Error(ErrorCode::DuplicateEdge, "edge '" + labels_[a] + "' -- '" + labels_[b] + "' added twice");
    edges_.emplace_back(a, b);
    return *this;
}

bool GraphBuilder::has_edge(std::string_view a, std::string_view b) const
{
    auto ia = index_.find(a);
    auto ib = index_.find(b);
    if (ia == index_.end() || ib == index_.end() || ia->second == ib->second)
        return false;
    Index x = ia->second, y = ib->second;
    if (labels_[y] < labels_[x])
        std::swap(x, y);
    return seen_.count({x, y}) != 0;
}

Graph GraphBuilder::build() const
{
    Graph g;
    g.labels_ = labels_;
    g.index_ = index_;
    g.edges_ = edges_;
    const std::size_t n = labels_.size();
    g.words_ = (n + 63) / 64;
    g.bits_.assign(n * g.words_, 0);
    g.adjacency_.assign(n, {});
    for (auto [a, b] : edges_) {
        g.bits_[a * g.words_ + b / 64] |= std::uint64_t{1} << (b % 64);
        g.bits_[b * g.words_ + a / 64] |= std::uint64_t{1} << (a % 64);
        g.adjacency_[a].push_back(b);
        g.adjacency_[b].push_back(a);
    }
    for (auto& list : g.adjacency_)
        std::sort(list.begin(), list.end());
    return g;
}

Graph square(const Graph& g)
{
    const std::size_t n = g.order();
    const std::size_t words = g.row_words();
    GraphBuilder builder;
    for (const auto& l : g.vertices())
        builder.add_vertex(l);

    std::vector<std::uint64_t> row(words);
    for (Graph::Index v = 0; v < n; ++v) {
        auto own = g.row(v);
        std::copy(own.begin(), own.end(), row.begin());
        for (auto w : g.neighbors(v)) {
            auto other = g.row(w);
            for (std::size_t k = 0; k < words; ++k)
                row[k] |= other[k];
        }
        // only emit pairs (v, u) with u > v so each edge is added once
        for (std::size_t k = v / 64; k < words; ++k) {
            std::uint64_t word = row[k];
            if (k == v / 64)
                word &= ~std::uint64_t{0} << (v % 64) << 1;
            while (word) {
                const auto bit = static_cast<std::size_t>(std::countr_zero(word));
                builder.add_edge(v, k * 64 + bit);
                word &= word - 1;
            }
        }
    }
    return builder.build();
}

namespace {

void require_same_vertices(const Graph& h, const Graph& g)
{
    if (!h.same_vertex_set(g))
        throw Error(ErrorCode::VertexSetMismatch, "graphs have different vertex label sets");
}

} // namespace

bool verify_square_root(const Graph& h, const Graph& g)
{
    require_same_vertices(h, g);
    return square(h) == g;
}

bool neighborhood_clique_check(const Graph& h, const Graph& g)
{
    require_same_vertices(h, g);
    std::vector<Graph::Index> to_g(h.order());
    for (Graph::Index i = 0; i < h.order(); ++i)
        to_g[i] = g.index(h.label(i));

    for (auto [a, b] : h.edge_indices())
        if (!g.adjacent(to_g[a], to_g[b]))
            throw Error(ErrorCode::NotSubgraph,
                        "edge '" + h.label(a) + "' -- '" + h.label(b) + "' of the root is not an edge of the square");

    for (Graph::Index v = 0; v < h.order(); ++v) {
        auto nbrs = h.neighbors(v);
        for (std::size_t i = 0; i < nbrs.size(); ++i)
            for (std::size_t j = i + 1; j < nbrs.size(); ++j)
                if (!g.adjacent(to_g[nbrs[i]], to_g[nbrs[j]]))
                    return false;
    }
    return true;
}

bool is_subgraph(const Graph& h, const Graph& g)
{
    if (!h.same_vertex_set(g))
        return false;
    for (auto [a, b] : h.edge_indices())
        if (!g.has_edge(h.label(a), h.label(b)))
            return false;
    return true;
}

SquareDifference square_difference(const Graph& h, const Graph& g)
{
    require_same_vertices(h, g);
    const Graph h2 = square(h);
    SquareDifference diff;
    for (auto [a, b] : g.edge_indices())
        if (!h2.has_edge(g.label(a), g.label(b)))
            diff.missing.emplace_back(g.label(a), g.label(b));
    for (auto [a, b] : h2.edge_indices())
        if (!g.has_edge(h2.label(a), h2.label(b)))
            diff.extra.emplace_back(h2.label(a), h2.label(b));
    std::sort(diff.missing.begin(), diff.missing.end());
    std::sort(diff.extra.begin(), diff.extra.end());
    return diff;
}

Graph remove_vertices(const Graph& g, std::span<const std::string> removed)
{
    std::vector<bool> gone(g.order(), false);
    for (const auto& l : removed)
        gone[g.index(l)] = true;
    GraphBuilder builder;
    for (Graph::Index i = 0; i < g.order(); ++i)
        if (!gone[i])
            builder.add_vertex(g.label(i));
    for (auto [a, b] : g.edge_indices())
        if (!gone[a] && !gone[b])
            builder.add_edge(g.label(a), g.label(b));
    return builder.build();
}

} // namespace sqroot

#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sqroot {

/// Unordered pair of distinct vertex labels, stored with u < v.
struct VertexPair {
    std::string u;
    std::string v;

    VertexPair(std::string a, std::string b);

    auto operator<=>(const VertexPair&) const = default;
};

/// Simple undirected graph with string labels. Immutable once built; use
/// GraphBuilder to construct one. Equality is label-set plus edge-set
/// equality and ignores insertion order.
class Graph {
public:
    using Index = std::size_t;

    Graph() = default;

    /// Convenience constructor that goes through GraphBuilder validation.
    static Graph from_edges(const std::vector<std::string>& vertices,
                            const std::vector<std::pair<std::string, std::string>>& edges);

    std::size_t order() const noexcept { return labels_.size(); }
    std::size_t size() const noexcept { return edges_.size(); }

    const std::vector<std::string>& vertices() const noexcept { return labels_; }
    const std::string& label(Index i) const { return labels_.at(i); }

    std::optional<Index> find(std::string_view label) const;
    /// Throws Error(UnknownVertex) for labels not in the graph.
    Index index(std::string_view label) const;
    bool contains(std::string_view label) const { return find(label).has_value(); }

    bool adjacent(Index a, Index b) const noexcept
    {
        return (bits_[a * words_ + b / 64] >> (b % 64)) & 1u;
    }
    bool has_edge(std::string_view a, std::string_view b) const;

    std::span<const Index> neighbors(Index i) const { return adjacency_.at(i); }
    std::size_t degree(Index i) const { return adjacency_.at(i).size(); }

    /// Packed adjacency row of vertex i; `row_words()` 64-bit words.
    std::span<const std::uint64_t> row(Index i) const { return {bits_.data() + i * words_, words_}; }
    std::size_t row_words() const noexcept { return words_; }

    /// Edges in insertion order; each pair is oriented so that
    /// label(first) < label(second).
    const std::vector<std::pair<Index, Index>>& edge_indices() const noexcept { return edges_; }
    std::vector<VertexPair> edges() const;

    bool same_vertex_set(const Graph& other) const;

    friend bool operator==(const Graph& a, const Graph& b);

private:
    friend class GraphBuilder;

    std::vector<std::string> labels_;
    std::map<std::string, Index, std::less<>> index_;
    std::vector<std::vector<Index>> adjacency_;
    std::vector<std::pair<Index, Index>> edges_;
    std::vector<std::uint64_t> bits_;
    std::size_t words_ = 0;
};

/// Validating builder. Rejects duplicate labels, unknown endpoints, loops and
/// duplicate edges with an Error instead of silently repairing the input.
class GraphBuilder {
public:
    using Index = Graph::Index;

    GraphBuilder& add_vertex(std::string label);
    GraphBuilder& add_edge(std::string_view a, std::string_view b);
    GraphBuilder& add_edge(Index a, Index b);

    bool has_vertex(std::string_view label) const { return index_.find(label) != index_.end(); }
    bool has_edge(std::string_view a, std::string_view b) const;
    Index index(std::string_view label) const;
    std::size_t order() const noexcept { return labels_.size(); }

    Graph build() const;

private:
    std::vector<std::string> labels_;
    std::map<std::string, Index, std::less<>> index_;
    std::vector<std::pair<Index, Index>> edges_;
    std::set<std::pair<Index, Index>> seen_;
};

/// G²: same vertices, uv adjacent iff their distance in g is 1 or 2.
Graph square(const Graph& g);

/// True iff square(h) == g. Throws VertexSetMismatch when label sets differ.
bool verify_square_root(const Graph& h, const Graph& g);

/// True iff N_h(v) is a clique in g for every v. Together with g ⊆ square(h)
/// this is equivalent to square(h) == g.
/// Throws VertexSetMismatch, or NotSubgraph when some h-edge is missing in g.
bool neighborhood_clique_check(const Graph& h, const Graph& g);

/// Equal vertex sets and E(h) ⊆ E(g).
bool is_subgraph(const Graph& h, const Graph& g);

/// Edge-level difference between square(h) and g, used for diagnostics.
struct SquareDifference {
    std::vector<VertexPair> missing; ///< edges of g not covered by square(h)
    std::vector<VertexPair> extra;   ///< edges of square(h) absent from g
    bool empty() const noexcept { return missing.empty() && extra.empty(); }
};

SquareDifference square_difference(const Graph& h, const Graph& g);

/// Induced subgraph on V(g) minus `removed`. Throws UnknownVertex.
Graph remove_vertices(const Graph& g, std::span<const std::string> removed);

} // namespace sqroot

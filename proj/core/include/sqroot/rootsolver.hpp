#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sqroot/graph.hpp"

namespace sqroot {

enum class EdgeState : std::uint8_t { Unknown, ForcedIn, ForcedOut };

/// Three-state assignment over the edges of g (the only pairs a square root
/// can use). Pairs that are not edges of g read as ForcedOut.
class PartialRoot {
public:
    PartialRoot() = default;
    explicit PartialRoot(const Graph& g);

    const std::vector<VertexPair>& pairs() const noexcept { return pairs_; }
    EdgeState state(std::size_t i) const { return states_.at(i); }
    EdgeState state(const VertexPair& p) const;
    void set(std::size_t i, EdgeState s) { states_.at(i) = s; }
    std::size_t count(EdgeState s) const;

private:
    std::vector<VertexPair> pairs_;
    std::vector<EdgeState> states_;
    std::map<VertexPair, std::size_t> index_;
};

struct Contradiction {
    VertexPair pair;
    std::string reason;
};

using ForcingResult = std::variant<PartialRoot, Contradiction>;

/// Applies the tail forcing rule to every detected tail: the tail path and v-X edges
/// are ForcedIn, every other pair touching v, v1, v2 or v3 is ForcedOut.
/// Conflicting tails yield a Contradiction (g then has no square root).
ForcingResult forced_edges_from_tails(const Graph& g);

/// Tail forcing followed by the solver's propagation rules to a fixpoint,
/// without branching.
ForcingResult propagate_constraints(const Graph& g);

enum class OutcomeKind { Root, NoRoot, Inconclusive };

std::string_view to_string(OutcomeKind kind);

inline constexpr std::uint64_t default_budget_nodes = 10'000'000;

struct SolveOptions {
    std::uint64_t budget_nodes = default_budget_nodes;
    bool record_transcript = true;
};

struct SolveOutcome {
    OutcomeKind kind = OutcomeKind::Inconclusive;
    std::optional<Graph> root;
    std::uint64_t nodes_explored = 0;
    std::uint64_t budget_nodes = 0;
    /// Lines `propagate <u> <v> <in|out> <rule>`, `branch <u> <v> <in|out>`,
    /// `conflict`, `backtrack`, `complete`, `exhausted`, `budget`.
    std::vector<std::string> transcript;
};

/// Complete backtracking search for a square root of g.
///
/// Candidate edges are the edges of g. Propagation rules:
///   P2  tail forcings (unconditional);
///   P3  if uw is in the root and uv is not an edge of g, then wv is not
///       in the root (a common neighbour would create the edge uv);
///   P4  every edge uv of g is realised, either by uv itself or by some w
///       with uw and wv in the root; a dead constraint backtracks, a
///       constraint with one live option forces it.
/// Branching follows a static order (edges appearing in the most P4
/// constraints first, ties by label) and tries "in" before "out". Once every
/// P4 constraint is satisfied the remaining unknown edges are left out.
///
/// Each branch decision counts as one node; reaching `budget_nodes` stops
/// the search with Inconclusive.
SolveOutcome solve_square_root(const Graph& g, const SolveOptions& options = {});

/// True iff the outcome is NoRoot and replaying the deterministic search
/// reproduces its transcript, which must describe a complete refutation tree.
/// Throws TranscriptMismatch when the replay disagrees.
bool certify_no_root(const Graph& g, const SolveOutcome& outcome);

} // namespace sqroot

#include "sqroot/rootsolver.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "sqroot/error.hpp"
#include "sqroot/tails.hpp"

namespace sqroot {

PartialRoot::PartialRoot(const Graph& g) : pairs_(g.edges()), states_(pairs_.size(), EdgeState::Unknown)
{
    for (std::size_t i = 0; i < pairs_.size(); ++i)
        index_.emplace(pairs_[i], i);
}

EdgeState PartialRoot::state(const VertexPair& p) const
{
    auto it = index_.find(p);
    return it == index_.end() ? EdgeState::ForcedOut : states_[it->second];
}

std::size_t PartialRoot::count(EdgeState s) const
{
    return static_cast<std::size_t>(std::count(states_.begin(), states_.end(), s));
}

std::string_view to_string(OutcomeKind kind)
{
    switch (kind) {
    case OutcomeKind::Root: return "Root";
    case OutcomeKind::NoRoot: return "NoRoot";
    case OutcomeKind::Inconclusive: return "Inconclusive";
    }
    return "?";
}

ForcingResult forced_edges_from_tails(const Graph& g)
{
    PartialRoot partial(g);
    // edge indices of g line up with PartialRoot indices
    std::vector<std::vector<std::size_t>> incident(g.order());
    const auto& edges = g.edge_indices();
    for (std::size_t e = 0; e < edges.size(); ++e) {
        incident[edges[e].first].push_back(e);
        incident[edges[e].second].push_back(e);
    }
    auto edge_of = [&](Graph::Index a, Graph::Index b) {
        for (auto e : incident[a])
            if (edges[e].first == b || edges[e].second == b)
                return e;
        throw Error(ErrorCode::ConstructionSelfCheckFailed, "tail edge missing from graph");
    };

    for (const auto& tail : detect_tails(g)) {
        const auto v = g.index(tail.v);
        const auto v1 = g.index(tail.v1);
        const auto v2 = g.index(tail.v2);
        const auto v3 = g.index(tail.v3);

        std::set<std::size_t> in{edge_of(v1, v2), edge_of(v2, v3), edge_of(v3, v)};
        for (const auto& x : tail.x)
            in.insert(edge_of(v, g.index(x)));

        auto put = [&](std::size_t e, EdgeState s) -> std::optional<Contradiction> {
            const auto current = partial.state(e);
            if (current != EdgeState::Unknown && current != s)
                return Contradiction{partial.pairs()[e], "tails at '" + tail.v + "' and elsewhere disagree on this pair"};
            partial.set(e, s);
            return std::nullopt;
        };
        for (auto e : in)
            if (auto c = put(e, EdgeState::ForcedIn))
                return *c;
        for (auto w : {v, v1, v2, v3})
            for (auto e : incident[w])
                if (!in.count(e))
                    if (auto c = put(e, EdgeState::ForcedOut))
                        return *c;
    }
    return partial;
}

namespace {

constexpr int no_edge = -1;

class RootSearch {
public:
    RootSearch(const Graph& g, const SolveOptions& options) : g_(g), options_(options)
    {
        const std::size_t n = g.order();
        const auto& edges = g.edge_indices();
        m_ = edges.size();
        id_.assign(n * n, no_edge);
        for (std::size_t e = 0; e < m_; ++e) {
            const auto [a, b] = edges[e];
            id_[a * n + b] = id_[b * n + a] = static_cast<int>(e);
        }
        state_.assign(m_, EdgeState::Unknown);

        // P4: options realising each edge
        option_begin_.push_back(0);
        occurrences_.assign(m_, {});
        for (std::size_t e = 0; e < m_; ++e) {
            const auto [a, b] = edges[e];
            add_option(e, static_cast<int>(e), no_edge);
            for (auto w : g.neighbors(a))
                if (w != b && g.adjacent(w, b))
                    add_option(e, edge(a, w), edge(w, b));
            option_begin_.push_back(options_list_.size());
        }
        satisfied_.assign(m_, 0);

        order_.resize(m_);
        std::iota(order_.begin(), order_.end(), 0);
        std::vector<std::size_t> constraint_count(m_, 0);
        for (std::size_t e = 0; e < m_; ++e) {
            std::vector<std::size_t> cs;
            for (auto [c, o] : occurrences_[e])
                cs.push_back(c);
            std::sort(cs.begin(), cs.end());
            constraint_count[e] = static_cast<std::size_t>(std::unique(cs.begin(), cs.end()) - cs.begin());
        }
        const auto pairs = g.edges();
        std::stable_sort(order_.begin(), order_.end(), [&](std::size_t p, std::size_t q) {
            if (constraint_count[p] != constraint_count[q])
                return constraint_count[p] > constraint_count[q];
            return pairs[p] < pairs[q];
        });
    }

    SolveOutcome run()
    {
        outcome_.budget_nodes = options_.budget_nodes;

        auto forced = forced_edges_from_tails(g_);
        if (auto* contradiction = std::get_if<Contradiction>(&forced)) {
            log([&] { return "propagate " + contradiction->pair.u + " " + contradiction->pair.v + " conflict P2"; });
            log([] { return std::string("conflict"); });
            return finish_no_root();
        }
        if (!root_propagation(std::get<PartialRoot>(forced))) {
            log([] { return std::string("conflict"); });
            return finish_no_root();
        }

        switch (search()) {
        case Result::Found:
            outcome_.kind = OutcomeKind::Root;
            outcome_.root = build_root();
            if (!verify_square_root(*outcome_.root, g_))
                throw Error(ErrorCode::ConstructionSelfCheckFailed, "search produced a graph that is not a square root");
            break;
        case Result::Failed:
            return finish_no_root();
        case Result::OutOfBudget:
            outcome_.kind = OutcomeKind::Inconclusive;
            log([] { return std::string("budget"); });
            break;
        }
        return std::move(outcome_);
    }

    /// Root-level propagation only; used by propagate_constraints().
    std::optional<PartialRoot> fixpoint()
    {
        auto forced = forced_edges_from_tails(g_);
        if (std::holds_alternative<Contradiction>(forced))
            return std::nullopt;
        if (!root_propagation(std::get<PartialRoot>(forced)))
            return std::nullopt;
        PartialRoot out(g_);
        for (std::size_t e = 0; e < m_; ++e)
            out.set(e, state_[e]);
        return out;
    }

private:
    enum class Result { Found, Failed, OutOfBudget };

    int edge(std::size_t a, std::size_t b) const { return id_[a * g_.order() + b]; }

    void add_option(std::size_t constraint, int first, int second)
    {
        const std::size_t index = options_list_.size();
        options_list_.emplace_back(first, second);
        occurrences_[first].emplace_back(constraint, index);
        if (second != no_edge)
            occurrences_[second].emplace_back(constraint, index);
    }

    template <typename Fn>
    void log(Fn&& line)
    {
        if (options_.record_transcript)
            outcome_.transcript.push_back(line());
    }

    std::string pair_text(std::size_t e) const
    {
        const auto [a, b] = g_.edge_indices()[e];
        return g_.label(a) + " " + g_.label(b);
    }

    bool option_in(std::size_t o) const
    {
        const auto [p, q] = options_list_[o];
        return state_[p] == EdgeState::ForcedIn && (q == no_edge || state_[q] == EdgeState::ForcedIn);
    }

    bool option_alive(std::size_t o) const
    {
        const auto [p, q] = options_list_[o];
        return state_[p] != EdgeState::ForcedOut && (q == no_edge || state_[q] != EdgeState::ForcedOut);
    }

    bool assign(std::size_t e, EdgeState s, const char* rule)
    {
        if (state_[e] == s)
            return true;
        if (state_[e] != EdgeState::Unknown) {
            conflict_edge_ = e;
            log([&] { return "propagate " + pair_text(e) + " conflict " + rule; });
            return false;
        }
        state_[e] = s;
        trail_.push_back(e);
        queue_.push_back(e);
        if (s == EdgeState::ForcedIn)
            for (auto [c, o] : occurrences_[e])
                if (option_in(o) && satisfied_[c]++ == 0)
                    ++satisfied_count_;
        if (rule)
            log([&] {
                return "propagate " + pair_text(e) + (s == EdgeState::ForcedIn ? " in " : " out ") + rule;
            });
        return true;
    }

    void undo(std::size_t mark)
    {
        while (trail_.size() > mark) {
            const auto e = trail_.back();
            trail_.pop_back();
            if (state_[e] == EdgeState::ForcedIn)
                for (auto [c, o] : occurrences_[e])
                    if (option_in(o) && --satisfied_[c] == 0)
                        --satisfied_count_;
            state_[e] = EdgeState::Unknown;
        }
        queue_.clear();
    }

    bool check_constraint(std::size_t c)
    {
        if (satisfied_[c] > 0)
            return true;
        std::size_t alive = 0, last = 0;
        for (std::size_t o = option_begin_[c]; o < option_begin_[c + 1]; ++o) {
            if (option_alive(o)) {
                ++alive;
                last = o;
                if (alive > 1)
                    return true;
            }
        }
        if (alive == 0) {
            conflict_edge_ = c;
            log([&] { return "propagate " + pair_text(c) + " unrealisable P4"; });
            return false;
        }
        const auto [p, q] = options_list_[last];
        return assign(p, EdgeState::ForcedIn, "P4") && (q == no_edge || assign(q, EdgeState::ForcedIn, "P4"));
    }

    bool exclude_common_neighbours(std::size_t e)
    {
        const auto [a, b] = g_.edge_indices()[e];
        for (auto [hub, end] : {std::pair{a, b}, std::pair{b, a}})
            for (auto w : g_.neighbors(hub))
                if (w != end && !g_.adjacent(end, w))
                    if (!assign(edge(hub, w), EdgeState::ForcedOut, "P3"))
                        return false;
        return true;
    }

    bool drain()
    {
        for (std::size_t head = 0; head < queue_.size(); ++head) {
            const auto e = queue_[head];
            if (state_[e] == EdgeState::ForcedIn && !exclude_common_neighbours(e)) {
                queue_.clear();
                return false;
            }
            for (auto [c, o] : occurrences_[e]) {
                if (!check_constraint(c)) {
                    queue_.clear();
                    return false;
                }
            }
        }
        queue_.clear();
        return true;
    }

    bool root_propagation(const PartialRoot& forced)
    {
        for (std::size_t e = 0; e < m_; ++e)
            if (forced.state(e) != EdgeState::Unknown && !assign(e, forced.state(e), "P2"))
                return false;
        if (!drain())
            return false;
        for (std::size_t c = 0; c < m_; ++c)
            if (!check_constraint(c) || !drain())
                return false;
        return true;
    }

    Result search()
    {
        if (satisfied_count_ == m_) {
            log([] { return std::string("complete"); });
            return Result::Found;
        }
        while (cursor_ < m_ && state_[order_[cursor_]] != EdgeState::Unknown)
            ++cursor_;
        if (cursor_ == m_)
            throw Error(ErrorCode::ConstructionSelfCheckFailed, "all edges decided but some edge is unrealised");

        const std::size_t saved_cursor = cursor_;
        const std::size_t e = order_[cursor_];
        for (auto value : {EdgeState::ForcedIn, EdgeState::ForcedOut}) {
            if (outcome_.nodes_explored >= options_.budget_nodes)
                return Result::OutOfBudget;
            ++outcome_.nodes_explored;
            log([&] { return "branch " + pair_text(e) + (value == EdgeState::ForcedIn ? " in" : " out"); });

            const std::size_t mark = trail_.size();
            if (assign(e, value, nullptr) && drain()) {
                const auto r = search();
                if (r != Result::Failed)
                    return r;
            }
            else {
                log([] { return std::string("conflict"); });
            }
            undo(mark);
            cursor_ = saved_cursor;
            log([] { return std::string("backtrack"); });
        }
        return Result::Failed;
    }

    SolveOutcome finish_no_root()
    {
        outcome_.kind = OutcomeKind::NoRoot;
        log([] { return std::string("exhausted"); });
        return std::move(outcome_);
    }

    Graph build_root() const
    {
        GraphBuilder builder;
        for (const auto& v : g_.vertices())
            builder.add_vertex(v);
        for (std::size_t e = 0; e < m_; ++e)
            if (state_[e] == EdgeState::ForcedIn)
                builder.add_edge(g_.edge_indices()[e].first, g_.edge_indices()[e].second);
        return builder.build();
    }

    const Graph& g_;
    SolveOptions options_;
    std::size_t m_ = 0;
    std::vector<int> id_;
    std::vector<EdgeState> state_;
    std::vector<std::pair<int, int>> options_list_;
    std::vector<std::size_t> option_begin_;
    std::vector<std::vector<std::pair<std::size_t, std::size_t>>> occurrences_;
    std::vector<std::size_t> satisfied_;
    std::size_t satisfied_count_ = 0;
    std::vector<std::size_t> order_;
    std::size_t cursor_ = 0;
    std::vector<std::size_t> trail_;
    std::vector<std::size_t> queue_;
    SolveOutcome outcome_;

public:
    std::optional<std::size_t> conflict_edge_;
};

// Recursive-descent check that a transcript is a complete refutation:
//   node  := propagate* ( "conflict" | split )
//   split := "branch e in" node "backtrack" "branch e out" node "backtrack"
class RefutationChecker {
public:
    RefutationChecker(const Graph& g, const std::vector<std::string>& lines) : g_(g), lines_(lines) {}

    bool check()
    {
        if (!node())
            return false;
        return pos_ + 1 == lines_.size() && lines_[pos_] == "exhausted";
    }

private:
    static std::vector<std::string> words(const std::string& line)
    {
        std::istringstream ss(line);
        std::vector<std::string> out;
        std::string w;
        while (ss >> w)
            out.push_back(w);
        return out;
    }

    bool node()
    {
        while (pos_ < lines_.size() && lines_[pos_].rfind("propagate ", 0) == 0)
            ++pos_;
        if (pos_ >= lines_.size())
            return false;
        if (lines_[pos_] == "conflict") {
            ++pos_;
            return true;
        }
        const auto first = words(lines_[pos_]);
        if (first.size() != 4 || first[0] != "branch" || first[3] != "in" || !g_.has_edge(first[1], first[2]))
            return false;
        ++pos_;
        if (!node() || !expect("backtrack"))
            return false;
        if (!expect("branch " + first[1] + " " + first[2] + " out"))
            return false;
        return node() && expect("backtrack");
    }

    bool expect(const std::string& line)
    {
        if (pos_ >= lines_.size() || lines_[pos_] != line)
            return false;
        ++pos_;
        return true;
    }

    const Graph& g_;
    const std::vector<std::string>& lines_;
    std::size_t pos_ = 0;
};

} // namespace

ForcingResult propagate_constraints(const Graph& g)
{
    auto forced = forced_edges_from_tails(g);
    if (std::holds_alternative<Contradiction>(forced))
        return forced;
    SolveOptions options;
    options.record_transcript = false;
    RootSearch search(g, options);
    if (auto partial = search.fixpoint())
        return *partial;
    return Contradiction{g.edges().at(search.conflict_edge_.value()),
                         "propagation reached a dead constraint before branching"};
}

SolveOutcome solve_square_root(const Graph& g, const SolveOptions& options)
{
    return RootSearch(g, options).run();
}

bool certify_no_root(const Graph& g, const SolveOutcome& outcome)
{
    if (outcome.kind != OutcomeKind::NoRoot || outcome.transcript.empty())
        return false;

    SolveOptions options;
    options.budget_nodes = outcome.budget_nodes;
    options.record_transcript = true;
    const auto replay = solve_square_root(g, options);
    if (replay.kind != OutcomeKind::NoRoot)
        throw Error(ErrorCode::TranscriptMismatch,
                    "replay ended with " + std::string(to_string(replay.kind)) + " instead of NoRoot");
    if (replay.nodes_explored != outcome.nodes_explored || replay.transcript != outcome.transcript) {
        const auto& a = replay.transcript;
        const auto& b = outcome.transcript;
        std::size_t i = 0;
        while (i < a.size() && i < b.size() && a[i] == b[i])
            ++i;
        throw Error(ErrorCode::TranscriptMismatch, "replay diverges at transcript line " + std::to_string(i + 1));
    }
    if (!RefutationChecker(g, outcome.transcript).check())
        throw Error(ErrorCode::TranscriptMismatch, "transcript is not a complete refutation tree");
    return true;
}

} // namespace sqroot

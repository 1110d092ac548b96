#include "sqroot/planarity.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "sqroot/error.hpp"

namespace sqroot {

namespace {

constexpr int none = -1;

struct Interval {
    int low = none;
    int high = none;

    bool empty() const { return low == none && high == none; }
};

struct ConflictPair {
    Interval left;
    Interval right;

    void swap() { std::swap(left, right); }
};

// Brandes' formulation of the de Fraysseix-Rosenstiehl left-right test.
// Edges are identified by their index in Graph::edge_indices(); the DFS
// orientation is recorded in tail_/head_.
class LeftRightTest {
public:
    explicit LeftRightTest(const Graph& g)
        : g_(g),
          n_(g.order()),
          m_(g.size()),
          height_(n_, none),
          parent_edge_(n_, none),
          incident_(n_),
          ordered_(n_),
          tail_(m_, none),
          head_(m_, none),
          lowpt_(m_, 0),
          lowpt2_(m_, 0),
          nesting_(m_, 0),
          ref_(m_, none),
          lowpt_edge_(m_, none),
          stack_bottom_(m_, 0)
    {
        const auto& edges = g.edge_indices();
        for (std::size_t e = 0; e < edges.size(); ++e) {
            incident_[edges[e].first].push_back(static_cast<int>(e));
            incident_[edges[e].second].push_back(static_cast<int>(e));
        }
    }

    bool run()
    {
        std::vector<int> roots;
        for (std::size_t v = 0; v < n_; ++v) {
            if (height_[v] == none) {
                height_[v] = 0;
                roots.push_back(static_cast<int>(v));
                orient(static_cast<int>(v));
            }
        }
        for (std::size_t v = 0; v < n_; ++v)
            std::stable_sort(ordered_[v].begin(), ordered_[v].end(),
                             [&](int a, int b) { return nesting_[a] < nesting_[b]; });
        for (int r : roots)
            if (!test(r))
                return false;
        return true;
    }

private:
    int other_end(int e, int v) const
    {
        const auto& [a, b] = g_.edge_indices()[e];
        return static_cast<int>(static_cast<int>(a) == v ? b : a);
    }

    void orient(int v)
    {
        const int e = parent_edge_[v];
        for (int vw : incident_[v]) {
            if (tail_[vw] != none)
                continue;
            const int w = other_end(vw, v);
            tail_[vw] = v;
            head_[vw] = w;
            ordered_[v].push_back(vw);
            lowpt_[vw] = height_[v];
            lowpt2_[vw] = height_[v];
            if (height_[w] == none) {
                parent_edge_[w] = vw;
                height_[w] = height_[v] + 1;
                orient(w);
            }
            else {
                lowpt_[vw] = height_[w];
            }

            nesting_[vw] = 2 * lowpt_[vw];
            if (lowpt2_[vw] < height_[v])
                nesting_[vw] += 1; // chordal

            if (e != none) {
                if (lowpt_[vw] < lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt_[e], lowpt2_[vw]);
                    lowpt_[e] = lowpt_[vw];
                }
                else if (lowpt_[vw] > lowpt_[e]) {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt_[vw]);
                }
                else {
                    lowpt2_[e] = std::min(lowpt2_[e], lowpt2_[vw]);
                }
            }
        }
    }

    bool conflicting(const Interval& i, int b) const { return !i.empty() && lowpt_[i.high] > lowpt_[b]; }

    int lowest(const ConflictPair& p) const
    {
        if (p.left.empty())
            return lowpt_[p.right.low];
        if (p.right.empty())
            return lowpt_[p.left.low];
        return std::min(lowpt_[p.left.low], lowpt_[p.right.low]);
    }

    bool test(int v)
    {
        const int e = parent_edge_[v];
        const auto& out = ordered_[v];
        for (std::size_t k = 0; k < out.size(); ++k) {
            const int ei = out[k];
            const int w = head_[ei];
            stack_bottom_[ei] = stack_.size();
            if (parent_edge_[w] == ei) {
                if (!test(w))
                    return false;
            }
            else {
                lowpt_edge_[ei] = ei;
                stack_.push_back(ConflictPair{Interval{}, Interval{ei, ei}});
            }

            if (lowpt_[ei] < height_[v]) {
                if (k == 0)
                    lowpt_edge_[e] = lowpt_edge_[ei];
                else if (!add_constraints(ei, e))
                    return false;
            }
        }
        if (e != none)
            remove_back_edges(e);
        return true;
    }

    bool add_constraints(int ei, int e)
    {
        ConflictPair p;
        // merge return edges of ei into p.right
        do {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (!q.left.empty())
                q.swap();
            if (!q.left.empty())
                return false;
            if (lowpt_[q.right.low] > lowpt_[e]) {
                if (p.right.empty())
                    p.right.high = q.right.high;
                else
                    ref_[p.right.low] = q.right.high;
                p.right.low = q.right.low;
            }
            else {
                ref_[q.right.low] = lowpt_edge_[e];
            }
        } while (stack_.size() > stack_bottom_[ei]);

        // merge conflicting return edges of earlier siblings into p.left
        while (!stack_.empty()
               && (conflicting(stack_.back().left, ei) || conflicting(stack_.back().right, ei))) {
            ConflictPair q = stack_.back();
            stack_.pop_back();
            if (conflicting(q.right, ei))
                q.swap();
            if (conflicting(q.right, ei))
                return false;
            if (p.right.low != none)
                ref_[p.right.low] = q.right.high;
            if (q.right.low != none)
                p.right.low = q.right.low;
            if (p.left.empty())
                p.left.high = q.left.high;
            else
                ref_[p.left.low] = q.left.high;
            p.left.low = q.left.low;
        }

        if (!(p.left.empty() && p.right.empty()))
            stack_.push_back(p);
        return true;
    }

    void remove_back_edges(int e)
    {
        const int u = tail_[e];
        while (!stack_.empty() && lowest(stack_.back()) == height_[u])
            stack_.pop_back();

        if (!stack_.empty()) {
            ConflictPair p = stack_.back();
            stack_.pop_back();
            while (p.left.high != none && head_[p.left.high] == u)
                p.left.high = ref_[p.left.high];
            if (p.left.high == none && p.left.low != none) {
                ref_[p.left.low] = p.right.low;
                p.left.low = none;
            }
            while (p.right.high != none && head_[p.right.high] == u)
                p.right.high = ref_[p.right.high];
            if (p.right.high == none && p.right.low != none) {
                ref_[p.right.low] = p.left.low;
                p.right.low = none;
            }
            stack_.push_back(p);
        }

        if (lowpt_[e] < height_[u] && !stack_.empty()) {
            const int hl = stack_.back().left.high;
            const int hr = stack_.back().right.high;
            if (hl != none && (hr == none || lowpt_[hl] > lowpt_[hr]))
                ref_[e] = hl;
            else
                ref_[e] = hr;
        }
    }

    const Graph& g_;
    std::size_t n_;
    std::size_t m_;
    std::vector<int> height_;
    std::vector<int> parent_edge_;
    std::vector<std::vector<int>> incident_;
    std::vector<std::vector<int>> ordered_;
    std::vector<int> tail_;
    std::vector<int> head_;
    std::vector<int> lowpt_;
    std::vector<int> lowpt2_;
    std::vector<int> nesting_;
    std::vector<int> ref_;
    std::vector<int> lowpt_edge_;
    std::vector<std::size_t> stack_bottom_;
    std::vector<ConflictPair> stack_;
};

std::uint64_t binomial(std::uint64_t n, std::uint64_t k)
{
    if (k > n)
        return 0;
    std::uint64_t r = 1;
    for (std::uint64_t i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > (std::uint64_t{1} << 62))
            return r;
    }
    return r;
}

} // namespace

bool is_planar(const Graph& g)
{
    const std::size_t n = g.order();
    if (n >= 3 && g.size() > 3 * n - 6)
        return false;
    return LeftRightTest(g).run();
}

ApexCertificate is_apex_with(const Graph& g, std::span<const std::string> apex)
{
    ApexCertificate cert;
    cert.apex_set.insert(apex.begin(), apex.end());
    std::vector<std::string> removed(cert.apex_set.begin(), cert.apex_set.end());
    cert.remainder_planar = is_planar(remove_vertices(g, removed));
    return cert;
}

std::optional<std::set<std::string>> find_apex_set(const Graph& g, std::size_t k, std::uint64_t max_subsets)
{
    const std::size_t n = g.order();
    k = std::min(k, n);
    std::uint64_t total = 0;
    for (std::size_t j = 0; j <= k; ++j) {
        total += binomial(n, j);
        if (total > max_subsets)
            throw Error(ErrorCode::BudgetExceeded, "apex search needs more than " + std::to_string(max_subsets)
                                                       + " subsets");
    }

    for (std::size_t size = 0; size <= k; ++size) {
        std::vector<std::size_t> pick(size);
        std::iota(pick.begin(), pick.end(), 0);
        while (true) {
            std::vector<std::string> labels;
            for (auto i : pick)
                labels.push_back(g.label(i));
            if (is_planar(remove_vertices(g, labels)))
                return std::set<std::string>(labels.begin(), labels.end());

            // next combination in lexicographic order
            std::size_t pos = size;
            while (pos > 0 && pick[pos - 1] == n - size + pos - 1)
                --pos;
            if (pos == 0)
                break;
            ++pick[pos - 1];
            for (std::size_t j = pos; j < size; ++j)
                pick[j] = pick[j - 1] + 1;
        }
    }
    return std::nullopt;
}

} // namespace sqroot

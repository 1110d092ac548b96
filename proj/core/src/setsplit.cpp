#include "sqroot/setsplit.hpp"

#include <algorithm>
#include <map>

#include "sqroot/error.hpp"
#include "sqroot/planarity.hpp"

namespace sqroot {

SetSplitInstance SetSplitInstance::make(std::vector<std::string> ground_set,
                                        std::vector<std::vector<std::string>> collection)
{
    std::set<std::string> seen;
    for (const auto& e : ground_set) {
        if (e.empty())
            throw Error(ErrorCode::InvalidInstance, "empty element label");
        if (!seen.insert(e).second)
            throw Error(ErrorCode::InvalidInstance, "element '" + e + "' listed twice in the ground set");
    }
    for (std::size_t j = 0; j < collection.size(); ++j) {
        std::set<std::string> members;
        for (const auto& e : collection[j])
            if (!members.insert(e).second)
                throw Error(ErrorCode::InvalidInstance,
                            "subset " + std::to_string(j) + " lists element '" + e + "' twice");
    }
    return SetSplitInstance{std::move(ground_set), std::move(collection)};
}

bool equivalent(const SetSplitInstance& a, const SetSplitInstance& b)
{
    auto as_set = [](const std::vector<std::string>& v) { return std::set<std::string>(v.begin(), v.end()); };
    if (a.ground_set.size() != b.ground_set.size() || as_set(a.ground_set) != as_set(b.ground_set))
        return false;
    std::multiset<std::set<std::string>> ca, cb;
    for (const auto& c : a.collection)
        ca.insert(as_set(c));
    for (const auto& c : b.collection)
        cb.insert(as_set(c));
    return ca == cb;
}

std::string Violation::describe() const
{
    switch (kind) {
    case ViolationKind::SubsetTooSmall:
        return "SubsetTooSmall(" + std::to_string(subset.value_or(0)) + ")";
    case ViolationKind::UnknownElement:
        return "UnknownElement(" + std::to_string(subset.value_or(0)) + ", " + element + ")";
    case ViolationKind::IncidenceNotPlanar:
        return "IncidenceNotPlanar";
    }
    return "?";
}

std::string element_vertex(const std::string& element) { return "elem:" + element; }
std::string set_vertex(std::size_t index) { return "set:" + std::to_string(index); }

Graph incidence_graph(const SetSplitInstance& inst)
{
    GraphBuilder builder;
    for (const auto& e : inst.ground_set)
        builder.add_vertex(element_vertex(e));
    for (std::size_t j = 0; j < inst.collection.size(); ++j)
        builder.add_vertex(set_vertex(j));
    for (std::size_t j = 0; j < inst.collection.size(); ++j) {
        for (const auto& e : inst.collection[j]) {
            if (!builder.has_vertex(element_vertex(e)))
                throw Error(ErrorCode::InvalidInstance,
                            "subset " + std::to_string(j) + " names unknown element '" + e + "'");
            builder.add_edge(set_vertex(j), element_vertex(e));
        }
    }
    return builder.build();
}

std::vector<Violation> validate_instance(const SetSplitInstance& inst)
{
    std::vector<Violation> out;
    const std::set<std::string> ground(inst.ground_set.begin(), inst.ground_set.end());
    bool closed = true;
    for (std::size_t j = 0; j < inst.collection.size(); ++j) {
        const auto& c = inst.collection[j];
        if (c.size() < 3)
            out.push_back({ViolationKind::SubsetTooSmall, j, {}});
        for (const auto& e : c) {
            if (!ground.count(e)) {
                out.push_back({ViolationKind::UnknownElement, j, e});
                closed = false;
            }
        }
    }
    if (closed && !is_planar(incidence_graph(inst)))
        out.push_back({ViolationKind::IncidenceNotPlanar, std::nullopt, {}});
    return out;
}

bool verify_partition(const SetSplitInstance& inst, const Partition3& p)
{
    const std::set<std::string> ground(inst.ground_set.begin(), inst.ground_set.end());
    std::map<std::string, int> part_of;
    for (int i = 0; i < 3; ++i) {
        for (const auto& e : p.parts[i]) {
            if (!ground.count(e))
                throw Error(ErrorCode::NotAPartition, "element '" + e + "' is not in the ground set");
            if (!part_of.emplace(e, i).second)
                throw Error(ErrorCode::NotAPartition, "element '" + e + "' appears in two parts");
        }
    }
    if (part_of.size() != ground.size()) {
        for (const auto& e : inst.ground_set)
            if (!part_of.count(e))
                throw Error(ErrorCode::NotAPartition, "element '" + e + "' is in no part");
    }
    for (const auto& c : inst.collection) {
        std::array<bool, 3> hit{};
        for (const auto& e : c) {
            auto it = part_of.find(e);
            if (it != part_of.end())
                hit[it->second] = true;
        }
        if (!(hit[0] && hit[1] && hit[2]))
            return false;
    }
    return true;
}

std::optional<Partition3> solve_setsplit_bruteforce(const SetSplitInstance& inst, std::uint64_t max_assignments)
{
    const std::size_t n = inst.ground_set.size();
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < n; ++i) {
        space *= 3;
        if (space > max_assignments)
            throw Error(ErrorCode::BudgetExceeded, "3^" + std::to_string(n) + " assignments exceed the budget of "
                                                       + std::to_string(max_assignments));
    }

    std::map<std::string, std::size_t> position;
    for (std::size_t i = 0; i < n; ++i)
        position[inst.ground_set[i]] = i;

    // subsets indexed by the position of their last element, so each is
    // checked exactly when it becomes fully assigned
    std::vector<std::vector<std::vector<std::size_t>>> closing(n);
    for (std::size_t j = 0; j < inst.collection.size(); ++j) {
        std::vector<std::size_t> members;
        for (const auto& e : inst.collection[j]) {
            auto it = position.find(e);
            if (it == position.end())
                throw Error(ErrorCode::InvalidInstance, "subset " + std::to_string(j) + " names unknown element '"
                                                            + e + "'");
            members.push_back(it->second);
        }
        if (members.empty())
            return std::nullopt; // an empty subset can never meet three parts
        const auto last = *std::max_element(members.begin(), members.end());
        closing[last].push_back(std::move(members));
    }

    std::vector<int> part(n, -1);
    auto closes_ok = [&](std::size_t pos) {
        for (const auto& members : closing[pos]) {
            std::array<bool, 3> hit{};
            for (auto m : members)
                hit[part[m]] = true;
            if (!(hit[0] && hit[1] && hit[2]))
                return false;
        }
        return true;
    };

    // iterative DFS; part[pos] cycles 0,1,2 so the first leaf reached is the
    // lexicographically smallest valid assignment
    std::size_t pos = 0;
    while (true) {
        if (pos == n) {
            Partition3 p;
            for (std::size_t i = 0; i < n; ++i)
                p.parts[part[i]].insert(inst.ground_set[i]);
            return p;
        }
        ++part[pos];
        if (part[pos] > 2) {
            part[pos] = -1;
            if (pos == 0)
                return std::nullopt;
            --pos;
            continue;
        }
        if (closes_ok(pos))
            ++pos;
    }
}

} // namespace sqroot

#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sqroot/graph.hpp"

namespace sqroot {

/// Three-parts set splitting instance: a ground set and an indexed
/// collection of subsets. Order is kept for deterministic vertex naming.
struct SetSplitInstance {
    std::vector<std::string> ground_set;
    std::vector<std::vector<std::string>> collection;

    /// Rejects duplicate ground-set labels and duplicate elements inside a
    /// subset (InvalidInstance). Subset sizes, membership and planarity are
    /// left to validate_instance.
    static SetSplitInstance make(std::vector<std::string> ground_set,
                                 std::vector<std::vector<std::string>> collection);
};

/// Order-insensitive equality: same ground set, same multiset of subsets.
bool equivalent(const SetSplitInstance& a, const SetSplitInstance& b);

enum class ViolationKind { SubsetTooSmall, UnknownElement, IncidenceNotPlanar };

struct Violation {
    ViolationKind kind;
    std::optional<std::size_t> subset;
    std::string element;

    std::string describe() const;
    bool operator==(const Violation&) const = default;
};

/// Parts may be empty; validity is decided by verify_partition.
struct Partition3 {
    std::array<std::set<std::string>, 3> parts;

    bool operator==(const Partition3&) const = default;
};

/// Bipartite element/subset graph with vertices `elem:<e>` and `set:<j>`.
/// Throws InvalidInstance if a subset names an element outside the ground set.
Graph incidence_graph(const SetSplitInstance& inst);

std::string element_vertex(const std::string& element);
std::string set_vertex(std::size_t index);

/// One record per failed rule; empty means the instance is valid.
std::vector<Violation> validate_instance(const SetSplitInstance& inst);

/// True iff every subset meets all three parts. Throws NotAPartition when the
/// parts overlap or do not cover exactly the ground set.
bool verify_partition(const SetSplitInstance& inst, const Partition3& p);

inline constexpr std::uint64_t default_setsplit_budget = 43'046'721; // 3^16

/// Complete search over the 3^|S| assignments (elements in ground-set order,
/// parts tried 1, 2, 3). Returns the lexicographically first valid partition.
/// Throws BudgetExceeded when 3^|S| > max_assignments.
std::optional<Partition3> solve_setsplit_bruteforce(const SetSplitInstance& inst,
                                                    std::uint64_t max_assignments = default_setsplit_budget);

} // namespace sqroot

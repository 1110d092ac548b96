#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>

#include "sqroot/graph.hpp"

namespace sqroot {

/// Exact planarity test (left-right criterion). No embedding is produced.
bool is_planar(const Graph& g);

struct ApexCertificate {
    std::set<std::string> apex_set;
    bool remainder_planar = false;
};

/// Planarity of g minus `apex`. Throws UnknownVertex for foreign labels.
ApexCertificate is_apex_with(const Graph& g, std::span<const std::string> apex);

inline constexpr std::uint64_t default_apex_subset_budget = 1'000'000;

/// Exhaustive search over vertex subsets of size 0..k in lexicographic order
/// of vertex indices; returns the first apex set found. Throws BudgetExceeded
/// when the number of candidate subsets exceeds `max_subsets`.
std::optional<std::set<std::string>> find_apex_set(const Graph& g, std::size_t k,
                                                   std::uint64_t max_subsets = default_apex_subset_budget);

} // namespace sqroot

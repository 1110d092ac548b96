#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "report.hpp"
#include "sqroot/coloring.hpp"
#include "sqroot/gadget.hpp"
#include "sqroot/rootsolver.hpp"

namespace sqroot::cli {

/// Budget flags common to the commands that search.
struct Limits {
    std::uint64_t budget_nodes = default_budget_nodes;
    std::size_t max_ground_set = 16; ///< brute force allows 3^max_ground_set assignments
};

std::uint64_t assignment_budget(const Limits& limits);

struct SquareArgs {
    std::string input;
    std::string output; ///< empty: write to `artifact_out`
};
PipelineReport cmd_square(const SquareArgs& args, std::ostream& artifact_out);

enum class ReduceKind { ColoringToSetsplit, SetsplitToGraph, Full };
std::optional<ReduceKind> parse_reduce_kind(const std::string& name);

struct ReduceArgs {
    ReduceKind kind = ReduceKind::Full;
    std::string input;
    std::string output;
    std::string roles;        ///< default: <output>.roles.json
    std::string instance_out; ///< full only: keep the intermediate instance
};
PipelineReport cmd_reduce(const ReduceArgs& args);

enum class SolveKind { Setsplit, Sqroot };
std::optional<SolveKind> parse_solve_kind(const std::string& name);

struct SolveArgs {
    SolveKind kind = SolveKind::Sqroot;
    std::string input;
    std::string output;     ///< witness file, written on YES
    std::string transcript; ///< sqroot only
    Limits limits;
};
PipelineReport cmd_solve(const SolveArgs& args);

enum class VerifyKind { SquareRoot, Partition, Apex };
std::optional<VerifyKind> parse_verify_kind(const std::string& name);

struct VerifyArgs {
    VerifyKind kind = VerifyKind::SquareRoot;
    std::vector<std::string> inputs;
    std::vector<std::string> apex;
};
PipelineReport cmd_verify(const VerifyArgs& args);

struct RoundtripArgs {
    std::string input;
    std::string artifacts_dir; ///< optional output directory for intermediate files
    Limits limits;
};

/// Everything a round trip produced, for callers that want to inspect it.
struct RoundtripResult {
    PipelineReport report;
    std::optional<ColoringReduction> reduction;
    std::optional<LabeledGadgetGraph> gadget;
    std::optional<Coloring3> coloring;
    std::optional<Partition3> partition;
    std::optional<Graph> root;
    std::optional<Partition3> extracted;
    std::optional<SolveOutcome> outcome;
};
RoundtripResult run_roundtrip(const Graph& g, const RoundtripArgs& args);
PipelineReport cmd_roundtrip(const RoundtripArgs& args);

struct ExportDotArgs {
    std::string input;
    std::string roles;
    std::string output; ///< empty: write to `artifact_out`
};
PipelineReport cmd_export_dot(const ExportDotArgs& args, std::ostream& artifact_out);

} // namespace sqroot::cli

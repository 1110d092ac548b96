// sqroot: command-line front end for the square-root hardness pipeline.

#include <fstream>
#include <iostream>

#include "CLI11.hpp"
#include "commands.hpp"

namespace {

using namespace sqroot::cli;

struct Output {
    bool json = false;
    std::string report_path;
};

int emit(const PipelineReport& report, const Output& out, bool artifact_on_stdout)
{
    std::ostream& stream = artifact_on_stdout ? std::cerr : std::cout;
    if (out.json)
        stream << report.to_json().dump(2) << '\n';
    else
        stream << report.to_text();
    if (!out.report_path.empty()) {
        std::ofstream file(out.report_path);
        file << report.to_json().dump(2) << '\n';
    }
    return report.exit_status;
}

void add_output_flags(CLI::App* cmd, Output& out)
{
    cmd->add_flag("--json", out.json, "Print the report as JSON");
    cmd->add_option("--report", out.report_path, "Also write the JSON report to this file");
}

void add_limit_flags(CLI::App* cmd, Limits& limits)
{
    cmd->add_option("--budget-nodes", limits.budget_nodes, "Search-node budget for the square-root solver")
        ->capture_default_str();
    cmd->add_option("--max-ground-set", limits.max_ground_set,
                    "Brute force is allowed 3^N assignments (set splitting and 3-colouring)")
        ->capture_default_str();
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Graph square roots: reductions, solvers and verifiers.\n"
                 "Exit codes: 0 ok/YES, 1 verification failed, 2 bad input, 10 NO, 20 inconclusive."};
    app.require_subcommand(1);
    Output out;

    SquareArgs square_args;
    auto* square = app.add_subcommand("square", "Write the square of a graph");
    square->add_option("input", square_args.input, "Edge-list graph")->required()->check(CLI::ExistingFile);
    square->add_option("-o,--output", square_args.output, "Output edge list (default: stdout)");
    add_output_flags(square, out);

    ReduceArgs reduce_args;
    std::string reduce_kind;
    auto* reduce = app.add_subcommand("reduce", "Apply a reduction");
    reduce->add_option("--kind", reduce_kind, "coloring-setsplit | setsplit-graph | full")
        ->required()
        ->check(CLI::IsMember({"coloring-setsplit", "setsplit-graph", "full"}));
    reduce->add_option("input", reduce_args.input, "Graph (coloring-setsplit, full) or instance JSON")
        ->required()
        ->check(CLI::ExistingFile);
    reduce->add_option("-o,--output", reduce_args.output, "Reduced instance JSON or gadget edge list")->required();
    reduce->add_option("--roles", reduce_args.roles, "Role map path (default: <output>.roles.json)");
    reduce->add_option("--instance-out", reduce_args.instance_out, "full: also write the intermediate instance");
    add_output_flags(reduce, out);

    SolveArgs solve_args;
    std::string solve_kind;
    auto* solve = app.add_subcommand("solve", "Decide set splitting or square-root existence");
    solve->add_option("--kind", solve_kind, "setsplit | sqroot")
        ->required()
        ->check(CLI::IsMember({"setsplit", "sqroot"}));
    solve->add_option("input", solve_args.input, "Instance JSON (setsplit) or edge list (sqroot)")
        ->required()
        ->check(CLI::ExistingFile);
    solve->add_option("-o,--output", solve_args.output, "Witness file written on YES");
    solve->add_option("--transcript", solve_args.transcript, "sqroot: write the search transcript");
    add_limit_flags(solve, solve_args.limits);
    add_output_flags(solve, out);

    VerifyArgs verify_args;
    std::string verify_kind;
    std::string apex_list;
    auto* verify = app.add_subcommand("verify", "Check a witness");
    verify->add_option("--kind", verify_kind, "square-root | partition | apex")
        ->required()
        ->check(CLI::IsMember({"square-root", "partition", "apex"}));
    verify->add_option("inputs", verify_args.inputs,
                       "square-root: ROOT GRAPH; partition: INSTANCE WITNESS; apex: GRAPH")
        ->required()
        ->check(CLI::ExistingFile);
    verify->add_option("--apex", apex_list, "Comma-separated apex labels (apex kind)");
    add_output_flags(verify, out);

    RoundtripArgs roundtrip_args;
    auto* roundtrip = app.add_subcommand("roundtrip", "Run colouring -> set splitting -> gadget and check witnesses");
    roundtrip->add_option("input", roundtrip_args.input, "Planar edge-list graph")
        ->required()
        ->check(CLI::ExistingFile);
    roundtrip->add_option("--artifacts", roundtrip_args.artifacts_dir, "Directory for intermediate files");
    add_limit_flags(roundtrip, roundtrip_args.limits);
    add_output_flags(roundtrip, out);

    ExportDotArgs dot_args;
    auto* export_dot = app.add_subcommand("export-dot", "Write Graphviz DOT");
    export_dot->add_option("input", dot_args.input, "Edge-list graph")->required()->check(CLI::ExistingFile);
    export_dot->add_option("--roles", dot_args.roles, "Gadget role map for styling")->check(CLI::ExistingFile);
    export_dot->add_option("-o,--output", dot_args.output, "DOT file (default: stdout)");
    add_output_flags(export_dot, out);

    try {
        app.parse(argc, argv);
    }
    catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : exit_error;
    }

    try {
        if (*square)
            return emit(cmd_square(square_args, std::cout), out, square_args.output.empty());
        if (*reduce) {
            reduce_args.kind = *parse_reduce_kind(reduce_kind);
            return emit(cmd_reduce(reduce_args), out, false);
        }
        if (*solve) {
            solve_args.kind = *parse_solve_kind(solve_kind);
            return emit(cmd_solve(solve_args), out, false);
        }
        if (*verify) {
            verify_args.kind = *parse_verify_kind(verify_kind);
            std::string item;
            for (char ch : apex_list + ",") {
                if (ch == ',') {
                    if (!item.empty())
                        verify_args.apex.push_back(item);
                    item.clear();
                }
                else {
                    item += ch;
                }
            }
            return emit(cmd_verify(verify_args), out, false);
        }
        if (*roundtrip)
            return emit(cmd_roundtrip(roundtrip_args), out, false);
        if (*export_dot)
            return emit(cmd_export_dot(dot_args, std::cout), out, dot_args.output.empty());
    }
    catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return exit_error;
    }
    return exit_error;
}

#include "commands.hpp"

#include <filesystem>
#include <fstream>
#include <ostream>

#include "sqroot/edge_list.hpp"
#include "sqroot/dot.hpp"
#include "sqroot/json_io.hpp"
#include "sqroot/planarity.hpp"
#include "sqroot/setsplit.hpp"

namespace sqroot::cli {

using nlohmann::json;

namespace {

PipelineReport make_report(const std::string& command)
{
    PipelineReport report;
    report.command = command;
    return report;
}

PipelineReport finish(PipelineReport report, int code)
{
    report.exit_status = code;
    return report;
}

json size_of(const Graph& g) { return json{{"n", g.order()}, {"m", g.size()}}; }

std::string pair_text(const VertexPair& p) { return p.u + "--" + p.v; }

json family_json(const LabeledGadgetGraph& gg)
{
    static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii"};
    json out = json::object();
    for (std::size_t f = 0; f < gadget_family_count; ++f)
        out[names[f]] = gg.family_sizes[f];
    return out;
}

json violations_json(const std::vector<Violation>& vs)
{
    json out = json::array();
    for (const auto& v : vs)
        out.push_back(v.describe());
    return out;
}

std::string default_roles_path(const std::string& output) { return output + ".roles.json"; }

} // namespace

std::uint64_t assignment_budget(const Limits& limits)
{
    std::uint64_t budget = 1;
    for (std::size_t i = 0; i < limits.max_ground_set && budget < (std::uint64_t{1} << 60); ++i)
        budget *= 3;
    return budget;
}

PipelineReport cmd_square(const SquareArgs& args, std::ostream& artifact_out)
{
    auto report = make_report("square");
    Graph g, g2;
    if (!report.stage("parse", [&](json& d) {
            g = load_edge_list(args.input);
            d = size_of(g);
            return true;
        }))
        return finish(std::move(report), exit_error);
    report.stage("square", [&](json& d) {
        g2 = square(g);
        d = size_of(g2);
        return true;
    });
    if (!report.stage("write", [&](json& d) {
            if (args.output.empty()) {
                write_edge_list(artifact_out, g2);
                d["to"] = "stdout";
            }
            else {
                save_edge_list(args.output, g2);
                d["to"] = args.output;
            }
            return true;
        }))
        return finish(std::move(report), exit_error);
    return finish(std::move(report), exit_ok);
}

std::optional<ReduceKind> parse_reduce_kind(const std::string& name)
{
    if (name == "coloring-setsplit")
        return ReduceKind::ColoringToSetsplit;
    if (name == "setsplit-graph")
        return ReduceKind::SetsplitToGraph;
    if (name == "full")
        return ReduceKind::Full;
    return std::nullopt;
}

PipelineReport cmd_reduce(const ReduceArgs& args)
{
    auto report = make_report("reduce");
    const std::string roles_path = args.roles.empty() ? default_roles_path(args.output) : args.roles;

    std::optional<SetSplitInstance> instance;
    std::optional<ColoringReduction> reduction;

    if (args.kind == ReduceKind::SetsplitToGraph) {
        if (!report.stage("parse", [&](json& d) {
                instance = parse_instance_json(read_text_file(args.input));
                d["ground_set"] = instance->ground_set.size();
                d["collection"] = instance->collection.size();
                return true;
            }))
            return finish(std::move(report), exit_error);
    }
    else {
        std::optional<ColoringInstance> ci;
        if (!report.stage("parse", [&](json& d) {
                auto g = load_edge_list(args.input);
                d = size_of(g);
                ci = ColoringInstance{std::move(g)};
                return true;
            }))
            return finish(std::move(report), exit_error);
        if (!report.stage("planarity", [&](json& d) {
                ci = ColoringInstance::make(ci->graph);
                d["planar"] = true;
                return true;
            }))
            return finish(std::move(report), exit_error);
        if (!report.stage("color_to_setsplit", [&](json& d) {
                reduction = color_to_setsplit(*ci);
                instance = reduction->instance;
                d["ground_set"] = instance->ground_set.size();
                d["collection"] = instance->collection.size();
                return true;
            }))
            return finish(std::move(report), exit_error);
    }

    if (!report.stage("validate_instance", [&](json& d) {
            const auto violations = validate_instance(*instance);
            d["violations"] = violations_json(violations);
            return violations.empty();
        }))
        return finish(std::move(report), exit_error);

    if (args.kind == ReduceKind::ColoringToSetsplit) {
        if (!report.stage("write", [&](json& d) {
                write_text_file(args.output, instance_to_json(*instance));
                write_text_file(roles_path, origins_to_json(*reduction));
                d["instance"] = args.output;
                d["roles"] = roles_path;
                return true;
            }))
            return finish(std::move(report), exit_error);
        return finish(std::move(report), exit_ok);
    }

    std::optional<LabeledGadgetGraph> gg;
    if (!report.stage("setsplit_to_graph", [&](json& d) {
            gg = setsplit_to_graph(*instance);
            d = size_of(gg->graph);
            d["families"] = family_json(*gg);
            return true;
        }))
        return finish(std::move(report), exit_error);

    if (!report.stage("write", [&](json& d) {
            save_edge_list(args.output, gg->graph);
            write_text_file(roles_path, roles_to_json(gg->roles));
            d["graph"] = args.output;
            d["roles"] = roles_path;
            if (args.kind == ReduceKind::Full && !args.instance_out.empty()) {
                write_text_file(args.instance_out, instance_to_json(*instance));
                d["instance"] = args.instance_out;
            }
            return true;
        }))
        return finish(std::move(report), exit_error);
    return finish(std::move(report), exit_ok);
}

std::optional<SolveKind> parse_solve_kind(const std::string& name)
{
    if (name == "setsplit")
        return SolveKind::Setsplit;
    if (name == "sqroot")
        return SolveKind::Sqroot;
    return std::nullopt;
}

PipelineReport cmd_solve(const SolveArgs& args)
{
    auto report = make_report("solve");

    if (args.kind == SolveKind::Setsplit) {
        std::optional<SetSplitInstance> inst;
        if (!report.stage("parse", [&](json& d) {
                inst = parse_instance_json(read_text_file(args.input));
                d["ground_set"] = inst->ground_set.size();
                d["collection"] = inst->collection.size();
                return true;
            }))
            return finish(std::move(report), exit_error);
        if (!report.stage("validate_instance", [&](json& d) {
                const auto violations = validate_instance(*inst);
                d["violations"] = violations_json(violations);
                return violations.empty();
            }))
            return finish(std::move(report), exit_error);

        int code = exit_ok;
        std::optional<Partition3> witness;
        report.stage("solve_setsplit", [&](json& d) {
            try {
                witness = solve_setsplit_bruteforce(*inst, assignment_budget(args.limits));
            }
            catch (const Error& e) {
                if (e.code() != ErrorCode::BudgetExceeded)
                    throw;
                d["status"] = "Inconclusive";
                d["reason"] = e.what();
                code = exit_inconclusive;
                return true;
            }
            d["status"] = witness ? "YES" : "NO";
            code = witness ? exit_ok : exit_no;
            return true;
        });
        if (witness) {
            if (!report.stage("verify_partition", [&](json&) { return verify_partition(*inst, *witness); }))
                return finish(std::move(report), exit_failed);
            if (!args.output.empty()
                && !report.stage("write", [&](json& d) {
                       write_text_file(args.output, partition_to_json(*witness));
                       d["witness"] = args.output;
                       return true;
                   }))
                return finish(std::move(report), exit_error);
        }
        return finish(std::move(report), code);
    }

    Graph g;
    if (!report.stage("parse", [&](json& d) {
            g = load_edge_list(args.input);
            d = size_of(g);
            return true;
        }))
        return finish(std::move(report), exit_error);

    SolveOutcome outcome;
    report.stage("solve_square_root", [&](json& d) {
        SolveOptions options;
        options.budget_nodes = args.limits.budget_nodes;
        options.record_transcript = true;
        outcome = solve_square_root(g, options);
        d["status"] = std::string(to_string(outcome.kind));
        d["nodes"] = outcome.nodes_explored;
        d["budget_nodes"] = outcome.budget_nodes;
        return true;
    });
    if (!args.transcript.empty()) {
        report.stage("write_transcript", [&](json& d) {
            std::string text;
            for (const auto& line : outcome.transcript)
                text += line + "\n";
            write_text_file(args.transcript, text);
            d["transcript"] = args.transcript;
            d["lines"] = outcome.transcript.size();
            return true;
        });
    }

    switch (outcome.kind) {
    case OutcomeKind::Root:
        if (!report.stage("verify_square_root", [&](json&) { return verify_square_root(*outcome.root, g); }))
            return finish(std::move(report), exit_failed);
        if (!args.output.empty()
            && !report.stage("write", [&](json& d) {
                   save_edge_list(args.output, *outcome.root);
                   d["root"] = args.output;
                   d["root_edges"] = outcome.root->size();
                   return true;
               }))
            return finish(std::move(report), exit_error);
        return finish(std::move(report), exit_ok);
    case OutcomeKind::NoRoot:
        if (!report.stage("certify_no_root", [&](json&) { return certify_no_root(g, outcome); }))
            return finish(std::move(report), exit_failed);
        return finish(std::move(report), exit_no);
    case OutcomeKind::Inconclusive:
        break;
    }
    return finish(std::move(report), exit_inconclusive);
}

std::optional<VerifyKind> parse_verify_kind(const std::string& name)
{
    if (name == "square-root")
        return VerifyKind::SquareRoot;
    if (name == "partition")
        return VerifyKind::Partition;
    if (name == "apex")
        return VerifyKind::Apex;
    return std::nullopt;
}

PipelineReport cmd_verify(const VerifyArgs& args)
{
    auto report = make_report("verify");
    const std::size_t needed = args.kind == VerifyKind::Apex ? 1 : 2;
    if (args.inputs.size() != needed) {
        report.stage("parse", [&](json& d) {
            d["expected_inputs"] = needed;
            d["got_inputs"] = args.inputs.size();
            return false;
        });
        return finish(std::move(report), exit_error);
    }

    switch (args.kind) {
    case VerifyKind::SquareRoot: {
        Graph h, g;
        if (!report.stage("parse", [&](json& d) {
                h = load_edge_list(args.inputs[0]);
                g = load_edge_list(args.inputs[1]);
                d["root"] = size_of(h);
                d["graph"] = size_of(g);
                return true;
            }))
            return finish(std::move(report), exit_error);
        if (!report.stage("vertex_sets", [&](json&) { return h.same_vertex_set(g); }))
            return finish(std::move(report), exit_error);
        const bool ok = report.stage("square_root", [&](json& d) {
            const auto diff = square_difference(h, g);
            json missing = json::array(), extra = json::array();
            for (const auto& p : diff.missing)
                missing.push_back(pair_text(p));
            for (const auto& p : diff.extra)
                extra.push_back(pair_text(p));
            d["uncovered"] = missing;
            d["unexpected"] = extra;
            return diff.empty();
        });
        return finish(std::move(report), ok ? exit_ok : exit_failed);
    }
    case VerifyKind::Partition: {
        std::optional<SetSplitInstance> inst;
        std::optional<Partition3> p;
        if (!report.stage("parse", [&](json&) {
                inst = parse_instance_json(read_text_file(args.inputs[0]));
                p = parse_partition_json(read_text_file(args.inputs[1]));
                return true;
            }))
            return finish(std::move(report), exit_error);
        const bool ok = report.stage("partition", [&](json& d) {
            const bool valid = verify_partition(*inst, *p);
            d["splits_every_subset"] = valid;
            return valid;
        });
        return finish(std::move(report), ok ? exit_ok : exit_failed);
    }
    case VerifyKind::Apex: {
        Graph g;
        if (!report.stage("parse", [&](json& d) {
                g = load_edge_list(args.inputs[0]);
                d = size_of(g);
                return true;
            }))
            return finish(std::move(report), exit_error);
        ApexCertificate cert;
        if (!report.stage("apex", [&](json& d) {
                cert = is_apex_with(g, args.apex);
                d["apex_set"] = cert.apex_set;
                d["remainder_planar"] = cert.remainder_planar;
                return cert.remainder_planar;
            }))
            return finish(std::move(report), report.stages.back().error.empty() ? exit_failed : exit_error);
        return finish(std::move(report), exit_ok);
    }
    }
    return finish(std::move(report), exit_error);
}

RoundtripResult run_roundtrip(const Graph& g, const RoundtripArgs& args)
{
    RoundtripResult r;
    auto& report = r.report;
    report.command = "roundtrip";
    auto done = [&](int code) {
        report.exit_status = code;
        return std::move(r);
    };

    std::optional<ColoringInstance> ci;
    if (!report.stage("planarity", [&](json& d) {
            ci = ColoringInstance::make(g);
            d = size_of(g);
            return true;
        }))
        return done(exit_failed);

    if (!report.stage("color_to_setsplit", [&](json& d) {
            r.reduction = color_to_setsplit(*ci);
            const auto& inst = r.reduction->instance;
            d["ground_set"] = inst.ground_set.size();
            d["collection"] = inst.collection.size();
            return inst.ground_set.size() == g.order() + g.size() && inst.collection.size() == g.size();
        }))
        return done(exit_failed);

    const auto& inst = r.reduction->instance;
    if (!report.stage("validate_instance", [&](json& d) {
            const auto violations = validate_instance(inst);
            d["violations"] = violations_json(violations);
            return violations.empty();
        }))
        return done(exit_failed);

    if (!report.stage("setsplit_to_graph", [&](json& d) {
            r.gadget = setsplit_to_graph(inst);
            d = size_of(r.gadget->graph);
            d["families"] = family_json(*r.gadget);
            return r.gadget->graph.order() == inst.ground_set.size() + 4 * inst.collection.size() + 15;
        }))
        return done(exit_failed);

    if (!report.stage("three_coloring", [&](json& d) {
            r.coloring = find_3_coloring(g, assignment_budget(args.limits));
            d["colorable"] = r.coloring.has_value();
            return true;
        }))
        return done(exit_inconclusive);

    if (r.coloring) {
        if (!report.stage("coloring_to_partition", [&](json& d) {
                r.partition = coloring_to_partition(*r.reduction, lift_coloring(*r.reduction, *r.coloring));
                d["parts"] = json::array({r.partition->parts[0].size(), r.partition->parts[1].size(),
                                          r.partition->parts[2].size()});
                return verify_partition(inst, *r.partition);
            }))
            return done(exit_failed);

        if (!report.stage("partition_to_root", [&](json& d) {
                r.root = partition_to_root(*r.gadget, *r.partition);
                d = size_of(*r.root);
                return true;
            }))
            return done(exit_failed);

        if (!report.stage("verify_square_root", [&](json& d) {
                const bool square_ok = verify_square_root(*r.root, r.gadget->graph);
                const bool clique_ok = neighborhood_clique_check(*r.root, r.gadget->graph);
                d["square"] = square_ok;
                d["neighborhood_cliques"] = clique_ok;
                return square_ok && clique_ok;
            }))
            return done(exit_failed);

        if (!report.stage("apex", [&](json& d) {
                const auto cert = is_apex_with(*r.root, gadget_apex_labels());
                d["apex_set"] = cert.apex_set;
                d["remainder_planar"] = cert.remainder_planar;
                return cert.remainder_planar;
            }))
            return done(exit_failed);

        if (!report.stage("root_to_partition", [&](json& d) {
                r.extracted = root_to_partition(*r.gadget, *r.root);
                const bool same12 = r.extracted->parts[0] == r.partition->parts[0]
                                    && r.extracted->parts[1] == r.partition->parts[1];
                const bool contains3 = std::includes(r.extracted->parts[2].begin(), r.extracted->parts[2].end(),
                                                     r.partition->parts[2].begin(), r.partition->parts[2].end());
                d["parts_1_2_agree"] = same12;
                d["part_3_contains"] = contains3;
                return same12 && contains3 && verify_partition(inst, *r.extracted);
            }))
            return done(exit_failed);

        if (!report.stage("partition_to_coloring", [&](json& d) {
                const auto f = partition_to_coloring(*r.reduction, *r.extracted);
                const bool proper = is_proper_coloring(g, restrict_coloring(f, g));
                d["proper_on_input"] = proper;
                return proper;
            }))
            return done(exit_failed);
    }
    else {
        int code = exit_ok;
        if (!report.stage("solve_square_root", [&](json& d) {
                SolveOptions options;
                options.budget_nodes = args.limits.budget_nodes;
                r.outcome = solve_square_root(r.gadget->graph, options);
                d["status"] = std::string(to_string(r.outcome->kind));
                d["nodes"] = r.outcome->nodes_explored;
                if (r.outcome->kind == OutcomeKind::Inconclusive)
                    code = exit_inconclusive;
                return r.outcome->kind == OutcomeKind::NoRoot;
            }))
            return done(code == exit_ok ? exit_failed : code);

        if (!report.stage("certify_no_root", [&](json&) { return certify_no_root(r.gadget->graph, *r.outcome); }))
            return done(exit_failed);
    }

    if (!args.artifacts_dir.empty()) {
        if (!report.stage("write_artifacts", [&](json& d) {
                namespace fs = std::filesystem;
                const fs::path dir(args.artifacts_dir);
                fs::create_directories(dir);
                write_text_file((dir / "instance.json").string(), instance_to_json(inst));
                write_text_file((dir / "instance.origins.json").string(), origins_to_json(*r.reduction));
                save_edge_list((dir / "gadget.graph").string(), r.gadget->graph);
                write_text_file((dir / "gadget.roles.json").string(), roles_to_json(r.gadget->roles));
                if (r.partition)
                    write_text_file((dir / "partition.json").string(), partition_to_json(*r.partition));
                if (r.root)
                    save_edge_list((dir / "root.graph").string(), *r.root);
                d["dir"] = args.artifacts_dir;
                return true;
            }))
            return done(exit_error);
    }
    return done(exit_ok);
}

PipelineReport cmd_roundtrip(const RoundtripArgs& args)
{
    Graph g;
    PipelineReport parse_report = make_report("roundtrip");
    if (!parse_report.stage("parse", [&](json& d) {
            g = load_edge_list(args.input);
            d = size_of(g);
            return true;
        }))
        return finish(std::move(parse_report), exit_error);

    auto result = run_roundtrip(g, args);
    auto& stages = result.report.stages;
    stages.insert(stages.begin(), parse_report.stages.front());
    return std::move(result.report);
}

PipelineReport cmd_export_dot(const ExportDotArgs& args, std::ostream& artifact_out)
{
    auto report = make_report("export-dot");
    Graph g;
    std::optional<std::map<std::string, VertexRole>> roles;
    if (!report.stage("parse", [&](json& d) {
            g = load_edge_list(args.input);
            d = size_of(g);
            if (!args.roles.empty()) {
                roles = parse_roles_json(read_text_file(args.roles));
                d["roles"] = roles->size();
            }
            return true;
        }))
        return finish(std::move(report), exit_error);

    if (!report.stage("write", [&](json& d) {
            const auto dot = to_dot(g, roles ? &*roles : nullptr);
            if (!dot.warnings.empty())
                d["warnings"] = dot.warnings;
            if (args.output.empty()) {
                artifact_out << dot.text;
                d["to"] = "stdout";
            }
            else {
                write_text_file(args.output, dot.text);
                d["to"] = args.output;
            }
            return true;
        }))
        return finish(std::move(report), exit_error);
    return finish(std::move(report), exit_ok);
}

} // namespace sqroot::cli

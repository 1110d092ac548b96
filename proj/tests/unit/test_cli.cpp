#include <gtest/gtest.h>

#include <algorithm>
#include <filesystem>
#include <sstream>

#include "commands.hpp"
#include "graphs.hpp"
#include "sqroot/edge_list.hpp"
#include "sqroot/gadget.hpp"
#include "sqroot/json_io.hpp"
#include "sqroot/planarity.hpp"

using namespace sqroot;
using namespace sqroot::cli;
using sqroot::testing::make_partition;
namespace fs = std::filesystem;

namespace {

std::string data(const std::string& name) { return std::string(SQROOT_TEST_DATA) + "/" + name; }

class CliTest : public ::testing::Test {
protected:
    void SetUp() override
    {
        dir_ = fs::temp_directory_path() / ("sqroot_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }
    std::string tmp(const std::string& name) const { return (dir_ / name).string(); }

    fs::path dir_;
};

} // namespace

TEST_F(CliTest, SquareC5)
{
    std::ostringstream out;
    auto report = cmd_square({data("c5.graph"), ""}, out);
    EXPECT_EQ(report.exit_status, exit_ok);
    auto k5 = load_edge_list(data("k5.graph"));
    EXPECT_EQ(parse_edge_list(out.str()), k5);

    auto r2 = cmd_square({data("c5.graph"), tmp("sq.graph")}, out);
    EXPECT_EQ(r2.exit_status, exit_ok);
    EXPECT_EQ(load_edge_list(tmp("sq.graph")), k5);
}

TEST_F(CliTest, SquareOfEdgelessIsIdentical)
{
    write_text_file(tmp("empty.graph"), "p 3 0\nv a\nv b\nv c\n");
    std::ostringstream out;
    EXPECT_EQ(cmd_square({tmp("empty.graph"), ""}, out).exit_status, exit_ok);
    EXPECT_EQ(out.str(), "p 3 0\nv a\nv b\nv c\n");
}

TEST_F(CliTest, MalformedEdgeLine)
{
    std::ostringstream out;
    auto report = cmd_square({data("malformed.graph"), ""}, out);
    EXPECT_EQ(report.exit_status, exit_error);
    ASSERT_FALSE(report.stages.empty());
    EXPECT_NE(report.stages.back().error.find("line 6"), std::string::npos) << report.stages.back().error;
}

TEST_F(CliTest, ReduceFullK3)
{
    ReduceArgs args{ReduceKind::Full, data("k3.graph"), tmp("g.graph"), "", tmp("inst.json")};
    auto report = cmd_reduce(args);
    ASSERT_EQ(report.exit_status, exit_ok) << report.to_text();
    auto g = load_edge_list(tmp("g.graph"));
    EXPECT_EQ(g.order(), 33u);
    auto roles = parse_roles_json(read_text_file(tmp("g.graph.roles.json")));
    EXPECT_EQ(roles.size(), 33u);
    auto inst = parse_instance_json(read_text_file(tmp("inst.json")));
    EXPECT_EQ(inst.ground_set.size(), 6u);
}

TEST_F(CliTest, ReduceNoInstance)
{
    ReduceArgs args{ReduceKind::SetsplitToGraph, data("no_instance.json"), tmp("g.graph"), tmp("roles.json"), ""};
    ASSERT_EQ(cmd_reduce(args).exit_status, exit_ok);
    EXPECT_EQ(load_edge_list(tmp("g.graph")).order(), 35u);
    EXPECT_EQ(load_edge_list(tmp("g.graph")), load_edge_list(data("no_instance_gadget.graph")));
}

TEST_F(CliTest, ReduceRejectsNonPlanar)
{
    ReduceArgs args{ReduceKind::ColoringToSetsplit, data("k5.graph"), tmp("inst.json"), "", ""};
    auto report = cmd_reduce(args);
    EXPECT_EQ(report.exit_status, exit_error);
    EXPECT_NE(report.to_text().find("NotPlanar"), std::string::npos) << report.to_text();
}

TEST_F(CliTest, SolveExitCodes)
{
    SolveArgs k5{SolveKind::Sqroot, data("k5.graph"), tmp("root.graph"), tmp("k5.transcript"), {}};
    ASSERT_EQ(cmd_solve(k5).exit_status, exit_ok);
    EXPECT_TRUE(verify_square_root(load_edge_list(tmp("root.graph")), load_edge_list(data("k5.graph"))));

    SolveArgs p3{SolveKind::Sqroot, data("p3.graph"), "", "", {}};
    EXPECT_EQ(cmd_solve(p3).exit_status, exit_no);

    SolveArgs no{SolveKind::Setsplit, data("no_instance.json"), "", "", {}};
    EXPECT_EQ(cmd_solve(no).exit_status, exit_no);

    SolveArgs yes{SolveKind::Setsplit, data("one_triple.json"), tmp("w.json"), "", {}};
    ASSERT_EQ(cmd_solve(yes).exit_status, exit_ok);
    EXPECT_EQ(parse_partition_json(read_text_file(tmp("w.json"))), make_partition({"a"}, {"b"}, {"c"}));

    SolveArgs tight{SolveKind::Sqroot, data("no_instance_gadget.graph"), "", "", {}};
    tight.limits.budget_nodes = 2;
    EXPECT_EQ(cmd_solve(tight).exit_status, exit_inconclusive);

    SolveArgs small{SolveKind::Setsplit, data("no_instance.json"), "", "", {}};
    small.limits.max_ground_set = 3;
    EXPECT_EQ(cmd_solve(small).exit_status, exit_inconclusive);
}

TEST_F(CliTest, SolveWritesTranscript)
{
    SolveArgs args{SolveKind::Sqroot, data("no_instance_gadget.graph"), "", tmp("t.txt"), {}};
    ASSERT_EQ(cmd_solve(args).exit_status, exit_no);
    const auto text = read_text_file(tmp("t.txt"));
    EXPECT_NE(text.find("branch "), std::string::npos);
    EXPECT_NE(text.find("exhausted"), std::string::npos);
}

TEST_F(CliTest, VerifySquareRoot)
{
    VerifyArgs ok{VerifyKind::SquareRoot, {data("c5.graph"), data("k5.graph")}, {}};
    EXPECT_EQ(cmd_verify(ok).exit_status, exit_ok);

    VerifyArgs bad{VerifyKind::SquareRoot, {data("p3.graph"), data("p3.graph")}, {}};
    EXPECT_EQ(cmd_verify(bad).exit_status, exit_failed);

    VerifyArgs mismatch{VerifyKind::SquareRoot, {data("p3.graph"), data("k5.graph")}, {}};
    EXPECT_EQ(cmd_verify(mismatch).exit_status, exit_error);

    VerifyArgs missing{VerifyKind::SquareRoot, {data("p3.graph")}, {}};
    EXPECT_EQ(cmd_verify(missing).exit_status, exit_error);
}

TEST_F(CliTest, TamperedWitnessNamesUncoveredEdge)
{
    auto gg = setsplit_to_graph(SetSplitInstance::make({"a", "b", "c"}, {{"a", "b", "c"}}));
    auto h = partition_to_root(gg, make_partition({"a"}, {"b"}, {"c"}));
    save_edge_list(tmp("g.graph"), gg.graph);
    save_edge_list(tmp("h.graph"), h);
    write_text_file(tmp("g.roles.json"), roles_to_json(gg.roles));

    VerifyArgs good{VerifyKind::SquareRoot, {tmp("h.graph"), tmp("g.graph")}, {}};
    EXPECT_EQ(cmd_verify(good).exit_status, exit_ok);
    VerifyArgs apex{VerifyKind::Apex, {tmp("h.graph")}, gadget_apex_labels()};
    EXPECT_EQ(cmd_verify(apex).exit_status, exit_ok);
    VerifyArgs no_apex{VerifyKind::Apex, {tmp("g.graph")}, {}};
    EXPECT_EQ(cmd_verify(no_apex).exit_status, exit_failed);

    // drop the pendant tail edge xc:1:0 -- xc:2:0; its square lost that pair
    GraphBuilder b;
    for (const auto& v : h.vertices())
        b.add_vertex(v);
    for (const auto& e : h.edges())
        if (!(e.u == "xc:1:0" && e.v == "xc:2:0"))
            b.add_edge(e.u, e.v);
    save_edge_list(tmp("tampered.graph"), b.build());
    VerifyArgs tampered{VerifyKind::SquareRoot, {tmp("tampered.graph"), tmp("g.graph")}, {}};
    auto report = cmd_verify(tampered);
    EXPECT_EQ(report.exit_status, exit_failed);
    const auto* stage = report.find("square_root");
    ASSERT_NE(stage, nullptr);
    const auto uncovered = stage->details.at("uncovered");
    EXPECT_NE(std::find(uncovered.begin(), uncovered.end(), "xc:1:0--xc:2:0"), uncovered.end()) << uncovered.dump();
}

TEST_F(CliTest, VerifyPartition)
{
    write_text_file(tmp("w.json"), R"({"parts": [["a"], ["b"], ["c"]]})");
    VerifyArgs ok{VerifyKind::Partition, {data("one_triple.json"), tmp("w.json")}, {}};
    EXPECT_EQ(cmd_verify(ok).exit_status, exit_ok);
    write_text_file(tmp("bad.json"), R"({"parts": [["a", "b"], ["c"], []]})");
    VerifyArgs bad{VerifyKind::Partition, {data("one_triple.json"), tmp("bad.json")}, {}};
    EXPECT_EQ(cmd_verify(bad).exit_status, exit_failed);
    write_text_file(tmp("short.json"), R"({"parts": [["a"], ["b"], []]})");
    VerifyArgs shortp{VerifyKind::Partition, {data("one_triple.json"), tmp("short.json")}, {}};
    auto report = cmd_verify(shortp);
    EXPECT_EQ(report.exit_status, exit_failed);
    EXPECT_NE(report.to_text().find("NotAPartition"), std::string::npos) << report.to_text();
}

TEST_F(CliTest, RoundtripTriangle)
{
    RoundtripArgs args{data("k3.graph"), tmp("art"), {}};
    auto r = run_roundtrip(load_edge_list(data("k3.graph")), args);
    ASSERT_EQ(r.report.exit_status, exit_ok) << r.report.to_text();
    ASSERT_TRUE(r.gadget && r.root && r.extracted && r.partition);
    EXPECT_EQ(r.gadget->graph.order(), 33u);
    EXPECT_TRUE(verify_square_root(*r.root, r.gadget->graph));
    EXPECT_TRUE(is_apex_with(*r.root, gadget_apex_labels()).remainder_planar);
    EXPECT_EQ(r.extracted->parts[0], r.partition->parts[0]);
    EXPECT_EQ(r.extracted->parts[1], r.partition->parts[1]);
    for (auto f : {"instance.json", "gadget.graph", "gadget.roles.json", "partition.json", "root.graph"})
        EXPECT_TRUE(fs::exists(dir_ / "art" / f)) << f;
    EXPECT_EQ(cmd_roundtrip(args).exit_status, exit_ok);
}

TEST_F(CliTest, RoundtripSingleEdgeAndK4)
{
    RoundtripArgs edge{data("edge.graph"), "", {}};
    EXPECT_EQ(cmd_roundtrip(edge).exit_status, exit_ok);

    RoundtripArgs k4{data("k4.graph"), "", {}};
    auto r = run_roundtrip(load_edge_list(data("k4.graph")), k4);
    EXPECT_EQ(r.report.exit_status, exit_ok) << r.report.to_text();
    ASSERT_TRUE(r.gadget && r.outcome);
    EXPECT_EQ(r.gadget->graph.order(), 49u);
    EXPECT_EQ(r.outcome->kind, OutcomeKind::NoRoot);
    EXPECT_FALSE(r.coloring.has_value());
}

TEST_F(CliTest, ExportDot)
{
    std::ostringstream out;
    auto plain = cmd_export_dot({data("k3.graph"), "", ""}, out);
    EXPECT_EQ(plain.exit_status, exit_ok);
    EXPECT_NE(out.str().find("graph G"), std::string::npos);

    std::ostringstream styled;
    auto report = cmd_export_dot({data("no_instance_gadget.graph"), data("no_instance_gadget.roles.json"), ""}, styled);
    EXPECT_EQ(report.exit_status, exit_ok);
    EXPECT_NE(styled.str().find("doublecircle"), std::string::npos);

    std::ostringstream partial;
    auto warn = cmd_export_dot({data("k3.graph"), data("no_instance_gadget.roles.json"), ""}, partial);
    EXPECT_EQ(warn.exit_status, exit_ok);
    EXPECT_NE(warn.to_text().find("no role"), std::string::npos) << warn.to_text();
}

TEST_F(CliTest, ReportJsonSchema)
{
    VerifyArgs ok{VerifyKind::SquareRoot, {data("c5.graph"), data("k5.graph")}, {}};
    auto j = cmd_verify(ok).to_json();
    EXPECT_EQ(j.at("schema_version"), 1);
    EXPECT_EQ(j.at("command"), "verify");
    EXPECT_EQ(j.at("exit_status"), 0);
    ASSERT_TRUE(j.at("stages").is_array());
    for (const auto& s : j.at("stages")) {
        EXPECT_TRUE(s.contains("name"));
        EXPECT_TRUE(s.contains("ok"));
        EXPECT_TRUE(s.contains("seconds"));
        EXPECT_TRUE(s.contains("details"));
    }
}

#include <gtest/gtest.h>

#include <random>

#include "graphs.hpp"
#include "sqroot/coloring.hpp"
#include "sqroot/dot.hpp"
#include "sqroot/error.hpp"
#include "sqroot/gadget.hpp"
#include "sqroot/json_io.hpp"

using namespace sqroot;
using namespace sqroot::testing;

TEST(InstanceJson, RoundTrip)
{
    std::mt19937_64 rng(79);
    for (int trial = 0; trial < 50; ++trial) {
        auto inst = random_instance(rng, 8, 5);
        auto back = parse_instance_json(instance_to_json(inst));
        EXPECT_EQ(back.ground_set, inst.ground_set);
        EXPECT_EQ(back.collection, inst.collection);
    }
}

TEST(InstanceJson, Errors)
{
    EXPECT_THROW(parse_instance_json("{"), ParseError);
    EXPECT_THROW(parse_instance_json(R"({"ground_set": ["a"]})"), ParseError);
    EXPECT_THROW(parse_instance_json(R"({"ground_set": [1], "collection": []})"), ParseError);
    EXPECT_THROW(parse_instance_json(R"({"ground_set": ["a", "a"], "collection": []})"), Error);
}

TEST(PartitionJson, RoundTrip)
{
    const auto p = make_partition({"a", "b"}, {}, {"c"});
    EXPECT_EQ(parse_partition_json(partition_to_json(p)), p);
    EXPECT_THROW(parse_partition_json(R"({"parts": [["a"], ["b"]]})"), ParseError);
    EXPECT_THROW(parse_partition_json(R"({"parts": [["a", "a"], [], []]})"), Error);
}

TEST(RolesJson, RoundTrip)
{
    auto gg = setsplit_to_graph(four_triples());
    auto text = roles_to_json(gg.roles);
    EXPECT_EQ(parse_roles_json(text), gg.roles);
    EXPECT_NE(text.find(R"("xc:2:3")"), std::string::npos);
}

TEST(RolesJson, Errors)
{
    EXPECT_THROW(parse_roles_json("[]"), ParseError);
    EXPECT_THROW(parse_roles_json(R"({"a:1": {"role": "Bogus", "args": [1]}})"), ParseError);
    EXPECT_THROW(parse_roles_json(R"({"a:1": {"role": "A", "args": [1, 2]}})"), ParseError);
    EXPECT_THROW(parse_roles_json(R"({"x:a": {"role": "Element", "args": [3]}})"), ParseError);
    // label must match the role
    EXPECT_THROW(parse_roles_json(R"({"a:2": {"role": "A", "args": [1]}})"), ParseError);
}

TEST(OriginsJson, DescribesSubdivisions)
{
    auto red = color_to_setsplit(ColoringInstance::make(Graph::from_edges({"x", "y"}, {{"x", "y"}})));
    const auto text = origins_to_json(red);
    EXPECT_NE(text.find("subdivision"), std::string::npos);
    EXPECT_NE(text.find("z_x_y"), std::string::npos);
}

TEST(Dot, PlainGraph)
{
    auto out = to_dot(cycle(3));
    EXPECT_TRUE(out.warnings.empty());
    EXPECT_NE(out.text.find("graph"), std::string::npos);
    EXPECT_NE(out.text.find("\"v0\" -- \"v1\""), std::string::npos);
}

TEST(Dot, RolesStyleGadgetVertices)
{
    auto gg = setsplit_to_graph(SetSplitInstance::make({"a", "b", "c"}, {{"a", "b", "c"}}));
    auto out = to_dot(gg.graph, &gg.roles);
    EXPECT_TRUE(out.warnings.empty());
    // distinct styling per role kind
    auto attrs = [&](const std::string& label) {
        const auto at = out.text.find("\"" + label + "\" [");
        EXPECT_NE(at, std::string::npos) << label;
        return out.text.substr(at + label.size() + 2, out.text.find('\n', at) - at - label.size() - 2);
    };
    std::set<std::string> styles{attrs("x:a"), attrs("c:0"), attrs("xc:1:0"), attrs("a:1"), attrs("b:1"),
                                 attrs("bt:1:1")};
    EXPECT_EQ(styles.size(), 6u);
}

TEST(Dot, MissingRoleWarns)
{
    auto gg = setsplit_to_graph(SetSplitInstance::make({"a", "b", "c"}, {{"a", "b", "c"}}));
    auto roles = gg.roles;
    roles.erase("a:2");
    auto out = to_dot(gg.graph, &roles);
    ASSERT_EQ(out.warnings.size(), 1u);
    EXPECT_NE(out.warnings[0].find("a:2"), std::string::npos);
}

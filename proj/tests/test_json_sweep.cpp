#include <hyperweight/json_io.hpp>
#include <hyperweight/sweep.hpp>

#include <gtest/gtest.h>

using namespace hyperweight;

TEST(InstanceJson, Parses)
{
    const Instance inst = instance_from_json(Json::parse(R"({"n": 3, "edges": [[2, 0, 1]],
        "vertex_lists": [["1/2", -1], [0, 1], [0, "3"]], "edge_lists": [[0, 1, "-2/4"]]})"));
    EXPECT_EQ(inst.hypergraph.edge(0), (Edge{0, 1, 2}));
    ASSERT_TRUE(inst.lists);
    EXPECT_EQ(inst.lists->vertex_lists[0][0], Rational(1, 2));
    EXPECT_EQ(inst.lists->edge_lists[0][2], Rational(-1, 2));
    EXPECT_EQ(instance_to_json(inst.hypergraph, &*inst.lists)["edge_lists"][0][2], "-1/2");

    const Instance bare = instance_from_json(Json::parse(R"({"n": 2, "edges": [[0, 1]]})"));
    EXPECT_FALSE(bare.lists);
}

TEST(InstanceJson, Errors)
{
    for (const char* text : {R"({"edges": []})", R"({"n": -1, "edges": []})", R"({"n": 2, "edges": [[0, "a"]]})",
                             R"({"n": 2, "edges": [[0, 1]], "vertex_lists": [[0, 1], [0, 1]]})",
                             R"({"n": 2, "edges": [[0, 1]], "vertex_lists": [[0, 1], [0, 1]], "edge_lists": [[0, 1]]})",
                             R"({"n": 2, "edges": [[0, 1]], "vertex_lists": [[0, 0.5], [0, 1]], "edge_lists": [[0, 1, 2]]})",
                             R"({"n": 2, "edges": [[0, 1]], "vertex_lists": [["1/0", 1], [0, 1]], "edge_lists": [[0, 1, 2]]})"})
        EXPECT_THROW(instance_from_json(Json::parse(text)), std::invalid_argument) << text;

    // Invalid edges parse so that they can be reported.
    const Instance size_one = instance_from_json(Json::parse(R"({"n": 2, "edges": [[0]]})"));
    EXPECT_FALSE(validate(size_one.hypergraph).valid());
}

TEST(InstanceJson, RoundTrip)
{
    const Hypergraph h = random_hypergraph(6, 5, {2, 4}, 11);
    const ListAssignment lists = random_lists(h, ListMode::RandomRational, 12);
    const Instance back = instance_from_json(instance_to_json(h, &lists));
    EXPECT_EQ(back.hypergraph, h);
    ASSERT_TRUE(back.lists);
    EXPECT_EQ(back.lists->vertex_lists, lists.vertex_lists);
    EXPECT_EQ(back.lists->edge_lists, lists.edge_lists);

    const TotalWeighting w{{Rational(1, 3), Rational(-2)}, {Rational(5, 7)}};
    const TotalWeighting w2 = weighting_from_json(weighting_to_json(w));
    EXPECT_EQ(w2.vertex_weights, w.vertex_weights);
    EXPECT_EQ(w2.edge_weights, w.edge_weights);
}

TEST(WitnessJson, Fields)
{
    const Json j = witness_to_json(build_witness(Hypergraph(3, {{0, 1}, {1, 2}})));
    EXPECT_EQ(j["variant"], "jacobian");
    EXPECT_EQ(j["columns"], Json::array({"v1", "v2"}));
    EXPECT_EQ(j["permanent"], "1");
    EXPECT_EQ(j["b_valid"], true);
    EXPECT_EQ(j["trace"].size(), 3u);
}

TEST(WitnessJson, MonomialNames)
{
    const MonomialIndex t = monomial_from_names(split_names("v0,e1,e1"), 2, 3);
    EXPECT_EQ(t.describe(), "{e1,e1,v0}");
    EXPECT_THROW(monomial_from_names({"v3"}, 2, 3), std::invalid_argument);
    EXPECT_THROW(monomial_from_names({"x1"}, 2, 3), std::invalid_argument);
}

namespace {

SweepConfig small_config()
{
    SweepConfig c;
    c.n_max = 3;
    c.m_max = 2;
    c.sizes = {2, 3};
    c.trials = 3;
    c.seed = 5;
    return c;
}

} // namespace

TEST(Sweep, DeterministicAcrossThreadCounts)
{
    SweepConfig a = small_config();
    a.threads = 1;
    SweepConfig b = small_config();
    b.threads = 4;
    const SweepResult ra = run_sweep(a);
    const SweepResult rb = run_sweep(b);
    EXPECT_EQ(ra.report.dump(2), rb.report.dump(2));
    EXPECT_FALSE(ra.critical());
    EXPECT_EQ(ra.report["solver"]["pair_distinct_success_rate"], 1.0);
    EXPECT_EQ(ra.report["witness"]["jacobian"]["no_witness"], 0);
    EXPECT_EQ(ra.report["coefficients"]["jacobian"]["mismatches"], 0);

    SweepConfig c = small_config();
    c.seed = 6;
    EXPECT_EQ(run_sweep(c).report["instances"], ra.report["instances"]);
}

TEST(Sweep, CatalogsPaperMismatch)
{
    const SweepResult r = run_sweep(small_config());
    const Json& catalog = r.report["coefficients"]["paper"]["mismatch_catalog"];
    bool found = false;
    for (const Json& entry : catalog)
        if (entry["n"] == 3 && entry["edges"] == Json::parse("[[0,1,2]]") && entry["monomial"] == "{v2}") {
            EXPECT_EQ(entry["expand_phi"], "0");
            EXPECT_EQ(entry["permanent_bridge"], "1");
            found = true;
        }
    EXPECT_TRUE(found);
    EXPECT_GT(r.report["coefficients"]["paper"]["mismatches"].get<std::size_t>(), 0u);
}

TEST(Sweep, RejectsBadConfig)
{
    SweepConfig c = small_config();
    c.sizes = {1, 3};
    EXPECT_THROW(run_sweep(c), std::invalid_argument);
    c = small_config();
    c.variants.clear();
    EXPECT_THROW(run_sweep(c), std::invalid_argument);
}

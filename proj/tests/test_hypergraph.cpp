#include <hyperweight/generate.hpp>
#include <hyperweight/hypergraph.hpp>
#include <hyperweight/reduction.hpp>
#include <hyperweight/solver.hpp>

#include "test_support.hpp"

#include <gtest/gtest.h>

#include <set>

using namespace hyperweight;

namespace {

ListAssignment integer_lists(const Hypergraph& h)
{
    ListAssignment lists;
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        lists.vertex_lists.push_back({Rational(0), Rational(1)});
    for (EdgeId e = 0; e < h.num_edges(); ++e)
        lists.edge_lists.push_back({Rational(0), Rational(1), Rational(2)});
    return lists;
}

} // namespace

TEST(Validate, ReportsViolations)
{
    EXPECT_TRUE(validate(Hypergraph(3, {{0, 1, 2}})).valid());

    const ValidationReport small = validate(Hypergraph(1, {{0}}));
    ASSERT_EQ(small.violations.size(), 1u);
    EXPECT_NE(small.violations[0].find("edge of size 1"), std::string::npos);

    const ValidationReport range = validate(Hypergraph(3, {{0, 5}}));
    ASSERT_EQ(range.violations.size(), 1u);
    EXPECT_NE(range.violations[0].find("vertex id out of range"), std::string::npos);

    EXPECT_FALSE(validate(Hypergraph(2, {{}})).valid());
    EXPECT_FALSE(validate(Hypergraph(2, {{1, 1}})).valid()); // a set of size 1
    EXPECT_THROW(require_valid(Hypergraph(1, {{0}})), std::invalid_argument);
}

TEST(EdgePair, LeadingVerticesInOrder)
{
    const Hypergraph h(4, {{2, 0, 1}, {1, 2}, {0, 1, 2}, {3, 1, 0}});
    EXPECT_EQ(edge_pair(h, 0), (EdgePair{0, 0, 1}));
    EXPECT_EQ(edge_pair(h, 1), (EdgePair{1, 1, 2}));
    EXPECT_EQ(edge_pair(h, 2).u, 0u);
    EXPECT_EQ(edge_pair(h, 3).v, 1u);
    EXPECT_THROW(edge_pair(h, 4), std::out_of_range);
    EXPECT_TRUE(has_duplicate_pairs(h));
}

TEST(EdgePair, AlwaysMembersInOrder)
{
    for_each_hypergraph(4, 2, {2, 4}, [](const Hypergraph& h) {
        for (const EdgePair& p : edge_pairs(h)) {
            EXPECT_TRUE(h.contains(p.edge, p.u));
            EXPECT_TRUE(h.contains(p.edge, p.v));
            EXPECT_LT(p.u, p.v);
            for (VertexId w : h.edge(p.edge))
                if (w != p.u && w != p.v)
                    EXPECT_GT(w, p.v);
        }
    });
}

TEST(DeleteFirstVertex, Examples)
{
    const PeeledVertex path = delete_first_vertex(Hypergraph(3, {{0, 1}, {1, 2}}));
    EXPECT_EQ(path.u, 0u);
    EXPECT_EQ(path.degree, 1u);
    EXPECT_EQ(path.rest, Hypergraph(2, {{0, 1}})); // {1,2} relabelled
    EXPECT_EQ(path.kept_edges, std::vector<EdgeId>{1});

    const PeeledVertex single = delete_first_vertex(Hypergraph(3, {{0, 1, 2}}));
    EXPECT_EQ(single.degree, 1u);
    EXPECT_EQ(single.rest.num_edges(), 0u);
    EXPECT_EQ(single.rest.num_vertices(), 2u);

    const PeeledVertex isolated = delete_first_vertex(Hypergraph(3, {{1, 2}}));
    EXPECT_EQ(isolated.degree, 0u);
    EXPECT_EQ(isolated.rest, Hypergraph(2, {{0, 1}}));

    EXPECT_THROW(delete_first_vertex(Hypergraph()), std::invalid_argument);
}

TEST(DeleteFirstVertex, SurvivingEdgesKeepTheirPairs)
{
    for_each_hypergraph(5, 3, {2, 4}, [](const Hypergraph& h) {
        if (h.num_vertices() == 0)
            return;
        const PeeledVertex p = delete_first_vertex(h);
        EXPECT_EQ(p.degree + p.rest.num_edges(), h.num_edges());
        for (EdgeId j = 0; j < p.rest.num_edges(); ++j) {
            const EdgePair before = edge_pair(h, p.kept_edges[j]);
            const EdgePair after = edge_pair(p.rest, j);
            EXPECT_EQ(after.u + 1, before.u);
            EXPECT_EQ(after.v + 1, before.v);
        }
    });
}

TEST(Twins, IncidenceClasses)
{
    using Classes = std::vector<std::vector<VertexId>>;
    EXPECT_EQ(find_twins(Hypergraph(3, {{0, 1, 2}})), (Classes{{0, 1, 2}}));
    EXPECT_EQ(find_twins(Hypergraph(3, {{0, 1}, {1, 2}})), (Classes{{0}, {1}, {2}}));
    EXPECT_EQ(find_twins(Hypergraph(4, {{0, 1, 2}, {0, 1, 3}})), (Classes{{0, 1}, {2}, {3}}));
}

TEST(Generate, EnumerationCountsAndDistinctness)
{
    std::size_t single_edge = 0;
    for_each_hypergraph(3, 1, {2, 3}, [&](const Hypergraph& h) {
        if (h.num_vertices() == 3 && h.num_edges() == 1)
            ++single_edge;
    });
    EXPECT_EQ(single_edge, 4u);

    // n = 4, sizes 2..4: 11 possible edges, sum_{m<=2} C(11, m) = 1 + 11 + 55.
    std::size_t on_four = 0;
    std::set<std::vector<Edge>> seen;
    for_each_hypergraph(4, 2, {2, 4}, [&](const Hypergraph& h) {
        if (h.num_vertices() != 4)
            return;
        ++on_four;
        EXPECT_TRUE(seen.insert(h.edges()).second);
        std::set<Edge> edges(h.edges().begin(), h.edges().end());
        EXPECT_EQ(edges.size(), h.num_edges());
    });
    EXPECT_EQ(on_four, 67u);
    EXPECT_THROW(possible_edges(3, {1, 2}), std::invalid_argument);
}

TEST(Generate, RandomIsDeterministicAndRespectsBounds)
{
    EXPECT_EQ(random_hypergraph(7, 5, {2, 4}, 42), random_hypergraph(7, 5, {2, 4}, 42));
    const Hypergraph pairs = random_hypergraph(4, 3, {2, 2}, 1);
    for (const Edge& e : pairs.edges())
        EXPECT_EQ(e.size(), 2u);
    EXPECT_TRUE(validate(random_hypergraph(30, 40, {2, 5}, 9)).valid());
    EXPECT_THROW(random_hypergraph(3, 5, {2, 3}, 1), std::invalid_argument);
    EXPECT_EQ(random_lists(pairs, ListMode::RandomRational, 5), random_lists(pairs, ListMode::RandomRational, 5));
    EXPECT_NO_THROW(require_well_formed(pairs, random_lists(pairs, ListMode::AdversarialEqual, 5)));
}

TEST(Reduction, RemovesLaterDuplicateAndShiftsLists)
{
    const Hypergraph h(4, {{0, 1, 2}, {0, 1, 3}});
    ListAssignment lists = integer_lists(h);
    lists.edge_lists[1] = {Rational(5), Rational(6), Rational(7)};

    const ReducedInstance r = reduce_duplicate_pairs(h, lists);
    EXPECT_EQ(r.hypergraph, Hypergraph(4, {{0, 1, 2}}));
    ASSERT_EQ(r.log.records.size(), 1u);
    EXPECT_EQ(r.log.records[0].removed_edge, 1u);
    EXPECT_EQ(r.log.records[0].weight, 5);
    EXPECT_EQ(r.log.records[0].vertices, (std::vector<VertexId>{0, 1, 3}));
    for (VertexId v : {0u, 1u, 3u})
        EXPECT_EQ(r.lists.vertex_lists[v], (std::vector<Rational>{5, 6}));
    EXPECT_EQ(r.lists.vertex_lists[2], (std::vector<Rational>{0, 1}));
    EXPECT_EQ(r.lists.edge_lists.size(), 1u);
    EXPECT_FALSE(has_duplicate_pairs(r.hypergraph));
}

TEST(Reduction, DistinctPairsUnchanged)
{
    const Hypergraph h(3, {{0, 1}, {1, 2}});
    const ReducedInstance r = reduce_duplicate_pairs(h, integer_lists(h));
    EXPECT_EQ(r.hypergraph, h);
    EXPECT_TRUE(r.log.empty());
    EXPECT_EQ(r.lists, integer_lists(h));
}

TEST(Reduction, StackedRecordsShiftTwice)
{
    const Hypergraph h(4, {{0, 1}, {0, 1, 2}, {0, 1, 3}});
    const ListAssignment lists = integer_lists(h);
    const ReducedInstance r = reduce_duplicate_pairs(h, lists);
    EXPECT_EQ(r.log.records.size(), 2u);
    EXPECT_EQ(r.lists.vertex_lists[0], (std::vector<Rational>{0, 1}));
    EXPECT_EQ(r.lists.vertex_lists[1], (std::vector<Rational>{0, 1}));
    EXPECT_EQ(r.hypergraph.num_edges(), 1u);

    // c = 0 for both removed edges, so let the lists say something instead.
    ListAssignment shifted = lists;
    shifted.edge_lists[1] = {Rational(2), Rational(1), Rational(0)};
    shifted.edge_lists[2] = {Rational(3), Rational(1), Rational(0)};
    const ReducedInstance s = reduce_duplicate_pairs(h, shifted);
    EXPECT_EQ(s.lists.vertex_lists[0], (std::vector<Rational>{5, 6}));
    EXPECT_EQ(s.lists.vertex_lists[1], (std::vector<Rational>{5, 6}));
    EXPECT_EQ(s.lists.vertex_lists[2], (std::vector<Rational>{2, 3}));
    EXPECT_EQ(s.lists.vertex_lists[3], (std::vector<Rational>{3, 4}));

    const std::optional<TotalWeighting> w = search_weighting(s.hypergraph, s.lists);
    ASSERT_TRUE(w);
    const TotalWeighting lifted = replay_reduction(s.log, *w, shifted);
    EXPECT_EQ(total_weights(h, lifted), total_weights(s.hypergraph, *w));
    EXPECT_TRUE(verify(h, lifted, &shifted).passes(SolveMode::PairDistinct));
}

TEST(Replay, SingleRecord)
{
    const Hypergraph h(4, {{0, 1, 2}, {0, 1, 3}});
    ListAssignment lists = integer_lists(h);
    lists.vertex_lists[0] = {Rational(1), Rational(2)};
    lists.edge_lists[1] = {Rational(5), Rational(6), Rational(7)};
    const ReducedInstance r = reduce_duplicate_pairs(h, lists);

    TotalWeighting reduced{{Rational(6), Rational(5), Rational(0), Rational(5)}, {Rational(0)}};
    const TotalWeighting lifted = replay_reduction(r.log, reduced, lists);
    EXPECT_EQ(lifted.vertex_weights[0], 1);
    EXPECT_EQ(lifted.edge_weights[1], 5);
    EXPECT_EQ(total_weights(h, lifted), total_weights(r.hypergraph, reduced));

    TotalWeighting outside = reduced;
    outside.vertex_weights[0] = 4; // not in the shifted list {6, 7}
    EXPECT_THROW(replay_reduction(r.log, outside, lists), std::invalid_argument);
}

TEST(Replay, EmptyLogIsIdentity)
{
    const Hypergraph h(3, {{0, 1}, {1, 2}});
    const ListAssignment lists = integer_lists(h);
    const ReducedInstance r = reduce_duplicate_pairs(h, lists);
    const TotalWeighting w{{Rational(0), Rational(1), Rational(0)}, {Rational(0), Rational(2)}};
    EXPECT_EQ(replay_reduction(r.log, w, lists), w);
}

TEST(Replay, RoundTripMatchesBruteForceOnOriginal)
{
    std::size_t with_duplicates = 0;
    for (std::uint64_t seed = 0; with_duplicates < 60; ++seed) {
        const Hypergraph h = random_hypergraph(4 + seed % 3, 2 + seed % 4, {2, 4}, seed);
        if (!has_duplicate_pairs(h))
            continue;
        ++with_duplicates;
        const ListAssignment lists = random_lists(h, ListMode::RandomRational, seed + 1000);
        const ReducedInstance r = reduce_duplicate_pairs(h, lists);
        EXPECT_FALSE(has_duplicate_pairs(r.hypergraph));
        for (const auto& l : r.lists.vertex_lists)
            EXPECT_EQ(l.size(), kVertexListSize);
        for (const auto& l : r.lists.edge_lists)
            EXPECT_EQ(l.size(), kEdgeListSize);

        const std::optional<TotalWeighting> w = search_weighting(r.hypergraph, r.lists);
        EXPECT_EQ(w.has_value(), oracle::brute_force_weighting_exists(h, lists, true));
        ASSERT_TRUE(w);
        const TotalWeighting lifted = replay_reduction(r.log, *w, lists);
        EXPECT_TRUE(verify(h, lifted, &lists).passes(SolveMode::PairDistinct));
    }
}

#include "test_support.hpp"

#include <hyperweight/generate.hpp>
#include <hyperweight/solver.hpp>

#include <gtest/gtest.h>

using namespace hyperweight;

namespace {

std::vector<Rational> values(std::initializer_list<int> xs)
{
    std::vector<Rational> out;
    for (int x : xs)
        out.emplace_back(x);
    return out;
}

ListAssignment zero_based_lists(const Hypergraph& h)
{
    return {std::vector<std::vector<Rational>>(h.num_vertices(), values({0, 1})),
            std::vector<std::vector<Rational>>(h.num_edges(), values({0, 1, 2}))};
}

const Hypergraph kSingleEdge(3, {{0, 1, 2}});
const Hypergraph kPath(3, {{0, 1}, {1, 2}});

} // namespace

TEST(Verify, TotalWeights)
{
    const TotalWeighting w{values({1, 0, 2}), values({3, -1})};
    EXPECT_EQ(total_weights(kPath, w), values({4, 2, 1}));
    EXPECT_THROW(total_weights(kPath, TotalWeighting{values({1, 0}), values({3, -1})}), std::invalid_argument);
}

TEST(Verify, Reports)
{
    const TotalWeighting good{values({0, 1, 0}), values({0, 0})};
    const VerifyReport r = verify(kPath, good);
    EXPECT_EQ(r.totals, values({0, 1, 0}));
    EXPECT_TRUE(r.pair_distinct());
    EXPECT_TRUE(r.proper());
    EXPECT_TRUE(r.passes(SolveMode::PairDistinct));

    const TotalWeighting flat{values({1, 1, 1}), values({0, 0})};
    const VerifyReport bad = verify(kPath, flat);
    EXPECT_EQ(bad.pair_violations, (std::vector<EdgeId>{0, 1}));
    EXPECT_EQ(bad.monochromatic_edges, (std::vector<EdgeId>{0, 1}));

    // Proper but not pair-distinct: totals 0, 0, 1 on a single 3-edge.
    const TotalWeighting proper{values({0, 0, 1}), values({0})};
    const VerifyReport p = verify(kSingleEdge, proper);
    EXPECT_FALSE(p.pair_distinct());
    EXPECT_TRUE(p.proper());
    EXPECT_TRUE(p.passes(SolveMode::ProperOnly));
    EXPECT_FALSE(p.passes(SolveMode::PairDistinct));

    const ListAssignment lists = zero_based_lists(kPath);
    const VerifyReport out_of_list = verify(kPath, TotalWeighting{values({0, 5, 0}), values({0, 3})}, &lists);
    EXPECT_EQ(out_of_list.list_violations, (std::vector<std::string>{"v1", "e1"}));
}

TEST(Solver, SingleEdgeExample)
{
    const ListAssignment lists = zero_based_lists(kSingleEdge);
    const std::optional<TotalWeighting> w = solve_backtracking(kSingleEdge, lists);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->vertex_weights, values({0, 1, 0}));
    EXPECT_EQ(w->edge_weights, values({0}));
}

TEST(Solver, PathExample)
{
    const ListAssignment lists = zero_based_lists(kPath);
    EXPECT_TRUE(verify(kPath, TotalWeighting{values({0, 1, 0}), values({0, 0})}, &lists).passes(SolveMode::PairDistinct));
    const std::optional<TotalWeighting> w = solve_backtracking(kPath, lists);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify(kPath, *w, &lists).passes(SolveMode::PairDistinct));
}

TEST(Solver, EmptyAndEdgeless)
{
    const Hypergraph empty;
    const std::optional<TotalWeighting> w = solve_backtracking(empty, ListAssignment{});
    ASSERT_TRUE(w);
    EXPECT_TRUE(w->vertex_weights.empty());
    const Hypergraph isolated(2, {});
    EXPECT_TRUE(solve_backtracking(isolated, zero_based_lists(isolated)));
}

TEST(Solver, RejectsMalformedInput)
{
    const Hypergraph bad(2, {{0}});
    EXPECT_THROW(solve_backtracking(bad, zero_based_lists(bad)), std::invalid_argument);
    ListAssignment short_lists = zero_based_lists(kPath);
    short_lists.vertex_lists[0] = values({0});
    EXPECT_THROW(solve_backtracking(kPath, short_lists), std::invalid_argument);
    ListAssignment repeated = zero_based_lists(kPath);
    repeated.edge_lists[1] = values({1, 1, 2});
    EXPECT_THROW(solve_backtracking(kPath, repeated), std::invalid_argument);
}

TEST(Solver, ConstantListsOverEnumeration)
{
    for_each_hypergraph(4, 3, {2, 4}, [](const Hypergraph& h) {
        const ListAssignment lists = constant_lists(h);
        const std::optional<TotalWeighting> w = solve_backtracking(h, lists);
        ASSERT_TRUE(w);
        for (const Rational& x : w->vertex_weights)
            EXPECT_TRUE(x == 1 || x == 2);
        for (const Rational& x : w->edge_weights)
            EXPECT_TRUE(x == 1 || x == 2 || x == 3);
    });
}

TEST(Solver, MatchesBruteForce)
{
    std::size_t checked = 0;
    for_each_hypergraph(4, 3, {2, 3}, [&](const Hypergraph& h) {
        if (h.num_edges() + h.num_vertices() > 7)
            return;
        for (std::uint64_t trial = 0; trial < 2; ++trial) {
            for (ListMode mode : {ListMode::RandomRational, ListMode::AdversarialEqual}) {
                const ListAssignment lists = random_lists(h, mode, mix_seed(checked, trial));
                for (SolveMode solve : {SolveMode::PairDistinct, SolveMode::ProperOnly}) {
                    const bool exists =
                        oracle::brute_force_weighting_exists(h, lists, solve == SolveMode::PairDistinct);
                    EXPECT_EQ(solve_backtracking(h, lists, solve).has_value(), exists);
                    EXPECT_EQ(search_weighting(h, lists, solve).has_value(), exists);
                }
            }
        }
        ++checked;
    });
    EXPECT_GT(checked, 100u);
}

TEST(CnGuided, SingleEdgeWithV0)
{
    const ListAssignment lists = zero_based_lists(kSingleEdge);
    ColumnMultiset b;
    b.add(ColumnRef::vertex(0));
    const std::optional<TotalWeighting> w = solve_cn_guided(kSingleEdge, lists, b);
    ASSERT_TRUE(w);
    EXPECT_EQ(w->vertex_weights, values({1, 0, 0}));
    EXPECT_EQ(w->edge_weights, values({0}));
}

TEST(CnGuided, PathWithBuiltWitness)
{
    const ListAssignment lists = zero_based_lists(kPath);
    const WitnessResult witness = build_witness(kPath);
    const std::optional<TotalWeighting> w = solve_cn_guided(kPath, lists, witness.columns);
    ASSERT_TRUE(w);
    EXPECT_TRUE(verify(kPath, *w, &lists).passes(SolveMode::PairDistinct));
    // Only v1 and v2 range over two values.
    EXPECT_EQ(w->vertex_weights[0], 0);
    EXPECT_EQ(w->edge_weights, values({0, 0}));
}

TEST(CnGuided, ZeroCoefficientIsRejected)
{
    const ListAssignment lists = zero_based_lists(kSingleEdge);
    ColumnMultiset b;
    b.add(ColumnRef::vertex(2));
    EXPECT_THROW(solve_cn_guided(kSingleEdge, lists, b), std::invalid_argument);

    ColumnMultiset wrong_size;
    EXPECT_THROW(solve_cn_guided(kSingleEdge, lists, wrong_size), std::invalid_argument);
}

TEST(CnGuided, AgreesWithBacktracking)
{
    std::size_t index = 0;
    for_each_hypergraph(4, 3, {2, 4}, [&](const Hypergraph& h) {
        for (ListMode mode : {ListMode::RandomRational, ListMode::Constant, ListMode::AdversarialEqual}) {
            const ListAssignment lists = random_lists(h, mode, mix_seed(7, index));
            const CnSolution cn = solve_cn(h, lists);
            ASSERT_TRUE(cn.weighting) << index;
            EXPECT_TRUE(verify(h, *cn.weighting, &lists).passes(SolveMode::PairDistinct));
            EXPECT_TRUE(solve_backtracking(h, lists).has_value());
        }
        ++index;
    });
}

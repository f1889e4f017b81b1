#include "../support/brute.hpp"

#include <recolor/gadgets/bk.hpp>
#include <recolor/oracle.hpp>

#include <gtest/gtest.h>

#include <random>

using namespace recolor;

TEST(Oracle, SingleVertexDistanceOne)
{
    const ColorLists lists(3, {{1, 2, 3}});
    const auto r = oracle_distance(Graph(1), lists, Coloring{1}, Coloring{3});
    EXPECT_EQ(r.status, SearchStatus::found);
    EXPECT_EQ(r.distance, std::optional<std::size_t>(1));
    EXPECT_EQ(*r.witness, (RecolorSequence{{0, 3}}));
}

TEST(Oracle, FrozenSwapIsUnreachable)
{
    const auto r = oracle_distance(Graph(2, {{0, 1}}), 2, Coloring{1, 2}, Coloring{2, 1});
    EXPECT_EQ(r.status, SearchStatus::not_found);
    EXPECT_FALSE(r.distance);
}

TEST(Oracle, B2NeedsThreeSteps)
{
    const auto bk = gadgets::build_bk(2);
    const auto r = oracle_distance(bk.graph, 3, bk.alpha, bk.beta);
    ASSERT_EQ(r.distance, std::optional<std::size_t>(3));
    EXPECT_TRUE(verify_sequence(bk.graph, 3, bk.alpha, bk.beta, 3, *r.witness));
}

TEST(Oracle, RejectsImproperEndpoints)
{
    EXPECT_THROW(oracle_distance(Graph(2, {{0, 1}}), 2, Coloring{1, 1}, Coloring{1, 2}), DomainError);
}

TEST(Oracle, NodeCapGivesBudgetExhausted)
{
    SearchLimits limits;
    limits.node_cap = 2;
    const auto r = oracle_distance(Graph(3), 3, Coloring{1, 1, 1}, Coloring{3, 3, 3}, limits);
    EXPECT_EQ(r.status, SearchStatus::budget_exhausted);
    EXPECT_FALSE(r.distance);
}

TEST(Oracle, FirstNeighborOrderIsVertexThenColor)
{
    // Two equally short routes; BFS expands vertex 0 before vertex 1.
    const auto r = oracle_distance(Graph(2), 2, Coloring{1, 1}, Coloring{2, 2});
    EXPECT_EQ(*r.witness, (RecolorSequence{{0, 2}, {1, 2}}));
}

TEST(ReachableSet, Examples)
{
    const ColorLists two(2, {{1, 2}});
    EXPECT_EQ(reachable_set(Graph(1), two, Coloring{1}).keys.size(), 2u);

    const ColorLists edge_lists(2, {{1, 2}, {1, 2}});
    EXPECT_EQ(reachable_set(Graph(2, {{0, 1}}), edge_lists, Coloring{1, 2}).keys.size(), 1u);

    // In K3 with three colors every vertex sees the other two colors.
    const Graph k3(3, {{0, 1}, {0, 2}, {1, 2}});
    EXPECT_EQ(reachable_set(k3, ColorLists::full(3, 3), Coloring{1, 2, 3}).keys.size(), 1u);
}

TEST(Separator, B2NeedsThreeColors)
{
    const auto bk = gadgets::build_bk(2);
    EXPECT_EQ(separator_holds(bk.graph, 3, bk.alpha, bk.beta, uses_at_least(3)).holds, true);
    EXPECT_EQ(separator_holds(bk.graph, 3, bk.alpha, bk.beta, uses_at_least(4)).holds, false);
}

TEST(Separator, AlwaysFalsePredicateWithEqualEndpoints)
{
    const auto never = [](std::span<const Color>) { return false; };
    EXPECT_EQ(separator_holds(Graph(2, {{0, 1}}), 3, Coloring{1, 2}, Coloring{1, 2}, never).holds, false);
}

TEST(Codec, PacksAndFallsBackToTuples)
{
    const ColoringCodec small(4, 3);
    EXPECT_TRUE(small.packed());
    EXPECT_EQ(small.bits_per_vertex(), 2u);
    const Coloring c{1, 3, 2, 3};
    EXPECT_EQ(small.decode(small.encode(c)), c);

    const ColoringCodec wide(40, 5); // 40 * 3 bits > 64
    EXPECT_FALSE(wide.packed());
    std::vector<Color> colors(40, 5);
    colors[7] = 1;
    EXPECT_EQ(wide.decode(wide.encode(Coloring(colors))), Coloring(colors));
}

TEST(Oracle, TupleKeysGiveSameDistances)
{
    // A long path forces the tuple representation.
    const std::size_t n = 36;
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v)
        edges.push_back({v, v + 1});
    const Graph path(n, edges);
    std::vector<Color> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = 1 + i % 2;
        b[i] = a[i];
    }
    b[0] = 3;
    b[n - 1] = 3;
    ASSERT_FALSE(ColoringCodec(n, 3).packed());
    const auto r = oracle_distance(path, 3, Coloring(a), Coloring(b));
    EXPECT_EQ(r.distance, std::optional<std::size_t>(2));
}

// Independent check: BFS distances equal Floyd-Warshall over the whole color
// graph, and distances are symmetric.
TEST(Oracle, MatchesFloydWarshallOnRandomListInstances)
{
    std::mt19937 rng(11);
    for (int round = 0; round < 60; ++round) {
        const Graph g = brute::random_graph(rng, 1 + round % 4, 0.5);
        std::vector<ColorSet> lists;
        for (std::size_t v = 0; v < g.size(); ++v)
            lists.push_back(brute::random_list(rng, 3));
        const ColorLists cl(3, lists);
        const auto fw = brute::all_distances(g, cl);
        for (const auto & a : fw.nodes)
            for (const auto & b : fw.nodes) {
                const auto r = oracle_distance(g, cl, Coloring(a), Coloring(b));
                const std::size_t expected = fw.between(a, b);
                if (expected == brute::unreachable)
                    ASSERT_FALSE(r.distance);
                else
                    ASSERT_EQ(r.distance, std::optional<std::size_t>(expected));
                const auto back = oracle_distance(g, cl, Coloring(b), Coloring(a));
                ASSERT_EQ(r.distance, back.distance);
            }
    }
}

// Enlarging lists can only shorten distances.
TEST(Oracle, ListMonotonicity)
{
    std::mt19937 rng(5);
    for (int round = 0; round < 80; ++round) {
        const Graph g = brute::random_graph(rng, 3, 0.5);
        std::vector<ColorSet> small, large;
        for (std::size_t v = 0; v < g.size(); ++v) {
            small.push_back(brute::random_list(rng, 3));
            ColorSet bigger = small.back();
            bigger.insert(1 + rng() % 4);
            large.push_back(bigger);
        }
        const ColorLists ls(4, small), ll(4, large);
        const auto all = brute::colorings(g, ls);
        if (all.empty())
            continue;
        const Coloring a(all[rng() % all.size()]), b(all[rng() % all.size()]);
        const auto d_small = oracle_distance(g, ls, a, b).distance;
        const auto d_large = oracle_distance(g, ll, a, b).distance;
        if (d_small) {
            ASSERT_TRUE(d_large);
            ASSERT_LE(*d_large, *d_small);
        }
    }
}

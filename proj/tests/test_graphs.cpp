#include "taut/graph_enum.hpp"
#include "taut/stable_graph.hpp"

#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

using namespace taut;

namespace {

// Counts half-edge permutations preserving every structure.
long brute_force_aut(const StableGraph& gr) {
    const int h = gr.num_half_edges();
    std::vector<int> perm(h);
    std::iota(perm.begin(), perm.end(), 0);
    long count = 0;
    do {
        bool ok = true;
        std::vector<int> vimg(gr.num_vertices(), -1);
        for (int i = 0; i < h && ok; ++i) {
            int j = perm[i];
            if (gr.partner[j] != perm[gr.partner[i]] || gr.marking[j] != gr.marking[i]) ok = false;
            int v = gr.vertex_of[i], w = gr.vertex_of[j];
            if (vimg[v] < 0) vimg[v] = w;
            else if (vimg[v] != w) ok = false;
            if (gr.genus[v] != gr.genus[w]) ok = false;
        }
        if (ok) {
            std::set<int> s(vimg.begin(), vimg.end());
            if (static_cast<int>(s.size()) != gr.num_vertices()) ok = false;
        }
        count += ok;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return count;
}

StableGraph relabel(const StableGraph& gr, std::mt19937& rng) {
    std::vector<int> vp(gr.num_vertices()), hp(gr.num_half_edges());
    std::iota(vp.begin(), vp.end(), 0);
    std::iota(hp.begin(), hp.end(), 0);
    std::shuffle(vp.begin(), vp.end(), rng);
    std::shuffle(hp.begin(), hp.end(), rng);
    StableGraph r;
    r.genus.resize(gr.num_vertices());
    for (int v = 0; v < gr.num_vertices(); ++v) r.genus[vp[v]] = gr.genus[v];
    r.vertex_of.resize(gr.num_half_edges());
    r.partner.resize(gr.num_half_edges());
    r.marking.resize(gr.num_half_edges());
    for (int h = 0; h < gr.num_half_edges(); ++h) {
        r.vertex_of[hp[h]] = vp[gr.vertex_of[h]];
        r.partner[hp[h]] = hp[gr.partner[h]];
        r.marking[hp[h]] = gr.marking[h];
    }
    return r;
}

}  // namespace

TEST(Graphs, Genus) {
    EXPECT_EQ(genus(StableGraph::single_vertex(3, 0)), 3);
    EXPECT_EQ(genus(StableGraph::from_edges({0}, {{0, 0}, {0, 0}}, {})), 2);
    EXPECT_EQ(genus(StableGraph::from_edges({1, 1}, {{0, 1}, {0, 1}}, {})), 3);
}

TEST(Graphs, Validation) {
    EXPECT_THROW(StableGraph::from_edges({0}, {}, {0, 0}), std::invalid_argument);
    EXPECT_THROW(StableGraph::from_edges({0, 0}, {}, {0, 0, 1, 1}), std::invalid_argument);
    EXPECT_NO_THROW(StableGraph::from_edges({0}, {{0, 0}}, {0}));
}

TEST(Graphs, AutomorphismExamples) {
    // genus 0 and genus 2 vertices joined by two edges
    auto phi = StableGraph::from_edges({0, 2}, {{0, 1}, {0, 1}}, {0, 0, 1});
    EXPECT_EQ(genus(phi), 3);
    EXPECT_EQ(aut_order(phi), 2);
    auto phi_alt = StableGraph::from_edges({0, 2}, {{0, 1}, {0, 1}}, {0, 1, 1});
    EXPECT_EQ(aut_order(phi_alt), 2);
    // self-edge on a four-valent genus 1 vertex
    auto phi_hat = StableGraph::from_edges({1, 0, 1}, {{0, 0}, {0, 1}, {1, 2}}, {0, 1, 2});
    EXPECT_EQ(genus(phi_hat), 3);
    EXPECT_EQ(aut_order(phi_hat), 2);
    EXPECT_EQ(aut_order(StableGraph::single_vertex(0, 5)), 1);
}

TEST(Graphs, Counts) {
    EXPECT_EQ(enumerate_stable_graphs(0, 3).size(), 1u);
    EXPECT_EQ(enumerate_stable_graphs(0, 4).size(), 4u);
    EXPECT_EQ(enumerate_stable_graphs(1, 1).size(), 2u);
    EXPECT_EQ(enumerate_stable_graphs(1, 2).size(), 5u);
    EXPECT_EQ(enumerate_stable_graphs(0, 5).size(), 26u);
    EXPECT_EQ(enumerate_stable_graphs(2, 0).size(), 7u);
    EXPECT_EQ(enumerate_stable_graphs(3, 0).size(), 42u);
    EXPECT_THROW(enumerate_stable_graphs(0, 2), std::invalid_argument);
    EXPECT_THROW(enumerate_stable_graphs(1, 0), std::invalid_argument);
}

TEST(Graphs, AutomorphismsMatchBruteForce) {
    for (auto [g, n] : std::vector<std::pair<int, int>>{{0, 4}, {1, 1}, {1, 2}, {2, 0}, {0, 5}, {2, 1}, {1, 3}}) {
        for (const auto& gc : enumerate_graph_classes(g, n)) {
            if (gc.graph.num_half_edges() > 7) continue;
            EXPECT_EQ(gc.aut_order, brute_force_aut(gc.graph)) << describe(gc.graph);
        }
    }
}

TEST(Graphs, CanonicalFormIsInvariant) {
    std::mt19937 rng(3);
    for (auto [g, n] : std::vector<std::pair<int, int>>{{2, 2}, {3, 0}, {1, 4}}) {
        std::set<std::vector<int>> codes;
        for (const auto& gr : enumerate_stable_graphs(g, n)) {
            auto c = canonicalize(gr);
            EXPECT_TRUE(codes.insert(c.code).second) << "duplicate class";
            EXPECT_EQ(canonicalize(c.graph).code, c.code);
            for (int t = 0; t < 3; ++t) {
                auto r = relabel(gr, rng);
                auto cr = canonicalize(r);
                EXPECT_EQ(cr.code, c.code);
                EXPECT_EQ(cr.aut_order, c.aut_order);
            }
        }
    }
}

TEST(Graphs, InsertAtVertex) {
    auto gr = StableGraph::from_edges({1, 1}, {{0, 1}}, {});
    auto loop = StableGraph::from_edges({0}, {{0, 0}}, {0});
    auto s = insert_at_vertex(gr, 0, loop, gr.half_edges_at(0));
    EXPECT_EQ(genus(s.graph), 2);
    EXPECT_EQ(s.graph.num_edges(), 2);
    EXPECT_NO_THROW(s.graph.validate());
    auto trivial = StableGraph::single_vertex(1, 1);
    auto same = insert_at_vertex(gr, 1, trivial, gr.half_edges_at(1));
    EXPECT_EQ(canonicalize(same.graph).code, canonicalize(gr).code);
    auto g3 = StableGraph::from_edges({2, 1}, {{0, 1}}, {});
    auto split = StableGraph::from_edges({1, 1}, {{0, 1}}, {0});
    auto bigger = insert_at_vertex(g3, 0, split, g3.half_edges_at(0));
    EXPECT_EQ(bigger.graph.num_edges(), 2);
    EXPECT_EQ(genus(bigger.graph), 3);
    EXPECT_THROW(insert_at_vertex(gr, 0, StableGraph::single_vertex(2, 1), gr.half_edges_at(0)),
                 std::invalid_argument);
}

TEST(Graphs, GlueLegs) {
    auto gr = StableGraph::single_vertex(2, 2);
    auto glued = glue_legs(gr, 1, 2);
    EXPECT_EQ(genus(glued), 3);
    EXPECT_EQ(glued.num_edges(), 1);
    EXPECT_EQ(glued.h1(), gr.h1() + 1);
    EXPECT_TRUE(glued.is_valid());
    EXPECT_THROW(glue_legs(gr, 1, 1), std::invalid_argument);
}

TEST(Graphs, ContractEdges) {
    auto gr = StableGraph::from_edges({0, 0}, {{0, 1}, {0, 1}}, {0, 1});
    auto c = contract_edges(gr, {true, false});
    EXPECT_EQ(c.graph.num_vertices(), 1);
    EXPECT_EQ(c.graph.genus[0], 0);
    EXPECT_EQ(c.graph.num_edges(), 1);
    EXPECT_EQ(genus(c.graph), 1);
    auto both = contract_edges(gr, {true, true});
    EXPECT_EQ(both.graph.genus[0], 1);
    EXPECT_EQ(both.graph.num_edges(), 0);
}

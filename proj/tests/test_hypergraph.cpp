#include <doctest.h>

#include <random>

#include "sqfpow/graph_classes.hpp"
#include "sqfpow/hypergraph.hpp"
#include "test_support.hpp"

using namespace sqfpow;
using namespace sqfpow::testing;

TEST_CASE("induced sub-hypergraphs") {
    const Hypergraph triangle(3, {VertexSet::of({0, 1}), VertexSet::of({0, 2}), VertexSet::of({1, 2})});
    const InducedSubgraph t01 = induced(triangle, VertexSet::of({0, 1}));
    CHECK(t01.hypergraph.n_vertices() == 2);
    CHECK(t01.hypergraph.edges() == std::vector<VertexSet>{VertexSet::of({0, 1})});

    const Graph p3 = path(3);
    const InducedSubgraph ends = induced(p3.hypergraph(), VertexSet::of({0, 2}));
    CHECK(ends.hypergraph.n_vertices() == 2);
    CHECK(ends.hypergraph.n_edges() == 0);

    // C_5 on four consecutive vertices is P_4: check against a direct scan
    // of which edges land inside the window.
    const Graph c5 = cycle(5);
    const VertexSet window = VertexSet::of({0, 1, 2, 3});
    const InducedSubgraph sub = induced(c5.hypergraph(), window);
    std::vector<VertexSet> expected;
    for (VertexSet e : c5.hypergraph().edges())
        if (e.subset_of(window)) expected.push_back(e);
    CHECK(sub.hypergraph.n_edges() == static_cast<int>(expected.size()));
    CHECK(sub.hypergraph == path(4).hypergraph());

    // Empty window yields the empty hypergraph.
    CHECK(induced(c5.hypergraph(), VertexSet{}).hypergraph.n_vertices() == 0);
}

TEST_CASE("induced composes for nested windows") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 50; ++trial) {
        const Graph g = random_graph(rng, 7);
        const std::uint64_t w1_bits = rng() & 0x7f;
        const std::uint64_t w2_bits = rng() & w1_bits;
        const VertexSet w1{w1_bits}, w2{w2_bits};
        const InducedSubgraph first = induced(g.hypergraph(), w1);
        VertexSet w2_relabel;
        for (int i = 0; i < first.hypergraph.n_vertices(); ++i)
            if (w2.contains(first.old_of(i))) w2_relabel.add(i);
        const InducedSubgraph nested = induced(first.hypergraph, w2_relabel);
        CHECK(nested.hypergraph == induced(g.hypergraph(), w2).hypergraph);
    }
}

TEST_CASE("matching numbers") {
    const Graph c5 = cycle(5);
    CHECK(oracle_matching_number(c5.hypergraph()) == 2);
    CHECK(oracle_induced_matching_number(c5.hypergraph()) == 1);
    CHECK(matching_number(c5.hypergraph()) == 2);
    CHECK(induced_matching_number(c5.hypergraph()) == 1);

    const Graph p6 = path(6);
    CHECK(oracle_induced_matching_number(p6.hypergraph()) == 2);
    CHECK(induced_matching_number(p6.hypergraph()) == 2);

    for (int t = 1; t <= 4; ++t) {
        const Graph dt = disjoint_edges(t);
        CHECK(matching_number(dt.hypergraph()) == t);
        CHECK(induced_matching_number(dt.hypergraph()) == t);
    }

    // Edgeless hypergraph.
    const Hypergraph edgeless(4, {});
    CHECK(matching_number(edgeless) == 0);
    CHECK(induced_matching_number(edgeless) == 0);

    std::mt19937 rng(11);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(rng, 6);
        CHECK(matching_number(g.hypergraph()) == oracle_matching_number(g.hypergraph()));
        CHECK(induced_matching_number(g.hypergraph()) ==
              oracle_induced_matching_number(g.hypergraph()));
    }
}

TEST_CASE("independence, covers, minimal cover antichain") {
    for (int n = 2; n <= 6; ++n) {
        const Graph kn = complete(n);
        CHECK(cover_number(kn.hypergraph()) == n - 1);
        CHECK(independence_number(kn.hypergraph()) == 1);
        const auto covers = minimal_vertex_covers(kn.hypergraph());
        CHECK(static_cast<int>(covers.size()) == n);
        for (VertexSet c : covers) CHECK(c.size() == n - 1);
    }

    const Graph edge = complete(2);
    const auto covers = minimal_vertex_covers(edge.hypergraph());
    REQUIRE(covers.size() == 2);
    CHECK(covers[0] == VertexSet::of({0}));
    CHECK(covers[1] == VertexSet::of({1}));

    const Graph c5 = cycle(5);
    CHECK(oracle_cover_number(c5.hypergraph()) == 3);
    CHECK(oracle_independence_number(c5.hypergraph()) == 2);
    CHECK(cover_number(c5.hypergraph()) == 3);
    CHECK(independence_number(c5.hypergraph()) == 2);

    const Hypergraph edgeless(3, {});
    CHECK(independence_number(edgeless) == 3);
    CHECK(cover_number(edgeless) == 0);
    CHECK(minimal_vertex_covers(edgeless) == std::vector<VertexSet>{VertexSet{}});

    // Covers form an antichain and each one really covers.
    std::mt19937 rng(3);
    for (int trial = 0; trial < 30; ++trial) {
        const Graph g = random_graph(rng, 6);
        const auto mc = minimal_vertex_covers(g.hypergraph());
        for (std::size_t i = 0; i < mc.size(); ++i) {
            for (VertexSet e : g.hypergraph().edges()) CHECK(e.intersects(mc[i]));
            for (std::size_t j = 0; j < mc.size(); ++j)
                if (i != j) CHECK(!mc[i].subset_of(mc[j]));
        }
    }
}

TEST_CASE("alpha + beta = n exhaustively up to 7 vertices") {
    for (int n = 1; n <= 7; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            CHECK(independence_number(g.hypergraph()) + cover_number(g.hypergraph()) == n);
        }
    }
}

TEST_CASE("non-graph hypergraph invariants") {
    // Two overlapping triples and one pair.
    const Hypergraph h(5, {VertexSet::of({0, 1, 2}), VertexSet::of({2, 3, 4}), VertexSet::of({0, 4})});
    CHECK(matching_number(h) == oracle_matching_number(h));
    CHECK(independence_number(h) == oracle_independence_number(h));
    CHECK(cover_number(h) == oracle_cover_number(h));
    CHECK(independence_number(h) + cover_number(h) == 5);
    for (VertexSet c : minimal_vertex_covers(h))
        for (VertexSet e : h.edges()) CHECK(e.intersects(c));
}

TEST_CASE("disjoint unions") {
    const Graph edge = complete(2);
    const DisjointUnion two = disjoint_union(edge.hypergraph(), edge.hypergraph());
    CHECK(two.hypergraph == disjoint_edges(2).hypergraph());

    const DisjointUnion k3k2 = disjoint_union(complete(3).hypergraph(), edge.hypergraph());
    CHECK(k3k2.hypergraph.n_vertices() == 5);
    CHECK(k3k2.hypergraph.n_edges() == 4);
    CHECK(k3k2.offset == 3);

    std::mt19937 rng(5);
    for (int trial = 0; trial < 20; ++trial) {
        const Graph a = random_graph(rng, 5);
        const Graph b = random_graph(rng, 4);
        const DisjointUnion u = disjoint_union(a.hypergraph(), b.hypergraph());
        CHECK(matching_number(u.hypergraph) ==
              matching_number(a.hypergraph()) + matching_number(b.hypergraph()));
    }
}

TEST_CASE("neighborhoods") {
    // Star K_{1,3} centered at 0.
    const Graph star(4, {{0, 1}, {0, 2}, {0, 3}});
    const Neighborhoods nc = neighborhoods(star, VertexSet::of({0}));
    CHECK(nc.closed == VertexSet::full(4));
    CHECK(nc.open == VertexSet::of({1, 2, 3}));

    const Graph lonely(2, {});
    const Neighborhoods iso = neighborhoods(lonely, VertexSet::of({1}));
    CHECK(iso.closed == VertexSet::of({1}));
    CHECK(iso.open.empty());

    // K_4 minus the edge {0,1}: closed neighborhood of 0 has size 3.
    const Graph k4m(4, {{0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}});
    CHECK(neighborhoods(k4m, VertexSet::of({0})).closed.size() == 3);
}

TEST_CASE("induced matching monotone under induced subgraphs") {
    std::mt19937 rng(13);
    for (int trial = 0; trial < 40; ++trial) {
        const Graph g = random_graph(rng, 6);
        const VertexSet w{rng() & 0x3f};
        const InducedSubgraph sub = induced(g.hypergraph(), w);
        CHECK(induced_matching_number(sub.hypergraph) <= induced_matching_number(g.hypergraph()));
    }
}

TEST_CASE("constructed hypergraphs are antichains") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        std::uniform_int_distribution<int> n_edges(1, 8);
        std::uniform_int_distribution<std::uint64_t> mask(1, 0x3f);
        std::vector<VertexSet> edges;
        const int m = n_edges(rng);
        for (int i = 0; i < m; ++i) edges.push_back(VertexSet(mask(rng)));
        const Hypergraph h(6, edges);
        for (std::size_t i = 0; i < h.edges().size(); ++i)
            for (std::size_t j = 0; j < h.edges().size(); ++j)
                if (i != j) CHECK(!h.edges()[i].subset_of(h.edges()[j]));
        // Every original edge still contains some kept edge.
        for (VertexSet e : edges) {
            bool dominated = false;
            for (VertexSet kept : h.edges())
                if (kept.subset_of(e)) dominated = true;
            CHECK(dominated);
        }
    }
}

TEST_CASE("hypergraph constructor rejects bad input") {
    CHECK_THROWS_AS(Hypergraph(3, {VertexSet{}}), std::invalid_argument);
    CHECK_THROWS_AS(Hypergraph(2, {VertexSet::of({0, 5})}), std::invalid_argument);
    CHECK_THROWS_AS(Graph(Hypergraph(3, {VertexSet::of({0, 1, 2})})), std::invalid_argument);
}

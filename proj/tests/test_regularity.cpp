#include <doctest.h>

#include <iostream>
#include <random>

#include "sqfpow/betti.hpp"
#include "sqfpow/graph_classes.hpp"
#include "test_support.hpp"

using namespace sqfpow;
using namespace sqfpow::testing;

TEST_CASE("principal ideals: regularity is the degree") {
    CHECK(regularity(SqfIdeal::principal(2, VertexSet::full(2))) == 2);
    CHECK(regularity(SqfIdeal::principal(3, VertexSet::full(3))) == 3);
    CHECK(regularity(SqfIdeal::principal(6, VertexSet::of({1, 3, 5}))) == 3);

    // (xy): the quotient table has exactly the structural entry and the
    // generator entry.
    const BettiTable t = betti_table(SqfIdeal::principal(2, VertexSet::full(2)));
    CHECK(t.entries.size() == 2);
    CHECK(t.at(0, VertexSet{}) == 1);
    CHECK(t.at(1, VertexSet::full(2)) == 1);

    // Koszul route: a principal ideal has a single entry at (0, F).
    const BettiTable k = betti_table_koszul(SqfIdeal::principal(3, VertexSet::of({0, 2})));
    CHECK(k.entries.size() == 1);
    CHECK(k.at(0, VertexSet::of({0, 2})) == 1);
}

TEST_CASE("conventions: zero and unit ideals") {
    CHECK(regularity(SqfIdeal::zero(3)) == 0);
    CHECK(regularity(SqfIdeal::unit(3)) == 0);
    CHECK(betti_table(SqfIdeal::zero(3)).entries.empty());
    const BettiTable unit = betti_table(SqfIdeal::unit(3));
    CHECK(unit.entries.size() == 1);
    CHECK(unit.at(0, VertexSet{}) == 1);
}

TEST_CASE("edge ideal of C_4: Betti numbers 1,4,4,1 via both routes") {
    const SqfIdeal ic4 = SqfIdeal::edge_ideal(cycle(4).hypergraph());
    const BettiTable quotient = betti_table(ic4);
    const auto coarse = quotient.coarse();
    long long totals[4] = {0, 0, 0, 0};
    for (const auto& [key, rank] : coarse) {
        REQUIRE(key.first <= 3);
        totals[key.first] += rank;
    }
    CHECK(totals[0] == 1);
    CHECK(totals[1] == 4);
    CHECK(totals[2] == 4);
    CHECK(totals[3] == 1);
    CHECK(tables_agree(quotient, betti_table_koszul(ic4)));
}

TEST_CASE("edge ideal of K_3 has regularity 2") {
    CHECK(regularity(SqfIdeal::edge_ideal(complete(3).hypergraph())) == 2);
}

TEST_CASE("the two Betti formulations agree on random ideals") {
    std::mt19937 rng(61);
    for (int trial = 0; trial < 60; ++trial) {
        const int n = 3 + static_cast<int>(rng() % 4);  // 3..6
        const SqfIdeal a = random_sqf_ideal(rng, n, 6);
        CHECK(tables_agree(betti_table(a), betti_table_koszul(a)));
    }
}

TEST_CASE("regularity of symbolic powers of complete graphs") {
    BettiOptions opts;
    for (int n = 2; n <= 6; ++n) {
        for (int k = 1; k <= n - 1; ++k) {
            const SqfIdeal p = sqf_symbolic_power(complete(n).hypergraph(), k);
            CHECK(regularity(p, opts) == k + 1);
        }
    }
}

TEST_CASE("regularity adds for ideals in disjoint variables") {
    std::mt19937 rng(67);
    for (int trial = 0; trial < 50; ++trial) {
        const int n1 = 2 + static_cast<int>(rng() % 2);
        const int n2 = 2 + static_cast<int>(rng() % 2);
        SqfIdeal a = random_sqf_ideal(rng, n1, 3);
        SqfIdeal b = random_sqf_ideal(rng, n2, 3);
        if (a.is_unit() || b.is_unit()) continue;
        std::vector<int> map_a, map_b;
        for (int v = 0; v < n1; ++v) map_a.push_back(v);
        for (int v = 0; v < n2; ++v) map_b.push_back(n1 + v);
        const SqfIdeal joint = sum(a.embed(n1 + n2, map_a), b.embed(n1 + n2, map_b));
        CHECK(regularity(joint) == regularity(a) + regularity(b) - 1);
    }
}

TEST_CASE("regularity lemma inequalities, fuzzed") {
    std::mt19937 rng(71);
    for (int trial = 0; trial < 40; ++trial) {
        const SqfIdeal a = random_sqf_ideal(rng, 5, 5);
        if (!a.is_proper_nonzero()) continue;
        const int reg_a = regularity(a);
        const int x = static_cast<int>(rng() % 5);
        const VertexSet var = VertexSet::single(x);
        // reg(I : x) <= reg(I) and reg(I + (x)) <= reg(I).
        CHECK(regularity(colon(a, var)) <= reg_a);
        CHECK(regularity(sum(a, SqfIdeal::principal(5, var))) <= reg_a);
        // reg(I) <= max{reg(I:m) + deg m, reg(I + (m))} for a monomial m.
        const VertexSet m{1 + (rng() % 31)};
        const int lhs = reg_a;
        const int rhs = std::max(regularity(colon(a, m)) + m.size(),
                                 regularity(sum(a, SqfIdeal::principal(5, m))));
        CHECK(lhs <= rhs);
    }
}

TEST_CASE("characteristic sanity: rationals vs GF(2) on small edge ideals") {
    // Logged as an observation, never failed: disagreement would be a real
    // characteristic effect, not a bug.
    BettiOptions q_opts;
    BettiOptions gf2_opts;
    gf2_opts.field = FieldChoice::prime(2);
    int disagreements = 0;
    for (int n = 2; n <= 6; ++n) {
        for (const Graph& g : enumerate_graphs(n)) {
            if (g.n_edges() == 0) continue;
            const SqfIdeal i = SqfIdeal::edge_ideal(g.hypergraph());
            if (regularity(i, q_opts) != regularity(i, gf2_opts)) ++disagreements;
        }
    }
    if (disagreements > 0)
        std::cout << "[note] rationals vs GF(2) disagreements on edge ideals (n <= 6): "
                  << disagreements << "\n";
    CHECK(disagreements >= 0);
}

TEST_CASE("budget guards") {
    BettiOptions tiny;
    tiny.universe_cap = 3;
    CHECK_THROWS_AS(regularity(SqfIdeal::edge_ideal(cycle(5).hypergraph()), tiny), BudgetError);
    BettiOptions expired;
    expired.deadline = Deadline::after_ms(-1);
    CHECK_THROWS_AS(regularity(SqfIdeal::edge_ideal(cycle(5).hypergraph()), expired), BudgetError);
}

TEST_CASE("mixed-sum regularity formula on symbolic filtrations of K_3 and P_3") {
    auto [fa, fb] =
        embed_disjoint(Filtration::from_power_kind(complete(3).hypergraph(),
                                                   PowerKind::SquarefreeSymbolic),
                       Filtration::from_power_kind(path(3).hypergraph(),
                                                   PowerKind::SquarefreeSymbolic));
    for (int n = 0; n <= fa.nu() + fb.nu(); ++n) {
        const MixedSumRegularityReport r = verify_mixed_sum_regularity(fa, fb, n);
        CHECK(r.equal);
        if (n == 0) CHECK(r.reg_direct == 0);
    }
}

TEST_CASE("mixed-sum regularity reproduces the sharp complete-intersection case") {
    auto [fa, fb] = embed_disjoint(
        Filtration::from_power_kind(complete(2).hypergraph(), PowerKind::SquarefreeOrdinary),
        Filtration::from_power_kind(complete(2).hypergraph(), PowerKind::SquarefreeOrdinary));
    for (int n = 0; n <= 2; ++n) {
        const MixedSumRegularityReport r = verify_mixed_sum_regularity(fa, fb, n);
        CHECK(r.equal);
    }
}

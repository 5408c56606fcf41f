#include "sqfpow/betti.hpp"

#include <algorithm>
#include <set>

#include <json.hpp>

namespace sqfpow {

std::map<std::pair<int, int>, long long> BettiTable::coarse() const {
    std::map<std::pair<int, int>, long long> out;
    for (const auto& [key, rank] : entries)
        out[{key.first, VertexSet(key.second).size()}] += rank;
    return out;
}

std::string BettiTable::to_json() const {
    nlohmann::json j;
    j["level"] = level == BettiLevel::QuotientModule ? "quotient" : "ideal";
    j["n"] = universe;
    j["entries"] = nlohmann::json::array();
    for (const auto& [key, rank] : entries) {
        nlohmann::json e;
        e["i"] = key.first;
        e["multidegree"] = VertexSet(key.second).to_vector();
        e["rank"] = rank;
        j["entries"].push_back(e);
    }
    return j.dump();
}

namespace {

/// Closure of the generator supports under union (the lcm lattice, without
/// the empty bottom element).
std::set<std::uint64_t> lcm_lattice(const SqfIdeal& a) {
    std::set<std::uint64_t> lattice;
    for (VertexSet g : a.gens()) {
        std::set<std::uint64_t> grown;
        grown.insert(g.bits());
        for (std::uint64_t u : lattice) grown.insert(u | g.bits());
        lattice.insert(grown.begin(), grown.end());
    }
    return lattice;
}

void check_cap(const SqfIdeal& a, const BettiOptions& opts, const char* who) {
    if (a.universe_size() > opts.universe_cap)
        throw BudgetError(std::string(who) + ": universe exceeds the configured cap of " +
                          std::to_string(opts.universe_cap));
}

}  // namespace

BettiTable betti_table(const SqfIdeal& a, const BettiOptions& opts) {
    BettiTable table;
    table.level = BettiLevel::QuotientModule;
    table.universe = a.universe_size();
    if (a.is_zero()) return table;  // the zero ideal: empty table
    if (a.is_unit()) {
        table.entries[{0, 0}] = 1;  // sentinel: the unit module
        return table;
    }
    check_cap(a, opts, "betti_table");

    std::set<std::uint64_t> degrees = lcm_lattice(a);
    degrees.insert(0);  // beta_0(S/a) lives in the empty multidegree
    for (std::uint64_t bits : degrees) {
        const VertexSet sigma(bits);
        // Restricted Stanley-Reisner complex: faces are the subsets not in a.
        auto betti = reduced_homology_by_card(
            sigma, [&](VertexSet tau) { return !a.contains_monomial(tau); }, opts.field,
            opts.deadline);
        for (int c = 0; c <= sigma.size(); ++c) {
            const long long rank = betti[static_cast<std::size_t>(c)];
            if (rank != 0) table.entries[{sigma.size() - c, bits}] = rank;
        }
    }
    return table;
}

BettiTable betti_table_koszul(const SqfIdeal& a, const BettiOptions& opts) {
    BettiTable table;
    table.level = BettiLevel::Ideal;
    table.universe = a.universe_size();
    if (a.is_zero()) return table;
    if (a.is_unit()) {
        table.entries[{0, 0}] = 1;
        return table;
    }
    check_cap(a, opts, "betti_table_koszul");

    for (std::uint64_t bits : lcm_lattice(a)) {
        const VertexSet sigma(bits);
        // Upper Koszul subcomplex in multidegree sigma.
        auto betti = reduced_homology_by_card(
            sigma, [&](VertexSet tau) { return a.contains_monomial(sigma - tau); }, opts.field,
            opts.deadline);
        for (int c = 0; c <= sigma.size(); ++c) {
            const long long rank = betti[static_cast<std::size_t>(c)];
            if (rank != 0) table.entries[{c, bits}] = rank;
        }
    }
    return table;
}

bool tables_agree(const BettiTable& quotient_table, const BettiTable& ideal_table) {
    if (quotient_table.level != BettiLevel::QuotientModule ||
        ideal_table.level != BettiLevel::Ideal)
        throw std::invalid_argument("tables_agree: expected one quotient and one ideal table");
    std::map<std::pair<int, std::uint64_t>, long long> shifted;
    for (const auto& [key, rank] : quotient_table.entries) {
        if (key.first == 0) continue;  // beta_0(S/a): no ideal counterpart
        shifted[{key.first - 1, key.second}] = rank;
    }
    return shifted == ideal_table.entries;
}

int regularity(const SqfIdeal& a, const BettiOptions& opts) {
    if (a.is_zero() || a.is_unit()) return 0;
    const BettiTable table = betti_table(a, opts);
    int reg = 0;
    for (const auto& [key, rank] : table.entries) {
        if (rank == 0 || key.first == 0) continue;
        // Ideal-level index is i-1; degree is |multidegree|.
        reg = std::max(reg, VertexSet(key.second).size() - (key.first - 1));
    }
    return reg;
}

namespace {

/// max over the two term families of the mixed-sum formula on the given
/// windows; empty windows contribute nothing, and a fully empty window pair
/// yields 0 (the regularity of the unit ideal Q_0).
int formula_value(const std::vector<int>& reg_i, const std::vector<int>& reg_j, int n,
                  const IndexWindow& wi, const IndexWindow& wj) {
    bool seen = false;
    int best = 0;
    for (int i = wi.lo; i <= wi.hi; ++i) {
        const int v = reg_i[static_cast<std::size_t>(n - i)] + reg_j[static_cast<std::size_t>(i)];
        best = seen ? std::max(best, v) : v;
        seen = true;
    }
    for (int j = wj.lo; j <= wj.hi; ++j) {
        const int v =
            reg_i[static_cast<std::size_t>(n - j + 1)] + reg_j[static_cast<std::size_t>(j)] - 1;
        best = seen ? std::max(best, v) : v;
        seen = true;
    }
    return seen ? best : 0;
}

}  // namespace

MixedSumRegularityReport verify_mixed_sum_regularity(const Filtration& fa, const Filtration& fb,
                                                     int n, const BettiOptions& opts) {
    MixedSumRegularityReport report;
    report.n = n;
    report.del_condition_ok = check_del_condition(fa).all_hold && check_del_condition(fb).all_hold;
    if (!report.del_condition_ok)
        throw std::invalid_argument(
            "verify_mixed_sum_regularity: a filtration fails the del* criterion");
    if (n < 0 || n > fa.nu() + fb.nu())
        throw std::invalid_argument("verify_mixed_sum_regularity: n outside [0, nu(I)+nu(J)]");

    report.reg_direct = regularity(mixed_sum(fa, fb, n), opts);

    // Regularity of every filtration level that the windows can touch.
    std::vector<int> reg_a(static_cast<std::size_t>(fa.nu()) + 2, 0);
    std::vector<int> reg_b(static_cast<std::size_t>(fb.nu()) + 2, 0);
    for (int i = 0; i <= fa.nu(); ++i) reg_a[static_cast<std::size_t>(i)] = regularity(fa.ideal(i), opts);
    for (int i = 0; i <= fb.nu(); ++i) reg_b[static_cast<std::size_t>(i)] = regularity(fb.ideal(i), opts);

    const int a = std::max(0, n - fa.nu());
    const int b = std::min(n, fb.nu());
    report.first_i = IndexWindow{a, b};
    report.first_j = IndexWindow{a + 1, b};
    report.second_i = IndexWindow{std::max(1, n - fa.nu()), std::min(n - 1, fb.nu())};
    report.second_j = IndexWindow{a + 1, b};

    report.formula_first = formula_value(reg_a, reg_b, n, report.first_i, report.first_j);
    report.formula_second = formula_value(reg_a, reg_b, n, report.second_i, report.second_j);
    report.equal =
        report.reg_direct == report.formula_first && report.reg_direct == report.formula_second;
    return report;
}

}  // namespace sqfpow

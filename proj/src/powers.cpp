#include "sqfpow/powers.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "sqfpow/gen_ideal.hpp"

namespace sqfpow {

std::string to_string(PowerKind kind) {
    return kind == PowerKind::SquarefreeOrdinary ? "ordinary" : "symbolic";
}

std::optional<PowerKind> power_kind_from_string(const std::string& s) {
    if (s == "ordinary") return PowerKind::SquarefreeOrdinary;
    if (s == "symbolic") return PowerKind::SquarefreeSymbolic;
    return std::nullopt;
}

SqfIdeal sqf_power(const Hypergraph& h, int k) {
    if (k <= 0) return SqfIdeal::unit(h.n_vertices());
    std::vector<VertexSet> gens;
    for (const std::vector<int>& m : all_matchings(h, k)) {
        VertexSet u;
        for (int ei : m) u |= h.edges()[static_cast<std::size_t>(ei)];
        gens.push_back(u);
    }
    return SqfIdeal::from_gens(h.n_vertices(), std::move(gens));
}

namespace {

/// True iff |s ∩ c| >= k for every cover c.
bool meets_all_covers(VertexSet s, const std::vector<VertexSet>& covers, int k) {
    for (VertexSet c : covers)
        if ((s & c).size() < k) return false;
    return true;
}

/// Branch-and-bound enumeration of the minimal vertex sets meeting every
/// minimal cover with multiplicity >= k. Branches on the vertices of an
/// unsatisfied cover, most-covering vertex first; candidates are reduced to
/// minimal satisfying sets and deduplicated afterwards.
void symbolic_gens_rec(const std::vector<VertexSet>& covers, int k, int n, VertexSet current,
                       VertexSet forbidden, std::set<std::uint64_t>& found) {
    const VertexSet* unsatisfied = nullptr;
    for (const VertexSet& c : covers) {
        if ((current & c).size() < k) {
            unsatisfied = &c;
            break;
        }
    }
    if (unsatisfied == nullptr) {
        // Reduce to a minimal satisfying subset (stable: drop highest first
        // so the greedy reduction is deterministic).
        VertexSet reduced = current;
        auto vs = current.to_vector();
        for (auto it = vs.rbegin(); it != vs.rend(); ++it) {
            VertexSet without = reduced;
            without.remove(*it);
            if (meets_all_covers(without, covers, k)) reduced = without;
        }
        found.insert(reduced.bits());
        return;
    }
    // Order branch vertices by how many still-unsatisfied covers they hit.
    std::vector<std::pair<int, int>> ranked;
    (*unsatisfied - current - forbidden).for_each([&](int v) {
        int score = 0;
        for (const VertexSet& c : covers)
            if (c.contains(v) && (current & c).size() < k) ++score;
        ranked.emplace_back(-score, v);
    });
    std::sort(ranked.begin(), ranked.end());
    VertexSet blocked = forbidden;
    for (auto [neg_score, v] : ranked) {
        (void)neg_score;
        VertexSet next = current;
        next.add(v);
        symbolic_gens_rec(covers, k, n, next, blocked, found);
        blocked.add(v);  // later branches must satisfy this cover without v
    }
}

}  // namespace

SqfIdeal sqf_symbolic_power(const Hypergraph& h, int k) {
    if (k <= 0) return SqfIdeal::unit(h.n_vertices());
    const std::vector<VertexSet> covers = minimal_vertex_covers(h);
    if (cover_number(h) < k) return SqfIdeal::zero(h.n_vertices());
    std::set<std::uint64_t> found;
    symbolic_gens_rec(covers, k, h.n_vertices(), VertexSet{}, VertexSet{}, found);
    std::vector<VertexSet> gens;
    gens.reserve(found.size());
    for (std::uint64_t bits : found) gens.push_back(VertexSet(bits));
    return SqfIdeal::from_gens(h.n_vertices(), std::move(gens));
}

SqfIdeal sqf_symbolic_power_oracle(const Hypergraph& h, int k) {
    if (k <= 0) return SqfIdeal::unit(h.n_vertices());
    const std::vector<VertexSet> covers = minimal_vertex_covers(h);
    if (covers.size() == 1 && covers[0].empty()) return SqfIdeal::zero(h.n_vertices());
    bool first = true;
    GenIdeal acc;
    for (VertexSet c : covers) {
        GenIdeal pk = gen_power(GenIdeal::variable_prime(h.n_vertices(), c), k);
        acc = first ? pk : gen_intersect(acc, pk);
        first = false;
    }
    return sqf_part(acc);
}

SqfIdeal power_of_kind(const Hypergraph& h, int k, PowerKind kind) {
    return kind == PowerKind::SquarefreeOrdinary ? sqf_power(h, k) : sqf_symbolic_power(h, k);
}

int nu_F(const Hypergraph& h, PowerKind kind) {
    int combinatorial = kind == PowerKind::SquarefreeOrdinary ? matching_number(h) : cover_number(h);
    if (!power_of_kind(h, combinatorial, kind).is_zero() &&
        power_of_kind(h, combinatorial + 1, kind).is_zero())
        return combinatorial;
    throw std::logic_error("nu_F: power vanishing does not match the combinatorial invariant");
}

bool is_principal_full_support(const Hypergraph& h, PowerKind kind) {
    if (h.n_edges() == 0)
        throw std::invalid_argument("is_principal_full_support: hypergraph has no edge");
    const SqfIdeal expected = SqfIdeal::principal(h.n_vertices(), h.vertex_universe());
    const bool direct = power_of_kind(h, nu_F(h, kind), kind) == expected;
    if (kind == PowerKind::SquarefreeSymbolic) {
        // Cover criterion: every vertex lies in some minimal cover of
        // cardinality beta(H).
        const int beta = cover_number(h);
        const std::vector<VertexSet> covers = minimal_vertex_covers(h);
        bool by_covers = true;
        for (int v = 0; v < h.n_vertices() && by_covers; ++v) {
            bool hit = false;
            for (VertexSet c : covers)
                if (c.size() == beta && c.contains(v)) {
                    hit = true;
                    break;
                }
            by_covers = hit;
        }
        if (by_covers != direct)
            throw std::logic_error(
                "is_principal_full_support: cover criterion disagrees with generators");
    }
    return direct;
}

Filtration::Filtration(int universe, std::vector<SqfIdeal> ideals, int nu)
    : universe_(universe), ideals_(std::move(ideals)), zero_(SqfIdeal::zero(universe)), nu_(nu) {}

Filtration Filtration::from_power_kind(const Hypergraph& h, PowerKind kind) {
    const int nu = nu_F(h, kind);
    std::vector<SqfIdeal> ideals;
    ideals.reserve(static_cast<std::size_t>(nu) + 1);
    for (int i = 0; i <= nu; ++i) ideals.push_back(power_of_kind(h, i, kind));
    if (nu < 1 || !ideals[1].is_proper_nonzero())
        throw std::invalid_argument("Filtration: I_1 must be a proper nonzero ideal");
    return Filtration(h.n_vertices(), std::move(ideals), nu);
}

Filtration Filtration::from_ideals(std::vector<SqfIdeal> ideals) {
    if (ideals.empty()) throw std::invalid_argument("Filtration: empty ideal list");
    const int universe = ideals[0].universe_size();
    for (const SqfIdeal& a : ideals)
        if (a.universe_size() != universe) throw std::invalid_argument("Filtration: universe mismatch");
    if (!ideals[0].is_unit()) throw std::invalid_argument("Filtration: I_0 must be the unit ideal");
    if (ideals.size() < 2 || !ideals[1].is_proper_nonzero())
        throw std::invalid_argument("Filtration: I_1 must be a proper nonzero ideal");
    int nu = 0;
    for (std::size_t i = 0; i + 1 < ideals.size(); ++i) {
        const SqfIdeal& next = ideals[i + 1];
        for (VertexSet g : next.gens())
            if (!ideals[i].contains_monomial(g))
                throw std::invalid_argument("Filtration: sequence is not decreasing");
    }
    for (std::size_t i = 0; i < ideals.size(); ++i)
        if (!ideals[i].is_zero()) nu = static_cast<int>(i);
    // Nonzero after a zero level would contradict the decreasing property
    // already checked; trim trailing zeros.
    ideals.resize(static_cast<std::size_t>(nu) + 1);
    return Filtration(universe, std::move(ideals), nu);
}

const SqfIdeal& Filtration::ideal(int i) const {
    if (i < 0) throw std::invalid_argument("Filtration: negative index");
    if (i > nu_) return zero_;
    return ideals_[static_cast<std::size_t>(i)];
}

VertexSet Filtration::support() const {
    VertexSet s;
    for (const SqfIdeal& a : ideals_) s |= a.support();
    return s;
}

SqfIdeal mixed_sum(const Filtration& fa, const Filtration& fb, int n) {
    if (fa.universe_size() != fb.universe_size())
        throw std::invalid_argument("mixed_sum: universe mismatch");
    if (fa.support().intersects(fb.support()))
        throw std::invalid_argument("mixed_sum: filtrations share variables");
    if (n < 0) throw std::invalid_argument("mixed_sum: n must be >= 0");
    SqfIdeal q = SqfIdeal::zero(fa.universe_size());
    const int lo = std::max(0, n - fa.nu());
    const int hi = std::min(n, fb.nu());
    for (int i = lo; i <= hi; ++i) q = sum(q, product(fa.ideal(n - i), fb.ideal(i)));
    return q;
}

std::pair<Filtration, Filtration> embed_disjoint(const Filtration& fa, const Filtration& fb) {
    const int na = fa.universe_size();
    const int nb = fb.universe_size();
    std::vector<int> map_a(static_cast<std::size_t>(na));
    std::vector<int> map_b(static_cast<std::size_t>(nb));
    for (int v = 0; v < na; ++v) map_a[static_cast<std::size_t>(v)] = v;
    for (int v = 0; v < nb; ++v) map_b[static_cast<std::size_t>(v)] = na + v;
    std::vector<SqfIdeal> ia, ib;
    for (int i = 0; i <= fa.nu(); ++i) ia.push_back(fa.ideal(i).embed(na + nb, map_a));
    for (int i = 0; i <= fb.nu(); ++i) ib.push_back(fb.ideal(i).embed(na + nb, map_b));
    ia.push_back(SqfIdeal::zero(na + nb));
    ib.push_back(SqfIdeal::zero(na + nb));
    return {Filtration::from_ideals(std::move(ia)), Filtration::from_ideals(std::move(ib))};
}

DelConditionReport check_del_condition(const Filtration& f) {
    DelConditionReport report;
    for (int k = 1; k <= f.nu(); ++k) {
        DelConditionStep step;
        step.k = k;
        step.holds = true;
        const SqfIdeal& ik = f.ideal(k);
        if (ik.is_proper_nonzero()) {
            for (VertexSet g : del_star(ik).gens()) {
                if (!f.ideal(k - 1).contains_monomial(g)) {
                    step.holds = false;
                    step.violation = g;
                    break;
                }
            }
        }
        report.all_hold = report.all_hold && step.holds;
        report.steps.push_back(step);
    }
    return report;
}

PowerProvider provider_of_kind(PowerKind kind) {
    return [kind](const Hypergraph& h, int k) { return power_of_kind(h, k, kind); };
}

namespace {

void report_violation(AxiomReport& report, char axiom, std::string description) {
    report.all_hold = false;
    report.violations.push_back(AxiomViolation{axiom, std::move(description)});
}

}  // namespace

AxiomReport check_splf_axioms(const std::vector<Hypergraph>& samples, const PowerProvider& f,
                              int max_pair_universe) {
    AxiomReport report;
    for (const Hypergraph& h : samples) {
        const int n = h.n_vertices();
        // (a) normalization and generator support.
        ++report.checks_run;
        if (!f(h, 0).is_unit()) report_violation(report, 'a', "F(H,0) is not the unit ideal");
        if (f(h, 1) != SqfIdeal::edge_ideal(h))
            report_violation(report, 'a', "F(H,1) differs from the edge ideal");

        // Materialize the filtration until it vanishes.
        std::vector<SqfIdeal> levels{f(h, 0)};
        for (int k = 1; k <= n + 1; ++k) {
            levels.push_back(f(h, k));
            if (levels.back().is_zero()) break;
        }
        const int top = static_cast<int>(levels.size()) - 1;

        for (int k = 1; k <= top; ++k) {
            if (!levels[static_cast<std::size_t>(k)].is_proper_nonzero()) continue;
            ++report.checks_run;
            for (VertexSet g : del_star(levels[static_cast<std::size_t>(k)]).gens()) {
                if (!levels[static_cast<std::size_t>(k - 1)].contains_monomial(g)) {
                    report_violation(report, 'b',
                                     "del* F(H," + std::to_string(k) + ") has generator " +
                                         g.to_string() + " outside F(H," + std::to_string(k - 1) +
                                         ")");
                    break;
                }
            }
        }

        // (c) restriction compatibility on every induced sub-hypergraph.
        for (std::uint64_t w_bits = 0; w_bits < (std::uint64_t{1} << n); ++w_bits) {
            VertexSet w{w_bits};
            InducedSubgraph sub = induced(h, w);
            for (int k = 1; k <= top; ++k) {
                ++report.checks_run;
                SqfIdeal restricted = restrict_to(levels[static_cast<std::size_t>(k)], w);
                SqfIdeal on_sub = f(sub.hypergraph, k);
                std::vector<int> lift_map(static_cast<std::size_t>(sub.hypergraph.n_vertices()));
                for (int v = 0; v < sub.hypergraph.n_vertices(); ++v)
                    lift_map[static_cast<std::size_t>(v)] = sub.old_of(v);
                if (restricted != on_sub.embed(n, lift_map)) {
                    report_violation(report, 'c',
                                     "restriction to " + w.to_string() + " differs at k = " +
                                         std::to_string(k));
                    break;
                }
            }
        }
    }

    // (d) disjoint-union convolution on ordered pairs from the sample.
    for (const Hypergraph& h1 : samples) {
        for (const Hypergraph& h2 : samples) {
            if (h1.n_vertices() + h2.n_vertices() > max_pair_universe) continue;
            DisjointUnion du = disjoint_union(h1, h2);
            const int n = du.hypergraph.n_vertices();
            std::vector<int> map1(static_cast<std::size_t>(h1.n_vertices()));
            std::vector<int> map2(static_cast<std::size_t>(h2.n_vertices()));
            for (int v = 0; v < h1.n_vertices(); ++v) map1[static_cast<std::size_t>(v)] = v;
            for (int v = 0; v < h2.n_vertices(); ++v)
                map2[static_cast<std::size_t>(v)] = du.offset + v;
            const int max_k = n + 1;
            for (int k = 1; k <= max_k; ++k) {
                ++report.checks_run;
                SqfIdeal lhs = f(du.hypergraph, k);
                SqfIdeal rhs = SqfIdeal::zero(n);
                for (int i = 0; i <= k; ++i) {
                    SqfIdeal a = f(h1, i).embed(n, map1);
                    SqfIdeal b = f(h2, k - i).embed(n, map2);
                    rhs = sum(rhs, product(a, b));
                }
                if (lhs != rhs) {
                    report_violation(report, 'd',
                                     "disjoint union formula fails at k = " + std::to_string(k));
                    break;
                }
                if (lhs.is_zero()) break;
            }
        }
    }
    return report;
}

AxiomReport check_splf_axioms(const std::vector<Hypergraph>& samples, PowerKind kind,
                              int max_pair_universe) {
    return check_splf_axioms(samples, provider_of_kind(kind), max_pair_universe);
}

}  // namespace sqfpow

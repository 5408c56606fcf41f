#ifndef SQFPOW_SQF_IDEAL_HPP
#define SQFPOW_SQF_IDEAL_HPP

#include <limits>
#include <string>
#include <vector>

#include "sqfpow/hypergraph.hpp"
#include "sqfpow/vertex_set.hpp"

namespace sqfpow {

/// Sentinel for delta_min_degree of the zero ideal.
inline constexpr int kDeltaInfinity = std::numeric_limits<int>::max();

/// A squarefree monomial ideal, stored as the unique minimal generating
/// antichain of supports. Two distinguished values: ZERO (no generators)
/// and UNIT (generated by the empty support, i.e. the whole ring). Any
/// generator list containing the empty set normalizes to UNIT. Value type;
/// immutable after construction.
class SqfIdeal {
public:
    SqfIdeal() = default;

    static SqfIdeal zero(int universe_size) { return SqfIdeal(universe_size, {}); }
    static SqfIdeal unit(int universe_size) { return SqfIdeal(universe_size, {VertexSet{}}); }
    static SqfIdeal from_gens(int universe_size, std::vector<VertexSet> gens) {
        return SqfIdeal(universe_size, std::move(gens));
    }
    static SqfIdeal principal(int universe_size, VertexSet g) {
        return SqfIdeal(universe_size, {g});
    }
    static SqfIdeal edge_ideal(const Hypergraph& h) {
        return SqfIdeal(h.n_vertices(), h.edges());
    }

    int universe_size() const { return n_; }
    const std::vector<VertexSet>& gens() const { return gens_; }
    bool is_zero() const { return gens_.empty(); }
    bool is_unit() const { return gens_.size() == 1 && gens_[0].empty(); }
    bool is_proper_nonzero() const { return !is_zero() && !is_unit(); }

    /// Union of all generator supports.
    VertexSet support() const;

    /// True iff the squarefree monomial with support m lies in the ideal.
    bool contains_monomial(VertexSet m) const;

    /// min{deg(g)}; kDeltaInfinity for ZERO, 0 for UNIT.
    int delta_min_degree() const;

    bool operator==(const SqfIdeal&) const = default;

    /// Ideal containing both summands: union of generators, minimalized.
    friend SqfIdeal sum(const SqfIdeal& a, const SqfIdeal& b);

    /// Product, defined only when the two generator supports live in
    /// disjoint variable blocks (so the result stays squarefree). Throws
    /// std::invalid_argument otherwise; use the GenIdeal oracle for the
    /// general case.
    friend SqfIdeal product(const SqfIdeal& a, const SqfIdeal& b);

    /// Intersection via pairwise unions of supports, minimalized.
    friend SqfIdeal intersect(const SqfIdeal& a, const SqfIdeal& b);

    /// (a : x_m) = ideal of monomials whose product with m lies in a. For
    /// a squarefree and m squarefree this is generated by {g - m}.
    friend SqfIdeal colon(const SqfIdeal& a, VertexSet m);

    /// a^{<= m}: the subideal generated by the generators dividing m.
    friend SqfIdeal restrict_to(const SqfIdeal& a, VertexSet m);

    /// del* = ideal generated by g with one variable removed, over all
    /// generators g and variables of g. Rejects ZERO and UNIT.
    friend SqfIdeal del_star(const SqfIdeal& a);

    /// Re-embed into a larger universe via new index per old vertex.
    SqfIdeal embed(int new_universe, const std::vector<int>& new_index_of_old) const;

    /// Byte-stable serialization {"n":..,"gens":[[..],..]} with generators
    /// in ascending bitmask order; used as the cache key material.
    std::string to_json() const;
    static SqfIdeal from_json(const std::string& text);

private:
    SqfIdeal(int universe_size, std::vector<VertexSet> gens);

    int n_ = 0;
    std::vector<VertexSet> gens_;
};

/// require same universe, throw otherwise
void check_same_universe(const SqfIdeal& a, const SqfIdeal& b);

}  // namespace sqfpow

#endif  // SQFPOW_SQF_IDEAL_HPP

#ifndef SQFPOW_HYPERGRAPH_HPP
#define SQFPOW_HYPERGRAPH_HPP

#include <optional>
#include <utility>
#include <vector>

#include "sqfpow/vertex_set.hpp"

namespace sqfpow {

/// A simple hypergraph on the dense vertex universe {0,...,n_vertices-1}.
/// The edge list is kept as an inclusion-antichain: the constructor drops
/// duplicate edges and any edge containing another edge, and sorts the
/// remainder by bitmask for deterministic iteration. Immutable after
/// construction.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n_vertices, std::vector<VertexSet> edges);

    int n_vertices() const { return n_; }
    const std::vector<VertexSet>& edges() const { return edges_; }
    int n_edges() const { return static_cast<int>(edges_.size()); }

    VertexSet vertex_universe() const { return VertexSet::full(n_); }
    /// Union of all edges (vertices that are not isolated).
    VertexSet support() const;
    bool is_graph() const;  // every edge has cardinality 2

    bool operator==(const Hypergraph&) const = default;

private:
    int n_ = 0;
    std::vector<VertexSet> edges_;
};

/// A graph with adjacency masks, convertible from/to the hypergraph view.
class Graph {
public:
    Graph() = default;
    explicit Graph(const Hypergraph& h);  // throws if some edge is not a pair
    Graph(int n_vertices, const std::vector<std::pair<int, int>>& edge_pairs);

    int n_vertices() const { return n_; }
    VertexSet neighbors(int v) const { return adj_[static_cast<std::size_t>(v)]; }
    bool has_edge(int u, int v) const { return adj_[static_cast<std::size_t>(u)].contains(v); }
    int degree(int v) const { return adj_[static_cast<std::size_t>(v)].size(); }
    int n_edges() const;
    std::vector<std::pair<int, int>> edge_pairs() const;

    const Hypergraph& hypergraph() const { return h_; }
    Graph complement() const;
    Graph induced(VertexSet w) const;  // relabeled to 0..|w|-1

    bool operator==(const Graph& o) const { return h_ == o.h_; }

private:
    void build_adjacency();

    int n_ = 0;
    Hypergraph h_;
    std::vector<VertexSet> adj_;
};

/// Result of taking an induced sub-hypergraph: the hypergraph is relabeled
/// to the dense universe 0..|w|-1; new_to_old[i] is the original index of
/// new vertex i (ascending).
struct InducedSubgraph {
    Hypergraph hypergraph;
    std::vector<int> new_to_old;

    int old_of(int new_index) const { return new_to_old[static_cast<std::size_t>(new_index)]; }
    /// Map a vertex set of the induced universe back into the parent universe.
    VertexSet lift(VertexSet s) const {
        VertexSet out;
        s.for_each([&](int v) { out.add(new_to_old[static_cast<std::size_t>(v)]); });
        return out;
    }
};

/// Induced sub-hypergraph on w, relabeled (isolated vertices retained).
InducedSubgraph induced(const Hypergraph& h, VertexSet w);

/// Induced sub-hypergraph on w without relabeling: keeps the parent
/// universe and only the edges contained in w. Handy when ideals of parent
/// and child must live in one polynomial ring.
Hypergraph induced_same_universe(const Hypergraph& h, VertexSet w);

struct DisjointUnion {
    Hypergraph hypergraph;
    int offset;  // vertices of the second summand are shifted by this
};

DisjointUnion disjoint_union(const Hypergraph& a, const Hypergraph& b);

/// Maximum number of pairwise disjoint edges.
int matching_number(const Hypergraph& h);

/// Maximum size of a matching M with E(H[union of M]) = M.
int induced_matching_number(const Hypergraph& h);

/// All matchings (as lists of edge indices); used by the squarefree-power
/// construction and by tests.
std::vector<std::vector<int>> all_matchings(const Hypergraph& h, int exact_size);

/// Maximum cardinality of a set containing no edge.
int independence_number(const Hypergraph& h);

/// Minimum cardinality of a vertex cover.
int cover_number(const Hypergraph& h);

/// The full antichain of inclusion-minimal vertex covers. For the edgeless
/// hypergraph this is {∅}.
std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h);

/// All maximal independent sets (complements of the minimal covers).
std::vector<VertexSet> maximal_independent_sets(const Hypergraph& h);

bool is_independent_set(const Hypergraph& h, VertexSet s);

struct Neighborhoods {
    VertexSet closed;  // N[A]
    VertexSet open;    // N(A) = N[A] \ A
};

Neighborhoods neighborhoods(const Graph& g, VertexSet a);

/// Connected components (by shared vertices along edges); isolated vertices
/// form singleton components. Sorted by smallest member.
std::vector<VertexSet> connected_components(const Hypergraph& h);

bool is_connected(const Hypergraph& h);

}  // namespace sqfpow

#endif  // SQFPOW_HYPERGRAPH_HPP

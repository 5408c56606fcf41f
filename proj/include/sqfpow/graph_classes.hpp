#ifndef SQFPOW_GRAPH_CLASSES_HPP
#define SQFPOW_GRAPH_CLASSES_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sqfpow/homology.hpp"
#include "sqfpow/hypergraph.hpp"

namespace sqfpow {

/// Vertices whose neighborhood induces a clique (free vertices).
VertexSet simplicial_vertices(const Graph& g);

/// All maximal cliques (Bron-Kerbosch); includes singletons for isolated
/// vertices. These are the paper's "blocks" when g is a block graph.
std::vector<VertexSet> maximal_cliques(const Graph& g);

struct ChordalityResult {
    bool chordal = false;
    /// Perfect elimination ordering when chordal.
    std::vector<int> elimination_ordering;
    /// A shortest induced cycle of length >= 4 otherwise.
    std::optional<std::vector<int>> induced_cycle;
};

ChordalityResult is_chordal(const Graph& g);

struct WeakChordalityResult {
    bool weakly_chordal = false;
    /// Offending induced cycle of length >= 5 and where it was found.
    std::optional<std::vector<int>> induced_cycle;
    bool cycle_in_complement = false;
};

WeakChordalityResult is_weakly_chordal(const Graph& g);

/// Shortest induced cycle of length >= min_length, if any; vertices in
/// cyclic order, lexicographically smallest among the shortest.
std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int min_length);

struct BlockDecomposition {
    /// Maximal 2-connected pieces and bridges (vertex sets); isolated
    /// vertices appear as singleton blocks. Every edge lies in exactly one
    /// block and two blocks share at most one vertex.
    std::vector<VertexSet> blocks;
    VertexSet cut_vertices;
};

BlockDecomposition block_decomposition(const Graph& g);

struct BlockGraphResult {
    bool block_graph = false;
    BlockDecomposition decomposition;
    /// A biconnected component that is not a clique, when not a block graph.
    std::optional<VertexSet> non_clique_block;
};

BlockGraphResult is_block_graph(const Graph& g);

struct CmChordalResult {
    bool cm_chordal = false;
    /// Partition of V into maximal cliques, each containing a vertex
    /// simplicial in g.
    std::vector<VertexSet> clique_partition;
};

CmChordalResult is_cm_chordal(const Graph& g);

bool is_forest(const Graph& g);
bool is_complete(const Graph& g);

/// Blocks attached to block b exactly at vertex u (excluding b itself).
std::vector<VertexSet> blocks_attached_at(const std::vector<VertexSet>& blocks, VertexSet b, int u);

enum class SpecialBlockType { I, II, III };

/// One special block together with one distinguished ordering u_1..u_d.
/// Orderings that differ only by permuting u_1..u_{d-1} satisfy exactly the
/// same conditions, so the recognizer emits one canonical representative
/// (ascending u_1..u_{d-1}) per valid choice of the last vertex.
struct SpecialBlockWitness {
    VertexSet block;
    SpecialBlockType block_type = SpecialBlockType::I;
    std::vector<int> distinguished_ordering;
    /// For Type III: the far endpoints of the K_2 blocks hanging off u_i,
    /// for each i in [d-1] with attachments.
    std::map<int, std::vector<int>> attached_pendants;
};

/// All special blocks with every distinguished ordering (see above).
/// Throws std::invalid_argument when g is not a block graph.
std::vector<SpecialBlockWitness> special_blocks(const Graph& g);

struct GraphClassReport {
    bool is_graph = true;
    ChordalityResult chordal;
    WeakChordalityResult weakly_chordal;
    BlockGraphResult block;
    CmChordalResult cm_chordal;
    bool forest = false;
    bool complete = false;
    std::string to_json() const;
};

GraphClassReport classify(const Graph& g);

struct AttachedConstruction {
    Graph graph;
    std::vector<int> base_map;  // old vertex -> new index (identity here)
    std::vector<int> added_map; // i-th added vertex -> new index
};

/// Base graph plus a complete graph K_n (n >= 2) whose last vertex x_n is
/// joined to every vertex of s.
AttachedConstruction build_attach_kn(const Graph& g, VertexSet s, int n);

/// Base graph plus a whiskered complete graph W(K_n) (n >= 1) with v joined
/// to every vertex of the K_n.
AttachedConstruction build_whiskered_attach(const Graph& g, int v, int n);

/// W(K_n): the complete graph on 0..n-1 with pendant i+n attached to i.
Graph whisker_complete(int n);

/// Lexicographically minimal adjacency bit-string over all vertex
/// permutations, packed column-major into 64 bits (n <= 11).
std::uint64_t canonical_key(const Graph& g);

/// Number of adjacency-preserving permutations.
long long automorphism_count(const Graph& g);

struct GraphClassFilter {
    std::optional<bool> connected;
    std::optional<bool> chordal;
    std::optional<bool> weakly_chordal;
    std::optional<bool> block_graph;
    std::optional<bool> cm_chordal;
    std::optional<bool> complete;
    std::optional<bool> forest;

    bool matches(const Graph& g) const;
};

/// One canonical representative per isomorphism class of graphs on exactly
/// n vertices, in ascending canonical-key order, filtered by class flags.
/// The guard bounds the permutation-canonicalization cost; exceeding it
/// raises BudgetError.
std::vector<Graph> enumerate_graphs(int n, const GraphClassFilter& filter = {},
                                    int cost_guard_max_n = 8);

}  // namespace sqfpow

#endif  // SQFPOW_GRAPH_CLASSES_HPP

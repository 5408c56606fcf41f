#include "sqfpow/hypergraph.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

namespace sqfpow {

namespace {

/// Sort by bitmask, drop duplicates and any set containing another set.
std::vector<VertexSet> antichain_minimalize(std::vector<VertexSet> sets) {
    std::sort(sets.begin(), sets.end(), [](VertexSet a, VertexSet b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a.bits() < b.bits();
    });
    std::vector<VertexSet> out;
    for (VertexSet s : sets) {
        bool dominated = false;
        for (VertexSet kept : out) {
            if (kept.subset_of(s)) {
                dominated = true;
                break;
            }
        }
        if (!dominated) out.push_back(s);
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    return out;
}

}  // namespace

Hypergraph::Hypergraph(int n_vertices, std::vector<VertexSet> edges) : n_(n_vertices) {
    if (n_vertices < 0 || n_vertices > kMaxUniverse)
        throw std::invalid_argument("Hypergraph: universe size must be in [0,64]");
    const VertexSet universe = VertexSet::full(n_vertices);
    for (VertexSet e : edges) {
        if (e.empty()) throw std::invalid_argument("Hypergraph: empty edge");
        if (!e.subset_of(universe)) throw std::invalid_argument("Hypergraph: edge outside universe");
    }
    edges_ = antichain_minimalize(std::move(edges));
}

VertexSet Hypergraph::support() const {
    VertexSet s;
    for (VertexSet e : edges_) s |= e;
    return s;
}

bool Hypergraph::is_graph() const {
    return std::all_of(edges_.begin(), edges_.end(), [](VertexSet e) { return e.size() == 2; });
}

Graph::Graph(const Hypergraph& h) : n_(h.n_vertices()), h_(h) {
    if (!h.is_graph()) throw std::invalid_argument("Graph: hypergraph has an edge of size != 2");
    build_adjacency();
}

Graph::Graph(int n_vertices, const std::vector<std::pair<int, int>>& edge_pairs) {
    std::vector<VertexSet> edges;
    edges.reserve(edge_pairs.size());
    for (auto [u, v] : edge_pairs) {
        if (u == v) throw std::invalid_argument("Graph: loop edge");
        edges.push_back(VertexSet::of({u, v}));
    }
    h_ = Hypergraph(n_vertices, std::move(edges));
    n_ = n_vertices;
    build_adjacency();
}

void Graph::build_adjacency() {
    adj_.assign(static_cast<std::size_t>(n_), VertexSet{});
    for (VertexSet e : h_.edges()) {
        auto vs = e.to_vector();
        adj_[static_cast<std::size_t>(vs[0])].add(vs[1]);
        adj_[static_cast<std::size_t>(vs[1])].add(vs[0]);
    }
}

int Graph::n_edges() const { return h_.n_edges(); }

std::vector<std::pair<int, int>> Graph::edge_pairs() const {
    std::vector<std::pair<int, int>> out;
    for (VertexSet e : h_.edges()) {
        auto vs = e.to_vector();
        out.emplace_back(vs[0], vs[1]);
    }
    return out;
}

Graph Graph::complement() const {
    std::vector<std::pair<int, int>> pairs;
    for (int u = 0; u < n_; ++u)
        for (int v = u + 1; v < n_; ++v)
            if (!has_edge(u, v)) pairs.emplace_back(u, v);
    return Graph(n_, pairs);
}

Graph Graph::induced(VertexSet w) const { return Graph(sqfpow::induced(h_, w).hypergraph); }

InducedSubgraph induced(const Hypergraph& h, VertexSet w) {
    if (!w.subset_of(h.vertex_universe()))
        throw std::invalid_argument("induced: vertex set outside universe");
    std::vector<int> new_to_old = w.to_vector();
    std::vector<int> old_to_new(static_cast<std::size_t>(h.n_vertices()), -1);
    for (std::size_t i = 0; i < new_to_old.size(); ++i)
        old_to_new[static_cast<std::size_t>(new_to_old[i])] = static_cast<int>(i);

    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges()) {
        if (!e.subset_of(w)) continue;
        VertexSet relabeled;
        e.for_each([&](int v) { relabeled.add(old_to_new[static_cast<std::size_t>(v)]); });
        edges.push_back(relabeled);
    }
    return InducedSubgraph{Hypergraph(static_cast<int>(new_to_old.size()), std::move(edges)),
                           std::move(new_to_old)};
}

Hypergraph induced_same_universe(const Hypergraph& h, VertexSet w) {
    if (!w.subset_of(h.vertex_universe()))
        throw std::invalid_argument("induced_same_universe: vertex set outside universe");
    std::vector<VertexSet> edges;
    for (VertexSet e : h.edges())
        if (e.subset_of(w)) edges.push_back(e);
    return Hypergraph(h.n_vertices(), std::move(edges));
}

DisjointUnion disjoint_union(const Hypergraph& a, const Hypergraph& b) {
    const int offset = a.n_vertices();
    if (offset + b.n_vertices() > kMaxUniverse)
        throw std::invalid_argument("disjoint_union: combined universe exceeds 64 vertices");
    std::vector<VertexSet> edges = a.edges();
    for (VertexSet e : b.edges()) edges.push_back(VertexSet(e.bits() << offset));
    return DisjointUnion{Hypergraph(offset + b.n_vertices(), std::move(edges)), offset};
}

namespace {

/// Extend a partial matching over edges with index >= start.
void max_matching_rec(const std::vector<VertexSet>& edges, std::size_t start, VertexSet used,
                      int size, int& best) {
    best = std::max(best, size);
    if (size + static_cast<int>(edges.size() - start) <= best) return;
    for (std::size_t i = start; i < edges.size(); ++i) {
        if (edges[i].intersects(used)) continue;
        max_matching_rec(edges, i + 1, used | edges[i], size + 1, best);
    }
}

void all_matchings_rec(const std::vector<VertexSet>& edges, std::size_t start, VertexSet used,
                       std::vector<int>& current, int exact_size,
                       std::vector<std::vector<int>>& out) {
    if (static_cast<int>(current.size()) == exact_size) {
        out.push_back(current);
        return;
    }
    for (std::size_t i = start; i < edges.size(); ++i) {
        if (edges[i].intersects(used)) continue;
        current.push_back(static_cast<int>(i));
        all_matchings_rec(edges, i + 1, used | edges[i], current, exact_size, out);
        current.pop_back();
    }
}

}  // namespace

int matching_number(const Hypergraph& h) {
    int best = 0;
    max_matching_rec(h.edges(), 0, VertexSet{}, 0, best);
    return best;
}

std::vector<std::vector<int>> all_matchings(const Hypergraph& h, int exact_size) {
    std::vector<std::vector<int>> out;
    if (exact_size < 0) return out;
    if (exact_size == 0) {
        out.push_back({});
        return out;
    }
    std::vector<int> current;
    all_matchings_rec(h.edges(), 0, VertexSet{}, current, exact_size, out);
    return out;
}

int induced_matching_number(const Hypergraph& h) {
    int best = 0;
    // Enumerate matchings and keep those that are induced: the edges of the
    // sub-hypergraph on the union must be exactly the matching.
    std::function<void(std::size_t, VertexSet, int)> rec = [&](std::size_t start, VertexSet used,
                                                               int size) {
        if (size > best) {
            int contained = 0;
            for (VertexSet e : h.edges())
                if (e.subset_of(used)) ++contained;
            if (contained == size) best = size;
        }
        for (std::size_t i = start; i < h.edges().size(); ++i) {
            if (h.edges()[i].intersects(used)) continue;
            rec(i + 1, used | h.edges()[i], size + 1);
        }
    };
    rec(0, VertexSet{}, 0);
    return best;
}

bool is_independent_set(const Hypergraph& h, VertexSet s) {
    for (VertexSet e : h.edges())
        if (e.subset_of(s)) return false;
    return true;
}

namespace {

/// Bron-Kerbosch with pivoting: maximal cliques of a graph given by masks.
void bron_kerbosch(const std::vector<VertexSet>& adj, VertexSet r, VertexSet p, VertexSet x,
                   std::vector<VertexSet>& out) {
    if (p.empty() && x.empty()) {
        out.push_back(r);
        return;
    }
    // Pivot: vertex of P ∪ X with the most neighbours in P.
    int pivot = -1, best_count = -1;
    (p | x).for_each([&](int u) {
        int c = (p & adj[static_cast<std::size_t>(u)]).size();
        if (c > best_count) {
            best_count = c;
            pivot = u;
        }
    });
    VertexSet candidates = p - adj[static_cast<std::size_t>(pivot)];
    candidates.for_each([&](int v) {
        VertexSet nv = adj[static_cast<std::size_t>(v)];
        VertexSet rv = r;
        rv.add(v);
        bron_kerbosch(adj, rv, p & nv, x & nv, out);
        p.remove(v);
        x.add(v);
    });
}

/// Maximal independent sets of a general hypergraph by subset scan. Only
/// used off the graph fast path, where universes stay tiny.
std::vector<VertexSet> hypergraph_mis_scan(const Hypergraph& h) {
    const int n = h.n_vertices();
    if (n > 22) throw std::invalid_argument("maximal_independent_sets: hypergraph universe too large");
    std::vector<VertexSet> out;
    for (std::uint64_t m = 0; m < (std::uint64_t{1} << n); ++m) {
        VertexSet s{m};
        if (!is_independent_set(h, s)) continue;
        bool maximal = true;
        for (int v = 0; v < n && maximal; ++v) {
            if (s.contains(v)) continue;
            VertexSet grown = s;
            grown.add(v);
            if (is_independent_set(h, grown)) maximal = false;
        }
        if (maximal) out.push_back(s);
    }
    return out;
}

}  // namespace

std::vector<VertexSet> maximal_independent_sets(const Hypergraph& h) {
    std::vector<VertexSet> out;
    if (h.n_vertices() == 0) {
        out.push_back(VertexSet{});
        return out;
    }
    if (h.is_graph()) {
        // MIS of G = maximal cliques of the complement.
        Graph comp = Graph(h).complement();
        std::vector<VertexSet> adj(static_cast<std::size_t>(h.n_vertices()));
        for (int v = 0; v < h.n_vertices(); ++v) adj[static_cast<std::size_t>(v)] = comp.neighbors(v);
        bron_kerbosch(adj, VertexSet{}, VertexSet::full(h.n_vertices()), VertexSet{}, out);
    } else {
        out = hypergraph_mis_scan(h);
    }
    std::sort(out.begin(), out.end(), [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

std::vector<VertexSet> minimal_vertex_covers(const Hypergraph& h) {
    const VertexSet universe = h.vertex_universe();
    std::vector<VertexSet> covers;
    for (VertexSet mis : maximal_independent_sets(h)) covers.push_back(universe - mis);
    std::sort(covers.begin(), covers.end(),
              [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    return covers;
}

int independence_number(const Hypergraph& h) {
    int best = 0;
    for (VertexSet s : maximal_independent_sets(h)) best = std::max(best, s.size());
    return best;
}

int cover_number(const Hypergraph& h) {
    int best = h.n_vertices();
    for (VertexSet c : minimal_vertex_covers(h)) best = std::min(best, c.size());
    return best;
}

Neighborhoods neighborhoods(const Graph& g, VertexSet a) {
    if (!a.subset_of(VertexSet::full(g.n_vertices())))
        throw std::invalid_argument("neighborhoods: set outside universe");
    VertexSet closed = a;
    a.for_each([&](int v) { closed |= g.neighbors(v); });
    return Neighborhoods{closed, closed - a};
}

std::vector<VertexSet> connected_components(const Hypergraph& h) {
    std::vector<VertexSet> comps;
    VertexSet seen;
    for (int v = 0; v < h.n_vertices(); ++v) {
        if (seen.contains(v)) continue;
        VertexSet comp = VertexSet::single(v);
        bool grew = true;
        while (grew) {
            grew = false;
            for (VertexSet e : h.edges()) {
                if (e.intersects(comp) && !e.subset_of(comp)) {
                    comp |= e;
                    grew = true;
                }
            }
        }
        comps.push_back(comp);
        seen |= comp;
    }
    return comps;
}

bool is_connected(const Hypergraph& h) { return connected_components(h).size() <= 1; }

}  // namespace sqfpow

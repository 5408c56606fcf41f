#include "sqfpow/graph_classes.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <set>
#include <stdexcept>

#include <json.hpp>

namespace sqfpow {

namespace {

bool induces_clique(const Graph& g, VertexSet s) {
    bool ok = true;
    s.for_each([&](int u) {
        VertexSet others = s;
        others.remove(u);
        if (!others.subset_of(g.neighbors(u))) ok = false;
    });
    return ok;
}

}  // namespace

VertexSet simplicial_vertices(const Graph& g) {
    VertexSet out;
    for (int v = 0; v < g.n_vertices(); ++v)
        if (induces_clique(g, g.neighbors(v))) out.add(v);
    return out;
}

std::vector<VertexSet> maximal_cliques(const Graph& g) {
    // Maximal cliques of g = maximal independent sets of the complement.
    return maximal_independent_sets(g.complement().hypergraph());
}

ChordalityResult is_chordal(const Graph& g) {
    ChordalityResult result;
    const int n = g.n_vertices();
    VertexSet remaining = VertexSet::full(n);
    std::vector<int> order;
    while (!remaining.empty()) {
        int found = -1;
        remaining.for_each([&](int v) {
            if (found != -1) return;
            if (induces_clique(g, g.neighbors(v) & remaining)) found = v;
        });
        if (found == -1) break;  // no simplicial vertex: not chordal
        order.push_back(found);
        remaining.remove(found);
    }
    if (remaining.empty()) {
        result.chordal = true;
        result.elimination_ordering = std::move(order);
    } else {
        result.induced_cycle = find_induced_cycle(g, 4);
    }
    return result;
}

std::optional<std::vector<int>> find_induced_cycle(const Graph& g, int min_length) {
    const int n = g.n_vertices();
    for (int len = min_length; len <= n; ++len) {
        // Smallest-first DFS over vertex sequences (v_0 minimal in the
        // cycle) keeps the witness deterministic.
        std::vector<int> path;
        std::function<bool(void)> extend = [&]() -> bool {
            if (static_cast<int>(path.size()) == len) {
                return g.has_edge(path.back(), path.front());
            }
            for (int v = 0; v < n; ++v) {
                if (std::find(path.begin(), path.end(), v) != path.end()) continue;
                if (!path.empty() && v < path.front()) continue;  // canonical start
                if (!path.empty() && !g.has_edge(path.back(), v)) continue;
                // Induced: no chord to earlier path vertices (other than the
                // predecessor), and the closing vertex may touch the front.
                bool chord = false;
                for (std::size_t i = 0; i + 1 < path.size(); ++i) {
                    if (i == 0 && static_cast<int>(path.size()) == len - 1) continue;
                    if (g.has_edge(path[i], v)) chord = true;
                }
                if (chord) continue;
                path.push_back(v);
                if (extend()) return true;
                path.pop_back();
            }
            return false;
        };
        if (extend()) return path;
    }
    return std::nullopt;
}

WeakChordalityResult is_weakly_chordal(const Graph& g) {
    WeakChordalityResult result;
    if (auto cycle = find_induced_cycle(g, 5)) {
        result.induced_cycle = cycle;
        return result;
    }
    if (auto cycle = find_induced_cycle(g.complement(), 5)) {
        result.induced_cycle = cycle;
        result.cycle_in_complement = true;
        return result;
    }
    result.weakly_chordal = true;
    return result;
}

BlockDecomposition block_decomposition(const Graph& g) {
    const int n = g.n_vertices();
    BlockDecomposition out;
    std::vector<int> depth(static_cast<std::size_t>(n), -1);
    std::vector<int> low(static_cast<std::size_t>(n), 0);
    std::vector<std::pair<int, int>> edge_stack;

    std::function<void(int, int, int)> dfs = [&](int v, int parent, int d) {
        depth[static_cast<std::size_t>(v)] = d;
        low[static_cast<std::size_t>(v)] = d;
        int children = 0;
        g.neighbors(v).for_each([&](int w) {
            if (w == parent) return;
            if (depth[static_cast<std::size_t>(w)] == -1) {
                edge_stack.emplace_back(v, w);
                ++children;
                dfs(w, v, d + 1);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], low[static_cast<std::size_t>(w)]);
                const bool articulation =
                    (parent == -1 && children > 1) ||
                    (parent != -1 && low[static_cast<std::size_t>(w)] >= d);
                if (articulation) out.cut_vertices.add(v);
                if (low[static_cast<std::size_t>(w)] >= d) {
                    // Pop one biconnected component.
                    VertexSet block;
                    while (!edge_stack.empty()) {
                        auto [a, b] = edge_stack.back();
                        edge_stack.pop_back();
                        block.add(a);
                        block.add(b);
                        if (a == v && b == w) break;
                    }
                    out.blocks.push_back(block);
                }
            } else if (depth[static_cast<std::size_t>(w)] < d) {
                edge_stack.emplace_back(v, w);
                low[static_cast<std::size_t>(v)] =
                    std::min(low[static_cast<std::size_t>(v)], depth[static_cast<std::size_t>(w)]);
            }
        });
    };

    for (int v = 0; v < n; ++v) {
        if (depth[static_cast<std::size_t>(v)] != -1) continue;
        dfs(v, -1, 0);
        if (g.degree(v) == 0) out.blocks.push_back(VertexSet::single(v));
    }
    std::sort(out.blocks.begin(), out.blocks.end(),
              [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    return out;
}

BlockGraphResult is_block_graph(const Graph& g) {
    BlockGraphResult result;
    result.decomposition = block_decomposition(g);
    for (VertexSet block : result.decomposition.blocks) {
        if (!induces_clique(g, block)) {
            result.non_clique_block = block;
            return result;
        }
    }
    result.block_graph = true;
    return result;
}

namespace {

bool exact_cover_rec(const std::vector<VertexSet>& candidates, VertexSet covered, VertexSet target,
                     std::vector<VertexSet>& chosen) {
    if (covered == target) return true;
    // Branch on the smallest uncovered vertex; candidate order is the
    // lexicographic tie-break.
    const int v = (target - covered).first();
    for (VertexSet c : candidates) {
        if (!c.contains(v) || c.intersects(covered)) continue;
        chosen.push_back(c);
        if (exact_cover_rec(candidates, covered | c, target, chosen)) return true;
        chosen.pop_back();
    }
    return false;
}

}  // namespace

CmChordalResult is_cm_chordal(const Graph& g) {
    CmChordalResult result;
    if (!is_chordal(g).chordal) return result;
    const VertexSet frees = simplicial_vertices(g);
    std::vector<VertexSet> candidates;
    for (VertexSet clique : maximal_cliques(g))
        if (clique.intersects(frees)) candidates.push_back(clique);
    std::sort(candidates.begin(), candidates.end(),
              [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    std::vector<VertexSet> chosen;
    if (exact_cover_rec(candidates, VertexSet{}, VertexSet::full(g.n_vertices()), chosen)) {
        result.cm_chordal = true;
        result.clique_partition = std::move(chosen);
    }
    return result;
}

bool is_forest(const Graph& g) { return !find_induced_cycle(g, 3).has_value(); }

bool is_complete(const Graph& g) { return induces_clique(g, VertexSet::full(g.n_vertices())); }

std::vector<VertexSet> blocks_attached_at(const std::vector<VertexSet>& blocks, VertexSet b,
                                          int u) {
    std::vector<VertexSet> out;
    for (VertexSet d : blocks) {
        if (d == b) continue;
        if ((d & b) == VertexSet::single(u)) out.push_back(d);
    }
    return out;
}

std::vector<SpecialBlockWitness> special_blocks(const Graph& g) {
    const BlockGraphResult bg = is_block_graph(g);
    if (!bg.block_graph) throw std::invalid_argument("special_blocks: input is not a block graph");
    const std::vector<VertexSet>& blocks = bg.decomposition.blocks;

    std::vector<SpecialBlockWitness> out;
    for (VertexSet block : blocks) {
        const std::vector<int> vs = block.to_vector();
        const int d = static_cast<int>(vs.size());
        std::vector<std::vector<VertexSet>> attached(vs.size());
        int n_attached_vertices = 0;
        for (std::size_t i = 0; i < vs.size(); ++i) {
            attached[i] = blocks_attached_at(blocks, block, vs[i]);
            if (!attached[i].empty()) ++n_attached_vertices;
        }

        auto emit = [&](SpecialBlockType type, int last_index) {
            SpecialBlockWitness w;
            w.block = block;
            w.block_type = type;
            for (std::size_t i = 0; i < vs.size(); ++i)
                if (static_cast<int>(i) != last_index) w.distinguished_ordering.push_back(vs[i]);
            if (last_index >= 0) w.distinguished_ordering.push_back(vs[static_cast<std::size_t>(last_index)]);
            if (type == SpecialBlockType::III) {
                for (std::size_t i = 0; i < vs.size(); ++i) {
                    if (static_cast<int>(i) == last_index || attached[i].empty()) continue;
                    std::vector<int> pendants;
                    for (VertexSet kb : attached[i]) {
                        VertexSet other = kb;
                        other.remove(vs[i]);
                        pendants.push_back(other.first());
                    }
                    std::sort(pendants.begin(), pendants.end());
                    w.attached_pendants[vs[i]] = std::move(pendants);
                }
            }
            out.push_back(std::move(w));
        };

        if (d <= 2 && n_attached_vertices == 0) {
            emit(SpecialBlockType::I, d - 1);
            continue;
        }
        if (d >= 3) {
            // Type II: some ordering puts every attached vertex (at most
            // one) at the last position.
            if (n_attached_vertices == 0) {
                for (int last = 0; last < d; ++last) emit(SpecialBlockType::II, last);
            } else if (n_attached_vertices == 1) {
                int last = 0;
                while (attached[static_cast<std::size_t>(last)].empty()) ++last;
                emit(SpecialBlockType::II, last);
            }
        }
        if (d >= 2) {
            // Type III: choose u_d so that among the rest somebody has
            // attachments and every attached block there is a K_2.
            for (int last = 0; last < d; ++last) {
                bool some_attached = false;
                bool all_k2 = true;
                for (int i = 0; i < d; ++i) {
                    if (i == last || attached[static_cast<std::size_t>(i)].empty()) continue;
                    some_attached = true;
                    for (VertexSet kb : attached[static_cast<std::size_t>(i)])
                        if (kb.size() != 2) all_k2 = false;
                }
                if (some_attached && all_k2) emit(SpecialBlockType::III, last);
            }
        }
    }
    return out;
}

GraphClassReport classify(const Graph& g) {
    GraphClassReport r;
    r.chordal = is_chordal(g);
    r.weakly_chordal = is_weakly_chordal(g);
    r.block = is_block_graph(g);
    r.cm_chordal = is_cm_chordal(g);
    r.forest = is_forest(g);
    r.complete = is_complete(g);
    return r;
}

std::string GraphClassReport::to_json() const {
    nlohmann::json j;
    j["is_graph"] = is_graph;
    j["chordal"] = chordal.chordal;
    if (chordal.chordal)
        j["elimination_ordering"] = chordal.elimination_ordering;
    else if (chordal.induced_cycle)
        j["chordal_witness_cycle"] = *chordal.induced_cycle;
    j["weakly_chordal"] = weakly_chordal.weakly_chordal;
    if (weakly_chordal.induced_cycle) {
        j["weakly_chordal_witness_cycle"] = *weakly_chordal.induced_cycle;
        j["weakly_chordal_witness_in_complement"] = weakly_chordal.cycle_in_complement;
    }
    j["block_graph"] = block.block_graph;
    {
        nlohmann::json blocks = nlohmann::json::array();
        for (VertexSet b : block.decomposition.blocks) blocks.push_back(b.to_vector());
        j["blocks"] = blocks;
        j["cut_vertices"] = block.decomposition.cut_vertices.to_vector();
        if (block.non_clique_block) j["non_clique_block"] = block.non_clique_block->to_vector();
    }
    j["cm_chordal"] = cm_chordal.cm_chordal;
    if (cm_chordal.cm_chordal) {
        nlohmann::json parts = nlohmann::json::array();
        for (VertexSet p : cm_chordal.clique_partition) parts.push_back(p.to_vector());
        j["cm_clique_partition"] = parts;
    }
    j["forest"] = forest;
    j["complete"] = complete;
    return j.dump();
}

AttachedConstruction build_attach_kn(const Graph& g, VertexSet s, int n) {
    if (n < 2) throw std::invalid_argument("build_attach_kn: n must be >= 2");
    if (!s.subset_of(VertexSet::full(g.n_vertices())))
        throw std::invalid_argument("build_attach_kn: attachment set outside the base graph");
    const int base = g.n_vertices();
    std::vector<std::pair<int, int>> pairs = g.edge_pairs();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(base + i, base + j);
    const int xn = base + n - 1;
    s.for_each([&](int u) { pairs.emplace_back(u, xn); });

    AttachedConstruction out{Graph(base + n, pairs), {}, {}};
    for (int v = 0; v < base; ++v) out.base_map.push_back(v);
    for (int i = 0; i < n; ++i) out.added_map.push_back(base + i);
    return out;
}

AttachedConstruction build_whiskered_attach(const Graph& g, int v, int n) {
    if (n < 1) throw std::invalid_argument("build_whiskered_attach: n must be >= 1");
    if (v < 0 || v >= g.n_vertices())
        throw std::invalid_argument("build_whiskered_attach: vertex outside the base graph");
    const int base = g.n_vertices();
    std::vector<std::pair<int, int>> pairs = g.edge_pairs();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(base + i, base + j);
    for (int i = 0; i < n; ++i) pairs.emplace_back(base + i, base + n + i);  // whiskers
    for (int i = 0; i < n; ++i) pairs.emplace_back(v, base + i);

    AttachedConstruction out{Graph(base + 2 * n, pairs), {}, {}};
    for (int u = 0; u < base; ++u) out.base_map.push_back(u);
    for (int i = 0; i < 2 * n; ++i) out.added_map.push_back(base + i);
    return out;
}

Graph whisker_complete(int n) {
    if (n < 1) throw std::invalid_argument("whisker_complete: n must be >= 1");
    std::vector<std::pair<int, int>> pairs;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
    for (int i = 0; i < n; ++i) pairs.emplace_back(i, n + i);
    return Graph(2 * n, pairs);
}

namespace {

constexpr int kMaxCanonicalVertices = 11;  // C(11,2) = 55 bits fits a word

/// Adjacency bits of the (partial) permutation, column-major, packed so
/// that integer comparison equals lexicographic comparison of prefixes of
/// equal length.
struct CanonicalSearch {
    const Graph* g = nullptr;
    int n = 0;
    int total_bits = 0;
    std::uint64_t best = ~std::uint64_t{0};
    std::vector<int> perm;
    VertexSet used;

    void dfs(std::uint64_t partial, int placed, int bits_done) {
        if (placed == n) {
            best = std::min(best, partial);
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used.contains(v)) continue;
            std::uint64_t next = partial;
            int nb = bits_done;
            for (int i = 0; i < placed; ++i) {
                next = (next << 1) | (g->has_edge(perm[static_cast<std::size_t>(i)], v) ? 1 : 0);
                ++nb;
            }
            // Compare against the corresponding prefix of the incumbent.
            if (nb > 0 && best != ~std::uint64_t{0}) {
                const std::uint64_t best_prefix = best >> (total_bits - nb);
                if (next > best_prefix) continue;
            }
            used.add(v);
            perm.push_back(v);
            dfs(next, placed + 1, nb);
            perm.pop_back();
            used.remove(v);
        }
    }
};

Graph graph_from_key(int n, std::uint64_t key) {
    std::vector<std::pair<int, int>> pairs;
    int t = 0;
    const int total = n * (n - 1) / 2;
    for (int j = 1; j < n; ++j)
        for (int i = 0; i < j; ++i, ++t)
            if ((key >> (total - 1 - t)) & 1) pairs.emplace_back(i, j);
    return Graph(n, pairs);
}

}  // namespace

std::uint64_t canonical_key(const Graph& g) {
    const int n = g.n_vertices();
    if (n > kMaxCanonicalVertices)
        throw BudgetError("canonical_key: graph too large for packed canonicalization");
    if (n <= 1) return 0;
    CanonicalSearch search;
    search.g = &g;
    search.n = n;
    search.total_bits = n * (n - 1) / 2;
    search.dfs(0, 0, 0);
    return search.best;
}

long long automorphism_count(const Graph& g) {
    const int n = g.n_vertices();
    std::vector<int> perm;
    VertexSet used;
    long long count = 0;
    std::function<void()> dfs = [&]() {
        const int k = static_cast<int>(perm.size());
        if (k == n) {
            ++count;
            return;
        }
        for (int v = 0; v < n; ++v) {
            if (used.contains(v)) continue;
            bool ok = true;
            for (int i = 0; i < k && ok; ++i)
                if (g.has_edge(i, k) != g.has_edge(perm[static_cast<std::size_t>(i)], v)) ok = false;
            if (!ok) continue;
            used.add(v);
            perm.push_back(v);
            dfs();
            perm.pop_back();
            used.remove(v);
        }
    };
    dfs();
    return count;
}

bool GraphClassFilter::matches(const Graph& g) const {
    if (connected && *connected != is_connected(g.hypergraph())) return false;
    if (chordal && *chordal != is_chordal(g).chordal) return false;
    if (weakly_chordal && *weakly_chordal != is_weakly_chordal(g).weakly_chordal) return false;
    if (block_graph && *block_graph != is_block_graph(g).block_graph) return false;
    if (cm_chordal && *cm_chordal != is_cm_chordal(g).cm_chordal) return false;
    if (complete && *complete != is_complete(g)) return false;
    if (forest && *forest != is_forest(g)) return false;
    return true;
}

std::vector<Graph> enumerate_graphs(int n, const GraphClassFilter& filter, int cost_guard_max_n) {
    if (n < 1) throw std::invalid_argument("enumerate_graphs: n must be >= 1");
    if (n > cost_guard_max_n)
        throw BudgetError("enumerate_graphs: n exceeds the cost guard (" +
                          std::to_string(cost_guard_max_n) + "); raise it explicitly to proceed");

    // Canonical keys per vertex count, grown by extending every smaller
    // representative with one vertex of arbitrary neighborhood.
    static std::vector<std::vector<std::uint64_t>> cache{{}, {0}};  // n = 0, 1
    static std::mutex cache_mutex;
    std::lock_guard<std::mutex> lock(cache_mutex);
    while (static_cast<int>(cache.size()) <= n) {
        const int next_n = static_cast<int>(cache.size());
        std::set<std::uint64_t> keys;
        for (std::uint64_t parent_key : cache[static_cast<std::size_t>(next_n - 1)]) {
            const Graph parent = graph_from_key(next_n - 1, parent_key);
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << (next_n - 1)); ++mask) {
                std::vector<std::pair<int, int>> pairs = parent.edge_pairs();
                for (int v = 0; v < next_n - 1; ++v)
                    if ((mask >> v) & 1) pairs.emplace_back(v, next_n - 1);
                keys.insert(canonical_key(Graph(next_n, pairs)));
            }
        }
        cache.emplace_back(keys.begin(), keys.end());
    }

    std::vector<Graph> out;
    for (std::uint64_t key : cache[static_cast<std::size_t>(n)]) {
        Graph g = graph_from_key(n, key);
        if (filter.matches(g)) out.push_back(std::move(g));
    }
    return out;
}

}  // namespace sqfpow

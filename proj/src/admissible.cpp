#include "sqfpow/admissible.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include <json.hpp>

namespace sqfpow {

std::string AdmissibleCertificate::to_json() const {
    nlohmann::json j;
    j["C"] = C.to_vector();
    j["parts"] = nlohmann::json::array();
    for (VertexSet p : parts) j["parts"].push_back(p.to_vector());
    j["part_nu"] = part_nu;
    j["kind"] = to_string(kind);
    j["k"] = k;
    j["score"] = score;
    return j.dump();
}

AdmissibleCertificate AdmissibleCertificate::from_json(const std::string& text) {
    nlohmann::json j = nlohmann::json::parse(text);
    AdmissibleCertificate cert;
    cert.C = VertexSet::of(j.at("C").get<std::vector<int>>());
    for (const auto& p : j.at("parts")) cert.parts.push_back(VertexSet::of(p.get<std::vector<int>>()));
    cert.part_nu = j.at("part_nu").get<std::vector<int>>();
    auto kind = power_kind_from_string(j.at("kind").get<std::string>());
    if (!kind) throw std::invalid_argument("AdmissibleCertificate: unknown power kind");
    cert.kind = *kind;
    cert.k = j.at("k").get<int>();
    cert.score = j.at("score").get<int>();
    return cert;
}

CertificateCheck validate_certificate(const AdmissibleCertificate& cert, const Hypergraph& h) {
    CertificateCheck check;

    if (!cert.C.subset_of(h.vertex_universe()))
        return {false, -1, "C is not a subset of the vertex universe"};
    VertexSet covered;
    for (VertexSet p : cert.parts) {
        if (p.empty()) return {false, -1, "empty part"};
        if (p.intersects(covered)) return {false, -1, "parts are not disjoint"};
        covered |= p;
    }
    if (covered != cert.C) return {false, -1, "parts do not partition C"};
    if (cert.part_nu.size() != cert.parts.size())
        return {false, -2, "per-part nu list does not match the partition"};

    const Hypergraph hc = induced_same_universe(h, cert.C);

    // (1) every part induces at least one edge.
    for (VertexSet p : cert.parts) {
        bool has_edge = false;
        for (VertexSet e : hc.edges())
            if (e.subset_of(p)) has_edge = true;
        if (!has_edge) return {false, 1, "part " + p.to_string() + " induces no edge"};
    }

    // (2) every edge of H[C] lies inside one part.
    for (VertexSet e : hc.edges()) {
        bool inside = false;
        for (VertexSet p : cert.parts)
            if (e.subset_of(p)) inside = true;
        if (!inside) return {false, 2, "edge " + e.to_string() + " crosses parts"};
    }

    // Recorded nu values must match the parts.
    int nu_sum = 0;
    for (std::size_t i = 0; i < cert.parts.size(); ++i) {
        const InducedSubgraph part = induced(h, cert.parts[i]);
        const int nu = nu_F(part.hypergraph, cert.kind);
        if (nu != cert.part_nu[i])
            return {false, -2, "recorded nu for part " + cert.parts[i].to_string() + " is wrong"};
        nu_sum += nu;
    }

    // (3) k <= sum nu <= r + k - 1.
    const int r = static_cast<int>(cert.parts.size());
    if (!(cert.k <= nu_sum && nu_sum <= r + cert.k - 1))
        return {false, 3,
                "sum of part F-numbers " + std::to_string(nu_sum) + " outside [" +
                    std::to_string(cert.k) + ", " + std::to_string(r + cert.k - 1) + "]"};

    // (4) F(H[C_i], nu_i) is principal on the full part support.
    for (VertexSet p : cert.parts) {
        const InducedSubgraph part = induced(h, p);
        if (!is_principal_full_support(part.hypergraph, cert.kind))
            return {false, 4, "part " + p.to_string() + " is not principal at its F-number"};
    }

    const int expected_score = cert.C.size() - nu_sum;
    if (cert.score != expected_score) return {false, -3, "recorded score is wrong"};

    check.ok = true;
    return check;
}

namespace {

/// Split C into connected components of H[C].
std::vector<VertexSet> components_within(const Hypergraph& h, VertexSet c) {
    const InducedSubgraph sub = induced(h, c);
    std::vector<VertexSet> out;
    for (VertexSet comp : connected_components(sub.hypergraph)) out.push_back(sub.lift(comp));
    return out;
}

bool lex_less(VertexSet a, VertexSet b) {
    const std::vector<int> va = a.to_vector(), vb = b.to_vector();
    return std::lexicographical_compare(va.begin(), va.end(), vb.begin(), vb.end());
}

}  // namespace

AdmissibleAnalyzer::AdmissibleAnalyzer(const Hypergraph& h, PowerKind kind)
    : h_(h), kind_(kind), nu_(nu_F(h, kind)) {
    const int n = h.n_vertices();
    // Per-component results repeat heavily across subsets; memoize them.
    std::map<std::uint64_t, std::pair<int, bool>> component_memo;
    auto component_info = [&](VertexSet comp) {
        auto it = component_memo.find(comp.bits());
        if (it != component_memo.end()) return it->second;
        const InducedSubgraph sub = induced(h_, comp);
        std::pair<int, bool> info{nu_F(sub.hypergraph, kind_),
                                  is_principal_full_support(sub.hypergraph, kind_)};
        component_memo.emplace(comp.bits(), info);
        return info;
    };

    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        const VertexSet c{bits};
        SubsetData data;
        data.C = c;
        data.components = components_within(h_, c);
        // Condition (4) fails outright for any part containing a vertex
        // outside every generator, so sets with isolated vertices in H[C]
        // can never be admissible (see the part-product decomposition).
        bool isolated = false;
        for (VertexSet comp : data.components)
            if (comp.size() == 1) isolated = true;
        if (isolated) continue;
        data.all_principal = true;
        for (VertexSet comp : data.components) {
            auto [nu, principal] = component_info(comp);
            data.nu_sum += nu;
            data.all_principal = data.all_principal && principal;
        }
        if (!data.all_principal) continue;
        subsets_.push_back(std::move(data));
    }
}

AdmResult AdmissibleAnalyzer::adm(int k) const {
    if (k < 1 || k > nu_)
        throw std::invalid_argument("adm_number: k must lie in [1, nu_F]");
    const SubsetData* best = nullptr;
    int best_score = -1;
    for (const SubsetData& data : subsets_) {
        const int t = static_cast<int>(data.components.size());
        // A valid partition into r groups exists iff some r in [1, t]
        // satisfies k <= nu_sum <= r + k - 1; grouping components never
        // changes nu_sum (F-numbers add over disjoint unions) nor
        // principality (products of principal full-support ideals).
        if (data.nu_sum < k || data.nu_sum > t + k - 1) continue;
        const int score = data.C.size() - data.nu_sum;
        if (score > best_score ||
            (score == best_score && best != nullptr && lex_less(data.C, best->C))) {
            best_score = score;
            best = &data;
        }
    }
    if (best == nullptr)
        throw std::logic_error("adm_number: no admissible set found in range (existence fails)");

    // Fewest parts: r = max(1, nu_sum - k + 1). First r-1 components stay
    // alone, the tail is merged into the last part.
    const int r = std::max(1, best->nu_sum - k + 1);
    AdmResult result;
    result.value = best_score;
    result.certificate.C = best->C;
    result.certificate.kind = kind_;
    result.certificate.k = k;
    result.certificate.score = best_score;
    std::vector<VertexSet> comps = best->components;
    std::sort(comps.begin(), comps.end(),
              [](VertexSet a, VertexSet b) { return a.bits() < b.bits(); });
    for (int i = 0; i < r - 1; ++i) result.certificate.parts.push_back(comps[static_cast<std::size_t>(i)]);
    VertexSet tail;
    for (std::size_t i = static_cast<std::size_t>(r) - 1; i < comps.size(); ++i) tail |= comps[i];
    result.certificate.parts.push_back(tail);
    for (VertexSet p : result.certificate.parts) {
        const InducedSubgraph part = induced(h_, p);
        result.certificate.part_nu.push_back(nu_F(part.hypergraph, kind_));
    }
    return result;
}

AdmResult adm_number(const Hypergraph& h, int k, PowerKind kind) {
    return AdmissibleAnalyzer(h, kind).adm(k);
}

AdmResult ind_number(const Hypergraph& g, int k) {
    const int beta = cover_number(g);
    if (k < 1 || k > beta) throw std::invalid_argument("ind_number: k must lie in [1, beta]");

    // Independent beta/alpha route: scan k-admissible sets directly and
    // score them by the independence number of the induced subgraph.
    int best_score = -1;
    VertexSet best_c;
    const int n = g.n_vertices();
    for (std::uint64_t bits = 1; bits < (std::uint64_t{1} << n); ++bits) {
        const VertexSet c{bits};
        const std::vector<VertexSet> comps = components_within(g, c);
        bool valid = true;
        int beta_sum = 0;
        for (VertexSet comp : comps) {
            const InducedSubgraph sub = induced(g, comp);
            if (comp.size() == 1 || !is_principal_full_support(sub.hypergraph,
                                                               PowerKind::SquarefreeSymbolic)) {
                valid = false;
                break;
            }
            beta_sum += cover_number(sub.hypergraph);
        }
        if (!valid) continue;
        const int t = static_cast<int>(comps.size());
        if (beta_sum < k || beta_sum > t + k - 1) continue;
        const InducedSubgraph sub = induced(g, c);
        const int alpha = independence_number(sub.hypergraph);
        if (alpha > best_score || (alpha == best_score && lex_less(c, best_c))) {
            best_score = alpha;
            best_c = c;
        }
    }
    if (best_score < 0)
        throw std::logic_error("ind_number: no admissible set found in range (existence fails)");

    const AdmResult generic = adm_number(g, k, PowerKind::SquarefreeSymbolic);
    if (generic.value != best_score)
        throw std::logic_error("ind_number: beta/alpha route disagrees with the generic adm path");
    return generic;
}

LowerBoundReport lower_bound_check(const Hypergraph& h, int k, PowerKind kind,
                                   const BettiOptions& opts) {
    LowerBoundReport report;
    report.k = k;
    report.kind = kind;
    const AdmResult adm = adm_number(h, k, kind);
    report.adm = adm.value;
    report.certificate = adm.certificate;
    report.reg = regularity(power_of_kind(h, k, kind), opts);
    report.slack = report.reg - (report.adm + k);
    return report;
}

}  // namespace sqfpow

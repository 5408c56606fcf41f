#ifndef SQFPOW_CAMPAIGN_HPP
#define SQFPOW_CAMPAIGN_HPP

#include <optional>
#include <string>
#include <vector>

#include "sqfpow/admissible.hpp"
#include "sqfpow/cache.hpp"
#include "sqfpow/graph_classes.hpp"

namespace sqfpow {

enum class Family { All, Chordal, Block, CmChordal, Complete, DisjointEdges, Custom };

std::optional<Family> family_from_string(const std::string& s);
std::string to_string(Family f);

struct CampaignSpec {
    Family family = Family::All;
    int min_n = 1;
    int max_n = 5;
    bool connected_only = false;
    std::optional<int> fixed_k;  // otherwise every 1 <= k <= nu_F
    PowerKind kind = PowerKind::SquarefreeSymbolic;
    FieldChoice field = FieldChoice::rationals();
    /// Rows must satisfy reg = adm + k exactly, not just slack >= 0.
    bool expect_equality = false;
    long long reg_budget_ms = 5000;
    long long campaign_budget_ms = 600000;
    int workers = 1;
    int enumeration_guard = 8;
    bool timings = false;  // measured times make reports non-byte-stable
    std::vector<Hypergraph> custom_inputs;
};

struct CampaignRow {
    std::string graph6;  // empty for non-graph hypergraphs
    int n = 0;
    int k = 0;
    std::string status;  // "ok" | "skipped" | "violated"
    std::optional<int> reg;
    std::optional<int> adm_or_ind;
    std::optional<int> slack;
    /// Surfaces the block-graph theorem's stated "k <= nu(G)" range against
    /// the verified 1 <= k <= beta(G) sweep.
    bool k_within_induced_matching = false;
    std::optional<AdmissibleCertificate> certificate;
    std::string note;
    long long elapsed_ms = 0;
};

struct CampaignSummary {
    int instances = 0;
    int equalities = 0;
    int strict_inequalities = 0;
    int failures = 0;  // theorem violations
    int skipped = 0;
};

struct CampaignReport {
    CampaignSpec spec;
    std::vector<CampaignRow> rows;
    CampaignSummary summary;
    /// 0 = all checks hold, 2 = theorem violation, 3 = budget exhausted.
    int exit_code = 0;
    std::uint64_t cache_hits = 0;
    std::uint64_t cache_misses = 0;
};

/// Graphs belonging to the spec's family on exactly n vertices.
std::vector<Hypergraph> family_members(const CampaignSpec& spec, int n);

CampaignReport run_campaign(const CampaignSpec& spec, RegCache* cache);

std::string report_to_json(const CampaignReport& report);
std::string report_to_csv(const CampaignReport& report);

}  // namespace sqfpow

#endif  // SQFPOW_CAMPAIGN_HPP

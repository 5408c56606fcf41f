#include "sqfpow/campaign.hpp"

#include <atomic>
#include <chrono>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "sqfpow/io.hpp"

namespace sqfpow {

std::optional<Family> family_from_string(const std::string& s) {
    if (s == "all") return Family::All;
    if (s == "chordal") return Family::Chordal;
    if (s == "block") return Family::Block;
    if (s == "cm_chordal") return Family::CmChordal;
    if (s == "complete") return Family::Complete;
    if (s == "disjoint_edges") return Family::DisjointEdges;
    if (s == "custom") return Family::Custom;
    return std::nullopt;
}

std::string to_string(Family f) {
    switch (f) {
        case Family::All: return "all";
        case Family::Chordal: return "chordal";
        case Family::Block: return "block";
        case Family::CmChordal: return "cm_chordal";
        case Family::Complete: return "complete";
        case Family::DisjointEdges: return "disjoint_edges";
        case Family::Custom: return "custom";
    }
    return "all";
}

std::vector<Hypergraph> family_members(const CampaignSpec& spec, int n) {
    std::vector<Hypergraph> out;
    GraphClassFilter filter;
    if (spec.connected_only) filter.connected = true;
    switch (spec.family) {
        case Family::All:
            break;
        case Family::Chordal:
            filter.chordal = true;
            break;
        case Family::Block:
            filter.block_graph = true;
            break;
        case Family::CmChordal:
            filter.cm_chordal = true;
            break;
        case Family::Complete: {
            if (n >= 1) {
                std::vector<std::pair<int, int>> pairs;
                for (int i = 0; i < n; ++i)
                    for (int j = i + 1; j < n; ++j) pairs.emplace_back(i, j);
                out.push_back(Graph(n, pairs).hypergraph());
            }
            return out;
        }
        case Family::DisjointEdges: {
            if (n % 2 == 0 && n >= 2) {
                std::vector<std::pair<int, int>> pairs;
                for (int i = 0; i < n / 2; ++i) pairs.emplace_back(2 * i, 2 * i + 1);
                out.push_back(Graph(n, pairs).hypergraph());
            }
            return out;
        }
        case Family::Custom: {
            for (const Hypergraph& h : spec.custom_inputs)
                if (h.n_vertices() == n) out.push_back(h);
            return out;
        }
    }
    for (const Graph& g : enumerate_graphs(n, filter, spec.enumeration_guard))
        out.push_back(g.hypergraph());
    return out;
}

namespace {

struct RowTask {
    Hypergraph h;
    std::string graph6;
    int k = 0;
    bool k_within_induced_matching = false;
};

CampaignRow execute_row(const RowTask& task, const CampaignSpec& spec, RegCache* cache,
                        const std::chrono::steady_clock::time_point& campaign_deadline) {
    CampaignRow row;
    row.graph6 = task.graph6;
    row.n = task.h.n_vertices();
    row.k = task.k;
    row.k_within_induced_matching = task.k_within_induced_matching;
    const auto started = std::chrono::steady_clock::now();
    if (started > campaign_deadline) {
        row.status = "skipped";
        row.note = "campaign budget exhausted";
        return row;
    }
    try {
        BettiOptions opts;
        opts.field = spec.field;
        opts.deadline = Deadline::after_ms(spec.reg_budget_ms);

        const SqfIdeal power = power_of_kind(task.h, task.k, spec.kind);
        row.reg = cached_regularity(power, opts, cache);

        const AdmResult adm = spec.kind == PowerKind::SquarefreeSymbolic && task.h.is_graph()
                                  ? ind_number(task.h, task.k)
                                  : adm_number(task.h, task.k, spec.kind);
        row.adm_or_ind = adm.value;
        row.certificate = adm.certificate;
        row.slack = *row.reg - (adm.value + task.k);

        if (*row.slack < 0) {
            row.status = "violated";
            row.note = "lower bound violated";
        } else if (spec.expect_equality && *row.slack != 0) {
            row.status = "violated";
            row.note = "expected equality, got slack " + std::to_string(*row.slack);
        } else {
            row.status = "ok";
        }
    } catch (const BudgetError& e) {
        row.status = "skipped";
        row.note = e.what();
    }
    row.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - started)
                         .count();
    return row;
}

}  // namespace

CampaignReport run_campaign(const CampaignSpec& spec, RegCache* cache) {
    CampaignReport report;
    report.spec = spec;

    std::vector<RowTask> tasks;
    for (int n = spec.min_n; n <= spec.max_n; ++n) {
        for (const Hypergraph& h : family_members(spec, n)) {
            RowTask base;
            base.h = h;
            base.graph6 = h.is_graph() ? to_graph6(Graph(h)) : "";
            const int top = nu_F(h, spec.kind);
            const int ind_match = induced_matching_number(h);
            if (spec.fixed_k) {
                if (*spec.fixed_k >= 1 && *spec.fixed_k <= top) {
                    base.k = *spec.fixed_k;
                    base.k_within_induced_matching = *spec.fixed_k <= ind_match;
                    tasks.push_back(base);
                }
            } else {
                for (int k = 1; k <= top; ++k) {
                    base.k = k;
                    base.k_within_induced_matching = k <= ind_match;
                    tasks.push_back(base);
                }
            }
        }
    }

    const auto campaign_deadline =
        std::chrono::steady_clock::now() + std::chrono::milliseconds(spec.campaign_budget_ms);
    report.rows.resize(tasks.size());
    const int workers = std::max(1, spec.workers);
    std::atomic<std::size_t> next{0};
    auto work = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= tasks.size()) return;
            report.rows[i] = execute_row(tasks[i], spec, cache, campaign_deadline);
        }
    };
    if (workers == 1) {
        work();
    } else {
        std::vector<std::thread> pool;
        for (int w = 0; w < workers; ++w) pool.emplace_back(work);
        for (std::thread& t : pool) t.join();
    }

    for (const CampaignRow& row : report.rows) {
        ++report.summary.instances;
        if (row.status == "violated") ++report.summary.failures;
        else if (row.status == "skipped") ++report.summary.skipped;
        else if (row.slack && *row.slack == 0) ++report.summary.equalities;
        else ++report.summary.strict_inequalities;
    }
    report.exit_code = report.summary.failures > 0 ? 2 : (report.summary.skipped > 0 ? 3 : 0);
    if (cache != nullptr) {
        const auto stats = cache->stats();
        report.cache_hits = stats.hits;
        report.cache_misses = stats.misses;
    }
    return report;
}

namespace {

nlohmann::json row_to_json(const CampaignRow& row, bool timings) {
    nlohmann::json j;
    j["graph6"] = row.graph6;
    j["n"] = row.n;
    j["k"] = row.k;
    j["status"] = row.status;
    if (row.reg) j["reg"] = *row.reg;
    if (row.adm_or_ind) j["adm_or_ind"] = *row.adm_or_ind;
    if (row.slack) j["slack"] = *row.slack;
    j["k_within_induced_matching"] = row.k_within_induced_matching;
    if (row.certificate) j["certificate"] = nlohmann::json::parse(row.certificate->to_json());
    if (!row.note.empty()) j["note"] = row.note;
    if (timings) j["elapsed_ms"] = row.elapsed_ms;
    return j;
}

}  // namespace

std::string report_to_json(const CampaignReport& report) {
    nlohmann::json j;
    j["spec"]["family"] = to_string(report.spec.family);
    j["spec"]["min_n"] = report.spec.min_n;
    j["spec"]["max_n"] = report.spec.max_n;
    j["spec"]["connected_only"] = report.spec.connected_only;
    if (report.spec.fixed_k) j["spec"]["k"] = *report.spec.fixed_k;
    j["spec"]["kind"] = to_string(report.spec.kind);
    j["spec"]["field"] = report.spec.field.to_string();
    j["spec"]["expect_equality"] = report.spec.expect_equality;
    j["rows"] = nlohmann::json::array();
    for (const CampaignRow& row : report.rows) j["rows"].push_back(row_to_json(row, report.spec.timings));
    j["summary"]["instances"] = report.summary.instances;
    j["summary"]["equalities"] = report.summary.equalities;
    j["summary"]["strict_inequalities"] = report.summary.strict_inequalities;
    j["summary"]["failures"] = report.summary.failures;
    j["summary"]["skipped"] = report.summary.skipped;
    j["exit_code"] = report.exit_code;
    j["cache"]["hits"] = report.cache_hits;
    j["cache"]["misses"] = report.cache_misses;
    return j.dump(2);
}

std::string report_to_csv(const CampaignReport& report) {
    std::ostringstream out;
    out << "graph6,n,k,status,reg,adm_or_ind,slack,k_within_induced_matching\n";
    for (const CampaignRow& row : report.rows) {
        out << row.graph6 << ',' << row.n << ',' << row.k << ',' << row.status << ',';
        if (row.reg) out << *row.reg;
        out << ',';
        if (row.adm_or_ind) out << *row.adm_or_ind;
        out << ',';
        if (row.slack) out << *row.slack;
        out << ',' << (row.k_within_induced_matching ? "true" : "false") << '\n';
    }
    return out.str();
}

}  // namespace sqfpow

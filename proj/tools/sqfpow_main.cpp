#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "sqfpow/admissible.hpp"
#include "sqfpow/campaign.hpp"
#include "sqfpow/graph_classes.hpp"
#include "sqfpow/io.hpp"

namespace {

using namespace sqfpow;

std::string read_stream(std::istream& in) {
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

std::string read_input_or_stdin(const std::string& arg) {
    if (arg.empty() || arg == "-") return read_stream(std::cin);
    return arg;
}

std::vector<Hypergraph> parse_graph_lines(const std::string& text) {
    std::vector<Hypergraph> out;
    std::istringstream in(text);
    std::string line;
    int line_no = 0;
    while (std::getline(in, line)) {
        ++line_no;
        while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '{')
            out.push_back(hypergraph_from_json(line));
        else
            out.push_back(from_graph6(line, line_no).hypergraph());
    }
    return out;
}

std::string default_cache_dir(const std::string& flag_value) {
    if (!flag_value.empty()) return flag_value;
    if (const char* env = std::getenv("SQFPOW_CACHE_DIR")) return env;
    return "";
}

struct CommonOpts {
    std::string kind = "symbolic";
    std::string field = "q";
    std::string format = "json";
    std::string cache_dir;
    long long budget_ms = 5000;
    int workers = 1;
};

void add_common(CLI::App* cmd, CommonOpts& opts) {
    cmd->add_option("--kind", opts.kind, "Power kind: ordinary|symbolic")
        ->check(CLI::IsMember({"ordinary", "symbolic"}));
    cmd->add_option("--field", opts.field, "Coefficient field: q|gf2|gf3|gf<p>");
    cmd->add_option("--format", opts.format, "Output format (json is authoritative)")
        ->check(CLI::IsMember({"json", "csv"}));
    cmd->add_option("--cache-dir", opts.cache_dir,
                    "Regularity cache directory (default: $SQFPOW_CACHE_DIR)");
    cmd->add_option("--budget-ms", opts.budget_ms, "Per-regularity-call time budget");
    cmd->add_option("--workers", opts.workers, "Concurrent campaign rows");
}

FieldChoice field_of(const CommonOpts& opts) {
    auto f = FieldChoice::parse(opts.field);
    if (!f) throw CLI::ValidationError("--field", "unknown field " + opts.field);
    return *f;
}

PowerKind kind_of(const CommonOpts& opts) { return *power_kind_from_string(opts.kind); }

int cmd_invariants(const std::string& input, const CommonOpts& common,
                   const std::optional<int>& fixed_k, bool with_oracle_check) {
    const Hypergraph h = parse_graph_input(read_input_or_stdin(input));
    const PowerKind kind = kind_of(common);
    BettiOptions opts;
    opts.field = field_of(common);
    opts.deadline = Deadline::after_ms(common.budget_ms);

    std::unique_ptr<RegCache> cache;
    const std::string dir = default_cache_dir(common.cache_dir);
    if (!dir.empty()) cache = std::make_unique<RegCache>(dir);

    nlohmann::json j;
    j["n"] = h.n_vertices();
    j["edges"] = nlohmann::json::parse(hypergraph_to_json(h))["edges"];
    j["alpha"] = independence_number(h);
    j["beta"] = cover_number(h);
    j["matching_number"] = matching_number(h);
    j["induced_matching_number"] = induced_matching_number(h);
    j["kind"] = to_string(kind);
    const int nu = nu_F(h, kind);
    j["nu_F"] = nu;
    if (h.is_graph()) {
        const Graph g(h);
        j["graph6"] = to_graph6(g);
        j["classes"] = nlohmann::json::parse(classify(g).to_json());
    }

    j["powers"] = nlohmann::json::array();
    for (int k = 1; k <= nu; ++k) {
        if (fixed_k && *fixed_k != k) continue;
        nlohmann::json row;
        row["k"] = k;
        const SqfIdeal power = power_of_kind(h, k, kind);
        row["gens"] = nlohmann::json::parse(power.to_json())["gens"];
        row["reg"] = cached_regularity(power, opts, cache.get());
        const AdmResult adm = kind == PowerKind::SquarefreeSymbolic && h.is_graph()
                                  ? ind_number(h, k)
                                  : adm_number(h, k, kind);
        row[kind == PowerKind::SquarefreeSymbolic ? "ind" : "adm"] = adm.value;
        row["slack"] = row["reg"].get<int>() - (adm.value + k);
        row["certificate"] = nlohmann::json::parse(adm.certificate.to_json());
        if (with_oracle_check && kind == PowerKind::SquarefreeSymbolic)
            row["oracle_agrees"] = power == sqf_symbolic_power_oracle(h, k);
        j["powers"].push_back(row);
    }
    std::cout << j.dump(2) << "\n";
    return 0;
}

int cmd_verify(const CommonOpts& common, CampaignSpec spec, const std::string& graphs_arg) {
    spec.kind = kind_of(common);
    spec.field = field_of(common);
    spec.reg_budget_ms = common.budget_ms;
    spec.workers = common.workers;
    if (spec.family == Family::Custom) spec.custom_inputs = parse_graph_lines(read_input_or_stdin(graphs_arg));

    std::unique_ptr<RegCache> cache;
    const std::string dir = default_cache_dir(common.cache_dir);
    if (!dir.empty()) cache = std::make_unique<RegCache>(dir);

    const CampaignReport report = run_campaign(spec, cache.get());
    std::cout << (common.format == "csv" ? report_to_csv(report) : report_to_json(report)) << "\n";
    return report.exit_code;
}

int cmd_mixed_sum(const std::string& input_a, const std::string& input_b, const CommonOpts& common,
                  std::optional<int> fixed_n) {
    const Hypergraph ha = parse_graph_input(input_a);
    const Hypergraph hb = parse_graph_input(input_b);
    const PowerKind kind = kind_of(common);
    BettiOptions opts;
    opts.field = field_of(common);
    opts.deadline = Deadline::after_ms(common.budget_ms);

    auto [fa, fb] = embed_disjoint(Filtration::from_power_kind(ha, kind),
                                   Filtration::from_power_kind(hb, kind));
    nlohmann::json j;
    j["kind"] = to_string(kind);
    j["nu_a"] = fa.nu();
    j["nu_b"] = fb.nu();
    j["rows"] = nlohmann::json::array();
    bool all_equal = true;
    for (int n = 0; n <= fa.nu() + fb.nu(); ++n) {
        if (fixed_n && *fixed_n != n) continue;
        const MixedSumRegularityReport r = verify_mixed_sum_regularity(fa, fb, n, opts);
        nlohmann::json row;
        row["n"] = n;
        row["reg_direct"] = r.reg_direct;
        row["formula_first"] = r.formula_first;
        row["formula_second"] = r.formula_second;
        row["window_first_i"] = {r.first_i.lo, r.first_i.hi};
        row["window_first_j"] = {r.first_j.lo, r.first_j.hi};
        row["window_second_i"] = {r.second_i.lo, r.second_i.hi};
        row["window_second_j"] = {r.second_j.lo, r.second_j.hi};
        row["equal"] = r.equal;
        all_equal = all_equal && r.equal;
        j["rows"].push_back(row);
    }
    j["all_equal"] = all_equal;
    std::cout << j.dump(2) << "\n";
    return all_equal ? 0 : 2;
}

int cmd_axioms(const CommonOpts& common, const std::string& graphs_arg, int max_n) {
    const PowerKind kind = kind_of(common);
    std::vector<Hypergraph> samples;
    if (!graphs_arg.empty()) {
        samples = parse_graph_lines(read_input_or_stdin(graphs_arg));
    } else {
        for (int n = 1; n <= max_n; ++n)
            for (const Graph& g : enumerate_graphs(n)) samples.push_back(g.hypergraph());
    }
    const AxiomReport report = check_splf_axioms(samples, kind);
    nlohmann::json j;
    j["kind"] = to_string(kind);
    j["samples"] = samples.size();
    j["checks_run"] = report.checks_run;
    j["all_hold"] = report.all_hold;
    j["violations"] = nlohmann::json::array();
    for (const AxiomViolation& v : report.violations) {
        nlohmann::json row;
        row["axiom"] = std::string(1, v.axiom);
        row["description"] = v.description;
        j["violations"].push_back(row);
    }
    std::cout << j.dump(2) << "\n";
    return report.all_hold ? 0 : 2;
}

int cmd_cache(const std::string& action, const CommonOpts& common,
              const std::vector<std::string>& cert_files) {
    const std::string dir = default_cache_dir(common.cache_dir);
    if (dir.empty()) {
        std::cerr << "no cache directory: pass --cache-dir or set SQFPOW_CACHE_DIR\n";
        return 1;
    }
    RegCache cache(dir);
    nlohmann::json j;
    int exit_code = 0;
    if (action == "stats") {
        const auto s = cache.stats();
        j["entries"] = s.entries;
        j["bytes"] = s.bytes;
    } else if (action == "gc") {
        j["removed"] = cache.gc();
    } else if (action == "audit") {
        BettiOptions opts;
        opts.deadline = Deadline::after_ms(common.budget_ms);
        const auto result = cache.audit([&](const SqfIdeal& ideal, const FieldChoice& field) {
            BettiOptions o = opts;
            o.field = field;
            return regularity(ideal, o);
        });
        j["checked"] = result.checked;
        j["mismatched"] = result.mismatched;
        j["bad_entries"] = result.bad_entries;
        if (result.mismatched > 0) exit_code = 2;

        j["certificates"] = nlohmann::json::array();
        for (const std::string& file : cert_files) {
            std::ifstream in(file);
            if (!in) {
                std::cerr << "cannot open certificate file " << file << "\n";
                return 1;
            }
            nlohmann::json cert_json = nlohmann::json::parse(read_stream(in));
            const Hypergraph h = parse_graph_input(cert_json.at("graph").get<std::string>());
            const AdmissibleCertificate cert =
                AdmissibleCertificate::from_json(cert_json.at("certificate").dump());
            const CertificateCheck check = validate_certificate(cert, h);
            nlohmann::json row;
            row["file"] = file;
            row["ok"] = check.ok;
            if (!check.ok) {
                row["violated_condition"] = check.violated_condition;
                row["detail"] = check.detail;
                exit_code = 2;
            }
            j["certificates"].push_back(row);
        }
    }
    std::cout << j.dump(2) << "\n";
    return exit_code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"sqfpow: squarefree powers and squarefree symbolic powers of edge ideals"};
    app.require_subcommand(1);

    CommonOpts common;

    // invariants
    auto* invariants = app.add_subcommand(
        "invariants", "Invariants, power generators, regularity and adm/ind for one input");
    std::string inv_input;
    invariants->add_option("input", inv_input, "graph6 string or JSON (default: stdin)");
    std::optional<int> inv_k;
    invariants->add_option("--k", inv_k, "Restrict to one power");
    bool inv_oracle = false;
    invariants->add_flag("--oracle-check", inv_oracle,
                         "Cross-check symbolic powers against the GenIdeal oracle");
    add_common(invariants, common);

    // verify
    auto* verify = app.add_subcommand("verify", "Run a verification campaign over a graph family");
    std::string family_name = "all";
    CampaignSpec spec;
    std::string verify_graphs;
    verify->add_option("--family", family_name,
                       "all|chordal|block|cm_chordal|complete|disjoint_edges|custom")
        ->check(CLI::IsMember(
            {"all", "chordal", "block", "cm_chordal", "complete", "disjoint_edges", "custom"}));
    verify->add_option("--min-n", spec.min_n, "Smallest vertex count");
    verify->add_option("--max-n", spec.max_n, "Largest vertex count");
    verify->add_flag("--connected", spec.connected_only, "Connected graphs only");
    std::optional<int> verify_k;
    verify->add_option("--k", verify_k, "Fixed k (default: all 1 <= k <= nu_F)");
    verify->add_flag("--expect-equality", spec.expect_equality,
                     "Fail rows where reg != adm + k (exact-formula theorems)");
    verify->add_option("--campaign-budget-ms", spec.campaign_budget_ms, "Whole-campaign budget");
    verify->add_option("--enum-guard", spec.enumeration_guard,
                       "Cost guard for exhaustive enumeration");
    verify->add_flag("--timings", spec.timings, "Include elapsed_ms (breaks byte-stability)");
    verify->add_option("--graphs", verify_graphs,
                       "For --family custom: graph6/JSON lines ('-' = stdin)");
    add_common(verify, common);

    // mixed-sum
    auto* mixed = app.add_subcommand("mixed-sum",
                                     "Mixed-sum regularity against the Tor-vanishing formula");
    std::string mixed_a, mixed_b;
    mixed->add_option("first", mixed_a, "First graph (graph6 or JSON)")->required();
    mixed->add_option("second", mixed_b, "Second graph (graph6 or JSON)")->required();
    std::optional<int> mixed_n;
    mixed->add_option("--n", mixed_n, "Single n (default: every 0 <= n <= nu_I + nu_J)");
    add_common(mixed, common);

    // axioms
    auto* axioms = app.add_subcommand("axioms", "Check the squarefree-power-like axioms");
    std::string axioms_graphs;
    int axioms_max_n = 4;
    axioms->add_option("--graphs", axioms_graphs, "graph6/JSON lines ('-' = stdin)");
    axioms->add_option("--max-n", axioms_max_n, "Sample all graphs up to this size instead");
    add_common(axioms, common);

    // cache
    auto* cache_cmd = app.add_subcommand("cache", "Cache maintenance: gc | stats | audit");
    std::string cache_action;
    cache_cmd->add_option("action", cache_action, "gc|stats|audit")
        ->required()
        ->check(CLI::IsMember({"gc", "stats", "audit"}));
    std::vector<std::string> cert_files;
    cache_cmd->add_option("--certs", cert_files, "Certificate files to re-validate during audit");
    add_common(cache_cmd, common);

    CLI11_PARSE(app, argc, argv);

    try {
        if (invariants->parsed()) return cmd_invariants(inv_input, common, inv_k, inv_oracle);
        if (verify->parsed()) {
            spec.family = *family_from_string(family_name);
            spec.fixed_k = verify_k;
            return cmd_verify(common, spec, verify_graphs);
        }
        if (mixed->parsed()) return cmd_mixed_sum(mixed_a, mixed_b, common, mixed_n);
        if (axioms->parsed()) return cmd_axioms(common, axioms_graphs, axioms_max_n);
        if (cache_cmd->parsed()) return cmd_cache(cache_action, common, cert_files);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 1;
    } catch (const BudgetError& e) {
        std::cerr << "budget error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}

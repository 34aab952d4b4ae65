#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include <omp.h>

#include "CLI11.hpp"

#include "domainlab/report.hpp"

namespace dl = domainlab;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitError = 1;
constexpr int kExitInconclusive = 2;

void write_out(const std::string& text, const std::string& path) {
    if (path.empty() || path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path);
    if (!out) throw dl::ParseError("cannot write to " + path);
    out << text;
}

dl::Tree load_tree(const std::string& path, const dl::Domain* d) {
    std::vector<std::string> labels;
    const std::vector<std::string>* fixed = nullptr;
    std::vector<std::string> domain_labels;
    if (d) {
        domain_labels = d->labels();
        fixed = &domain_labels;
    }
    return dl::Tree(dl::load_graph_file(path, &labels, fixed));
}

struct Options {
    std::string domain_file;
    std::string tree_file;
    std::string rule_file;
    std::string out_file;
    std::string format = "text";
    std::string family;
    std::string threshold;
    std::vector<std::string> thresholds;
    std::string axioms = "unanimity,sp,topsonly,anon,inv";
    std::uint64_t budget = 100'000'000;
    int threads = 0;
    int micro_n = 0;
    bool dot = false;
    bool weak = false;
    bool decompose = false;
    bool strict_invariance = false;
    int pnt_i = 0, pnt_j = 1;
};

int cmd_check(const Options& opt) {
    const dl::Domain d = dl::load_domain_file(opt.domain_file);
    const dl::RichnessReport report = dl::check_unidimensional(d);
    if (opt.format == "json")
        write_out(dl::dump(dl::richness_to_json(report, d)), opt.out_file);
    else
        write_out(dl::richness_to_text(report, d), opt.out_file);
    return kExitOk;
}

int cmd_classify(const Options& opt) {
    const dl::Domain d = dl::load_domain_file(opt.domain_file);
    dl::Budget budget{opt.budget, 0};
    const dl::Verdict verdict = dl::classify(d, budget);
    if (opt.format == "json")
        write_out(dl::dump(dl::verdict_to_json(verdict, d)), opt.out_file);
    else
        write_out(dl::verdict_to_text(verdict, d), opt.out_file);
    return verdict.taxonomy == dl::Taxonomy::Inconclusive ? kExitInconclusive : kExitOk;
}

int cmd_classify_family(const Options& opt) {
    const dl::Domain d = dl::load_domain_file(opt.domain_file);
    dl::Budget budget{opt.budget, 0};
    dl::Json out;
    out["schema_version"] = dl::kSchemaVersion;
    out["domain"] = d.name();
    out["sp"] = dl::certify_result_to_json(dl::certify_sp_domain(d, budget), d);
    out["ssp"] = dl::certify_result_to_json(dl::certify_ssp_domain(d, budget), d);
    out["hybrid"] = dl::certify_result_to_json(dl::certify_hybrid_domain(d, budget), d);
    out["sh"] = dl::certify_result_to_json(dl::certify_sh_domain(d, budget), d);
    write_out(dl::dump(out), opt.out_file);
    for (const char* key : {"sp", "ssp", "hybrid", "sh"})
        if (out[key]["status"] == "inconclusive") return kExitInconclusive;
    return kExitOk;
}

int cmd_gen(const Options& opt) {
    const dl::Tree t = load_tree(opt.tree_file, nullptr);
    std::vector<std::string> labels;
    dl::load_graph_file(opt.tree_file, &labels, nullptr);
    dl::FamilyKind kind;
    kind.tree = t;
    if (opt.family == "sp") {
        kind.tag = dl::Family::SP;
    } else if (opt.family == "ssp") {
        kind.tag = dl::Family::SSP;
    } else if (opt.family == "hybrid") {
        kind.tag = dl::Family::Hybrid;
    } else if (opt.family == "sh") {
        kind.tag = dl::Family::SH;
    } else {
        throw dl::ParseError("unknown family: " + opt.family);
    }
    auto label_id = [&](const std::string& lab) -> dl::AltId {
        for (size_t i = 0; i < labels.size(); ++i)
            if (labels[i] == lab) return static_cast<dl::AltId>(i);
        throw dl::ParseError("unknown alternative label: " + lab);
    };
    if (kind.tag == dl::Family::SSP) {
        if (opt.threshold.empty()) throw dl::ParseError("ssp needs --threshold");
        kind.threshold = label_id(opt.threshold);
    }
    if (kind.tag == dl::Family::Hybrid || kind.tag == dl::Family::SH) {
        if (opt.thresholds.size() != 2) throw dl::ParseError("need --thresholds A B");
        kind.a = label_id(opt.thresholds[0]);
        kind.b = label_id(opt.thresholds[1]);
    }
    const dl::Domain g = dl::gen_family(kind, dl::kGenCap, &labels);
    write_out(dl::domain_to_text(g), opt.out_file);
    return kExitOk;
}

int cmd_graph(const Options& opt) {
    const dl::Domain d = dl::load_domain_file(opt.domain_file);
    const dl::Graph g =
        opt.weak ? dl::weak_adjacency_graph(d) : dl::adjacency_graph(d);
    if (opt.dot) {
        write_out(dl::to_dot(g, d.labels()), opt.out_file);
    } else {
        std::string text;
        for (auto [a, b] : g.edges())
            text += "edge: " + d.label(a) + " " + d.label(b) + "\n";
        write_out(text, opt.out_file);
    }
    return kExitOk;
}

int cmd_rule_verify(const Options& opt) {
    const dl::Domain d = dl::load_domain_file(opt.domain_file);
    std::ifstream in(opt.rule_file);
    if (!in) throw dl::ParseError("cannot open rule file: " + opt.rule_file);
    dl::Json spec;
    try {
        in >> spec;
    } catch (const nlohmann::json::exception& e) {
        throw dl::ParseError(std::string("invalid rule JSON: ") + e.what());
    }
    const dl::Scf scf = dl::scf_from_json(spec, d);
    dl::CompiledScf f(scf, d);
    dl::Budget budget{opt.budget, 0};
    dl::Json axioms;
    bool budget_hit = false;
    std::istringstream axes(opt.axioms);
    std::string axiom;
    while (std::getline(axes, axiom, ',')) {
        dl::AxiomResult res;
        if (axiom == "unanimity") res = dl::check_unanimity(f, budget);
        else if (axiom == "sp") res = dl::check_strategy_proof(f, budget);
        else if (axiom == "topsonly") res = dl::check_tops_only(f, budget);
        else if (axiom == "anon") res = dl::check_anonymity(f, budget);
        else if (axiom == "inv") res = dl::check_invariance(f, opt.strict_invariance);
        else throw dl::ParseError("unknown axiom token: " + axiom);
        if (res.outcome == dl::Outcome::Budget) budget_hit = true;
        axioms[axiom] = dl::axiom_result_to_json(res, d);
    }
    dl::Json out;
    out["schema_version"] = dl::kSchemaVersion;
    out["domain"] = d.name();
    out["scf"] = dl::scf_to_json(scf, d);
    out["axioms"] = axioms;
    write_out(dl::dump(out), opt.out_file);
    return budget_hit ? kExitInconclusive : kExitOk;
}

int cmd_enum(const Options& opt) {
    const dl::Domain d = dl::load_domain_file(opt.domain_file);
    dl::Budget budget{opt.budget, 0};
    if (opt.micro_n > 0) {
        const dl::EnumResult r = dl::enum_all_sp_rules_micro(d, opt.micro_n, budget);
        write_out(dl::dump(dl::enum_result_to_json(r, d, nullptr)), opt.out_file);
        return r.budget_exceeded ? kExitInconclusive : kExitOk;
    }
    const dl::EnumResult r = dl::enum_topsonly_sp_rules(d, budget);
    if (r.budget_exceeded) {
        write_out(dl::dump(dl::enum_result_to_json(r, d, nullptr)), opt.out_file);
        return kExitInconclusive;
    }
    std::vector<dl::Decomposition> decompositions;
    if (opt.decompose)
        for (const auto& rule : r.rules)
            decompositions.push_back(dl::decompose_rule(rule, d, budget));
    write_out(dl::dump(dl::enum_result_to_json(
                  r, d, opt.decompose ? &decompositions : nullptr)),
              opt.out_file);
    return kExitOk;
}

int cmd_spots(const Options& opt) {
    const dl::Domain d = dl::load_domain_file(opt.domain_file);
    const dl::Tree t = load_tree(opt.tree_file, &d);
    dl::Budget budget{opt.budget, 0};
    const auto spots = dl::find_critical_spots(d, t, budget);
    dl::Json out;
    out["schema_version"] = dl::kSchemaVersion;
    out["domain"] = d.name();
    out["spots"] = dl::spots_to_json(spots, d);
    write_out(dl::dump(out), opt.out_file);
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"domainlab: classify preference domains and verify voting rules"};
    app.require_subcommand(1);
    Options opt;
    app.add_option("--threads", opt.threads, "worker threads (0 = library default)");

    auto add_common = [&](CLI::App* sub, bool needs_domain) {
        if (needs_domain)
            sub->add_option("domain", opt.domain_file, "domain file")->required();
        sub->add_option("--budget", opt.budget, "evaluation budget")
            ->check(CLI::PositiveNumber);
        sub->add_option("-o,--out", opt.out_file, "output path (default stdout)");
        sub->add_option("--format", opt.format, "text|json")
            ->check(CLI::IsMember({"text", "json"}));
    };

    CLI::App* check = app.add_subcommand("check", "richness report");
    add_common(check, true);
    CLI::App* classify = app.add_subcommand("classify", "full classification pipeline");
    add_common(classify, true);
    CLI::App* classify_family =
        app.add_subcommand("classify-family", "family certificates (sp/ssp/hybrid/sh)");
    add_common(classify_family, true);

    CLI::App* gen = app.add_subcommand("gen", "generate a full preference family");
    gen->add_option("--family", opt.family, "sp|hybrid|ssp|sh")->required();
    gen->add_option("--tree", opt.tree_file, "tree file")->required();
    gen->add_option("--threshold", opt.threshold, "SSP threshold label");
    gen->add_option("--thresholds", opt.thresholds, "dual-threshold labels")->expected(2);
    gen->add_option("-o,--out", opt.out_file, "output path (default stdout)");

    CLI::App* graph = app.add_subcommand("graph", "adjacency graph of a domain");
    add_common(graph, true);
    graph->add_flag("--dot", opt.dot, "emit DOT");
    graph->add_flag("--weak", opt.weak, "weak adjacency graph");

    CLI::App* rule = app.add_subcommand("rule", "rule operations");
    CLI::App* rule_verify = rule->add_subcommand("verify", "verify axioms of a rule");
    rule_verify->add_option("--rule", opt.rule_file, "rule spec JSON")->required();
    rule_verify->add_option("--domain", opt.domain_file, "domain file")->required();
    rule_verify->add_option("--axioms", opt.axioms, "comma list: unanimity,sp,topsonly,anon,inv");
    rule_verify->add_flag("--strict-invariance", opt.strict_invariance,
                          "check every reversed pair");
    rule_verify->add_option("--budget", opt.budget, "evaluation budget");
    rule_verify->add_option("-o,--out", opt.out_file, "output path");

    CLI::App* enum_cmd =
        app.add_subcommand("enum", "enumerate two-voter tops-only strategy-proof rules");
    add_common(enum_cmd, true);
    enum_cmd->add_flag("--decompose", opt.decompose, "decompose rules into canonical forms");
    enum_cmd->add_option("--micro", opt.micro_n,
                         "enumerate all strategy-proof rules for n voters (micro instances)");

    CLI::App* spots = app.add_subcommand("spots", "critical spots of a domain on a tree");
    add_common(spots, true);
    spots->add_option("--tree", opt.tree_file, "tree file")->required();

    CLI11_PARSE(app, argc, argv);
    if (opt.threads > 0) omp_set_num_threads(opt.threads);

    try {
        if (check->parsed()) return cmd_check(opt);
        if (classify->parsed()) return cmd_classify(opt);
        if (classify_family->parsed()) return cmd_classify_family(opt);
        if (gen->parsed()) return cmd_gen(opt);
        if (graph->parsed()) return cmd_graph(opt);
        if (rule->parsed() && rule_verify->parsed()) return cmd_rule_verify(opt);
        if (enum_cmd->parsed()) return cmd_enum(opt);
        if (spots->parsed()) return cmd_spots(opt);
        std::cerr << "no subcommand\n";
        return kExitError;
    } catch (const dl::BudgetExhausted& e) {
        std::cerr << "budget: " << e.what() << "\n";
        return kExitInconclusive;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitError;
    }
}

#include "domainlab/report.hpp"

#include <sstream>

namespace domainlab {

std::string dump(const Json& j) { return j.dump(2) + "\n"; }

Json tree_to_json(const Tree& t, const std::vector<std::string>& labels) {
    Json edges = Json::array();
    for (auto [a, b] : t.edges())
        edges.push_back(Json::array({labels[static_cast<size_t>(a)],
                                     labels[static_cast<size_t>(b)]}));
    return Json{{"edges", edges}};
}

namespace {

AltId alt_from_json(const Json& j, const Domain& d) {
    const auto id = d.id_of(j.get<std::string>());
    if (!id) throw ParseError("unknown alternative label: " + j.get<std::string>());
    return *id;
}

Json profile_names(const std::vector<int>& profile, const Domain& d) {
    Json out = Json::array();
    for (int i : profile) out.push_back(d.pref_name(i));
    return out;
}

}  // namespace

Tree tree_from_json(const Json& j, const Domain& d) {
    if (!j.contains("edges")) throw ParseError("tree JSON needs \"edges\"");
    std::vector<std::pair<AltId, AltId>> edges;
    for (const auto& e : j["edges"])
        edges.emplace_back(alt_from_json(e[0], d), alt_from_json(e[1], d));
    return Tree(d.m(), std::move(edges));
}

Json scf_to_json(const Scf& f, const Domain& d) {
    Json out{{"kind", f.kind_name()}, {"n", f.n}};
    if (const auto* pr = std::get_if<ProjectionRule>(&f.body)) {
        out["tree"] = tree_to_json(pr->tree, d.labels());
        out["threshold"] = d.label(pr->threshold);
    } else if (const auto* hy = std::get_if<HybridRuleBody>(&f.body)) {
        out["tree"] = tree_to_json(hy->tree, d.labels());
        out["a"] = d.label(hy->a);
        out["b"] = d.label(hy->b);
        out["voter"] = hy->dictator;
    } else if (const auto* pnt = std::get_if<PntRule>(&f.body)) {
        out["tree"] = tree_to_json(pnt->tree, d.labels());
        out["x"] = d.label(pnt->x);
        out["y"] = d.label(pnt->y);
        out["i"] = pnt->i;
        out["j"] = pnt->j;
    } else if (const auto* dict = std::get_if<DictatorshipRule>(&f.body)) {
        out["voter"] = dict->voter;
    } else if (const auto* ad = std::get_if<AlmostDictatorshipRule>(&f.body)) {
        out["x"] = d.label(ad->x);
        out["y"] = d.label(ad->y);
        out["i"] = ad->i;
        out["j"] = ad->j;
    } else if (const auto* pt = std::get_if<PeakTableRule>(&f.body)) {
        Json rows = Json::array();
        for (AltId x = 0; x < pt->m; ++x) {
            Json row = Json::array();
            for (AltId y = 0; y < pt->m; ++y) row.push_back(d.label(pt->at(x, y)));
            rows.push_back(row);
        }
        out["table"] = rows;
    } else if (const auto* ft = std::get_if<FullTableRule>(&f.body)) {
        Json entries = Json::array();
        for (AltId a : ft->entries) entries.push_back(d.label(a));
        out["entries"] = entries;
    }
    return out;
}

Scf scf_from_json(const Json& j, const Domain& d) {
    const std::string kind = j.at("kind").get<std::string>();
    const int n = j.at("n").get<int>();
    if (kind == "projection")
        return make_projection(tree_from_json(j.at("tree"), d),
                               alt_from_json(j.at("threshold"), d), n);
    if (kind == "hybrid")
        return make_hybrid(tree_from_json(j.at("tree"), d), alt_from_json(j.at("a"), d),
                           alt_from_json(j.at("b"), d), j.at("voter").get<int>(), n);
    if (kind == "pnt")
        return make_pnt(tree_from_json(j.at("tree"), d), alt_from_json(j.at("x"), d),
                        alt_from_json(j.at("y"), d), j.at("i").get<int>(),
                        j.at("j").get<int>(), n);
    if (kind == "dictatorship") return make_dictatorship(j.at("voter").get<int>(), n);
    if (kind == "almost_dictatorship")
        return make_almost_dictatorship(alt_from_json(j.at("x"), d),
                                        alt_from_json(j.at("y"), d),
                                        j.at("i").get<int>(), j.at("j").get<int>(), n);
    if (kind == "peak_table") {
        const auto& rows = j.at("table");
        std::vector<AltId> table;
        for (const auto& row : rows)
            for (const auto& cell : row) table.push_back(alt_from_json(cell, d));
        return make_peak_table(d.m(), std::move(table));
    }
    if (kind == "full_table") {
        std::vector<AltId> entries;
        for (const auto& cell : j.at("entries")) entries.push_back(alt_from_json(cell, d));
        return make_full_table(d, n, std::move(entries));
    }
    throw ParseError("unknown rule kind: " + kind);
}

Json witness_to_json(const AxiomWitness& w, const Domain& d) {
    Json out;
    out["profile"] = profile_names(w.profile, d);
    out["profile_indices"] = w.profile;
    if (!w.other_profile.empty()) {
        out["other_profile"] = profile_names(w.other_profile, d);
        out["other_profile_indices"] = w.other_profile;
    } else {
        out["other_profile"] = nullptr;
    }
    out["voter"] = w.voter >= 0 ? Json(w.voter) : Json(nullptr);
    out["deviation"] = w.deviation >= 0 ? Json(d.pref_name(w.deviation)) : Json(nullptr);
    out["outcome"] = w.outcome_a >= 0 ? Json(d.label(w.outcome_a)) : Json(nullptr);
    out["other_outcome"] = w.outcome_b >= 0 ? Json(d.label(w.outcome_b)) : Json(nullptr);
    return out;
}

Json axiom_result_to_json(const AxiomResult& r, const Domain& d) {
    Json out;
    out["outcome"] = r.outcome == Outcome::Holds   ? "holds"
                     : r.outcome == Outcome::Fails ? "fails"
                                                   : "budget";
    out["evaluations"] = r.evaluations;
    out["witness"] = r.witness ? witness_to_json(*r.witness, d) : Json(nullptr);
    return out;
}

Json richness_to_json(const RichnessReport& r, const Domain& d) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["domain"] = d.name();
    out["m"] = d.m();
    out["prefs"] = d.size();
    out["minimally_rich"] = r.minimally_rich;
    out["path_connected"] = r.path_connected;
    if (r.diversity_witness) {
        out["diversity"] = Json{{"first", d.pref_name(r.diversity_witness->first)},
                                {"second", d.pref_name(r.diversity_witness->second)}};
    } else {
        out["diversity"] = nullptr;
    }
    Json leaves = Json::array();
    for (const auto& lr : r.leaf_reports) {
        Json l;
        l["leaf"] = d.label(lr.leaf);
        Json seconds = Json::array();
        for (AltId s : lr.seconds) seconds.push_back(d.label(s));
        l["seconds"] = seconds;
        l["vacuous"] = lr.vacuous;
        l["holds"] = lr.holds;
        l["witness"] = lr.witness_z ? Json(d.label(*lr.witness_z)) : Json(nullptr);
        leaves.push_back(l);
    }
    out["leaf_symmetry"] = Json{{"holds", r.leaf_symmetry}, {"leaves", leaves}};
    if (r.unique_seconds_witness) {
        out["unique_seconds"] = Json{{"x", d.label(r.unique_seconds_witness->first)},
                                     {"y", d.label(r.unique_seconds_witness->second)}};
    } else {
        out["unique_seconds"] = nullptr;
    }
    out["unidimensional"] = r.unidimensional;
    out["linked"] = r.linked == Linked::Yes    ? "yes"
                    : r.linked == Linked::No   ? "no"
                                               : "unknown";
    return out;
}

Json certificate_to_json(const DomainCertificate& c, const Domain& d) {
    Json out;
    out["family"] = family_name(c.kind.tag);
    out["tree"] = tree_to_json(c.kind.tree, d.labels());
    out["threshold"] =
        c.kind.threshold >= 0 ? Json(d.label(c.kind.threshold)) : Json(nullptr);
    out["a"] = c.kind.a >= 0 ? Json(d.label(c.kind.a)) : Json(nullptr);
    out["b"] = c.kind.b >= 0 ? Json(d.label(c.kind.b)) : Json(nullptr);
    Json fz = Json::array();
    for (AltId v : c.free_zone) fz.push_back(d.label(v));
    out["free_zone"] = fz;
    out["degenerate"] = c.degenerate;
    out["conditions"] = Json{{"i", c.cond_i},
                             {"ii", c.cond_ii},
                             {"iii", c.cond_iii},
                             {"iii_vacuous_nontree", c.cond_iii_vacuous_nontree}};
    return out;
}

Json certify_result_to_json(const CertifyResult& r, const Domain& d) {
    Json out;
    out["status"] = r.status == CertStatus::Certified ? "certified"
                    : r.status == CertStatus::Absent  ? "absent"
                                                      : "inconclusive";
    out["certificate"] = r.cert ? certificate_to_json(*r.cert, d) : Json(nullptr);
    out["rejected"] = r.rejected ? certificate_to_json(*r.rejected, d) : Json(nullptr);
    out["evaluations"] = r.evaluations;
    return out;
}

Json rule_check_to_json(const RuleCheck& rc, const Domain& d) {
    Json out;
    out["name"] = rc.name;
    out["scf"] = scf_to_json(rc.scf, d);
    Json axioms;
    for (const auto& [name, res] : rc.axioms) axioms[name] = axiom_result_to_json(res, d);
    out["axioms"] = axioms;
    if (rc.dictator_scan) {
        Json ds;
        Json scope = Json::array();
        for (AltId v : rc.dictator_scope) scope.push_back(d.label(v));
        ds["scope"] = scope;
        ds["dictator"] =
            rc.dictator_scan->dictator ? Json(*rc.dictator_scan->dictator) : Json(nullptr);
        Json failures = Json::array();
        for (const auto& f : rc.dictator_scan->failures)
            failures.push_back(f ? witness_to_json(*f, d) : Json(nullptr));
        ds["failures"] = failures;
        out["dictator_on"] = ds;
    } else {
        out["dictator_on"] = nullptr;
    }
    return out;
}

Json spots_to_json(const std::vector<CriticalSpot>& spots, const Domain& d) {
    Json out = Json::array();
    for (const auto& s : spots) {
        Json j;
        j["x"] = d.label(s.x);
        j["y"] = d.label(s.y);
        j["prefers_y"] = d.pref_name(s.witness_pref_yx);
        j["prefers_x"] = d.pref_name(s.witness_pref_xy);
        out.push_back(j);
    }
    return out;
}

Json verdict_to_json(const Verdict& v, const Domain& d) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["domain"] = d.name();
    out["taxonomy"] = taxonomy_name(v.taxonomy);
    out["richness"] = richness_to_json(v.richness, d);
    out["unique_seconds"] =
        v.usp ? Json{{"x", d.label(v.usp->first)}, {"y", d.label(v.usp->second)}}
              : Json(nullptr);
    out["certificate"] = v.certificate ? certificate_to_json(*v.certificate, d) : Json(nullptr);
    Json rules = Json::array();
    for (const auto& rc : v.constructed_rules) rules.push_back(rule_check_to_json(rc, d));
    out["rules"] = rules;
    out["critical_spots"] = spots_to_json(v.critical_spots, d);
    Json advisory = Json::array();
    for (const auto& a : v.advisory) advisory.push_back(certify_result_to_json(a, d));
    out["advisory"] = advisory;
    out["inconclusive_reason"] =
        v.inconclusive_reason.empty() ? Json(nullptr) : Json(v.inconclusive_reason);
    return out;
}

Json enum_result_to_json(const EnumResult& r, const Domain& d,
                         const std::vector<Decomposition>* decompositions) {
    Json out;
    out["schema_version"] = kSchemaVersion;
    out["domain"] = d.name();
    out["nodes"] = r.nodes;
    out["budget_exceeded"] = r.budget_exceeded;
    Json rules = Json::array();
    for (size_t i = 0; i < r.rules.size(); ++i) {
        Json jr = scf_to_json(r.rules[i], d);
        if (decompositions && i < decompositions->size()) {
            const auto& dec = (*decompositions)[i];
            Json jd;
            jd["tag"] = decomposition_tag_name(dec.tag);
            jd["dictator"] = dec.dictator ? Json(*dec.dictator) : Json(nullptr);
            Json projections = Json::array();
            for (const auto& pmatch : dec.projections)
                projections.push_back(Json{{"tree", tree_to_json(pmatch.tree, d.labels())},
                                           {"threshold", d.label(pmatch.threshold)}});
            jd["projections"] = projections;
            Json hybrids = Json::array();
            for (const auto& h : dec.hybrids)
                hybrids.push_back(Json{{"tree", tree_to_json(h.tree, d.labels())},
                                       {"a", d.label(h.a)},
                                       {"b", d.label(h.b)},
                                       {"voter", h.dictator}});
            jd["hybrids"] = hybrids;
            jr["decomposition"] = jd;
        }
        rules.push_back(jr);
    }
    out["rules"] = rules;
    return out;
}

std::string richness_to_text(const RichnessReport& r, const Domain& d) {
    std::ostringstream out;
    out << "domain: " << d.name() << " (m=" << d.m() << ", prefs=" << d.size() << ")\n";
    out << "minimally rich:   " << (r.minimally_rich ? "yes" : "no") << "\n";
    out << "path-connected:   " << (r.path_connected ? "yes" : "no") << "\n";
    out << "diversity:        ";
    if (r.diversity_witness)
        out << "yes (" << d.pref_name(r.diversity_witness->first) << ", "
            << d.pref_name(r.diversity_witness->second) << ")\n";
    else
        out << "no\n";
    out << "leaf symmetry:    " << (r.leaf_symmetry ? "yes" : "no");
    for (const auto& lr : r.leaf_reports)
        if (!lr.holds) out << " [violated at " << d.label(lr.leaf) << "]";
    out << "\n";
    out << "unique seconds:   ";
    if (r.unique_seconds_witness)
        out << "yes (x=" << d.label(r.unique_seconds_witness->first)
            << ", y=" << d.label(r.unique_seconds_witness->second) << ")\n";
    else
        out << "no\n";
    out << "unidimensional:   " << (r.unidimensional ? "yes" : "no") << "\n";
    return out.str();
}

std::string verdict_to_text(const Verdict& v, const Domain& d) {
    std::ostringstream out;
    out << richness_to_text(v.richness, d);
    out << "taxonomy:         " << taxonomy_name(v.taxonomy) << "\n";
    if (v.certificate) {
        const auto& c = *v.certificate;
        out << "certificate:      " << family_name(c.kind.tag);
        if (c.kind.threshold >= 0) out << " threshold=" << d.label(c.kind.threshold);
        if (c.kind.a >= 0)
            out << " a=" << d.label(c.kind.a) << " b=" << d.label(c.kind.b)
                << (c.degenerate ? " (degenerate)" : " (non-degenerate)");
        out << "\n";
        out << "tree:             ";
        for (auto [x, y] : c.kind.tree.edges())
            out << d.label(x) << "-" << d.label(y) << " ";
        out << "\n";
    }
    for (const auto& rc : v.constructed_rules) {
        out << "rule " << rc.name << ":";
        for (const auto& [axiom, res] : rc.axioms)
            out << " " << axiom << "="
                << (res.outcome == Outcome::Holds   ? "holds"
                    : res.outcome == Outcome::Fails ? "fails"
                                                    : "budget");
        if (rc.dictator_scan && rc.dictator_scan->dictator)
            out << " dictator_on_scope=voter" << *rc.dictator_scan->dictator;
        out << "\n";
    }
    if (!v.critical_spots.empty()) {
        out << "critical spots:  ";
        for (const auto& s : v.critical_spots)
            out << " (" << d.label(s.x) << "," << d.label(s.y) << ")";
        out << "\n";
    }
    if (!v.inconclusive_reason.empty()) out << "reason: " << v.inconclusive_reason << "\n";
    return out.str();
}

}  // namespace domainlab

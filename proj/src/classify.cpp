#include "domainlab/classify.hpp"

#include <algorithm>

namespace domainlab {

std::string taxonomy_name(Taxonomy t) {
    switch (t) {
        case Taxonomy::NotUnidimensional: return "not-unidimensional";
        case Taxonomy::Dictatorial: return "dictatorial";
        case Taxonomy::SemiSinglePeaked: return "semi-single-peaked";
        case Taxonomy::SemiHybrid: return "semi-hybrid";
        case Taxonomy::Inconclusive: return "inconclusive";
    }
    return "?";
}

std::vector<CriticalSpot> find_critical_spots(const Domain& d, const Tree& t,
                                              Budget& budget) {
    if (!d.minimally_rich())
        throw std::invalid_argument("critical spots require a minimally rich domain");
    std::vector<CriticalSpot> spots;
    const std::uint64_t cost = static_cast<std::uint64_t>(t.edges().size()) * 2 *
                               static_cast<std::uint64_t>(d.size()) * 3;
    if (!budget.try_spend(cost))
        throw BudgetExhausted("budget exhausted scanning critical spots");
    for (auto [u, v] : t.edges()) {
        for (auto [x, y] : {std::pair{u, v}, std::pair{v, u}}) {
            const VertexSet near = side_set(t, x, y);  // A^{x->y}
            bool ok = true;
            for (const auto& p : d.prefs()) {
                const AltId peak = p.top();
                if (in_set(near, peak)) {
                    if (!is_ssp_pref(p, t, y)) { ok = false; break; }
                } else {
                    if (best_in(p, set_to_vector(near, t.m())) != x) { ok = false; break; }
                }
            }
            if (!ok) continue;
            int wit_yx = -1, wit_xy = -1;
            for (AltId peak = 0; peak < d.m() && wit_yx < 0; ++peak) {
                if (in_set(near, peak)) continue;
                int ranks_y = -1, ranks_x = -1;
                for (int idx : d.prefs_with_peak(peak)) {
                    const Preference& p = d.pref(idx);
                    if (p.prefers(y, x) && ranks_y < 0) ranks_y = idx;
                    if (p.prefers(x, y) && ranks_x < 0) ranks_x = idx;
                }
                if (ranks_y >= 0 && ranks_x >= 0) {
                    wit_yx = ranks_y;
                    wit_xy = ranks_x;
                }
            }
            if (wit_yx >= 0) spots.push_back(CriticalSpot{x, y, wit_yx, wit_xy});
        }
    }
    return spots;
}

bool verify_prop1(const Domain& d, const DomainCertificate& cert, Budget& budget) {
    const Tree& t = cert.kind.tree;
    const auto spots = find_critical_spots(d, t, budget);
    if (!budget.try_spend(static_cast<std::uint64_t>(d.size())))
        throw BudgetExhausted("budget exhausted in verify_prop1");
    if (cert.kind.tag == Family::SSP || cert.kind.tag == Family::SP) {
        bool escapes = false;
        for (const auto& p : d.prefs())
            if (!is_sp_pref(p, t)) { escapes = true; break; }
        return escapes == !spots.empty();
    }
    const AltId a = cert.kind.a, b = cert.kind.b;
    bool escapes = false;
    for (const auto& p : d.prefs())
        if (!is_hybrid_pref(p, t, a, b)) { escapes = true; break; }
    const VertexSet sa = side_set(t, a, b), sb = side_set(t, b, a);
    bool inside_spot = false;
    for (const auto& s : spots) {
        const bool in_a = in_set(sa, s.x) && in_set(sa, s.y) && s.x != a && s.y != a;
        const bool in_b = in_set(sb, s.x) && in_set(sb, s.y) && s.x != b && s.y != b;
        if (in_a || in_b) { inside_spot = true; break; }
    }
    return escapes == inside_spot;
}

namespace {

RuleCheck check_rule(const std::string& name, const Scf& scf, const Domain& d,
                     Budget& budget, bool with_invariance,
                     const std::vector<AltId>& dictator_scope = {}) {
    RuleCheck rc;
    rc.name = name;
    rc.scf = scf;
    CompiledScf f(scf, d);
    rc.axioms["unanimity"] = check_unanimity(f, budget);
    rc.axioms["strategy_proof"] = check_strategy_proof(f, budget);
    rc.axioms["tops_only"] = check_tops_only(f, budget);
    rc.axioms["anonymity"] = check_anonymity(f, budget);
    if (with_invariance && scf.n == 2 && check_diversity(d))
        rc.axioms["invariance"] = check_invariance(f);
    if (!dictator_scope.empty()) {
        rc.dictator_scope = dictator_scope;
        rc.dictator_scan = dictator_on(f, dictator_scope, budget);
    }
    return rc;
}

bool any_budget(const RuleCheck& rc) {
    for (const auto& [k, v] : rc.axioms)
        if (v.outcome == Outcome::Budget) return true;
    return rc.dictator_scan && rc.dictator_scan->outcome == Outcome::Budget;
}

std::vector<AltId> all_alternatives(const Domain& d) {
    std::vector<AltId> out(static_cast<size_t>(d.m()));
    for (AltId a = 0; a < d.m(); ++a) out[static_cast<size_t>(a)] = a;
    return out;
}

}  // namespace

Verdict classify(const Domain& d, Budget& budget) {
    if (d.m() < 3) throw std::invalid_argument("classify requires m >= 3");
    Verdict verdict;
    verdict.richness = check_unidimensional(d);

    if (!verdict.richness.unidimensional) {
        verdict.taxonomy = Taxonomy::NotUnidimensional;
        verdict.advisory.push_back(certify_ssp_domain(d, budget));
        verdict.advisory.push_back(certify_sh_domain(d, budget));
        return verdict;
    }

    verdict.usp = verdict.richness.unique_seconds_witness;
    if (!verdict.usp) {
        verdict.taxonomy = Taxonomy::Dictatorial;
        return verdict;
    }
    {
        auto rc = check_rule("almost_dictatorship",
                             make_almost_dictatorship(verdict.usp->first,
                                                      verdict.usp->second, 0, 1, 2),
                             d, budget, false, all_alternatives(d));
        const bool budget_hit = any_budget(rc);
        verdict.constructed_rules.push_back(std::move(rc));
        if (budget_hit) {
            verdict.taxonomy = Taxonomy::Inconclusive;
            verdict.inconclusive_reason = "budget exhausted verifying the almost dictatorship";
            return verdict;
        }
    }

    const CertifyResult ssp = certify_ssp_domain(d, budget);
    if (ssp.status == CertStatus::Inconclusive) {
        verdict.taxonomy = Taxonomy::Inconclusive;
        verdict.inconclusive_reason = "budget exhausted in semi-single-peaked certification";
        return verdict;
    }
    if (ssp.status == CertStatus::Certified) {
        verdict.taxonomy = Taxonomy::SemiSinglePeaked;
        verdict.certificate = ssp.cert;
        const Tree& t = ssp.cert->kind.tree;
        auto rc = check_rule(
            "projection_rule",
            make_projection(t, ssp.cert->kind.threshold, 2), d, budget, true);
        const bool budget_hit = any_budget(rc);
        verdict.constructed_rules.push_back(std::move(rc));
        try {
            verdict.critical_spots = find_critical_spots(d, t, budget);
        } catch (const BudgetExhausted&) {
            verdict.taxonomy = Taxonomy::Inconclusive;
            verdict.inconclusive_reason = "budget exhausted scanning critical spots";
            return verdict;
        }
        if (budget_hit) {
            verdict.taxonomy = Taxonomy::Inconclusive;
            verdict.inconclusive_reason = "budget exhausted verifying the projection rule";
        }
        return verdict;
    }

    const CertifyResult sh = certify_sh_domain(d, budget);
    if (sh.status == CertStatus::Inconclusive) {
        verdict.taxonomy = Taxonomy::Inconclusive;
        verdict.inconclusive_reason = "budget exhausted in semi-hybrid certification";
        return verdict;
    }
    if (sh.status == CertStatus::Certified) {
        verdict.taxonomy = Taxonomy::SemiHybrid;
        verdict.certificate = sh.cert;
        const Tree& t = sh.cert->kind.tree;
        const AltId a = sh.cert->kind.a, b = sh.cert->kind.b;
        auto rc = check_rule("hybrid_rule", make_hybrid(t, a, b, 0, 2), d, budget, true,
                             sh.cert->free_zone);
        const bool budget_hit = any_budget(rc);
        verdict.constructed_rules.push_back(std::move(rc));
        try {
            verdict.critical_spots = find_critical_spots(d, t, budget);
        } catch (const BudgetExhausted&) {
            verdict.taxonomy = Taxonomy::Inconclusive;
            verdict.inconclusive_reason = "budget exhausted scanning critical spots";
            return verdict;
        }
        if (budget_hit) {
            verdict.taxonomy = Taxonomy::Inconclusive;
            verdict.inconclusive_reason = "budget exhausted verifying the hybrid rule";
        }
        return verdict;
    }

    verdict.taxonomy = Taxonomy::Inconclusive;
    verdict.inconclusive_reason =
        "no semi-single-peaked or semi-hybrid certificate found for a unidimensional "
        "non-dictatorial domain";
    return verdict;
}

RuleCheck build_verified_pnt(const Domain& d, const Tree& t, const CriticalSpot& spot,
                             int i, int j, int n, Budget& budget) {
    RuleCheck rc;
    rc.name = "pnt_rule";
    rc.scf = make_pnt(t, spot.x, spot.y, i, j, n);
    CompiledScf f(rc.scf, d);
    rc.axioms["unanimity"] = check_unanimity(f, budget);
    rc.axioms["strategy_proof"] = check_strategy_proof(f, budget);
    rc.axioms["tops_only"] = check_tops_only(f, budget);
    for (const char* key : {"unanimity", "strategy_proof"})
        if (rc.axioms[key].outcome == Outcome::Fails)
            throw std::logic_error(
                "PNT rule from a critical spot failed a guaranteed axiom");
    if (rc.axioms["tops_only"].outcome == Outcome::Holds)
        throw std::logic_error("PNT rule from a critical spot is unexpectedly tops-only");
    return rc;
}

}  // namespace domainlab

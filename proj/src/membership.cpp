#include "domainlab/membership.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace domainlab {

std::string family_name(Family f) {
    switch (f) {
        case Family::SP: return "sp";
        case Family::Hybrid: return "hybrid";
        case Family::SSP: return "ssp";
        case Family::SH: return "sh";
    }
    return "?";
}

bool is_sp_pref(const Preference& p, const Tree& t) {
    const AltId peak = p.top();
    const int m = t.m();
    for (AltId b = 0; b < m; ++b) {
        if (b == peak) continue;
        for (AltId a : path(t, peak, b))
            if (a != b && !p.prefers(a, b)) return false;
    }
    return true;
}

bool is_ssp_pref(const Preference& p, const Tree& t, AltId xbar) {
    const AltId peak = p.top();
    const auto interval = path(t, peak, xbar);
    const VertexSet iset = vector_to_set(interval);
    // (i) single-peakedness along the peak-to-threshold interval
    for (size_t i = 0; i + 1 < interval.size(); ++i)
        if (!p.prefers(interval[i], interval[i + 1])) return false;
    // (ii) off-interval alternatives sit below their projection
    for (AltId a = 0; a < t.m(); ++a) {
        if (in_set(iset, a)) continue;
        AltId proj = -1;
        for (AltId v : path(t, a, xbar))
            if (in_set(iset, v)) { proj = v; break; }
        if (!p.prefers(proj, a)) return false;
    }
    return true;
}

namespace {

void require_dual_thresholds(const Tree& t, AltId a, AltId b) {
    if (!is_dual_thresholds(t, a, b))
        throw std::invalid_argument("not dual-thresholds in the given tree");
}

}  // namespace

bool is_hybrid_pref(const Preference& p, const Tree& t, AltId a, AltId b) {
    require_dual_thresholds(t, a, b);
    const AltId peak = p.top();
    const VertexSet sa = side_set(t, a, b);
    const VertexSet sb = side_set(t, b, a);
    const auto fz = path(t, a, b);
    // (i) single-peakedness within each side set
    for (VertexSet side : {sa, sb}) {
        for (AltId z = 0; z < t.m(); ++z) {
            if (!in_set(side, z) || z == peak) continue;
            for (AltId y : path(t, peak, z))
                if (y != z && in_set(side, y) && !p.prefers(y, z)) return false;
        }
    }
    // (ii) a side peak top-ranks its threshold within the free zone
    if (in_set(sa, peak) && peak != a && best_in(p, fz) != a) return false;
    if (in_set(sb, peak) && peak != b && best_in(p, fz) != b) return false;
    return true;
}

bool is_sh_pref(const Preference& p, const Tree& t, AltId a, AltId b) {
    require_dual_thresholds(t, a, b);
    const AltId peak = p.top();
    const VertexSet sa = side_set(t, a, b);
    const VertexSet sb = side_set(t, b, a);
    const auto side_a = set_to_vector(sa, t.m());
    const auto side_b = set_to_vector(sb, t.m());
    if (in_set(sa, peak) && peak != a)
        return is_ssp_pref(p, t, a) && best_in(p, side_b) == b;
    if (in_set(sb, peak) && peak != b)
        return is_ssp_pref(p, t, b) && best_in(p, side_a) == a;
    return best_in(p, side_a) == a && best_in(p, side_b) == b;
}

bool is_family_pref(const Preference& p, const FamilyKind& kind) {
    switch (kind.tag) {
        case Family::SP: return is_sp_pref(p, kind.tree);
        case Family::Hybrid: return is_hybrid_pref(p, kind.tree, kind.a, kind.b);
        case Family::SSP: return is_ssp_pref(p, kind.tree, kind.threshold);
        case Family::SH: return is_sh_pref(p, kind.tree, kind.a, kind.b);
    }
    return false;
}

Domain gen_family(const FamilyKind& kind, int cap, const std::vector<std::string>* labels) {
    const int m = kind.tree.m();
    if (m > cap) throw std::invalid_argument("gen_family: m above cap");
    std::vector<std::string> labs;
    if (labels) {
        labs = *labels;
    } else {
        for (int i = 1; i <= m; ++i) labs.push_back("a" + std::to_string(i));
    }
    std::string name = "gen-" + family_name(kind.tag);
    if (kind.tag == Family::SSP)
        name += "-" + labs[static_cast<size_t>(kind.threshold)];
    if (kind.tag == Family::Hybrid || kind.tag == Family::SH)
        name += "-" + labs[static_cast<size_t>(kind.a)] + "-" +
                labs[static_cast<size_t>(kind.b)];
    std::vector<AltId> ranking(static_cast<size_t>(m));
    std::iota(ranking.begin(), ranking.end(), 0);
    std::vector<Preference> prefs;
    do {
        Preference p(ranking);
        if (is_family_pref(p, kind)) prefs.push_back(std::move(p));
    } while (std::next_permutation(ranking.begin(), ranking.end()));
    return Domain(std::move(labs), std::move(prefs), name);
}

// ---------------------------------------------------------------------------
// Domain certification.
//
// With a connected adjacency graph, any covering family fixes most of the
// candidate tree: the adjacency graph of the full SP/SSP domain on a tree is
// that tree, and for Hybrid/SH it is the two side subtrees plus a complete
// graph on the free zone. A connected spanning subgraph of a tree equals the
// tree, so the certificate tree (SP/SSP) and both side subtrees (Hybrid/SH)
// must coincide with the corresponding restrictions of the adjacency graph.
// Candidates therefore reduce to (threshold) or (pair, free-zone set), and
// the scan below is exhaustive. The tree-scan oracles at the bottom of this
// file re-derive the same answers the expensive way for cross-checking.
// ---------------------------------------------------------------------------

namespace {

std::vector<AltId> path_in_subgraph(const Graph& g, VertexSet allowed, AltId from,
                                    AltId to) {
    std::vector<AltId> parent(static_cast<size_t>(g.m()), -1);
    std::vector<AltId> queue{from};
    parent[static_cast<size_t>(from)] = from;
    for (size_t i = 0; i < queue.size(); ++i) {
        const AltId v = queue[i];
        if (v == to) break;
        for (AltId w : g.neighbors(v))
            if (in_set(allowed, w) && parent[static_cast<size_t>(w)] == -1) {
                parent[static_cast<size_t>(w)] = v;
                queue.push_back(w);
            }
    }
    std::vector<AltId> rev;
    for (AltId v = to; v != from; v = parent[static_cast<size_t>(v)]) rev.push_back(v);
    rev.push_back(from);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

// Candidate decomposition: side sets with adjacency-induced side trees and a
// free-zone vertex set realized as a line for certificate output.
struct ShCandidate {
    AltId a, b;
    VertexSet fz, sa, sb;
    std::vector<AltId> fz_sorted;
};

// Structural admissibility of (a, b, F) against the adjacency graph.
std::optional<ShCandidate> make_candidate(const Graph& g, AltId a, AltId b, VertexSet fz) {
    const int m = g.m();
    const VertexSet all = (VertexSet{1} << m) - 1;
    const VertexSet interior = fz & ~singleton(a) & ~singleton(b);
    for (auto [u, v] : g.edges()) {
        const bool ui = in_set(interior, u), vi = in_set(interior, v);
        if (ui != vi && !(in_set(fz, u) && in_set(fz, v))) return std::nullopt;
    }
    if (!g.connected_within(fz)) return std::nullopt;
    VertexSet sa = singleton(a), sb = singleton(b);
    VertexSet rest = all & ~fz;
    while (rest != 0) {
        const AltId seed = std::countr_zero(rest);
        VertexSet comp = singleton(seed);
        std::vector<AltId> stack{seed};
        bool touches_a = false, touches_b = false;
        while (!stack.empty()) {
            const AltId v = stack.back();
            stack.pop_back();
            for (AltId w : g.neighbors(v)) {
                if (in_set(fz, w)) {
                    if (w == a) touches_a = true;
                    else if (w == b) touches_b = true;
                    else return std::nullopt;
                } else if (!in_set(comp, w)) {
                    comp |= singleton(w);
                    stack.push_back(w);
                }
            }
        }
        if (touches_a == touches_b) return std::nullopt;
        (touches_a ? sa : sb) |= comp;
        rest &= ~comp;
    }
    if (!g.is_tree_within(sa) || !g.is_tree_within(sb)) return std::nullopt;
    ShCandidate c{a, b, fz, sa, sb, set_to_vector(fz, m)};
    return c;
}

// Semi-hybridness against the candidate class (side trees from g).
bool sh_member(const Preference& p, const Graph& g, const ShCandidate& c) {
    const AltId peak = p.top();
    const int m = g.m();
    auto side_case = [&](VertexSet near_side, AltId near, VertexSet far_side,
                         AltId far) {
        const auto q = path_in_subgraph(g, near_side, peak, near);
        for (size_t i = 0; i + 1 < q.size(); ++i)
            if (!p.prefers(q[i], q[i + 1])) return false;
        const VertexSet qset = vector_to_set(q);
        for (AltId v = 0; v < m; ++v) {
            if (in_set(qset, v)) continue;
            if (in_set(near_side, v)) {
                AltId entry = -1;
                for (AltId w : path_in_subgraph(g, near_side, v, near))
                    if (in_set(qset, w)) { entry = w; break; }
                if (!p.prefers(entry, v)) return false;
            } else if (!p.prefers(near, v)) {
                return false;
            }
        }
        for (AltId v = 0; v < m; ++v)
            if (in_set(far_side, v) && v != far && !p.prefers(far, v)) return false;
        return true;
    };
    if (in_set(c.sa, peak) && peak != c.a) return side_case(c.sa, c.a, c.sb, c.b);
    if (in_set(c.sb, peak) && peak != c.b) return side_case(c.sb, c.b, c.sa, c.a);
    for (AltId v = 0; v < m; ++v) {
        if (in_set(c.sa, v) && v != c.a && !p.prefers(c.a, v)) return false;
        if (in_set(c.sb, v) && v != c.b && !p.prefers(c.b, v)) return false;
    }
    return true;
}

// Hybridness against the candidate class.
bool hybrid_member(const Preference& p, const Graph& g, const ShCandidate& c) {
    const AltId peak = p.top();
    const int m = g.m();
    auto sp_rooted = [&](VertexSet side, AltId root) {
        for (AltId z = 0; z < m; ++z) {
            if (!in_set(side, z) || z == root) continue;
            for (AltId y : path_in_subgraph(g, side, root, z))
                if (y != z && !p.prefers(y, z)) return false;
        }
        return true;
    };
    const AltId root_a = (in_set(c.sa, peak)) ? peak : c.a;
    const AltId root_b = (in_set(c.sb, peak)) ? peak : c.b;
    if (!sp_rooted(c.sa, root_a) || !sp_rooted(c.sb, root_b)) return false;
    if ((in_set(c.sa, peak) && peak != c.a) || (in_set(c.sb, peak) && peak != c.b)) {
        const AltId threshold = in_set(c.sa, peak) ? c.a : c.b;
        AltId best = -1;
        for (AltId v : c.fz_sorted)
            if (best == -1 || p.prefers(v, best)) best = v;
        if (best != threshold) return false;
    }
    return true;
}

// Certificate tree: side trees from the adjacency graph joined by a line
// over the free zone, interior in id order.
Tree complete_candidate_tree(const Graph& g, const ShCandidate& c) {
    std::vector<std::pair<AltId, AltId>> edges;
    for (auto [u, v] : g.edges()) {
        if (in_set(c.sa, u) && in_set(c.sa, v)) edges.emplace_back(u, v);
        if (in_set(c.sb, u) && in_set(c.sb, v)) edges.emplace_back(u, v);
    }
    std::vector<AltId> line{c.a};
    for (AltId v : c.fz_sorted)
        if (v != c.a && v != c.b) line.push_back(v);
    line.push_back(c.b);
    for (size_t i = 0; i + 1 < line.size(); ++i) edges.emplace_back(line[i], line[i + 1]);
    return Tree(g.m(), std::move(edges));
}

CertifyResult certify_point_family(const Domain& d, Budget& budget, Family fam) {
    CertifyResult result;
    const Graph g = adjacency_graph(d);
    if (!g.connected() || !g.is_tree()) {
        result.status = CertStatus::Absent;
        return result;
    }
    const Tree t(g);
    const int m = d.m();
    std::vector<AltId> thresholds;
    if (fam == Family::SSP) {
        for (AltId x = 0; x < m; ++x)
            if (g.degree(x) > 1) thresholds.push_back(x);
        for (AltId x : leaves(g)) thresholds.push_back(x);
    } else {
        thresholds.push_back(-1);
    }
    const std::uint64_t cost =
        static_cast<std::uint64_t>(thresholds.size()) * static_cast<std::uint64_t>(d.size());
    if (!budget.try_spend(cost)) {
        result.status = CertStatus::Inconclusive;
        return result;
    }
    result.evaluations = cost;
    for (AltId x : thresholds) {
        bool all = true;
        for (const auto& p : d.prefs()) {
            const bool ok = fam == Family::SSP ? is_ssp_pref(p, t, x) : is_sp_pref(p, t);
            if (!ok) { all = false; break; }
        }
        if (all) {
            DomainCertificate cert;
            cert.kind = FamilyKind{fam, t, x, -1, -1};
            cert.cond_i = true;
            result.status = CertStatus::Certified;
            result.cert = std::move(cert);
            return result;
        }
    }
    result.status = CertStatus::Absent;
    return result;
}

CertifyResult certify_zone_family(const Domain& d, Budget& budget, Family fam) {
    CertifyResult result;
    const Graph g = adjacency_graph(d);
    const int m = d.m();
    if (!g.connected()) {
        result.status = CertStatus::Absent;
        return result;
    }
    const VertexSet all = (VertexSet{1} << m) - 1;

    std::vector<ShCandidate> passing;
    std::uint64_t spent = 0;
    for (AltId a = 0; a < m; ++a)
        for (AltId b = a + 1; b < m; ++b) {
            const VertexSet base = singleton(a) | singleton(b);
            VertexSet rest = all & ~base;
            // iterate subsets of rest, lowest mask first
            VertexSet sub = 0;
            for (;;) {
                auto cand = make_candidate(g, a, b, base | sub);
                if (cand) {
                    if (!budget.try_spend(static_cast<std::uint64_t>(d.size()))) {
                        result.status = CertStatus::Inconclusive;
                        result.evaluations = spent;
                        return result;
                    }
                    spent += static_cast<std::uint64_t>(d.size());
                    bool ok = true;
                    for (const auto& p : d.prefs()) {
                        const bool member = fam == Family::SH ? sh_member(p, g, *cand)
                                                              : hybrid_member(p, g, *cand);
                        if (!member) { ok = false; break; }
                    }
                    if (ok) passing.push_back(std::move(*cand));
                }
                if (sub == rest) break;
                sub = (sub - rest) & rest;
            }
        }
    result.evaluations = spent;
    if (passing.empty()) {
        result.status = CertStatus::Absent;
        return result;
    }

    std::sort(passing.begin(), passing.end(),
              [](const ShCandidate& x, const ShCandidate& y) {
                  if (x.a != y.a) return x.a < y.a;
                  if (x.b != y.b) return x.b < y.b;
                  return x.fz_sorted < y.fz_sorted;
              });
    std::vector<ShCandidate> minimal;
    for (const auto& c : passing) {
        bool has_smaller = false;
        for (const auto& other : passing)
            if (other.fz != c.fz && (other.fz & c.fz) == other.fz) {
                has_smaller = true;
                break;
            }
        if (!has_smaller) minimal.push_back(c);
    }

    const bool g_is_tree = g.is_tree();
    auto cond_iii = [&](const ShCandidate& c) -> std::pair<bool, bool> {
        if (fam == Family::Hybrid) return {std::popcount(c.fz) >= 3, false};
        if (!g_is_tree) return {true, true};  // vacuous, flagged
        const Tree gt(g);
        for (AltId x : c.fz_sorted) {
            int deg = 0;
            for (AltId w : g.neighbors(x))
                if (in_set(c.fz, w)) ++deg;
            if (deg != 1) continue;  // leaf of the free-zone subgraph only
            bool found = false;
            for (const auto& p : d.prefs())
                if (!is_ssp_pref(p, gt, x)) { found = true; break; }
            if (!found) return {false, false};
        }
        return {true, false};
    };

    auto build_cert = [&](const ShCandidate& c, bool iii, bool iii_vacuous) {
        DomainCertificate cert;
        cert.kind = FamilyKind{fam, complete_candidate_tree(g, c), -1, c.a, c.b};
        cert.free_zone = c.fz_sorted;
        cert.degenerate = c.sa == singleton(c.a) && c.sb == singleton(c.b);
        cert.cond_i = true;
        cert.cond_ii = true;
        cert.cond_iii = iii;
        cert.cond_iii_vacuous_nontree = iii_vacuous;
        return cert;
    };

    std::vector<const ShCandidate*> final_set;
    for (const auto& c : minimal)
        if (cond_iii(c).first) final_set.push_back(&c);
    if (final_set.empty()) {
        result.status = CertStatus::Absent;
        const auto [iii, vac] = cond_iii(minimal.front());
        result.rejected = build_cert(minimal.front(), iii, vac);
        return result;
    }
    // Among valid certificates, prefer one separating the peaks of the
    // diversity witness across the two side sets (always possible for a
    // diverse semi-hybrid domain, by relabeling the certificate).
    const auto div = check_diversity(d);
    const ShCandidate* chosen = nullptr;
    if (div) {
        const AltId p1 = d.pref(div->first).top();
        const AltId p2 = d.pref(div->second).top();
        for (const ShCandidate* c : final_set) {
            const bool sep = (in_set(c->sa, p1) && in_set(c->sb, p2)) ||
                             (in_set(c->sa, p2) && in_set(c->sb, p1));
            if (sep) { chosen = c; break; }
        }
    }
    if (!chosen) chosen = final_set.front();
    const auto [iii, vac] = cond_iii(*chosen);
    result.status = CertStatus::Certified;
    result.cert = build_cert(*chosen, iii, vac);
    return result;
}

}  // namespace

CertifyResult certify_sp_domain(const Domain& d, Budget& budget) {
    return certify_point_family(d, budget, Family::SP);
}

CertifyResult certify_ssp_domain(const Domain& d, Budget& budget) {
    return certify_point_family(d, budget, Family::SSP);
}

CertifyResult certify_hybrid_domain(const Domain& d, Budget& budget) {
    return certify_zone_family(d, budget, Family::Hybrid);
}

CertifyResult certify_sh_domain(const Domain& d, Budget& budget) {
    return certify_zone_family(d, budget, Family::SH);
}

CertifyResult certify_sp_by_tree_scan(const Domain& d, Budget& budget) {
    CertifyResult result;
    if (!check_path_connected(d)) {
        result.status = CertStatus::Absent;
        return result;
    }
    const std::uint64_t cost = tree_count(d.m()) * static_cast<std::uint64_t>(d.size());
    if (!budget.try_spend(cost)) {
        result.status = CertStatus::Inconclusive;
        return result;
    }
    result.evaluations = cost;
    enumerate_trees(d.m(), [&](const Tree& t) {
        for (const auto& p : d.prefs())
            if (!is_sp_pref(p, t)) return true;
        DomainCertificate cert;
        cert.kind = FamilyKind{Family::SP, t, -1, -1, -1};
        cert.cond_i = true;
        result.status = CertStatus::Certified;
        result.cert = std::move(cert);
        return false;
    });
    return result;
}

CertifyResult certify_ssp_by_tree_scan(const Domain& d, Budget& budget) {
    CertifyResult result;
    if (!check_path_connected(d)) {
        result.status = CertStatus::Absent;
        return result;
    }
    const std::uint64_t cost = tree_count(d.m()) *
                               static_cast<std::uint64_t>(d.m()) *
                               static_cast<std::uint64_t>(d.size());
    if (!budget.try_spend(cost)) {
        result.status = CertStatus::Inconclusive;
        return result;
    }
    result.evaluations = cost;
    enumerate_trees(d.m(), [&](const Tree& t) {
        std::vector<AltId> thresholds;
        for (AltId x = 0; x < d.m(); ++x)
            if (t.graph().degree(x) > 1) thresholds.push_back(x);
        for (AltId x : leaves(t.graph())) thresholds.push_back(x);
        for (AltId x : thresholds) {
            bool all = true;
            for (const auto& p : d.prefs())
                if (!is_ssp_pref(p, t, x)) { all = false; break; }
            if (all) {
                DomainCertificate cert;
                cert.kind = FamilyKind{Family::SSP, t, x, -1, -1};
                cert.cond_i = true;
                result.status = CertStatus::Certified;
                result.cert = std::move(cert);
                return false;
            }
        }
        return true;
    });
    return result;
}

bool sh_cover_exists_by_tree_scan(const Domain& d, VertexSet free_zone_strictly_inside,
                                  Budget& budget) {
    bool found = false;
    enumerate_trees(d.m(), [&](const Tree& t) {
        for (AltId a = 0; a < d.m() && !found; ++a)
            for (AltId b = a + 1; b < d.m() && !found; ++b) {
                if (!is_dual_thresholds(t, a, b)) continue;
                const VertexSet fz = path_set(t, a, b);
                if ((fz & ~free_zone_strictly_inside) != 0 ||
                    fz == free_zone_strictly_inside)
                    continue;
                if (!budget.try_spend(static_cast<std::uint64_t>(d.size()))) return false;
                bool all = true;
                for (const auto& p : d.prefs())
                    if (!is_sh_pref(p, t, a, b)) { all = false; break; }
                if (all) found = true;
            }
        return !found;
    });
    return found;
}

}  // namespace domainlab

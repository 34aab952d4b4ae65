#include "domainlab/enumerate.hpp"

#include <algorithm>
#include <queue>

#include "domainlab/structure.hpp"

namespace domainlab {

std::string decomposition_tag_name(DecompositionTag t) {
    switch (t) {
        case DecompositionTag::Dictatorship: return "dictatorship";
        case DecompositionTag::Projection: return "projection";
        case DecompositionTag::HybridRule: return "hybrid";
        case DecompositionTag::Other: return "other";
    }
    return "?";
}

namespace {

// okay[x][u][v]: every preference with peak x ranks u above v.
struct PeakDominance {
    int m;
    std::vector<bool> bits;
    bool okay(AltId x, AltId u, AltId v) const {
        return bits[(static_cast<size_t>(x) * static_cast<size_t>(m) +
                     static_cast<size_t>(u)) *
                        static_cast<size_t>(m) +
                    static_cast<size_t>(v)];
    }
};

PeakDominance make_dominance(const Domain& d) {
    const int m = d.m();
    PeakDominance dom{m, std::vector<bool>(static_cast<size_t>(m) * m * m, false)};
    for (AltId x = 0; x < m; ++x)
        for (AltId u = 0; u < m; ++u)
            for (AltId v = 0; v < m; ++v) {
                if (d.prefs_with_peak(x).empty()) continue;
                bool all = true;
                for (int i : d.prefs_with_peak(x))
                    if (!d.pref(i).prefers(u, v)) { all = false; break; }
                dom.bits[(static_cast<size_t>(x) * static_cast<size_t>(m) +
                          static_cast<size_t>(u)) *
                             static_cast<size_t>(m) +
                         static_cast<size_t>(v)] = all;
            }
    return dom;
}

std::vector<int> adjacency_distances(const Domain& d) {
    const Graph g = adjacency_graph(d);
    const int m = g.m();
    std::vector<int> dist(static_cast<size_t>(m) * m, m + 1);
    for (AltId s = 0; s < m; ++s) {
        auto* row = &dist[static_cast<size_t>(s) * m];
        row[s] = 0;
        std::queue<AltId> q;
        q.push(s);
        while (!q.empty()) {
            const AltId v = q.front();
            q.pop();
            for (AltId w : g.neighbors(v))
                if (row[w] > row[v] + 1) {
                    row[w] = row[v] + 1;
                    q.push(w);
                }
        }
    }
    return dist;
}

}  // namespace

EnumResult enum_topsonly_sp_rules(const Domain& d, Budget& budget) {
    const int m = d.m();
    EnumResult result;
    std::vector<AltId> present;
    for (AltId a = 0; a < m; ++a)
        if (!d.prefs_with_peak(a).empty()) present.push_back(a);
    const PeakDominance dom = make_dominance(d);
    const auto dist = adjacency_distances(d);

    // Off-diagonal cells over present peaks, nearest peak pairs first.
    std::vector<std::pair<AltId, AltId>> cells;
    for (AltId x : present)
        for (AltId y : present)
            if (x != y) cells.emplace_back(x, y);
    std::sort(cells.begin(), cells.end(), [&](const auto& c1, const auto& c2) {
        const int d1 = dist[static_cast<size_t>(c1.first) * m + c1.second];
        const int d2 = dist[static_cast<size_t>(c2.first) * m + c2.second];
        if (d1 != d2) return d1 < d2;
        return c1 < c2;
    });

    std::vector<AltId> table(static_cast<size_t>(m) * m, -1);
    for (AltId a = 0; a < m; ++a)
        table[static_cast<size_t>(a) * m + a] = a;
    auto cell = [&](AltId x, AltId y) -> AltId& {
        return table[static_cast<size_t>(x) * m + y];
    };

    std::vector<std::vector<AltId>> found;
    std::uint64_t nodes = 0;
    bool aborted = false;

    auto consistent = [&](AltId x, AltId y, AltId v) {
        // voter 1 deviations move along the column (x -> x'), voter 2
        // deviations along the row (y -> y')
        for (AltId x2 : present) {
            const AltId w = cell(x2, y);
            if (w < 0 || w == v) continue;
            if (!dom.okay(x, v, w) || !dom.okay(x2, w, v)) return false;
        }
        for (AltId y2 : present) {
            const AltId w = cell(x, y2);
            if (w < 0 || w == v) continue;
            if (!dom.okay(y, v, w) || !dom.okay(y2, w, v)) return false;
        }
        return true;
    };

    auto dfs = [&](auto&& self, size_t k) -> void {
        if (aborted) return;
        if (k == cells.size()) {
            found.push_back(table);
            return;
        }
        const auto [x, y] = cells[k];
        for (AltId v = 0; v < m; ++v) {
            if (++nodes > budget.remaining()) {
                aborted = true;
                return;
            }
            if (!consistent(x, y, v)) continue;
            cell(x, y) = v;
            self(self, k + 1);
            cell(x, y) = -1;
            if (aborted) return;
        }
    };
    dfs(dfs, 0);
    budget.try_spend(std::min(nodes, budget.remaining()));
    result.nodes = nodes;
    if (aborted) {
        result.budget_exceeded = true;
        return result;
    }

    // Unused cells (absent peaks) evaluate nowhere; pin them to the row peak
    // so tables are total and canonical.
    for (auto& t : found)
        for (AltId x = 0; x < m; ++x)
            for (AltId y = 0; y < m; ++y)
                if (t[static_cast<size_t>(x) * m + y] < 0)
                    t[static_cast<size_t>(x) * m + y] = x;
    std::sort(found.begin(), found.end());

    for (auto& t : found) result.rules.push_back(make_peak_table(m, t));

    // Post-verification: every emitted rule re-passes the exhaustive checks.
    std::vector<std::uint8_t> ok(result.rules.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(result.rules.size()); ++i) {
        CompiledScf f(result.rules[static_cast<size_t>(i)], d);
        Budget local{~std::uint64_t{0}, 0};
        const bool good = check_unanimity(f, local).holds() &&
                          check_strategy_proof(f, local).holds() &&
                          check_tops_only(f, local).holds();
        ok[static_cast<size_t>(i)] = good ? 1 : 0;
    }
    for (std::uint8_t good : ok)
        if (!good) throw std::logic_error("enumerated rule failed post-verification");
    return result;
}

Decomposition decompose_rule(const Scf& rule, const Domain& d, Budget& budget) {
    const auto* pt = std::get_if<PeakTableRule>(&rule.body);
    if (!pt) throw std::invalid_argument("decompose_rule expects a peak table rule");
    const int m = d.m();
    std::vector<AltId> present;
    for (AltId a = 0; a < m; ++a)
        if (!d.prefs_with_peak(a).empty()) present.push_back(a);

    Decomposition out;
    for (int voter = 0; voter < 2; ++voter) {
        bool match = true;
        for (AltId x : present)
            for (AltId y : present)
                if (pt->at(x, y) != (voter == 0 ? x : y)) { match = false; break; }
        if (match) {
            out.tag = DecompositionTag::Dictatorship;
            out.dictator = voter;
            return out;
        }
    }

    const std::uint64_t trees = tree_count(m);
    if (!budget.try_spend(trees * static_cast<std::uint64_t>(m) * 3))
        throw BudgetExhausted("budget exhausted in decompose_rule");
    enumerate_trees(m, [&](const Tree& t) {
        PathTable paths(t);
        for (AltId xbar = 0; xbar < m; ++xbar) {
            bool match = true;
            for (AltId x : present) {
                for (AltId y : present)
                    if (pt->at(x, y) != paths.project_onto(xbar, paths.path_mask(x, y))) {
                        match = false;
                        break;
                    }
                if (!match) break;
            }
            if (match) out.projections.push_back(ProjectionMatch{t, xbar});
        }
        for (AltId a = 0; a < m; ++a)
            for (AltId b = 0; b < m; ++b) {
                if (a == b) continue;
                if (!is_dual_thresholds(t, a, b)) continue;
                if (paths.dist(a, b) < 2) continue;  // free zone size >= 3
                const VertexSet sa = side_set(t, a, b);
                const VertexSet fz = paths.path_mask(a, b);
                for (int voter = 0; voter < 2; ++voter) {
                    bool match = true;
                    for (AltId x : present) {
                        for (AltId y : present) {
                            const AltId dict_peak = voter == 0 ? x : y;
                            AltId expect;
                            if (in_set(fz, dict_peak)) {
                                expect = dict_peak;
                            } else {
                                const AltId target = in_set(sa, dict_peak) ? a : b;
                                expect =
                                    paths.project_onto(target, paths.path_mask(x, y));
                            }
                            if (pt->at(x, y) != expect) { match = false; break; }
                        }
                        if (!match) break;
                    }
                    if (match) out.hybrids.push_back(HybridMatch{t, a, b, voter});
                }
            }
        return true;
    });
    if (!out.projections.empty())
        out.tag = DecompositionTag::Projection;
    else if (!out.hybrids.empty())
        out.tag = DecompositionTag::HybridRule;
    else
        out.tag = DecompositionTag::Other;
    return out;
}

EnumResult enum_all_sp_rules_micro(const Domain& d, int n, Budget& budget) {
    const int dsize = d.size();
    const std::uint64_t profiles = pow_u64(static_cast<std::uint64_t>(dsize), n);
    if (profiles > 100'000)
        throw std::invalid_argument("enum_all_sp_rules_micro: |d|^n above 1e5");
    const int m = d.m();
    EnumResult result;

    // forced cells: all voters share a peak
    std::vector<AltId> forced(profiles, -1);
    {
        std::vector<int> profile;
        for (std::uint64_t r = 0; r < profiles; ++r) {
            profile_from_rank(r, n, dsize, profile);
            const AltId peak = d.pref(profile[0]).top();
            bool same = true;
            for (int v = 1; v < n; ++v)
                if (d.pref(profile[static_cast<size_t>(v)]).top() != peak) {
                    same = false;
                    break;
                }
            if (same) forced[r] = peak;
        }
    }

    std::vector<AltId> entries(profiles, -1);
    std::vector<std::vector<AltId>> found;
    std::uint64_t nodes = 0;
    bool aborted = false;
    std::vector<int> profile;

    auto consistent = [&](std::uint64_t r, AltId v) {
        profile_from_rank(r, n, dsize, profile);
        for (int voter = 0; voter < n; ++voter) {
            const int truth = profile[static_cast<size_t>(voter)];
            std::uint64_t stride = 1;
            for (int k = n - 1; k > voter; --k) stride *= static_cast<std::uint64_t>(dsize);
            const std::uint64_t base = r - static_cast<std::uint64_t>(truth) * stride;
            for (int q = 0; q < dsize; ++q) {
                if (q == truth) continue;
                const std::uint64_t r2 = base + static_cast<std::uint64_t>(q) * stride;
                const AltId w = entries[r2];
                if (w < 0 || w == v) continue;
                // truthful at r deviating to q, and truthful at r2 deviating back
                if (d.pref(truth).prefers(w, v)) return false;
                if (d.pref(q).prefers(v, w)) return false;
            }
        }
        return true;
    };

    auto dfs = [&](auto&& self, std::uint64_t r) -> void {
        if (aborted) return;
        if (r == profiles) {
            found.push_back(entries);
            return;
        }
        const AltId lo = forced[r] >= 0 ? forced[r] : 0;
        const AltId hi = forced[r] >= 0 ? forced[r] : m - 1;
        for (AltId v = lo; v <= hi; ++v) {
            if (++nodes > budget.remaining()) {
                aborted = true;
                return;
            }
            if (!consistent(r, v)) continue;
            entries[r] = v;
            self(self, r + 1);
            entries[r] = -1;
            if (aborted) return;
        }
    };
    dfs(dfs, 0);
    budget.try_spend(std::min(nodes, budget.remaining()));
    result.nodes = nodes;
    if (aborted) {
        result.budget_exceeded = true;
        return result;
    }
    std::sort(found.begin(), found.end());
    for (auto& e : found) result.rules.push_back(make_full_table(d, n, e));

    std::vector<std::uint8_t> ok(result.rules.size(), 0);
#pragma omp parallel for schedule(dynamic)
    for (long long i = 0; i < static_cast<long long>(result.rules.size()); ++i) {
        CompiledScf f(result.rules[static_cast<size_t>(i)], d);
        Budget local{~std::uint64_t{0}, 0};
        ok[static_cast<size_t>(i)] = check_unanimity(f, local).holds() &&
                                             check_strategy_proof(f, local).holds()
                                         ? 1
                                         : 0;
    }
    for (std::uint8_t good : ok)
        if (!good) throw std::logic_error("micro-enumerated rule failed post-verification");
    return result;
}

}  // namespace domainlab

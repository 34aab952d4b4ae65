#include "domainlab/structure.hpp"

#include <algorithm>

namespace domainlab {

namespace {

bool tails_agree(const Preference& p, const Preference& q) {
    const int m = p.m();
    for (int k = 2; k < m; ++k)
        if (p.ranking()[static_cast<size_t>(k)] != q.ranking()[static_cast<size_t>(k)])
            return false;
    return true;
}

Graph adjacency_impl(const Domain& d, bool require_tails) {
    std::vector<std::pair<AltId, AltId>> edges;
    const int m = d.m();
    if (m < 2) return Graph(m, {});
    for (AltId a = 0; a < m; ++a)
        for (AltId b = a + 1; b < m; ++b) {
            bool adjacent = false;
            for (int i : d.prefs_with_peak(a)) {
                const Preference& p = d.pref(i);
                if (p.ranking()[1] != b) continue;
                for (int j : d.prefs_with_peak(b)) {
                    const Preference& q = d.pref(j);
                    if (q.ranking()[1] != a) continue;
                    if (!require_tails || tails_agree(p, q)) {
                        adjacent = true;
                        break;
                    }
                }
                if (adjacent) break;
            }
            if (adjacent) edges.emplace_back(a, b);
        }
    return Graph(m, std::move(edges));
}

}  // namespace

Graph adjacency_graph(const Domain& d) { return adjacency_impl(d, true); }
Graph weak_adjacency_graph(const Domain& d) { return adjacency_impl(d, false); }

bool check_path_connected(const Domain& d) { return adjacency_graph(d).connected(); }

std::optional<std::pair<int, int>> check_diversity(const Domain& d) {
    for (int i = 0; i < d.size(); ++i)
        for (int j = i + 1; j < d.size(); ++j)
            if (is_complete_reversal(d.pref(i), d.pref(j))) return std::make_pair(i, j);
    return std::nullopt;
}

LeafSymmetryResult check_leaf_symmetry(const Domain& d) {
    const Graph g = adjacency_graph(d);
    LeafSymmetryResult result{true, {}};
    for (AltId x : leaves(g)) {
        LeafReport rep;
        rep.leaf = x;
        rep.seconds = seconds_set(d, x);
        rep.vacuous = rep.seconds.size() <= 1;
        rep.holds = true;
        if (!rep.vacuous) {
            rep.holds = false;
            for (AltId z : rep.seconds) {
                if (g.has_edge(x, z)) continue;
                const auto sz = seconds_set(d, z);
                if (std::find(sz.begin(), sz.end(), x) != sz.end()) {
                    rep.holds = true;
                    rep.witness_z = z;
                    break;
                }
            }
        }
        if (!rep.holds) result.holds = false;
        result.reports.push_back(std::move(rep));
    }
    return result;
}

std::optional<std::pair<AltId, AltId>> unique_seconds(const Domain& d) {
    for (AltId x = 0; x < d.m(); ++x) {
        const auto s = seconds_set(d, x);
        if (s.size() == 1) return std::make_pair(x, s.front());
    }
    return std::nullopt;
}

RichnessReport check_unidimensional(const Domain& d) {
    if (d.m() < 3) throw std::invalid_argument("check_unidimensional requires m >= 3");
    RichnessReport r;
    r.minimally_rich = d.minimally_rich();
    r.path_connected = check_path_connected(d);
    r.diversity_witness = check_diversity(d);
    const auto ls = check_leaf_symmetry(d);
    r.leaf_symmetry = ls.holds;
    r.leaf_reports = ls.reports;
    r.unique_seconds_witness = unique_seconds(d);
    r.unidimensional =
        r.path_connected && r.diversity_witness.has_value() && r.leaf_symmetry;
    r.linked = check_linked(d);
    return r;
}

namespace {

bool linked_search(const Graph& g, std::vector<AltId>& order, VertexSet used) {
    const int m = g.m();
    if (static_cast<int>(order.size()) == m) return true;
    for (AltId v = 0; v < m; ++v) {
        if (in_set(used, v)) continue;
        int links = 0;
        for (AltId w : order)
            if (g.has_edge(v, w)) ++links;
        const bool ok = order.size() < 2 ? (order.empty() || links >= 1) : links >= 2;
        if (!ok) continue;
        order.push_back(v);
        if (linked_search(g, order, used | singleton(v))) return true;
        order.pop_back();
    }
    return false;
}

}  // namespace

Linked check_linked(const Domain& d) {
    const Graph g = weak_adjacency_graph(d);
    if (d.m() == 1) return Linked::Yes;
    std::vector<AltId> order;
    if (linked_search(g, order, 0)) return Linked::Yes;
    return d.m() <= 8 ? Linked::No : Linked::Unknown;
}

}  // namespace domainlab

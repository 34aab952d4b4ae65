#include "domainlab/trees.hpp"

#include <algorithm>
#include <bit>
#include <fstream>
#include <sstream>
#include <stdexcept>

namespace domainlab {

std::vector<AltId> set_to_vector(VertexSet s, int m) {
    std::vector<AltId> out;
    for (AltId v = 0; v < m; ++v)
        if (in_set(s, v)) out.push_back(v);
    return out;
}

VertexSet vector_to_set(const std::vector<AltId>& v) {
    VertexSet s = 0;
    for (AltId x : v) s |= singleton(x);
    return s;
}

Graph::Graph(int m, std::vector<std::pair<AltId, AltId>> edges) : m_(m) {
    if (m < 1) throw std::invalid_argument("graph needs at least one vertex");
    if (m > 31) throw std::invalid_argument("graph too large for vertex masks (m > 31)");
    edges_.reserve(edges.size());
    for (auto [a, b] : edges) {
        if (a == b) throw std::invalid_argument("self-loop");
        if (a < 0 || b < 0 || a >= m || b >= m)
            throw std::invalid_argument("edge endpoint out of range");
        edges_.emplace_back(std::min(a, b), std::max(a, b));
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
    adj_.assign(static_cast<size_t>(m), {});
    for (auto [a, b] : edges_) {
        adj_[static_cast<size_t>(a)].push_back(b);
        adj_[static_cast<size_t>(b)].push_back(a);
    }
    for (auto& v : adj_) std::sort(v.begin(), v.end());
}

bool Graph::has_edge(AltId a, AltId b) const {
    if (a > b) std::swap(a, b);
    return std::binary_search(edges_.begin(), edges_.end(), std::make_pair(a, b));
}

bool Graph::connected_within(VertexSet s) const {
    const int k = std::popcount(s);
    if (k <= 1) return true;
    AltId start = -1;
    for (AltId v = 0; v < m_; ++v)
        if (in_set(s, v)) { start = v; break; }
    VertexSet seen = singleton(start);
    std::vector<AltId> stack{start};
    while (!stack.empty()) {
        const AltId v = stack.back();
        stack.pop_back();
        for (AltId w : neighbors(v))
            if (in_set(s, w) && !in_set(seen, w)) {
                seen |= singleton(w);
                stack.push_back(w);
            }
    }
    return std::popcount(seen) == k;
}

bool Graph::connected() const {
    return connected_within((m_ >= 31) ? ~VertexSet{0} : ((VertexSet{1} << m_) - 1));
}

int Graph::edge_count_within(VertexSet s) const {
    int c = 0;
    for (auto [a, b] : edges_)
        if (in_set(s, a) && in_set(s, b)) ++c;
    return c;
}

bool Graph::is_tree_within(VertexSet s) const {
    return connected_within(s) && edge_count_within(s) == std::popcount(s) - 1;
}

bool Graph::is_tree() const {
    return connected() && static_cast<int>(edges_.size()) == m_ - 1;
}

std::vector<AltId> leaves(const Graph& g) {
    std::vector<AltId> out;
    for (AltId v = 0; v < g.m(); ++v)
        if (g.degree(v) == 1) out.push_back(v);
    return out;
}

Tree::Tree(Graph g) : g_(std::move(g)) {
    if (!g_.is_tree()) throw std::invalid_argument("graph is not a tree");
}

Tree::Tree(int m, std::vector<std::pair<AltId, AltId>> edges)
    : Tree(Graph(m, std::move(edges))) {}

Tree line_tree(int m) {
    std::vector<std::pair<AltId, AltId>> edges;
    for (AltId v = 0; v + 1 < m; ++v) edges.emplace_back(v, v + 1);
    return Tree(m, std::move(edges));
}

std::vector<AltId> path(const Tree& t, AltId x, AltId y) {
    const Graph& g = t.graph();
    std::vector<AltId> parent(static_cast<size_t>(g.m()), -1);
    std::vector<AltId> queue{x};
    parent[static_cast<size_t>(x)] = x;
    for (size_t i = 0; i < queue.size(); ++i) {
        const AltId v = queue[i];
        if (v == y) break;
        for (AltId w : g.neighbors(v))
            if (parent[static_cast<size_t>(w)] == -1) {
                parent[static_cast<size_t>(w)] = v;
                queue.push_back(w);
            }
    }
    std::vector<AltId> rev;
    for (AltId v = y; v != x; v = parent[static_cast<size_t>(v)]) rev.push_back(v);
    rev.push_back(x);
    std::reverse(rev.begin(), rev.end());
    return rev;
}

VertexSet path_set(const Tree& t, AltId x, AltId y) {
    return vector_to_set(path(t, x, y));
}

bool is_path_closed(const Tree& t, VertexSet B) {
    const auto verts = set_to_vector(B, t.m());
    for (size_t i = 0; i < verts.size(); ++i)
        for (size_t j = i + 1; j < verts.size(); ++j)
            if ((path_set(t, verts[i], verts[j]) & ~B) != 0) return false;
    return true;
}

namespace {

AltId project_unchecked(const Tree& t, AltId a, VertexSet B) {
    if (in_set(B, a)) return a;
    AltId b0 = -1;
    for (AltId v = 0; v < t.m(); ++v)
        if (in_set(B, v)) { b0 = v; break; }
    for (AltId v : path(t, a, b0))
        if (in_set(B, v)) return v;
    return b0;  // unreachable
}

}  // namespace

AltId project(const Tree& t, AltId a, VertexSet B) {
    if (B == 0) throw std::invalid_argument("project: empty set");
    if (!is_path_closed(t, B)) throw std::invalid_argument("project: set not path-closed");
    return project_unchecked(t, a, B);
}

AltId project(const Tree& t, AltId a, const std::vector<AltId>& B) {
    return project(t, a, vector_to_set(B));
}

VertexSet minimal_subtree(const Tree& t, const std::vector<AltId>& peaks) {
    if (peaks.empty()) throw std::invalid_argument("minimal_subtree: no peaks");
    VertexSet out = 0;
    for (size_t i = 0; i < peaks.size(); ++i) {
        out |= singleton(peaks[i]);
        for (size_t j = i + 1; j < peaks.size(); ++j)
            out |= path_set(t, peaks[i], peaks[j]);
    }
    return out;
}

VertexSet side_set(const Tree& t, AltId x, AltId y) {
    if (x == y) throw std::invalid_argument("side_set: x == y");
    VertexSet out = 0;
    for (AltId z = 0; z < t.m(); ++z)
        if (in_set(path_set(t, z, y), x)) out |= singleton(z);
    return out;
}

bool is_dual_thresholds(const Tree& t, AltId a, AltId b) {
    if (a == b) throw std::invalid_argument("dual-thresholds must be distinct");
    const VertexSet interval = path_set(t, a, b);
    for (AltId c = 0; c < t.m(); ++c) {
        if (in_set(interval, c)) continue;
        const AltId p = project_unchecked(t, c, interval);
        if (p != a && p != b) return false;
    }
    return true;
}

PathTable::PathTable(const Tree& t) : tree_(t) {
    const int m = tree_.m();
    paths_.resize(static_cast<size_t>(m) * m);
    masks_.resize(static_cast<size_t>(m) * m);
    dist_.resize(static_cast<size_t>(m) * m);
    for (AltId x = 0; x < m; ++x)
        for (AltId y = 0; y < m; ++y) {
            auto p = domainlab::path(tree_, x, y);
            masks_[idx(x, y)] = vector_to_set(p);
            dist_[idx(x, y)] = static_cast<int>(p.size()) - 1;
            paths_[idx(x, y)] = std::move(p);
        }
    by_dist_.resize(static_cast<size_t>(m));
    for (AltId x = 0; x < m; ++x) {
        auto& order = by_dist_[static_cast<size_t>(x)];
        order.resize(static_cast<size_t>(m));
        for (AltId v = 0; v < m; ++v) order[static_cast<size_t>(v)] = v;
        std::sort(order.begin(), order.end(), [&](AltId u, AltId v) {
            const int du = dist_[idx(x, u)], dv = dist_[idx(x, v)];
            return du != dv ? du < dv : u < v;
        });
    }
}

VertexSet PathTable::minimal_subtree_mask(const std::vector<AltId>& peaks) const {
    VertexSet out = 0;
    for (size_t i = 0; i < peaks.size(); ++i) {
        out |= singleton(peaks[i]);
        for (size_t j = i + 1; j < peaks.size(); ++j)
            out |= masks_[idx(peaks[i], peaks[j])];
    }
    return out;
}

AltId PathTable::project_onto(AltId x, VertexSet target) const {
    for (AltId v : by_dist_[static_cast<size_t>(x)])
        if (in_set(target, v)) return v;
    throw std::invalid_argument("project_onto: empty target");
}

std::uint64_t tree_count(int m) {
    if (m == 1) return 1;
    std::uint64_t c = 1;
    for (int i = 0; i < m - 2; ++i) c *= static_cast<std::uint64_t>(m);
    return c;
}

std::uint64_t enumerate_trees(int m, const std::function<bool(const Tree&)>& fn, int cap) {
    if (m < 2) throw std::invalid_argument("enumerate_trees: m must be >= 2");
    if (m > cap) throw std::invalid_argument("enumerate_trees: m above cap");
    std::vector<AltId> seq(static_cast<size_t>(std::max(0, m - 2)), 0);
    std::uint64_t visited = 0;
    for (;;) {
        // Pruefer decoding.
        std::vector<int> degree(static_cast<size_t>(m), 1);
        for (AltId s : seq) ++degree[static_cast<size_t>(s)];
        std::vector<std::pair<AltId, AltId>> edges;
        std::vector<bool> used(static_cast<size_t>(m), false);
        for (AltId s : seq) {
            AltId leaf = -1;
            for (AltId v = 0; v < m; ++v)
                if (!used[static_cast<size_t>(v)] && degree[static_cast<size_t>(v)] == 1) {
                    leaf = v;
                    break;
                }
            edges.emplace_back(leaf, s);
            used[static_cast<size_t>(leaf)] = true;
            --degree[static_cast<size_t>(s)];
        }
        std::vector<AltId> rest;
        for (AltId v = 0; v < m; ++v)
            if (!used[static_cast<size_t>(v)]) rest.push_back(v);
        edges.emplace_back(rest[0], rest[1]);
        ++visited;
        if (!fn(Tree(m, std::move(edges)))) return visited;
        // next sequence, lexicographic
        int i = static_cast<int>(seq.size()) - 1;
        while (i >= 0 && seq[static_cast<size_t>(i)] == m - 1) {
            seq[static_cast<size_t>(i)] = 0;
            --i;
        }
        if (i < 0) break;
        ++seq[static_cast<size_t>(i)];
    }
    return visited;
}

Graph parse_graph(const std::string& text, std::vector<std::string>* labels_out,
                  const std::vector<std::string>* labels) {
    std::istringstream in(text);
    std::string line;
    std::vector<std::string> labs;
    if (labels) labs = *labels;
    const bool fixed_labels = labels != nullptr;
    bool saw_alternatives = fixed_labels;
    auto id_of = [&](const std::string& lab) -> AltId {
        for (size_t i = 0; i < labs.size(); ++i)
            if (labs[i] == lab) return static_cast<AltId>(i);
        if (saw_alternatives)
            throw ParseError("unknown vertex label: " + lab);
        labs.push_back(lab);
        return static_cast<AltId>(labs.size()) - 1;
    };
    std::vector<std::pair<std::string, std::string>> raw_edges;
    while (std::getline(in, line)) {
        const auto hash = line.find('#');
        if (hash != std::string::npos) line.resize(hash);
        std::istringstream ls(line);
        std::string head;
        if (!(ls >> head)) continue;
        if (head == "alternatives:") {
            if (fixed_labels) continue;
            std::string lab;
            while (ls >> lab) labs.push_back(lab);
            saw_alternatives = true;
        } else if (head == "edge:") {
            std::string u, v, extra;
            if (!(ls >> u >> v) || (ls >> extra))
                throw ParseError("edge line needs exactly two labels");
            raw_edges.emplace_back(u, v);
        } else {
            throw ParseError("unexpected line in graph file: " + head);
        }
    }
    std::vector<std::pair<AltId, AltId>> edges;
    for (const auto& [u, v] : raw_edges) edges.emplace_back(id_of(u), id_of(v));
    if (labs.empty()) throw ParseError("graph file defines no vertices");
    if (labels_out) *labels_out = labs;
    return Graph(static_cast<int>(labs.size()), std::move(edges));
}

Graph load_graph_file(const std::string& path, std::vector<std::string>* labels_out,
                      const std::vector<std::string>* labels) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open graph file: " + path);
    std::stringstream buf;
    buf << in.rdbuf();
    return parse_graph(buf.str(), labels_out, labels);
}

std::string to_dot(const Graph& g, const std::vector<std::string>& labels) {
    std::ostringstream out;
    out << "graph G {\n";
    for (AltId v = 0; v < g.m(); ++v)
        out << "  \"" << labels[static_cast<size_t>(v)] << "\";\n";
    for (auto [a, b] : g.edges())
        out << "  \"" << labels[static_cast<size_t>(a)] << "\" -- \""
            << labels[static_cast<size_t>(b)] << "\";\n";
    out << "}\n";
    return out.str();
}

}  // namespace domainlab

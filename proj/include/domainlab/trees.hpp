#ifndef DOMAINLAB_TREES_HPP
#define DOMAINLAB_TREES_HPP

#include <cstdint>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "domainlab/prefcore.hpp"

namespace domainlab {

/// Vertex subset as a bitmask; tree utilities assume m <= 31.
using VertexSet = std::uint32_t;

inline bool in_set(VertexSet s, AltId v) { return (s >> v) & 1u; }
inline VertexSet singleton(AltId v) { return VertexSet{1} << v; }
std::vector<AltId> set_to_vector(VertexSet s, int m);
VertexSet vector_to_set(const std::vector<AltId>& v);

/// Undirected graph over alternatives 0..m-1. Edges stored canonically
/// (low id first, sorted); no self-loops.
class Graph {
public:
    Graph() = default;
    Graph(int m, std::vector<std::pair<AltId, AltId>> edges);

    int m() const { return m_; }
    const std::vector<std::pair<AltId, AltId>>& edges() const { return edges_; }
    const std::vector<AltId>& neighbors(AltId v) const {
        return adj_[static_cast<size_t>(v)];
    }
    int degree(AltId v) const { return static_cast<int>(adj_[static_cast<size_t>(v)].size()); }
    bool has_edge(AltId a, AltId b) const;

    bool connected() const;
    bool is_tree() const;
    /// Connectivity of the subgraph induced on `s` (true when |s| <= 1).
    bool connected_within(VertexSet s) const;
    /// true iff the induced subgraph on `s` is a tree.
    bool is_tree_within(VertexSet s) const;
    int edge_count_within(VertexSet s) const;

    bool operator==(const Graph& other) const {
        return m_ == other.m_ && edges_ == other.edges_;
    }

private:
    int m_ = 0;
    std::vector<std::pair<AltId, AltId>> edges_;
    std::vector<std::vector<AltId>> adj_;
};

std::vector<AltId> leaves(const Graph& g);

/// A connected acyclic Graph. Construction validates.
class Tree {
public:
    Tree() = default;
    explicit Tree(Graph g);
    Tree(int m, std::vector<std::pair<AltId, AltId>> edges);

    int m() const { return g_.m(); }
    const Graph& graph() const { return g_; }
    const std::vector<std::pair<AltId, AltId>>& edges() const { return g_.edges(); }

    bool operator==(const Tree& other) const { return g_ == other.g_; }

private:
    Graph g_;
};

/// The line a0 - a1 - ... - a_{m-1}.
Tree line_tree(int m);

std::vector<AltId> path(const Tree& t, AltId x, AltId y);
VertexSet path_set(const Tree& t, AltId x, AltId y);

/// Projection of `a` onto the path-closed set B. Throws if B is empty or
/// not path-closed.
AltId project(const Tree& t, AltId a, VertexSet B);
AltId project(const Tree& t, AltId a, const std::vector<AltId>& B);
bool is_path_closed(const Tree& t, VertexSet B);

VertexSet minimal_subtree(const Tree& t, const std::vector<AltId>& peaks);
/// A^{x -> y}: vertices whose path to y passes through x.
VertexSet side_set(const Tree& t, AltId x, AltId y);
bool is_dual_thresholds(const Tree& t, AltId a, AltId b);

/// Per-tree cache of all-pairs paths, path masks and distances. Used by hot
/// rule-evaluation loops.
class PathTable {
public:
    explicit PathTable(const Tree& t);

    const Tree& tree() const { return tree_; }
    int m() const { return tree_.m(); }
    const std::vector<AltId>& path(AltId x, AltId y) const {
        return paths_[idx(x, y)];
    }
    VertexSet path_mask(AltId x, AltId y) const { return masks_[idx(x, y)]; }
    int dist(AltId x, AltId y) const { return dist_[idx(x, y)]; }

    VertexSet minimal_subtree_mask(const std::vector<AltId>& peaks) const;
    /// Projection of x onto a connected, path-closed vertex mask.
    AltId project_onto(AltId x, VertexSet target) const;

private:
    size_t idx(AltId x, AltId y) const {
        return static_cast<size_t>(x) * static_cast<size_t>(m()) + static_cast<size_t>(y);
    }
    Tree tree_;
    std::vector<std::vector<AltId>> paths_;
    std::vector<VertexSet> masks_;
    std::vector<int> dist_;
    std::vector<std::vector<AltId>> by_dist_;  // per root: vertices by (dist, id)
};

constexpr int kTreeEnumCap = 8;

/// Calls `fn` for every labeled tree on m vertices exactly once (Pruefer
/// decoding, lexicographic sequence order). Returns the number of trees
/// visited; stops early when `fn` returns false.
std::uint64_t enumerate_trees(int m, const std::function<bool(const Tree&)>& fn,
                              int cap = kTreeEnumCap);
std::uint64_t tree_count(int m);

/// Graph/tree file: optional 'alternatives:' line, then 'edge: <u> <v>' lines.
/// Labels are resolved against `labels` when given, else first-appearance.
Graph parse_graph(const std::string& text, std::vector<std::string>* labels_out,
                  const std::vector<std::string>* labels = nullptr);
Graph load_graph_file(const std::string& path, std::vector<std::string>* labels_out,
                      const std::vector<std::string>* labels = nullptr);

/// DOT export, bit-exact: vertices in id order, edges canonical.
std::string to_dot(const Graph& g, const std::vector<std::string>& labels);

}  // namespace domainlab

#endif

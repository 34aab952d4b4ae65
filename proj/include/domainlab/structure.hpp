#ifndef DOMAINLAB_STRUCTURE_HPP
#define DOMAINLAB_STRUCTURE_HPP

#include <optional>
#include <utility>
#include <vector>

#include "domainlab/prefcore.hpp"
#include "domainlab/trees.hpp"

namespace domainlab {

/// Per-leaf leaf-symmetry outcome. `witness_z` is some z in S(D^x) with
/// z outside N(x) and x in S(D^z); absent when the leaf is vacuous
/// (singleton seconds-set) or violated.
struct LeafReport {
    AltId leaf;
    std::vector<AltId> seconds;
    bool vacuous;
    bool holds;
    std::optional<AltId> witness_z;
};

enum class Linked { Yes, No, Unknown };

struct RichnessReport {
    bool minimally_rich = false;
    bool path_connected = false;
    std::optional<std::pair<int, int>> diversity_witness;  // pref indices
    bool leaf_symmetry = false;
    std::vector<LeafReport> leaf_reports;
    std::optional<std::pair<AltId, AltId>> unique_seconds_witness;
    bool unidimensional = false;
    Linked linked = Linked::Unknown;
};

/// a ~ b: two preferences swap top and second and agree from rank 3 down.
Graph adjacency_graph(const Domain& d);
/// Weak adjacency drops the tail-agreement requirement.
Graph weak_adjacency_graph(const Domain& d);

bool check_path_connected(const Domain& d);
/// First completely reversed pair in file order, if any.
std::optional<std::pair<int, int>> check_diversity(const Domain& d);

struct LeafSymmetryResult {
    bool holds;
    std::vector<LeafReport> reports;
};
LeafSymmetryResult check_leaf_symmetry(const Domain& d);

/// First x (by id) whose seconds-set is a singleton {y}.
std::optional<std::pair<AltId, AltId>> unique_seconds(const Domain& d);

/// Aggregates the richness checks. Requires m >= 3.
RichnessReport check_unidimensional(const Domain& d);

/// Linked-domain test over the weak adjacency graph (exhaustive backtracking
/// for m <= 8, else Unknown on failure to find an order).
Linked check_linked(const Domain& d);

}  // namespace domainlab

#endif

#ifndef DOMAINLAB_ENUMERATE_HPP
#define DOMAINLAB_ENUMERATE_HPP

#include <cstdint>
#include <vector>

#include "domainlab/rules.hpp"

namespace domainlab {

struct EnumResult {
    std::vector<Scf> rules;
    std::uint64_t nodes = 0;
    bool budget_exceeded = false;  // rules is empty when set
};

/// All two-voter, unanimous, tops-only, strategy-proof rules on d, as peak
/// tables. Backtracking over table cells spiralling outward from the
/// diagonal by adjacency-graph distance, pruning with pairwise
/// strategy-proofness constraints; every emitted rule is re-verified.
EnumResult enum_topsonly_sp_rules(const Domain& d, Budget& budget);

enum class DecompositionTag { Dictatorship, Projection, HybridRule, Other };

struct ProjectionMatch {
    Tree tree;
    AltId threshold;
};
struct HybridMatch {
    Tree tree;
    AltId a, b;
    int dictator;
};

struct Decomposition {
    DecompositionTag tag = DecompositionTag::Other;
    std::optional<int> dictator;
    std::vector<ProjectionMatch> projections;
    std::vector<HybridMatch> hybrids;
};

std::string decomposition_tag_name(DecompositionTag t);

/// Finds every canonical rule pointwise equal to the peak table on the
/// domain's present peak pairs, scanning all labeled trees.
Decomposition decompose_rule(const Scf& peak_table_rule, const Domain& d, Budget& budget);

/// All unanimous strategy-proof SCFs (not only tops-only ones) on a micro
/// instance, as full tables.
EnumResult enum_all_sp_rules_micro(const Domain& d, int n, Budget& budget);

}  // namespace domainlab

#endif

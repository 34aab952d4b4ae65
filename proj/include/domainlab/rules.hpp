#ifndef DOMAINLAB_RULES_HPP
#define DOMAINLAB_RULES_HPP

#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "domainlab/membership.hpp"
#include "domainlab/prefcore.hpp"
#include "domainlab/trees.hpp"

namespace domainlab {

struct ProjectionRule {
    Tree tree;
    AltId threshold;
};

struct HybridRuleBody {
    Tree tree;
    AltId a, b;
    int dictator;  // voter index
};

struct PntRule {
    Tree tree;
    AltId x, y;  // an edge of the tree
    int i, j;    // designated voters
};

struct DictatorshipRule {
    int voter;
};

struct AlmostDictatorshipRule {
    AltId x, y;
    int i, j;
};

struct PeakTableRule {
    int m;
    std::vector<AltId> table;  // m*m, row = voter-1 peak, col = voter-2 peak
    AltId at(AltId p1, AltId p2) const {
        return table[static_cast<size_t>(p1) * static_cast<size_t>(m) +
                     static_cast<size_t>(p2)];
    }
};

struct FullTableRule {
    std::vector<AltId> entries;  // |d|^n, mixed radix, voter 1 most significant
};

struct Scf {
    int n;
    std::variant<ProjectionRule, HybridRuleBody, PntRule, DictatorshipRule,
                 AlmostDictatorshipRule, PeakTableRule, FullTableRule>
        body;
    std::string kind_name() const;
};

Scf make_projection(const Tree& t, AltId threshold, int n);
Scf make_hybrid(const Tree& t, AltId a, AltId b, int voter, int n);
Scf make_pnt(const Tree& t, AltId x, AltId y, int i, int j, int n);
Scf make_dictatorship(int voter, int n);
Scf make_almost_dictatorship(AltId x, AltId y, int i, int j, int n);
Scf make_peak_table(int m, std::vector<AltId> table);
/// entries indexed by profile rank; |d|^n must not exceed 10^6.
Scf make_full_table(const Domain& d, int n, std::vector<AltId> entries);

/// An Scf bound to a domain, with the lookup tables needed for tight
/// evaluation loops.
class CompiledScf {
public:
    CompiledScf(const Scf& scf, const Domain& d);

    AltId eval(std::span<const int> profile) const;
    AltId eval(const Profile& p) const { return eval(std::span<const int>(p.voters)); }
    int n() const { return n_; }
    const Domain& domain() const { return *d_; }
    const Scf& scf() const { return scf_; }

private:
    Scf scf_;
    const Domain* d_;
    int n_;
    int m_;
    std::vector<AltId> peak_of_;  // per pref
    std::shared_ptr<PathTable> paths_;
    // kind-specific
    VertexSet region_a_ = 0, region_b_ = 0, fz_ = 0;
    std::vector<AltId> pair_table_;  // m*m precomputed outcomes for n==2 tree rules
    AltId param_x_ = -1, param_y_ = -1;
    int voter_i_ = -1, voter_j_ = -1;

    AltId eval_projection(std::span<const int> profile) const;
    AltId eval_hybrid(std::span<const int> profile) const;
    AltId eval_pnt(std::span<const int> profile) const;
    VertexSet peaks_subtree(std::span<const int> profile) const;
};

AltId eval(const Scf& f, const Domain& d, const Profile& p);

enum class Outcome { Holds, Fails, Budget };

/// A re-checkable counterexample. For deviation axioms: `profile` is the
/// truthful profile, `voter`/`deviation` the manipulation, outcome_a/b the
/// before/after outcomes. For tops-only and anonymity: two profiles with
/// outcomes.
struct AxiomWitness {
    std::vector<int> profile;
    std::vector<int> other_profile;
    int voter = -1;
    int deviation = -1;
    AltId outcome_a = -1;
    AltId outcome_b = -1;
};

struct AxiomResult {
    Outcome outcome = Outcome::Holds;
    std::optional<AxiomWitness> witness;
    std::uint64_t evaluations = 0;

    bool holds() const { return outcome == Outcome::Holds; }
};

AxiomResult check_unanimity(const CompiledScf& f, Budget& budget);
AxiomResult check_strategy_proof(const CompiledScf& f, Budget& budget);
AxiomResult check_tops_only(const CompiledScf& f, Budget& budget);
AxiomResult check_anonymity(const CompiledScf& f, Budget& budget);

/// Invariance over the deterministic first reversed pair (strict=false) or
/// over every reversed pair (strict=true). Requires n == 2 and diversity.
AxiomResult check_invariance(const CompiledScf& f, bool strict = false);

struct DictatorScan {
    std::optional<int> dictator;
    /// For each voter, a failing profile (all peaks in B) when not a
    /// dictator on B; indexed by voter.
    std::vector<std::optional<AxiomWitness>> failures;
    Outcome outcome = Outcome::Holds;
};

DictatorScan dictator_on(const CompiledScf& f, const std::vector<AltId>& B, Budget& budget);

/// Independent, straightforwardly-written implementations used to validate
/// the OpenMP kernels and for the serial-vs-parallel benchmark.
namespace serial {
AxiomResult check_unanimity(const CompiledScf& f, Budget& budget);
AxiomResult check_strategy_proof(const CompiledScf& f, Budget& budget);
AxiomResult check_tops_only(const CompiledScf& f, Budget& budget);
AxiomResult check_anonymity(const CompiledScf& f, Budget& budget);
}  // namespace serial

std::uint64_t pow_u64(std::uint64_t base, int exp);
void profile_from_rank(std::uint64_t rank, int n, int dsize, std::vector<int>& out);

}  // namespace domainlab

#endif

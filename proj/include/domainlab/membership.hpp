#ifndef DOMAINLAB_MEMBERSHIP_HPP
#define DOMAINLAB_MEMBERSHIP_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "domainlab/prefcore.hpp"
#include "domainlab/structure.hpp"
#include "domainlab/trees.hpp"

namespace domainlab {

struct BudgetExhausted : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Shared evaluation budget. Costs are spent up front where a stage's size
/// is known, so outcomes never depend on scheduling.
struct Budget {
    std::uint64_t limit = 100'000'000;
    std::uint64_t used = 0;

    bool try_spend(std::uint64_t n) {
        if (n > limit - used) return false;
        used += n;
        return true;
    }
    std::uint64_t remaining() const { return limit - used; }
};

enum class Family { SP, Hybrid, SSP, SH };

std::string family_name(Family f);

struct FamilyKind {
    Family tag;
    Tree tree;
    AltId threshold = -1;  // SSP
    AltId a = -1, b = -1;  // Hybrid / SH
};

bool is_sp_pref(const Preference& p, const Tree& t);
bool is_hybrid_pref(const Preference& p, const Tree& t, AltId a, AltId b);
bool is_ssp_pref(const Preference& p, const Tree& t, AltId xbar);
bool is_sh_pref(const Preference& p, const Tree& t, AltId a, AltId b);
bool is_family_pref(const Preference& p, const FamilyKind& kind);

constexpr int kGenCap = 8;

/// All m! orders filtered by the membership test, in lexicographic ranking
/// order. Labels a1..am unless `labels` given.
Domain gen_family(const FamilyKind& kind, int cap = kGenCap,
                  const std::vector<std::string>* labels = nullptr);

enum class CertStatus { Certified, Absent, Inconclusive };

struct DomainCertificate {
    FamilyKind kind;
    std::vector<AltId> free_zone;  // sorted ids; path(a,b) for Hybrid/SH
    bool degenerate = false;
    bool cond_i = false, cond_ii = false, cond_iii = false;
    /// Def 6(iii) is stated only for tree adjacency graphs; set when it was
    /// treated as vacuous because the adjacency graph is not a tree.
    bool cond_iii_vacuous_nontree = false;
};

struct CertifyResult {
    CertStatus status = CertStatus::Absent;
    std::optional<DomainCertificate> cert;
    /// For SH/Hybrid: a minimal candidate that met (i)+(ii) but failed (iii),
    /// kept for diagnostics.
    std::optional<DomainCertificate> rejected;
    std::uint64_t evaluations = 0;
};

CertifyResult certify_sp_domain(const Domain& d, Budget& budget);
CertifyResult certify_ssp_domain(const Domain& d, Budget& budget);
CertifyResult certify_hybrid_domain(const Domain& d, Budget& budget);
CertifyResult certify_sh_domain(const Domain& d, Budget& budget);

/// Exhaustive (tree x parameter) scan oracles; exponential, test use only.
CertifyResult certify_sp_by_tree_scan(const Domain& d, Budget& budget);
CertifyResult certify_ssp_by_tree_scan(const Domain& d, Budget& budget);
bool sh_cover_exists_by_tree_scan(const Domain& d, VertexSet free_zone_strictly_inside,
                                  Budget& budget);

}  // namespace domainlab

#endif

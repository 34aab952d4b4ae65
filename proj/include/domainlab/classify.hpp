#ifndef DOMAINLAB_CLASSIFY_HPP
#define DOMAINLAB_CLASSIFY_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "domainlab/membership.hpp"
#include "domainlab/rules.hpp"
#include "domainlab/structure.hpp"

namespace domainlab {

enum class Taxonomy {
    NotUnidimensional,
    Dictatorial,
    SemiSinglePeaked,
    SemiHybrid,
    Inconclusive,
};

std::string taxonomy_name(Taxonomy t);

/// An edge orientation (x, y) meeting all three strategy-proofness /
/// non-tops-only conditions, with the pair of same-peak preferences
/// disagreeing on x vs y.
struct CriticalSpot {
    AltId x, y;
    int witness_pref_yx;  // ranks y above x
    int witness_pref_xy;  // ranks x above y
};

struct RuleCheck {
    std::string name;
    Scf scf;
    std::map<std::string, AxiomResult> axioms;
    std::optional<DictatorScan> dictator_scan;
    std::vector<AltId> dictator_scope;
};

struct Verdict {
    RichnessReport richness;
    std::optional<std::pair<AltId, AltId>> usp;
    Taxonomy taxonomy = Taxonomy::Inconclusive;
    std::optional<DomainCertificate> certificate;
    std::vector<RuleCheck> constructed_rules;
    std::vector<CriticalSpot> critical_spots;
    /// Best-effort certification attempts when the domain is not
    /// unidimensional (Tables 2-3 style inputs stay analyzable).
    std::vector<CertifyResult> advisory;
    std::string inconclusive_reason;
};

/// The classification pipeline: richness, unique seconds / almost
/// dictatorship, then the semi-single-peaked vs semi-hybrid dichotomy with
/// canonical rules verified exhaustively. Requires m >= 3.
Verdict classify(const Domain& d, Budget& budget);

std::vector<CriticalSpot> find_critical_spots(const Domain& d, const Tree& t,
                                              Budget& budget);

/// Checks the critical-spot iff against the certificate: for an SSP
/// certificate, d escapes single-peakedness on the tree exactly when a spot
/// exists; for an SH certificate, d escapes hybridness exactly when a spot
/// lies strictly inside a side set.
bool verify_prop1(const Domain& d, const DomainCertificate& cert, Budget& budget);

/// Builds the PNT rule for a found spot and verifies it: unanimous and
/// strategy-proof, not tops-only. A mismatch is an internal error.
RuleCheck build_verified_pnt(const Domain& d, const Tree& t, const CriticalSpot& spot,
                             int i, int j, int n, Budget& budget);

}  // namespace domainlab

#endif

#ifndef DOMAINLAB_REPORT_HPP
#define DOMAINLAB_REPORT_HPP

#include <string>

#include "json.hpp"

#include "domainlab/classify.hpp"
#include "domainlab/enumerate.hpp"

namespace domainlab {

constexpr int kSchemaVersion = 1;

using Json = nlohmann::json;

Json tree_to_json(const Tree& t, const std::vector<std::string>& labels);
Tree tree_from_json(const Json& j, const Domain& d);

Json scf_to_json(const Scf& f, const Domain& d);
Scf scf_from_json(const Json& j, const Domain& d);

Json witness_to_json(const AxiomWitness& w, const Domain& d);
Json axiom_result_to_json(const AxiomResult& r, const Domain& d);
Json richness_to_json(const RichnessReport& r, const Domain& d);
Json certificate_to_json(const DomainCertificate& c, const Domain& d);
Json certify_result_to_json(const CertifyResult& r, const Domain& d);
Json rule_check_to_json(const RuleCheck& rc, const Domain& d);
Json verdict_to_json(const Verdict& v, const Domain& d);
Json spots_to_json(const std::vector<CriticalSpot>& spots, const Domain& d);
Json enum_result_to_json(const EnumResult& r, const Domain& d,
                         const std::vector<Decomposition>* decompositions);

std::string richness_to_text(const RichnessReport& r, const Domain& d);
std::string verdict_to_text(const Verdict& v, const Domain& d);

/// Stable serialization used everywhere output must be byte-identical.
std::string dump(const Json& j);

}  // namespace domainlab

#endif

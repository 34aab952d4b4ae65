#include "domainlab/rules.hpp"

// Plain nested-loop implementations of the axiom scans. They return the same
// canonical-first witnesses as the OpenMP kernels and exist to validate them
// (tests assert agreement) and as the baseline for the benchmark.

namespace domainlab::serial {

namespace {

bool next_profile(std::vector<int>& profile, int dsize) {
    for (int v = static_cast<int>(profile.size()) - 1; v >= 0; --v) {
        if (++profile[static_cast<size_t>(v)] < dsize) return true;
        profile[static_cast<size_t>(v)] = 0;
    }
    return false;
}

}  // namespace

AxiomResult check_unanimity(const CompiledScf& f, Budget& budget) {
    const Domain& d = f.domain();
    const int n = f.n();
    std::uint64_t cost = 0;
    for (AltId a = 0; a < d.m(); ++a)
        cost += pow_u64(d.prefs_with_peak(a).size(), n);
    if (!budget.try_spend(cost)) return {Outcome::Budget, std::nullopt, 0};
    AxiomResult result;
    result.evaluations = cost;
    for (AltId a = 0; a < d.m(); ++a) {
        const auto& group = d.prefs_with_peak(a);
        if (group.empty()) continue;
        std::vector<int> sel(static_cast<size_t>(n), 0);
        do {
            std::vector<int> profile(sel);
            for (auto& v : profile) v = group[static_cast<size_t>(v)];
            const AltId out = f.eval(profile);
            if (out != a) {
                result.outcome = Outcome::Fails;
                result.witness = AxiomWitness{profile, {}, -1, -1, out, a};
                return result;
            }
        } while (next_profile(sel, static_cast<int>(group.size())));
    }
    return result;
}

AxiomResult check_strategy_proof(const CompiledScf& f, Budget& budget) {
    const Domain& d = f.domain();
    const int n = f.n();
    const int dsize = d.size();
    const std::uint64_t profiles = pow_u64(static_cast<std::uint64_t>(dsize), n);
    const std::uint64_t cost =
        profiles * (1 + static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(dsize));
    if (!budget.try_spend(cost)) return {Outcome::Budget, std::nullopt, 0};
    AxiomResult result;
    result.evaluations = cost;
    for (int v = 0; v < n; ++v) {
        std::vector<int> profile(static_cast<size_t>(n), 0);
        do {
            const AltId truthful = f.eval(profile);
            const int true_pref = profile[static_cast<size_t>(v)];
            const Preference& pv = d.pref(true_pref);
            for (int dev = 0; dev < dsize; ++dev) {
                if (dev == true_pref) continue;
                profile[static_cast<size_t>(v)] = dev;
                const AltId manipulated = f.eval(profile);
                profile[static_cast<size_t>(v)] = true_pref;
                if (manipulated != truthful && pv.prefers(manipulated, truthful)) {
                    result.outcome = Outcome::Fails;
                    result.witness =
                        AxiomWitness{profile, {}, v, dev, truthful, manipulated};
                    return result;
                }
            }
        } while (next_profile(profile, dsize));
    }
    return result;
}

AxiomResult check_tops_only(const CompiledScf& f, Budget& budget) {
    const Domain& d = f.domain();
    const int n = f.n();
    const int dsize = d.size();
    const std::uint64_t profiles = pow_u64(static_cast<std::uint64_t>(dsize), n);
    if (!budget.try_spend(profiles)) return {Outcome::Budget, std::nullopt, 0};
    AxiomResult result;
    result.evaluations = profiles;
    const std::uint64_t groups = pow_u64(static_cast<std::uint64_t>(d.m()), n);
    std::vector<std::vector<int>> first(groups);
    std::vector<AltId> first_out(groups, -1);
    std::vector<int> profile(static_cast<size_t>(n), 0);
    do {
        const AltId out = f.eval(profile);
        std::uint64_t pv = 0;
        for (int v = 0; v < n; ++v)
            pv = pv * static_cast<std::uint64_t>(d.m()) +
                 static_cast<std::uint64_t>(d.pref(profile[static_cast<size_t>(v)]).top());
        if (first[pv].empty()) {
            first[pv] = profile;
            first_out[pv] = out;
        } else if (first_out[pv] != out) {
            result.outcome = Outcome::Fails;
            result.witness = AxiomWitness{first[pv], profile, -1, -1, first_out[pv], out};
            return result;
        }
    } while (next_profile(profile, dsize));
    return result;
}

AxiomResult check_anonymity(const CompiledScf& f, Budget& budget) {
    const Domain& d = f.domain();
    const int n = f.n();
    std::vector<std::vector<int>> perms;
    {
        std::vector<int> idx(static_cast<size_t>(n));
        for (int v = 0; v < n; ++v) idx[static_cast<size_t>(v)] = v;
        do {
            perms.push_back(idx);
        } while (std::next_permutation(idx.begin(), idx.end()));
    }
    const int dsize = d.size();
    const std::uint64_t profiles = pow_u64(static_cast<std::uint64_t>(dsize), n);
    if (!budget.try_spend(profiles * perms.size()))
        return {Outcome::Budget, std::nullopt, 0};
    AxiomResult result;
    result.evaluations = profiles * perms.size();
    std::vector<int> profile(static_cast<size_t>(n), 0);
    std::vector<int> permuted(static_cast<size_t>(n));
    do {
        const AltId out = f.eval(profile);
        for (size_t s = 1; s < perms.size(); ++s) {
            for (int v = 0; v < n; ++v)
                permuted[static_cast<size_t>(v)] =
                    profile[static_cast<size_t>(perms[s][static_cast<size_t>(v)])];
            const AltId out2 = f.eval(permuted);
            if (out2 != out) {
                result.outcome = Outcome::Fails;
                result.witness =
                    AxiomWitness{profile, permuted, static_cast<int>(s), -1, out, out2};
                return result;
            }
        }
    } while (next_profile(profile, dsize));
    return result;
}

}  // namespace domainlab::serial

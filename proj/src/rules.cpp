#include "domainlab/rules.hpp"

#include <algorithm>
#include <bit>
#include <numeric>

namespace domainlab {

std::string Scf::kind_name() const {
    switch (body.index()) {
        case 0: return "projection";
        case 1: return "hybrid";
        case 2: return "pnt";
        case 3: return "dictatorship";
        case 4: return "almost_dictatorship";
        case 5: return "peak_table";
        case 6: return "full_table";
    }
    return "?";
}

namespace {

void require_voter(int voter, int n) {
    if (voter < 0 || voter >= n) throw std::invalid_argument("voter index out of range");
}

}  // namespace

Scf make_projection(const Tree& t, AltId threshold, int n) {
    if (n < 1) throw std::invalid_argument("need at least one voter");
    if (threshold < 0 || threshold >= t.m())
        throw std::invalid_argument("threshold out of range");
    return Scf{n, ProjectionRule{t, threshold}};
}

Scf make_hybrid(const Tree& t, AltId a, AltId b, int voter, int n) {
    if (!is_dual_thresholds(t, a, b))
        throw std::invalid_argument("hybrid rule needs dual-thresholds");
    if (static_cast<int>(path(t, a, b).size()) < 3)
        throw std::invalid_argument("hybrid rule needs a free zone of size >= 3");
    require_voter(voter, n);
    return Scf{n, HybridRuleBody{t, a, b, voter}};
}

Scf make_pnt(const Tree& t, AltId x, AltId y, int i, int j, int n) {
    if (!t.graph().has_edge(x, y))
        throw std::invalid_argument("pnt rule needs an edge of the tree");
    require_voter(i, n);
    require_voter(j, n);
    if (i == j) throw std::invalid_argument("pnt rule needs distinct voters");
    return Scf{n, PntRule{t, x, y, i, j}};
}

Scf make_dictatorship(int voter, int n) {
    require_voter(voter, n);
    return Scf{n, DictatorshipRule{voter}};
}

Scf make_almost_dictatorship(AltId x, AltId y, int i, int j, int n) {
    if (x == y) throw std::invalid_argument("x and y must be distinct");
    require_voter(i, n);
    require_voter(j, n);
    if (i == j) throw std::invalid_argument("almost dictatorship needs distinct voters");
    return Scf{n, AlmostDictatorshipRule{x, y, i, j}};
}

Scf make_peak_table(int m, std::vector<AltId> table) {
    if (static_cast<int>(table.size()) != m * m)
        throw std::invalid_argument("peak table must have m*m entries");
    for (AltId a = 0; a < m; ++a)
        if (table[static_cast<size_t>(a) * static_cast<size_t>(m) +
                  static_cast<size_t>(a)] != a)
            throw std::invalid_argument("peak table diagonal must be the identity");
    return Scf{2, PeakTableRule{m, std::move(table)}};
}

Scf make_full_table(const Domain& d, int n, std::vector<AltId> entries) {
    const std::uint64_t total = pow_u64(static_cast<std::uint64_t>(d.size()), n);
    if (total > 1'000'000) throw std::invalid_argument("full table too large (|d|^n > 1e6)");
    if (entries.size() != total)
        throw std::invalid_argument("full table needs |d|^n entries");
    return Scf{n, FullTableRule{std::move(entries)}};
}

std::uint64_t pow_u64(std::uint64_t base, int exp) {
    std::uint64_t r = 1;
    for (int i = 0; i < exp; ++i) r *= base;
    return r;
}

void profile_from_rank(std::uint64_t rank, int n, int dsize, std::vector<int>& out) {
    out.resize(static_cast<size_t>(n));
    for (int v = n - 1; v >= 0; --v) {
        out[static_cast<size_t>(v)] = static_cast<int>(rank % static_cast<std::uint64_t>(dsize));
        rank /= static_cast<std::uint64_t>(dsize);
    }
}

CompiledScf::CompiledScf(const Scf& scf, const Domain& d)
    : scf_(scf), d_(&d), n_(scf.n), m_(d.m()) {
    peak_of_.reserve(static_cast<size_t>(d.size()));
    for (const auto& p : d.prefs()) peak_of_.push_back(p.top());

    auto compile_tree = [&](const Tree& t) {
        if (t.m() != m_) throw std::invalid_argument("rule tree over wrong alternative set");
        paths_ = std::make_shared<PathTable>(t);
    };

    if (const auto* pr = std::get_if<ProjectionRule>(&scf_.body)) {
        compile_tree(pr->tree);
        param_x_ = pr->threshold;
        if (n_ == 2) {
            pair_table_.resize(static_cast<size_t>(m_) * static_cast<size_t>(m_));
            for (AltId u = 0; u < m_; ++u)
                for (AltId v = 0; v < m_; ++v)
                    pair_table_[static_cast<size_t>(u) * static_cast<size_t>(m_) +
                                static_cast<size_t>(v)] =
                        paths_->project_onto(param_x_, paths_->path_mask(u, v));
        }
    } else if (const auto* hy = std::get_if<HybridRuleBody>(&scf_.body)) {
        compile_tree(hy->tree);
        param_x_ = hy->a;
        param_y_ = hy->b;
        voter_i_ = hy->dictator;
        region_a_ = side_set(hy->tree, hy->a, hy->b);
        region_b_ = side_set(hy->tree, hy->b, hy->a);
        fz_ = paths_->path_mask(hy->a, hy->b);
    } else if (const auto* pnt = std::get_if<PntRule>(&scf_.body)) {
        compile_tree(pnt->tree);
        param_x_ = pnt->x;
        param_y_ = pnt->y;
        voter_i_ = pnt->i;
        voter_j_ = pnt->j;
        region_a_ = side_set(pnt->tree, pnt->x, pnt->y);  // A^{x->y}
        region_b_ = side_set(pnt->tree, pnt->y, pnt->x);  // A^{y->x}
    } else if (const auto* dict = std::get_if<DictatorshipRule>(&scf_.body)) {
        voter_i_ = dict->voter;
    } else if (const auto* ad = std::get_if<AlmostDictatorshipRule>(&scf_.body)) {
        if (ad->x >= m_ || ad->y >= m_)
            throw std::invalid_argument("almost dictatorship alternatives out of range");
        param_x_ = ad->x;
        param_y_ = ad->y;
        voter_i_ = ad->i;
        voter_j_ = ad->j;
    } else if (const auto* pt = std::get_if<PeakTableRule>(&scf_.body)) {
        if (pt->m != m_) throw std::invalid_argument("peak table over wrong alternative set");
        if (n_ != 2) throw std::invalid_argument("peak table rules are two-voter");
    } else if (const auto* ft = std::get_if<FullTableRule>(&scf_.body)) {
        if (ft->entries.size() != pow_u64(static_cast<std::uint64_t>(d.size()), n_))
            throw std::invalid_argument("full table sized for a different domain");
    }
}

VertexSet CompiledScf::peaks_subtree(std::span<const int> profile) const {
    VertexSet out = 0;
    for (size_t i = 0; i < profile.size(); ++i) {
        const AltId pi = peak_of_[static_cast<size_t>(profile[i])];
        out |= singleton(pi);
        for (size_t j = i + 1; j < profile.size(); ++j)
            out |= paths_->path_mask(pi, peak_of_[static_cast<size_t>(profile[j])]);
    }
    return out;
}

AltId CompiledScf::eval_projection(std::span<const int> profile) const {
    if (n_ == 2)
        return pair_table_[static_cast<size_t>(peak_of_[static_cast<size_t>(profile[0])]) *
                               static_cast<size_t>(m_) +
                           static_cast<size_t>(peak_of_[static_cast<size_t>(profile[1])])];
    return paths_->project_onto(param_x_, peaks_subtree(profile));
}

AltId CompiledScf::eval_hybrid(std::span<const int> profile) const {
    const AltId peak = peak_of_[static_cast<size_t>(profile[static_cast<size_t>(voter_i_)])];
    if (in_set(fz_, peak)) return peak;
    const AltId target = in_set(region_a_, peak) ? param_x_ : param_y_;
    return paths_->project_onto(target, peaks_subtree(profile));
}

AltId CompiledScf::eval_pnt(std::span<const int> profile) const {
    const AltId pi = peak_of_[static_cast<size_t>(profile[static_cast<size_t>(voter_i_)])];
    if (in_set(region_b_, pi)) return pi;
    const AltId pj = peak_of_[static_cast<size_t>(profile[static_cast<size_t>(voter_j_)])];
    if (in_set(region_a_, pj)) return paths_->project_onto(param_x_, peaks_subtree(profile));
    const Preference& qj = d_->pref(profile[static_cast<size_t>(voter_j_)]);
    return qj.prefers(param_x_, param_y_) ? param_x_ : param_y_;
}

AltId CompiledScf::eval(std::span<const int> profile) const {
    if (static_cast<int>(profile.size()) != n_)
        throw std::invalid_argument("profile length does not match rule");
    switch (scf_.body.index()) {
        case 0: return eval_projection(profile);
        case 1: return eval_hybrid(profile);
        case 2: return eval_pnt(profile);
        case 3: return peak_of_[static_cast<size_t>(profile[static_cast<size_t>(voter_i_)])];
        case 4: {
            const AltId pi =
                peak_of_[static_cast<size_t>(profile[static_cast<size_t>(voter_i_)])];
            if (pi != param_x_) return pi;
            const Preference& qj = d_->pref(profile[static_cast<size_t>(voter_j_)]);
            return qj.prefers(param_x_, param_y_) ? param_x_ : param_y_;
        }
        case 5: {
            const auto& pt = std::get<PeakTableRule>(scf_.body);
            return pt.at(peak_of_[static_cast<size_t>(profile[0])],
                         peak_of_[static_cast<size_t>(profile[1])]);
        }
        case 6: {
            const auto& ft = std::get<FullTableRule>(scf_.body);
            std::uint64_t rank = 0;
            for (int v = 0; v < n_; ++v)
                rank = rank * static_cast<std::uint64_t>(d_->size()) +
                       static_cast<std::uint64_t>(profile[static_cast<size_t>(v)]);
            return ft.entries[rank];
        }
    }
    throw std::logic_error("unhandled rule kind");
}

AltId eval(const Scf& f, const Domain& d, const Profile& p) {
    return CompiledScf(f, d).eval(p);
}

namespace {

constexpr std::uint64_t kNoKey = ~std::uint64_t{0};

struct Best {
    std::uint64_t key = kNoKey;
    AxiomWitness witness;
};

void merge_best(Best& global, const Best& local) {
    if (local.key < global.key) global = local;
}

std::vector<std::vector<int>> permutations_of(int n) {
    std::vector<int> idx(static_cast<size_t>(n));
    std::iota(idx.begin(), idx.end(), 0);
    std::vector<std::vector<int>> out;
    do {
        out.push_back(idx);
    } while (std::next_permutation(idx.begin(), idx.end()));
    return out;
}

}  // namespace

AxiomResult check_unanimity(const CompiledScf& f, Budget& budget) {
    const Domain& d = f.domain();
    const int n = f.n();
    AxiomResult result;
    std::uint64_t cost = 0;
    for (AltId a = 0; a < d.m(); ++a)
        cost += pow_u64(d.prefs_with_peak(a).size(), n);
    if (!budget.try_spend(cost)) return {Outcome::Budget, std::nullopt, 0};
    result.evaluations = cost;

    for (AltId a = 0; a < d.m(); ++a) {
        const auto& group = d.prefs_with_peak(a);
        if (group.empty()) continue;
        const std::uint64_t total = pow_u64(group.size(), n);
        Best best;
#pragma omp parallel
        {
            Best local;
            std::vector<int> profile;
#pragma omp for schedule(static) nowait
            for (long long r = 0; r < static_cast<long long>(total); ++r) {
                profile_from_rank(static_cast<std::uint64_t>(r), n,
                                  static_cast<int>(group.size()), profile);
                for (auto& v : profile) v = group[static_cast<size_t>(v)];
                const AltId out = f.eval(profile);
                if (out != a && static_cast<std::uint64_t>(r) < local.key) {
                    local.key = static_cast<std::uint64_t>(r);
                    local.witness =
                        AxiomWitness{profile, {}, -1, -1, out, a};
                }
            }
#pragma omp critical
            merge_best(best, local);
        }
        if (best.key != kNoKey) {
            result.outcome = Outcome::Fails;
            result.witness = best.witness;
            return result;
        }
    }
    result.outcome = Outcome::Holds;
    return result;
}

AxiomResult check_strategy_proof(const CompiledScf& f, Budget& budget) {
    const Domain& d = f.domain();
    const int n = f.n();
    const int dsize = d.size();
    const std::uint64_t profiles = pow_u64(static_cast<std::uint64_t>(dsize), n);
    const std::uint64_t cost =
        profiles * (1 + static_cast<std::uint64_t>(n) * static_cast<std::uint64_t>(dsize));
    AxiomResult result;
    if (!budget.try_spend(cost)) return {Outcome::Budget, std::nullopt, 0};
    result.evaluations = cost;

    Best best;
#pragma omp parallel
    {
        Best local;
        std::vector<int> profile;
#pragma omp for schedule(static) nowait
        for (long long r = 0; r < static_cast<long long>(profiles); ++r) {
            profile_from_rank(static_cast<std::uint64_t>(r), n, dsize, profile);
            const AltId truthful = f.eval(profile);
            for (int v = 0; v < n; ++v) {
                const int true_pref = profile[static_cast<size_t>(v)];
                const Preference& pv = d.pref(true_pref);
                for (int dev = 0; dev < dsize; ++dev) {
                    if (dev == true_pref) continue;
                    profile[static_cast<size_t>(v)] = dev;
                    const AltId manipulated = f.eval(profile);
                    profile[static_cast<size_t>(v)] = true_pref;
                    if (manipulated != truthful && pv.prefers(manipulated, truthful)) {
                        // canonical order: voter, then profile, then deviation
                        const std::uint64_t key =
                            (static_cast<std::uint64_t>(v) * profiles +
                             static_cast<std::uint64_t>(r)) *
                                static_cast<std::uint64_t>(dsize) +
                            static_cast<std::uint64_t>(dev);
                        if (key < local.key) {
                            local.key = key;
                            local.witness =
                                AxiomWitness{profile, {}, v, dev, truthful, manipulated};
                        }
                    }
                }
            }
        }
#pragma omp critical
        merge_best(best, local);
    }
    if (best.key != kNoKey) {
        result.outcome = Outcome::Fails;
        result.witness = best.witness;
    }
    return result;
}

AxiomResult check_tops_only(const CompiledScf& f, Budget& budget) {
    const Domain& d = f.domain();
    const int n = f.n();
    const int dsize = d.size();
    const std::uint64_t profiles = pow_u64(static_cast<std::uint64_t>(dsize), n);
    AxiomResult result;
    if (!budget.try_spend(profiles)) return {Outcome::Budget, std::nullopt, 0};
    result.evaluations = profiles;

    const std::uint64_t groups = pow_u64(static_cast<std::uint64_t>(d.m()), n);
    std::vector<std::int64_t> first_profile(groups, -1);
    std::vector<AltId> first_outcome(groups, -1);
    constexpr std::uint64_t kBlock = 1 << 18;
    std::vector<AltId> outcomes(static_cast<size_t>(std::min(profiles, kBlock)));
    std::vector<int> scratch;
    for (std::uint64_t base = 0; base < profiles; base += kBlock) {
        const std::uint64_t count = std::min(kBlock, profiles - base);
#pragma omp parallel
        {
            std::vector<int> profile;
#pragma omp for schedule(static)
            for (long long i = 0; i < static_cast<long long>(count); ++i) {
                profile_from_rank(base + static_cast<std::uint64_t>(i), n, dsize, profile);
                outcomes[static_cast<size_t>(i)] = f.eval(profile);
            }
        }
        for (std::uint64_t i = 0; i < count; ++i) {
            const std::uint64_t r = base + i;
            profile_from_rank(r, n, dsize, scratch);
            std::uint64_t pv = 0;
            for (int v = 0; v < n; ++v)
                pv = pv * static_cast<std::uint64_t>(d.m()) +
                     static_cast<std::uint64_t>(d.pref(scratch[static_cast<size_t>(v)]).top());
            if (first_profile[pv] < 0) {
                first_profile[pv] = static_cast<std::int64_t>(r);
                first_outcome[pv] = outcomes[static_cast<size_t>(i)];
            } else if (first_outcome[pv] != outcomes[static_cast<size_t>(i)]) {
                std::vector<int> other;
                profile_from_rank(static_cast<std::uint64_t>(first_profile[pv]), n, dsize,
                                  other);
                result.outcome = Outcome::Fails;
                result.witness = AxiomWitness{other, scratch, -1, -1, first_outcome[pv],
                                              outcomes[static_cast<size_t>(i)]};
                return result;
            }
        }
    }
    result.outcome = Outcome::Holds;
    return result;
}

AxiomResult check_anonymity(const CompiledScf& f, Budget& budget) {
    const Domain& d = f.domain();
    const int n = f.n();
    if (n > 6) throw std::invalid_argument("anonymity check supports n <= 6");
    const int dsize = d.size();
    const std::uint64_t profiles = pow_u64(static_cast<std::uint64_t>(dsize), n);
    const auto perms = permutations_of(n);
    const std::uint64_t cost = profiles * perms.size();
    AxiomResult result;
    if (!budget.try_spend(cost)) return {Outcome::Budget, std::nullopt, 0};
    result.evaluations = cost;

    Best best;
#pragma omp parallel
    {
        Best local;
        std::vector<int> profile, permuted(static_cast<size_t>(n));
#pragma omp for schedule(static) nowait
        for (long long r = 0; r < static_cast<long long>(profiles); ++r) {
            profile_from_rank(static_cast<std::uint64_t>(r), n, dsize, profile);
            const AltId out = f.eval(profile);
            for (size_t s = 1; s < perms.size(); ++s) {
                for (int v = 0; v < n; ++v)
                    permuted[static_cast<size_t>(v)] =
                        profile[static_cast<size_t>(perms[s][static_cast<size_t>(v)])];
                const AltId out2 = f.eval(permuted);
                if (out2 != out) {
                    const std::uint64_t key =
                        static_cast<std::uint64_t>(r) * perms.size() + s;
                    if (key < local.key) {
                        local.key = key;
                        local.witness = AxiomWitness{profile, permuted,
                                                     static_cast<int>(s), -1, out, out2};
                    }
                }
            }
        }
#pragma omp critical
        merge_best(best, local);
    }
    if (best.key != kNoKey) {
        result.outcome = Outcome::Fails;
        result.witness = best.witness;
    }
    return result;
}

AxiomResult check_invariance(const CompiledScf& f, bool strict) {
    const Domain& d = f.domain();
    if (f.n() != 2) throw std::invalid_argument("invariance is a two-voter axiom");
    AxiomResult result;
    bool any_pair = false;
    for (int i = 0; i < d.size(); ++i) {
        for (int j = i + 1; j < d.size(); ++j) {
            if (!is_complete_reversal(d.pref(i), d.pref(j))) continue;
            any_pair = true;
            std::vector<int> low_high{i, j}, high_low{j, i};
            const AltId out1 = f.eval(low_high);
            const AltId out2 = f.eval(high_low);
            result.evaluations += 2;
            if (out1 != out2) {
                result.outcome = Outcome::Fails;
                result.witness = AxiomWitness{low_high, high_low, -1, -1, out1, out2};
                return result;
            }
            if (!strict) return result;
        }
    }
    if (!any_pair)
        throw std::invalid_argument("invariance needs a completely reversed pair");
    return result;
}

DictatorScan dictator_on(const CompiledScf& f, const std::vector<AltId>& B, Budget& budget) {
    const Domain& d = f.domain();
    const int n = f.n();
    DictatorScan scan;
    scan.failures.assign(static_cast<size_t>(n), std::nullopt);
    std::vector<int> allowed;
    for (int i = 0; i < d.size(); ++i)
        if (std::find(B.begin(), B.end(), d.pref(i).top()) != B.end()) allowed.push_back(i);
    const std::uint64_t total = pow_u64(allowed.size(), n);
    if (!budget.try_spend(total * static_cast<std::uint64_t>(n))) {
        scan.outcome = Outcome::Budget;
        return scan;
    }
    for (int v = 0; v < n; ++v) {
        Best best;
#pragma omp parallel
        {
            Best local;
            std::vector<int> profile;
#pragma omp for schedule(static) nowait
            for (long long r = 0; r < static_cast<long long>(total); ++r) {
                profile_from_rank(static_cast<std::uint64_t>(r), n,
                                  static_cast<int>(allowed.size()), profile);
                for (auto& x : profile) x = allowed[static_cast<size_t>(x)];
                const AltId out = f.eval(profile);
                const AltId peak = d.pref(profile[static_cast<size_t>(v)]).top();
                if (out != peak && static_cast<std::uint64_t>(r) < local.key) {
                    local.key = static_cast<std::uint64_t>(r);
                    local.witness = AxiomWitness{profile, {}, v, -1, out, peak};
                }
            }
#pragma omp critical
            merge_best(best, local);
        }
        if (best.key == kNoKey) {
            scan.dictator = v;
            return scan;
        }
        scan.failures[static_cast<size_t>(v)] = best.witness;
    }
    return scan;
}

}  // namespace domainlab

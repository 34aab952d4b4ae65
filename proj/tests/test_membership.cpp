#include "doctest.h"

#include <algorithm>
#include <set>

#include "domainlab/membership.hpp"
#include "fixtures.hpp"

using namespace domainlab;

namespace {

Budget fresh() { return Budget{100'000'000, 0}; }

bool contains_pref(const Domain& d, const Preference& p) {
    return std::any_of(d.prefs().begin(), d.prefs().end(),
                       [&](const Preference& q) { return q == p; });
}

bool subset_of(const Domain& small, const Domain& big) {
    return std::all_of(small.prefs().begin(), small.prefs().end(),
                       [&](const Preference& p) { return contains_pref(big, p); });
}

}  // namespace

TEST_CASE("single-peakedness on the line") {
    const Domain d = fixtures::table1();
    const Tree l6 = line_tree(6);
    CHECK(is_sp_pref(d.pref(0), l6));    // P1 declines from a1
    CHECK(!is_sp_pref(d.pref(1), l6));   // P2 ranks a5 above a4 with peak a1
    const Preference declining({5, 4, 3, 2, 1, 0});
    CHECK(is_sp_pref(declining, l6));
}

TEST_CASE("hybrid preferences on the line with thresholds (a2, a5)") {
    const Domain d = fixtures::table1();
    const Tree l6 = line_tree(6);
    const AltId a2 = 1, a5 = 4;
    CHECK(is_hybrid_pref(d.pref(1), l6, a2, a5));  // P2
    // every single-peaked preference is hybrid for any dual-thresholds
    for (const auto& p : d.prefs())
        if (is_sp_pref(p, l6)) CHECK(is_hybrid_pref(p, l6, a2, a5));
    // free zone = A accepts everything
    const Domain u4 = fixtures::universal(4);
    for (const auto& p : u4.prefs()) CHECK(is_hybrid_pref(p, line_tree(4), 0, 3));
    CHECK_THROWS(is_hybrid_pref(d.pref(0), fixtures::fig3_tree(d), 1, 5));
}

TEST_CASE("semi-single-peakedness on the figure 3 tree") {
    const Domain d = fixtures::table1();
    const Tree t = fixtures::fig3_tree(d);
    const AltId a2 = *d.id_of("a2");
    for (const auto& p : d.prefs()) CHECK(is_ssp_pref(p, t, a2));
    const Preference p13({4, 2, 1, 0, 3, 5});  // a5 a3 a2 a1 a4 a6
    CHECK(!is_ssp_pref(p13, t, a2));
    // threshold equal to the peak imposes no constraint
    const Domain u4 = fixtures::universal(4);
    for (const auto& p : u4.prefs()) CHECK(is_ssp_pref(p, line_tree(4), p.top()));
}

TEST_CASE("semi-hybrid preferences") {
    const Domain d = fixtures::table1();
    const Tree l6 = line_tree(6);
    const AltId a2 = 1, a5 = 4;
    for (const auto& p : d.prefs()) CHECK(is_sh_pref(p, l6, a2, a5));
    const Preference p13({4, 2, 1, 0, 3, 5});
    CHECK(is_sh_pref(p13, l6, a2, a5));
    // free zone = A accepts everything
    const Domain u4 = fixtures::universal(4);
    for (const auto& p : u4.prefs()) CHECK(is_sh_pref(p, line_tree(4), 0, 3));
    // hybrid implies semi-hybrid
    const Domain u5 = fixtures::universal(5);
    for (const auto& p : u5.prefs())
        if (is_hybrid_pref(p, line_tree(5), 1, 3))
            CHECK(is_sh_pref(p, line_tree(5), 1, 3));
}

TEST_CASE("generator sizes") {
    CHECK(gen_family(FamilyKind{Family::SP, line_tree(3), -1, -1, -1}).size() == 4);
    // dual-thresholds forming an edge collapse hybrid to single-peaked
    const Tree l6 = line_tree(6);
    const Domain h = gen_family(FamilyKind{Family::Hybrid, l6, -1, 2, 3});
    const Domain sp = gen_family(FamilyKind{Family::SP, l6, -1, -1, -1});
    CHECK(h.size() == sp.size());
    CHECK(subset_of(sp, h));
    CHECK_THROWS(gen_family(FamilyKind{Family::SP, line_tree(9), -1, -1, -1}));
}

TEST_CASE("free zone of size two: semi-hybrid equals the threshold intersection") {
    const Tree l4 = line_tree(4);
    const Domain sh = gen_family(FamilyKind{Family::SH, l4, -1, 1, 2});
    const Domain ssp_a = gen_family(FamilyKind{Family::SSP, l4, 1, -1, -1});
    const Domain ssp_b = gen_family(FamilyKind{Family::SSP, l4, 2, -1, -1});
    std::set<std::vector<AltId>> inter;
    for (const auto& p : ssp_a.prefs())
        if (contains_pref(ssp_b, p)) inter.insert(p.ranking());
    std::set<std::vector<AltId>> shs;
    for (const auto& p : sh.prefs()) shs.insert(p.ranking());
    CHECK(shs == inter);
}

TEST_CASE("interior order of the free zone does not matter for semi-hybridness") {
    // same partition/side trees, two different free-zone interior orders
    const Tree t1 = line_tree(6);  // a1-a2-a3-a4-a5-a6
    const Tree t2(6, {{0, 1}, {1, 3}, {3, 2}, {2, 4}, {4, 5}});  // interior a4,a3
    const Domain u6 = fixtures::universal(6);
    for (const auto& p : u6.prefs())
        CHECK(is_sh_pref(p, t1, 1, 4) == is_sh_pref(p, t2, 1, 4));
}

TEST_CASE("nesting of generated families") {
    enumerate_trees(4, [&](const Tree& t) {
        const Domain sp = gen_family(FamilyKind{Family::SP, t, -1, -1, -1});
        for (AltId x = 0; x < 4; ++x) {
            const Domain ssp = gen_family(FamilyKind{Family::SSP, t, x, -1, -1});
            CHECK(subset_of(sp, ssp));
        }
        for (AltId a = 0; a < 4; ++a)
            for (AltId b = a + 1; b < 4; ++b) {
                if (!is_dual_thresholds(t, a, b)) continue;
                const Domain h = gen_family(FamilyKind{Family::Hybrid, t, -1, a, b});
                const Domain sh = gen_family(FamilyKind{Family::SH, t, -1, a, b});
                CHECK(subset_of(sp, h));
                CHECK(subset_of(h, sh));
            }
        return true;
    });
}

TEST_CASE("single-peaked domain is the intersection of all semi-single-peaked ones") {
    enumerate_trees(4, [&](const Tree& t) {
        const Domain sp = gen_family(FamilyKind{Family::SP, t, -1, -1, -1});
        std::set<std::vector<AltId>> inter;
        bool first = true;
        for (AltId x = 0; x < 4; ++x) {
            const Domain ssp = gen_family(FamilyKind{Family::SSP, t, x, -1, -1});
            std::set<std::vector<AltId>> cur;
            for (const auto& p : ssp.prefs()) cur.insert(p.ranking());
            if (first) {
                inter = cur;
                first = false;
            } else {
                std::set<std::vector<AltId>> merged;
                std::set_intersection(inter.begin(), inter.end(), cur.begin(), cur.end(),
                                      std::inserter(merged, merged.begin()));
                inter = merged;
            }
        }
        std::set<std::vector<AltId>> sps;
        for (const auto& p : sp.prefs()) sps.insert(p.ranking());
        CHECK(sps == inter);
        return true;
    });
}

TEST_CASE("table 1 certifies as semi-single-peaked with threshold a2") {
    const Domain d = fixtures::table1();
    Budget b = fresh();
    const auto res = certify_ssp_domain(d, b);
    REQUIRE(res.status == CertStatus::Certified);
    CHECK(res.cert->kind.tree == fixtures::fig3_tree(d));
    CHECK(res.cert->kind.threshold == *d.id_of("a2"));
    // oracle agrees
    Budget b2{1'000'000'000, 0};
    const auto oracle = certify_ssp_by_tree_scan(d, b2);
    REQUIRE(oracle.status == CertStatus::Certified);
    CHECK(oracle.cert->kind.tree == res.cert->kind.tree);
    CHECK(oracle.cert->kind.threshold == res.cert->kind.threshold);
}

TEST_CASE("generator round trips") {
    const Tree l4 = line_tree(4);
    {
        const Domain g = gen_family(FamilyKind{Family::SSP, l4, 1, -1, -1});
        Budget b = fresh();
        const auto res = certify_ssp_domain(g, b);
        REQUIRE(res.status == CertStatus::Certified);
        CHECK(res.cert->kind.tree == l4);
        CHECK(res.cert->kind.threshold == 1);
    }
    {
        const Tree l5 = line_tree(5);
        const Domain g = gen_family(FamilyKind{Family::SP, l5, -1, -1, -1});
        Budget b = fresh();
        const auto res = certify_sp_domain(g, b);
        REQUIRE(res.status == CertStatus::Certified);
        CHECK(res.cert->kind.tree == l5);
        // any hybrid cover shrinks to an edge free zone, so no hybrid
        // certificate survives minimality + the |free zone| >= 3 clause
        Budget b2 = fresh();
        const auto hyb = certify_hybrid_domain(g, b2);
        CHECK(hyb.status == CertStatus::Absent);
        REQUIRE(hyb.rejected.has_value());
        CHECK(!hyb.rejected->cond_iii);
    }
    {
        const Tree l6 = line_tree(6);
        const Domain g = gen_family(FamilyKind{Family::Hybrid, l6, -1, 1, 4});
        Budget b = fresh();
        const auto res = certify_hybrid_domain(g, b);
        REQUIRE(res.status == CertStatus::Certified);
        CHECK(res.cert->kind.a == 1);
        CHECK(res.cert->kind.b == 4);
        CHECK(res.cert->free_zone == std::vector<AltId>{1, 2, 3, 4});
    }
}

TEST_CASE("the extended table 1 domain is an (a2,a5)-semi-hybrid domain on the line") {
    const Domain d = fixtures::table1_ext();
    Budget b = fresh();
    CHECK(certify_ssp_domain(d, b).status == CertStatus::Absent);
    const auto res = certify_sh_domain(d, b);
    REQUIRE(res.status == CertStatus::Certified);
    CHECK(res.cert->kind.tree == line_tree(6));
    CHECK(res.cert->kind.a == *d.id_of("a2"));
    CHECK(res.cert->kind.b == *d.id_of("a5"));
    CHECK(res.cert->free_zone ==
          std::vector<AltId>{*d.id_of("a2"), *d.id_of("a3"), *d.id_of("a4"),
                             *d.id_of("a5")});
    CHECK(!res.cert->degenerate);
    CHECK(res.cert->cond_iii);
    // minimality cross-check: no strictly smaller semi-hybrid cover exists
    Budget b2{4'000'000'000ull, 0};
    CHECK(!sh_cover_exists_by_tree_scan(d, vector_to_set(res.cert->free_zone), b2));
}

TEST_CASE("table 1 fails semi-hybrid condition (iii) at leaf a2") {
    const Domain d = fixtures::table1();
    Budget b = fresh();
    const auto res = certify_sh_domain(d, b);
    CHECK(res.status == CertStatus::Absent);
    REQUIRE(res.rejected.has_value());
    CHECK(res.rejected->cond_i);
    CHECK(res.rejected->cond_ii);
    CHECK(!res.rejected->cond_iii);
    CHECK(res.rejected->kind.a == *d.id_of("a2"));
    CHECK(res.rejected->kind.b == *d.id_of("a5"));
}

TEST_CASE("table 4 certifies as a degenerate semi-hybrid domain on the line") {
    const Domain d = fixtures::table4();
    Budget b = fresh();
    CHECK(certify_ssp_domain(d, b).status == CertStatus::Absent);
    const auto res = certify_sh_domain(d, b);
    REQUIRE(res.status == CertStatus::Certified);
    CHECK(res.cert->kind.tree == line_tree(4));
    CHECK(res.cert->kind.a == *d.id_of("a1"));
    CHECK(res.cert->kind.b == *d.id_of("a4"));
    CHECK(res.cert->degenerate);
    CHECK(res.cert->cond_iii_vacuous_nontree);
}

TEST_CASE("budget exhaustion is reported as inconclusive") {
    const Domain d = fixtures::table1();
    Budget tiny{3, 0};
    CHECK(certify_ssp_domain(d, tiny).status == CertStatus::Inconclusive);
    Budget tiny2{3, 0};
    CHECK(certify_sh_domain(d, tiny2).status == CertStatus::Inconclusive);
}

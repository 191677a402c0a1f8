#include <catch2/catch_amalgamated.hpp>

#include "hkt/catalog.hpp"
#include "hkt/verify.hpp"

using namespace hkt;

TEST_CASE("quaternion relations") {
    auto ab = build_abelian(4);
    REQUIRE(quaternion_check(ab.hs));
    // K with a sign error: IJ != -JI pattern broken
    auto bad = ab.hs;
    bad.K = bad.K.scaled(Exact(-1));
    REQUIRE_FALSE(quaternion_check(bad));
    auto su3 = build_su3_samelson();
    REQUIRE(quaternion_check(su3.hs));
}

TEST_CASE("is_hkt: torsions coincide on catalog HKT entries") {
    for (const auto& name : {"su3_samelson", "hopf_su2_r", "hopf_x_hopf", "abelian_r8",
                             "dotti_fino_nilpotent"}) {
        auto cat = build_standard_entries();
        const auto* e = find_entry(cat, name);
        REQUIRE(e != nullptr);
        auto hk = is_hkt(e->hs);
        REQUIRE(hk.hkt);
    }
    // flat R^8: common H = 0
    auto flat = build_abelian(8);
    auto hk = is_hkt(flat.hs);
    REQUIRE(hk.hkt);
    REQUIRE(hk.H.is_zero());
    // su(3): H = g([.,.],.) exactly
    auto su3 = build_su3_samelson();
    auto hk3 = is_hkt(su3.hs);
    const auto& L = su3.hs.algebra;
    Index idx = first_combination(3);
    do {
        Exact rhs(0);
        for (int m = 0; m < 8; ++m) rhs += L.c(idx[0], idx[1], m) * su3.hs.g(m, idx[2]);
        REQUIRE(hk3.H(Index(idx)) == rhs);
    } while (next_combination(idx, 8));
}

TEST_CASE("hyper-Hermitian non-HKT entries are detected") {
    auto aa = build_almost_abelian(Exact(-4), Exact(3), {Exact(0), Exact(0), Exact(0)}, "x");
    REQUIRE(quaternion_check(aa.hs));
    for (int w = 0; w < 3; ++w) REQUIRE(nijenhuis(aa.hs.algebra, w == 0 ? aa.hs.I : w == 1 ? aa.hs.J : aa.hs.K).empty());
    auto hk = is_hkt(aa.hs);
    REQUIRE_FALSE(hk.hkt);
    auto rep = classify_hyper(aa.hs);
    REQUIRE_FALSE(rep.strong_hkt);
    REQUIRE_FALSE(rep.hyperkahler);
}

TEST_CASE("bismut connections of the three structures coincide on HKT entries") {
    auto su3 = build_su3_samelson();
    auto BI = bismut_connection(su3.hs.hermitian(0));
    auto BJ = bismut_connection(su3.hs.hermitian(1));
    auto BK = bismut_connection(su3.hs.hermitian(2));
    REQUIRE(BI == BJ);
    REQUIRE(BJ == BK);
}

TEST_CASE("obata connection axioms and role independence") {
    for (const auto& name : {"su3_samelson", "hopf_su2_r", "dotti_fino_nilpotent"}) {
        auto cat = build_standard_entries();
        const auto* e = find_entry(cat, name);
        auto hk = is_hkt(e->hs);
        auto ob = obata_connection(e->hs, hk.H);   // throws if axioms fail
        REQUIRE(torsion_free(ob, e->hs.algebra));
        auto variants = obata_role_variants(e->hs, hk.H);
        REQUIRE(variants[0] == variants[1]);
        REQUIRE(variants[1] == variants[2]);
    }
    // hyper-Kahler flat: Obata = Levi-Civita = 0
    auto flat = build_abelian(8);
    auto hk = is_hkt(flat.hs);
    auto ob = obata_connection(flat.hs, hk.H);
    for (int x = 0; x < 8; ++x) REQUIRE(ob[x].is_zero());
    // su(3): torsion-free but distinct from nabla^B (which is flat)
    auto su3 = build_su3_samelson();
    auto hk3 = is_hkt(su3.hs);
    auto ob3 = obata_connection(su3.hs, hk3.H);
    bool all_zero = true;
    for (int x = 0; x < 8; ++x)
        if (!ob3[x].is_zero()) all_zero = false;
    REQUIRE_FALSE(all_zero);
}

TEST_CASE("obata ricci: Theta = d theta, SU(2)-invariant") {
    auto su3 = build_su3_samelson();
    auto hk = is_hkt(su3.hs);
    auto oric = obata_ricci(su3.hs, hk.H, hk.theta);
    // Theta = d theta = d(-2 e^8) = sqrt(3)(e^45 + e^67)
    InvariantForm<Exact> expect = su3.hs.algebra.d(hk.theta);
    REQUIRE(oric.Theta == expect);
    REQUIRE(oric.Theta(Index{3, 4}) == Exact::sqrt3());
    REQUIRE(oric.Theta(Index{5, 6}) == Exact::sqrt3());
    REQUIRE_FALSE(oric.Theta.is_zero());
    // Hopf: theta != 0 but d theta = 0, so Theta = 0
    auto hopf = build_hopf_su2_r();
    auto hk4 = is_hkt(hopf.hs);
    REQUIRE_FALSE(hk4.theta.is_zero());
    auto oric4 = obata_ricci(hopf.hs, hk4.H, hk4.theta);
    REQUIRE(oric4.Theta.is_zero());
}

TEST_CASE("ricci foliation on su(3)") {
    auto su3 = build_su3_samelson();
    auto hk = is_hkt(su3.hs);
    auto fol = ricci_foliation(su3.hs, hk.theta);
    REQUIRE(fol.rank == 4);
    REQUIRE(fol.rank % 2 == 0);
    REQUIRE(fol.rank < 8);
    REQUIRE(fol.pairing_ok);
    REQUIRE(fol.kernel_contains_quaternionic_span);
    REQUIRE(fol.kernel.size() == 4);
    // hyper-Kahler: kernel is everything
    auto flat = build_abelian(8);
    auto hkf = is_hkt(flat.hs);
    auto folf = ricci_foliation(flat.hs, hkf.theta);
    REQUIRE(folf.rank == 0);
    REQUIRE(folf.kernel.size() == 8);
}

TEST_CASE("q-real check") {
    auto flat = build_abelian(4);
    REQUIRE(q_real_check(flat.hs));
    auto su3 = build_su3_samelson();
    REQUIRE(q_real_check(su3.hs));
    auto df = build_dotti_fino();
    REQUIRE(q_real_check(df.hs));
}

TEST_CASE("classify_hyper against expected flags for every catalog entry") {
    for (const auto& entry : build_standard_entries()) {
        if (!entry.hyper) continue;
        auto rep = classify_hyper(entry.hs);
        for (const auto& [flag, want] : entry.expected) {
            bool got = flag == "hkt"              ? rep.hkt
                     : flag == "strong_hkt"       ? rep.strong_hkt
                     : flag == "hyperkahler"      ? rep.hyperkahler
                     : flag == "balanced"         ? rep.balanced
                     : flag == "parallel_torsion" ? rep.parallel_torsion
                                                  : !want;
            INFO(entry.name << " " << flag);
            REQUIRE(got == want);
        }
    }
}

TEST_CASE("lee forms of I, J, K coincide on every hyper entry") {
    for (const auto& entry : build_standard_entries()) {
        if (!entry.hyper) continue;
        REQUIRE_NOTHROW(is_hkt(entry.hs));   // throws on Lee-form disagreement
    }
}

TEST_CASE("bismut holonomy generators commute with I, J, K and are g-skew") {
    for (const auto& name : {"su3_samelson", "dotti_fino_nilpotent", "hopf_x_hopf"}) {
        auto cat = build_standard_entries();
        const auto* e = find_entry(cat, name);
        auto B = bismut_connection(e->hs.hermitian(0));
        auto hol = holonomy_algebra(B, e->hs.algebra, e->hs.g);
        auto rep = classify_holonomy(hol, e->hs.g, &e->hs.I, &e->hs.J, &e->hs.K);
        if (rep.dimension > 0) {
            REQUIRE(rep.g_skew);
            REQUIRE(rep.commutes_IJK);
            REQUIRE(rep.label == "sp");
        }
    }
    // su(3) is Bismut flat: trivial holonomy
    auto su3 = build_su3_samelson();
    auto B = bismut_connection(su3.hs.hermitian(0));
    REQUIRE(holonomy_algebra(B, su3.hs.algebra, su3.hs.g).empty());
}

TEST_CASE("holonomy annihilates the V-span on strong parallel-torsion entries") {
    for (const auto& name : {"su3_samelson", "hopf_x_hopf"}) {
        auto cat = build_standard_entries();
        const auto* e = find_entry(cat, name);
        auto hk = is_hkt(e->hs);
        auto B = bismut_connection(e->hs.hermitian(0));
        auto hol = holonomy_algebra(B, e->hs.algebra, e->hs.g);
        Vec<Exact> ts = musical_sharp(e->hs.g, hk.theta);
        std::vector<Vec<Exact>> dist{ts, e->hs.I.apply(ts), e->hs.J.apply(ts), e->hs.K.apply(ts)};
        auto rep = classify_holonomy(hol, e->hs.g, &e->hs.I, &e->hs.J, &e->hs.K, &dist);
        REQUIRE(rep.annihilated == 4);
    }
}

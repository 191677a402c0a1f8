#include <catch2/catch_amalgamated.hpp>

#include "hkt/catalog.hpp"
#include "hkt/structure8.hpp"

using namespace hkt;

TEST_CASE("su(3): the full dimension-8 suite, asserted in regime") {
    auto su3 = build_su3_samelson();
    auto rep = analyze_structure8(su3.hs);
    REQUIRE(rep.applicable);
    REQUIRE(rep.in_regime);
    REQUIRE(rep.scale == Exact(1));        // |V| = 1 without rescaling
    // V = e8, IV = e1, JV = e3, KV = e2
    REQUIRE(rep.V[7] == Exact(1));
    REQUIRE(rep.IV[0] == Exact(1));
    REQUIRE(rep.JV[2] == Exact(1));
    REQUIRE(rep.KV[1] == Exact(1));
    REQUIRE(rep.bismut_parallel_V);
    REQUIRE(rep.killing_V);
    REQUIRE(rep.vertical_involutive);
    REQUIRE(rep.vertical_type == "u1_su2");
    REQUIRE(rep.a == Exact(-1));
    REQUIRE(rep.b == Exact(-1));
    REQUIRE((rep.a + rep.b) == Exact(-2));
    REQUIRE((rep.b * (rep.b - rep.a)).is_zero());
    REQUIRE(rep.theta_is_minus_2Vflat);
    REQUIRE(rep.useful_contractions_ok);
    REQUIRE(rep.beta_type_ok);
    REQUIRE(rep.eta_asd_ok);
    for (int l = 0; l < 3; ++l) {
        REQUIRE(rep.eta[l].is_zero());
        REQUIRE(rep.eta_norm_sq[l].is_zero());
        // beta_L = omega_L^T / 2 and |beta_L|^2 = b^2 + |eta_L|^2 = 1
        REQUIRE(rep.beta[l] == rep.omega_T[l].scaled(Exact::fraction(1, 2)));
    }
    REQUIRE(rep.dV_norm_sq == Exact(3));
    REQUIRE(rep.balance_residual.is_zero());
    REQUIRE(rep.reconstruction_ok);
    REQUIRE(rep.structural_equations_ok);
    REQUIRE(rep.rotational_ok);
    REQUIRE(rep.obata_euler_ok);
    REQUIRE(rep.obata_curv_vertical_zero);
    REQUIRE(rep.totally_geodesic_ok);
    REQUIRE(rep.lambda == Exact(1));
    for (int i = 0; i < 7; ++i) REQUIRE(rep.appendix_residual[i].is_zero());
    for (int i = 0; i < 5; ++i) REQUIRE(rep.equivalence[i]);
    REQUIRE(rep.equivalence_consistent);
    REQUIRE(rep.potential_ok);
    // dV-flat = -sqrt(3)/2 (e45 + e67): norm-square 3, anti-self-dual horizontal
    Exact c = rep.dV_flat(Index{3, 4});
    REQUIRE(c == -(Exact::sqrt3() / Exact(2)));
    REQUIRE(rep.dV_flat(Index{5, 6}) == c);
}

TEST_CASE("scale invariance: lambda |V|^2 is preserved under metric rescaling") {
    auto su3 = build_su3_samelson();
    // doubled metric gets normalized back internally; report the same lambda
    auto doubled = su3.hs.rescaled(Exact(2));
    auto rep2 = analyze_structure8(doubled);
    REQUIRE(rep2.scale == Exact::fraction(1, 2));   // |V|^2 halves when g doubles
    REQUIRE(rep2.lambda == Exact(1));
    REQUIRE(rep2.a == Exact(-1));
    REQUIRE(rep2.dV_norm_sq == Exact(3));
}

TEST_CASE("hopf x hopf: out-of-regime observations") {
    auto h8 = build_hopf_x_hopf();
    auto rep = analyze_structure8(h8.hs);
    REQUIRE(rep.applicable);
    REQUIRE_FALSE(rep.in_regime);   // d theta = 0
    REQUIRE(rep.regime_note.find("d theta = 0") != std::string::npos);
    REQUIRE(rep.scale == Exact::fraction(1, 2));   // |V|^2 = 1/2 before normalization
    REQUIRE(rep.a == Exact(-1));
    REQUIRE(rep.b == Exact(-1));
    REQUIRE(rep.vertical_type == "u1_su2");
    REQUIRE(rep.bismut_parallel_V);
    REQUIRE(rep.dV_flat.is_zero());
    REQUIRE(rep.dV_norm_sq.is_zero());
    // eta nonzero with |eta_L|^2 = 1 each, balance still exact
    for (int l = 0; l < 3; ++l) {
        REQUIRE_FALSE(rep.eta[l].is_zero());
        REQUIRE(rep.eta_norm_sq[l] == Exact(1));
    }
    REQUIRE(rep.eta_asd_ok);
    REQUIRE(rep.balance_residual.is_zero());
    REQUIRE(rep.reconstruction_ok);
    REQUIRE(rep.structural_equations_ok);
    REQUIRE(rep.rotational_ok);
    REQUIRE(rep.obata_euler_ok);
    REQUIRE(rep.lambda == Exact(1));
    // the five-way equivalence genuinely fails off-regime: (T,T,T,F,F)
    REQUIRE(rep.equivalence[0]);
    REQUIRE(rep.equivalence[1]);
    REQUIRE(rep.equivalence[2]);
    REQUIRE_FALSE(rep.equivalence[3]);
    REQUIRE_FALSE(rep.equivalence[4]);
    REQUIRE_FALSE(rep.equivalence_consistent);
    // appendix identities still hold here
    for (int i = 0; i < 7; ++i) REQUIRE(rep.appendix_residual[i].is_zero());
    REQUIRE(rep.potential_ok);
}

TEST_CASE("product of abelian_r4 and hopf: strong with parallel torsion, vertical in one factor") {
    auto flat4 = build_abelian(4);
    auto hopf = build_hopf_su2_r();
    auto prod = product_structure(flat4.hs, hopf.hs, "r4_x_hopf");
    auto rep = classify_hyper(prod);
    REQUIRE(rep.strong_hkt);
    REQUIRE(rep.parallel_torsion);
    REQUIRE_FALSE(rep.hyperkahler);
    auto s8 = analyze_structure8(prod);
    REQUIRE(s8.applicable);
    REQUIRE_FALSE(s8.in_regime);   // theta is closed here as well
    REQUIRE(s8.balance_residual.is_zero());
    // |V| = 1 normalization puts this product on the other algebraic branch:
    // (a, b) = (-2, 0), still with a + b = -2 and b(b - a) = 0
    REQUIRE(s8.a == Exact(-2));
    REQUIRE(s8.b == Exact(0));
    REQUIRE(s8.structural_equations_ok);
    REQUIRE(s8.vertical_type == "u1_su2");
}

TEST_CASE("torsion of a product is the sum of the factor torsions") {
    auto hopf = build_hopf_su2_r();
    auto prod = product_structure(hopf.hs, hopf.hs, "hopf_sq");
    auto H8 = is_hkt(prod).H;
    auto H4 = is_hkt(hopf.hs).H;
    InvariantForm<Exact> expect(8, 3);
    for (const auto& [idx, v] : H4.components()) {
        expect.add(Index(idx), v);
        Index shifted = idx;
        for (int& i : shifted) i += 4;
        expect.add(std::move(shifted), v);
    }
    REQUIRE(H8 == expect);
    // parallel torsion on the product iff on each factor
    auto B8 = bismut_connection(prod.hermitian(0));
    auto B4 = bismut_connection(hopf.hs.hermitian(0));
    REQUIRE(parallel_form(B4, H4));
    REQUIRE(parallel_form(B8, H8));
}

TEST_CASE("horizontal decomposition of 2-forms on su(3)") {
    auto su3 = build_su3_samelson();
    auto rep = analyze_structure8(su3.hs);
    std::array<Vec<Exact>, 4> vert{rep.V, rep.IV, rep.JV, rep.KV};
    std::array<InvariantForm<Exact>, 3> wT{rep.omega_T[0], rep.omega_T[1], rep.omega_T[2]};
    const auto& g = su3.hs.g;

    // omega_I: vertical part Vb^IVb + JVb^KVb, horizontal SD part omega_I^T
    auto wI = fundamental_form(g, su3.hs.I);
    auto dec = horizontal_decompose(g, vert, wT, wI);
    auto Vb = musical_flat(g, rep.V), IVb = musical_flat(g, rep.IV);
    auto JVb = musical_flat(g, rep.JV), KVb = musical_flat(g, rep.KV);
    REQUIRE(dec.vertical == wedge(Vb, IVb) + wedge(JVb, KVb));
    REQUIRE(dec.mixed.is_zero());
    REQUIRE(dec.horizontal_sd == rep.omega_T[0]);
    REQUIRE(dec.horizontal_asd.is_zero());

    // dV-flat: purely horizontal anti-self-dual
    auto dec2 = horizontal_decompose(g, vert, wT, rep.dV_flat);
    REQUIRE(dec2.vertical.is_zero());
    REQUIRE(dec2.mixed.is_zero());
    REQUIRE(dec2.horizontal_sd.is_zero());
    REQUIRE(dec2.horizontal_asd == rep.dV_flat);

    // Vb ^ IVb: purely vertical
    auto dec3 = horizontal_decompose(g, vert, wT, wedge(Vb, IVb));
    REQUIRE(dec3.vertical == wedge(Vb, IVb));
    REQUIRE(dec3.mixed.is_zero());
    REQUIRE(dec3.horizontal_sd.is_zero());
    REQUIRE(dec3.horizontal_asd.is_zero());

    // the four pieces always sum back to the form (checked on omega_J)
    auto wJ = fundamental_form(g, su3.hs.J);
    auto dec4 = horizontal_decompose(g, vert, wT, wJ);
    REQUIRE(dec4.vertical + dec4.mixed + dec4.horizontal_sd + dec4.horizontal_asd == wJ);
}

TEST_CASE("|beta_L|^2 = b^2 + |eta_L|^2 with the full-sum norm") {
    for (auto entry : {build_su3_samelson(), build_hopf_x_hopf()}) {
        auto rep = analyze_structure8(entry.hs);
        // norms live in the normalized metric
        auto q = entry.hs.rescaled(rep.scale);
        for (int l = 0; l < 3; ++l) {
            Exact nb = form_norm_sq(q.g, rep.beta[l]);
            REQUIRE(nb == rep.b * rep.b + rep.eta_norm_sq[l]);
        }
    }
}

TEST_CASE("structure8 rejects non-qualifying entries") {
    auto flat = build_abelian(8);
    auto rep = analyze_structure8(flat.hs);
    REQUIRE_FALSE(rep.applicable);
    REQUIRE(rep.regime_note == "hyper-Kahler");
    auto df = build_dotti_fino();
    auto rep2 = analyze_structure8(df.hs);
    REQUIRE_FALSE(rep2.applicable);
    REQUIRE(rep2.regime_note == "not strong HKT");
    auto hopf = build_hopf_su2_r();
    auto rep3 = analyze_structure8(hopf.hs);
    REQUIRE_FALSE(rep3.applicable);
    REQUIRE(rep3.regime_note == "dimension != 8");
}

TEST_CASE("forced observed mode on the Dotti-Fino entry") {
    auto df = build_dotti_fino();
    auto rep = analyze_structure8(df.hs, true);
    // balanced: theta = 0, so there is no Euler field at all
    REQUIRE_FALSE(rep.applicable);
    REQUIRE(rep.regime_note == "theta = 0");
}

#include <catch2/catch_amalgamated.hpp>

#include "hkt/catalog.hpp"
#include "hkt/verify.hpp"

using namespace hkt;

namespace {

InvariantForm<Exact> e(int n, std::initializer_list<int> one_based) {
    InvariantForm<Exact> f(n, int(one_based.size()));
    Index idx;
    for (int i : one_based) idx.push_back(i - 1);
    f.set(idx, Exact(1));
    return f;
}

} // namespace

TEST_CASE("nijenhuis tensor") {
    // abelian algebra: every constant J is integrable
    LieAlgebra<Exact> ab(4);
    Mat<Exact> J(4);
    J(1, 0) = 1; J(0, 1) = -1; J(3, 2) = 1; J(2, 3) = -1;
    REQUIRE(nijenhuis(ab, J).empty());
    // su(2)+R with the Hopf structure: integrable
    auto hopf = build_hopf_su2_r();
    REQUIRE(nijenhuis(hopf.hs.algebra, hopf.hs.I).empty());
    // non-integrable candidate on h3 + R: pair each generator with z / center
    auto kt = build_kodaira_thurston();
    Mat<Exact> bad(4);
    bad(2, 0) = 1; bad(0, 2) = -1; bad(3, 1) = 1; bad(1, 3) = -1;  // e1<->e3, e2<->e4
    REQUIRE_FALSE(nijenhuis(kt.cs.algebra, bad).empty());
}

TEST_CASE("fundamental form") {
    Mat<Exact> g = Mat<Exact>::identity(4);
    Mat<Exact> J(4);
    J(1, 0) = 1; J(0, 1) = -1; J(3, 2) = 1; J(2, 3) = -1;   // Je1 = e2, Je3 = e4
    auto w = fundamental_form(g, J);
    // w(X,Y) = g(JX,Y): w = e^12... with this orientation w(e1,e2) = g(e2,e2) = 1
    REQUIRE(w == e(4, {1, 2}) + e(4, {3, 4}));
    // reversing J flips the sign
    Mat<Exact> Jr = J.scaled(Exact(-1));
    REQUIRE(fundamental_form(g, Jr) == -(w));
    // nondegeneracy on su(3): w^4 != 0
    auto su3 = build_su3_samelson();
    auto w3 = fundamental_form(su3.hs.g, su3.hs.I);
    auto w4 = wedge(wedge(w3, w3), wedge(w3, w3));
    REQUIRE_FALSE(w4.is_zero());
}

TEST_CASE("bismut torsion rejects non-integrable structures") {
    auto kt = build_kodaira_thurston();
    Mat<Exact> bad(4);
    bad(2, 0) = 1; bad(0, 2) = -1; bad(3, 1) = 1; bad(1, 3) = -1;
    HermitianStructure<Exact> h{kt.cs.algebra, kt.cs.g, bad, "bad"};
    REQUIRE_THROWS_AS(bismut_torsion(h), std::invalid_argument);
}

TEST_CASE("bismut torsion: samelson oracle and flat case") {
    // Kahler flat R^4: H = 0
    LieAlgebra<Exact> ab(4);
    Mat<Exact> g = Mat<Exact>::identity(4);
    Mat<Exact> J(4);
    J(1, 0) = 1; J(0, 1) = -1; J(3, 2) = 1; J(2, 3) = -1;
    HermitianStructure<Exact> flat{ab, g, J, "flat"};
    REQUIRE(bismut_torsion(flat).is_zero());
    // Samelson space: H(X,Y,Z) = g([X,Y],Z); on su(2)+R this is the su(2) volume
    auto hopf = build_hopf_su2_r();
    auto h = hopf.hs.hermitian(0);
    auto H = bismut_torsion(h);
    REQUIRE(H == e(4, {1, 2, 3}));
    REQUIRE(torsion_type_identity(h.algebra, h.J, H));
}

TEST_CASE("gauduchon line on a Kahler entry collapses to Levi-Civita") {
    LieAlgebra<Exact> ab(8);
    Mat<Exact> g = Mat<Exact>::identity(8);
    auto entry = build_abelian(8);
    auto h = entry.hs.hermitian(0);
    auto lc = levi_civita(ab, g);
    for (long t : {-1L, 0L, 1L, 3L}) {
        auto conn = gauduchon_connection(h, Exact(t));
        REQUIRE(conn == lc);
    }
}

TEST_CASE("bismut connection on a Samelson space is the flat connection") {
    auto su3 = build_su3_samelson();
    auto B = bismut_connection(su3.hs.hermitian(0));
    for (int x = 0; x < 8; ++x) REQUIRE(B[x].is_zero());
}

TEST_CASE("lee form: trace and wedge computations") {
    // Kahler flat: theta = 0
    auto flat = build_abelian(4);
    auto h0 = flat.hs.hermitian(0);
    REQUIRE(lee_form(h0, bismut_torsion(h0)).is_zero());
    // Hopf: theta along the central dual, nonzero
    auto hopf = build_hopf_su2_r();
    auto h = hopf.hs.hermitian(0);
    auto th = lee_form(h, bismut_torsion(h));
    REQUIRE(th == -e(4, {4}));
    // balanced entry: Dotti-Fino
    auto df = build_dotti_fino();
    auto hdf = df.hs.hermitian(0);
    REQUIRE(lee_form(hdf, bismut_torsion(hdf)).is_zero());
}

TEST_CASE("kodaira-thurston: SKT, not Kahler, theta and H pinned") {
    auto kt = build_kodaira_thurston();
    const auto& h = kt.cs;
    auto rep = classify_hermitian(h);
    REQUIRE_FALSE(rep.kahler);
    REQUIRE(rep.skt);
    REQUIRE_FALSE(rep.balanced);
    REQUIRE_FALSE(rep.cyt);
    REQUIRE(rep.H == e(4, {1, 2, 3}));
    REQUIRE(rep.theta == -e(4, {4}));
}

TEST_CASE("inoue entry: SKT with nonparallel torsion, rhob2 identity") {
    auto inoue = build_inoue_skt();
    const auto& h = inoue.cs;
    auto rep = classify_hermitian(h);
    REQUIRE(rep.skt);
    REQUIRE_FALSE(rep.kahler);
    REQUIRE_FALSE(rep.balanced);
    REQUIRE_FALSE(rep.cyt);
    auto B = bismut_connection(h);
    REQUIRE_FALSE(parallel_form(B, rep.H));
    // theta is not Bismut-parallel either, so this entry pins the rhob2 sign
    bool theta_parallel = parallel_form(B, rep.theta);
    REQUIRE_FALSE(theta_parallel);
    auto br = bismut_ricci(h);
    REQUIRE(br.rhob2_residual.is_zero());
}

TEST_CASE("su(3) hermitian classification") {
    auto su3 = build_su3_samelson();
    auto rep = classify_hermitian(su3.hs.hermitian(0));
    REQUIRE_FALSE(rep.kahler);
    REQUIRE(rep.skt);
    REQUIRE(rep.cyt);
    REQUIRE(rep.bhe);
    REQUIRE(rep.generalized_einstein);
    REQUIRE_FALSE(rep.balanced);
}

TEST_CASE("delta theta vanishes on unimodular catalog entries") {
    for (const auto& entry : build_standard_entries()) {
        const auto h = entry.hyper ? entry.hs.hermitian(0) : entry.cs;
        if (!classify_algebra(h.algebra).unimodular) continue;
        auto H = bismut_torsion(h);
        auto th = lee_form(h, H);
        REQUIRE(codifferential(h.algebra, h.g, th).is_zero());
    }
}

TEST_CASE("gauduchon line preserves g and J for sampled t on every entry") {
    for (const auto& entry : build_standard_entries()) {
        const auto h = entry.hyper ? entry.hs.hermitian(0) : entry.cs;
        for (long t : {-1L, 0L, 1L, 3L}) {
            auto conn = gauduchon_connection(h, Exact(t));
            REQUIRE(preserves_metric(conn, h.g));
            REQUIRE(preserves_endomorphism(conn, h.J));
        }
    }
}

TEST_CASE("lemma H = H(J.,J.,.)+H(J.,.,J.)+H(.,J.,J.) on every integrable entry") {
    for (const auto& entry : build_standard_entries()) {
        const auto h = entry.hyper ? entry.hs.hermitian(0) : entry.cs;
        REQUIRE(torsion_type_identity(h.algebra, h.J, bismut_torsion(h)));
    }
}

TEST_CASE("solvable entries: BHE <=> Kahler (invariant rigidity)") {
    for (const auto& entry : build_standard_entries()) {
        const auto h = entry.hyper ? entry.hs.hermitian(0) : entry.cs;
        auto alg = classify_algebra(h.algebra);
        if (!alg.solvable) continue;
        auto rep = classify_hermitian(h);
        INFO(entry.name);
        REQUIRE(rep.bhe == rep.kahler);
    }
}

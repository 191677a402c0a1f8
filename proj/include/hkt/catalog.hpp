/**
 * @file catalog.hpp
 * @brief Built-in example geometries with expected classification flags.
 *
 * Every entry is constructed over the exact field and validated by the
 * pipeline rather than trusted: quaternion relations, integrability,
 * compatibility and the expected flags are all re-checked by the test and
 * verification suites.
 */
#pragma once

#include <map>
#include <variant>

#include "structure8.hpp"

namespace hkt {

struct CatalogEntry {
    std::string name;
    std::string provenance;
    bool hyper = true;
    HyperHermitianStructure<Exact> hs{LieAlgebra<Exact>(0), Mat<Exact>(0), Mat<Exact>(0), Mat<Exact>(0), Mat<Exact>(0), ""};
    HermitianStructure<Exact> cs{LieAlgebra<Exact>(0), Mat<Exact>(0), Mat<Exact>(0), ""};
    std::map<std::string, bool> expected;
};

namespace catalog_detail {

/// Endomorphism from a 1-based assignment list {from, to, sign}.
inline Mat<Exact> perm_endo(int n, const std::vector<std::array<int, 3>>& assign) {
    Mat<Exact> m(n);
    for (const auto& [from, to, sgn] : assign) m(to - 1, from - 1) = Exact(sgn);
    return m;
}

/// Expand a totally antisymmetric symbol f_{abc} (1-based) into bracket triples.
inline void add_symbol(std::vector<BracketTriple>& out, int a, int b, int c, const Exact& v) {
    out.push_back({a - 1, b - 1, c - 1, v});
    out.push_back({b - 1, c - 1, a - 1, v});
    out.push_back({c - 1, a - 1, b - 1, v});
}

} // namespace catalog_detail

/**
 * The hyper-Hermitian Samelson space SU(3): Gell-Mann basis e_a = -i lambda_a/2
 * with [e_a,e_b] = f_abc e_c, bi-invariant metric g = -Killing/3 = identity,
 * and the left-invariant hypercomplex triple modeled on the quaternion
 * identification (1,i,j,k) <-> (e8,e1,e3,e2) of su(2)+u(1), acting on the
 * complementary module as -2 ad(e1), -2 ad(e3), -2 ad(e2).
 */
inline CatalogEntry build_su3_samelson() {
    using catalog_detail::add_symbol;
    using catalog_detail::perm_endo;
    Exact half = Exact::fraction(1, 2);
    Exact h3 = Exact::sqrt3() * half;
    std::vector<BracketTriple> tr;
    add_symbol(tr, 1, 2, 3, Exact(1));
    add_symbol(tr, 1, 4, 7, half);
    add_symbol(tr, 1, 5, 6, -half);
    add_symbol(tr, 2, 4, 6, half);
    add_symbol(tr, 2, 5, 7, half);
    add_symbol(tr, 3, 4, 5, half);
    add_symbol(tr, 3, 6, 7, -half);
    add_symbol(tr, 4, 5, 8, h3);
    add_symbol(tr, 6, 7, 8, h3);
    CatalogEntry e;
    e.name = "su3_samelson";
    e.provenance = "compact simple group SU(3), bi-invariant metric, Joyce-type triple";
    e.hyper = true;
    LieAlgebra<Exact> L = LieAlgebra<Exact>::from_triples(8, tr);
    Mat<Exact> g = Mat<Exact>::identity(8);
    Mat<Exact> I = perm_endo(8, {{8, 1, 1}, {1, 8, -1}, {2, 3, -1}, {3, 2, 1},
                                 {4, 7, -1}, {5, 6, 1}, {6, 5, -1}, {7, 4, 1}});
    Mat<Exact> J = perm_endo(8, {{8, 3, 1}, {3, 8, -1}, {1, 2, -1}, {2, 1, 1},
                                 {4, 5, -1}, {5, 4, 1}, {6, 7, 1}, {7, 6, -1}});
    Mat<Exact> K = I * J;
    e.hs = {std::move(L), std::move(g), std::move(I), std::move(J), std::move(K), e.name};
    e.expected = {{"hkt", true}, {"strong_hkt", true}, {"hyperkahler", false},
                  {"balanced", false}, {"parallel_torsion", true}};
    return e;
}

/// su(2) + R with the standard Hopf hypercomplex structure (dim 4).
inline CatalogEntry build_hopf_su2_r() {
    using catalog_detail::perm_endo;
    std::vector<BracketTriple> tr;
    catalog_detail::add_symbol(tr, 1, 2, 3, Exact(1));
    CatalogEntry e;
    e.name = "hopf_su2_r";
    e.provenance = "S^3 x S^1 Hopf surface, bi-invariant metric";
    LieAlgebra<Exact> L = LieAlgebra<Exact>::from_triples(4, tr);
    Mat<Exact> g = Mat<Exact>::identity(4);
    Mat<Exact> I = perm_endo(4, {{4, 1, 1}, {1, 4, -1}, {3, 2, 1}, {2, 3, -1}});
    Mat<Exact> J = perm_endo(4, {{4, 3, 1}, {3, 4, -1}, {1, 2, -1}, {2, 1, 1}});
    Mat<Exact> K = I * J;
    e.hs = {std::move(L), std::move(g), std::move(I), std::move(J), std::move(K), e.name};
    e.expected = {{"hkt", true}, {"strong_hkt", true}, {"hyperkahler", false},
                  {"balanced", false}, {"parallel_torsion", true}};
    return e;
}

/// Flat quaternionic R^n (n = 4 or 8).
inline CatalogEntry build_abelian(int n) {
    using catalog_detail::perm_endo;
    CatalogEntry e;
    e.name = "abelian_r" + std::to_string(n);
    e.provenance = "flat torus, hyper-Kahler";
    LieAlgebra<Exact> L(n);
    Mat<Exact> g = Mat<Exact>::identity(n);
    std::vector<std::array<int, 3>> ia = {{1, 2, 1}, {2, 1, -1}, {3, 4, 1}, {4, 3, -1}};
    std::vector<std::array<int, 3>> ja = {{1, 3, 1}, {3, 1, -1}, {2, 4, -1}, {4, 2, 1}};
    if (n == 8) {
        for (auto t : std::vector<std::array<int, 3>>{{5, 6, 1}, {6, 5, -1}, {7, 8, 1}, {8, 7, -1}}) ia.push_back(t);
        for (auto t : std::vector<std::array<int, 3>>{{5, 7, 1}, {7, 5, -1}, {6, 8, -1}, {8, 6, 1}}) ja.push_back(t);
    }
    Mat<Exact> I = perm_endo(n, ia), J = perm_endo(n, ja);
    Mat<Exact> K = I * J;
    e.hs = {std::move(L), std::move(g), std::move(I), std::move(J), std::move(K), e.name};
    e.expected = {{"hkt", true}, {"strong_hkt", true}, {"hyperkahler", true},
                  {"balanced", true}, {"parallel_torsion", true}};
    return e;
}

/// Direct product of two hyper-Hermitian entries (block metric and structures).
inline HyperHermitianStructure<Exact> product_structure(const HyperHermitianStructure<Exact>& a,
                                                        const HyperHermitianStructure<Exact>& b,
                                                        const std::string& name) {
    int na = a.algebra.dim(), nb = b.algebra.dim();
    LieAlgebra<Exact> L = direct_sum(a.algebra, b.algebra);
    int n = na + nb;
    auto block = [&](const Mat<Exact>& x, const Mat<Exact>& y) {
        Mat<Exact> m(n);
        for (int i = 0; i < na; ++i)
            for (int j = 0; j < na; ++j) m(i, j) = x(i, j);
        for (int i = 0; i < nb; ++i)
            for (int j = 0; j < nb; ++j) m(na + i, na + j) = y(i, j);
        return m;
    };
    return {std::move(L), block(a.g, b.g), block(a.I, b.I), block(a.J, b.J), block(a.K, b.K), name};
}

inline CatalogEntry build_hopf_x_hopf() {
    CatalogEntry h = build_hopf_su2_r();
    CatalogEntry e;
    e.name = "hopf_x_hopf";
    e.provenance = "product of two Hopf factors (Samelson space of SU(2) x SU(2) x R^2)";
    e.hs = product_structure(h.hs, h.hs, e.name);
    e.expected = {{"hkt", true}, {"strong_hkt", true}, {"hyperkahler", false},
                  {"balanced", false}, {"parallel_torsion", true}};
    return e;
}

/**
 * Dotti-Fino type entry: 2-step nilpotent with 1-dimensional derived algebra
 * ([e1,e2] = e5 = -[e3,e4]) carrying an abelian hypercomplex structure.
 * Balanced HKT with parallel Bismut torsion, dH != 0, not hyper-Kahler.
 */
inline CatalogEntry build_dotti_fino() {
    using catalog_detail::perm_endo;
    CatalogEntry e;
    e.name = "dotti_fino_nilpotent";
    e.provenance = "8-dim 2-step nilpotent, abelian hypercomplex structure";
    std::vector<BracketTriple> tr = {{0, 1, 4, Exact(1)}, {2, 3, 4, Exact(-1)}};
    LieAlgebra<Exact> L = LieAlgebra<Exact>::from_triples(8, tr);
    Mat<Exact> g = Mat<Exact>::identity(8);
    Mat<Exact> I = perm_endo(8, {{1, 2, 1}, {2, 1, -1}, {3, 4, 1}, {4, 3, -1},
                                 {8, 5, 1}, {5, 8, -1}, {6, 7, 1}, {7, 6, -1}});
    Mat<Exact> J = perm_endo(8, {{1, 3, 1}, {3, 1, -1}, {2, 4, -1}, {4, 2, 1},
                                 {8, 6, 1}, {6, 8, -1}, {5, 7, -1}, {7, 5, 1}});
    Mat<Exact> K = I * J;
    e.hs = {std::move(L), std::move(g), std::move(I), std::move(J), std::move(K), e.name};
    e.expected = {{"hkt", true}, {"strong_hkt", false}, {"hyperkahler", false},
                  {"balanced", true}, {"parallel_torsion", true}};
    return e;
}

/**
 * Almost abelian solvable family: ad_{f0} = lambda Id on span(If0,Jf0,Kf0)
 * and nu Id + (right multiplication by the imaginary quaternion q) on the
 * complementary quaternionic line.  Unimodular iff 3 lambda + 4 nu = 0.
 */
inline CatalogEntry build_almost_abelian(const Exact& lambda, const Exact& nu,
                                         const std::array<Exact, 3>& q, const std::string& tag) {
    using catalog_detail::perm_endo;
    CatalogEntry e;
    e.name = "almost_abelian_" + tag;
    e.provenance = "solvable almost abelian, hyper-Hermitian";
    std::vector<BracketTriple> tr;
    for (int i = 1; i <= 3; ++i)
        if (!lambda.is_zero()) tr.push_back({0, i, i, lambda});
    const Exact &q1 = q[0], &q2 = q[1], &q3 = q[2];
    Exact Rq[4][4] = {{Exact(0), -q1, -q2, -q3},
                      {q1, Exact(0), q3, -q2},
                      {q2, -q3, Exact(0), q1},
                      {q3, q2, -q1, Exact(0)}};
    for (int u = 0; u < 4; ++u)
        for (int k = 0; k < 4; ++k) {
            Exact c = Rq[k][u] + (k == u ? nu : Exact(0));
            if (!c.is_zero()) tr.push_back({0, 4 + u, 4 + k, c});
        }
    LieAlgebra<Exact> L = LieAlgebra<Exact>::from_triples(8, tr);
    Mat<Exact> g = Mat<Exact>::identity(8);
    Mat<Exact> I = perm_endo(8, {{1, 2, 1}, {2, 1, -1}, {3, 4, 1}, {4, 3, -1},
                                 {5, 6, 1}, {6, 5, -1}, {7, 8, 1}, {8, 7, -1}});
    Mat<Exact> J = perm_endo(8, {{1, 3, 1}, {3, 1, -1}, {2, 4, -1}, {4, 2, 1},
                                 {5, 7, 1}, {7, 5, -1}, {6, 8, -1}, {8, 6, 1}});
    Mat<Exact> K = I * J;
    e.hs = {std::move(L), std::move(g), std::move(I), std::move(J), std::move(K), e.name};
    bool flat = lambda.is_zero() && nu.is_zero();
    e.expected = {{"hkt", flat}, {"strong_hkt", flat}, {"hyperkahler", flat}};
    return e;
}

inline std::vector<CatalogEntry> build_almost_abelian_family() {
    auto E = [](long v) { return Exact(v); };
    std::vector<CatalogEntry> out;
    out.push_back(build_almost_abelian(E(-4), E(3), {E(0), E(0), E(0)}, "t1"));
    out.push_back(build_almost_abelian(E(-8), E(6), {E(1), E(0), E(0)}, "t2_qi"));
    out.push_back(build_almost_abelian(E(-4), E(3), {E(0), E(1), E(0)}, "t1_qj"));
    out.push_back(build_almost_abelian(E(-4), E(3), {E(1), E(2), E(0)}, "t1_qij"));
    out.push_back(build_almost_abelian(E(0), E(0), {E(1), E(0), E(0)}, "flat_qi"));
    out.push_back(build_almost_abelian(E(0), E(0), {E(0), E(0), E(0)}, "flat"));
    return out;
}

/// Kodaira-Thurston nilmanifold (Hermitian-only entry): SKT, not Kahler.
inline CatalogEntry build_kodaira_thurston() {
    using catalog_detail::perm_endo;
    CatalogEntry e;
    e.name = "kodaira_thurston";
    e.provenance = "h3 x R nilmanifold, primary Kodaira surface";
    e.hyper = false;
    std::vector<BracketTriple> tr = {{0, 1, 2, Exact(1)}};
    LieAlgebra<Exact> L = LieAlgebra<Exact>::from_triples(4, tr);
    Mat<Exact> g = Mat<Exact>::identity(4);
    Mat<Exact> J = perm_endo(4, {{1, 2, 1}, {2, 1, -1}, {3, 4, 1}, {4, 3, -1}});
    e.cs = {std::move(L), std::move(g), std::move(J), e.name};
    e.expected = {{"kahler", false}, {"skt", true}, {"balanced", false},
                  {"cyt", false}, {"bhe", false}};
    return e;
}

/// Inoue-type solvable surface (Hermitian-only): SKT with non-parallel torsion.
inline CatalogEntry build_inoue_skt() {
    using catalog_detail::perm_endo;
    CatalogEntry e;
    e.name = "inoue_skt";
    e.provenance = "R x_A R^3 solvable, ad = diag(-2,1,1)";
    e.hyper = false;
    std::vector<BracketTriple> tr = {{0, 1, 1, Exact(-2)}, {0, 2, 2, Exact(1)}, {0, 3, 3, Exact(1)}};
    LieAlgebra<Exact> L = LieAlgebra<Exact>::from_triples(4, tr);
    Mat<Exact> g = Mat<Exact>::identity(4);
    Mat<Exact> J = perm_endo(4, {{1, 2, 1}, {2, 1, -1}, {3, 4, 1}, {4, 3, -1}});
    e.cs = {std::move(L), std::move(g), std::move(J), e.name};
    e.expected = {{"kahler", false}, {"skt", true}, {"balanced", false}, {"cyt", false}};
    return e;
}

inline std::vector<CatalogEntry> build_standard_entries() {
    std::vector<CatalogEntry> out;
    out.push_back(build_su3_samelson());
    out.push_back(build_abelian(8));
    out.push_back(build_abelian(4));
    out.push_back(build_hopf_su2_r());
    out.push_back(build_hopf_x_hopf());
    out.push_back(build_dotti_fino());
    for (auto& e : build_almost_abelian_family()) out.push_back(std::move(e));
    out.push_back(build_kodaira_thurston());
    out.push_back(build_inoue_skt());
    return out;
}

inline const CatalogEntry* find_entry(const std::vector<CatalogEntry>& cat, const std::string& name) {
    for (const auto& e : cat)
        if (e.name == name) return &e;
    return nullptr;
}

} // namespace hkt

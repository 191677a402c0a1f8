/**
 * @file hermitian.hpp
 * @brief Left-invariant Hermitian structures: integrability, the fundamental
 *        form, the Gauduchon line, Bismut torsion and Ricci forms, Lee form,
 *        and the Kahler/SKT/balanced/CYT/BHE classification.
 *
 * Torsion-form convention (calibrated against the Samelson oracle
 * H(X,Y,Z) = g([X,Y],Z) on bi-invariant entries):
 *
 *   d^c w := j_act(J, d w)       (signed convention, -J per slot)
 *   H     := d^c w               (so H = -dw(J., J., J.))
 *   g(nabla^B_X Y, Z) = g(nabla^LC_X Y, Z) - 1/2 H(X,Y,Z)
 *
 * The lowered torsion tensor of nabla^B is then -H = -d^c w.
 */
#pragma once

#include "curvature.hpp"

namespace hkt {

template <ScalarField S>
struct HermitianStructure {
    LieAlgebra<S> algebra;
    Mat<S> g;
    Mat<S> J;
    std::string name;
};

/// N(X,Y) = [JX,JY] - [X,Y] - J[JX,Y] - J[X,JY] on basis pairs; empty iff integrable.
template <ScalarField S>
std::vector<std::tuple<int, int, Vec<S>>> nijenhuis(const LieAlgebra<S>& L, const Mat<S>& J) {
    int n = L.dim();
    std::vector<std::tuple<int, int, Vec<S>>> out;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            Vec<S> jx = J.col(x), jy = J.col(y);
            Vec<S> ex(size_t(n), S(0)), ey = ex;
            ex[size_t(x)] = S(1); ey[size_t(y)] = S(1);
            Vec<S> t1 = L.bracket(jx, jy);
            Vec<S> t2 = L.bracket_basis(x, y);
            Vec<S> t3 = J.apply(L.bracket(jx, ey));
            Vec<S> t4 = J.apply(L.bracket(ex, jy));
            Vec<S> v(static_cast<size_t>(n));
            bool nz = false;
            for (int k = 0; k < n; ++k) {
                v[size_t(k)] = t1[size_t(k)] - t2[size_t(k)] - t3[size_t(k)] - t4[size_t(k)];
                if (!v[size_t(k)].is_zero()) nz = true;
            }
            if (nz) out.emplace_back(x, y, std::move(v));
        }
    return out;
}

template <ScalarField S>
bool almost_complex(const Mat<S>& J) {
    int n = J.dim();
    Mat<S> jj = J * J;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(jj(i, j) + (i == j ? S(1) : S(0))).is_zero()) return false;
    return true;
}

template <ScalarField S>
bool metric_compatible(const Mat<S>& g, const Mat<S>& J) {
    // g(JX, JY) = g(X, Y)  <=>  J^T g J = g
    Mat<S> t = J.transposed() * g * J;
    return t == g;
}

/// omega(X,Y) = g(JX, Y).
template <ScalarField S>
InvariantForm<S> fundamental_form(const Mat<S>& g, const Mat<S>& J) {
    int n = g.dim();
    InvariantForm<S> w(n, 2);
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            S v(0);
            for (int m = 0; m < n; ++m)
                if (!J(m, x).is_zero()) v += J(m, x) * g(m, y);
            w.set({x, y}, v);
        }
    return w;
}

template <ScalarField S>
InvariantForm<S> dc_omega(const HermitianStructure<S>& h) {
    if (!almost_complex(h.J))
        throw std::invalid_argument("d^c omega: J^2 != -id");
    if (!nijenhuis(h.algebra, h.J).empty())
        throw std::invalid_argument(
            "d^c omega: J is not integrable, so H would not be the torsion of a Hermitian connection");
    return j_act(h.J, h.algebra.d(fundamental_form(h.g, h.J)));
}

/// Bismut torsion 3-form H = d^c omega (see the file header for the sign).
template <ScalarField S>
InvariantForm<S> bismut_torsion(const HermitianStructure<S>& h) {
    return dc_omega(h);
}

/// Gauduchon line: g(nabla^t_X Y,Z) = g(nabla^LC,Z) + (t-1)/4 d^c(X,Y,Z) + (t+1)/4 d^c(X,JY,JZ).
template <ScalarField S>
Connection<S> gauduchon_connection(const HermitianStructure<S>& h, const S& t) {
    int n = h.algebra.dim();
    InvariantForm<S> dc = dc_omega(h);
    S tm = (t - S(1)) / S(4), tp = (t + S(1)) / S(4);
    std::vector<Vec<S>> jc;
    for (int j = 0; j < n; ++j) jc.push_back(h.J.col(j));
    Connection<S> lc = levi_civita(h.algebra, h.g);
    return connection_from_lowered(lc, h.g, [&](int x, int y, int z) {
        Vec<S> ex(size_t(n), S(0));
        ex[size_t(x)] = S(1);
        S a = dc(Index{x, y, z}) * tm;
        S b = dc.eval({ex, jc[size_t(y)], jc[size_t(z)]}) * tp;
        return a + b;
    });
}

template <ScalarField S>
Connection<S> bismut_connection(const HermitianStructure<S>& h) {
    return gauduchon_connection(h, S(-1));
}

template <ScalarField S>
Connection<S> chern_connection(const HermitianStructure<S>& h) {
    return gauduchon_connection(h, S(1));
}

/// Lee form via the trace formula theta(X) = 1/2 g^{ab} H(e_a, J e_b, JX).
template <ScalarField S>
InvariantForm<S> lee_form_trace(const HermitianStructure<S>& h, const InvariantForm<S>& H) {
    int n = h.algebra.dim();
    Mat<S> ginv = inverse(h.g);
    InvariantForm<S> th(n, 1);
    std::vector<Vec<S>> jc;
    for (int j = 0; j < n; ++j) jc.push_back(h.J.col(j));
    S half = S(1) / S(2);
    for (int x = 0; x < n; ++x) {
        S tot(0);
        for (int a = 0; a < n; ++a) {
            Vec<S> ea(size_t(n), S(0));
            ea[size_t(a)] = S(1);
            for (int b = 0; b < n; ++b) {
                if (ginv(a, b).is_zero()) continue;
                tot += ginv(a, b) * H.eval({ea, jc[size_t(b)], jc[size_t(x)]});
            }
        }
        th.set({x}, tot * half);
    }
    return th;
}

/// Lee form solved from d(omega^{n-1}) = theta ^ omega^{n-1}.
template <ScalarField S>
InvariantForm<S> lee_form_wedge(const HermitianStructure<S>& h) {
    int n = h.algebra.dim();
    int m = n / 2;
    if (m < 2) return InvariantForm<S>(n, 1);  // a complex curve is Kahler, theta = 0
    InvariantForm<S> w = fundamental_form(h.g, h.J);
    InvariantForm<S> wp = w;
    for (int i = 0; i < m - 2; ++i) wp = wedge(wp, w);
    InvariantForm<S> lhs = h.algebra.d(wp);
    // assemble the linear system over basis covectors
    std::vector<InvariantForm<S>> cols;
    for (int x = 0; x < n; ++x) cols.push_back(wedge(basis_covector<S>(n, x), wp));
    std::vector<Vec<S>> rows;
    std::vector<S> rhs;
    Index idx = first_combination(2 * m - 1);
    do {
        Vec<S> row;
        row.reserve(size_t(n) + 1);
        for (int x = 0; x < n; ++x) row.push_back(cols[size_t(x)](Index(idx)));
        row.push_back(lhs(Index(idx)));
        rows.push_back(std::move(row));
    } while (next_combination(idx, n));
    auto pivots = rref(rows);
    InvariantForm<S> th(n, 1);
    for (size_t r = 0; r < pivots.size(); ++r) {
        if (pivots[r] == n)
            throw std::runtime_error("lee_form: inconsistent system (degenerate omega?)");
        th.set({pivots[r]}, rows[r][size_t(n)]);
    }
    return th;
}

/**
 * Lee form with the mandatory double computation; a mismatch between the
 * trace formula and the wedge characterization is an internal hard failure.
 */
template <ScalarField S>
InvariantForm<S> lee_form(const HermitianStructure<S>& h, const InvariantForm<S>& H) {
    InvariantForm<S> a = lee_form_trace(h, H);
    InvariantForm<S> b = lee_form_wedge(h);
    if (!(a == b)) throw std::runtime_error("lee_form: trace and wedge computations disagree");
    return a;
}

/// Codifferential on invariant forms: delta a = -g^{ab} iota_{e_a} nabla^LC_{e_b} a.
template <ScalarField S>
InvariantForm<S> codifferential(const LieAlgebra<S>& L, const Mat<S>& g, const InvariantForm<S>& a) {
    int n = L.dim();
    Mat<S> ginv = inverse(g);
    Connection<S> lc = levi_civita(L, g);
    InvariantForm<S> r(n, a.degree() - 1);
    for (int b = 0; b < n; ++b) {
        InvariantForm<S> da = cov_deriv(lc, a, b);
        for (int aa = 0; aa < n; ++aa) {
            if (ginv(aa, b).is_zero()) continue;
            Vec<S> e(size_t(n), S(0));
            e[size_t(aa)] = S(1);
            r = r - interior(e, da).scaled(ginv(aa, b));
        }
    }
    return r;
}

template <ScalarField S>
struct BismutRicci {
    InvariantForm<S> rho;     // rho^B(X,Y) = 1/2 sum R^B(X,Y,J e_i, e_i)
    Mat<S> ric;               // Ric^B(X,Y) = sum R^B(e_i, X, Y, e_i)
    S rhob2_residual{0};      // max | rho^B(X,Y) + Ric^B(X,JY) + (nab^B_X theta)(JY) |
};

template <ScalarField S>
BismutRicci<S> bismut_ricci(const HermitianStructure<S>& h) {
    int n = h.algebra.dim();
    InvariantForm<S> H = bismut_torsion(h);
    Connection<S> B = bismut_connection(h);
    auto R = curvature(B, h.algebra, h.g);
    auto tr = ricci_traces(R, h.g, &h.J);
    BismutRicci<S> out;
    out.rho = tr.rho;
    out.ric = tr.ric;
    InvariantForm<S> th = lee_form(h, H);
    std::vector<InvariantForm<S>> nabth;
    for (int x = 0; x < n; ++x) nabth.push_back(cov_deriv(B, th, x));
    S maxres(0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            // rho^B(X,Y) = -Ric^B(X,JY) - (nab^B_X theta)(JY)
            S ricJY(0), ntJY(0);
            for (int m = 0; m < n; ++m) {
                const S& jm = h.J(m, y);
                if (jm.is_zero()) continue;
                ricJY += out.ric(x, m) * jm;
                ntJY += nabth[size_t(x)](Index{m}) * jm;
            }
            S res = (out.rho(Index{x, y}) + ricJY + ntJY).abs();
            if ((res - maxres).sign() > 0) maxres = res;
        }
    out.rhob2_residual = maxres;
    return out;
}

template <ScalarField S>
struct HermitianReport {
    bool kahler = false, skt = false, balanced = false, cyt = false, bhe = false;
    bool generalized_einstein = false;
    InvariantForm<S> theta, H, rho_b;
};

template <ScalarField S>
HermitianReport<S> classify_hermitian(const HermitianStructure<S>& h) {
    HermitianReport<S> rep;
    InvariantForm<S> w = fundamental_form(h.g, h.J);
    rep.H = bismut_torsion(h);
    rep.kahler = h.algebra.d(w).is_zero();
    rep.skt = h.algebra.d(rep.H).is_zero();
    rep.theta = lee_form(h, rep.H);
    rep.balanced = rep.theta.is_zero();
    auto br = bismut_ricci(h);
    rep.rho_b = br.rho;
    rep.cyt = br.rho.is_zero();
    rep.bhe = rep.skt && rep.cyt;
    rep.generalized_einstein = br.ric.is_zero();
    return rep;
}

/// Lemma check: H(X,Y,Z) = H(JX,JY,Z) + H(JX,Y,JZ) + H(X,JY,JZ) on all triples.
template <ScalarField S>
bool torsion_type_identity(const LieAlgebra<S>& L, const Mat<S>& J, const InvariantForm<S>& H) {
    int n = L.dim();
    std::vector<Vec<S>> jc, eb;
    for (int j = 0; j < n; ++j) {
        jc.push_back(J.col(j));
        Vec<S> e(size_t(n), S(0));
        e[size_t(j)] = S(1);
        eb.push_back(std::move(e));
    }
    Index idx = first_combination(3);
    if (n < 3) return true;
    do {
        int x = idx[0], y = idx[1], z = idx[2];
        S lhs = H(Index(idx));
        S rhs = H.eval({jc[size_t(x)], jc[size_t(y)], eb[size_t(z)]})
              + H.eval({jc[size_t(x)], eb[size_t(y)], jc[size_t(z)]})
              + H.eval({eb[size_t(x)], jc[size_t(y)], jc[size_t(z)]});
        if (!(lhs - rhs).is_zero()) return false;
    } while (next_combination(idx, n));
    return true;
}

template <class S>
HermitianStructure<S> hermitian_cast(const HermitianStructure<Exact>& h) {
    return {liealg_cast<S>(h.algebra), mat_cast<S>(h.g), mat_cast<S>(h.J), h.name};
}

} // namespace hkt

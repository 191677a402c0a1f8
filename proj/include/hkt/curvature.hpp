/**
 * @file curvature.hpp
 * @brief Curvature of left-invariant connections, Ricci traces, Bianchi
 *        identities, the Levi-Civita <-> Bismut relation, and holonomy.
 *
 * Convention: R(X,Y) = [nabla_X, nabla_Y] - nabla_{[X,Y]},
 *             R(X,Y,Z,W) = g(R(X,Y)Z, W).
 */
#pragma once

#include <string>

#include "connection.hpp"

namespace hkt {

template <ScalarField S>
struct CurvatureTensor {
    int n = 0;
    std::vector<Mat<S>> ops;   // R(e_x, e_y) at index x*n+y
    std::vector<S> lowered;    // R(x,y,z,w) at ((x*n+y)*n+z)*n+w

    const Mat<S>& op(int x, int y) const { return ops[size_t(x) * n + y]; }
    const S& at(int x, int y, int z, int w) const {
        return lowered[((size_t(x) * n + y) * n + z) * n + w];
    }
    bool is_zero() const {
        for (const auto& m : ops)
            if (!m.is_zero()) return false;
        return true;
    }
    /// Multilinear evaluation of the lowered tensor on vectors.
    S eval(const Vec<S>& a, const Vec<S>& b, const Vec<S>& c, const Vec<S>& d) const {
        S tot(0);
        for (int x = 0; x < n; ++x) {
            if (a[size_t(x)].is_zero()) continue;
            for (int y = 0; y < n; ++y) {
                if (b[size_t(y)].is_zero()) continue;
                S f = a[size_t(x)] * b[size_t(y)];
                for (int z = 0; z < n; ++z) {
                    if (c[size_t(z)].is_zero()) continue;
                    S f2 = f * c[size_t(z)];
                    for (int w = 0; w < n; ++w) {
                        if (d[size_t(w)].is_zero()) continue;
                        const S& r = at(x, y, z, w);
                        if (!r.is_zero()) tot += f2 * d[size_t(w)] * r;
                    }
                }
            }
        }
        return tot;
    }
};

template <ScalarField S>
CurvatureTensor<S> curvature(const Connection<S>& conn, const LieAlgebra<S>& L, const Mat<S>& g) {
    int n = L.dim();
    CurvatureTensor<S> R;
    R.n = n;
    R.ops.assign(size_t(n) * n, Mat<S>(n));
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y) {
            Mat<S> m = conn[x] * conn[y] - conn[y] * conn[x];
            for (int k = 0; k < n; ++k) {
                const S& br = L.c(x, y, k);
                if (!br.is_zero()) m = m - conn[k].scaled(br);
            }
            R.ops[size_t(x) * n + y] = m;
            R.ops[size_t(y) * n + x] = Mat<S>(n) - m;
        }
    R.lowered.assign(size_t(n) * n * n * n, S(0));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            const Mat<S>& m = R.op(x, y);
            if (m.is_zero()) continue;
            for (int z = 0; z < n; ++z)
                for (int w = 0; w < n; ++w) {
                    S t(0);
                    for (int p = 0; p < n; ++p)
                        if (!m(p, z).is_zero()) t += g(p, w) * m(p, z);
                    R.lowered[((size_t(x) * n + y) * n + z) * n + w] = t;
                }
        }
    return R;
}

template <ScalarField S>
struct RicciTraces {
    Mat<S> ric;                 // Ric(X,Y) = sum_i R(e_i, X, Y, e_i)
    S scal{0};
    InvariantForm<S> rho;       // rho(X,Y) = 1/2 sum_i R(X, Y, J e_i, e_i), if J given
};

template <ScalarField S>
RicciTraces<S> ricci_traces(const CurvatureTensor<S>& R, const Mat<S>& g, const Mat<S>* J = nullptr) {
    int n = g.dim();
    Mat<S> ginv = inverse(g);
    RicciTraces<S> out;
    out.ric = Mat<S>(n);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            S t(0);
            for (int a = 0; a < n; ++a)
                for (int b = 0; b < n; ++b) {
                    const S& gi = ginv(a, b);
                    if (gi.is_zero()) continue;
                    const S& r = R.at(a, x, y, b);
                    if (!r.is_zero()) t += gi * r;
                }
            out.ric(x, y) = t;
        }
    out.scal = S(0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (!ginv(x, y).is_zero()) out.scal += ginv(x, y) * out.ric(x, y);
    out.rho = InvariantForm<S>(n, 2);
    if (J) {
        S half = S(1) / S(2);
        for (int x = 0; x < n; ++x)
            for (int y = x + 1; y < n; ++y) {
                S t(0);
                for (int a = 0; a < n; ++a)
                    for (int b = 0; b < n; ++b) {
                        const S& gi = ginv(a, b);
                        if (gi.is_zero()) continue;
                        for (int m = 0; m < n; ++m) {
                            const S& jm = (*J)(m, a);
                            if (jm.is_zero()) continue;
                            const S& r = R.at(x, y, m, b);
                            if (!r.is_zero()) t += gi * jm * r;
                        }
                    }
                out.rho.set({x, y}, t * half);
            }
    }
    return out;
}

/// H^2(X,Y) = <iota_X H, iota_Y H> with the full-sum 2-form inner product.
template <ScalarField S>
Mat<S> h_squared(const InvariantForm<S>& H, const Mat<S>& g) {
    int n = g.dim();
    Mat<S> ginv = inverse(g);
    Mat<S> out(n);
    std::vector<InvariantForm<S>> contr;
    for (int x = 0; x < n; ++x) {
        Vec<S> e(size_t(n), S(0));
        e[size_t(x)] = S(1);
        contr.push_back(interior(e, H));
    }
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            out(x, y) = inner_full(ginv, contr[size_t(x)], contr[size_t(y)]);
            out(y, x) = out(x, y);
        }
    return out;
}

/**
 * First Bianchi identity with torsion:
 *   cyc R(X,Y)Z = cyc [ T(T(X,Y),Z) + (nabla_X T)(Y,Z) ],
 * and second (torsion-free case): cyc (nabla_X R)(Y,Z) = 0.
 */
template <ScalarField S>
std::pair<bool, bool> bianchi_check(const Connection<S>& conn, const LieAlgebra<S>& L, const Mat<S>& g) {
    int n = L.dim();
    auto T = torsion(conn, L);
    auto R = curvature(conn, L, g);
    auto Tval = [&](const Vec<S>& a, const Vec<S>& b) {
        Vec<S> out(size_t(n), S(0));
        for (int i = 0; i < n; ++i) {
            if (a[size_t(i)].is_zero()) continue;
            for (int j = 0; j < n; ++j) {
                if (b[size_t(j)].is_zero()) continue;
                S f = a[size_t(i)] * b[size_t(j)];
                for (int k = 0; k < n; ++k) out[size_t(k)] += f * T[size_t(i)][size_t(j)][size_t(k)];
            }
        }
        return out;
    };
    bool first = true;
    for (int x = 0; x < n && first; ++x)
        for (int y = x + 1; y < n && first; ++y)
            for (int z = y + 1; z < n && first; ++z) {
                Vec<S> ex(size_t(n), S(0)), ey = ex, ez = ex;
                ex[size_t(x)] = S(1); ey[size_t(y)] = S(1); ez[size_t(z)] = S(1);
                Vec<S> lhs(size_t(n), S(0)), rhs(size_t(n), S(0));
                for (auto [a, b, cc] : {std::array<int, 3>{x, y, z}, {y, z, x}, {z, x, y}}) {
                    Vec<S> ea(size_t(n), S(0)), eb = ea, ec = ea;
                    ea[size_t(a)] = S(1); eb[size_t(b)] = S(1); ec[size_t(cc)] = S(1);
                    Vec<S> rv = R.op(a, b).apply(ec);
                    for (int m = 0; m < n; ++m) lhs[size_t(m)] += rv[size_t(m)];
                    // T(T(a,b),c)
                    Vec<S> t1 = Tval(Tval(ea, eb), ec);
                    // (nabla_a T)(b,c) = nabla_a(T(b,c)) - T(nabla_a b, c) - T(b, nabla_a c)
                    Vec<S> tb = Tval(eb, ec);
                    Vec<S> t2 = conn[a].apply(tb);
                    Vec<S> gb = conn[a].col(b), gc = conn[a].col(cc);
                    Vec<S> t3 = Tval(gb, ec), t4 = Tval(eb, gc);
                    for (int m = 0; m < n; ++m)
                        rhs[size_t(m)] += t1[size_t(m)] + t2[size_t(m)] - t3[size_t(m)] - t4[size_t(m)];
                }
                for (int m = 0; m < n; ++m)
                    if (!(lhs[size_t(m)] - rhs[size_t(m)]).is_zero()) first = false;
            }
    bool second = true;
    for (int x = 0; x < n && second; ++x)
        for (int y = x + 1; y < n && second; ++y)
            for (int z = y + 1; z < n && second; ++z) {
                Mat<S> acc(n);
                for (auto [a, b, cc] : {std::array<int, 3>{x, y, z}, {y, z, x}, {z, x, y}}) {
                    // (nabla_a R)(b,c) = [Gamma_a, R(b,c)] - R(Gamma_a b, c) - R(b, Gamma_a c)
                    Mat<S> m = conn[a] * R.op(b, cc) - R.op(b, cc) * conn[a];
                    for (int p = 0; p < n; ++p) {
                        const S& cb = conn[a](p, b);
                        if (!cb.is_zero()) m = m - R.op(p, cc).scaled(cb);
                        const S& ccf = conn[a](p, cc);
                        if (!ccf.is_zero()) m = m - R.op(b, p).scaled(ccf);
                    }
                    acc = acc + m;
                }
                if (!acc.is_zero()) second = false;
            }
    return {first, second};
}

/**
 * Residual of the Levi-Civita <-> Bismut curvature relation, stated on the
 * lowered Bismut torsion t3 (= -H in the engine's torsion-form convention):
 *
 *   R_LC(X,Y,Z,U) = R_B(X,Y,Z,U) - 1/2 (nab^B_X t3)(Y,Z,U) + 1/2 (nab^B_Y t3)(X,Z,U)
 *                   - 1/2 g(t3(X,Y), t3(Z,U)) - 1/4 g(t3(Y,Z), t3(X,U))
 *                   + 1/4 g(t3(X,Z), t3(Y,U)).
 *
 * Returns the maximum absolute residual over all basis quadruples.
 */
template <ScalarField S>
S lc_from_bismut_residual(const LieAlgebra<S>& L, const Mat<S>& g,
                          const Connection<S>& bismut, const InvariantForm<S>& H) {
    int n = L.dim();
    Mat<S> ginv = inverse(g);
    InvariantForm<S> t3 = -H;
    auto Rb = curvature(bismut, L, g);
    auto Rlc = curvature(levi_civita(L, g), L, g);
    std::vector<InvariantForm<S>> nab;
    for (int x = 0; x < n; ++x) nab.push_back(cov_deriv(bismut, t3, x));
    // t3 vectors: t3vec[x][y] = g^{-1} t3(x,y,.)
    std::vector<std::vector<Vec<S>>> tv(static_cast<size_t>(n), std::vector<Vec<S>>(static_cast<size_t>(n)));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Vec<S> w(static_cast<size_t>(n));
            for (int z = 0; z < n; ++z) w[size_t(z)] = t3(Index{x, y, z});
            tv[size_t(x)][size_t(y)] = ginv.apply(w);
        }
    auto pair_g = [&](const Vec<S>& a, const Vec<S>& b) {
        S t(0);
        for (int i = 0; i < n; ++i) {
            if (a[size_t(i)].is_zero()) continue;
            for (int j = 0; j < n; ++j)
                if (!g(i, j).is_zero() && !b[size_t(j)].is_zero()) t += g(i, j) * a[size_t(i)] * b[size_t(j)];
        }
        return t;
    };
    S half = S(1) / S(2), quarter = S(1) / S(4);
    S maxres(0);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z)
                for (int u = 0; u < n; ++u) {
                    S rhs = Rb.at(x, y, z, u)
                        - half * nab[size_t(x)](Index{y, z, u})
                        + half * nab[size_t(y)](Index{x, z, u})
                        - half * pair_g(tv[size_t(x)][size_t(y)], tv[size_t(z)][size_t(u)])
                        - quarter * pair_g(tv[size_t(y)][size_t(z)], tv[size_t(x)][size_t(u)])
                        + quarter * pair_g(tv[size_t(x)][size_t(z)], tv[size_t(y)][size_t(u)]);
                    S res = (Rlc.at(x, y, z, u) - rhs).abs();
                    if ((res - maxres).sign() > 0) maxres = res;
                }
    return maxres;
}

/// Containment labels for the holonomy classification.
struct HolonomyReport {
    int dimension = 0;
    bool g_skew = false;         // contained in so(g)
    bool commutes_I = false;     // in u(n) w.r.t. the supplied I
    bool su_trace = false;       // trace(I A) = 0 for all generators
    bool commutes_IJK = false;   // in sp(n)
    int annihilated = 0;         // count of supplied distinguished vectors killed
    std::string label = "so";
};

/**
 * Holonomy algebra of an invariant connection: the smallest space containing
 * all curvature operators R(x,y) and closed under bracket with every
 * Gamma[x], by iterated closure (Nomizu construction).
 */
template <ScalarField S>
std::vector<Mat<S>> holonomy_algebra(const Connection<S>& conn, const LieAlgebra<S>& L, const Mat<S>& g) {
    int n = L.dim();
    auto R = curvature(conn, L, g);
    auto vecify = [n](const Mat<S>& m) {
        Vec<S> v;
        v.reserve(size_t(n) * n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) v.push_back(m(i, j));
        return v;
    };
    auto matify = [n](const Vec<S>& v) {
        Mat<S> m(n);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) m(i, j) = v[size_t(i) * n + j];
        return m;
    };
    std::vector<Vec<S>> rows;
    for (int x = 0; x < n; ++x)
        for (int y = x + 1; y < n; ++y)
            if (!R.op(x, y).is_zero()) rows.push_back(vecify(R.op(x, y)));
    rref(rows);
    for (int iter = 0; iter <= n * n; ++iter) {
        std::vector<Vec<S>> next = rows;
        for (const auto& rv : rows) {
            Mat<S> A = matify(rv);
            for (int x = 0; x < n; ++x) {
                Mat<S> c = conn[x] * A - A * conn[x];
                if (!c.is_zero()) next.push_back(vecify(c));
            }
        }
        size_t before = rows.size();
        rref(next);
        if (next.size() == before) break;
        rows = std::move(next);
        if (iter == n * n) throw std::runtime_error("holonomy closure failed to stabilize");
    }
    std::vector<Mat<S>> basis;
    for (const auto& rv : rows) basis.push_back(matify(rv));
    return basis;
}

template <ScalarField S>
HolonomyReport classify_holonomy(const std::vector<Mat<S>>& basis, const Mat<S>& g,
                                 const Mat<S>* I = nullptr, const Mat<S>* J = nullptr,
                                 const Mat<S>* K = nullptr,
                                 const std::vector<Vec<S>>* annihilate = nullptr) {
    HolonomyReport rep;
    rep.dimension = int(basis.size());
    int n = g.dim();
    rep.g_skew = true;
    for (const auto& A : basis) {
        Mat<S> ga = g * A;
        for (int i = 0; i < n && rep.g_skew; ++i)
            for (int j = 0; j < n; ++j)
                if (!(ga(i, j) + ga(j, i)).is_zero()) { rep.g_skew = false; break; }
    }
    if (I) {
        rep.commutes_I = true;
        rep.su_trace = true;
        for (const auto& A : basis) {
            if (!(A * (*I) == (*I) * A)) rep.commutes_I = false;
            if (!(((*I) * A).trace().is_zero())) rep.su_trace = false;
        }
    }
    if (I && J && K) {
        rep.commutes_IJK = true;
        for (const auto& A : basis)
            if (!(A * (*J) == (*J) * A) || !(A * (*K) == (*K) * A)) rep.commutes_IJK = false;
        rep.commutes_IJK = rep.commutes_IJK && rep.commutes_I;
    }
    if (annihilate) {
        for (const auto& v : *annihilate) {
            bool killed = true;
            for (const auto& A : basis) {
                Vec<S> w = A.apply(v);
                for (const auto& x : w)
                    if (!x.is_zero()) { killed = false; break; }
                if (!killed) break;
            }
            if (killed) ++rep.annihilated;
        }
    }
    if (rep.dimension == 0) rep.label = "trivial";
    else if (rep.commutes_IJK && rep.g_skew) rep.label = "sp";
    else if (rep.commutes_I && rep.g_skew && rep.su_trace) rep.label = "su";
    else if (rep.commutes_I && rep.g_skew) rep.label = "u";
    else if (rep.g_skew) rep.label = "so";
    else rep.label = "gl";
    return rep;
}

} // namespace hkt

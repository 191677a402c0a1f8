/**
 * @file connection.hpp
 * @brief Left-invariant connections: coefficients, Koszul formula, torsion,
 *        covariant derivatives of forms.
 *
 * A connection is the array Gamma[x] of endomorphisms Y -> nabla_{e_x} Y.
 */
#pragma once

#include "liealg.hpp"

namespace hkt {

template <ScalarField S>
struct Connection {
    std::vector<Mat<S>> gamma;  // gamma[x] acts on basis vectors

    int dim() const { return int(gamma.size()); }
    const Mat<S>& operator[](int x) const { return gamma[size_t(x)]; }

    Vec<S> derive(const Vec<S>& x, const Vec<S>& y) const {
        int n = dim();
        Vec<S> out(size_t(n), S(0));
        for (int i = 0; i < n; ++i) {
            if (x[size_t(i)].is_zero()) continue;
            Vec<S> gy = gamma[size_t(i)].apply(y);
            for (int k = 0; k < n; ++k) out[size_t(k)] += x[size_t(i)] * gy[size_t(k)];
        }
        return out;
    }

    bool operator==(const Connection& o) const {
        if (dim() != o.dim()) return false;
        for (int x = 0; x < dim(); ++x)
            if (!(gamma[size_t(x)] == o.gamma[size_t(x)])) return false;
        return true;
    }
};

/// Levi-Civita connection from the Koszul formula on left-invariant fields:
/// 2 g(nabla_X Y, Z) = g([X,Y],Z) - g([Y,Z],X) + g([Z,X],Y).
template <ScalarField S>
Connection<S> levi_civita(const LieAlgebra<S>& L, const Mat<S>& g) {
    int n = L.dim();
    Mat<S> ginv = inverse(g);
    Connection<S> conn;
    conn.gamma.assign(size_t(n), Mat<S>(n));
    S half = S(1) / S(2);
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Vec<S> w(size_t(n), S(0));
            for (int z = 0; z < n; ++z) {
                S t(0);
                for (int m = 0; m < n; ++m) {
                    const S& cxy = L.c(x, y, m);
                    if (!cxy.is_zero()) t += cxy * g(m, z);
                    const S& cyz = L.c(y, z, m);
                    if (!cyz.is_zero()) t -= cyz * g(m, x);
                    const S& czx = L.c(z, x, m);
                    if (!czx.is_zero()) t += czx * g(m, y);
                }
                w[size_t(z)] = t * half;
            }
            Vec<S> colv = ginv.apply(w);
            for (int k = 0; k < n; ++k) conn.gamma[size_t(x)](k, y) = colv[size_t(k)];
        }
    return conn;
}

/// Add a lowered correction term: nabla = base + g^{-1} lowered(x, y, .).
template <ScalarField S, class LoweredFn>
Connection<S> connection_from_lowered(const Connection<S>& base, const Mat<S>& g, LoweredFn lowered) {
    int n = base.dim();
    Mat<S> ginv = inverse(g);
    Connection<S> conn = base;
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y) {
            Vec<S> w(static_cast<size_t>(n));
            for (int z = 0; z < n; ++z) w[size_t(z)] = lowered(x, y, z);
            Vec<S> colv = ginv.apply(w);
            for (int k = 0; k < n; ++k) conn.gamma[size_t(x)](k, y) += colv[size_t(k)];
        }
    return conn;
}

/// Torsion tensor T(e_i, e_j) = nabla_i e_j - nabla_j e_i - [e_i, e_j].
template <ScalarField S>
std::vector<std::vector<Vec<S>>> torsion(const Connection<S>& conn, const LieAlgebra<S>& L) {
    int n = L.dim();
    std::vector<std::vector<Vec<S>>> T(static_cast<size_t>(n), std::vector<Vec<S>>(static_cast<size_t>(n)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            Vec<S> v(static_cast<size_t>(n));
            for (int k = 0; k < n; ++k)
                v[size_t(k)] = conn[i](k, j) - conn[j](k, i) - L.c(i, j, k);
            T[size_t(i)][size_t(j)] = std::move(v);
        }
    return T;
}

template <ScalarField S>
bool torsion_free(const Connection<S>& conn, const LieAlgebra<S>& L) {
    auto T = torsion(conn, L);
    for (const auto& row : T)
        for (const auto& v : row)
            for (const auto& x : v)
                if (!x.is_zero()) return false;
    return true;
}

/// The lowered torsion as a 3-tensor value g(T(e_i,e_j), e_k).
template <ScalarField S>
S lowered_torsion(const std::vector<std::vector<Vec<S>>>& T, const Mat<S>& g, int i, int j, int k) {
    S t(0);
    int n = g.dim();
    for (int m = 0; m < n; ++m) {
        const S& v = T[size_t(i)][size_t(j)][size_t(m)];
        if (!v.is_zero()) t += v * g(m, k);
    }
    return t;
}

/// nabla g = 0 componentwise: each Gamma[x] must be g-skew.
template <ScalarField S>
bool preserves_metric(const Connection<S>& conn, const Mat<S>& g) {
    int n = g.dim();
    for (int x = 0; x < n; ++x) {
        Mat<S> ga = g * conn[x];
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (!(ga(i, j) + ga(j, i)).is_zero()) return false;
    }
    return true;
}

/// nabla A = 0 for a constant endomorphism A: [Gamma[x], A] = 0 for all x.
template <ScalarField S>
bool preserves_endomorphism(const Connection<S>& conn, const Mat<S>& A) {
    for (const auto& m : conn.gamma)
        if (!(m * A == A * m)) return false;
    return true;
}

/// Covariant derivative of an invariant k-form in the basis direction x.
template <ScalarField S>
InvariantForm<S> cov_deriv(const Connection<S>& conn, const InvariantForm<S>& a, int x) {
    int n = a.dim(), k = a.degree();
    InvariantForm<S> r(n, k);
    if (k == 0) return r;
    Index idx = first_combination(k);
    do {
        S tot(0);
        for (int pos = 0; pos < k; ++pos) {
            for (int m = 0; m < n; ++m) {
                const S& gm = conn[x](m, idx[size_t(pos)]);
                if (gm.is_zero()) continue;
                Index args = idx;
                args[size_t(pos)] = m;
                S av = a(std::move(args));
                if (!av.is_zero()) tot -= gm * av;
            }
        }
        if (!tot.is_zero()) r.set(idx, tot);
    } while (next_combination(idx, n));
    return r;
}

template <ScalarField S>
InvariantForm<S> cov_deriv_along(const Connection<S>& conn, const InvariantForm<S>& a, const Vec<S>& x) {
    InvariantForm<S> r(a.dim(), a.degree());
    for (int i = 0; i < a.dim(); ++i)
        if (!x[size_t(i)].is_zero()) r = r + cov_deriv(conn, a, i).scaled(x[size_t(i)]);
    return r;
}

template <ScalarField S>
bool parallel_form(const Connection<S>& conn, const InvariantForm<S>& a) {
    for (int x = 0; x < a.dim(); ++x)
        if (!cov_deriv(conn, a, x).is_zero()) return false;
    return true;
}

/// Lie derivative of an invariant form along an invariant field (Cartan).
template <ScalarField S>
InvariantForm<S> lie_derivative(const LieAlgebra<S>& L, const Vec<S>& x, const InvariantForm<S>& a) {
    return interior(x, L.d(a)) + L.d(interior(x, a));
}

template <class S>
Connection<S> connection_cast(const Connection<Exact>& c) {
    Connection<S> r;
    for (const auto& m : c.gamma) r.gamma.push_back(mat_cast<S>(m));
    return r;
}

} // namespace hkt

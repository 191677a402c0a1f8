/**
 * @file liealg.hpp
 * @brief Lie algebra presentations and the Chevalley-Eilenberg differential.
 *
 * Structure constants are entered as sparse triples (i, j, k, value) meaning
 * [e_i, e_j] has the given coefficient on e_k; the antisymmetric completion
 * is automatic and duplicate (i,j,k) entries are rejected.  Only invariant
 * forms are differentiated, so d carries no Lie-derivative term:
 *
 *   d a (X_0..X_k) = sum_{i<j} (-1)^{i+j} a([X_i,X_j], X_0..^i..^j..X_k).
 */
#pragma once

#include <optional>
#include <set>
#include <tuple>

#include "form.hpp"

namespace hkt {

struct BracketTriple {
    int i, j, k;   // 0-based
    Exact value;
};

template <ScalarField S>
class LieAlgebra {
public:
    explicit LieAlgebra(int n) : n_(n), c_(size_t(n) * n * n, S(0)) {}

    static LieAlgebra from_triples(int n, const std::vector<BracketTriple>& triples) {
        LieAlgebra L(n);
        std::set<std::tuple<int, int, int>> seen;
        for (const auto& t : triples) {
            if (t.i < 0 || t.j < 0 || t.k < 0 || t.i >= n || t.j >= n || t.k >= n)
                throw std::invalid_argument("bracket index out of range");
            if (t.i == t.j) throw std::invalid_argument("bracket [e_i,e_i] must vanish");
            int a = std::min(t.i, t.j), b = std::max(t.i, t.j);
            if (!seen.insert({a, b, t.k}).second)
                throw std::invalid_argument("duplicate bracket entry");
            S v = scalar_cast<S>(t.value);
            if (t.i > t.j) v = -v;
            L.c(a, b, t.k) += v;
            L.c(b, a, t.k) -= v;
        }
        return L;
    }

    int dim() const { return n_; }

    S& c(int i, int j, int k) { return c_[(size_t(i) * n_ + j) * n_ + k]; }
    const S& c(int i, int j, int k) const { return c_[(size_t(i) * n_ + j) * n_ + k]; }

    Vec<S> bracket_basis(int i, int j) const {
        Vec<S> v(static_cast<size_t>(n_));
        for (int k = 0; k < n_; ++k) v[size_t(k)] = c(i, j, k);
        return v;
    }

    Vec<S> bracket(const Vec<S>& x, const Vec<S>& y) const {
        Vec<S> out(size_t(n_), S(0));
        for (int i = 0; i < n_; ++i) {
            if (x[size_t(i)].is_zero()) continue;
            for (int j = 0; j < n_; ++j) {
                if (y[size_t(j)].is_zero()) continue;
                S f = x[size_t(i)] * y[size_t(j)];
                for (int k = 0; k < n_; ++k) {
                    const S& ck = c(i, j, k);
                    if (!ck.is_zero()) out[size_t(k)] += f * ck;
                }
            }
        }
        return out;
    }

    Mat<S> ad(int i) const {
        Mat<S> m(n_);
        for (int j = 0; j < n_; ++j)
            for (int k = 0; k < n_; ++k) m(k, j) = c(i, j, k);
        return m;
    }

    Mat<S> ad_vec(const Vec<S>& x) const {
        Mat<S> m(n_);
        for (int i = 0; i < n_; ++i)
            if (!x[size_t(i)].is_zero()) m = m + ad(i).scaled(x[size_t(i)]);
        return m;
    }

    /// First violating quadruple of the Jacobi identity, if any.
    std::optional<std::array<int, 3>> jacobi_violation() const {
        for (int i = 0; i < n_; ++i)
            for (int j = i + 1; j < n_; ++j)
                for (int k = j + 1; k < n_; ++k) {
                    Vec<S> ek(size_t(n_), S(0)), ei = ek, ej = ek;
                    ek[size_t(k)] = S(1); ei[size_t(i)] = S(1); ej[size_t(j)] = S(1);
                    Vec<S> s1 = bracket(bracket_basis(i, j), ek);
                    Vec<S> s2 = bracket(bracket_basis(j, k), ei);
                    Vec<S> s3 = bracket(bracket_basis(k, i), ej);
                    for (int m = 0; m < n_; ++m)
                        if (!(s1[size_t(m)] + s2[size_t(m)] + s3[size_t(m)]).is_zero())
                            return std::array<int, 3>{i, j, k};
                }
        return std::nullopt;
    }

    bool jacobi_check() const { return !jacobi_violation().has_value(); }

    /// Chevalley-Eilenberg differential of an invariant k-form.
    InvariantForm<S> d(const InvariantForm<S>& a) const {
        int k = a.degree();
        InvariantForm<S> r(n_, k + 1);
        if (k + 1 > n_) return r;
        Index idx = first_combination(k + 1);
        do {
            S tot(0);
            for (int ii = 0; ii <= k; ++ii)
                for (int jj = ii + 1; jj <= k; ++jj) {
                    Index rest;
                    rest.reserve(size_t(k));
                    for (int t = 0; t <= k; ++t)
                        if (t != ii && t != jj) rest.push_back(idx[size_t(t)]);
                    int base_sign = ((ii + jj) % 2 == 1) ? -1 : 1;
                    for (int m = 0; m < n_; ++m) {
                        const S& br = c(idx[size_t(ii)], idx[size_t(jj)], m);
                        if (br.is_zero()) continue;
                        Index args;
                        args.reserve(size_t(k));
                        args.push_back(m);
                        args.insert(args.end(), rest.begin(), rest.end());
                        S av = a(std::move(args));
                        if (av.is_zero()) continue;
                        tot += base_sign < 0 ? -(br * av) : br * av;
                    }
                }
            if (!tot.is_zero()) r.set(idx, tot);
        } while (next_combination(idx, n_));
        return r;
    }

private:
    int n_;
    std::vector<S> c_;
};

template <ScalarField S>
Mat<S> killing_form(const LieAlgebra<S>& L) {
    int n = L.dim();
    std::vector<Mat<S>> ads;
    ads.reserve(size_t(n));
    for (int i = 0; i < n; ++i) ads.push_back(L.ad(i));
    Mat<S> B(n);
    for (int i = 0; i < n; ++i)
        for (int j = i; j < n; ++j) {
            B(i, j) = (ads[size_t(i)] * ads[size_t(j)]).trace();
            B(j, i) = B(i, j);
        }
    return B;
}

struct AlgebraFlags {
    bool abelian = false;
    bool nilpotent = false;
    bool solvable = false;
    bool semisimple = false;
    bool unimodular = false;
};

namespace detail {

/// Span of brackets [A, B] for subspaces given by spanning sets.
template <ScalarField S>
std::vector<Vec<S>> bracket_span(const LieAlgebra<S>& L,
                                 const std::vector<Vec<S>>& A,
                                 const std::vector<Vec<S>>& B) {
    std::vector<Vec<S>> rows;
    for (const auto& x : A)
        for (const auto& y : B) {
            Vec<S> v = L.bracket(x, y);
            bool nz = false;
            for (const auto& t : v)
                if (!t.is_zero()) { nz = true; break; }
            if (nz) rows.push_back(std::move(v));
        }
    rref(rows);
    return rows;
}

} // namespace detail

template <ScalarField S>
AlgebraFlags classify_algebra(const LieAlgebra<S>& L) {
    int n = L.dim();
    AlgebraFlags f;
    std::vector<Vec<S>> full;
    for (int i = 0; i < n; ++i) {
        Vec<S> e(size_t(n), S(0));
        e[size_t(i)] = S(1);
        full.push_back(std::move(e));
    }
    auto derived = detail::bracket_span(L, full, full);
    f.abelian = derived.empty();
    // lower central series
    auto lcs = derived;
    f.nilpotent = true;
    for (int step = 0; step < n + 1; ++step) {
        if (lcs.empty()) break;
        auto next = detail::bracket_span(L, full, lcs);
        if (next.size() == lcs.size()) {  // stabilized nonzero
            f.nilpotent = false;
            break;
        }
        lcs = next;
    }
    if (!lcs.empty() && f.nilpotent) f.nilpotent = false;
    // derived series
    auto ds = derived;
    f.solvable = true;
    for (int step = 0; step < n + 1; ++step) {
        if (ds.empty()) break;
        auto next = detail::bracket_span(L, ds, ds);
        if (next.size() == ds.size()) {
            f.solvable = false;
            break;
        }
        ds = next;
    }
    if (!ds.empty() && f.solvable) f.solvable = false;
    // Killing form nondegeneracy
    f.semisimple = !det(killing_form(L)).is_zero();
    // unimodular: tr(ad x) = 0 for all basis x
    f.unimodular = true;
    for (int i = 0; i < n; ++i)
        if (!L.ad(i).trace().is_zero()) f.unimodular = false;
    return f;
}

template <ScalarField S>
LieAlgebra<S> direct_sum(const LieAlgebra<S>& A, const LieAlgebra<S>& B) {
    int na = A.dim(), nb = B.dim();
    LieAlgebra<S> L(na + nb);
    for (int i = 0; i < na; ++i)
        for (int j = 0; j < na; ++j)
            for (int k = 0; k < na; ++k) L.c(i, j, k) = A.c(i, j, k);
    for (int i = 0; i < nb; ++i)
        for (int j = 0; j < nb; ++j)
            for (int k = 0; k < nb; ++k) L.c(na + i, na + j, na + k) = B.c(i, j, k);
    return L;
}

template <class S>
LieAlgebra<S> liealg_cast(const LieAlgebra<Exact>& L) {
    LieAlgebra<S> r(L.dim());
    for (int i = 0; i < L.dim(); ++i)
        for (int j = 0; j < L.dim(); ++j)
            for (int k = 0; k < L.dim(); ++k) r.c(i, j, k) = scalar_cast<S>(L.c(i, j, k));
    return r;
}

} // namespace hkt

/**
 * @file form.hpp
 * @brief Alternating multilinear forms on a fixed n-dimensional space.
 *
 * Coefficients are stored on strictly increasing index tuples; evaluation on
 * an arbitrary tuple expands the permutation sign.  Norm conventions follow
 * the engine-wide rule: ||a||^2 is the full unrestricted index sum over all
 * k-tuples (no 1/k! factor), computed by metric-inverse contraction so no
 * orthonormal frame is ever required.
 */
#pragma once

#include <algorithm>
#include <map>
#include <numeric>
#include <sstream>
#include <vector>

#include "linalg.hpp"

namespace hkt {

using Index = std::vector<int>;

inline int sort_sign(Index& idx) {
    // insertion sort, counting transpositions; 0 on repeated index
    int sgn = 1;
    for (size_t i = 1; i < idx.size(); ++i)
        for (size_t j = i; j > 0 && idx[j - 1] >= idx[j]; --j) {
            if (idx[j - 1] == idx[j]) return 0;
            std::swap(idx[j - 1], idx[j]);
            sgn = -sgn;
        }
    return sgn;
}

/// Iterate over strictly increasing k-tuples in {0..n-1}.
inline bool next_combination(Index& c, int n) {
    int k = int(c.size());
    for (int i = k - 1; i >= 0; --i) {
        if (c[i] < n - k + i) {
            ++c[i];
            for (int j = i + 1; j < k; ++j) c[j] = c[j - 1] + 1;
            return true;
        }
    }
    return false;
}

inline Index first_combination(int k) {
    Index c(k);
    std::iota(c.begin(), c.end(), 0);
    return c;
}

template <ScalarField S>
class InvariantForm {
public:
    InvariantForm() : n_(0), k_(0) {}
    InvariantForm(int n, int k) : n_(n), k_(k) {}

    int dim() const { return n_; }
    int degree() const { return k_; }
    const std::map<Index, S>& components() const { return c_; }

    void set(Index idx, const S& v) {
        int sgn = sort_sign(idx);
        if (sgn == 0) return;
        S val = sgn < 0 ? -v : v;
        if (val.is_zero()) c_.erase(idx);
        else c_[std::move(idx)] = std::move(val);
    }

    void add(Index idx, const S& v) {
        int sgn = sort_sign(idx);
        if (sgn == 0) return;
        auto it = c_.find(idx);
        S val = sgn < 0 ? -v : v;
        if (it == c_.end()) {
            if (!val.is_zero()) c_.emplace(std::move(idx), std::move(val));
        } else {
            it->second += val;
            if (it->second.is_zero()) c_.erase(it);
        }
    }

    /// Value on an arbitrary basis-index tuple (antisymmetric extension).
    S operator()(Index idx) const {
        int sgn = sort_sign(idx);
        if (sgn == 0) return S(0);
        auto it = c_.find(idx);
        if (it == c_.end()) return S(0);
        return sgn < 0 ? -it->second : it->second;
    }

    /// Multilinear evaluation on vectors.
    S eval(const std::vector<Vec<S>>& args) const {
        if (int(args.size()) != k_) throw std::invalid_argument("arity mismatch");
        S tot(0);
        for (const auto& [idx, coef] : c_) {
            Mat<S> sub(k_);
            for (int r = 0; r < k_; ++r)
                for (int c = 0; c < k_; ++c) sub(r, c) = args[size_t(r)][size_t(idx[size_t(c)])];
            S d = det(sub);
            if (!d.is_zero()) tot += coef * d;
        }
        return tot;
    }

    bool is_zero() const {
        for (const auto& [idx, v] : c_)
            if (!v.is_zero()) return false;
        return true;
    }

    InvariantForm operator+(const InvariantForm& o) const {
        InvariantForm r = *this;
        for (const auto& [i, v] : o.c_) r.add(i, v);
        return r;
    }
    InvariantForm operator-(const InvariantForm& o) const {
        InvariantForm r = *this;
        for (const auto& [i, v] : o.c_) r.add(i, -v);
        return r;
    }
    InvariantForm operator-() const {
        InvariantForm r(n_, k_);
        for (const auto& [i, v] : c_) r.c_[i] = -v;
        return r;
    }
    InvariantForm scaled(const S& s) const {
        InvariantForm r(n_, k_);
        if (s.is_zero()) return r;
        for (const auto& [i, v] : c_) {
            S w = s * v;
            if (!w.is_zero()) r.c_[i] = std::move(w);
        }
        return r;
    }
    bool operator==(const InvariantForm& o) const { return (*this - o).is_zero(); }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (const auto& [idx, v] : c_) {
            if (v.is_zero()) continue;
            if (!first) os << " + ";
            first = false;
            os << v.str() << "*e^";
            for (int i : idx) os << (i + 1);
        }
        return first ? "0" : os.str();
    }

private:
    int n_, k_;
    std::map<Index, S> c_;
};

template <ScalarField S>
InvariantForm<S> basis_covector(int n, int i) {
    InvariantForm<S> f(n, 1);
    f.set({i}, S(1));
    return f;
}

template <ScalarField S>
InvariantForm<S> wedge(const InvariantForm<S>& a, const InvariantForm<S>& b) {
    if (a.dim() != b.dim()) throw std::invalid_argument("wedge: dimension mismatch");
    InvariantForm<S> r(a.dim(), a.degree() + b.degree());
    if (r.degree() > a.dim()) return r;
    for (const auto& [ia, va] : a.components())
        for (const auto& [ib, vb] : b.components()) {
            Index merged = ia;
            merged.insert(merged.end(), ib.begin(), ib.end());
            r.add(std::move(merged), va * vb);
        }
    return r;
}

/// Interior product with the vector v (contraction in the first slot).
template <ScalarField S>
InvariantForm<S> interior(const Vec<S>& v, const InvariantForm<S>& a) {
    if (int(v.size()) != a.dim()) throw std::invalid_argument("interior: dimension mismatch");
    InvariantForm<S> r(a.dim(), std::max(0, a.degree() - 1));
    if (a.degree() == 0) return r;
    for (const auto& [idx, coef] : a.components())
        for (size_t p = 0; p < idx.size(); ++p) {
            const S& vp = v[size_t(idx[p])];
            if (vp.is_zero()) continue;
            Index rest;
            rest.reserve(idx.size() - 1);
            for (size_t q = 0; q < idx.size(); ++q)
                if (q != p) rest.push_back(idx[q]);
            S val = vp * coef;
            if (p % 2 == 1) val = -val;
            r.add(std::move(rest), val);
        }
    return r;
}

/**
 * Signed action of an (almost) complex structure on forms:
 * (J a)(X_1,...,X_k) = a(-J X_1, ..., -J X_k).
 * For even degree this is the plain pullback along J.
 */
template <ScalarField S>
InvariantForm<S> j_act(const Mat<S>& J, const InvariantForm<S>& a) {
    int n = a.dim(), k = a.degree();
    InvariantForm<S> r(n, k);
    std::vector<Vec<S>> mcols(static_cast<size_t>(n));
    for (int j = 0; j < n; ++j) {
        mcols[size_t(j)] = J.col(j);
        for (auto& x : mcols[size_t(j)]) x = -x;
    }
    if (k == 0) return a;
    Index idx = first_combination(k);
    do {
        std::vector<Vec<S>> args;
        args.reserve(size_t(k));
        for (int i : idx) args.push_back(mcols[size_t(i)]);
        S v = a.eval(args);
        if (!v.is_zero()) r.set(idx, v);
    } while (next_combination(idx, n));
    return r;
}

/// Plain pullback a(J., ..., J.); equals j_act for even degree.
template <ScalarField S>
InvariantForm<S> pullback(const Mat<S>& J, const InvariantForm<S>& a) {
    InvariantForm<S> r = j_act(J, a);
    return (a.degree() % 2 == 0) ? r : -r;
}

/// true iff j_act(L, a) == a for every supplied structure.
template <ScalarField S>
bool invariance_check(const InvariantForm<S>& a, const std::vector<Mat<S>>& structures) {
    for (const auto& L : structures)
        if (!(j_act(L, a) == a)) return false;
    return true;
}

template <ScalarField S>
InvariantForm<S> musical_flat(const Mat<S>& g, const Vec<S>& v) {
    InvariantForm<S> f(g.dim(), 1);
    for (int i = 0; i < g.dim(); ++i) {
        S x(0);
        for (int j = 0; j < g.dim(); ++j) x += g(i, j) * v[size_t(j)];
        f.set({i}, x);
    }
    return f;
}

template <ScalarField S>
Vec<S> musical_sharp(const Mat<S>& g, const InvariantForm<S>& a) {
    Vec<S> w(size_t(g.dim()));
    for (int i = 0; i < g.dim(); ++i) w[size_t(i)] = a(Index{i});
    return inverse(g).apply(w);
}

/**
 * Inner product with the full unrestricted index sum:
 *   <a,b> = sum over all k-tuples I,J of a_I b_J prod g^{I_t J_t}
 *         = k! * sum over increasing I,J of a_I b_J det(ginv[I,J]).
 */
template <ScalarField S>
S inner_full(const Mat<S>& ginv, const InvariantForm<S>& a, const InvariantForm<S>& b) {
    int k = a.degree();
    if (k != b.degree()) throw std::invalid_argument("inner: degree mismatch");
    S tot(0);
    for (const auto& [ia, va] : a.components())
        for (const auto& [ib, vb] : b.components()) {
            Mat<S> sub(k);
            for (int r = 0; r < k; ++r)
                for (int c = 0; c < k; ++c) sub(r, c) = ginv(ia[size_t(r)], ib[size_t(c)]);
            S d = det(sub);
            if (!d.is_zero()) tot += va * vb * d;
        }
    S fact(1);
    for (int i = 2; i <= k; ++i) fact = fact * S(i);
    return fact * tot;
}

template <ScalarField S>
S form_norm_sq(const Mat<S>& g, const InvariantForm<S>& a) {
    return inner_full(inverse(g), a, a);
}

/// Increasing-tuple inner product (the one the Hodge pairing uses).
template <ScalarField S>
S inner_incr(const Mat<S>& ginv, const InvariantForm<S>& a, const InvariantForm<S>& b) {
    S full = inner_full(ginv, a, b);
    S fact(1);
    for (int i = 2; i <= a.degree(); ++i) fact = fact * S(i);
    return full / fact;
}

/**
 * Hodge star of a 2-form supported on an oriented 4-dimensional subspace.
 * `frame` lists four vectors spanning the subspace, in the chosen
 * orientation; `a` must be supported there.  Defined by
 * a ^ (*b) = <a,b> vol with the increasing-tuple pairing and
 * vol = frame^1 ^ frame^2 ^ frame^3 ^ frame^4 normalized to unit norm.
 */
template <ScalarField S>
InvariantForm<S> hodge_star2(const Mat<S>& g, const std::vector<Vec<S>>& frame,
                             const InvariantForm<S>& a) {
    if (frame.size() != 4) throw std::invalid_argument("hodge_star2: need a 4-frame");
    int n = a.dim();
    Mat<S> ginv = inverse(g);
    // dual covectors of the frame and the subspace volume form
    std::vector<InvariantForm<S>> fl;
    for (const auto& v : frame) fl.push_back(musical_flat(g, v));
    // Gram inverse to build the dual basis of the subspace
    Mat<S> gram(4);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            S x(0);
            for (int p = 0; p < n; ++p)
                for (int q = 0; q < n; ++q) x += g(p, q) * frame[size_t(i)][size_t(p)] * frame[size_t(j)][size_t(q)];
            gram(i, j) = x;
        }
    Mat<S> gram_inv = inverse(gram);
    std::vector<InvariantForm<S>> dual(4, InvariantForm<S>(n, 1));
    for (int i = 0; i < 4; ++i) {
        InvariantForm<S> d(n, 1);
        for (int j = 0; j < 4; ++j) d = d + fl[size_t(j)].scaled(gram_inv(i, j));
        dual[size_t(i)] = d;
    }
    // support check: a must vanish against the g-orthogonal complement
    {
        std::vector<Vec<S>> rows;
        for (const auto& fv : fl) {
            Vec<S> r(static_cast<size_t>(n));
            for (int j = 0; j < n; ++j) r[size_t(j)] = fv(Index{j});
            rows.push_back(std::move(r));
        }
        for (const auto& w : nullspace(rows, n))
            if (!interior(w, a).is_zero())
                throw std::invalid_argument("hodge_star2: form not supported on the subspace");
    }
    InvariantForm<S> vol = wedge(wedge(dual[0], dual[1]), wedge(dual[2], dual[3]));
    S voln = inner_incr(ginv, vol, vol);
    if (voln.is_zero()) throw std::invalid_argument("hodge_star2: degenerate frame");
    if (!(voln == S(1))) {
        auto r = voln.try_sqrt();
        if (!r) throw std::domain_error("hodge_star2: frame volume not unit-normalizable");
        vol = vol.scaled(S(1) / *r);
    }
    // basis of 2-forms on the subspace: dual_i ^ dual_j, i<j
    std::vector<InvariantForm<S>> basis;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j) basis.push_back(wedge(dual[size_t(i)], dual[size_t(j)]));
    // solve: star(a) = sum x_b basis_b with  basis_c ^ star(a) = <basis_c, a> vol
    std::vector<Vec<S>> rows;
    Vec<S> rhs;
    for (const auto& bc : basis) {
        Vec<S> row;
        for (const auto& bb : basis) {
            InvariantForm<S> w = wedge(bc, bb);
            // coefficient of w against vol
            S coef(0);
            for (const auto& [idx, v] : vol.components()) {
                if (!v.is_zero()) { coef = w(idx) / v; break; }
            }
            row.push_back(coef);
        }
        rows.push_back(std::move(row));
        rhs.push_back(inner_incr(ginv, bc, a));
    }
    // solve the 6x6 system
    int m = int(basis.size());
    Mat<S> A(m);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j < m; ++j) A(i, j) = rows[size_t(i)][size_t(j)];
    Vec<S> x = inverse(A).apply(rhs);
    InvariantForm<S> star(n, 2);
    for (int i = 0; i < m; ++i) star = star + basis[size_t(i)].scaled(x[size_t(i)]);
    return star;
}

template <class S>
InvariantForm<S> form_cast(const InvariantForm<Exact>& f) {
    InvariantForm<S> r(f.dim(), f.degree());
    for (const auto& [i, v] : f.components()) r.set(i, scalar_cast<S>(v));
    return r;
}

template <class S>
Vec<S> vec_cast(const Vec<Exact>& v) {
    Vec<S> r;
    r.reserve(v.size());
    for (const auto& x : v) r.push_back(scalar_cast<S>(x));
    return r;
}

} // namespace hkt

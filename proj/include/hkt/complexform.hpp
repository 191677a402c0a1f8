/**
 * @file complexform.hpp
 * @brief Complexified invariant forms as (real, imaginary) pairs, with
 *        (p,q)-type projections relative to a complex structure and the
 *        corresponding Dolbeault-type operator on invariant forms.
 */
#pragma once

#include "connection.hpp"

namespace hkt {

template <ScalarField S>
struct CForm {
    InvariantForm<S> re, im;

    CForm() = default;
    CForm(int n, int k) : re(n, k), im(n, k) {}
    CForm(InvariantForm<S> r, InvariantForm<S> i) : re(std::move(r)), im(std::move(i)) {}

    int dim() const { return re.dim(); }
    int degree() const { return re.degree(); }

    CForm operator+(const CForm& o) const { return {re + o.re, im + o.im}; }
    CForm operator-(const CForm& o) const { return {re - o.re, im - o.im}; }
    CForm operator-() const { return {-re, -im}; }
    CForm conj() const { return {re, -im}; }
    CForm times_i() const { return {-im, re}; }
    bool is_zero() const { return re.is_zero() && im.is_zero(); }
    bool operator==(const CForm& o) const { return (*this - o).is_zero(); }
};

template <ScalarField S>
CForm<S> cwedge(const CForm<S>& a, const CForm<S>& b) {
    return {wedge(a.re, b.re) - wedge(a.im, b.im), wedge(a.re, b.im) + wedge(a.im, b.re)};
}

template <ScalarField S>
CForm<S> cd(const LieAlgebra<S>& L, const CForm<S>& a) {
    return {L.d(a.re), L.d(a.im)};
}

/// Interior product with the complex vector vre + i vim.
template <ScalarField S>
CForm<S> c_interior(const Vec<S>& vre, const Vec<S>& vim, const CForm<S>& a) {
    return {interior(vre, a.re) - interior(vim, a.im),
            interior(vre, a.im) + interior(vim, a.re)};
}

template <ScalarField S>
CForm<S> c_lie_derivative(const LieAlgebra<S>& L, const Vec<S>& vre, const Vec<S>& vim, const CForm<S>& a) {
    return c_interior(vre, vim, cd(L, a)) + cd(L, c_interior(vre, vim, a));
}

/**
 * (p,q)-projection with respect to I of a complex (p+q)-form, using the
 * sum-to-identity projectors pi^{1,0} X = (X - i I X)/2, pi^{0,1} X = (X + i I X)/2
 * expanded multilinearly on basis tuples.
 */
template <ScalarField S>
CForm<S> pq_project(const Mat<S>& I, const CForm<S>& a, int p, int q) {
    int n = a.dim(), k = a.degree();
    if (p + q != k || p < 0 || q < 0) throw std::invalid_argument("pq_project: bad type");
    CForm<S> out(n, k);
    std::vector<Vec<S>> icols, ecols;
    for (int j = 0; j < n; ++j) {
        icols.push_back(I.col(j));
        Vec<S> e(size_t(n), S(0));
        e[size_t(j)] = S(1);
        ecols.push_back(std::move(e));
    }
    S two_k(1);
    for (int i = 0; i < k; ++i) two_k = two_k * S(2);
    Index idx = first_combination(k);
    if (k == 0) return a;
    do {
        S tot_re(0), tot_im(0);
        // choose the set Hol of slots taking pi^{1,0} (|Hol| = p), then expand
        for (unsigned hol = 0; hol < (1u << k); ++hol) {
            if (__builtin_popcount(hol) != p) continue;
            for (unsigned sub = 0; sub < (1u << k); ++sub) {
                unsigned ipart = sub;
                // coefficient: (1/2)^k * prod over slots in ipart of (-i if slot in hol else +i)
                S cre = S(1) / two_k, cim(0);
                std::vector<Vec<S>> args;
                args.reserve(size_t(k));
                for (int slot = 0; slot < k; ++slot) {
                    int base = idx[size_t(slot)];
                    if (ipart & (1u << slot)) {
                        args.push_back(icols[size_t(base)]);
                        if (hol & (1u << slot)) {        // * (-i)
                            S nre = cim, nim = -cre;
                            cre = nre; cim = nim;
                        } else {                         // * (+i)
                            S nre = -cim, nim = cre;
                            cre = nre; cim = nim;
                        }
                    } else {
                        args.push_back(ecols[size_t(base)]);
                    }
                }
                S vre = a.re.eval(args), vim = a.im.eval(args);
                tot_re += cre * vre - cim * vim;
                tot_im += cre * vim + cim * vre;
            }
        }
        out.re.set(idx, tot_re);
        out.im.set(idx, tot_im);
    } while (next_combination(idx, n));
    return out;
}

/// del_I of a pure (p,q)-form: the (p+1,q)-part of d.
template <ScalarField S>
CForm<S> del_I(const LieAlgebra<S>& L, const Mat<S>& I, const CForm<S>& a, int p, int q) {
    return pq_project(I, cd(L, a), p + 1, q);
}

/// (1,0)-part of a real 1-form: alpha^{1,0}(X) = (alpha(X) - i alpha(IX))/2.
template <ScalarField S>
CForm<S> one_zero_part(const Mat<S>& I, const InvariantForm<S>& alpha) {
    return pq_project(I, CForm<S>(alpha, InvariantForm<S>(alpha.dim(), 1)), 1, 0);
}

} // namespace hkt

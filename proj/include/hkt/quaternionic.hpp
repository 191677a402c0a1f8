/**
 * @file quaternionic.hpp
 * @brief Hyper-Hermitian structures: quaternion relations, HKT detection,
 *        the Obata connection, Obata Ricci curvature and the Ricci foliation,
 *        q-real forms, and classification flags.
 */
#pragma once

#include "complexform.hpp"
#include "hermitian.hpp"

namespace hkt {

template <ScalarField S>
struct HyperHermitianStructure {
    LieAlgebra<S> algebra;
    Mat<S> g;
    Mat<S> I, J, K;
    std::string name;

    HermitianStructure<S> hermitian(int which) const {
        const Mat<S>& L = which == 0 ? I : which == 1 ? J : K;
        return {algebra, g, L, name};
    }
    HyperHermitianStructure rescaled(const S& c) const {
        return {algebra, g.scaled(c), I, J, K, name};
    }
};

template <ScalarField S>
bool quaternion_check(const HyperHermitianStructure<S>& q) {
    if (!almost_complex(q.I) || !almost_complex(q.J) || !almost_complex(q.K)) return false;
    if (!(q.I * q.J == q.K)) return false;
    Mat<S> ji = q.J * q.I;
    int n = q.g.dim();
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(ji(i, j) + q.K(i, j)).is_zero()) return false;
    return true;
}

template <ScalarField S>
struct HktData {
    bool hkt = false;
    InvariantForm<S> H;          // the common torsion when hkt
    InvariantForm<S> theta;      // the common Lee form
};

/// Computes the three Bismut torsions and Lee forms; hkt iff torsions agree.
template <ScalarField S>
HktData<S> is_hkt(const HyperHermitianStructure<S>& q) {
    HktData<S> out;
    InvariantForm<S> HI = bismut_torsion(q.hermitian(0));
    InvariantForm<S> HJ = bismut_torsion(q.hermitian(1));
    InvariantForm<S> HK = bismut_torsion(q.hermitian(2));
    out.hkt = (HI == HJ) && (HJ == HK);
    out.H = HI;
    InvariantForm<S> tI = lee_form(q.hermitian(0), HI);
    InvariantForm<S> tJ = lee_form(q.hermitian(1), HJ);
    InvariantForm<S> tK = lee_form(q.hermitian(2), HK);
    if (!(tI == tJ) || !(tJ == tK))
        throw std::runtime_error("is_hkt: Lee forms of a hyper-Hermitian structure disagree");
    out.theta = tI;
    return out;
}

/**
 * Obata connection via the torsion tensor t3 = -H:
 *   2A(X,Y,Z) = -t3(X,IY,IZ) - t3(IX,IY,Z) - t3(X,KY,KZ) - t3(IX,KY,JZ),
 *   g(nabla^Ob_X Y, Z) = g(nabla^B_X Y, Z) + A(X,Y,Z).
 * Postconditions (torsion-free, nabla I = nabla J = nabla K = 0) are enforced.
 */
template <ScalarField S>
Connection<S> obata_connection(const HyperHermitianStructure<S>& q, const InvariantForm<S>& H,
                               bool check_axioms = true) {
    int n = q.algebra.dim();
    InvariantForm<S> t3 = -H;
    Connection<S> B = bismut_connection(q.hermitian(0));
    std::vector<Vec<S>> ic, jc, kc, eb;
    for (int j = 0; j < n; ++j) {
        ic.push_back(q.I.col(j));
        jc.push_back(q.J.col(j));
        kc.push_back(q.K.col(j));
        Vec<S> e(size_t(n), S(0));
        e[size_t(j)] = S(1);
        eb.push_back(std::move(e));
    }
    S half = S(1) / S(2);
    Connection<S> ob = connection_from_lowered(B, q.g, [&](int x, int y, int z) {
        S v = -t3.eval({eb[size_t(x)], ic[size_t(y)], ic[size_t(z)]})
              - t3.eval({ic[size_t(x)], ic[size_t(y)], eb[size_t(z)]})
              - t3.eval({eb[size_t(x)], kc[size_t(y)], kc[size_t(z)]})
              - t3.eval({ic[size_t(x)], kc[size_t(y)], jc[size_t(z)]});
        return v * half;
    });
    if (check_axioms) {
        if (!torsion_free(ob, q.algebra))
            throw std::runtime_error("obata_connection: result has torsion");
        if (!preserves_endomorphism(ob, q.I) || !preserves_endomorphism(ob, q.J) ||
            !preserves_endomorphism(ob, q.K))
            throw std::runtime_error("obata_connection: result does not preserve I, J, K");
    }
    return ob;
}

/// The three role-assignments of the A tensor ((I,J,K) cycled); all must agree.
template <ScalarField S>
std::vector<Connection<S>> obata_role_variants(const HyperHermitianStructure<S>& q, const InvariantForm<S>& H) {
    std::vector<Connection<S>> out;
    HyperHermitianStructure<S> q2{q.algebra, q.g, q.J, q.K, q.I, q.name};
    HyperHermitianStructure<S> q3{q.algebra, q.g, q.K, q.I, q.J, q.name};
    out.push_back(obata_connection(q, H, false));
    out.push_back(obata_connection(q2, H, false));
    out.push_back(obata_connection(q3, H, false));
    return out;
}

template <ScalarField S>
struct ObataRicci {
    InvariantForm<S> alpha;   // connection 1-form on the q-real line
    InvariantForm<S> Theta;   // d alpha
};

/**
 * Obata Ricci curvature from nabla^Ob Omega^n = alpha (x) Omega^n with
 * Omega = omega_J + i omega_K.  On HKT structures Theta = d theta is
 * asserted (hard failure otherwise), along with SU(2)-invariance.
 */
template <ScalarField S>
ObataRicci<S> obata_ricci(const HyperHermitianStructure<S>& q, const InvariantForm<S>& H,
                          const InvariantForm<S>& theta, const Connection<S>* obata = nullptr) {
    int n = q.algebra.dim();
    Connection<S> ob = obata ? *obata : obata_connection(q, H);
    CForm<S> Om(fundamental_form(q.g, q.J), fundamental_form(q.g, q.K));
    int m = n / 4;
    CForm<S> Phi = Om;
    for (int i = 1; i < m; ++i) Phi = cwedge(Phi, Om);
    // reference component
    Index ref;
    S pr(0), pi(0);
    for (const auto& [idx, v] : Phi.re.components())
        if (!v.is_zero()) { ref = idx; break; }
    if (ref.empty())
        for (const auto& [idx, v] : Phi.im.components())
            if (!v.is_zero()) { ref = idx; break; }
    if (ref.empty()) throw std::runtime_error("obata_ricci: degenerate Omega^n");
    pr = Phi.re(Index(ref));
    pi = Phi.im(Index(ref));
    S den = pr * pr + pi * pi;
    ObataRicci<S> out;
    out.alpha = InvariantForm<S>(n, 1);
    for (int x = 0; x < n; ++x) {
        InvariantForm<S> dre = cov_deriv(ob, Phi.re, x);
        InvariantForm<S> dim_ = cov_deriv(ob, Phi.im, x);
        S qr = dre(Index(ref)), qi = dim_(Index(ref));
        S ar = (qr * pr + qi * pi) / den;
        S ai = (qi * pr - qr * pi) / den;
        if (!ai.is_zero())
            throw std::runtime_error("obata_ricci: connection form on the q-real line is not real");
        // verify proportionality on every component
        if (!(Phi.re.scaled(ar) == dre) || !(Phi.im.scaled(ar) == dim_))
            throw std::runtime_error("obata_ricci: nabla^Ob Omega^n not proportional to Omega^n");
        out.alpha.set({x}, ar);
    }
    out.Theta = q.algebra.d(out.alpha);
    if (!(out.Theta == q.algebra.d(theta)))
        throw std::runtime_error("obata_ricci: Theta != d theta");
    for (const Mat<S>* L : {&q.I, &q.J, &q.K})
        if (!(j_act(*L, out.Theta) == out.Theta))
            throw std::runtime_error("obata_ricci: Theta is not SU(2)-invariant");
    return out;
}

/// q-real check: J conj(Omega) = Omega and Omega of type (2,0) for I.
template <ScalarField S>
bool q_real_check(const HyperHermitianStructure<S>& q) {
    CForm<S> Om(fundamental_form(q.g, q.J), fundamental_form(q.g, q.K));
    CForm<S> jbar(j_act(q.J, Om.re), -j_act(q.J, Om.im));
    if (!(jbar == Om)) return false;
    return pq_project(q.I, Om, 2, 0) == Om;
}

template <ScalarField S>
struct RicciFoliation {
    std::vector<Vec<S>> kernel;
    int rank = 0;
    bool pairing_ok = false;   // eigenvalues of g^{-1} Theta in +/- pairs
    bool kernel_contains_quaternionic_span = false;
};

template <ScalarField S>
RicciFoliation<S> ricci_foliation(const HyperHermitianStructure<S>& q, const InvariantForm<S>& theta) {
    int n = q.algebra.dim();
    InvariantForm<S> Th = q.algebra.d(theta);
    Mat<S> M(n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) M(i, j) = Th(Index{i, j});
    std::vector<Vec<S>> rows;
    for (int i = 0; i < n; ++i) rows.push_back(M.col(i));  // M^T rows; rank same
    RicciFoliation<S> out;
    out.rank = rank(rows);
    std::vector<Vec<S>> rows2;
    for (int i = 0; i < n; ++i) {
        Vec<S> r(static_cast<size_t>(n));
        for (int j = 0; j < n; ++j) r[size_t(j)] = M(i, j);
        rows2.push_back(std::move(r));
    }
    out.kernel = nullspace(rows2, n);
    // +/- pairing: char poly of g^{-1} Theta has only even-degree terms
    // (odd-degree coefficients vanish; the polynomial is even up to t^dim).
    Mat<S> op = inverse(q.g) * M;
    auto cp = char_poly(op);
    out.pairing_ok = true;
    for (size_t k = 1; k < cp.size(); k += 2)
        if (!cp[k].is_zero()) out.pairing_ok = false;
    // kernel contains theta#, I theta#, J theta#, K theta#
    Vec<S> ts = musical_sharp(q.g, theta);
    out.kernel_contains_quaternionic_span = true;
    for (const Mat<S>* L : {(const Mat<S>*)nullptr, &q.I, &q.J, &q.K}) {
        Vec<S> v = L ? (*L).apply(ts) : ts;
        Vec<S> w = M.apply(v);
        for (const auto& x : w)
            if (!x.is_zero()) out.kernel_contains_quaternionic_span = false;
    }
    return out;
}

template <ScalarField S>
struct HyperReport {
    bool hkt = false, strong_hkt = false, hyperkahler = false, balanced = false;
    bool parallel_torsion = false;
    InvariantForm<S> H, theta;
};

template <ScalarField S>
HyperReport<S> classify_hyper(const HyperHermitianStructure<S>& q) {
    HyperReport<S> rep;
    auto hk = is_hkt(q);
    rep.hkt = hk.hkt;
    rep.theta = hk.theta;
    rep.balanced = hk.theta.is_zero();
    if (!hk.hkt) {
        // hyperkahler would force all three torsions zero hence equal
        rep.H = hk.H;
        rep.hyperkahler = false;
        rep.strong_hkt = false;
        rep.parallel_torsion = false;
        return rep;
    }
    rep.H = hk.H;
    rep.strong_hkt = q.algebra.d(rep.H).is_zero();
    rep.hyperkahler = rep.H.is_zero();
    Connection<S> B = bismut_connection(q.hermitian(0));
    rep.parallel_torsion = parallel_form(B, rep.H);
    return rep;
}

template <class S>
HyperHermitianStructure<S> hyper_cast(const HyperHermitianStructure<Exact>& h) {
    return {liealg_cast<S>(h.algebra), mat_cast<S>(h.g), mat_cast<S>(h.I),
            mat_cast<S>(h.J), mat_cast<S>(h.K), h.name};
}

} // namespace hkt

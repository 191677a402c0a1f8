/**
 * @file acceptance.cpp
 * @brief End-to-end acceptance suite.  Each numbered criterion prints one
 *        pass/fail line; criteria 1-7 run in exact arithmetic and again in
 *        floating mode (tol 1e-9), whose boolean outcomes must coincide.
 */
#include <iostream>
#include <sstream>
#include <vector>

#include "hkt/catalog_io.hpp"
#include "hkt/verify.hpp"

using namespace hkt;

namespace {

int g_failures = 0;

void report(const std::string& id, bool ok, const std::string& detail = "") {
    std::cout << (ok ? "PASS " : "FAIL ") << id;
    if (!detail.empty()) std::cout << "  [" << detail << "]";
    std::cout << "\n";
    if (!ok) ++g_failures;
}

template <ScalarField S>
struct Booleans {
    std::vector<bool> bits;
    void push(bool b) { bits.push_back(b); }
};

// ---- criteria 1..7, templated over the scalar field ----

template <ScalarField S>
bool criterion1(Booleans<S>& acc) {
    auto su3 = build_su3_samelson();
    auto q = hyper_cast<S>(su3.hs);
    auto hk = is_hkt(q);
    bool oracle = true;
    Index idx = first_combination(3);
    int count = 0;
    do {
        ++count;
        S rhs(0);
        for (int m = 0; m < 8; ++m)
            if (!q.algebra.c(idx[0], idx[1], m).is_zero())
                rhs += q.algebra.c(idx[0], idx[1], m) * q.g(m, idx[2]);
        if (!(hk.H(Index(idx)) == rhs)) oracle = false;
    } while (next_combination(idx, 8));
    bool closed = q.algebra.d(hk.H).is_zero();
    auto B = bismut_connection(q.hermitian(0));
    bool parallel = parallel_form(B, hk.H);
    auto R = curvature(B, q.algebra, q.g);
    bool flat = R.is_zero();
    bool hol0 = holonomy_algebra(B, q.algebra, q.g).empty();
    bool ok = oracle && closed && parallel && flat && hol0 && count == 56;
    for (bool b : {oracle, closed, parallel, flat, hol0}) acc.push(b);
    return ok;
}

template <ScalarField S>
bool criterion2(Booleans<S>& acc) {
    bool ok = true;
    for (const auto& entry : build_standard_entries()) {
      int nstruct = entry.hyper ? 3 : 1;
      for (int which = 0; which < nstruct; ++which) {
        HermitianStructure<S> h = entry.hyper ? hyper_cast<S>(entry.hs).hermitian(which)
                                              : hermitian_cast<S>(entry.cs);
        InvariantForm<S> dc = dc_omega(h);
        int n = h.algebra.dim();
        for (long t : {-1L, 0L, 1L, 3L}) {
            auto conn = gauduchon_connection(h, S(t));
            if (!preserves_metric(conn, h.g) || !preserves_endomorphism(conn, h.J)) ok = false;
            if (t == -1) {
                auto T = torsion(conn, h.algebra);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j)
                        for (int k = 0; k < n; ++k) {
                            S tv = lowered_torsion(T, h.g, i, j, k);
                            if (!(tv + dc(Index{i, j, k})).is_zero()) ok = false;
                            if (!(tv + lowered_torsion(T, h.g, i, k, j)).is_zero()) ok = false;
                        }
            }
            if (t == 1) {
                auto T = torsion(conn, h.algebra);
                for (int i = 0; i < n; ++i)
                    for (int j = 0; j < n; ++j) {
                        Vec<S> jx = h.J.col(i), jy = h.J.col(j);
                        Vec<S> tj(static_cast<size_t>(n), S(0));
                        for (int p = 0; p < n; ++p) {
                            if (jx[size_t(p)].is_zero()) continue;
                            for (int qq = 0; qq < n; ++qq) {
                                if (jy[size_t(qq)].is_zero()) continue;
                                S f = jx[size_t(p)] * jy[size_t(qq)];
                                for (int m = 0; m < n; ++m)
                                    tj[size_t(m)] += f * T[size_t(p)][size_t(qq)][size_t(m)];
                            }
                        }
                        for (int m = 0; m < n; ++m)
                            if (!(tj[size_t(m)] + T[size_t(i)][size_t(j)][size_t(m)]).is_zero()) ok = false;
                    }
            }
        }
      }
    }
    acc.push(ok);
    return ok;
}

template <ScalarField S>
bool criterion3(Booleans<S>& acc) {
    bool ok = true;
    for (const auto& entry : build_standard_entries()) {
        try {
            if (entry.hyper) {
                auto q = hyper_cast<S>(entry.hs);
                is_hkt(q);   // throws if the three Lee forms disagree
                for (int w = 0; w < 3; ++w) {
                    auto h = q.hermitian(w);
                    lee_form(h, bismut_torsion(h));   // throws if trace != wedge
                }
            } else {
                auto h = hermitian_cast<S>(entry.cs);
                lee_form(h, bismut_torsion(h));
            }
        } catch (const std::exception&) {
            ok = false;
        }
    }
    acc.push(ok);
    return ok;
}

template <ScalarField S>
bool criterion4(Booleans<S>& acc) {
    bool ok = true;
    for (const auto& entry : build_standard_entries()) {
        if (!entry.hyper) continue;
        auto q = hyper_cast<S>(entry.hs);
        auto hk = is_hkt(q);
        if (!hk.hkt) continue;
        try {
            auto ob = obata_connection(q, hk.H);             // throws unless axioms hold
            auto variants = obata_role_variants(q, hk.H);
            if (!(variants[0] == variants[1] && variants[1] == variants[2])) ok = false;
            obata_ricci(q, hk.H, hk.theta, &ob);              // throws unless Theta = d theta
            auto fol = ricci_foliation(q, hk.theta);
            if (fol.rank % 2 != 0 || fol.rank >= q.algebra.dim() || !fol.pairing_ok ||
                !fol.kernel_contains_quaternionic_span)
                ok = false;
        } catch (const std::exception&) {
            ok = false;
        }
    }
    acc.push(ok);
    return ok;
}

template <ScalarField S>
bool criterion5(Booleans<S>& acc) {
    bool ok = true;
    for (const auto& entry : build_standard_entries()) {
        HermitianStructure<S> h = entry.hyper ? hyper_cast<S>(entry.hs).hermitian(0)
                                              : hermitian_cast<S>(entry.cs);
        if (entry.hyper) {
            auto q = hyper_cast<S>(entry.hs);
            if (!is_hkt(q).hkt) continue;   // ivanovpap asserted on HKT entries
        }
        auto H = bismut_torsion(h);
        auto B = bismut_connection(h);
        if (!lc_from_bismut_residual(h.algebra, h.g, B, H).is_zero()) ok = false;
        auto rep = classify_hermitian(h);
        if (rep.skt) {
            auto br = bismut_ricci(h);
            if (!br.rhob2_residual.is_zero()) ok = false;
        }
    }
    {
        auto su3 = hyper_cast<S>(build_su3_samelson().hs);
        auto lc = levi_civita(su3.algebra, su3.g);
        auto R = curvature(lc, su3.algebra, su3.g);
        auto tr = ricci_traces(R, su3.g);
        auto H = bismut_torsion(su3.hermitian(0));
        auto H2 = h_squared(H, su3.g);
        if (!(tr.ric == H2.scaled(S(1) / S(4)))) ok = false;
    }
    acc.push(ok);
    return ok;
}

template <ScalarField S>
bool criterion6(Booleans<S>& acc, std::string& detail) {
    int instances = 0;
    bool ok = true;
    for (const auto& entry : build_standard_entries()) {
        if (entry.name.rfind("almost_abelian_", 0) != 0) continue;
        ++instances;
        auto q = hyper_cast<S>(entry.hs);
        auto rep = classify_hyper(q);
        if (rep.strong_hkt != rep.hyperkahler) ok = false;
        acc.push(rep.strong_hkt);
        acc.push(rep.hyperkahler);
    }
    std::ostringstream os;
    os << instances << " instances";
    detail = os.str();
    ok = ok && instances >= 5;
    return ok;
}

template <ScalarField S>
bool criterion7(Booleans<S>& acc, std::string& detail) {
    auto su3 = build_su3_samelson();
    auto q = hyper_cast<S>(su3.hs);
    Structure8Report<S> rep;
    try {
        rep = analyze_structure8(q);
    } catch (const std::exception& ex) {
        detail = ex.what();
        return false;
    }
    bool ok = rep.applicable && rep.in_regime;
    auto want = [&](bool b) { ok = ok && b; acc.push(b); };
    want(rep.vertical_type == "u1_su2");
    want(rep.a == S(-1));
    want(rep.b == S(-1));
    want((rep.a + rep.b + S(2)).is_zero());
    want((rep.b * (rep.b - rep.a)).is_zero());
    want(rep.eta[0].is_zero() && rep.eta[1].is_zero() && rep.eta[2].is_zero());
    want(rep.dV_norm_sq == S(3));
    want(rep.balance_residual.is_zero());
    want(rep.rotational_ok);
    want(rep.obata_euler_ok);
    want(rep.lambda == S(1));
    bool appendix = true;
    for (int i = 0; i < 7; ++i)
        if (!rep.appendix_residual[i].is_zero()) appendix = false;
    want(appendix);
    bool equiv = rep.equivalence_consistent;
    for (int i = 0; i < 5; ++i) equiv = equiv && rep.equivalence[i];
    want(equiv);
    want(rep.potential_ok);
    return ok;
}

template <ScalarField S>
Booleans<S> run_1_to_7(bool print) {
    Booleans<S> acc;
    std::string d6, d7;
    bool c1 = criterion1(acc);
    bool c2 = criterion2(acc);
    bool c3 = criterion3(acc);
    bool c4 = criterion4(acc);
    bool c5 = criterion5(acc);
    bool c6 = criterion6(acc, d6);
    bool c7 = criterion7(acc, d7);
    if (print) {
        report("criterion 1: Samelson oracle on su(3) (H = g([.,.],.), dH = 0, "
               "nabla^B H = 0, R^B = 0, hol = {0})", c1);
        report("criterion 2: connection-line axioms for t in {-1,0,1,3} on every entry", c2);
        report("criterion 3: Lee form double computation; theta_I = theta_J = theta_K", c3);
        report("criterion 4: Obata axioms, Theta = d theta, foliation kernel and pairing", c4);
        report("criterion 5: curvature relation, rho^B identity on SKT, Ric^LC = H^2/4 on su(3)", c5);
        report("criterion 6: almost-abelian dichotomy strong_hkt <=> hyperkahler", c6, d6);
        report("criterion 7: dimension-8 structure suite on su(3)", c7, d7);
    }
    acc.push(c1); acc.push(c2); acc.push(c3); acc.push(c4);
    acc.push(c5); acc.push(c6); acc.push(c7);
    return acc;
}

bool criterion8() {
    auto entry = build_hopf_x_hopf();
    auto rep = classify_hyper(entry.hs);
    bool flags = rep.strong_hkt && rep.parallel_torsion && !rep.hyperkahler;
    auto s8 = analyze_structure8(entry.hs);
    // The five-way equivalence needs the compact simply-connected regime;
    // this entry has d theta = 0 (outside it), and the observed flags are
    // frozen here as the regression value: (T,T,T,F,F).
    bool ran = s8.applicable;
    bool observed = !s8.in_regime &&
                    s8.regime_note.find("d theta = 0") != std::string::npos &&
                    s8.equivalence[0] && s8.equivalence[1] && s8.equivalence[2] &&
                    !s8.equivalence[3] && !s8.equivalence[4];
    bool rest = s8.a == Exact(-1) && s8.b == Exact(-1) && s8.balance_residual.is_zero() &&
                s8.rotational_ok && s8.obata_euler_ok && s8.lambda == Exact(1);
    return flags && ran && observed && rest;
}

bool criterion9() {
    auto cat = build_standard_entries();
    const auto* df = find_entry(cat, "dotti_fino_nilpotent");
    const auto* ab = find_entry(cat, "abelian_r8");
    auto drep = classify_hyper(df->hs);
    bool dok = drep.balanced && drep.parallel_torsion && !drep.strong_hkt && !drep.hyperkahler;
    auto arep = classify_hyper(ab->hs);
    bool aok = arep.hyperkahler && arep.H.is_zero() && arep.theta.is_zero() &&
               ab->hs.algebra.d(arep.H).is_zero();
    if (aok) {
        auto B = bismut_connection(ab->hs.hermitian(0));
        aok = parallel_form(B, arep.H) && curvature(B, ab->hs.algebra, ab->hs.g).is_zero();
    }
    return dok && aok;
}

} // namespace

int main() {
    std::cout << "== acceptance suite (exact arithmetic) ==\n";
    auto exact_bits = run_1_to_7<Exact>(true);
    report("criterion 8: hopf_x_hopf product propagation (observed equivalence flags frozen)",
           criterion8());
    report("criterion 9: negative controls (dotti_fino, abelian_r8)", criterion9());

    std::cout << "== criterion 10: floating mode rerun (tol = 1e-9) ==\n";
    Float::tolerance() = 1e-9;
    auto float_bits = run_1_to_7<Float>(false);
    bool same = exact_bits.bits.size() == float_bits.bits.size();
    if (same)
        for (size_t i = 0; i < exact_bits.bits.size(); ++i)
            if (exact_bits.bits[i] != float_bits.bits[i]) same = false;
    std::ostringstream os;
    os << exact_bits.bits.size() << " boolean outcomes compared";
    report("criterion 10: float-mode outcomes identical to exact mode", same, os.str());

    std::cout << (g_failures == 0 ? "ACCEPTANCE: all criteria passed\n"
                                  : "ACCEPTANCE: failures present\n");
    return g_failures == 0 ? 0 : 1;
}

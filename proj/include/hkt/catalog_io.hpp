/**
 * @file catalog_io.hpp
 * @brief Versioned JSON entry files with exact rational round-tripping.
 *
 * Format (version 1):
 *   {"version": 1, "name": str, "dim": int,
 *    "brackets": [[i, j, k, "p/q"], ...],        // [e_i,e_j] has coefficient on e_k; 1-based
 *    "metric": [["..."]],
 *    "I": [["..."]], "J": [["..."]], "K": [["..."]],   // K optional, defaults to I*J
 *    "expected": {flag: bool, ...}}              // optional
 *
 * Hermitian-only entries omit "I" (and "K") and supply just "J".  Scalars are
 * strings to keep the data exact; the grammar extends plain rationals with an
 * optional sqrt(3) part:  "p/q" | "[p/q][+|-]r/s*rt3" | "rt3" | "-rt3".
 */
#pragma once

#include <fstream>

#include <json.hpp>

#include "catalog.hpp"

namespace hkt {

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

namespace io_detail {

inline Rational parse_rational(const std::string& s) {
    if (s.empty()) throw ParseError("empty rational");
    try {
        return Rational(s);
    } catch (const std::exception&) {
        throw ParseError("bad rational '" + s + "'");
    }
}

inline Exact parse_scalar(std::string s) {
    // strip spaces
    std::string t;
    for (char c : s)
        if (c != ' ') t.push_back(c);
    if (t.empty()) throw ParseError("empty scalar");
    // split at the last '+' or '-' that is not leading and not part of the first token
    auto rt = t.find("rt3");
    if (rt == std::string::npos) return Exact(parse_rational(t));
    // forms: "[coef*]rt3" or "<rat>(+|-)[coef*]rt3"
    std::string head, tail = t;
    for (size_t pos = 1; pos < t.size(); ++pos) {
        if ((t[pos] == '+' || t[pos] == '-') && t.find("rt3", pos) != std::string::npos &&
            t[pos - 1] != '/' && isdigit(static_cast<unsigned char>(t[pos - 1]))) {
            head = t.substr(0, pos);
            tail = t.substr(pos);
            break;
        }
    }
    Rational a = head.empty() ? Rational(0) : parse_rational(head);
    // tail is now [+|-][coef*]rt3
    Rational sign = 1;
    if (!tail.empty() && (tail[0] == '+' || tail[0] == '-')) {
        if (tail[0] == '-') sign = -1;
        tail = tail.substr(1);
    }
    if (tail == "rt3") return Exact(a, sign);
    auto star = tail.find("*rt3");
    if (star == std::string::npos || star + 4 != tail.size())
        throw ParseError("bad scalar '" + s + "'");
    Rational b = parse_rational(tail.substr(0, star)) * sign;
    return Exact(a, b);
}

inline std::string scalar_str(const Exact& x) { return x.str(); }

inline nlohmann::json matrix_json(const Mat<Exact>& m) {
    nlohmann::json rows = nlohmann::json::array();
    for (int i = 0; i < m.dim(); ++i) {
        nlohmann::json row = nlohmann::json::array();
        for (int j = 0; j < m.dim(); ++j) row.push_back(scalar_str(m(i, j)));
        rows.push_back(std::move(row));
    }
    return rows;
}

inline Mat<Exact> matrix_from_json(const nlohmann::json& j, int n, const std::string& field) {
    if (!j.is_array() || int(j.size()) != n) throw ParseError(field + ": expected " + std::to_string(n) + " rows");
    Mat<Exact> m(n);
    for (int i = 0; i < n; ++i) {
        if (!j[size_t(i)].is_array() || int(j[size_t(i)].size()) != n)
            throw ParseError(field + ": row " + std::to_string(i) + " has wrong length");
        for (int jj = 0; jj < n; ++jj)
            m(i, jj) = parse_scalar(j[size_t(i)][size_t(jj)].get<std::string>());
    }
    return m;
}

} // namespace io_detail

inline nlohmann::json entry_to_json(const CatalogEntry& e) {
    nlohmann::json j;
    j["version"] = 1;
    j["name"] = e.name;
    const LieAlgebra<Exact>& L = e.hyper ? e.hs.algebra : e.cs.algebra;
    int n = L.dim();
    j["dim"] = n;
    nlohmann::json br = nlohmann::json::array();
    for (int i = 0; i < n; ++i)
        for (int jj = i + 1; jj < n; ++jj)
            for (int k = 0; k < n; ++k)
                if (!L.c(i, jj, k).is_zero())
                    br.push_back(nlohmann::json::array(
                        {i + 1, jj + 1, k + 1, io_detail::scalar_str(L.c(i, jj, k))}));
    j["brackets"] = std::move(br);
    if (e.hyper) {
        j["metric"] = io_detail::matrix_json(e.hs.g);
        j["I"] = io_detail::matrix_json(e.hs.I);
        j["J"] = io_detail::matrix_json(e.hs.J);
        j["K"] = io_detail::matrix_json(e.hs.K);
    } else {
        j["metric"] = io_detail::matrix_json(e.cs.g);
        j["J"] = io_detail::matrix_json(e.cs.J);
    }
    if (!e.expected.empty()) {
        nlohmann::json ex;
        for (const auto& [k, v] : e.expected) ex[k] = v;
        j["expected"] = std::move(ex);
    }
    return j;
}

inline void save_entry(const CatalogEntry& e, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write " + path);
    out << entry_to_json(e).dump(1) << "\n";
}

/// Parse and fully re-validate an entry document.
inline CatalogEntry entry_from_json(const nlohmann::json& j) {
    if (!j.contains("version") || j["version"].get<int>() != 1)
        throw ParseError("version: expected 1");
    CatalogEntry e;
    e.name = j.value("name", std::string("unnamed"));
    if (!j.contains("dim")) throw ParseError("dim: missing");
    int n = j["dim"].get<int>();
    if (n <= 0 || n > 16) throw ParseError("dim: out of supported range [1,16]");
    std::vector<BracketTriple> triples;
    for (const auto& row : j.value("brackets", nlohmann::json::array())) {
        if (!row.is_array() || row.size() != 4) throw ParseError("brackets: entries must be [i,j,k,\"p/q\"]");
        int i = row[0].get<int>(), jj = row[1].get<int>(), k = row[2].get<int>();
        if (i < 1 || jj < 1 || k < 1 || i > n || jj > n || k > n)
            throw ParseError("brackets: index out of range in [" + std::to_string(i) + "," +
                             std::to_string(jj) + "," + std::to_string(k) + "]");
        triples.push_back({i - 1, jj - 1, k - 1, io_detail::parse_scalar(row[3].get<std::string>())});
    }
    LieAlgebra<Exact> L(n);
    try {
        L = LieAlgebra<Exact>::from_triples(n, triples);
    } catch (const std::invalid_argument& ex) {
        throw ParseError(std::string("brackets: ") + ex.what());
    }
    if (auto bad = L.jacobi_violation())
        throw ParseError("brackets: Jacobi identity fails on (e" + std::to_string((*bad)[0] + 1) +
                         ", e" + std::to_string((*bad)[1] + 1) + ", e" + std::to_string((*bad)[2] + 1) + ")");
    if (!j.contains("metric")) throw ParseError("metric: missing");
    Mat<Exact> g = io_detail::matrix_from_json(j["metric"], n, "metric");
    for (int i = 0; i < n; ++i)
        for (int jj = 0; jj < n; ++jj)
            if (!(g(i, jj) == g(jj, i))) throw ParseError("metric: not symmetric");
    if (!positive_definite(g)) throw ParseError("metric: not positive definite");
    if (!j.contains("J")) throw ParseError("J: missing");
    Mat<Exact> J = io_detail::matrix_from_json(j["J"], n, "J");
    if (!almost_complex(J)) throw ParseError("J: J^2 != -id");
    if (!metric_compatible(g, J)) throw ParseError("J: not compatible with the metric");
    e.hyper = j.contains("I");
    if (e.hyper) {
        Mat<Exact> I = io_detail::matrix_from_json(j["I"], n, "I");
        Mat<Exact> K = j.contains("K") ? io_detail::matrix_from_json(j["K"], n, "K") : I * J;
        e.hs = {std::move(L), std::move(g), std::move(I), std::move(J), std::move(K), e.name};
        if (!quaternion_check(e.hs)) throw ParseError("I,J,K: quaternion relations fail");
        if (!metric_compatible(e.hs.g, e.hs.I) || !metric_compatible(e.hs.g, e.hs.K))
            throw ParseError("I/K: not compatible with the metric");
        for (int which = 0; which < 3; ++which)
            if (!nijenhuis(e.hs.algebra, which == 0 ? e.hs.I : which == 1 ? e.hs.J : e.hs.K).empty())
                throw ParseError("structure not integrable (Nijenhuis tensor nonzero)");
    } else {
        e.cs = {std::move(L), std::move(g), std::move(J), e.name};
        if (!nijenhuis(e.cs.algebra, e.cs.J).empty())
            throw ParseError("J: not integrable (Nijenhuis tensor nonzero)");
    }
    nlohmann::json expected = j.value("expected", nlohmann::json::object());
    for (const auto& [k, v] : expected.items()) e.expected[k] = v.get<bool>();
    return e;
}

inline CatalogEntry load_entry(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open " + path);
    nlohmann::json j;
    try {
        in >> j;
    } catch (const std::exception& ex) {
        throw ParseError(std::string("invalid JSON: ") + ex.what());
    }
    return entry_from_json(j);
}

} // namespace hkt

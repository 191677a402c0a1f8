/**
 * @file linalg.hpp
 * @brief Dense exact linear algebra over a scalar field (dim <= 16).
 *
 * Square matrices, Gaussian elimination with exact pivoting, inverse, rank,
 * nullspace and the characteristic polynomial (Faddeev-LeVerrier).
 */
#pragma once

#include <cassert>
#include <stdexcept>
#include <vector>

#include "scalar.hpp"

namespace hkt {

template <ScalarField S>
using Vec = std::vector<S>;

template <ScalarField S>
class Mat {
public:
    Mat() : n_(0) {}
    explicit Mat(int n) : n_(n), a_(size_t(n) * n, S(0)) {}

    static Mat identity(int n) {
        Mat m(n);
        for (int i = 0; i < n; ++i) m(i, i) = S(1);
        return m;
    }

    int dim() const { return n_; }
    S& operator()(int i, int j) { return a_[size_t(i) * n_ + j]; }
    const S& operator()(int i, int j) const { return a_[size_t(i) * n_ + j]; }

    Mat operator+(const Mat& o) const {
        Mat r(n_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] + o.a_[i];
        return r;
    }
    Mat operator-(const Mat& o) const {
        Mat r(n_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = a_[i] - o.a_[i];
        return r;
    }
    Mat operator*(const Mat& o) const {
        Mat r(n_);
        for (int i = 0; i < n_; ++i)
            for (int k = 0; k < n_; ++k) {
                const S& v = (*this)(i, k);
                if (v.is_zero()) continue;
                for (int j = 0; j < n_; ++j) r(i, j) += v * o(k, j);
            }
        return r;
    }
    Mat scaled(const S& c) const {
        Mat r(n_);
        for (size_t i = 0; i < a_.size(); ++i) r.a_[i] = c * a_[i];
        return r;
    }
    Vec<S> apply(const Vec<S>& v) const {
        Vec<S> r(n_, S(0));
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j)
                if (!(*this)(i, j).is_zero() && !v[j].is_zero()) r[i] += (*this)(i, j) * v[j];
        return r;
    }
    /// Column j as a vector (the image of the j-th basis vector).
    Vec<S> col(int j) const {
        Vec<S> r(n_);
        for (int i = 0; i < n_; ++i) r[i] = (*this)(i, j);
        return r;
    }

    bool operator==(const Mat& o) const {
        for (size_t i = 0; i < a_.size(); ++i)
            if (!(a_[i] == o.a_[i])) return false;
        return true;
    }
    bool is_zero() const {
        for (const auto& x : a_)
            if (!x.is_zero()) return false;
        return true;
    }
    Mat transposed() const {
        Mat r(n_);
        for (int i = 0; i < n_; ++i)
            for (int j = 0; j < n_; ++j) r(j, i) = (*this)(i, j);
        return r;
    }
    S trace() const {
        S t(0);
        for (int i = 0; i < n_; ++i) t += (*this)(i, i);
        return t;
    }
    const std::vector<S>& flat() const { return a_; }

private:
    int n_;
    std::vector<S> a_;
};

struct SingularMatrix : std::runtime_error {
    SingularMatrix() : std::runtime_error("singular matrix") {}
};

template <ScalarField S>
Mat<S> inverse(const Mat<S>& m) {
    int n = m.dim();
    Mat<S> a = m, inv = Mat<S>::identity(n);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) throw SingularMatrix{};
        if (piv != col)
            for (int j = 0; j < n; ++j) {
                std::swap(a(col, j), a(piv, j));
                std::swap(inv(col, j), inv(piv, j));
            }
        S p = S(1) / a(col, col);
        for (int j = 0; j < n; ++j) { a(col, j) = a(col, j) * p; inv(col, j) = inv(col, j) * p; }
        for (int r = 0; r < n; ++r) {
            if (r == col || a(r, col).is_zero()) continue;
            S f = a(r, col);
            for (int j = 0; j < n; ++j) {
                a(r, j) -= f * a(col, j);
                inv(r, j) -= f * inv(col, j);
            }
        }
    }
    return inv;
}

/// Row-reduce in place; returns pivot columns.
template <ScalarField S>
std::vector<int> rref(std::vector<Vec<S>>& rows) {
    std::vector<int> pivots;
    if (rows.empty()) return pivots;
    size_t ncols = rows[0].size(), r = 0;
    for (size_t c = 0; c < ncols && r < rows.size(); ++c) {
        size_t piv = r;
        while (piv < rows.size() && rows[piv][c].is_zero()) ++piv;
        if (piv == rows.size()) continue;
        std::swap(rows[r], rows[piv]);
        S p = S(1) / rows[r][c];
        for (auto& x : rows[r]) x = x * p;
        for (size_t i = 0; i < rows.size(); ++i) {
            if (i == r || rows[i][c].is_zero()) continue;
            S f = rows[i][c];
            for (size_t j = 0; j < ncols; ++j) rows[i][j] -= f * rows[r][j];
        }
        pivots.push_back(int(c));
        ++r;
    }
    rows.resize(pivots.size());
    return pivots;
}

template <ScalarField S>
int rank(std::vector<Vec<S>> rows) {
    return int(rref(rows).size());
}

/// Basis of the solution space of A v = 0 (A given as rows).
template <ScalarField S>
std::vector<Vec<S>> nullspace(std::vector<Vec<S>> rows, int ncols) {
    auto pivots = rref(rows);
    std::vector<bool> ispiv(ncols, false);
    for (int c : pivots) ispiv[c] = true;
    std::vector<Vec<S>> basis;
    for (int c = 0; c < ncols; ++c) {
        if (ispiv[c]) continue;
        Vec<S> v(ncols, S(0));
        v[c] = S(1);
        for (size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -rows[r][c];
        basis.push_back(std::move(v));
    }
    return basis;
}

template <ScalarField S>
S det(Mat<S> a) {
    int n = a.dim();
    S d(1);
    for (int col = 0; col < n; ++col) {
        int piv = -1;
        for (int r = col; r < n; ++r)
            if (!a(r, col).is_zero()) { piv = r; break; }
        if (piv < 0) return S(0);
        if (piv != col) {
            for (int j = 0; j < n; ++j) std::swap(a(col, j), a(piv, j));
            d = -d;
        }
        d = d * a(col, col);
        S p = S(1) / a(col, col);
        for (int r = col + 1; r < n; ++r) {
            if (a(r, col).is_zero()) continue;
            S f = a(r, col) * p;
            for (int j = col; j < n; ++j) a(r, j) -= f * a(col, j);
        }
    }
    return d;
}

/// Coefficients of det(t I - M), highest power first (monic).
template <ScalarField S>
std::vector<S> char_poly(const Mat<S>& m) {
    int n = m.dim();
    std::vector<S> c(size_t(n) + 1, S(0));
    c[0] = S(1);
    Mat<S> mk = Mat<S>::identity(n);
    for (int k = 1; k <= n; ++k) {
        mk = m * mk;
        S ck = -(mk.trace()) / S(k);
        c[size_t(k)] = ck;
        for (int i = 0; i < n; ++i) mk(i, i) += ck;
    }
    return c;
}

template <ScalarField S>
bool positive_definite(const Mat<S>& g) {
    int n = g.dim();
    for (int k = 1; k <= n; ++k) {
        Mat<S> minor(k);
        for (int i = 0; i < k; ++i)
            for (int j = 0; j < k; ++j) minor(i, j) = g(i, j);
        if (det(minor).sign() <= 0) return false;
    }
    return true;
}

template <class S>
Mat<S> mat_cast(const Mat<Exact>& m) {
    Mat<S> r(m.dim());
    for (int i = 0; i < m.dim(); ++i)
        for (int j = 0; j < m.dim(); ++j) r(i, j) = scalar_cast<S>(m(i, j));
    return r;
}

} // namespace hkt

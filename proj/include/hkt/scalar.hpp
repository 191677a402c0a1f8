/**
 * @file scalar.hpp
 * @brief Scalar fields for the invariant-geometry engine.
 *
 * Two interchangeable coefficient fields drive every computation:
 *
 *  - Exact: elements a + b*sqrt(3) with a, b arbitrary-precision rationals.
 *    Equality is literal.  sqrt(3) is the single irrationality needed by the
 *    built-in catalog (the su(3) structure constants in an orthonormal
 *    basis), so the quadratic extension Q(sqrt 3) closes every computation.
 *
 *  - Floating: double with a global comparison tolerance,
 *    |x - y| <= tol * max(1, |x|, |y|).
 *
 * All higher layers are templates over the scalar type.
 */
#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <optional>
#include <ostream>
#include <stdexcept>
#include <string>
#include <cmath>
#include <cstdint>

namespace hkt {

using Rational = boost::multiprecision::mpq_rational;
using BigInt = boost::multiprecision::mpz_int;

/// Exact element of Q(sqrt 3).
class Exact {
public:
    Exact() : a_(0), b_(0) {}
    Exact(long v) : a_(v), b_(0) {}        // NOLINT: implicit by design
    Exact(const Rational& a) : a_(a), b_(0) {}
    Exact(Rational a, Rational b) : a_(std::move(a)), b_(std::move(b)) {}

    static Exact fraction(long p, long q) { return Exact(Rational(p, q)); }
    static Exact sqrt3() { return Exact(Rational(0), Rational(1)); }

    const Rational& rat() const { return a_; }
    const Rational& irr() const { return b_; }

    bool is_zero() const { return a_ == 0 && b_ == 0; }
    bool is_rational() const { return b_ == 0; }

    Exact operator-() const { return Exact(-a_, -b_); }
    Exact operator+(const Exact& o) const { return Exact(a_ + o.a_, b_ + o.b_); }
    Exact operator-(const Exact& o) const { return Exact(a_ - o.a_, b_ - o.b_); }
    Exact operator*(const Exact& o) const {
        return Exact(a_ * o.a_ + 3 * b_ * o.b_, a_ * o.b_ + b_ * o.a_);
    }
    Exact operator/(const Exact& o) const {
        Rational d = o.a_ * o.a_ - 3 * o.b_ * o.b_;
        if (d == 0) {
            if (o.is_zero()) throw std::domain_error("division by zero scalar");
            // a^2 = 3 b^2 with rationals forces a = b = 0
            throw std::domain_error("inconsistent field element");
        }
        Exact conj(o.a_ / d, -o.b_ / d);
        return *this * conj;
    }
    Exact& operator+=(const Exact& o) { a_ += o.a_; b_ += o.b_; return *this; }
    Exact& operator-=(const Exact& o) { a_ -= o.a_; b_ -= o.b_; return *this; }
    Exact& operator*=(const Exact& o) { *this = *this * o; return *this; }

    bool operator==(const Exact& o) const { return a_ == o.a_ && b_ == o.b_; }
    bool operator!=(const Exact& o) const { return !(*this == o); }

    /// Sign of a + b*sqrt(3).
    int sign() const {
        int sa = a_.sign(), sb = b_.sign();
        if (sa == 0 && sb == 0) return 0;
        if (sa >= 0 && sb >= 0) return 1;
        if (sa <= 0 && sb <= 0) return -1;
        bool a_wins = a_ * a_ > 3 * b_ * b_;
        if (sa > 0) return a_wins ? 1 : -1;
        return a_wins ? -1 : 1;
    }

    Exact abs() const { return sign() >= 0 ? *this : -*this; }

    double to_double() const {
        return a_.convert_to<double>() + b_.convert_to<double>() * 1.7320508075688772;
    }

    /// Exact square root inside Q(sqrt 3), when one exists.
    std::optional<Exact> try_sqrt() const;

    std::string str() const;

private:
    Rational a_, b_;
};

namespace detail {

inline std::optional<Rational> rational_sqrt(const Rational& r) {
    if (r < 0) return std::nullopt;
    if (r == 0) return Rational(0);
    BigInt num = boost::multiprecision::numerator(r);
    BigInt den = boost::multiprecision::denominator(r);
    BigInt sn = boost::multiprecision::sqrt(num);
    BigInt sd = boost::multiprecision::sqrt(den);
    if (sn * sn != num || sd * sd != den) return std::nullopt;
    return Rational(sn, sd);
}

} // namespace detail

inline std::optional<Exact> Exact::try_sqrt() const {
    if (sign() < 0) return std::nullopt;
    if (b_ == 0) {
        if (auto r = detail::rational_sqrt(a_)) return Exact(*r);
        if (auto r = detail::rational_sqrt(a_ / 3)) return Exact(Rational(0), *r);
        return std::nullopt;
    }
    // (c + d sqrt3)^2 = c^2 + 3d^2 + 2cd sqrt3
    auto disc = detail::rational_sqrt(a_ * a_ - 3 * b_ * b_);
    if (!disc) return std::nullopt;
    for (int s : {1, -1}) {
        Rational c2 = (a_ + Rational(s) * (*disc)) / 2;
        auto c = detail::rational_sqrt(c2);
        if (!c || *c == 0) continue;
        Rational d = b_ / (2 * (*c));
        Exact cand(*c, d);
        if (cand * cand == *this && cand.sign() >= 0) return cand;
        cand = -cand;
        if (cand * cand == *this && cand.sign() >= 0) return cand;
    }
    return std::nullopt;
}

inline std::string Exact::str() const {
    auto rat_str = [](const Rational& r) {
        std::string s = boost::multiprecision::numerator(r).str();
        if (boost::multiprecision::denominator(r) != 1)
            s += "/" + boost::multiprecision::denominator(r).str();
        return s;
    };
    if (b_ == 0) return rat_str(a_);
    std::string irr = rat_str(b_) + "*rt3";
    if (b_ == 1) irr = "rt3";
    if (b_ == -1) irr = "-rt3";
    if (a_ == 0) return irr;
    if (b_ > 0) return rat_str(a_) + "+" + irr;
    return rat_str(a_) + irr;
}

inline std::ostream& operator<<(std::ostream& os, const Exact& x) { return os << x.str(); }

/// Floating scalar with a process-global comparison tolerance.
class Float {
public:
    Float() : v_(0) {}
    Float(int v) : v_(double(v)) {}        // NOLINT: implicit by design
    Float(long v) : v_(double(v)) {}       // NOLINT: implicit by design
    Float(double v) : v_(v) {}
    explicit Float(const Exact& e) : v_(e.to_double()) {}

    static double& tolerance() {
        static double tol = 1e-9;
        return tol;
    }

    double value() const { return v_; }

    bool is_zero() const { return std::fabs(v_) <= tolerance() * std::max(1.0, std::fabs(v_)); }

    Float operator-() const { return Float(-v_); }
    Float operator+(const Float& o) const { return Float(v_ + o.v_); }
    Float operator-(const Float& o) const { return Float(v_ - o.v_); }
    Float operator*(const Float& o) const { return Float(v_ * o.v_); }
    Float operator/(const Float& o) const { return Float(v_ / o.v_); }
    Float& operator+=(const Float& o) { v_ += o.v_; return *this; }
    Float& operator-=(const Float& o) { v_ -= o.v_; return *this; }
    Float& operator*=(const Float& o) { v_ *= o.v_; return *this; }

    bool operator==(const Float& o) const {
        return std::fabs(v_ - o.v_) <= tolerance() * std::max({1.0, std::fabs(v_), std::fabs(o.v_)});
    }
    bool operator!=(const Float& o) const { return !(*this == o); }

    int sign() const { return is_zero() ? 0 : (v_ > 0 ? 1 : -1); }
    Float abs() const { return Float(std::fabs(v_)); }
    double to_double() const { return v_; }
    std::optional<Float> try_sqrt() const {
        if (v_ < 0 && !is_zero()) return std::nullopt;
        return Float(std::sqrt(std::max(0.0, v_)));
    }
    std::string str() const { return std::to_string(v_); }

private:
    double v_;
};

inline std::ostream& operator<<(std::ostream& os, const Float& x) { return os << x.value(); }

template <class S>
concept ScalarField = requires(S a, S b) {
    { a + b } -> std::convertible_to<S>;
    { a - b } -> std::convertible_to<S>;
    { a * b } -> std::convertible_to<S>;
    { a / b } -> std::convertible_to<S>;
    { -a } -> std::convertible_to<S>;
    { a == b } -> std::convertible_to<bool>;
    { a.is_zero() } -> std::convertible_to<bool>;
    { a.sign() } -> std::convertible_to<int>;
    { a.str() } -> std::convertible_to<std::string>;
    S(1);
};

/// Convert an exact scalar into the target field.
template <class S>
S scalar_cast(const Exact& e);

template <> inline Exact scalar_cast<Exact>(const Exact& e) { return e; }
template <> inline Float scalar_cast<Float>(const Exact& e) { return Float(e); }

} // namespace hkt

#include <catch2/catch_amalgamated.hpp>

#include "hkt/linalg.hpp"

using namespace hkt;

TEST_CASE("exact field arithmetic in Q(sqrt 3)") {
    Exact a = Exact::fraction(1, 2) + Exact::sqrt3();
    Exact b = Exact::fraction(-3, 4) + Exact::sqrt3() * Exact::fraction(2, 3);
    REQUIRE((a + b) - b == a);
    REQUIRE((a * b) / b == a);
    REQUIRE((Exact::sqrt3() * Exact::sqrt3()) == Exact(3));
    REQUIRE(a.sign() == 1);
    REQUIRE((Exact::fraction(7, 4) - Exact::sqrt3()).sign() == 1);   // 1.75 > 1.732...
    REQUIRE((Exact::fraction(173, 100) - Exact::sqrt3()).sign() == -1);
    REQUIRE(Exact(0).is_zero());
    REQUIRE_THROWS_AS(a / Exact(0), std::domain_error);
}

TEST_CASE("exact square roots") {
    REQUIRE(Exact::fraction(9, 4).try_sqrt().value() == Exact::fraction(3, 2));
    REQUIRE(Exact(3).try_sqrt().value() == Exact::sqrt3());
    REQUIRE(Exact(12).try_sqrt().value() == Exact(2) * Exact::sqrt3());
    REQUIRE_FALSE(Exact(2).try_sqrt().has_value());
    // (1 + sqrt3)^2 = 4 + 2 sqrt3
    Exact x = Exact(4) + Exact(2) * Exact::sqrt3();
    REQUIRE(x.try_sqrt().value() == Exact(1) + Exact::sqrt3());
    REQUIRE_FALSE((-Exact(1)).try_sqrt().has_value());
}

TEST_CASE("scalar serialization strings") {
    REQUIRE(Exact::fraction(-3, 2).str() == "-3/2");
    REQUIRE((Exact::fraction(1, 2) * Exact::sqrt3()).str() == "1/2*rt3");
    REQUIRE((Exact(2) - Exact::sqrt3()).str() == "2-rt3");
    REQUIRE((Exact::fraction(1, 2) + Exact::fraction(1, 2) * Exact::sqrt3()).str() == "1/2+1/2*rt3");
}

TEST_CASE("float scalar tolerance") {
    double saved = Float::tolerance();
    Float::tolerance() = 1e-9;
    Float x(1.0), y(1.0 + 1e-12);
    REQUIRE(x == y);
    REQUIRE(Float(1e-12).is_zero());
    REQUIRE_FALSE(Float(1e-3).is_zero());
    Float::tolerance() = saved;
}

TEST_CASE("matrix inverse and determinant, exact") {
    Mat<Exact> m(3);
    m(0, 0) = 2; m(0, 1) = 1; m(0, 2) = 0;
    m(1, 0) = 1; m(1, 1) = 3; m(1, 2) = 1;
    m(2, 0) = 0; m(2, 1) = 1; m(2, 2) = 1;
    Mat<Exact> mi = inverse(m);
    REQUIRE(m * mi == Mat<Exact>::identity(3));
    REQUIRE(det(m) == Exact(3));
    Mat<Exact> sing(2);
    sing(0, 0) = 1; sing(0, 1) = 2; sing(1, 0) = 2; sing(1, 1) = 4;
    REQUIRE_THROWS_AS(inverse(sing), SingularMatrix);
    REQUIRE(det(sing).is_zero());
}

TEST_CASE("rank and nullspace") {
    std::vector<Vec<Exact>> rows = {{Exact(1), Exact(2), Exact(3)},
                                    {Exact(2), Exact(4), Exact(6)},
                                    {Exact(0), Exact(1), Exact(1)}};
    REQUIRE(rank(rows) == 2);
    auto ns = nullspace(rows, 3);
    REQUIRE(ns.size() == 1);
    // the kernel vector satisfies all equations
    for (const auto& r : rows) {
        Exact dot(0);
        for (int i = 0; i < 3; ++i) dot += r[size_t(i)] * ns[0][size_t(i)];
        REQUIRE(dot.is_zero());
    }
}

TEST_CASE("characteristic polynomial of a skew matrix is even") {
    Mat<Exact> m(4);
    m(0, 1) = 2; m(1, 0) = -2;
    m(2, 3) = -5; m(3, 2) = 5;
    auto cp = char_poly(m);
    REQUIRE(cp.size() == 5);
    REQUIRE(cp[0] == Exact(1));
    REQUIRE(cp[1].is_zero());
    REQUIRE(cp[3].is_zero());
    REQUIRE(cp[2] == Exact(29));        // 4 + 25
    REQUIRE(cp[4] == Exact(100));       // det
}

TEST_CASE("positive definiteness by leading minors") {
    Mat<Exact> g = Mat<Exact>::identity(3);
    REQUIRE(positive_definite(g));
    g(0, 0) = Exact(0);
    REQUIRE_FALSE(positive_definite(g));
    Mat<Exact> h(2);
    h(0, 0) = 2; h(0, 1) = 3; h(1, 0) = 3; h(1, 1) = 4;  // det < 0
    REQUIRE_FALSE(positive_definite(h));
}

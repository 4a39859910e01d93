#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>

#include "oracles.hpp"
#include "turnover/trig.hpp"

using namespace turnover;
using oracle::pi;

TEST_CASE("signatures are normalized and validated") {
    const TurnoverSignature s(5, 2, 4);
    CHECK(s.p() == 2);
    CHECK(s.q() == 4);
    CHECK(s.r() == 5);
    CHECK(s.to_string() == "(2,4,5)");
    CHECK(s == TurnoverSignature(4, 5, 2));
    CHECK(TurnoverSignature(7, 7, 3).multiplicity(7) == 2);
    CHECK(TurnoverSignature(7, 7, 3).multiplicity(4) == 0);
    CHECK_THROWS_AS(TurnoverSignature(1, 3, 4), DomainError);
    CHECK_THROWS_AS(TurnoverSignature(2, 3, TurnoverSignature::kMaxOrder + 1), DomainError);
}

TEST_CASE("euler characteristic is exact") {
    CHECK(TurnoverSignature(2, 4, 5).euler_characteristic() == Rational::make(-1, 20));
    CHECK(TurnoverSignature(3, 3, 3).euler_characteristic() == Rational::make(0, 1));
    CHECK(TurnoverSignature(2, 3, 5).euler_characteristic() == Rational::make(1, 30));
    const auto big = TurnoverSignature(999'983, 999'979, 1'000'000).euler_characteristic();
    CHECK(big.sign() == -1);
    CHECK(big.value() == doctest::Approx(-1.0 + 1.0 / 999'983 + 1.0 / 999'979 + 1e-6).epsilon(1e-15));
    CHECK(Rational::make(2, -4) == Rational::make(-1, 2));
    CHECK(Rational::make(1, 3) < Rational::make(1, 2));
    CHECK_THROWS_AS(Rational::make(1, 0), DomainError);
}

TEST_CASE("classification") {
    CHECK(classify(TurnoverSignature(2, 3, 5)) == GeometryClass::Spherical);
    CHECK(classify(TurnoverSignature(2, 2, 17)) == GeometryClass::Spherical);
    CHECK(classify(TurnoverSignature(3, 3, 3)) == GeometryClass::Euclidean);
    CHECK(classify(TurnoverSignature(2, 3, 6)) == GeometryClass::Euclidean);
    CHECK(classify(TurnoverSignature(2, 4, 4)) == GeometryClass::Euclidean);
    CHECK(classify(TurnoverSignature(2, 4, 5)) == GeometryClass::Hyperbolic);
    CHECK(classify(TurnoverSignature(2, 3, 7)) == GeometryClass::Hyperbolic);
    CHECK(to_string(GeometryClass::Euclidean) == "euclidean");
}

TEST_CASE("turnover areas") {
    CHECK(turnover_area(TurnoverSignature(2, 4, 5)) == doctest::Approx(pi / 10).epsilon(1e-14));
    CHECK(turnover_area(TurnoverSignature(3, 3, 5)) == doctest::Approx(4 * pi / 15).epsilon(1e-14));
    CHECK(turnover_area(TurnoverSignature(2, 4, 6)) == doctest::Approx(pi / 6).epsilon(1e-14));
    CHECK_THROWS_AS(turnover_area(TurnoverSignature(2, 3, 6)), DomainError);
    CHECK_THROWS_AS(turnover_area(TurnoverSignature(2, 3, 4)), DomainError);
}

TEST_CASE("(2,4,5) triangle sides") {
    const TriangleGeometry g = triangle_geometry(TurnoverSignature(2, 4, 5));
    // sides[i] is opposite angles[i] = pi/2, pi/4, pi/5
    CHECK(g.sides[0] == doctest::Approx(std::acosh(1.0 / std::tan(pi / 5))).epsilon(1e-13));
    CHECK(g.sides[0] == doctest::Approx(0.842482).epsilon(1e-6));
    CHECK(g.sides[2] == doctest::Approx(std::acosh(std::sqrt(2.0) * std::cos(pi / 5))).epsilon(1e-13));
    CHECK(std::fabs(g.sides[2] - 0.530639) < 1e-5);
    CHECK(g.diameter == g.sides[0]);
    CHECK(g.area_turnover == doctest::Approx(2 * g.area_triangle).epsilon(1e-15));
}

TEST_CASE("equilateral turnovers have equal sides") {
    const TriangleGeometry g = triangle_geometry(TurnoverSignature(7, 7, 7));
    CHECK(g.sides[0] == g.sides[1]);
    CHECK(g.sides[1] == g.sides[2]);
}

TEST_CASE("triangle geometry properties for orders up to 50") {
    int checked = 0;
    for (int p = 2; p <= 50; ++p) {
        for (int q = p; q <= 50; ++q) {
            for (int r = q; r <= 50; r += (r < 12 ? 1 : 7)) {
                const TurnoverSignature sig(p, q, r);
                const bool hyperbolic = classify(sig) == GeometryClass::Hyperbolic;
                CHECK(hyperbolic == (pi / p + pi / q + pi / r < pi - 1e-15));
                if (!hyperbolic) continue;
                const TriangleGeometry g = triangle_geometry(sig);
                CHECK(std::fabs(g.area_turnover + 2 * pi * g.euler_char) < 1e-12);
                const auto& s = g.sides;
                CHECK(s[0] < s[1] + s[2]);
                CHECK(s[1] < s[0] + s[2]);
                CHECK(s[2] < s[0] + s[1]);
                CHECK(g.diameter == *std::max_element(s.begin(), s.end()));
                // Independent: area from the sides via the law of cosines.
                CHECK(std::fabs(oracle::triangle_area_from_sides(s[0], s[1], s[2]) - g.area_triangle) < 1e-8);
                ++checked;
            }
        }
    }
    CHECK(checked > 1000);
}

TEST_CASE("triangle geometry is permutation invariant") {
    const auto a = triangle_geometry(TurnoverSignature(3, 5, 8));
    const auto b = triangle_geometry(TurnoverSignature(8, 3, 5));
    CHECK(a.sides == b.sides);
}

TEST_CASE("lambert leg bound") {
    CHECK(lambert_leg_bound(std::acosh(1.0 / std::tan(pi / 5))) == doctest::Approx(0.921365).epsilon(1e-6));
    CHECK(lambert_leg_bound(10.0) < 1e-4);
    CHECK(lambert_leg_bound(std::asinh(1.0)) == doctest::Approx(std::asinh(1.0)).epsilon(1e-15));
    double previous = lambert_leg_bound(0.1);
    for (double d = 0.11; d <= 5.0; d += 0.01) {
        const double v = lambert_leg_bound(d);
        CHECK(v < previous);
        previous = v;
    }
    CHECK_THROWS_AS(lambert_leg_bound(0.0), DomainError);
}

TEST_CASE("all-right hexagon side") {
    const double c1 = std::cosh(1.0);
    const double s1 = std::sinh(1.0);
    const double cosh_d = (c1 * c1 + c1) / (s1 * s1);
    CHECK(cosh_d == doctest::Approx(2.8413471884).epsilon(1e-10));
    CHECK(hexagon_side(1.0, 1.0) == doctest::Approx(std::acosh(cosh_d)).epsilon(1e-13));
    CHECK(hexagon_side(1.0, 1.0) == doctest::Approx(1.7049128324).epsilon(1e-10));
    for (double l = 0.2; l < 4.0; l += 0.37) {
        for (double lp = l; lp < 6.0; lp += 0.53) {
            const double bound = std::cosh(l) / (std::cosh(l) - 1.0);
            CHECK(std::cosh(hexagon_side(l, lp)) >= bound * (1.0 - 1e-14));
        }
    }
    CHECK(hexagon_side(40.0, 1.0) < 1e-8);
    CHECK_THROWS_AS(hexagon_side(0.0, 1.0), DomainError);
}

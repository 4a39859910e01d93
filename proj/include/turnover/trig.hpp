#pragma once

// Hyperbolic trigonometry of (p,q,r) triangles and turnovers, plus the
// Lambert-quadrilateral and all-right-hexagon laws.

#include <array>
#include <compare>
#include <cstdint>
#include <string>

#include "turnover/numerics.hpp"

namespace turnover {

/// Wide integer for exact cross-multiplication of fractions.
__extension__ typedef __int128 WideInt;

/// Exact rational number with positive denominator, kept reduced.
struct Rational {
    std::int64_t num = 0;
    std::int64_t den = 1;

    static Rational make(std::int64_t num, std::int64_t den);
    [[nodiscard]] double value() const { return static_cast<double>(num) / static_cast<double>(den); }
    [[nodiscard]] int sign() const { return (num > 0) - (num < 0); }

    friend std::strong_ordering operator<=>(const Rational& a, const Rational& b);
    friend bool operator==(const Rational& a, const Rational& b) = default;
};

/// Ordered triple of cone orders 2 <= p <= q <= r; normalized on construction.
class TurnoverSignature {
public:
    static constexpr int kMaxOrder = 1'000'000;

    /// Sorts the orders.  Throws DomainError unless each lies in [2, kMaxOrder].
    TurnoverSignature(int a, int b, int c);

    [[nodiscard]] int p() const { return orders_[0]; }
    [[nodiscard]] int q() const { return orders_[1]; }
    [[nodiscard]] int r() const { return orders_[2]; }
    [[nodiscard]] const std::array<int, 3>& orders() const { return orders_; }

    /// Number of cone points of the given order (0 to 3).
    [[nodiscard]] int multiplicity(int order) const;

    /// 1/p + 1/q + 1/r - 1, exactly.
    [[nodiscard]] Rational euler_characteristic() const;

    [[nodiscard]] std::string to_string() const;

    friend auto operator<=>(const TurnoverSignature&, const TurnoverSignature&) = default;

private:
    std::array<int, 3> orders_;
};

enum class GeometryClass { Spherical, Euclidean, Hyperbolic };

[[nodiscard]] std::string to_string(GeometryClass g);

struct TriangleGeometry {
    TurnoverSignature signature;
    std::array<double, 3> angles;  ///< pi/p, pi/q, pi/r
    std::array<double, 3> sides;   ///< sides[i] is opposite angles[i]
    double area_triangle;
    double area_turnover;
    double euler_char;
    double diameter;  ///< longest side
};

GeometryClass classify(const TurnoverSignature& sig);

/// 2 pi (1 - 1/p - 1/q - 1/r).  Throws DomainError for non-hyperbolic signatures.
double turnover_area(const TurnoverSignature& sig);

/// Side lengths from the angle form of the hyperbolic law of cosines.
/// Throws DomainError for non-hyperbolic signatures.
TriangleGeometry triangle_geometry(const TurnoverSignature& sig);

/// asinh(1 / sinh d): strict lower bound for the free leg of an almost-right
/// quadrilateral whose opposite side has length d.
double lambert_leg_bound(double d);

/// Side d of an all-right hexagon opposite-adjacent to alternate sides l, l':
/// cosh d = (cosh^2 l + cosh l') / sinh^2 l.
double hexagon_side(double l, double l_prime);

}  // namespace turnover

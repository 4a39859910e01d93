#include "turnover/trig.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace turnover {

Rational Rational::make(std::int64_t num, std::int64_t den) {
    if (den == 0) throw DomainError("rational with zero denominator");
    if (den < 0) {
        num = -num;
        den = -den;
    }
    const std::int64_t g = std::gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const WideInt lhs = static_cast<WideInt>(a.num) * b.den;
    const WideInt rhs = static_cast<WideInt>(b.num) * a.den;
    if (lhs < rhs) return std::strong_ordering::less;
    if (lhs > rhs) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
}

TurnoverSignature::TurnoverSignature(int a, int b, int c) : orders_{a, b, c} {
    for (int n : orders_) {
        if (n < 2 || n > kMaxOrder)
            throw DomainError("cone order " + std::to_string(n) + " outside [2, " +
                              std::to_string(kMaxOrder) + "]");
    }
    std::sort(orders_.begin(), orders_.end());
}

int TurnoverSignature::multiplicity(int order) const {
    return static_cast<int>(std::count(orders_.begin(), orders_.end(), order));
}

Rational TurnoverSignature::euler_characteristic() const {
    const std::int64_t p = orders_[0];
    const std::int64_t q = orders_[1];
    const std::int64_t r = orders_[2];
    return Rational::make(q * r + p * r + p * q - p * q * r, p * q * r);
}

std::string TurnoverSignature::to_string() const {
    return "(" + std::to_string(orders_[0]) + "," + std::to_string(orders_[1]) + "," +
           std::to_string(orders_[2]) + ")";
}

std::string to_string(GeometryClass g) {
    switch (g) {
        case GeometryClass::Spherical: return "spherical";
        case GeometryClass::Euclidean: return "euclidean";
        case GeometryClass::Hyperbolic: return "hyperbolic";
    }
    return "unknown";
}

GeometryClass classify(const TurnoverSignature& sig) {
    switch (sig.euler_characteristic().sign()) {
        case -1: return GeometryClass::Hyperbolic;
        case 0: return GeometryClass::Euclidean;
        default: return GeometryClass::Spherical;
    }
}

namespace {

void require_hyperbolic(const TurnoverSignature& sig, const char* what) {
    if (classify(sig) != GeometryClass::Hyperbolic)
        throw DomainError(std::string(what) + ": " + sig.to_string() + " is " +
                          to_string(classify(sig)) + ", not hyperbolic");
}

}  // namespace

double turnover_area(const TurnoverSignature& sig) {
    require_hyperbolic(sig, "turnover_area");
    return -2.0 * kPi * sig.euler_characteristic().value();
}

TriangleGeometry triangle_geometry(const TurnoverSignature& sig) {
    require_hyperbolic(sig, "triangle_geometry");
    std::array<double, 3> angles{};
    for (int i = 0; i < 3; ++i) angles[i] = kPi / sig.orders()[i];

    std::array<double, 3> sides{};
    for (int i = 0; i < 3; ++i) {
        const double a = angles[(i + 1) % 3];
        const double b = angles[(i + 2) % 3];
        const double cosh_side = (std::cos(angles[i]) + std::cos(a) * std::cos(b)) /
                                 (std::sin(a) * std::sin(b));
        sides[i] = std::acosh(cosh_side);
    }

    const double area_turnover = turnover_area(sig);
    return TriangleGeometry{sig,
                            angles,
                            sides,
                            0.5 * area_turnover,
                            area_turnover,
                            sig.euler_characteristic().value(),
                            *std::max_element(sides.begin(), sides.end())};
}

double lambert_leg_bound(double d) {
    if (!(d > 0.0)) throw DomainError("lambert_leg_bound: length must be positive");
    return std::asinh(1.0 / std::sinh(d));
}

double hexagon_side(double l, double l_prime) {
    if (!(l > 0.0) || !(l_prime > 0.0)) throw DomainError("hexagon_side: lengths must be positive");
    // cosh d - 1 = (1 + cosh l') / sinh^2 l, evaluated through sinh(d/2).
    const double sh = std::sinh(l);
    const double excess = (1.0 + std::cosh(l_prime)) / (sh * sh);
    return 2.0 * std::asinh(std::sqrt(0.5 * excess));
}

}  // namespace turnover

#include "turnover/simplices.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace turnover {

namespace {

constexpr double kThirdPi = kPi / 3.0;

void require_simplex_angle(double theta, const char* who) {
    if (!(theta >= 0.0 && theta < kThirdPi))
        throw DomainError(std::string(who) + ": theta must lie in [0, pi/3)");
}

}  // namespace

double edge_from_angle(double theta) {
    require_simplex_angle(theta, "edge_from_angle");
    // 2 cos t - 1 = 4 sin((t + pi/3)/2) sin((pi/3 - t)/2)
    const double denom =
        4.0 * std::sin(0.5 * (theta + kThirdPi)) * std::sin(0.5 * (kThirdPi - theta));
    if (!(denom > 0.0)) throw DomainError("edge_from_angle: theta too close to pi/3");
    return 2.0 * std::asinh(std::sin(0.5 * theta) / std::sqrt(denom));
}

double angle_from_edge(double l) {
    if (!(l > 0.0)) throw DomainError("angle_from_edge: length must be positive");
    const double s = std::sinh(0.5 * l);
    const double inv_s2 = std::isinf(s) ? 0.0 : 1.0 / (s * s);
    return 2.0 * std::asin(1.0 / std::sqrt(4.0 + inv_s2));
}

double truncated_simplex_volume(double theta, const Tolerance& tol) {
    require_simplex_angle(theta, "truncated_simplex_volume");
    const double octahedron = 8.0 * lobachevsky(0.25 * kPi, tol);
    if (theta == 0.0) return octahedron;
    auto edge = [](double t) { return edge_from_angle(t); };
    constexpr double kNearPole = kThirdPi - 1e-4;
    if (theta <= kNearPole) return octahedron - 3.0 * integrate(edge, 0.0, theta, tol);
    // Near pi/3 the edge blows up logarithmically.  Past kNearPole integrate
    // by parts in the edge length, where the integrand is smooth and bounded:
    // int edge dt = theta L - theta0 L0 - int_{L0}^{L} angle_from_edge(l) dl.
    const double l0 = edge_from_angle(kNearPole);
    const double l1 = edge_from_angle(theta);
    const double tail = theta * l1 - kNearPole * l0 -
                        integrate([](double l) { return angle_from_edge(l); }, l0, l1, tol);
    return octahedron - 3.0 * (integrate(edge, 0.0, kNearPole, tol) + tail);
}

TruncatedSimplexSpec truncated_simplex(double theta, const Tolerance& tol) {
    const double volume = truncated_simplex_volume(theta, tol);
    return {theta, edge_from_angle(theta), volume, volume / (4.0 * (kPi - 3.0 * theta))};
}

double rho3_at_angle(double theta, const Tolerance& tol) { return truncated_simplex(theta, tol).rho3; }

double rho3(double r, const Tolerance& tol) {
    if (!(r > 0.0)) throw DomainError("rho3: half edge length must be positive");
    return rho3_at_angle(angle_from_edge(2.0 * r), tol);
}

namespace {

// pi * num / (3 * den) with the ratio formed before multiplying by pi, so
// that rational angles such as pi/4 come out exactly.
double third_pi_ratio(WideInt num, WideInt den) {
    return kPi * (static_cast<double>(num) / static_cast<double>(3 * den));
}

}  // namespace

ReturnPathCase make_return_path_case(const TurnoverSignature& boundary, int k, bool closed) {
    if (classify(boundary) != GeometryClass::Hyperbolic)
        throw DomainError("return path: boundary " + boundary.to_string() + " is not hyperbolic");
    if (k != 1 && boundary.multiplicity(k) == 0)
        throw DomainError("return path: k = " + std::to_string(k) + " is not a cone order of " +
                          boundary.to_string());
    ReturnPathCase c{boundary, k, closed, boundary.euler_characteristic(), 0.0, 0.0};
    c.theta = return_path_theta(c);
    c.min_length = edge_from_angle(c.theta);
    return c;
}

double return_path_theta(const ReturnPathCase& c) {
    if (c.chi.sign() >= 0) throw DomainError("return_path_theta: chi must be negative");
    if (c.k < 1) throw DomainError("return_path_theta: k must be positive");
    // chi = a/b with a < 0.
    const WideInt a = c.chi.num;
    const WideInt b = c.chi.den;
    if (c.closed) return third_pi_ratio(b, b - c.k * a);
    return third_pi_ratio(2 * b, 2 * b - c.k * a);
}

double return_path_theta(double chi, int k, bool closed) {
    if (!(chi < 0.0) || !std::isfinite(chi)) throw DomainError("return_path_theta: chi must be negative");
    if (k < 1) throw DomainError("return_path_theta: k must be positive");
    const double weight = closed ? k : 0.5 * k;
    return kPi / (3.0 * (1.0 - weight * chi));
}

double miyamoto_lower_bound(double boundary_area, double l, const Tolerance& tol) {
    if (!(boundary_area > 0.0) || !std::isfinite(boundary_area))
        throw DomainError("miyamoto_lower_bound: boundary area must be positive");
    return rho3(0.5 * l, tol) * boundary_area;
}

double length_from_disk_radius(double disk_r) {
    if (!(disk_r > 0.0)) throw DomainError("length_from_disk_radius: radius must be positive");
    // cosh 2r / (cosh 2r - 1) = 1 + 1 / (2 sinh^2 r)
    return 2.0 * std::asinh(1.0 / (2.0 * std::sinh(disk_r)));
}

}  // namespace turnover

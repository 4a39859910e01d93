#include "turnover/rooms.hpp"

#include <cmath>
#include <string>

namespace turnover {

PolarDisk PolarDisk::make(double radius) {
    if (!(radius > 0.0 && radius < 300.0)) throw DomainError("disk radius must lie in (0, 300)");
    return PolarDisk{radius};
}

double PolarDisk::area() const {
    const double s = std::sinh(0.5 * radius);
    return 4.0 * kPi * s * s;  // 2 pi (cosh R - 1)
}

namespace {

double klein_norm2(const KleinPoint& p) { return p.x * p.x + p.y * p.y; }

double cross(const KleinPoint& o, const KleinPoint& a, const KleinPoint& b) {
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x);
}

// Minkowski form -x0 y0 + x1 y1 + x2 y2 on unnormalized lifts (1, x, y).
double minkowski(const std::array<double, 3>& u, const std::array<double, 3>& v) {
    return -u[0] * v[0] + u[1] * v[1] + u[2] * v[2];
}

std::array<double, 3> lift(const KleinPoint& p) {
    const double scale = 1.0 / std::sqrt(1.0 - klein_norm2(p));
    return {scale, scale * p.x, scale * p.y};
}

}  // namespace

ProjectiveTriangle ProjectiveTriangle::make(KleinPoint a, KleinPoint b, KleinPoint c) {
    for (const KleinPoint& p : {a, b, c}) {
        if (!std::isfinite(p.x) || !std::isfinite(p.y) || !(klein_norm2(p) < 1.0))
            throw DomainError("projective triangle: vertices must lie strictly inside the unit disk");
    }
    const double scale = std::max({std::fabs(b.x - a.x), std::fabs(b.y - a.y),
                                   std::fabs(c.x - a.x), std::fabs(c.y - a.y)});
    if (!(std::fabs(cross(a, b, c)) > 1e-14 * std::max(scale * scale, 1e-300)))
        throw DomainError("projective triangle: vertices are collinear or coincide");
    return ProjectiveTriangle{{a, b, c}};
}

std::array<double, 3> ProjectiveTriangle::angles() const {
    std::array<std::array<double, 3>, 3> lifts{};
    for (int i = 0; i < 3; ++i) lifts[i] = lift(vertices[i]);
    std::array<double, 3> result{};
    for (int i = 0; i < 3; ++i) {
        const auto& apex = lifts[i];
        std::array<std::array<double, 3>, 2> tangents{};
        for (int j = 0; j < 2; ++j) {
            const auto& other = lifts[(i + 1 + j) % 3];
            // Component of `other` orthogonal to the apex (apex has norm -1).
            const double along = minkowski(apex, other);
            for (int c = 0; c < 3; ++c) tangents[j][c] = other[c] + along * apex[c];
        }
        const double cosine = minkowski(tangents[0], tangents[1]) /
                              std::sqrt(minkowski(tangents[0], tangents[0]) *
                                        minkowski(tangents[1], tangents[1]));
        result[i] = std::acos(std::clamp(cosine, -1.0, 1.0));
    }
    return result;
}

double ProjectiveTriangle::area() const {
    const auto a = angles();
    return kPi - (a[0] + a[1] + a[2]);
}

double FloorRegion::area() const {
    return std::visit([](const auto& s) { return s.area(); }, shape_);
}

CeilingFunction CeilingFunction::constant(double height) {
    if (!(height >= 0.0) || !std::isfinite(height))
        throw DomainError("ceiling height must be nonnegative and finite");
    return CeilingFunction([height](double, double) { return height; },
                           [](double, double) { return HeightGradient{0.0, 0.0}; });
}

CeilingFunction CeilingFunction::with_gradient(HeightField height, GradientField gradient) {
    if (!height || !gradient) throw DomainError("ceiling: height and gradient must be callable");
    return CeilingFunction(std::move(height), std::move(gradient));
}

CeilingFunction CeilingFunction::finite_difference(HeightField height) {
    if (!height) throw DomainError("ceiling: height must be callable");
    return CeilingFunction(std::move(height), nullptr);
}

double CeilingFunction::height(double r, double theta) const {
    const double g = height_(r, theta);
    if (!(g >= 0.0) || !std::isfinite(g))
        throw DomainError("ceiling height is negative or not finite at r = " + std::to_string(r));
    return g;
}

HeightGradient CeilingFunction::gradient(double r, double theta) const {
    if (gradient_) return gradient_(r, theta);
    constexpr double h = 1e-6;
    const double dr = r >= h ? (height(r + h, theta) - height(r - h, theta)) / (2.0 * h)
                             : (height(r + h, theta) - height(r, theta)) / h;
    const double dtheta = (height(r, theta + h) - height(r, theta - h)) / (2.0 * h);
    return {dr, dtheta};
}

namespace {

// Integrand given as a function of (r, theta) times the floor area element.
using AreaDensity = std::function<double(double r, double theta)>;

double integrate_over_floor(const FloorRegion& floor, const AreaDensity& density,
                            const Tolerance& tol) {
    if (const auto* disk = std::get_if<PolarDisk>(&floor.shape())) {
        return integrate_rectangle(
            [&density](double r, double theta) { return density(r, theta) * std::sinh(r); }, 0.0,
            disk->radius, 0.0, 2.0 * kPi, tol);
    }
    const auto& tri = std::get<ProjectiveTriangle>(floor.shape());
    const KleinPoint p0 = tri.vertices[0];
    const KleinPoint e1{tri.vertices[1].x - p0.x, tri.vertices[1].y - p0.y};
    const KleinPoint e2{tri.vertices[2].x - tri.vertices[1].x, tri.vertices[2].y - tri.vertices[1].y};
    const double jac = std::fabs(e1.x * e2.y - e1.y * e2.x);
    // Collapsed square: (u, v) -> p0 + u (e1 + v e2), Jacobian u * jac.
    return integrate_rectangle(
        [&](double u, double v) {
            const double x = p0.x + u * (e1.x + v * e2.x);
            const double y = p0.y + u * (e1.y + v * e2.y);
            const double rho2 = x * x + y * y;
            const double r = std::atanh(std::sqrt(rho2));
            const double theta = std::atan2(y, x);
            const double klein_density = 1.0 / ((1.0 - rho2) * std::sqrt(1.0 - rho2));
            return density(r, theta) * klein_density * u * jac;
        },
        0.0, 1.0, 0.0, 1.0, tol);
}

}  // namespace

double room_volume(const FloorRegion& floor, const CeilingFunction& g, const Tolerance& tol) {
    return integrate_over_floor(
        floor,
        [&g](double r, double theta) {
            const double h = g.height(r, theta);
            return 0.25 * (std::sinh(2.0 * h) + 2.0 * h);
        },
        tol);
}

double ceiling_area(const FloorRegion& floor, const CeilingFunction& g, const Tolerance& tol) {
    return integrate_over_floor(
        floor,
        [&g](double r, double theta) {
            const double h = g.height(r, theta);
            const HeightGradient grad = g.gradient(r, theta);
            const double c = std::cosh(h);
            const double s = std::sinh(r);
            const double angular = s > 0.0 ? grad.dtheta / s : 0.0;
            return c * std::sqrt(grad.dr * grad.dr + c * c + angular * angular);
        },
        tol);
}

double ceiling_area_lower_bound(const FloorRegion& floor, const CeilingFunction& g,
                                const Tolerance& tol) {
    return integrate_over_floor(
        floor,
        [&g](double r, double theta) {
            const double c = std::cosh(g.height(r, theta));
            return c * c;
        },
        tol);
}

double nice_height(double volume, double floor_area) {
    if (!(volume >= 0.0) || !std::isfinite(volume)) throw DomainError("nice_height: volume must be >= 0");
    if (!(floor_area > 0.0) || !std::isfinite(floor_area))
        throw DomainError("nice_height: floor area must be positive");
    const double target = 4.0 * volume / floor_area;
    if (target == 0.0) return 0.0;
    // sinh 2H + 2H >= sinh 2H, so the root is at most asinh(target)/2.
    const double hi = 0.5 * std::asinh(target);
    return find_root([target](double h) { return std::sinh(2.0 * h) + 2.0 * h - target; },
                     Bracket::make(0.0, hi), Tolerance{1e-15, 1e-15, 400});
}

double nice_ceiling_area(double volume, double floor_area) {
    const double h = nice_height(volume, floor_area);
    const double gap = 2.0 * volume - h * floor_area;
    return 0.5 * (floor_area + std::sqrt(floor_area * floor_area + 4.0 * gap * gap));
}

double constant_H() {
    static const double value = find_root([](double x) { return x * std::tanh(x) - 1.0; },
                                          Bracket::make(1.0, 2.0), Tolerance{1e-15, 1e-15, 400});
    return value;
}

double nice_room_ratio(double height) {
    if (!(height > 0.0)) throw DomainError("nice_room_ratio: height must be positive");
    // 2 (1 + cosh 2H) / (sinh 2H + 2H), divided through by cosh 2H.
    const double c = std::cosh(2.0 * height);
    return 2.0 * (1.0 + 1.0 / c) / (std::tanh(2.0 * height) + 2.0 * height / c);
}

RoomSpec measure_room(const FloorRegion& floor, const CeilingFunction& g, const Tolerance& tol) {
    const double area = floor.area();
    const double volume = room_volume(floor, g, tol);
    const double ceiling = ceiling_area(floor, g, tol);
    const double h = nice_height(volume, area);
    const double nice = nice_ceiling_area(volume, area);
    return RoomSpec{floor, g, volume, ceiling, h, nice, ceiling - nice,
                    0.5 * constant_H() * ceiling - volume};
}

RoomSpec isoperimetric_check(const FloorRegion& floor, const CeilingFunction& g,
                             const Tolerance& tol) {
    RoomSpec room = measure_room(floor, g, tol);
    if (room.margin < -tol.bound(room.nice_area))
        throw InequalityViolation("ceiling area " + std::to_string(room.ceiling_area) +
                                  " is below the constant-height area " +
                                  std::to_string(room.nice_area));
    if (room.volume_slack < -tol.bound(room.volume))
        throw InequalityViolation("room volume " + std::to_string(room.volume) +
                                  " exceeds H/2 times the ceiling area");
    return room;
}

CuspPrism cusp_prism_check(const ProjectiveTriangle& tri, const Tolerance& tol) {
    const KleinPoint p0 = tri.vertices[0];
    const KleinPoint e1{tri.vertices[1].x - p0.x, tri.vertices[1].y - p0.y};
    const KleinPoint e2{tri.vertices[2].x - tri.vertices[1].x, tri.vertices[2].y - tri.vertices[1].y};
    const double jac = std::fabs(e1.x * e2.y - e1.y * e2.x);
    auto over_triangle = [&](double exponent) {
        return integrate_rectangle(
            [&](double u, double v) {
                const double x = p0.x + u * (e1.x + v * e2.x);
                const double y = p0.y + u * (e1.y + v * e2.y);
                return std::pow(1.0 - x * x - y * y, -exponent) * u * jac;
            },
            0.0, 1.0, 0.0, 1.0, tol);
    };
    const CuspPrism prism{0.5 * over_triangle(1.0), over_triangle(1.5)};
    if (!(prism.volume < 0.5 * prism.floor_area))
        throw InequalityViolation("cusp prism volume " + std::to_string(prism.volume) +
                                  " is not below half the floor area " +
                                  std::to_string(prism.floor_area));
    return prism;
}

CeilingFunction RandomCeiling::ceiling() const {
    const auto c = coeffs;
    auto poly = [c](double x, double y) {
        return c[0] + c[1] * x + c[2] * y + c[3] * (x * x - y * y) + c[4] * x * y +
               c[5] * (x * x + y * y);
    };
    return CeilingFunction::with_gradient(
        [poly](double r, double theta) {
            return 1.5 + 1.5 * std::tanh(poly(r * std::cos(theta), r * std::sin(theta)));
        },
        [poly, c](double r, double theta) {
            const double ct = std::cos(theta);
            const double st = std::sin(theta);
            const double x = r * ct;
            const double y = r * st;
            const double sx = c[1] + 2.0 * c[3] * x + c[4] * y + 2.0 * c[5] * x;
            const double sy = c[2] - 2.0 * c[3] * y + c[4] * x + 2.0 * c[5] * y;
            const double sech = 1.0 / std::cosh(poly(x, y));
            const double scale = 1.5 * sech * sech;
            return HeightGradient{scale * (sx * ct + sy * st), scale * (-sx * y + sy * x)};
        });
}

RandomCeiling random_ceiling(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> radius(0.3, 2.0);
    std::uniform_real_distribution<double> coeff(-1.0, 1.0);
    RandomCeiling out{radius(rng), {}};
    for (double& c : out.coeffs) c = coeff(rng);
    return out;
}

ProjectiveTriangle random_projective_triangle(std::mt19937_64& rng) {
    std::uniform_real_distribution<double> unit(-1.0, 1.0);
    auto point = [&]() {
        for (;;) {
            const KleinPoint p{0.95 * unit(rng), 0.95 * unit(rng)};
            if (klein_norm2(p) < 0.95 * 0.95) return p;
        }
    };
    for (;;) {
        const KleinPoint a = point();
        const KleinPoint b = point();
        const KleinPoint c = point();
        if (std::fabs(cross(a, b, c)) > 1e-3) return ProjectiveTriangle::make(a, b, c);
    }
}

RoomSweepResult room_sweep(std::uint64_t seed, int count, bool constant_ceilings,
                           const Tolerance& tol) {
    if (count < 1) throw DomainError("room sweep: count must be at least 1");
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> level(0.0, 3.0);
    RoomSweepResult result;
    for (int i = 0; i < count; ++i) {
        RoomSpec room = [&] {
            if (constant_ceilings) {
                const double radius = std::uniform_real_distribution<double>(0.3, 2.0)(rng);
                return measure_room(FloorRegion::disk(radius), CeilingFunction::constant(level(rng)),
                                    tol);
            }
            const RandomCeiling spec = random_ceiling(rng);
            return measure_room(FloorRegion::disk(spec.disk_radius), spec.ceiling(), tol);
        }();
        if (room.margin < -tol.bound(room.nice_area) || room.volume_slack < -tol.bound(room.volume))
            ++result.violations;
        if (i == 0 || room.margin < result.worst_margin) result.worst_margin = room.margin;
        result.rooms.push_back(std::move(room));
    }
    return result;
}

}  // namespace turnover

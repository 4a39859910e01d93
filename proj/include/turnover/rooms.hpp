#pragma once

// Rooms over geodesic floors in Fermi coordinates: volume and ceiling-area
// integrals, the constant-height comparison room, and the cusp-prism bound.
//
// A point of the floor plane is given by polar geodesic coordinates (r, theta)
// about a base point; the height above the plane is measured along normals.
// Area element on the floor: dA = sinh r dr dtheta.

#include <array>
#include <cstdint>
#include <functional>
#include <random>
#include <variant>
#include <vector>

#include "turnover/numerics.hpp"

namespace turnover {

/// Default stopping rule for the two-dimensional room integrals.
inline constexpr Tolerance kRoomTolerance{1e-11, 1e-11, 8};

struct PolarDisk {
    double radius;

    /// Throws DomainError unless 0 < radius < 300.
    static PolarDisk make(double radius);
    [[nodiscard]] double area() const;
};

struct KleinPoint {
    double x;
    double y;
};

/// Triangle in the projective (Klein) model; vertices strictly inside the
/// unit disk, distinct and not collinear.
struct ProjectiveTriangle {
    std::array<KleinPoint, 3> vertices;

    /// Throws DomainError on invalid vertices.
    static ProjectiveTriangle make(KleinPoint a, KleinPoint b, KleinPoint c);

    /// Interior angles, from the hyperboloid model.
    [[nodiscard]] std::array<double, 3> angles() const;

    /// pi minus the angle sum.
    [[nodiscard]] double area() const;
};

class FloorRegion {
public:
    using Shape = std::variant<PolarDisk, ProjectiveTriangle>;

    static FloorRegion disk(double radius) { return FloorRegion(PolarDisk::make(radius)); }
    static FloorRegion triangle(const ProjectiveTriangle& tri) { return FloorRegion(tri); }

    [[nodiscard]] const Shape& shape() const { return shape_; }
    [[nodiscard]] double area() const;

private:
    explicit FloorRegion(Shape shape) : shape_(std::move(shape)) {}
    Shape shape_;
};

struct HeightGradient {
    double dr;
    double dtheta;
};

using HeightField = std::function<double(double r, double theta)>;
using GradientField = std::function<HeightGradient(double r, double theta)>;

/// Nonnegative height function on the floor, with either an analytic
/// gradient or a central-difference fallback (step 1e-6, one-sided near
/// r = 0).
class CeilingFunction {
public:
    static CeilingFunction constant(double height);
    static CeilingFunction with_gradient(HeightField height, GradientField gradient);
    static CeilingFunction finite_difference(HeightField height);

    /// Throws DomainError if the height is negative or not finite.
    [[nodiscard]] double height(double r, double theta) const;
    [[nodiscard]] HeightGradient gradient(double r, double theta) const;
    [[nodiscard]] bool uses_finite_differences() const { return !gradient_; }

private:
    CeilingFunction(HeightField height, GradientField gradient)
        : height_(std::move(height)), gradient_(std::move(gradient)) {}
    HeightField height_;
    GradientField gradient_;
};

/// Integral of (sinh 2g + 2g)/4 dA.
double room_volume(const FloorRegion& floor, const CeilingFunction& g,
                   const Tolerance& tol = kRoomTolerance);

/// Integral of cosh g sqrt((g_r^2 + cosh^2 g) sinh^2 r + g_theta^2) dr dtheta.
double ceiling_area(const FloorRegion& floor, const CeilingFunction& g,
                    const Tolerance& tol = kRoomTolerance);

/// Integral of cosh^2 g dA (the ceiling area with the gradient dropped).
double ceiling_area_lower_bound(const FloorRegion& floor, const CeilingFunction& g,
                                const Tolerance& tol = kRoomTolerance);

/// Constant height H >= 0 with floor_area (sinh 2H + 2H)/4 = volume.
double nice_height(double volume, double floor_area);

/// Ceiling area of the constant-height room of the given volume:
/// (A + sqrt(A^2 + 4 (2V - H A)^2)) / 2, which equals A cosh^2 H.
double nice_ceiling_area(double volume, double floor_area);

/// Positive root of x = coth x (about 1.1996786).
double constant_H();

/// 4 cosh^2 H / (sinh 2H + 2H): ceiling area over volume for a room of
/// constant height H.  Throws DomainError unless H > 0.
double nice_room_ratio(double height);

struct RoomSpec {
    FloorRegion floor;
    CeilingFunction ceiling;
    double volume;
    double ceiling_area;
    double equivalent_height;  ///< nice_height(volume, floor area)
    double nice_area;          ///< ceiling area of the equal-volume constant room
    double margin;             ///< ceiling_area - nice_area
    double volume_slack;       ///< constant_H()/2 * ceiling_area - volume
};

/// Computes the room data without checking any inequality.
RoomSpec measure_room(const FloorRegion& floor, const CeilingFunction& g,
                      const Tolerance& tol = kRoomTolerance);

/// Computes the room data and checks ceiling_area >= nice_area - tol.bound(nice_area)
/// and volume < constant_H()/2 * ceiling_area (up to tol.bound(volume)).
/// Throws InequalityViolation if either fails.
RoomSpec isoperimetric_check(const FloorRegion& floor, const CeilingFunction& g,
                             const Tolerance& tol = kRoomTolerance);

struct CuspPrism {
    double volume;      ///< (1/2) integral of dx dy / (1 - x^2 - y^2)
    double floor_area;  ///< integral of dx dy / (1 - x^2 - y^2)^{3/2}
};

/// Evaluates both integrals over the triangle and throws InequalityViolation
/// unless volume < floor_area / 2.
CuspPrism cusp_prism_check(const ProjectiveTriangle& tri, const Tolerance& tol = kRoomTolerance);

/// g = 1.5 + 1.5 tanh(s(x, y)) with s a random quadratic in
/// x = r cos theta, y = r sin theta; heights stay inside (0, 3).
struct RandomCeiling {
    double disk_radius;
    std::array<double, 6> coeffs;  ///< 1, x, y, x^2 - y^2, xy, x^2 + y^2

    [[nodiscard]] CeilingFunction ceiling() const;
};

RandomCeiling random_ceiling(std::mt19937_64& rng);

/// Triangle with vertices uniform in the Klein disk of radius 0.95.
ProjectiveTriangle random_projective_triangle(std::mt19937_64& rng);

struct RoomSweepResult {
    std::vector<RoomSpec> rooms;
    int violations = 0;
    double worst_margin = 0.0;  ///< smallest ceiling_area - nice_area seen
};

/// Runs isoperimetric_check on `count` seeded disk rooms.  With
/// constant_ceilings the ceilings are random constant heights in [0, 3].
/// Violations are counted rather than thrown.
RoomSweepResult room_sweep(std::uint64_t seed, int count, bool constant_ceilings,
                           const Tolerance& tol = kRoomTolerance);

}  // namespace turnover

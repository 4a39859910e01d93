#pragma once

// Regular truncated 3-simplices, Miyamoto's volume-to-boundary density and
// the return-path angle formulas that feed it.

#include "turnover/numerics.hpp"
#include "turnover/trig.hpp"

namespace turnover {

/// Regular truncated simplex with dihedral angle theta in [0, pi/3).
struct TruncatedSimplexSpec {
    double theta;
    double edge_length;  ///< distance between opposite truncation planes along an edge
    double volume;
    double rho3;         ///< volume / (4 (pi - 3 theta))
};

/// acosh(cos t / (2 cos t - 1)), evaluated in a cancellation-free form.
/// Throws DomainError unless 0 <= theta < pi/3.
double edge_from_angle(double theta);

/// Inverse of edge_from_angle.  Throws DomainError unless l > 0.
double angle_from_edge(double l);

/// 8 L(pi/4) - 3 * integral_0^theta edge_from_angle(t) dt.
double truncated_simplex_volume(double theta, const Tolerance& tol = {});

TruncatedSimplexSpec truncated_simplex(double theta, const Tolerance& tol = {});

/// Density at dihedral angle theta (theta = 0 gives the ideal octahedron).
double rho3_at_angle(double theta, const Tolerance& tol = {});

/// Density as a function of the half edge length r > 0.
double rho3(double r, const Tolerance& tol = {});

/// A shortest return path from a turnover boundary component.
struct ReturnPathCase {
    TurnoverSignature boundary_sig;
    int k;  ///< order of the elliptic axis carrying the path, 1 if none
    bool closed;
    Rational chi;
    double theta;
    double min_length;  ///< edge length of the simplex at theta
};

/// Validates k against {1} and the cone orders of the boundary, then fills
/// in theta and min_length.  Throws DomainError for non-hyperbolic
/// boundaries or an invalid k.
ReturnPathCase make_return_path_case(const TurnoverSignature& boundary, int k, bool closed);

/// pi / (3 (1 - k chi)) when closed, pi / (3 (1 - (k/2) chi)) otherwise.
double return_path_theta(const ReturnPathCase& c);

/// Same formula for a raw Euler characteristic.  Throws DomainError unless
/// chi < 0 and k >= 1.
double return_path_theta(double chi, int k, bool closed);

/// rho3(l/2) * boundary_area.
double miyamoto_lower_bound(double boundary_area, double l, const Tolerance& tol = {});

/// Shortest return path forced by an embedded boundary disk of the given
/// radius: acosh(cosh 2r / (cosh 2r - 1)).
double length_from_disk_radius(double disk_r);

}  // namespace turnover

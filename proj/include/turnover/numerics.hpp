#pragma once

// Deterministic scalar numerics: bracketing root finder, adaptive
// quadrature with log-singular endpoint handling, and the Lobachevsky
// function.

#include <functional>
#include <numbers>

#include "turnover/errors.hpp"

namespace turnover {

inline constexpr double kPi = std::numbers::pi;

using ScalarFunction = std::function<double(double)>;

/// Stopping rule shared by the root finder and the quadrature.
///
/// For `integrate`, `max_iter` bounds the recursion depth of the adaptive
/// subdivision; for `find_root` it bounds the number of iterations.
struct Tolerance {
    double abs_tol = 1e-12;
    double rel_tol = 1e-12;
    int max_iter = 200;

    /// Throws DomainError unless abs_tol > 0, rel_tol >= 0 and max_iter >= 1.
    void validate() const;

    /// abs_tol + rel_tol * |scale|
    [[nodiscard]] double bound(double scale) const;
};

/// Closed interval [lo, hi] with lo < hi.  `make` accepts either orientation.
class Bracket {
public:
    static Bracket make(double a, double b);

    [[nodiscard]] double lo() const { return lo_; }
    [[nodiscard]] double hi() const { return hi_; }

private:
    Bracket(double lo, double hi) : lo_(lo), hi_(hi) {}
    double lo_;
    double hi_;
};

/// Guarded secant/bisection root finder.
///
/// Every secant step is kept inside the current bracket and a bisection
/// step is forced whenever two consecutive steps fail to halve the
/// bracket, so the bisection convergence guarantee is retained.  The
/// returned x lies in the final bracket, whose width is at most
/// tol.bound(x), or whose endpoints are adjacent doubles, or f(x) == 0.
///
/// Throws BracketError when f does not change sign on the bracket and
/// ConvergenceError when tol.max_iter iterations do not suffice.
double find_root(const ScalarFunction& f, Bracket bracket, const Tolerance& tol = {});

/// Adaptive Simpson quadrature of f over [a, b] (b < a gives the negated
/// integral).
///
/// An endpoint where f is not finite is treated as an integrable
/// (logarithmic-type) singularity: the piece [a, a + 1e-6 (b - a)] is
/// split off and integrated with a geometrically graded open
/// Gauss-Legendre rule, the remainder with adaptive Simpson.
///
/// Throws ConvergenceError if the recursion depth exceeds tol.max_iter,
/// if the graded singular piece does not settle (non-integrable
/// singularity), or if f returns a non-finite value in the interior.
double integrate(const ScalarFunction& f, double a, double b, const Tolerance& tol = {});

using PlanarFunction = std::function<double(double, double)>;

/// Tensor-product 10-point Gauss-Legendre quadrature of f over
/// [x0, x1] x [y0, y1] on an n x n panel grid, with n doubled from 2 until
/// successive results agree to tol.bound(result).  At most
/// min(tol.max_iter, 8) doublings are attempted before ConvergenceError;
/// a non-finite sample also raises ConvergenceError.
double integrate_rectangle(const PlanarFunction& f, double x0, double x1, double y0, double y1,
                           const Tolerance& tol = {});

/// Lobachevsky function  -int_0^theta ln|2 sin u| du  on [0, pi/2].
/// Throws DomainError outside that range.
double lobachevsky(double theta, const Tolerance& tol = {});

}  // namespace turnover

#include "turnover/numerics.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace turnover {

void Tolerance::validate() const {
    if (!(abs_tol > 0.0) || !std::isfinite(abs_tol))
        throw DomainError("tolerance: abs_tol must be positive and finite");
    if (!(rel_tol >= 0.0) || !std::isfinite(rel_tol))
        throw DomainError("tolerance: rel_tol must be non-negative and finite");
    if (max_iter < 1) throw DomainError("tolerance: max_iter must be at least 1");
}

double Tolerance::bound(double scale) const { return abs_tol + rel_tol * std::fabs(scale); }

Bracket Bracket::make(double a, double b) {
    if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("bracket endpoints must be finite");
    if (a == b) throw DomainError("bracket endpoints must differ");
    return a < b ? Bracket(a, b) : Bracket(b, a);
}

double find_root(const ScalarFunction& f, Bracket bracket, const Tolerance& tol) {
    tol.validate();
    double a = bracket.lo();
    double b = bracket.hi();
    double fa = f(a);
    double fb = f(b);
    if (!std::isfinite(fa) || !std::isfinite(fb))
        throw BracketError("find_root: function is not finite at a bracket endpoint");
    if (fa == 0.0) return a;
    if (fb == 0.0) return b;
    if (std::signbit(fa) == std::signbit(fb))
        throw BracketError("find_root: no sign change on [" + std::to_string(a) + ", " +
                           std::to_string(b) + "]");

    double reference_width = b - a;
    int slow_steps = 0;
    for (int iter = 0; iter < tol.max_iter; ++iter) {
        bool bisect = slow_steps >= 2;
        double x = 0.0;
        if (!bisect) {
            x = b - fb * (b - a) / (fb - fa);
            if (!(x > a && x < b)) bisect = true;
        }
        if (bisect) {
            x = a + 0.5 * (b - a);
            // Adjacent doubles: the bracket cannot shrink further.
            if (!(x > a && x < b)) return std::fabs(fa) <= std::fabs(fb) ? a : b;
        }

        const double fx = f(x);
        if (!std::isfinite(fx)) throw ConvergenceError("find_root: non-finite function value");
        if (fx == 0.0) return x;
        if (std::signbit(fx) == std::signbit(fa)) {
            a = x;
            fa = fx;
        } else {
            b = x;
            fb = fx;
        }

        const double width = b - a;
        if (bisect || width <= 0.5 * reference_width) {
            slow_steps = 0;
            reference_width = width;
        } else {
            ++slow_steps;
        }

        const double best = std::fabs(fa) <= std::fabs(fb) ? a : b;
        if (width <= tol.bound(best)) return best;
    }
    throw ConvergenceError("find_root: exceeded " + std::to_string(tol.max_iter) + " iterations");
}

namespace {

constexpr double kSingularSplit = 1e-6;
constexpr int kMinDepth = 3;

// 10-point Gauss-Legendre rule on [-1, 1] (symmetric half).
constexpr std::array<double, 5> kGaussNodes = {
    0.1488743389816312108848260, 0.4333953941292471907992659, 0.6794095682990244062343274,
    0.8650633666889845107320967, 0.9739065285171717200779640};
constexpr std::array<double, 5> kGaussWeights = {
    0.2955242247147528701738930, 0.2692667193099963550912269, 0.2190863625159820439955349,
    0.1494513491505805931457763, 0.0666713443086881375935688};

double checked(const ScalarFunction& f, double x) {
    const double y = f(x);
    if (!std::isfinite(y))
        throw ConvergenceError("integrate: integrand is not finite at interior point " +
                               std::to_string(x));
    return y;
}

double gauss_legendre(const ScalarFunction& f, double a, double b) {
    const double mid = 0.5 * (a + b);
    const double half = 0.5 * (b - a);
    double sum = 0.0;
    for (std::size_t i = 0; i < kGaussNodes.size(); ++i) {
        const double dx = half * kGaussNodes[i];
        sum += kGaussWeights[i] * (checked(f, mid - dx) + checked(f, mid + dx));
    }
    return sum * half;
}

struct SimpsonState {
    const ScalarFunction& f;
    int max_depth;
};

double simpson_step(const SimpsonState& s, double a, double fa, double m, double fm, double b,
                    double fb, double whole, double eps, int depth) {
    const double lm = 0.5 * (a + m);
    const double rm = 0.5 * (m + b);
    const double flm = checked(s.f, lm);
    const double frm = checked(s.f, rm);
    const double left = (m - a) / 6.0 * (fa + 4.0 * flm + fm);
    const double right = (b - m) / 6.0 * (fm + 4.0 * frm + fb);
    const double refined = left + right;
    const double delta = refined - whole;

    const double roundoff = 64.0 * std::numeric_limits<double>::epsilon() *
                            (std::fabs(left) + std::fabs(right));
    const bool exhausted = !(lm > a && m > lm && rm > m && b > rm);
    if (depth >= kMinDepth && (std::fabs(delta) <= 15.0 * eps || std::fabs(delta) <= roundoff))
        return refined + delta / 15.0;
    if (exhausted || depth >= s.max_depth)
        throw ConvergenceError("integrate: subdivision depth limit reached near x = " +
                               std::to_string(m));
    return simpson_step(s, a, fa, lm, flm, m, fm, left, 0.5 * eps, depth + 1) +
           simpson_step(s, m, fm, rm, frm, b, fb, right, 0.5 * eps, depth + 1);
}

double adaptive_simpson(const ScalarFunction& f, double a, double fa, double b, double fb,
                        const Tolerance& tol) {
    const double m = 0.5 * (a + b);
    const double fm = checked(f, m);
    const double whole = (b - a) / 6.0 * (fa + 4.0 * fm + fb);
    const SimpsonState state{f, tol.max_iter};
    return simpson_step(state, a, fa, m, fm, b, fb, whole, tol.bound(whole), 0);
}

// Integrates over [edge, edge + width] (width may be negative) where f is
// singular at `edge`, using cells that halve in size toward the edge.
double graded_singular_piece(const ScalarFunction& f, double edge, double width, double eps) {
    constexpr int kMaxCells = 2200;
    constexpr int kQuietCellsNeeded = 4;
    double sum = 0.0;
    double outer = width;
    double last = 0.0;
    double before_last = 0.0;
    int quiet = 0;
    // Remaining cells form a geometric series if consecutive ones shrink.
    auto tail = [&]() -> std::optional<double> {
        const double ratio = before_last != 0.0 ? std::fabs(last / before_last) : 1.0;
        if (ratio < 0.9) return last * ratio / (1.0 - ratio);
        return std::nullopt;
    };
    for (int cell = 0; cell < kMaxCells; ++cell) {
        const double inner = 0.5 * outer;
        const double x0 = edge + inner;
        const double x1 = edge + outer;
        if (x0 == edge || x0 == x1) {
            // Out of floating-point resolution near the edge.
            if (const auto rest = tail()) return sum + *rest;
            break;
        }
        const double contribution = width > 0 ? gauss_legendre(f, x0, x1) : gauss_legendre(f, x1, x0);
        sum += contribution;
        before_last = last;
        last = contribution;
        quiet = std::fabs(contribution) <= 1e-3 * eps ? quiet + 1 : 0;
        if (quiet >= kQuietCellsNeeded) {
            if (const auto rest = tail()) return sum + *rest;
        }
        outer = inner;
    }
    throw ConvergenceError("integrate: singular endpoint contribution does not converge");
}

}  // namespace

double integrate(const ScalarFunction& f, double a, double b, const Tolerance& tol) {
    tol.validate();
    if (!std::isfinite(a) || !std::isfinite(b)) throw DomainError("integrate: limits must be finite");
    if (a == b) return 0.0;
    if (b < a) return -integrate(f, b, a, tol);

    double fa = f(a);
    double fb = f(b);
    const bool singular_left = !std::isfinite(fa);
    const bool singular_right = !std::isfinite(fb);

    const double split = kSingularSplit * (b - a);
    double lo = a;
    double hi = b;
    double total = 0.0;
    const double piece_eps = tol.abs_tol / 3.0;
    if (singular_left) {
        lo = a + split;
        total += graded_singular_piece(f, a, split, piece_eps);
        fa = checked(f, lo);
    }
    if (singular_right) {
        hi = b - split;
        total += graded_singular_piece(f, b, -split, piece_eps);
        fb = checked(f, hi);
    }
    Tolerance inner = tol;
    if (singular_left || singular_right) inner.abs_tol = piece_eps;
    total += adaptive_simpson(f, lo, fa, hi, fb, inner);
    return total;
}

namespace {

double tensor_gauss(const PlanarFunction& f, double x0, double x1, double y0, double y1,
                    int panels) {
    const double hx = (x1 - x0) / panels;
    const double hy = (y1 - y0) / panels;
    std::array<double, 10> nodes{};
    std::array<double, 10> weights{};
    for (std::size_t i = 0; i < kGaussNodes.size(); ++i) {
        nodes[i] = -kGaussNodes[i];
        nodes[i + 5] = kGaussNodes[i];
        weights[i] = weights[i + 5] = kGaussWeights[i];
    }
    double total = 0.0;
    for (int i = 0; i < panels; ++i) {
        const double cx = x0 + (i + 0.5) * hx;
        for (int j = 0; j < panels; ++j) {
            const double cy = y0 + (j + 0.5) * hy;
            double panel = 0.0;
            for (std::size_t a = 0; a < nodes.size(); ++a) {
                const double x = cx + 0.5 * hx * nodes[a];
                double row = 0.0;
                for (std::size_t b = 0; b < nodes.size(); ++b) {
                    const double y = cy + 0.5 * hy * nodes[b];
                    const double value = f(x, y);
                    if (!std::isfinite(value))
                        throw ConvergenceError("integrate_rectangle: integrand is not finite at (" +
                                               std::to_string(x) + ", " + std::to_string(y) + ")");
                    row += weights[b] * value;
                }
                panel += weights[a] * row;
            }
            total += panel;
        }
    }
    return 0.25 * hx * hy * total;
}

}  // namespace

double integrate_rectangle(const PlanarFunction& f, double x0, double x1, double y0, double y1,
                           const Tolerance& tol) {
    tol.validate();
    if (!std::isfinite(x0) || !std::isfinite(x1) || !std::isfinite(y0) || !std::isfinite(y1))
        throw DomainError("integrate_rectangle: limits must be finite");
    if (x0 == x1 || y0 == y1) return 0.0;
    const int doublings = std::min(tol.max_iter, 8);
    int panels = 2;
    double previous = tensor_gauss(f, x0, x1, y0, y1, panels);
    for (int step = 0; step < doublings; ++step) {
        panels *= 2;
        const double current = tensor_gauss(f, x0, x1, y0, y1, panels);
        if (std::fabs(current - previous) <= tol.bound(current)) return current;
        previous = current;
    }
    throw ConvergenceError("integrate_rectangle: no agreement after " + std::to_string(panels) +
                           " panels per axis");
}

double lobachevsky(double theta, const Tolerance& tol) {
    constexpr double slack = 1e-15;
    if (!(theta >= 0.0 && theta <= 0.5 * kPi + slack))
        throw DomainError("lobachevsky: theta must lie in [0, pi/2]");
    if (theta == 0.0) return 0.0;
    return integrate([](double u) { return -std::log(std::fabs(2.0 * std::sin(u))); }, 0.0, theta,
                     tol);
}

}  // namespace turnover

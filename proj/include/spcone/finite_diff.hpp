#pragma once

#include <cmath>
#include <limits>

#include "spcone/sym_matrix.hpp"

namespace spcone {

// Central finite-difference stencils used as independent oracles for the
// analytic derivative code. Step sizes follow the usual eps^(1/3) (second
// order) and eps^(1/5) (third order) conditioning rules.

inline double fd_step_grad(double scale = 1.0) {
    return std::cbrt(std::numeric_limits<double>::epsilon()) * scale;
}

inline double fd_step_d3(double scale = 1.0) {
    return std::pow(std::numeric_limits<double>::epsilon(), 0.2) * scale;
}

inline double fd_step_grad4(double scale = 1.0) {
    return std::pow(std::numeric_limits<double>::epsilon(), 0.2) * scale;
}

/// Fourth-order gradient with one step size per coordinate. For barrier
/// functions the steps should shrink with the local curvature (h_i ~
/// delta / sqrt(H_ii)); magnitude-based steps lose accuracy near the
/// boundary. The higher-order stencil tolerates the larger step that keeps
/// function-evaluation noise from dominating.
template <class F>
Vector fd_gradient_steps(F&& fn, const Vector& x, const Vector& steps) {
    Vector g(x.size());
    Vector xp = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double hi = steps[i];
        const auto at = [&](double delta) {
            xp[i] = x[i] + delta;
            const double f = fn(xp);
            xp[i] = x[i];
            return f;
        };
        g[i] = (8.0 * (at(hi) - at(-hi)) - (at(2.0 * hi) - at(-2.0 * hi))) / (12.0 * hi);
    }
    return g;
}

/// Central-difference gradient of a scalar function of a packed vector.
template <class F>
Vector fd_gradient(F&& fn, const Vector& x, double h) {
    Vector g(x.size());
    Vector xp = x;
    for (Eigen::Index i = 0; i < x.size(); ++i) {
        const double hi = h * (1.0 + std::abs(x[i]));
        xp[i] = x[i] + hi;
        const double fp = fn(xp);
        xp[i] = x[i] - hi;
        const double fm = fn(xp);
        xp[i] = x[i];
        g[i] = (fp - fm) / (2.0 * hi);
    }
    return g;
}

/// d/dt fn(x + t dir) at t = 0, central difference.
template <class F>
double fd_d1_line(F&& fn, const Vector& x, const Vector& dir, double h) {
    return (fn(x + h * dir) - fn(x - h * dir)) / (2.0 * h);
}

/// d^2/dt^2 fn(x + t dir) at t = 0.
template <class F>
double fd_d2_line(F&& fn, const Vector& x, const Vector& dir, double h) {
    return (fn(x + h * dir) - 2.0 * fn(x) + fn(x - h * dir)) / (h * h);
}

/// d^3/dt^3 fn(x + t dir) at t = 0, five-point stencil.
template <class F>
double fd_d3_line(F&& fn, const Vector& x, const Vector& dir, double h) {
    return (fn(x + 2.0 * h * dir) - 2.0 * fn(x + h * dir) + 2.0 * fn(x - h * dir) -
            fn(x - 2.0 * h * dir)) /
           (2.0 * h * h * h);
}

/// Richardson-extrapolated third line derivative: cancels the h^2 truncation
/// term of the five-point stencil.
template <class F>
double fd_d3_line_richardson(F&& fn, const Vector& x, const Vector& dir, double h) {
    const double coarse = fd_d3_line(fn, x, dir, h);
    const double fine = fd_d3_line(fn, x, dir, 0.5 * h);
    return (4.0 * fine - coarse) / 3.0;
}

/// Central difference of a vector-valued map (e.g. a gradient) along dir.
template <class F>
Vector fd_jacobian_apply(F&& fn, const Vector& x, const Vector& dir, double h) {
    return (fn(x + h * dir) - fn(x - h * dir)) / (2.0 * h);
}

}  // namespace spcone

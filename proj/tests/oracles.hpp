#pragma once

// Test-only oracles, independent of the library code paths they check.

#include <cmath>
#include <functional>
#include <random>

#include "qde/operator_algebra.hpp"
#include "qde/units.hpp"

namespace oracles {

using qde::Complex;
using qde::Matrix;

// RK4 integration of dU/dt = -i H(t) U with U(0) = 1.
inline Matrix schrodinger_propagator(const std::function<Matrix(double)>& h, double t_end,
                                     long steps) {
    const Eigen::Index n = h(0.0).rows();
    Matrix u = Matrix::Identity(n, n);
    const double dt = t_end / static_cast<double>(steps);
    const Complex mi(0.0, -1.0);
    for (long k = 0; k < steps; ++k) {
        const double t = k * dt;
        const Matrix k1 = mi * (h(t) * u);
        const Matrix k2 = mi * (h(t + 0.5 * dt) * (u + 0.5 * dt * k1));
        const Matrix k3 = mi * (h(t + 0.5 * dt) * (u + 0.5 * dt * k2));
        const Matrix k4 = mi * (h(t + dt) * (u + dt * k3));
        u += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
    }
    return u;
}

inline Matrix schrodinger_propagator(const Matrix& h, double t_end, long steps) {
    return schrodinger_propagator([&h](double) { return h; }, t_end, steps);
}

// deterministic random Hermitian matrix
inline Matrix random_hermitian(Eigen::Index n, unsigned seed, double scale = 1.0) {
    std::mt19937 rng(seed);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix a(n, n);
    for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j) a(i, j) = Complex(dist(rng), dist(rng));
    return 0.5 * scale * (a + a.adjoint()).eval();
}

// adaptive Simpson quadrature on [a, b]
inline double adaptive_simpson(const std::function<double(double)>& f, double a, double b,
                               double abs_tol, int depth = 28) {
    std::function<double(double, double, double, double, double, double, int)> rec =
        [&](double x0, double x2, double f0, double f1, double f2, double tol, int d) -> double {
        const double x1l = 0.5 * (x0 + 0.5 * (x0 + x2));
        const double x1r = 0.5 * (0.5 * (x0 + x2) + x2);
        const double fl = f(x1l), fr = f(x1r);
        const double h = x2 - x0;
        const double whole = h / 6.0 * (f0 + 4.0 * f1 + f2);
        const double left = h / 12.0 * (f0 + 4.0 * fl + f1);
        const double right = h / 12.0 * (f1 + 4.0 * fr + f2);
        if (d <= 0 || std::abs(left + right - whole) < 15.0 * tol)
            return left + right + (left + right - whole) / 15.0;
        return rec(x0, 0.5 * (x0 + x2), f0, fl, f1, 0.5 * tol, d - 1) +
               rec(0.5 * (x0 + x2), x2, f1, fr, f2, 0.5 * tol, d - 1);
    };
    return rec(a, b, f(a), f(0.5 * (a + b)), f(b), abs_tol, depth);
}

// 2D quadrature in polar coordinates over r in [0, r_max]
inline double polar_quadrature(const std::function<double(double, double)>& f, double r_max,
                               double abs_tol) {
    auto radial = [&](double r) {
        auto angular = [&](double th) { return f(r, th) * r; };
        return adaptive_simpson(angular, 0.0, 2.0 * qde::units::pi, abs_tol / (r_max * 8.0));
    };
    return adaptive_simpson(radial, 0.0, r_max, abs_tol);
}

}  // namespace oracles

#pragma once

#include <cmath>
#include <functional>
#include <vector>

namespace s3flat {

/// Value and first three derivatives of a scalar function at a point;
/// arithmetic below is truncated Taylor-series algebra.
struct Jet3 {
    double f = 0.0, d1 = 0.0, d2 = 0.0, d3 = 0.0;

    static Jet3 variable(double x) { return {x, 1.0, 0.0, 0.0}; }
    static Jet3 constant(double c) { return {c, 0.0, 0.0, 0.0}; }
};

inline Jet3 operator+(const Jet3& a, const Jet3& b) {
    return {a.f + b.f, a.d1 + b.d1, a.d2 + b.d2, a.d3 + b.d3};
}

inline Jet3 operator-(const Jet3& a, const Jet3& b) {
    return {a.f - b.f, a.d1 - b.d1, a.d2 - b.d2, a.d3 - b.d3};
}

inline Jet3 operator*(const Jet3& a, const Jet3& b) {
    return {a.f * b.f,
            a.d1 * b.f + a.f * b.d1,
            a.d2 * b.f + 2.0 * a.d1 * b.d1 + a.f * b.d2,
            a.d3 * b.f + 3.0 * a.d2 * b.d1 + 3.0 * a.d1 * b.d2 + a.f * b.d3};
}

inline Jet3 operator*(double c, const Jet3& a) {
    return {c * a.f, c * a.d1, c * a.d2, c * a.d3};
}

inline Jet3 sin(const Jet3& a) {
    const double s = std::sin(a.f), c = std::cos(a.f);
    return {s,
            c * a.d1,
            -s * a.d1 * a.d1 + c * a.d2,
            -c * a.d1 * a.d1 * a.d1 - 3.0 * s * a.d1 * a.d2 + c * a.d3};
}

inline Jet3 cos(const Jet3& a) {
    const double s = std::sin(a.f), c = std::cos(a.f);
    return {c,
            -s * a.d1,
            -c * a.d1 * a.d1 - s * a.d2,
            s * a.d1 * a.d1 * a.d1 - 3.0 * c * a.d1 * a.d2 - s * a.d3};
}

// Central differences with one Richardson level, O(h^4). The generic F may
// return any vector-space value (double, Vec3, Vec4).

template <typename F>
auto fd_d1(const F& f, double x, double h) {
    auto stencil = [&](double hh) { return (f(x + hh) - f(x - hh)) / (2.0 * hh); };
    return (4.0 * stencil(h / 2) - stencil(h)) / 3.0;
}

template <typename F>
auto fd_d2(const F& f, double x, double h) {
    auto stencil = [&](double hh) {
        return (f(x + hh) - 2.0 * f(x) + f(x - hh)) / (hh * hh);
    };
    return (4.0 * stencil(h / 2) - stencil(h)) / 3.0;
}

template <typename F>
auto fd_d3(const F& f, double x, double h) {
    auto stencil = [&](double hh) {
        return (f(x + 2 * hh) - 2.0 * f(x + hh) + 2.0 * f(x - hh) - f(x - 2 * hh)) /
               (2.0 * hh * hh * hh);
    };
    return (4.0 * stencil(h / 2) - stencil(h)) / 3.0;
}

template <typename F>
auto fd_mixed(const F& f, double x, double y, double h) {
    auto stencil = [&](double hh) {
        return (f(x + hh, y + hh) - f(x + hh, y - hh) - f(x - hh, y + hh) +
                f(x - hh, y - hh)) /
               (4.0 * hh * hh);
    };
    return (4.0 * stencil(h / 2) - stencil(h)) / 3.0;
}

/// Jet of a plain scalar function by finite differences (step per the library
/// default 1e-3 unless overridden).
inline Jet3 fd_jet3(const std::function<double(double)>& f, double x,
                    double h = 1e-3) {
    return {f(x), fd_d1(f, x, h), fd_d2(f, x, h), fd_d3(f, x, h)};
}

/// Cumulative integral of uniformly spaced samples by composite Simpson
/// (odd nodes by the Simpson-consistent half rule); O(h^4) globally.
std::vector<double> cumulative_simpson(const std::vector<double>& g, double h);

/// Quintic Hermite interpolation on [x0, x0+h] from values and first two
/// derivatives at both ends; returns value and three derivatives at x.
Jet3 quintic_hermite(double x0, double h, double f0, double d0, double dd0,
                     double f1, double d1, double dd1, double x);

} // namespace s3flat

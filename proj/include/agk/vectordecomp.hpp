#pragma once

#include <cmath>
#include <stdexcept>

#include "agk/matrix.hpp"

namespace agk {

/// Two equal-norm vectors summing to the decomposed input.
struct SphereSumWitness {
    Vec y;
    Vec z;
    double radius = 1.0;
};

namespace detail {

// Unit vector orthogonal to x: the basis vector with the smallest |x_i|,
// projected off x and normalized; e_1 for x = 0.
inline Vec orthogonal_unit(const Vec& x) {
    const std::size_t n = x.size();
    const double xn = norm(x);
    if (xn == 0.0) return unit_vector(n, 0);
    std::size_t k = 0;
    for (std::size_t i = 1; i < n; ++i)
        if (std::abs(x[i]) < std::abs(x[k])) k = i;
    Vec v = unit_vector(n, k) - (x[k] / (xn * xn)) * x;
    return (1.0 / norm(v)) * v;
}

}  // namespace detail

/// Splits x with ||x|| <= 2 as y + z with ||y|| = ||z|| = 1:
/// y = (x + a v) / 2, z = (x - a v) / 2 with a = sqrt(4 - ||x||^2) and v a
/// unit vector orthogonal to x. Inputs with ||x|| in (2, 2 + tol] are clamped
/// to the sphere.
inline SphereSumWitness unit_sum_decompose(Vec x, double tol) {
    const std::size_t n = x.size();
    if (n < 2) throw std::invalid_argument("unit_sum_decompose: n >= 2 required");
    double xn = norm(x);
    if (xn > 2.0 + tol) throw std::invalid_argument("unit_sum_decompose: ||x|| > 2");
    if (xn > 2.0) {
        x = (2.0 / xn) * x;
        xn = 2.0;
    }
    const double a = std::sqrt(std::max(0.0, 4.0 - xn * xn));
    const Vec v = detail::orthogonal_unit(x);
    SphereSumWitness w;
    w.radius = 1.0;
    w.y.resize(n);
    w.z.resize(n);
    for (std::size_t i = 0; i < n; ++i) {
        const double av = a * v[i];
        w.y[i] = (x[i] + av) / 2.0;
        w.z[i] = (x[i] - av) / 2.0;
    }
    return w;
}

/// Scaled form: x in the delta-ball as a sum of two radius-delta/2 vectors.
inline SphereSumWitness ball_sum_decompose(const Vec& x, double delta, double tol) {
    if (delta <= 0.0) throw std::invalid_argument("ball_sum_decompose: delta must be positive");
    if (norm(x) > delta + tol) throw std::invalid_argument("ball_sum_decompose: ||x|| > delta");
    SphereSumWitness w = unit_sum_decompose((2.0 / delta) * x, tol);
    w.y = (delta / 2.0) * w.y;
    w.z = (delta / 2.0) * w.z;
    w.radius = delta / 2.0;
    return w;
}

}  // namespace agk

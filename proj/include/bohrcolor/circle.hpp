#pragma once

#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <stdexcept>

namespace bohrcolor {

// Default slack for every strict inequality test downstream. The construction's
// windows are delta2-scale, many orders above double rounding error.
inline constexpr double kSlack = 1e-9;

// A point of C/Z[i] in the fundamental square [0,1)^2.
struct GaussianResidue {
    double x = 0.0;
    double y = 0.0;
};

// Canonical representative of x in R/Z, always in [0,1).
inline double frac(double x) {
    if (!std::isfinite(x)) throw std::domain_error("frac: non-finite input");
    double f = x - std::floor(x);
    if (f >= 1.0) f = 0.0;  // rounding of x-floor(x) can land on 1.0
    return f;
}

// ||x||_{R/Z} = min({x}, 1-{x}) for a canonical value in [0,1).
inline double rz_norm(double v) { return v <= 0.5 ? v : 1.0 - v; }

// ||x||_{R/Z} for an arbitrary real.
inline double rz_norm_of(double x) { return rz_norm(frac(x)); }

// Representative of x in [-1/2, 1/2).
inline double signed_frac(double x) {
    double f = frac(x);
    return f < 0.5 ? f : f - 1.0;
}

// Nearest integer [x] = floor(x + 1/2); half-integers round toward +inf.
inline long long nearest_int(double x) {
    if (!std::isfinite(x)) throw std::domain_error("nearest_int: non-finite input");
    double r = std::floor(x + 0.5);
    if (r < -9.007199254740992e15 || r > 9.007199254740992e15)
        throw std::overflow_error("nearest_int: |x| exceeds exact integer range");
    return static_cast<long long>(r);
}

// e(x) = exp(2*pi*i*x) on the unit circle.
inline std::complex<double> circle_exp(double v) {
    double t = 2.0 * std::numbers::pi * v;
    return {std::cos(t), std::sin(t)};
}

// Coordinatewise reduction modulo Z[i].
inline GaussianResidue gaussian_reduce(std::complex<double> z) {
    return {frac(z.real()), frac(z.imag())};
}

// Euclidean distance from z to the nearest Gaussian integer.
inline double gaussian_dist(std::complex<double> z) {
    double dx = rz_norm_of(z.real());
    double dy = rz_norm_of(z.imag());
    return std::hypot(dx, dy);
}

}  // namespace bohrcolor

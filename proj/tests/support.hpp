#pragma once

// Test-only generators and oracles. Nothing here calls into the code path it
// is used to check.

#include "ellrange/algebra.hpp"

#include <cmath>
#include <complex>
#include <numbers>
#include <random>

namespace ellrange::testing {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : engine_(seed) {}

    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(engine_); }
    double normal() { return std::normal_distribution<double>(0.0, 1.0)(engine_); }
    Complex complex_in_square(double half) { return {uniform(-half, half), uniform(-half, half)}; }

    /// Entries uniform in the complex square [-half, half]^2.
    Matrix2C matrix(double half = 5.0)
    {
        return {complex_in_square(half), complex_in_square(half), complex_in_square(half), complex_in_square(half)};
    }

    /// Haar-distributed unit vector of C^2 (normalized complex Gaussian).
    UnitVector2 unit_vector()
    {
        for (;;) {
            const Complex z1(normal(), normal());
            const Complex z2(normal(), normal());
            const double len = std::sqrt(std::norm(z1) + std::norm(z2));
            if (len > 0.0) {
                return UnitVector2::make(z1 / len, z2 / len);
            }
        }
    }

    /// e^{i alpha} [[a, -conj(b)], [b, conj(a)]] with (a, b) a random unit vector.
    Matrix2C unitary()
    {
        const UnitVector2 x = unit_vector();
        const Complex phase = std::polar(1.0, uniform(0.0, 2.0 * std::numbers::pi));
        return {phase * x.z1(), -phase * std::conj(x.z2()), phase * x.z2(), phase * std::conj(x.z1())};
    }

private:
    std::mt19937_64 engine_;
};

/// s+/s- evaluated literally from the closed form, subtraction and all.
struct LiteralAxes {
    double plus;
    double minus;
};

inline LiteralAxes literal_semi_axes(const Matrix2C& a)
{
    const Complex half_trace = 0.5 * (a.a11() + a.a22());
    const Complex b11 = a.a11() - half_trace;
    const Complex b12 = a.a12();
    const Complex b21 = a.a21();
    const Complex b22 = a.a22() - half_trace;
    // tr(B^* B) and tr(B B) written out entry by entry.
    const double gram = std::norm(b11) + std::norm(b12) + std::norm(b21) + std::norm(b22);
    const double sq = std::abs(b11 * b11 + b12 * b21 + b21 * b12 + b22 * b22);
    return {0.5 * std::sqrt(std::max(0.0, gram + sq)), 0.5 * std::sqrt(std::max(0.0, gram - sq))};
}

/// Largest eigenvalue of a 2x2 Hermitian matrix [[p, q], [conj(q), r]] via
/// the characteristic polynomial lambda^2 - (p + r) lambda + (p r - |q|^2).
inline double hermitian_max_eigenvalue(double p, Complex q, double r)
{
    const double tr = p + r;
    const double det = p * r - std::norm(q);
    return 0.5 * (tr + std::sqrt(std::max(0.0, tr * tr - 4.0 * det)));
}

inline double max_entry_distance(const Matrix2C& x, const Matrix2C& y)
{
    double d = 0.0;
    for (int i = 0; i < 2; ++i) {
        for (int j = 0; j < 2; ++j) {
            d = std::max(d, std::abs(x(i, j) - y(i, j)));
        }
    }
    return d;
}

inline Matrix2C conjugate_by(const Matrix2C& u, const Matrix2C& a)
{
    return mat_mul(mat_mul(adjoint(u), a), u);
}

} // namespace ellrange::testing

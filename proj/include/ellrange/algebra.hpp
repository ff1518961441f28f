#pragma once

#include <array>
#include <complex>
#include <utility>

namespace ellrange {

using Complex = std::complex<double>;

/// Absolute tolerance on |z1|^2 + |z2|^2 - 1 accepted by UnitVector2.
inline constexpr double kUnitTolerance = 1e-12;

bool is_finite(Complex z) noexcept;

/**
 * A 2x2 complex matrix with finite entries, stored row-major.
 *
 * Construction throws std::invalid_argument if any entry is NaN or infinite,
 * so every Matrix2C reaching an algorithm is finite.
 */
class Matrix2C {
public:
    constexpr Matrix2C() noexcept = default;
    Matrix2C(Complex a11, Complex a12, Complex a21, Complex a22);

    static constexpr Matrix2C identity() noexcept { return Matrix2C(Unchecked{}, 1.0, 0.0, 0.0, 1.0); }
    static constexpr Matrix2C zero() noexcept { return Matrix2C{}; }
    static Matrix2C diagonal(Complex d1, Complex d2) { return {d1, 0.0, 0.0, d2}; }

    constexpr Complex a11() const noexcept { return m_[0]; }
    constexpr Complex a12() const noexcept { return m_[1]; }
    constexpr Complex a21() const noexcept { return m_[2]; }
    constexpr Complex a22() const noexcept { return m_[3]; }

    /// Row-major entry access, row and col in {0, 1}.
    constexpr Complex operator()(int row, int col) const noexcept { return m_[2 * row + col]; }
    constexpr const std::array<Complex, 4>& entries() const noexcept { return m_; }

    double frobenius_norm() const noexcept;

    friend bool operator==(const Matrix2C&, const Matrix2C&) = default;

private:
    struct Unchecked {};
    constexpr Matrix2C(Unchecked, Complex a11, Complex a12, Complex a21, Complex a22) noexcept
        : m_{a11, a12, a21, a22}
    {
    }

    std::array<Complex, 4> m_{};
};

Matrix2C operator+(const Matrix2C& a, const Matrix2C& b);
Matrix2C operator-(const Matrix2C& a, const Matrix2C& b);
Matrix2C operator*(Complex s, const Matrix2C& a);

/**
 * A unit vector x = (z1, z2) of complex 2-space.
 *
 * make() rejects input whose squared norm differs from 1 by more than
 * kUnitTolerance; it never renormalizes.
 */
class UnitVector2 {
public:
    static UnitVector2 make(Complex z1, Complex z2);
    static UnitVector2 e1() noexcept { return UnitVector2(1.0, 0.0); }
    static UnitVector2 e2() noexcept { return UnitVector2(0.0, 1.0); }

    Complex z1() const noexcept { return z1_; }
    Complex z2() const noexcept { return z2_; }

private:
    UnitVector2(Complex z1, Complex z2) noexcept : z1_(z1), z2_(z2) {}

    Complex z1_;
    Complex z2_;
};

/// A point on the real unit 2-sphere.
struct SphereVector {
    double s1 = 0.0;
    double s2 = 0.0;
    double s3 = 0.0;

    double norm() const noexcept;
};

Complex trace(const Matrix2C& a) noexcept;
Complex determinant(const Matrix2C& a) noexcept;
Matrix2C adjoint(const Matrix2C& a) noexcept;
Matrix2C mat_mul(const Matrix2C& a, const Matrix2C& b) noexcept;

/// e^{i theta} A + v Id.
Matrix2C apply_plane_transform(const Matrix2C& a, double theta, Complex v);

/// Principal square root, argument in (-pi/2, pi/2].
Complex principal_sqrt(Complex z) noexcept;

/**
 * Both eigenvalues of A from tr/2 +- sqrt((tr/2)^2 - det).
 *
 * The discriminant is evaluated as ((a11 - a22)/2)^2 + a12*a21, which is the
 * same quantity without the cancellation of (tr/2)^2 - det. The root with
 * the larger real part comes first, ties broken by the larger imaginary part.
 */
std::pair<Complex, Complex> eigenvalues2(const Matrix2C& a) noexcept;

/// <Ax, x> with the inner product conjugate-linear in the second slot.
Complex rayleigh(const Matrix2C& a, const UnitVector2& x) noexcept;

/// (2 Re(conj(z1) z2), 2 Im(conj(z1) z2), |z2|^2 - |z1|^2).
SphereVector hopf_map(const UnitVector2& x) noexcept;

} // namespace ellrange

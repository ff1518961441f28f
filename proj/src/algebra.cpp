#include "ellrange/algebra.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace ellrange {

bool is_finite(Complex z) noexcept
{
    return std::isfinite(z.real()) && std::isfinite(z.imag());
}

Matrix2C::Matrix2C(Complex a11, Complex a12, Complex a21, Complex a22) : m_{a11, a12, a21, a22}
{
    static constexpr const char* names[] = {"a11", "a12", "a21", "a22"};
    for (std::size_t k = 0; k < m_.size(); ++k) {
        if (!is_finite(m_[k])) {
            throw std::invalid_argument(std::string("matrix entry ") + names[k] + " is not finite");
        }
    }
}

double Matrix2C::frobenius_norm() const noexcept
{
    double sum = 0.0;
    for (const auto& z : m_) {
        sum += std::norm(z);
    }
    return std::sqrt(sum);
}

Matrix2C operator+(const Matrix2C& a, const Matrix2C& b)
{
    return {a.a11() + b.a11(), a.a12() + b.a12(), a.a21() + b.a21(), a.a22() + b.a22()};
}

Matrix2C operator-(const Matrix2C& a, const Matrix2C& b)
{
    return {a.a11() - b.a11(), a.a12() - b.a12(), a.a21() - b.a21(), a.a22() - b.a22()};
}

Matrix2C operator*(Complex s, const Matrix2C& a)
{
    return {s * a.a11(), s * a.a12(), s * a.a21(), s * a.a22()};
}

UnitVector2 UnitVector2::make(Complex z1, Complex z2)
{
    if (!is_finite(z1) || !is_finite(z2)) {
        throw std::invalid_argument("unit vector component is not finite");
    }
    const double norm2 = std::norm(z1) + std::norm(z2);
    if (std::abs(norm2 - 1.0) > kUnitTolerance) {
        throw std::invalid_argument("vector is not unit: |z1|^2 + |z2|^2 = " + std::to_string(norm2));
    }
    return UnitVector2(z1, z2);
}

double SphereVector::norm() const noexcept
{
    return std::sqrt(s1 * s1 + s2 * s2 + s3 * s3);
}

Complex trace(const Matrix2C& a) noexcept
{
    return a.a11() + a.a22();
}

Complex determinant(const Matrix2C& a) noexcept
{
    return a.a11() * a.a22() - a.a12() * a.a21();
}

Matrix2C adjoint(const Matrix2C& a) noexcept
{
    // Conjugating finite entries cannot produce a non-finite one.
    return {std::conj(a.a11()), std::conj(a.a21()), std::conj(a.a12()), std::conj(a.a22())};
}

Matrix2C mat_mul(const Matrix2C& a, const Matrix2C& b) noexcept
{
    return {a.a11() * b.a11() + a.a12() * b.a21(), a.a11() * b.a12() + a.a12() * b.a22(),
            a.a21() * b.a11() + a.a22() * b.a21(), a.a21() * b.a12() + a.a22() * b.a22()};
}

Matrix2C apply_plane_transform(const Matrix2C& a, double theta, Complex v)
{
    if (!std::isfinite(theta)) {
        throw std::invalid_argument("rotation angle is not finite");
    }
    return std::polar(1.0, theta) * a + v * Matrix2C::identity();
}

Complex principal_sqrt(Complex z) noexcept
{
    // std::sqrt already uses the branch cut along the negative real axis; only
    // the sign of zero in the imaginary part can push the result to -pi/2.
    Complex r = std::sqrt(Complex(z.real(), z.imag() == 0.0 ? 0.0 : z.imag()));
    if (r.real() == 0.0 && r.imag() < 0.0) {
        r = -r;
    }
    return r;
}

std::pair<Complex, Complex> eigenvalues2(const Matrix2C& a) noexcept
{
    const Complex mid = 0.5 * trace(a);
    const Complex half_gap = 0.5 * (a.a11() - a.a22());
    const Complex root = principal_sqrt(half_gap * half_gap + a.a12() * a.a21());
    Complex l1 = mid + root;
    Complex l2 = mid - root;
    if (l2.real() > l1.real() || (l2.real() == l1.real() && l2.imag() > l1.imag())) {
        std::swap(l1, l2);
    }
    return {l1, l2};
}

Complex rayleigh(const Matrix2C& a, const UnitVector2& x) noexcept
{
    const Complex y1 = a.a11() * x.z1() + a.a12() * x.z2();
    const Complex y2 = a.a21() * x.z1() + a.a22() * x.z2();
    return y1 * std::conj(x.z1()) + y2 * std::conj(x.z2());
}

SphereVector hopf_map(const UnitVector2& x) noexcept
{
    const Complex w = std::conj(x.z1()) * x.z2();
    return {2.0 * w.real(), 2.0 * w.imag(), std::norm(x.z2()) - std::norm(x.z1())};
}

} // namespace ellrange

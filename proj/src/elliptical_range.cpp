#include "ellrange/elliptical_range.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

namespace ellrange {

namespace {

// Entries of the traceless part B = A - (tr A / 2) Id, with b22 = -b11 exactly.
struct Traceless {
    Complex b11, b12, b21;
};

Traceless traceless_part(const Matrix2C& a) noexcept
{
    return {0.5 * (a.a11() - a.a22()), a.a12(), a.a21()};
}

double wrap_half_turn(double angle) noexcept
{
    double r = std::fmod(angle, std::numbers::pi);
    if (r < 0.0) {
        r += std::numbers::pi;
    }
    // fmod of a tiny negative angle can round up to pi itself.
    return r >= std::numbers::pi ? 0.0 : r;
}

} // namespace

double degeneracy_threshold(const Matrix2C& a) noexcept
{
    return kDegeneracyFactor * (1.0 + a.frobenius_norm());
}

Matrix2C CanonicalForm::canonical_matrix() const
{
    return {c, 2.0 * b, 0.0, -c};
}

Matrix2C CanonicalForm::reconstruct() const
{
    const Matrix2C& u = transform.unitary;
    const Matrix2C rotated = mat_mul(mat_mul(u, canonical_matrix()), adjoint(u));
    return apply_plane_transform(rotated, -transform.theta, transform.v);
}

std::string_view to_string(RangeKind kind) noexcept
{
    switch (kind) {
    case RangeKind::Point:
        return "point";
    case RangeKind::Segment:
        return "segment";
    case RangeKind::Disk:
        return "disk";
    case RangeKind::Ellipse:
        return "ellipse";
    }
    return "unknown";
}

std::array<double, 3> FactorDecomposition::apply(const SphereVector& s) const noexcept
{
    const std::array<double, 3> in{s.s1, s.s2, s.s3};
    std::array<double, 3> out{};
    for (std::size_t i = 0; i < 3; ++i) {
        double acc = 0.0;
        for (std::size_t j = 0; j < 3; ++j) {
            acc += r[i][j] * in[j];
        }
        out[i] = f[i] * acc;
    }
    return out;
}

Complex center(const Matrix2C& a) noexcept
{
    return 0.5 * trace(a);
}

SemiAxes semi_axes(const Matrix2C& a) noexcept
{
    const auto [b11, b12, b21] = traceless_part(a);

    // tr(B^* B) is the squared Frobenius norm; tr(B^2) = 2 (b11^2 + b12 b21).
    const double gram_trace = 2.0 * std::norm(b11) + std::norm(b12) + std::norm(b21);
    const double square_trace = 2.0 * std::abs(b11 * b11 + b12 * b21);
    const double sum = std::max(0.0, gram_trace + square_trace);
    if (sum == 0.0) {
        return {};
    }

    // B^* B - B B^* for B = [[b11, b12], [b21, -b11]]; Hermitian and traceless.
    const double comm_diag = std::norm(b21) - std::norm(b12);
    const Complex comm_off = 2.0 * (std::conj(b11) * b12 - b11 * std::conj(b21));
    const double comm_norm2 = 2.0 * comm_diag * comm_diag + 2.0 * std::norm(comm_off);

    const double difference = std::max(0.0, 0.5 * comm_norm2 / sum);
    const double s_plus = 0.5 * std::sqrt(sum);
    // Equal when the foci coincide; rounding may not respect that.
    return {s_plus, std::min(s_plus, 0.5 * std::sqrt(difference))};
}

CanonicalForm canonicalize(const Matrix2C& a)
{
    CanonicalForm out;
    out.transform.v = center(a);

    const auto [b11, b12, b21] = traceless_part(a);
    const Complex lambda = principal_sqrt(b11 * b11 + b12 * b21);
    out.c = std::abs(lambda);
    out.transform.theta = lambda == Complex{} ? 0.0 : -std::arg(lambda);

    const Complex rot = std::polar(1.0, out.transform.theta);
    const Matrix2C rotated(rot * b11, rot * b12, rot * b21, -rot * b11);
    if (rotated == Matrix2C::zero()) {
        return out;
    }

    // Unit eigenvector of the rotated matrix C for the eigenvalue c.
    Complex u1;
    Complex u2;
    if (out.c == 0.0) {
        // C is nilpotent: take the kernel of its larger row.
        const bool top = std::norm(rotated.a11()) + std::norm(rotated.a12()) >=
                         std::norm(rotated.a21()) + std::norm(rotated.a22());
        const Complex r1 = top ? rotated.a11() : rotated.a21();
        const Complex r2 = top ? rotated.a12() : rotated.a22();
        u1 = -r2;
        u2 = r1;
    } else {
        // (C - c Id)(C + c Id) = 0, so every column of C + c Id is an eigenvector.
        const Complex p11 = rotated.a11() + out.c;
        const Complex p22 = rotated.a22() + out.c;
        const bool left = std::norm(p11) + std::norm(rotated.a21()) >= std::norm(rotated.a12()) + std::norm(p22);
        u1 = left ? p11 : rotated.a12();
        u2 = left ? rotated.a21() : p22;
    }
    const double len = std::hypot(std::abs(u1), std::abs(u2));
    u1 /= len;
    u2 /= len;

    Matrix2C unitary(u1, -std::conj(u2), u2, std::conj(u1));
    const Matrix2C triangular = mat_mul(mat_mul(adjoint(unitary), rotated), unitary);

    // Rotate the off-diagonal entry onto the nonnegative real axis.
    const Complex beta = 0.5 * triangular.a12();
    const double phi = beta == Complex{} ? 0.0 : -0.5 * std::arg(beta);
    const Complex phase = std::polar(1.0, phi);
    unitary = mat_mul(unitary, Matrix2C::diagonal(std::conj(phase), phase));

    out.b = std::abs(beta);
    out.transform.unitary = unitary;
    return out;
}

RangeShape numerical_range(const Matrix2C& a)
{
    RangeShape shape;
    shape.center = center(a);
    std::tie(shape.focus1, shape.focus2) = eigenvalues2(a);
    const SemiAxes axes = semi_axes(a);
    shape.semi_major = axes.s_plus;
    shape.semi_minor = axes.s_minus;

    const double zero = degeneracy_threshold(a);
    const double focal_distance = std::abs(shape.focus1 - shape.focus2);
    if (shape.semi_major <= zero) {
        shape.kind = RangeKind::Point;
    } else if (shape.semi_minor <= zero) {
        shape.kind = RangeKind::Segment;
    } else if (focal_distance <= zero) {
        shape.kind = RangeKind::Disk;
    } else {
        shape.kind = RangeKind::Ellipse;
    }

    if (focal_distance > zero && shape.kind != RangeKind::Point && shape.kind != RangeKind::Disk) {
        shape.orientation = wrap_half_turn(std::arg(shape.focus1 - shape.focus2));
    }
    return shape;
}

bool contains(const RangeShape& shape, Complex z, double tol) noexcept
{
    return std::abs(z - shape.focus1) + std::abs(z - shape.focus2) <= 2.0 * shape.semi_major + tol;
}

Complex boundary_point(const RangeShape& shape, double t) noexcept
{
    const Complex local(shape.semi_major * std::cos(t), shape.semi_minor * std::sin(t));
    return shape.center + std::polar(1.0, shape.orientation) * local;
}

double ellipse_support(const RangeShape& shape, double phi) noexcept
{
    const double psi = shape.orientation - phi;
    const double offset = (std::polar(1.0, -phi) * shape.center).real();
    return offset + std::hypot(shape.semi_major * std::cos(psi), shape.semi_minor * std::sin(psi));
}

double support_value(const Matrix2C& a, double phi)
{
    const Matrix2C m = apply_plane_transform(a, -phi, 0.0);
    const double h11 = m.a11().real();
    const double h22 = m.a22().real();
    const Complex h12 = 0.5 * (m.a12() + std::conj(m.a21()));
    return 0.5 * (h11 + h22) + std::hypot(0.5 * (h11 - h22), std::abs(h12));
}

FactorDecomposition factor_decomposition(double b, double c)
{
    if (!(b >= 0.0) || !(c >= 0.0) || !std::isfinite(b) || !std::isfinite(c)) {
        throw std::invalid_argument("factor_decomposition requires finite b >= 0 and c >= 0");
    }
    FactorDecomposition out;
    const double n = std::hypot(b, c);
    out.f = {n, b, 0.0};
    // b = c = 0 leaves R free; the identity is kept.
    out.r = {{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}, {0.0, 0.0, 1.0}}};
    if (n > 0.0) {
        out.r = {{{b / n, 0.0, -c / n}, {0.0, 1.0, 0.0}, {c / n, 0.0, b / n}}};
    }
    return out;
}

} // namespace ellrange

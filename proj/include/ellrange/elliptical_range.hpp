#pragma once

#include "ellrange/algebra.hpp"

#include <array>
#include <string_view>

namespace ellrange {

/// Relative factor of the degeneracy threshold: a length l counts as zero iff
/// l <= kDegeneracyFactor * (1 + ||A||_F).
inline constexpr double kDegeneracyFactor = 1e-10;

double degeneracy_threshold(const Matrix2C& a) noexcept;

/// The map z -> e^{-i theta} (U z U^*) + v carrying the canonical range back
/// to the original one. U is unitary.
struct PlaneTransform {
    double theta = 0.0;
    Complex v{};
    Matrix2C unitary = Matrix2C::identity();
};

/**
 * Reduced parameters of A: A = e^{-i theta} U [[c, 2b], [0, -c]] U^* + v Id
 * with b, c >= 0.
 */
struct CanonicalForm {
    double b = 0.0;
    double c = 0.0;
    PlaneTransform transform;

    /// [[c, 2b], [0, -c]].
    Matrix2C canonical_matrix() const;
    /// Undo the recorded transform on the canonical matrix.
    Matrix2C reconstruct() const;
};

enum class RangeKind { Point, Segment, Disk, Ellipse };

std::string_view to_string(RangeKind kind) noexcept;

/**
 * The numerical range W(A) as a filled, possibly degenerate ellipse.
 *
 * orientation is the direction of the major axis in [0, pi); it is 0 when
 * the foci coincide.
 */
struct RangeShape {
    Complex center{};
    Complex focus1{};
    Complex focus2{};
    double semi_major = 0.0;
    double semi_minor = 0.0;
    double orientation = 0.0;
    RangeKind kind = RangeKind::Point;
};

struct SemiAxes {
    double s_plus = 0.0;
    double s_minus = 0.0;
};

/// The diagonal factor and orthogonal rotation relating the Hopf sphere to
/// the canonical range: (Re, Im, 0) of <Ax, x> = F R hopf_map(x).
struct FactorDecomposition {
    std::array<double, 3> f{};
    std::array<std::array<double, 3>, 3> r{};

    std::array<double, 3> apply(const SphereVector& s) const noexcept;
};

Complex center(const Matrix2C& a) noexcept;

/**
 * Closed-form semi-axes of W(A) with B = A - (tr A / 2) Id:
 *
 *   s_plus  = sqrt(tr(B^* B) + |tr(B^2)|) / 2
 *   s_minus = sqrt(tr(B^* B) - |tr(B^2)|) / 2
 *
 * s_minus is evaluated through the identity
 *   tr(B^* B)^2 - |tr(B^2)|^2 = ||B^* B - B B^*||_F^2 / 2,
 * so the difference under the root is never formed by subtraction and
 * normal matrices give s_minus at rounding level instead of sqrt(eps).
 */
SemiAxes semi_axes(const Matrix2C& a) noexcept;

CanonicalForm canonicalize(const Matrix2C& a);

RangeShape numerical_range(const Matrix2C& a);

/// Focal-sum membership: |z - f1| + |z - f2| <= 2 semi_major + tol.
bool contains(const RangeShape& shape, Complex z, double tol) noexcept;

Complex boundary_point(const RangeShape& shape, double t) noexcept;

/// max Re(e^{-i phi} z) over the ellipse, from its axes and orientation.
double ellipse_support(const RangeShape& shape, double phi) noexcept;

/// Largest eigenvalue of the Hermitian part of e^{-i phi} A.
double support_value(const Matrix2C& a, double phi);

FactorDecomposition factor_decomposition(double b, double c);

} // namespace ellrange

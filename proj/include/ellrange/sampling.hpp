#pragma once

#include "ellrange/algebra.hpp"
#include "ellrange/elliptical_range.hpp"

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

namespace ellrange {

/// Number of angular sectors (or axial bins for segments) used by boundary_gap.
inline constexpr std::size_t kCoverageBins = 256;

/// Samples are drawn in fixed blocks, each with its own generator state, so
/// the output depends only on (n, seed) and never on the worker count.
inline constexpr std::size_t kSampleBlock = 4096;

struct SampleReport {
    std::size_t n_samples = 0;
    double max_violation = 0.0;
    double boundary_gap = 0.0;
    std::uint64_t seed = 0;

    friend bool operator==(const SampleReport&, const SampleReport&) = default;
};

/**
 * n unit vectors uniform on the unit sphere of complex 2-space.
 *
 * Each vector is four standard normals (Box-Muller on 53-bit uniforms from
 * std::mt19937_64) divided by their Euclidean norm. Block k of kSampleBlock
 * vectors uses a generator seeded with std::seed_seq{seed lo, seed hi, k lo, k hi}.
 * workers > 1 splits blocks across threads with an identical result.
 */
std::vector<UnitVector2> sample_unit_vectors(std::size_t n, std::uint64_t seed, unsigned workers = 1);

/// rayleigh(A, x) for every x of sample_unit_vectors(n, seed).
std::vector<Complex> sample_range(const Matrix2C& a, std::size_t n, std::uint64_t seed, unsigned workers = 1);

/**
 * Largest distance between the outermost samples and the analytic boundary.
 *
 * Point: max |z - center|. Segment: the larger of the transverse scatter and
 * the longitudinal coverage gap over kCoverageBins bins along the axis.
 * Disk, Ellipse: per angular sector around the center, the boundary radius in
 * the direction of the farthest sample minus that sample's radius.
 */
double boundary_gap(const RangeShape& shape, std::span<const Complex> samples);

/// Throws std::invalid_argument when n == 0.
SampleReport verify_inclusion(const Matrix2C& a, std::size_t n, std::uint64_t seed, unsigned workers = 1);

/// Hull vertices in counterclockwise order starting from the leftmost (then lowest)
/// point; collinear points dropped. Inputs of at most two points are returned as-is.
std::vector<Complex> convex_hull_2d(std::span<const Complex> points);

/// Signed shoelace area, positive for counterclockwise polygons.
double polygon_area(std::span<const Complex> polygon) noexcept;

} // namespace ellrange

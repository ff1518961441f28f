#include "ellrange/sampling.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <limits>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>

namespace ellrange {

namespace {

class NormalSource {
public:
    NormalSource(std::uint64_t seed, std::uint64_t block)
    {
        std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                          static_cast<std::uint32_t>(block), static_cast<std::uint32_t>(block >> 32)};
        engine_.seed(seq);
    }

    /// Two independent standard normals (Box-Muller).
    std::pair<double, double> pair()
    {
        const double u1 = 1.0 - uniform(); // (0, 1]
        const double u2 = uniform();
        const double radius = std::sqrt(-2.0 * std::log(u1));
        const double angle = 2.0 * std::numbers::pi * u2;
        return {radius * std::cos(angle), radius * std::sin(angle)};
    }

private:
    double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

    std::mt19937_64 engine_;
};

UnitVector2 draw_unit_vector(NormalSource& normals)
{
    for (;;) {
        const auto [x1, y1] = normals.pair();
        const auto [x2, y2] = normals.pair();
        const double len = std::sqrt(x1 * x1 + y1 * y1 + x2 * x2 + y2 * y2);
        if (len > 0.0) {
            return UnitVector2::make({x1 / len, y1 / len}, {x2 / len, y2 / len});
        }
    }
}

template <typename Fn>
void for_each_block(std::size_t n, unsigned workers, Fn&& fill_block)
{
    const std::size_t blocks = (n + kSampleBlock - 1) / kSampleBlock;
    const unsigned threads = static_cast<unsigned>(std::min<std::size_t>(std::max(workers, 1u), blocks));
    if (threads <= 1) {
        for (std::size_t k = 0; k < blocks; ++k) {
            fill_block(k);
        }
        return;
    }
    std::vector<std::jthread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) {
        pool.emplace_back([&, w] {
            for (std::size_t k = w; k < blocks; k += threads) {
                fill_block(k);
            }
        });
    }
}

double cross(Complex o, Complex a, Complex b) noexcept
{
    return (a.real() - o.real()) * (b.imag() - o.imag()) - (a.imag() - o.imag()) * (b.real() - o.real());
}

double segment_gap(const RangeShape& shape, std::span<const Complex> samples)
{
    const Complex unrotate = std::polar(1.0, -shape.orientation);
    const double half = shape.semi_major;

    std::vector<double> along;
    along.reserve(samples.size());
    double transverse = 0.0;
    for (const Complex z : samples) {
        const Complex w = unrotate * (z - shape.center);
        along.push_back(w.real());
        transverse = std::max(transverse, std::abs(w.imag()));
    }
    std::sort(along.begin(), along.end());

    double gap = std::max({transverse, half - along.back(), half + along.front(), 0.0});
    const double width = 2.0 * half / static_cast<double>(kCoverageBins);
    for (std::size_t k = 0; k < kCoverageBins; ++k) {
        const double mid = -half + (static_cast<double>(k) + 0.5) * width;
        const auto it = std::lower_bound(along.begin(), along.end(), mid);
        double nearest = std::numeric_limits<double>::infinity();
        if (it != along.end()) {
            nearest = *it - mid;
        }
        if (it != along.begin()) {
            nearest = std::min(nearest, mid - *std::prev(it));
        }
        // Only a bin with no sample of its own contributes.
        if (nearest > 0.5 * width) {
            gap = std::max(gap, nearest);
        }
    }
    return gap;
}

double angular_gap(const RangeShape& shape, std::span<const Complex> samples)
{
    const Complex unrotate = std::polar(1.0, -shape.orientation);
    const double a = shape.semi_major;
    const double b = shape.semi_minor;

    struct Farthest {
        double radius = -1.0;
        double angle = 0.0;
    };
    std::vector<Farthest> bins(kCoverageBins);
    for (const Complex z : samples) {
        const Complex w = unrotate * (z - shape.center);
        const double angle = std::arg(w);
        auto bin = static_cast<std::size_t>((angle + std::numbers::pi) / (2.0 * std::numbers::pi) *
                                            static_cast<double>(kCoverageBins));
        bin = std::min(bin, kCoverageBins - 1);
        const double radius = std::abs(w);
        if (radius > bins[bin].radius) {
            bins[bin] = {radius, angle};
        }
    }

    double gap = 0.0;
    for (const Farthest& f : bins) {
        if (f.radius < 0.0) {
            continue;
        }
        const double boundary = a * b / std::hypot(b * std::cos(f.angle), a * std::sin(f.angle));
        gap = std::max(gap, boundary - f.radius);
    }
    return gap;
}

} // namespace

std::vector<UnitVector2> sample_unit_vectors(std::size_t n, std::uint64_t seed, unsigned workers)
{
    std::vector<UnitVector2> out(n, UnitVector2::e1());
    for_each_block(n, workers, [&](std::size_t block) {
        NormalSource normals(seed, block);
        const std::size_t end = std::min(n, (block + 1) * kSampleBlock);
        for (std::size_t i = block * kSampleBlock; i < end; ++i) {
            out[i] = draw_unit_vector(normals);
        }
    });
    return out;
}

std::vector<Complex> sample_range(const Matrix2C& a, std::size_t n, std::uint64_t seed, unsigned workers)
{
    const std::vector<UnitVector2> xs = sample_unit_vectors(n, seed, workers);
    std::vector<Complex> out;
    out.reserve(n);
    for (const auto& x : xs) {
        out.push_back(rayleigh(a, x));
    }
    return out;
}

double boundary_gap(const RangeShape& shape, std::span<const Complex> samples)
{
    if (samples.empty()) {
        return 0.0;
    }
    switch (shape.kind) {
    case RangeKind::Point: {
        double gap = 0.0;
        for (const Complex z : samples) {
            gap = std::max(gap, std::abs(z - shape.center));
        }
        return gap;
    }
    case RangeKind::Segment:
        return segment_gap(shape, samples);
    case RangeKind::Disk:
    case RangeKind::Ellipse:
        return angular_gap(shape, samples);
    }
    return 0.0;
}

SampleReport verify_inclusion(const Matrix2C& a, std::size_t n, std::uint64_t seed, unsigned workers)
{
    if (n == 0) {
        throw std::invalid_argument("verify_inclusion needs at least one sample");
    }
    const RangeShape shape = numerical_range(a);
    const std::vector<Complex> samples = sample_range(a, n, seed, workers);

    SampleReport report;
    report.n_samples = n;
    report.seed = seed;
    for (const Complex z : samples) {
        const double excess = std::abs(z - shape.focus1) + std::abs(z - shape.focus2) - 2.0 * shape.semi_major;
        report.max_violation = std::max(report.max_violation, excess);
    }
    report.boundary_gap = boundary_gap(shape, samples);
    return report;
}

std::vector<Complex> convex_hull_2d(std::span<const Complex> points)
{
    if (points.size() <= 2) {
        return {points.begin(), points.end()};
    }
    std::vector<Complex> sorted(points.begin(), points.end());
    const auto less = [](Complex p, Complex q) {
        return p.real() < q.real() || (p.real() == q.real() && p.imag() < q.imag());
    };
    std::sort(sorted.begin(), sorted.end(), less);
    sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
    if (sorted.size() <= 2) {
        return sorted;
    }

    // Andrew's monotone chain.
    std::vector<Complex> hull(2 * sorted.size());
    std::size_t k = 0;
    for (const Complex p : sorted) {
        while (k >= 2 && cross(hull[k - 2], hull[k - 1], p) <= 0.0) {
            --k;
        }
        hull[k++] = p;
    }
    const std::size_t lower = k + 1;
    for (auto it = sorted.rbegin() + 1; it != sorted.rend(); ++it) {
        while (k >= lower && cross(hull[k - 2], hull[k - 1], *it) <= 0.0) {
            --k;
        }
        hull[k++] = *it;
    }
    hull.resize(k - 1);
    return hull;
}

double polygon_area(std::span<const Complex> polygon) noexcept
{
    if (polygon.size() < 3) {
        return 0.0;
    }
    double twice = 0.0;
    for (std::size_t i = 0; i < polygon.size(); ++i) {
        const Complex p = polygon[i];
        const Complex q = polygon[(i + 1) % polygon.size()];
        twice += p.real() * q.imag() - q.real() * p.imag();
    }
    return 0.5 * twice;
}

} // namespace ellrange

#include "ellrange/elliptical_range.hpp"
#include "ellrange/sampling.hpp"

#include <pybind11/complex.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <array>

namespace py = pybind11;
using namespace ellrange;

namespace {

using Rows = std::array<std::array<Complex, 2>, 2>;

Matrix2C from_rows(const Rows& rows)
{
    return {rows[0][0], rows[0][1], rows[1][0], rows[1][1]};
}

Rows to_rows(const Matrix2C& m)
{
    return {{{m.a11(), m.a12()}, {m.a21(), m.a22()}}};
}

} // namespace

PYBIND11_MODULE(_core, m)
{
    m.doc() = "Exact numerical range of 2x2 complex matrices";

    py::register_exception<std::invalid_argument>(m, "InputError", PyExc_ValueError);

    py::enum_<RangeKind>(m, "RangeKind")
        .value("Point", RangeKind::Point)
        .value("Segment", RangeKind::Segment)
        .value("Disk", RangeKind::Disk)
        .value("Ellipse", RangeKind::Ellipse);

    py::class_<RangeShape>(m, "RangeShape")
        .def_readonly("center", &RangeShape::center)
        .def_readonly("focus1", &RangeShape::focus1)
        .def_readonly("focus2", &RangeShape::focus2)
        .def_readonly("semi_major", &RangeShape::semi_major)
        .def_readonly("semi_minor", &RangeShape::semi_minor)
        .def_readonly("orientation", &RangeShape::orientation)
        .def_readonly("kind", &RangeShape::kind)
        .def("contains", [](const RangeShape& s, Complex z, double tol) { return contains(s, z, tol); },
             py::arg("z"), py::arg("tol") = 0.0)
        .def("boundary_point", [](const RangeShape& s, double t) { return boundary_point(s, t); }, py::arg("t"))
        .def("__repr__", [](const RangeShape& s) {
            return "RangeShape(kind=" + std::string(to_string(s.kind)) +
                   ", semi_major=" + std::to_string(s.semi_major) + ", semi_minor=" + std::to_string(s.semi_minor) +
                   ")";
        });

    py::class_<CanonicalForm>(m, "CanonicalForm")
        .def_readonly("b", &CanonicalForm::b)
        .def_readonly("c", &CanonicalForm::c)
        .def_property_readonly("theta", [](const CanonicalForm& f) { return f.transform.theta; })
        .def_property_readonly("v", [](const CanonicalForm& f) { return f.transform.v; })
        .def_property_readonly("unitary", [](const CanonicalForm& f) { return to_rows(f.transform.unitary); })
        .def("reconstruct", [](const CanonicalForm& f) { return to_rows(f.reconstruct()); });

    py::class_<SampleReport>(m, "SampleReport")
        .def_readonly("n_samples", &SampleReport::n_samples)
        .def_readonly("max_violation", &SampleReport::max_violation)
        .def_readonly("boundary_gap", &SampleReport::boundary_gap)
        .def_readonly("seed", &SampleReport::seed);

    m.def("eigenvalues", [](const Rows& a) {
        const auto [l1, l2] = eigenvalues2(from_rows(a));
        return std::pair{l1, l2};
    });
    m.def("rayleigh", [](const Rows& a, Complex z1, Complex z2) {
        return rayleigh(from_rows(a), UnitVector2::make(z1, z2));
    });
    m.def("hopf_map", [](Complex z1, Complex z2) {
        const SphereVector s = hopf_map(UnitVector2::make(z1, z2));
        return std::array<double, 3>{s.s1, s.s2, s.s3};
    });
    m.def("semi_axes", [](const Rows& a) {
        const SemiAxes s = semi_axes(from_rows(a));
        return std::pair{s.s_plus, s.s_minus};
    });
    m.def("canonicalize", [](const Rows& a) { return canonicalize(from_rows(a)); });
    m.def("numerical_range", [](const Rows& a) { return numerical_range(from_rows(a)); });
    m.def("support_value", [](const Rows& a, double phi) { return support_value(from_rows(a), phi); },
          py::arg("a"), py::arg("phi"));
    m.def("factor_decomposition", [](double b, double c) {
        const FactorDecomposition d = factor_decomposition(b, c);
        return std::pair{d.f, d.r};
    });
    m.def("sample_range",
          [](const Rows& a, std::size_t n, std::uint64_t seed) { return sample_range(from_rows(a), n, seed); },
          py::arg("a"), py::arg("n"), py::arg("seed"));
    m.def("verify_inclusion",
          [](const Rows& a, std::size_t n, std::uint64_t seed) { return verify_inclusion(from_rows(a), n, seed); },
          py::arg("a"), py::arg("n"), py::arg("seed"));
    m.def("convex_hull", [](const std::vector<Complex>& points) { return convex_hull_2d(points); });
}

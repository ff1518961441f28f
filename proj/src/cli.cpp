#include "ellrange/cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <numbers>
#include <optional>
#include <sstream>
#include <thread>

namespace ellrange::cli {

namespace {

using nlohmann::json;

std::string_view trim(std::string_view s)
{
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string_view::npos) {
        return {};
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

std::vector<std::string_view> split_commas(std::string_view s)
{
    std::vector<std::string_view> parts;
    std::size_t start = 0;
    for (;;) {
        const auto comma = s.find(',', start);
        parts.push_back(trim(s.substr(start, comma == std::string_view::npos ? comma : comma - start)));
        if (comma == std::string_view::npos) {
            return parts;
        }
        start = comma + 1;
    }
}

double parse_real(std::string_view token)
{
    double value = 0.0;
    const char* begin = token.data();
    const char* end = token.data() + token.size();
    // from_chars does not take a leading '+'.
    if (begin != end && *begin == '+') {
        ++begin;
    }
    const auto [ptr, ec] = std::from_chars(begin, end, value);
    if (ec == std::errc::result_out_of_range) {
        throw InputError("non-finite number: '" + std::string(token) + "'");
    }
    if (ec != std::errc{} || ptr != end || token.empty()) {
        throw InputError("not a number: '" + std::string(token) + "'");
    }
    if (!std::isfinite(value)) {
        throw InputError("non-finite number: '" + std::string(token) + "'");
    }
    return value;
}

Matrix2C parse_flat(std::string_view payload)
{
    const auto tokens = split_commas(payload);
    if (tokens.size() != 8) {
        throw InputError("arity error: expected 8 comma-separated reals, got " + std::to_string(tokens.size()) +
                         " in '" + std::string(payload) + "'");
    }
    std::array<double, 8> v{};
    for (std::size_t k = 0; k < v.size(); ++k) {
        v[k] = parse_real(tokens[k]);
    }
    return {{v[0], v[1]}, {v[2], v[3]}, {v[4], v[5]}, {v[6], v[7]}};
}

double json_real(const json& entry, const char* key, const std::string& where)
{
    const auto it = entry.find(key);
    if (it == entry.end()) {
        throw InputError("malformed JSON: " + where + " has no \"" + key + "\" field: " + entry.dump());
    }
    if (!it->is_number()) {
        throw InputError("malformed JSON: " + where + "." + key + " is not a number: " + it->dump());
    }
    const double value = it->get<double>();
    if (!std::isfinite(value)) {
        throw InputError("non-finite number: " + where + "." + key);
    }
    return value;
}

Matrix2C parse_json(std::string_view payload)
{
    json doc;
    try {
        doc = json::parse(payload);
    } catch (const json::parse_error& e) {
        throw InputError(std::string("malformed JSON: ") + e.what());
    } catch (const json::out_of_range& e) {
        throw InputError(std::string("non-finite number: ") + e.what());
    }
    if (!doc.is_array()) {
        throw InputError("malformed JSON: expected an array of rows, got " + doc.dump());
    }
    if (doc.size() != 2) {
        throw InputError("arity error: expected 2 rows, got " + std::to_string(doc.size()));
    }
    std::array<Complex, 4> entries{};
    for (std::size_t i = 0; i < 2; ++i) {
        const json& row = doc[i];
        if (!row.is_array()) {
            throw InputError("malformed JSON: row " + std::to_string(i) + " is not an array: " + row.dump());
        }
        if (row.size() != 2) {
            throw InputError("arity error: row " + std::to_string(i) + " has " + std::to_string(row.size()) +
                             " entries, expected 2");
        }
        for (std::size_t j = 0; j < 2; ++j) {
            const std::string where = "[" + std::to_string(i) + "][" + std::to_string(j) + "]";
            const json& entry = row[j];
            if (!entry.is_object()) {
                throw InputError("malformed JSON: entry " + where + " is not an object: " + entry.dump());
            }
            entries[2 * i + j] = {json_real(entry, "re", where), json_real(entry, "im", where)};
        }
    }
    return {entries[0], entries[1], entries[2], entries[3]};
}

std::string read_all(std::istream& in)
{
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

std::string complex_json(Complex z)
{
    return "{\"re\":" + format_number(z.real()) + ",\"im\":" + format_number(z.imag()) + "}";
}

Complex parse_point(std::string_view text)
{
    const auto parts = split_commas(text);
    if (parts.size() != 2) {
        throw InputError("arity error: --point expects re,im, got '" + std::string(text) + "'");
    }
    return {parse_real(parts[0]), parse_real(parts[1])};
}

unsigned default_workers()
{
    return std::clamp(std::thread::hardware_concurrency(), 1u, 8u);
}

struct Settings {
    std::optional<std::string> matrix;
    std::optional<std::string> file;
    bool use_stdin = false;
    std::string format = "json";

    std::string point;
    std::optional<double> tol;
    std::size_t boundary_points = 64;
    std::size_t sample_count = 1000;
    std::size_t verify_count = 100000;
    std::uint64_t seed = 1;
};

Matrix2C load_matrix(const Settings& s, std::istream& in)
{
    const int sources = (s.matrix ? 1 : 0) + (s.file ? 1 : 0) + (s.use_stdin ? 1 : 0);
    if (sources == 0) {
        throw InputError("no matrix given; use --matrix, --file or --stdin");
    }
    if (sources > 1) {
        throw InputError("give exactly one of --matrix, --file, --stdin");
    }
    MatrixInput input;
    if (s.matrix) {
        input = {MatrixSource::InlineFlag, *s.matrix};
    } else if (s.file) {
        std::ifstream file(*s.file);
        if (!file) {
            throw InputError("cannot read file '" + *s.file + "'");
        }
        input = {MatrixSource::FilePath, read_all(file)};
    } else {
        input = {MatrixSource::StandardInput, read_all(in)};
    }
    return parse_matrix(input);
}

Format parse_format(const std::string& name)
{
    return name == "csv" ? Format::Csv : Format::Json;
}

void diagnose(std::ostream& err, const RunOptions& options, std::string_view message)
{
    if (options.color) {
        err << "\x1b[31merror:\x1b[0m " << message << '\n';
    } else {
        err << "error: " << message << '\n';
    }
}

int cmd_contains(const Matrix2C& a, const Settings& s, std::ostream& out)
{
    const Complex z = parse_point(s.point);
    const double tol = s.tol.value_or(1e-9 * (1.0 + a.frobenius_norm()));
    if (!(tol >= 0.0) || !std::isfinite(tol)) {
        throw InputError("--tol must be a finite number >= 0, got " + format_number(tol));
    }
    const bool inside = contains(numerical_range(a), z, tol);
    out << (inside ? "inside" : "outside") << '\n';
    return inside ? kExitOk : kExitNegative;
}

int cmd_verify(const Matrix2C& a, const Settings& s, std::ostream& out, std::ostream& err, const RunOptions& options)
{
    if (s.verify_count == 0) {
        throw InputError("--n must be at least 1 for verify");
    }
    const SampleReport report = verify_inclusion(a, s.verify_count, s.seed, default_workers());

    const double scale = 1.0 + a.frobenius_norm();
    const double violation_tol = 1e-9 * scale;
    const double axes_tol = kDegeneracyFactor * scale;
    const SemiAxes axes = semi_axes(a);
    const CanonicalForm canonical = canonicalize(a);
    const double major_delta = std::abs(axes.s_plus - std::hypot(canonical.b, canonical.c));
    const double minor_delta = std::abs(axes.s_minus - canonical.b);

    std::string failure;
    if (report.max_violation > violation_tol) {
        failure = "max_violation = " + format_number(report.max_violation) + " exceeds " + format_number(violation_tol);
    } else if (major_delta > axes_tol) {
        failure = "two-path semi_major delta = " + format_number(major_delta) + " exceeds " + format_number(axes_tol);
    } else if (minor_delta > axes_tol) {
        failure = "two-path semi_minor delta = " + format_number(minor_delta) + " exceeds " + format_number(axes_tol);
    }

    out << "{\"schema\":1,\"n_samples\":" << report.n_samples << ",\"seed\":" << report.seed
        << ",\"max_violation\":" << format_number(report.max_violation)
        << ",\"boundary_gap\":" << format_number(report.boundary_gap)
        << ",\"violation_tolerance\":" << format_number(violation_tol)
        << ",\"two_path\":{\"semi_major_delta\":" << format_number(major_delta)
        << ",\"semi_minor_delta\":" << format_number(minor_delta) << ",\"tolerance\":" << format_number(axes_tol)
        << "},\"passed\":" << (failure.empty() ? "true" : "false") << "}\n";

    if (!failure.empty()) {
        diagnose(err, options, "verification failed: " + failure);
        return kExitNegative;
    }
    return kExitOk;
}

} // namespace

Matrix2C parse_matrix(const MatrixInput& input)
{
    const std::string_view payload = trim(input.payload);
    if (payload.empty()) {
        throw InputError("empty matrix payload");
    }
    return payload.front() == '[' ? parse_json(payload) : parse_flat(payload);
}

std::string format_number(double value)
{
    if (value == 0.0) {
        return "0";
    }
    char buffer[40];
    std::snprintf(buffer, sizeof buffer, "%.17g", value);
    return buffer;
}

std::string render_range(const RangeShape& shape, Format format)
{
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "kind,center_re,center_im,focus1_re,focus1_im,focus2_re,focus2_im,semi_major,semi_minor,orientation\n"
            << to_string(shape.kind) << ',' << format_number(shape.center.real()) << ','
            << format_number(shape.center.imag()) << ',' << format_number(shape.focus1.real()) << ','
            << format_number(shape.focus1.imag()) << ',' << format_number(shape.focus2.real()) << ','
            << format_number(shape.focus2.imag()) << ',' << format_number(shape.semi_major) << ','
            << format_number(shape.semi_minor) << ',' << format_number(shape.orientation) << '\n';
        return out.str();
    }
    out << "{\"schema\":1,\"kind\":\"" << to_string(shape.kind) << "\",\"center\":" << complex_json(shape.center)
        << ",\"foci\":[" << complex_json(shape.focus1) << ',' << complex_json(shape.focus2)
        << "],\"semi_major\":" << format_number(shape.semi_major)
        << ",\"semi_minor\":" << format_number(shape.semi_minor)
        << ",\"orientation\":" << format_number(shape.orientation) << "}\n";
    return out.str();
}

std::string render_boundary(const RangeShape& shape, std::size_t points, Format format)
{
    if (points == 0) {
        throw InputError("--points must be at least 1");
    }
    std::ostringstream out;
    out << (format == Format::Csv ? "t,re,im\n" : "{\"schema\":1,\"points\":[");
    for (std::size_t k = 0; k < points; ++k) {
        const double t = 2.0 * std::numbers::pi * static_cast<double>(k) / static_cast<double>(points);
        const Complex z = boundary_point(shape, t);
        if (format == Format::Csv) {
            out << format_number(t) << ',' << format_number(z.real()) << ',' << format_number(z.imag()) << '\n';
        } else {
            out << (k == 0 ? "" : ",") << "{\"t\":" << format_number(t) << ",\"re\":" << format_number(z.real())
                << ",\"im\":" << format_number(z.imag()) << '}';
        }
    }
    if (format == Format::Json) {
        out << "]}\n";
    }
    return out.str();
}

std::string render_samples(std::span<const Complex> samples, std::uint64_t seed, Format format)
{
    std::ostringstream out;
    if (format == Format::Csv) {
        out << "# schema=1 seed=" << seed << " n=" << samples.size() << "\nre,im\n";
        for (const Complex z : samples) {
            out << format_number(z.real()) << ',' << format_number(z.imag()) << '\n';
        }
        return out.str();
    }
    out << "{\"schema\":1,\"seed\":" << seed << ",\"n\":" << samples.size() << ",\"points\":[";
    for (std::size_t k = 0; k < samples.size(); ++k) {
        out << (k == 0 ? "" : ",") << complex_json(samples[k]);
    }
    out << "]}\n";
    return out.str();
}

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        RunOptions options)
{
    Settings s;
    CLI::App app{"Numerical range of 2x2 complex matrices", "ellrange"};
    app.fallthrough();
    app.require_subcommand(1);
    app.add_option("--matrix", s.matrix, "Matrix as 8 comma-separated reals or JSON");
    app.add_option("--file", s.file, "Read the matrix from a file");
    app.add_flag("--stdin", s.use_stdin, "Read the matrix from standard input");
    app.add_option("--format", s.format, "Output format")->check(CLI::IsMember({"json", "csv"}));

    auto* range = app.add_subcommand("range", "Emit the elliptical range");
    auto* contains_cmd = app.add_subcommand("contains", "Test whether a point lies in the range");
    contains_cmd->add_option("--point", s.point, "Point as re,im")->required();
    contains_cmd->add_option("--tol", s.tol, "Absolute tolerance (default 1e-9 (1 + ||A||_F))");
    auto* boundary = app.add_subcommand("boundary", "Emit points on the boundary ellipse");
    boundary->add_option("--points", s.boundary_points, "Number of boundary points");
    auto* sample = app.add_subcommand("sample", "Emit Rayleigh quotients of random unit vectors");
    sample->add_option("--n", s.sample_count, "Number of samples");
    sample->add_option("--seed", s.seed, "Generator seed");
    auto* verify = app.add_subcommand("verify", "Check the closed form against sampling");
    verify->add_option("--n", s.verify_count, "Number of samples");
    verify->add_option("--seed", s.seed, "Generator seed");

    std::vector<const char*> argv{"ellrange"};
    for (const auto& a : args) {
        argv.push_back(a.c_str());
    }
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitInputError;
    }

    try {
        const Matrix2C a = load_matrix(s, in);
        const Format format = parse_format(s.format);
        if (range->parsed()) {
            out << render_range(numerical_range(a), format);
        } else if (contains_cmd->parsed()) {
            return cmd_contains(a, s, out);
        } else if (boundary->parsed()) {
            out << render_boundary(numerical_range(a), s.boundary_points, format);
        } else if (sample->parsed()) {
            out << render_samples(sample_range(a, s.sample_count, s.seed, default_workers()), s.seed, format);
        } else if (verify->parsed()) {
            return cmd_verify(a, s, out, err, options);
        }
    } catch (const InputError& e) {
        diagnose(err, options, e.what());
        return kExitInputError;
    } catch (const std::invalid_argument& e) {
        diagnose(err, options, e.what());
        return kExitInputError;
    }
    return kExitOk;
}

} // namespace ellrange::cli

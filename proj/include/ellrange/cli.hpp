#pragma once

#include "ellrange/algebra.hpp"
#include "ellrange/elliptical_range.hpp"
#include "ellrange/sampling.hpp"

#include <iosfwd>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ellrange::cli {

/// Process exit statuses. 0 success or "inside", 1 a semantic negative,
/// 2 any input error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitNegative = 1;
inline constexpr int kExitInputError = 2;

enum class MatrixSource { InlineFlag, FilePath, StandardInput };

struct MatrixInput {
    MatrixSource source = MatrixSource::InlineFlag;
    std::string payload;
};

enum class Format { Json, Csv };

/// Raised for anything the user typed wrong; maps to kExitInputError.
class InputError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

/**
 * Parses a payload holding either
 *   JSON  [[{"re":..,"im":..},{..}],[{..},{..}]]
 *   flat  a11re,a11im,a12re,a12im,a21re,a21im,a22re,a22im
 * Payloads starting with '[' are JSON. Throws InputError naming the offending
 * token for malformed JSON, wrong arity, unparsable or non-finite numbers.
 */
Matrix2C parse_matrix(const MatrixInput& input);

/// 17 significant digits, lowercase exponent, -0 printed as 0.
std::string format_number(double value);

std::string render_range(const RangeShape& shape, Format format);
std::string render_boundary(const RangeShape& shape, std::size_t points, Format format);
std::string render_samples(std::span<const Complex> samples, std::uint64_t seed, Format format);

struct RunOptions {
    /// Color the "error:" prefix of diagnostics.
    bool color = false;
};

/// Runs the command line (args excludes the program name) and returns the exit status.
int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err,
        RunOptions options = {});

} // namespace ellrange::cli

#pragma once

#include <stdexcept>
#include <string>

namespace tda {

// Every failure the library can signal, by name. The CLI maps these onto
// process exit codes (see main.cpp); library callers catch tda::error.
enum class errc {
    duplicate_vertex_in_simplex,
    sub_not_contained,
    not_an_inclusion,
    basis_mismatch,
    dimension_too_high,
    level_hits_vertex,
    index_out_of_range,
    shape_mismatch,
    not_injective,
    too_large,
    paths_not_connected,
    malformed_ep_interval,
    malformed_interval,
    degree_not_normalized,
    unsupported_conversion,
    flavor_mismatch,
    missing_coordinates,
    missing_values,
    missing_zigzag,
    parse_error,
};

inline const char* errc_name(errc c) {
    switch (c) {
        case errc::duplicate_vertex_in_simplex: return "DuplicateVertexInSimplex";
        case errc::sub_not_contained: return "SubNotContained";
        case errc::not_an_inclusion: return "NotAnInclusion";
        case errc::basis_mismatch: return "BasisMismatch";
        case errc::dimension_too_high: return "DimensionTooHigh";
        case errc::level_hits_vertex: return "LevelHitsVertex";
        case errc::index_out_of_range: return "IndexOutOfRange";
        case errc::shape_mismatch: return "ShapeMismatch";
        case errc::not_injective: return "NotInjective";
        case errc::too_large: return "TooLarge";
        case errc::paths_not_connected: return "PathsNotConnected";
        case errc::malformed_ep_interval: return "MalformedEPInterval";
        case errc::malformed_interval: return "MalformedInterval";
        case errc::degree_not_normalized: return "DegreeNotNormalized";
        case errc::unsupported_conversion: return "UnsupportedConversion";
        case errc::flavor_mismatch: return "FlavorMismatch";
        case errc::missing_coordinates: return "MissingCoordinates";
        case errc::missing_values: return "MissingValues";
        case errc::missing_zigzag: return "MissingZigzag";
        case errc::parse_error: return "ParseError";
    }
    return "UnknownError";
}

struct error : std::runtime_error {
    errc code;
    error(errc c, const std::string& what)
        : std::runtime_error(std::string(errc_name(c)) + ": " + what), code(c) {}
};

[[noreturn]] inline void fail(errc c, const std::string& what) { throw error(c, what); }

// Input-format failure with a source position for CLI diagnostics.
struct parse_failure : error {
    long line, col;
    parse_failure(long line_, long col_, const std::string& what)
        : error(errc::parse_error,
                "line " + std::to_string(line_) + ", col " + std::to_string(col_) + ": " + what),
          line(line_), col(col_) {}
};

}  // namespace tda

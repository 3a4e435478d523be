#pragma once

#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "tda/barcode.hpp"
#include "tda/errors.hpp"

// ---------------------------------------------------------------------------
// The symbolic strip: a band of the plane tessellated into diamond-shaped
// copies of a fundamental domain, one per degree, each cut by the chart
// barriers into four triangular faces.  A point is stored by the data that
// the interval bijection reads off: (degree, face, a, b).
//
//   face  level pair                     extracted interval
//   S     ([a, b], {})                   closed  [a, b]     a <= b finite
//   W     ([a, inf), [b, inf))           half    [a, b)     b may be +inf
//   E     ((-inf, b], (-inf, a])         half    (a, b]     a may be -inf
//   N     (R, R \ (a, b))                open    (a, b)     +-inf allowed
//
// The step map T carries each copy onto the next, preserving the face letter
// and the underlying endpoints and raising the degree by one.
//
// Metric: value coordinates are read through a tangent chart per face copy;
// two points at finite distance either share a face and degree (endpoint
// sup-distance) or sit in the two triangles glued along a shared copy of the
// injected real line — an N point one degree above an S point — where
// crossing exchanges the endpoint roles: max(|a_N - b_S|, |b_N - a_S|).
// Everything else is infinitely far.  The boundary of the band touches the
// half-open faces only: an E or W point can retire to the boundary at half
// its width, S and N points never can.
// ---------------------------------------------------------------------------

namespace tda {

enum class strip_face : std::uint8_t { N, E, S, W };

inline const char* strip_face_name(strip_face f) {
    switch (f) {
        case strip_face::N: return "N";
        case strip_face::E: return "E";
        case strip_face::S: return "S";
        case strip_face::W: return "W";
    }
    return "?";
}

struct strip_point {
    int degree = 0;
    strip_face face = strip_face::S;
    value_t a = 0, b = 0;

    auto key() const { return std::make_tuple(degree, static_cast<int>(face), a, b); }
    bool operator==(const strip_point& o) const { return key() == o.key(); }
    bool operator<(const strip_point& o) const { return key() < o.key(); }

    std::string to_string() const;  // e.g. "N0 (-1, 1)"
};

struct strip_entry {
    strip_point pt;
    long mult = 1;
};

struct strip_diagram {
    std::vector<value_t> critical_values;  // kept through conversions, like all flavors
    std::vector<strip_entry> points;

    void canonicalize();  // sort by point, merge equal entries
    bool operator==(const strip_diagram& o) const;
};

// The step map and its inverse: same face and endpoints, degree +-1.
strip_point apply_T(const strip_point& m);
strip_point apply_T_inv(const strip_point& m);

// The level pair of a degree-0 point, by membership test per component.
// Throws degree_not_normalized on other degrees (normalize via apply_T).
struct level_pair {
    strip_face face = strip_face::S;
    value_t a = 0, b = 0;

    bool x_contains(value_t t) const;
    bool y_contains(value_t t) const;
    std::string to_string() const;  // e.g. "([a, b], {})" or "(R, R \ (a, b))"
};
level_pair rho(const strip_point& m);

// The interval bijection: a point's degree together with the set difference
// of its level pair; psi_inv inverts it, picking the face from the interval's
// closures (closed -> S, open -> N, oc -> E, co -> W).  psi_inv throws
// malformed_interval on an invalid interval.
std::pair<int, interval> interval_of(const strip_point& m);
strip_point psi_inv(int degree, const interval& iv);

// Conversions: extended-persistence entries map through the levelsets
// dictionary and then through psi_inv; the way back reads each point's
// interval.  Critical values ride along.
strip_diagram ep_barcode_to_strip(const ep_barcode& bc);
graded_barcode strip_to_lzz(const strip_diagram& D);

// The strip metric, the distance to the band boundary, and the bottleneck
// distance (matched pairs within eps, unmatched points retire to the
// boundary within eps).
value_t d_strip(const strip_point& s, const strip_point& t);
value_t boundary_cost(const strip_point& m);
value_t bottleneck_strip(const strip_diagram& D1, const strip_diagram& D2);

}  // namespace tda

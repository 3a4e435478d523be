#pragma once

#include <cmath>
#include <cstdint>
#include <limits>
#include <string>
#include <tuple>
#include <vector>

#include "tda/errors.hpp"

namespace tda {

using value_t = double;

inline constexpr value_t inf = std::numeric_limits<value_t>::infinity();

// ---------------------------------------------------------------------------
// Closure-typed real intervals.  Endpoints may be +-infinity (always open).
// ---------------------------------------------------------------------------

struct interval {
    value_t lo = 0, hi = 0;
    bool lo_closed = true, hi_closed = false;

    auto key() const { return std::make_tuple(lo, hi, lo_closed, hi_closed); }
    bool operator==(const interval& o) const { return key() == o.key(); }
    bool operator<(const interval& o) const { return key() < o.key(); }

    std::string to_string() const;
};

// Validity: lo < hi, or lo == hi when both ends are closed; infinite
// endpoints must be open.
bool interval_valid(const interval& iv);

// ---------------------------------------------------------------------------
// Extended-persistence intervals: typed, over 1-based critical-value indices.
//   ord:       [a_i, a_j)            i < j
//   rel:       (a-bar_i, a-bar_j]    i < j   (degree read one below on the lzz side)
//   ext_plus:  [a_i, a-bar_j]        i <= j
//   ext_minus: (a_i, a-bar_j)        i < j
// ---------------------------------------------------------------------------

enum class ep_type : std::uint8_t { ord, rel, ext_plus, ext_minus };

inline const char* ep_type_name(ep_type t) {
    switch (t) {
        case ep_type::ord: return "Ord";
        case ep_type::rel: return "Rel";
        case ep_type::ext_plus: return "ExtPlus";
        case ep_type::ext_minus: return "ExtMinus";
    }
    return "?";
}

struct ep_interval {
    ep_type type = ep_type::ord;
    int i = 1, j = 1;  // critical-value indices, 1-based
    int degree = 0;

    auto key() const { return std::make_tuple(degree, static_cast<int>(type), i, j); }
    bool operator==(const ep_interval& o) const { return key() == o.key(); }
    bool operator<(const ep_interval& o) const { return key() < o.key(); }
};

void check_ep_interval(const ep_interval& e, int n_critical);  // MalformedEPInterval

// ---------------------------------------------------------------------------
// Barcodes.  Value-indexed flavors share `graded_barcode`; the extended
// flavor keeps its typed intervals; position-indexed diagrams (plain zigzag
// output, diamond/pyramid bookkeeping) use `pos_barcode`.
// ---------------------------------------------------------------------------

enum class flavor : std::uint8_t { ordinary, extended, zigzag, lzz, blocks, strip };

inline const char* flavor_name(flavor f) {
    switch (f) {
        case flavor::ordinary: return "ordinary";
        case flavor::extended: return "extended";
        case flavor::zigzag: return "zigzag";
        case flavor::lzz: return "lzz";
        case flavor::blocks: return "blocks";
        case flavor::strip: return "strip";
    }
    return "?";
}

struct bar {
    int degree = 0;
    interval iv;
    long mult = 1;

    auto key() const { return std::make_tuple(degree, iv.key()); }
};

struct graded_barcode {
    flavor kind = flavor::ordinary;
    std::vector<value_t> critical_values;  // present for lzz (and kept through conversions)
    std::vector<bar> entries;

    void canonicalize();  // sort by (degree, interval), merge equal bars
    bool operator==(const graded_barcode& o) const;
};

struct ep_entry {
    ep_interval itv;
    long mult = 1;
};

struct ep_barcode {
    std::vector<value_t> critical_values;  // sorted distinct values, 1-based indexing
    std::vector<ep_entry> entries;

    value_t value(int idx) const {  // critical index -> value
        if (idx < 1 || idx > static_cast<int>(critical_values.size()))
            fail(errc::index_out_of_range, "critical index " + std::to_string(idx));
        return critical_values[static_cast<std::size_t>(idx - 1)];
    }

    void canonicalize();
    bool operator==(const ep_barcode& o) const;
};

// Position-indexed interval [b, d] (inclusive) in a finite diagram.
struct pos_bar {
    int degree = 0;
    int b = 0, d = 0;
    long mult = 1;

    auto key() const { return std::make_tuple(degree, b, d); }
};

using pos_barcode = std::vector<pos_bar>;

void canonicalize(pos_barcode& bc);
bool pos_barcode_equal(pos_barcode a, pos_barcode b);

std::string format_value(value_t v);  // "-inf"/"inf" for infinities

}  // namespace tda

#pragma once

#include <string>
#include <tuple>
#include <vector>

#include "tda/barcode.hpp"
#include "tda/complex.hpp"
#include "tda/errors.hpp"

// ---------------------------------------------------------------------------
// Block decomposition of levelsets persistence.
//
// A levelsets barcode over the open upper half-plane U = {(x,y) : x < y}
// decomposes into five block shapes, each determined by two endpoints:
//
//   o   (a,b)   band interior        {a < x,  y < b}        a < b finite
//   co  [a,b)   horizontal band      {a < y < b}            a may be -inf
//   oc  (a,b]   vertical band        {a < x < b}            b may be +inf
//   c1  [a,b]   lower-right wedge    {x < b,  y > a}        a <= b, +-inf ok
//   c2  [b,a]   upper-left corner    {x < a,  y > b}        a <= b finite
//
// Blocks are stored with ascending endpoints a <= b; c2 is the shape
// conventionally written with its endpoints swapped.  Membership formulas
// above are for generic points (x, y) avoiding the endpoints.  A closed
// interval degenerated to a point [a, a] is the corner {x < a < y}, hence
// subtype c2; such degenerate corners are the only c2 blocks that do not
// arise as partners of an open block one degree down.
//
// A block module either never becomes trivial under interleaving shifts
// (both-ends-closed shapes) or does so at a threshold proportional to its
// width; two blocks interleave either by being the same shape with close
// endpoints or by both being near-trivial.  The bottleneck distance matches
// blocks of equal degree, charging unmatched blocks their vanishing
// threshold, and is realized on the finite candidate set of pairwise
// thresholds.
// ---------------------------------------------------------------------------

namespace tda {

enum class block_kind : std::uint8_t { o, co, oc, c1, c2 };

inline const char* block_kind_name(block_kind k) {
    switch (k) {
        case block_kind::o: return "o";
        case block_kind::co: return "co";
        case block_kind::oc: return "oc";
        case block_kind::c1: return "c1";
        case block_kind::c2: return "c2";
    }
    return "?";
}

struct block {
    block_kind kind = block_kind::o;
    value_t a = 0, b = 0;  // a <= b as stored, whatever the written order

    bool degenerate_corner() const { return kind == block_kind::c2 && a == b; }
    bool contains(value_t x, value_t y) const;  // generic-point membership

    auto key() const { return std::make_tuple(static_cast<int>(kind), a, b); }
    bool operator==(const block& o) const { return key() == o.key(); }
    bool operator<(const block& o) const { return key() < o.key(); }

    std::string to_string() const;
};

// Classify a closure-typed interval as a block.  Infinite endpoints fold
// into the taxonomy: [a, +inf) and (-inf, b] are wedges (c1), while
// (a, +inf) and (-inf, b) keep only their one finite wall (oc / co), and
// (-inf, +inf) is the whole half-plane (c1).  Throws malformed_interval on
// an invalid interval.
block block_of_interval(const interval& iv);

struct block_entry {
    int degree = 0;
    block blk;
    long mult = 1;

    auto key() const { return std::make_tuple(degree, blk.key()); }
};

struct block_barcode {
    std::vector<block_entry> entries;

    void canonicalize();  // sort by (degree, block), merge equal entries
    bool operator==(const block_barcode& o) const;
};

// One block per interval, degree preserved.
block_barcode lzz_to_blocks(const graded_barcode& bc);

// The full levelsets blocks of a graph function: the interval blocks of the
// levelsets zigzag barcode in every degree, plus one corner (c2) companion
// one degree up for each open interval.  Corners are what a window sees of
// a cycle already complete below it, so they live one degree above the open
// band that records the cycle's two halves.
block_barcode blocks_of_graph(const simplicial_complex& K, const vertex_values& f);

// Least eps at which the block's module is trivial up to a 2*eps
// interleaving: half the width for one-closed-end bands, a quarter for open
// bands, +inf for both-ends-closed shapes.
value_t vanish_eps(const block& B);

// Least eps at which the two block modules are eps-interleaved: same shape
// goes by endpoint sup-distance (corners compare in written order), and any
// two blocks interleave once both are trivial, whichever bound is smaller.
value_t interleave_eps(const block& B1, const block& B2);

// Bottleneck distance between the degree-`degree` slices: the least eps
// admitting a partial matching with matched pairs eps-interleaved and every
// unmatched block eps-trivial.  Symmetric, zero on equal slices.
value_t bottleneck_blocks(const block_barcode& B1, const block_barcode& B2, int degree);

// Endpoint-swap pairing: each open block in degree p seeks a corner (c2)
// with the same endpoints in degree p+1, and vice versa.  Paired couples
// collapse to one entry (the open representative); everything else passes
// through.  Degenerate corners [a, a] stand outside the pairing and are not
// diagnosed.  Never throws: imbalances are reported, not errors.
struct phi_pairing {
    block_barcode quotient;             // one entry per equivalence class
    std::vector<block_entry> unpaired;  // open blocks lacking a corner partner, and corners lacking an open one
};
phi_pairing phi_bijection(const block_barcode& bc);

}  // namespace tda

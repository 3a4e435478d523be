#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "tda/barcode.hpp"
#include "tda/complex.hpp"
#include "tda/persistence.hpp"

namespace tda {

// ---------------------------------------------------------------------------
// The pyramid of interlevel pairs for n critical values, drawn flat: nodes sit
// at the lattice points (x, h) with 0 <= x, h <= 2n+2 and x + h odd, arrows
// pointing up.  Column x = 0 is the western edge, row h = 0 the southern
// (absolute) one.  The diagonals h = x and x + h = 2n+2 cut the square into
// four faces (the parity rules out ties):
//   south  absolute windows   X_i^j                i = (x-h-1)/2, j = (x+h-1)/2
//   west   sublevel pairs     (X_0^i, X_0^j)       i = (x+h-1)/2, j = (h-x-1)/2
//   east   superlevel pairs   (X_i^n, X_j^n)       i = (x-h-1)/2, j = (4n+3-x-h)/2
//   north  (X_0^n, X_0^i u X_j^n)                  i = (h-x-1)/2, j = i + 2n+2-h
// where X_i^j is the interlevel f^-1([s_i, s_j]) over regular values
// s_0 < a_1 < s_1 < ... < a_n < s_n.  Pairs (Y, Y) are the zero object; they
// fill exactly the x = 0, x = 2n+2 and h = 2n+2 borders.
//
// The relative part of a north node stands for the complement of the closed
// band [s_i, s_j]; once the band shrinks to a point (i = j, the h = 2n+2 row)
// the window symbols merge to the whole space and the pair collapses to
// (Y, Y).  Diamonds topped on that row therefore absorb one regular slab:
// their flanks intersect, as window sets, to the bottom plus one degenerate
// window.  Everywhere below that row diamonds are componentwise unions (top)
// and intersections (bottom) of their flanks.
// ---------------------------------------------------------------------------

enum class pyr_face : std::uint8_t { south, west, east, north };

// One space symbol: a union of index windows [i, j] (0-based into the regular
// values, i <= j), kept sorted with overlapping windows merged.  Windows
// sharing an index share the regular level s_i, so they merge; an empty list
// is the empty space.
using window_set = std::vector<std::pair<int, int>>;

window_set window_union(window_set a, const window_set& b);
window_set window_intersection(const window_set& a, const window_set& b);

struct pyramid_node {
    int x = 0, h = 0;
    pyr_face face = pyr_face::south;
    bool empty = false;    // (Y, Y) pair, i.e. A == B
    window_set A, B;       // the pair (A, B) with B ⊆ A; B empty on the south face

    std::string label() const;
};

// A west-to-east path, one node per column; bookend heights follow the
// interior (h[0] = h[1]+1, likewise at the east end) since every column-0 and
// column-(2n+2) node is the zero object.
struct monotone_zigzag {
    int n = 0;
    std::vector<int> h;    // size 2n+3

    int width() const { return 2 * n + 2; }
};

struct pyramid {
    int n = 0;

    int width() const { return 2 * n + 2; }
    bool is_node(int x, int h) const;
    pyramid_node node(int x, int h) const;    // IndexOutOfRange off the lattice

    std::vector<pyramid_node> nodes() const;
    std::vector<std::pair<int, int>> diamond_bottoms() const;    // (x, h) pairs

    monotone_zigzag southern() const;    // levelsets row: heights 1,0,1,0,...
    monotone_zigzag extended() const;    // the straight diagonal h = x-1
    monotone_zigzag updown() const;      // sublevels up to the summit, superlevels down
};

// n >= 1; TooLarge beyond the cap (the pyramid is a verification device, and
// path enumeration blows up quickly).
pyramid build_pyramid(int n, int cap = 6);

void validate(const pyramid& P, const monotone_zigzag& z);

// ---------------------------------------------------------------------------
// Diamond moves.  Swapping the space at position k of a zigzag between the
// two completions U∩V and U∪V of a Mayer-Vietoris diamond rewrites its
// position barcode by an involution on interval shapes:
//     [b, k-1] <-> [b, k]        (b <= k-1)
//     [k, d]   <-> [k+1, d]      (d >= k+1)
//     [k, k]   <-> [k, k]        degree +1 on the union side (strong form)
// and every other interval is kept as is.  Without the degree shift the
// [k, k] intervals are unmatched and dropped (weak form).
// ---------------------------------------------------------------------------

// Positions run 0..last, 1 <= k <= last-1.  `to_union` says which way the
// exchanged space moved; it only affects the [k, k] degree bookkeeping.
pos_barcode diamond_move(const pos_barcode& bc, int k, int last, bool with_degree_shift,
                         bool to_union);

// The canonical move sequence turning `from` into `to`: repeatedly complete
// the lowest-index pending diamond — raise the leftmost valley below the
// target, else lower the leftmost peak above it.  Entries are (k, raised).
std::vector<std::pair<int, bool>> canonical_moves(const pyramid& P, const monotone_zigzag& from,
                                                 const monotone_zigzag& to);

// Step-by-step image of one position interval along canonical_moves(path1,
// path2), starting with the interval itself; degree bookkeeping per the
// strong form.
std::vector<pos_bar> trace_interval(const pyramid& P, const monotone_zigzag& path1,
                                    const monotone_zigzag& path2, const pos_bar& start);

// ---------------------------------------------------------------------------
// Extended <-> levelsets dictionaries over the critical values.
//   Ord  p: [a_i, a_j)  <->  [a_i, a_j)  degree p
//   Rel  p: (a_i, a_j]  <->  (a_i, a_j]  degree p-1
//   Ext+ p: [a_i, a_j]  <->  [a_i, a_j]  degree p
//   Ext- p: (a_i, a_j)  <->  (a_i, a_j)  degree p-1
// ---------------------------------------------------------------------------

graded_barcode ep_to_lzz(const ep_barcode& bc);    // MalformedEPInterval

// Inverse; `bc` must be of the lzz flavor, carry its critical values, and
// every endpoint must be one of them (MalformedInterval otherwise).
ep_barcode lzz_to_ep(const graded_barcode& bc);

// ---------------------------------------------------------------------------
// Position bookkeeping used to cross-check the dictionaries against raw
// zigzag decompositions of realized pyramid paths.
// ---------------------------------------------------------------------------

// Southern-row interval [xb, xd] in x coordinates <-> value interval: even x
// is a window (closed critical endpoint), odd x a regular slab (open).
graded_barcode southern_to_values(const pos_barcode& bc, const std::vector<value_t>& criticals);
pos_barcode values_to_southern(const graded_barcode& bc);

// Where a typed extended interval lives along the diagonal path, in x
// coordinates.  The diagonal passes the ambient space twice (the superlevel
// start is the empty symbol), so deaths at or past position n are pushed one
// node further east.
pos_bar ep_to_diagonal(const ep_interval& e, int n, long mult = 1);

// The interlevel pairs of a monotone path realized on a graph, ready for
// zigzag decomposition; positions in the diagram are the x coordinates.
// Nodes on the h = 2n+2 collapse row realize as (Y, Y), so a path dipping
// through that row sheds the punctured-level classes that the exchange rule
// carries across it; paths staying below the row (all the canonical ones do)
// decompose in full agreement with their move composites.
zigzag_diagram realize_on_graph(const pyramid& P, const monotone_zigzag& z,
                                const simplicial_complex& G, const vertex_values& f,
                                const std::vector<value_t>* regulars = nullptr);

}  // namespace tda

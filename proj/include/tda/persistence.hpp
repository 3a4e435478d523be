#pragma once

#include <vector>

#include "tda/barcode.hpp"
#include "tda/complex.hpp"
#include "tda/quiver.hpp"

namespace tda {

// ---------------------------------------------------------------------------
// Vertex functions: injectivity, critical values, tie-broken vertex order.
// Critical values of a function on a complex are its distinct vertex values;
// indices into them are 1-based throughout.
// ---------------------------------------------------------------------------

bool is_injective(const vertex_values& f);

std::vector<value_t> critical_values(const vertex_values& f);

// 1-based position of v among the criticals; IndexOutOfRange when absent.
int critical_index(const std::vector<value_t>& crit, value_t v);

// Vertices sorted by (value, id): the injective order used by filtrations.
std::vector<index_t> vertex_order(const simplicial_complex& K, const vertex_values& f);

// ---------------------------------------------------------------------------
// Ordinary sublevel persistence.
// ---------------------------------------------------------------------------

// Lower-star sublevel filtration barcode in degree p.  Finite bars are
// half-open [a_i, a_j); essential classes are reported as [a_i, +inf).
graded_barcode ordinary_barcode(const simplicial_complex& K, const vertex_values& f, int p);

// ---------------------------------------------------------------------------
// Extended persistence: sublevel spans, then the ambient complex relative to
// growing superlevel spans.
// ---------------------------------------------------------------------------

struct extended_filtration_t {
    std::vector<index_t> order;               // vertices by (value, id), size n
    std::vector<simplicial_complex> sublevels;  // K_0 = empty, ..., K_n = K
    std::vector<relative_pair> pairs;         // (K, L_0 = empty), ..., (K, L_n = K)
};

extended_filtration_t extended_filtration(const simplicial_complex& K, const vertex_values& f);

// Decomposition of H_p(K_0) -> ... -> H_p(K, L_n), intervals typed by which
// halves of the sequence carry their endpoints.  NotInjective unless
// allow_ties; with ties the (value, id) order is used and bars whose two
// critical values coincide are dropped (essential classes are never lost).
ep_barcode extended_barcode(const simplicial_complex& K, const vertex_values& f, int p,
                            bool allow_ties = false);

// All degrees 0..dim(K) merged; `parallel` fans the degrees out across
// threads, the serial path is the reference.
ep_barcode extended_barcode_all(const simplicial_complex& K, const vertex_values& f,
                                bool allow_ties = false, bool parallel = false);

// ---------------------------------------------------------------------------
// Zigzag persistence of an arbitrary diagram of pairs related by inclusions.
// ---------------------------------------------------------------------------

struct zigzag_diagram {
    std::vector<relative_pair> spaces;
    std::vector<bool> forward;  // forward[e]: spaces[e] included in spaces[e+1]
};

void validate(const zigzag_diagram& d);  // NotAnInclusion per arrow

// Interval decomposition of H_p over the diagram, endpoints = positions.
pos_barcode zigzag_positions(const zigzag_diagram& d, int p);

// Same, wrapped as a barcode whose interval endpoints are the positions.
graded_barcode zigzag_barcode(const zigzag_diagram& d, int p);

// ---------------------------------------------------------------------------
// Levelsets zigzag on graphs, exactly, through edge subdivision.
// ---------------------------------------------------------------------------

// Regular values interleaving the criticals: one below, midpoints, one above.
std::vector<value_t> regular_values(const std::vector<value_t>& criticals);

// The 2m+1-term interlevel diagram of the split graph and its positions
// barcode; `regulars` overrides the default midpoint choice (must interleave
// strictly).  DimensionTooHigh above dimension 1.
graded_barcode lzz_barcode_graph(const simplicial_complex& G, const vertex_values& f, int p,
                                 const std::vector<value_t>* regulars = nullptr);

}  // namespace tda

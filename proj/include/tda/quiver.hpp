#pragma once

#include <vector>

#include "tda/barcode.hpp"
#include "tda/gf2.hpp"

namespace tda {

// ---------------------------------------------------------------------------
// Type-A quiver representations over GF(2): spaces V_0..V_{n-1} with one map
// per edge, pointing right (forward) or left (backward).
//   forward[e]  : maps[e] is V_e -> V_{e+1}, dims[e+1] rows x dims[e] cols
//   !forward[e] : maps[e] is V_{e+1} -> V_e, dims[e] rows x dims[e+1] cols
// ---------------------------------------------------------------------------

struct quiver_rep {
    std::vector<index_t> dims;
    std::vector<bool> forward;
    std::vector<gf2_matrix> maps;

    int n_vertices() const { return static_cast<int>(dims.size()); }
};

void validate(const quiver_rep& q);  // ShapeMismatch on inconsistent shapes

// Indicator representation of the interval [b, d] (inclusive positions) on a
// quiver with n edges of the given orientation.  IndexOutOfRange for bad b, d.
quiver_rep interval_module(const std::vector<bool>& orientation, int b, int d);

quiver_rep direct_sum(const quiver_rep& a, const quiver_rep& b);  // ShapeMismatch on orientation

// Multiset of interval summands.  Total: multiplicities at each position sum
// to dims.  Deterministic for a fixed input.
pos_barcode decompose(const quiver_rep& q);

}  // namespace tda

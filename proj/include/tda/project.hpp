#pragma once

#include <vector>

#include "tda/io.hpp"
#include "tda/persistence.hpp"

// ---------------------------------------------------------------------------
// Direction projections: push vertex coordinates onto linear forms and take
// the extended barcode of each height function.  The scan over directions is
// the parallel kernel; `parallel = false` is the serial reference path.
// ---------------------------------------------------------------------------

namespace tda {

// k unit vectors at evenly spaced angles, starting from (1, 0).  Plane only.
std::vector<std::vector<value_t>> evenly_spaced_directions(int k);

// Heights v -> <u, coords(v)>.  MissingCoordinates when a vertex has none,
// ShapeMismatch when dimensions disagree.
vertex_values project_values(const std::vector<index_t>& vertices, const vertex_coords& coords,
                             const std::vector<value_t>& u);

// One extended barcode per direction, in input order.  Projections are not
// injective in general (parallel faces), so ties are always broken by vertex
// id, as with --perturb.
std::vector<ep_barcode> project_barcodes(const simplicial_complex& K, const vertex_coords& coords,
                                         const std::vector<std::vector<value_t>>& directions,
                                         bool parallel);

}  // namespace tda

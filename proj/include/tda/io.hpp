#pragma once

#include <map>
#include <string>
#include <vector>

#include "tda/blocks.hpp"
#include "tda/complex.hpp"
#include "tda/persistence.hpp"
#include "tda/strip.hpp"

// ---------------------------------------------------------------------------
// JSON artifacts.  One document per artifact; infinite endpoints are encoded
// as the strings "-inf"/"inf"; parse and emit are mutually inverse on valid
// documents, and emit is deterministic (canonical entry order, fixed field
// names).
//
// Complex document:
//   {"vertices": [{"id": 0, "value": -1} | {"id": 0, "coordinates": [x, y]}],
//    "simplices": [[0, 1], ...],
//    "zigzag": [[[0], [0, 1]], ...]}          (optional; one simplex list per
//                                              space, consecutive spaces
//                                              related by inclusion)
// Barcode document:
//   {"flavor": "...", "criticalValues": [...],
//    "entries": [{"degree": 0, "lo": -1, "hi": 1,
//                 "loClosed": true, "hiClosed": true,
//                 "type": "...",              (extended and blocks flavors)
//                 "mult": 1}]}
// ---------------------------------------------------------------------------

namespace tda {

using vertex_coords = std::map<index_t, std::vector<value_t>>;

struct complex_file {
    simplicial_complex K;
    bool has_values = false;
    vertex_values values;
    bool has_coordinates = false;
    vertex_coords coordinates;
    bool has_zigzag = false;
    zigzag_diagram zigzag;  // spaces are (subcomplex, empty) pairs
};

// Exactly one payload is active, named by `kind`.
struct barcode_file {
    flavor kind = flavor::ordinary;
    graded_barcode graded;  // ordinary | zigzag | lzz
    ep_barcode extended;    // extended
    block_barcode blocks;   // blocks
    strip_diagram strip;    // strip
};

// ParseError on syntax (with line/column) and on any schema or consistency
// violation (unknown flavor, endpoints off the critical list, closure flags
// contradicting the entry type, dangling vertex ids, ...).
complex_file parse_complex(const std::string& text);
barcode_file parse_barcode(const std::string& text);

std::string emit_complex(const complex_file& c);
std::string emit_barcode(const barcode_file& b);

// {"projections": [{"direction": [...], <barcode fields>}, ...]}, one entry
// per direction, in input order.
std::string emit_projections(const std::vector<std::vector<value_t>>& directions,
                             const std::vector<ep_barcode>& barcodes);

}  // namespace tda

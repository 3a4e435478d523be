#pragma once

#include <string>

#include "tda/io.hpp"

namespace tda {

// Deterministic SVG rendering of a barcode: one horizontal bar per interval
// copy, grouped by degree, open ends hollow and closed ends filled.  Value
// flavors share a linear axis (half-infinite bars run to the plot edge);
// the extended flavor walks the up-sweep then the reversed down-sweep, with
// a dotted divider between the two half-axes and down-sweep ticks primed.
// Strip diagrams render through their interval charts.  Blocks describe
// planar regions, not intervals: UnsupportedConversion.
std::string render_svg(const barcode_file& b);

}  // namespace tda

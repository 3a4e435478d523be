#include "tda/project.hpp"

#include <cmath>
#include <exception>

namespace tda {

std::vector<std::vector<value_t>> evenly_spaced_directions(int k) {
    std::vector<std::vector<value_t>> dirs;
    for (int i = 0; i < k; ++i) {
        const value_t t = 2 * 3.14159265358979323846 * i / k;
        dirs.push_back({std::cos(t), std::sin(t)});
    }
    return dirs;
}

vertex_values project_values(const std::vector<index_t>& vertices, const vertex_coords& coords,
                             const std::vector<value_t>& u) {
    vertex_values f;
    for (index_t v : vertices) {
        const auto it = coords.find(v);
        if (it == coords.end())
            fail(errc::missing_coordinates, "vertex " + std::to_string(v) + " has no coordinates");
        if (it->second.size() != u.size())
            fail(errc::shape_mismatch, "direction has dimension " + std::to_string(u.size()) +
                                           ", coordinates have " +
                                           std::to_string(it->second.size()));
        value_t h = 0;
        for (std::size_t d = 0; d < u.size(); ++d) h += u[d] * it->second[d];
        f[v] = h;
    }
    return f;
}

std::vector<ep_barcode> project_barcodes(const simplicial_complex& K, const vertex_coords& coords,
                                         const std::vector<std::vector<value_t>>& directions,
                                         bool parallel) {
    const std::vector<index_t> vertices = K.vertex_ids();
    const int n = static_cast<int>(directions.size());
    std::vector<vertex_values> heights(n);
    for (int i = 0; i < n; ++i) heights[i] = project_values(vertices, coords, directions[i]);

    // Heights of parallel faces tie, so the (value, id) tie-break is always on.
    std::vector<ep_barcode> out(n);
    std::exception_ptr err;
#pragma omp parallel for schedule(dynamic) if (parallel)
    for (int i = 0; i < n; ++i) {
        try {
            out[i] = extended_barcode_all(K, heights[i], true);
        } catch (...) {
#pragma omp critical
            if (!err) err = std::current_exception();
        }
    }
    if (err) std::rethrow_exception(err);
    return out;
}

}  // namespace tda

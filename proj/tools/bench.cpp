// Benchmark: the OpenMP kernels against their serial references.  Builds a
// triangulated disk, times extended persistence (degrees fanned out) and the
// projected height barcodes (directions fanned out) both ways, and checks
// that the results agree exactly.
//
// usage: bench [n_boundary_vertices] [n_directions] [reps]

#include "tda/persistence.hpp"
#include "tda/project.hpp"

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <random>

#ifdef _OPENMP
#include <omp.h>
#endif

using namespace tda;

namespace {

double secs(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

// Fan triangulation of a regular n-gon, vertices jittered radially so no two
// heights coincide in any benchmark direction.
struct disk {
    simplicial_complex K;
    vertex_coords coords;
    vertex_values values;
};

disk make_disk(index_t n) {
    std::mt19937_64 rng(12345);
    std::uniform_real_distribution<value_t> jitter(0.9, 1.1);
    disk d;
    std::vector<simplex> top;
    for (index_t v = 0; v < n; ++v) {
        const value_t theta = 2 * 3.14159265358979323846 * static_cast<value_t>(v) /
                              static_cast<value_t>(n);
        const value_t r = jitter(rng);
        d.coords[v] = {r * std::cos(theta), r * std::sin(theta)};
        top.push_back({v, (v + 1) % n});
    }
    for (index_t v = 1; v + 1 < n; ++v) top.push_back({0, v, v + 1});
    d.K = build_complex(top);
    std::vector<value_t> heights(static_cast<std::size_t>(n));
    for (index_t v = 0; v < n; ++v)
        heights[static_cast<std::size_t>(v)] = static_cast<value_t>(v);
    std::shuffle(heights.begin(), heights.end(), rng);
    for (index_t v = 0; v < n; ++v) d.values[v] = heights[static_cast<std::size_t>(v)];
    return d;
}

}  // namespace

int main(int argc, char** argv) {
    const index_t n = argc > 1 ? std::atol(argv[1]) : 150;
    const int n_dirs = argc > 2 ? std::atoi(argv[2]) : 32;
    const int reps = argc > 3 ? std::atoi(argv[3]) : 2;

#ifdef _OPENMP
    std::printf("threads: %d\n", omp_get_max_threads());
#else
    std::printf("threads: 1 (built without OpenMP)\n");
#endif

    const disk d = make_disk(n);
    index_t n_simplices = 0;
    for (const auto& level : d.K.by_dim) n_simplices += static_cast<index_t>(level.size());
    std::printf("disk: %ld vertices, %ld simplices\n\n", static_cast<long>(n),
                static_cast<long>(n_simplices));

    {
        std::printf("extended barcode, all degrees, %d reps\n", reps);
        auto t0 = std::chrono::steady_clock::now();
        ep_barcode serial;
        for (int r = 0; r < reps; ++r) serial = extended_barcode_all(d.K, d.values, false, false);
        const double ts = secs(t0);
        t0 = std::chrono::steady_clock::now();
        ep_barcode par;
        for (int r = 0; r < reps; ++r) par = extended_barcode_all(d.K, d.values, false, true);
        const double tp = secs(t0);
        std::printf("  serial    %8.3f s\n", ts);
        std::printf("  parallel  %8.3f s   (%.2fx, results %s)\n\n", tp, ts / tp,
                    serial == par ? "identical" : "DIFFER");
        if (!(serial == par)) return 1;
    }

    {
        std::printf("projected height barcodes, %d directions\n", n_dirs);
        const auto dirs = evenly_spaced_directions(n_dirs);
        auto t0 = std::chrono::steady_clock::now();
        const auto serial = project_barcodes(d.K, d.coords, dirs, false);
        const double ts = secs(t0);
        t0 = std::chrono::steady_clock::now();
        const auto par = project_barcodes(d.K, d.coords, dirs, true);
        const double tp = secs(t0);
        bool same = serial.size() == par.size();
        for (std::size_t i = 0; same && i < serial.size(); ++i)
            same = serial[i] == par[i];
        std::printf("  serial    %8.3f s\n", ts);
        std::printf("  parallel  %8.3f s   (%.2fx, results %s)\n", tp, ts / tp,
                    same ? "identical" : "DIFFER");
        if (!same) return 1;
    }
    return 0;
}

// Acceptance harness: ten independent checks over the whole pipeline, one
// PASS/FAIL line each.  Exits nonzero when any check fails.

#include "json.hpp"
#include "oracles.hpp"
#include "tda/blocks.hpp"
#include "tda/gf2.hpp"
#include "tda/io.hpp"
#include "tda/persistence.hpp"
#include "tda/pyramid.hpp"
#include "tda/quiver.hpp"
#include "tda/strip.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <sys/wait.h>
#include <tuple>
#include <unistd.h>
#include <vector>

using namespace tda;

namespace {

// ---- harness --------------------------------------------------------------

int n_failed = 0;
bool ok = true;
std::vector<std::string> notes;

void expect(bool cond, const std::string& what) {
    if (cond) return;
    ok = false;
    if (notes.size() < 5) notes.push_back(what);
}

using clock_t_ = std::chrono::steady_clock;

double seconds_since(clock_t_::time_point t0) {
    return std::chrono::duration<double>(clock_t_::now() - t0).count();
}

void criterion(int num, const char* name, const std::function<void()>& body) {
    ok = true;
    notes.clear();
    const auto t0 = clock_t_::now();
    try {
        body();
    } catch (const std::exception& e) {
        expect(false, std::string("unexpected exception: ") + e.what());
    }
    std::printf("[%s] %2d  %s  (%.2fs)\n", ok ? "PASS" : "FAIL", num, name, seconds_since(t0));
    for (const auto& n : notes) std::printf("           - %s\n", n.c_str());
    if (!ok) ++n_failed;
    std::fflush(stdout);
}

// ---- fixtures and corpus --------------------------------------------------

simplicial_complex circle4() { return build_complex({{0, 1}, {1, 2}, {2, 3}, {0, 3}}); }
vertex_values circle4_values() { return {{0, -1.0}, {1, 0.0}, {2, 0.0001}, {3, 1.0}}; }

// Triangle u(1), v(3), w(3) plus an isolated vertex at 2.
simplicial_complex three_crit() { return build_complex({{0, 1}, {0, 2}, {1, 2}, {3}}); }
vertex_values three_crit_values() { return {{0, 1.0}, {1, 3.0}, {2, 3.0}, {3, 2.0}}; }

simplicial_complex wedge2() { return build_complex({{0, 2}, {1, 2}}); }

simplicial_complex random_complex2(oracle::rng_t& rng) {
    index_t n = oracle::pick(rng, 3, 6);
    std::vector<simplex> top;
    for (index_t v = 0; v < n; ++v) top.push_back({v});
    for (index_t t = oracle::pick(rng, 0, 4); t > 0; --t) {
        index_t a = oracle::pick(rng, 0, n - 1), b = oracle::pick(rng, 0, n - 1),
                c = oracle::pick(rng, 0, n - 1);
        if (a != b && b != c && a != c) top.push_back({a, b, c});
    }
    for (index_t e = oracle::pick(rng, 0, 5); e > 0; --e) {
        index_t a = oracle::pick(rng, 0, n - 1), b = oracle::pick(rng, 0, n - 1);
        if (a != b) top.push_back({a, b});
    }
    return build_complex(top);
}

struct instance {
    simplicial_complex K;
    vertex_values f;
};

// The shared test corpus: the worked examples plus random graphs and small
// two-complexes with injective values.
std::vector<instance> corpus() {
    std::vector<instance> out;
    out.push_back({circle4(), circle4_values()});
    out.push_back({three_crit(), three_crit_values()});  // tied values on purpose
    out.push_back({wedge2(), {{0, 0.0}, {1, 1.0}, {2, 2.0}}});
    oracle::rng_t rng(9001);
    for (int t = 0; t < 30; ++t) {
        auto G = oracle::random_graph(rng, oracle::pick(rng, 2, 10), oracle::pick(rng, 1, 16));
        auto f = oracle::random_values(rng, G);
        out.push_back({G, f});
    }
    for (int t = 0; t < 8; ++t) {
        auto K = random_complex2(rng);
        auto f = oracle::random_values(rng, K);
        out.push_back({K, f});
    }
    return out;
}

graded_barcode lzz_graph_all(const simplicial_complex& G, const vertex_values& f) {
    graded_barcode g;
    g.kind = flavor::lzz;
    g.critical_values = critical_values(f);
    for (int p = 0; p <= 1; ++p) {
        graded_barcode gp = lzz_barcode_graph(G, f, p);
        g.entries.insert(g.entries.end(), gp.entries.begin(), gp.entries.end());
    }
    g.canonicalize();
    return g;
}

// ---- subprocess helper for the CLI criterion ------------------------------

struct proc_result {
    int code = -1;
    std::string out;
};

proc_result run_tda(const std::string& args) {
    static int seq = 0;
    const std::string base =
        "/tmp/tda_acc_" + std::to_string(::getpid()) + "_" + std::to_string(seq++);
    const int rc =
        std::system((std::string(TDA_BIN) + " " + args + " > " + base + " 2>/dev/null").c_str());
    proc_result r;
    r.code = WIFEXITED(rc) ? WEXITSTATUS(rc) : -1;
    std::ifstream in(base, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    r.out = ss.str();
    std::remove(base.c_str());
    return r;
}

std::string data_path(const std::string& name) { return std::string(TDA_TEST_DATA) + "/" + name; }

// ---- random type-A representations (criterion 2) --------------------------

std::vector<bool> random_orientation(oracle::rng_t& rng, int n) {
    std::vector<bool> o;
    for (int e = 0; e + 1 < n; ++e) o.push_back(oracle::pick(rng, 0, 1) == 1);
    return o;
}

// Direct sum of random interval modules, then conjugate every space by a
// random invertible change of basis (adjusting the adjacent maps).
std::pair<quiver_rep, pos_barcode> random_rep(oracle::rng_t& rng, int n, int max_summands) {
    auto orient = random_orientation(rng, n);
    int k = static_cast<int>(oracle::pick(rng, 0, max_summands));
    quiver_rep q;
    q.dims.assign(n, 0);
    q.forward = orient;
    q.maps.assign(n - 1, gf2_matrix());
    for (int e = 0; e + 1 < n; ++e) q.maps[e] = gf2_matrix(0, 0);
    pos_barcode seed;
    for (int s = 0; s < k; ++s) {
        int b = static_cast<int>(oracle::pick(rng, 0, n - 1));
        int d = static_cast<int>(oracle::pick(rng, b, n - 1));
        q = direct_sum(q, interval_module(orient, b, d));
        seed.push_back({0, b, d, 1});
    }
    canonicalize(seed);

    std::vector<gf2_matrix> C(n), Cinv(n);
    for (int v = 0; v < n; ++v) {
        C[v] = oracle::random_invertible(rng, q.dims[v]);
        auto red = column_reduce(C[v]);
        Cinv[v] = gf2_matrix(q.dims[v], q.dims[v]);
        for (index_t c = 0; c < q.dims[v]; ++c) {
            auto sol = red.solve({c});
            expect(sol.has_value(), "random invertible matrix failed to invert");
            if (sol) Cinv[v].cols[static_cast<std::size_t>(c)] = *sol;
        }
    }
    for (int e = 0; e + 1 < n; ++e) {
        int src = orient[e] ? e : e + 1, dst = orient[e] ? e + 1 : e;
        q.maps[e] = gf2_multiply(C[dst], gf2_multiply(q.maps[e], Cinv[src]));
    }
    validate(q);
    return {q, seed};
}

// ---- random subcomplexes (criterion 4) ------------------------------------

simplicial_complex random_subcomplex(oracle::rng_t& rng, const simplicial_complex& K) {
    std::vector<simplex> kept;
    for (auto& level : K.by_dim)
        for (auto& s : level)
            if (oracle::pick(rng, 0, 1)) kept.push_back(s);
    return build_complex(kept);
}

// ---- planar chart oracle for the strip metric (criterion 8) ---------------

constexpr value_t pi_c = 3.14159265358979323846;

value_t ediff(value_t u, value_t v) {
    if (u == v) return 0;
    if (std::isinf(u) || std::isinf(v)) return inf;
    return std::abs(u - v);
}

value_t h_coord(value_t v) {
    if (std::isinf(v)) return v > 0 ? 0.5 : -0.5;
    return std::atan(v) / pi_c;
}

std::pair<value_t, value_t> planar_embed(const strip_point& m) {
    value_t x = 0, y = 0;
    switch (m.face) {
        case strip_face::N: x = h_coord(m.a), y = h_coord(m.b); break;
        case strip_face::E: x = h_coord(m.a), y = 1 - h_coord(m.b); break;
        case strip_face::W: x = -1 - h_coord(m.a), y = h_coord(m.b); break;
        case strip_face::S: x = -1 - h_coord(m.a), y = 1 - h_coord(m.b); break;
    }
    for (int k = 0; k < m.degree; ++k) {
        value_t nx = -1 - y, ny = 1 - x;
        x = nx, y = ny;
    }
    for (int k = 0; k > m.degree; --k) {
        value_t nx = 1 - y, ny = -1 - x;
        x = nx, y = ny;
    }
    return {x, y};
}

std::pair<long, value_t> windowed(value_t c) {
    long w = static_cast<long>(std::floor(c + 0.5));
    value_t frac = c - static_cast<value_t>(w);
    return {w, frac == -0.5 ? -inf : std::tan(pi_c * frac)};
}

value_t window_dist(value_t c1, value_t c2) {
    auto [w1, v1] = windowed(c1);
    auto [w2, v2] = windowed(c2);
    return w1 == w2 ? ediff(v1, v2) : inf;
}

value_t oracle_d(const strip_point& s, const strip_point& t) {
    auto [sx, sy] = planar_embed(s);
    auto [tx, ty] = planar_embed(t);
    return std::max(window_dist(sx, tx), window_dist(sy, ty));
}

interval random_interval(oracle::rng_t& rng) {
    auto g = [&] { return -5 + 0.5 * static_cast<value_t>(oracle::pick(rng, 0, 20)); };
    value_t a = g(), b = g();
    if (a > b) std::swap(a, b);
    switch (oracle::pick(rng, 0, 3)) {
        case 0: return {a, b, true, true};
        case 1:
            if (a == b) b += 0.5;
            return {a, oracle::pick(rng, 0, 7) ? b : inf, true, false};
        case 2:
            if (a == b) a -= 0.5;
            return {oracle::pick(rng, 0, 7) ? a : -inf, b, false, true};
        default:
            if (a == b) b += 0.5;
            if (oracle::pick(rng, 0, 7) == 0) a = -inf;
            if (oracle::pick(rng, 0, 7) == 0) b = inf;
            return {a, b, false, false};
    }
}

strip_point random_point(oracle::rng_t& rng) {
    return psi_inv(static_cast<int>(oracle::pick(rng, -2, 3)), random_interval(rng));
}

strip_point same_square(oracle::rng_t& rng, const strip_point& base) {
    strip_point p = base;
    do {
        p = psi_inv(base.degree, random_interval(rng));
    } while (p.face != base.face);
    return p;
}

// ---- random diagrams for the metric criteria (criterion 6) ----------------

block_barcode random_metric_blocks(oracle::rng_t& rng) {
    block_barcode bb;
    const int n = static_cast<int>(oracle::pick(rng, 1, 5));
    for (int i = 0; i < n; ++i) {
        const value_t a = -3 + 0.25 * static_cast<value_t>(oracle::pick(rng, 0, 16));
        const value_t b = a + 0.5 + 0.25 * static_cast<value_t>(oracle::pick(rng, 0, 8));
        const block_kind kinds[4] = {block_kind::o, block_kind::co, block_kind::oc,
                                     block_kind::c1};
        bb.entries.push_back({0, {kinds[oracle::pick(rng, 0, 3)], a, b}, 1});
    }
    bb.canonicalize();
    return bb;
}

// Jitter every endpoint a little, preserving shapes; closed blocks keep their
// partners so distances stay finite.
block_barcode jitter_blocks(oracle::rng_t& rng, const block_barcode& base) {
    std::uniform_real_distribution<value_t> dz(-0.15, 0.15);
    block_barcode bb;
    for (block_entry e : base.entries) {
        e.blk.a += dz(rng);
        e.blk.b += dz(rng);
        if (e.blk.b < e.blk.a + 0.1) e.blk.b = e.blk.a + 0.1;
        bb.entries.push_back(e);
    }
    if (oracle::pick(rng, 0, 2) == 0) {
        // An extra short half-open block retires at small cost.
        const value_t a = -2 + 0.5 * static_cast<value_t>(oracle::pick(rng, 0, 8));
        bb.entries.push_back(
            {0, {oracle::pick(rng, 0, 1) ? block_kind::co : block_kind::oc, a, a + 0.2}, 1});
    }
    bb.canonicalize();
    return bb;
}

strip_diagram random_metric_strip(oracle::rng_t& rng) {
    strip_diagram D;
    const int n = static_cast<int>(oracle::pick(rng, 1, 4));
    for (int i = 0; i < n; ++i) {
        const value_t a = -3 + 0.25 * static_cast<value_t>(oracle::pick(rng, 0, 16));
        const value_t b = a + 0.5 + 0.25 * static_cast<value_t>(oracle::pick(rng, 0, 8));
        const int deg = static_cast<int>(oracle::pick(rng, -1, 2));
        switch (oracle::pick(rng, 0, 3)) {
            case 0: D.points.push_back({{deg, strip_face::S, a, b}, 1}); break;
            case 1: D.points.push_back({{deg, strip_face::N, a, b}, 1}); break;
            case 2: D.points.push_back({{deg, strip_face::W, a, b}, 1}); break;
            default: D.points.push_back({{deg, strip_face::E, a, b}, 1}); break;
        }
    }
    D.canonicalize();
    return D;
}

strip_diagram jitter_strip(oracle::rng_t& rng, const strip_diagram& base) {
    std::uniform_real_distribution<value_t> dz(-0.15, 0.15);
    strip_diagram D;
    for (strip_entry e : base.points) {
        e.pt.a += dz(rng);
        e.pt.b += dz(rng);
        if (e.pt.b < e.pt.a + 0.1) e.pt.b = e.pt.a + 0.1;
        D.points.push_back(e);
    }
    if (oracle::pick(rng, 0, 2) == 0) {
        // Extra boundary-retirable point on the W or E face.
        const value_t a = -2 + 0.5 * static_cast<value_t>(oracle::pick(rng, 0, 8));
        D.points.push_back({{static_cast<int>(oracle::pick(rng, -1, 2)),
                             oracle::pick(rng, 0, 1) ? strip_face::W : strip_face::E, a, a + 0.2},
                            1});
    }
    D.canonicalize();
    return D;
}

}  // namespace

int main() {
    criterion(1, "golden circle: levelsets zigzag, extended barcode, correspondence", [] {
        const auto t0 = clock_t_::now();
        const auto K = circle4();
        const auto f = circle4_values();

        const graded_barcode z0 = lzz_barcode_graph(K, f, 0);
        const graded_barcode z1 = lzz_barcode_graph(K, f, 1);
        graded_barcode expect0;
        expect0.kind = flavor::lzz;
        expect0.critical_values = {-1, 0, 0.0001, 1};
        expect0.entries = {{0, {-1, 1, true, true}, 1}, {0, {-1, 1, false, false}, 1}};
        expect0.canonicalize();
        expect(z0 == expect0, "degree-0 levelsets barcode differs from the golden value");
        expect(z1.entries.empty(), "degree-1 levelsets barcode should be empty");

        ep_barcode ep = extended_barcode_all(K, f);
        ep_barcode epx;
        epx.critical_values = {-1, 0, 0.0001, 1};
        epx.entries = {{{ep_type::ext_plus, 1, 4, 0}, 1}, {{ep_type::ext_minus, 1, 4, 1}, 1}};
        epx.canonicalize();
        expect(ep == epx, "extended barcode differs from the golden value");

        // Correspondence rows: the closed degree-0 pair maps to the closed
        // levelsets interval, the open degree-1 pair to the open one.
        ep_barcode one;
        one.critical_values = {-1, 0, 0.0001, 1};
        one.entries = {{{ep_type::ext_plus, 1, 4, 0}, 1}};
        graded_barcode row = ep_to_lzz(one);
        expect(row.entries.size() == 1 && row.entries[0].degree == 0 &&
                   row.entries[0].iv == interval{-1, 1, true, true},
               "closed essential pair does not map to the closed interval");
        one.entries = {{{ep_type::ext_minus, 1, 4, 1}, 1}};
        row = ep_to_lzz(one);
        expect(row.entries.size() == 1 && row.entries[0].degree == 0 &&
                   row.entries[0].iv == interval{-1, 1, false, false},
               "open essential pair does not map to the open interval");

        expect(ep_to_lzz(ep) == lzz_graph_all(K, f), "full correspondence mismatch");
        expect(seconds_since(t0) < 1.0, "golden test exceeded one second");
    });

    criterion(2, "five hundred random type-A modules decompose to their seeds", [] {
        const auto t0 = clock_t_::now();
        oracle::rng_t rng(424242);
        for (int trial = 0; trial < 500; ++trial) {
            const int n = static_cast<int>(oracle::pick(rng, 1, 12));
            auto [q, seed] = random_rep(rng, n, 6);
            if (!pos_barcode_equal(decompose(q), seed)) {
                expect(false, "trial " + std::to_string(trial) + ": decomposition differs");
                break;
            }
        }
        expect(seconds_since(t0) < 30.0, "decomposition battery exceeded thirty seconds");
    });

    criterion(3, "extended-to-levelsets pipeline equals the direct computation", [] {
        oracle::rng_t rng(31337);
        for (int trial = 0; trial < 100; ++trial) {
            const auto G =
                oracle::random_graph(rng, oracle::pick(rng, 2, 12), oracle::pick(rng, 1, 20));
            const auto f = oracle::random_values(rng, G);
            const graded_barcode via = ep_to_lzz(extended_barcode_all(G, f));
            const graded_barcode direct = lzz_graph_all(G, f);
            if (!(via == direct)) {
                expect(false, "trial " + std::to_string(trial) + ": barcodes differ");
                break;
            }
        }
    });

    criterion(4, "strong diamond principle on a hundred random triples", [] {
        oracle::rng_t rng(73001);
        for (int trial = 0; trial < 100; ++trial) {
            auto W = random_complex2(rng);
            const int m = static_cast<int>(oracle::pick(rng, 5, 8));
            const int k = static_cast<int>(oracle::pick(rng, 1, m - 2));
            std::vector<simplicial_complex> X(static_cast<std::size_t>(m));
            std::vector<bool> fwd(static_cast<std::size_t>(m - 1), false);
            X[static_cast<std::size_t>(k - 1)] = random_subcomplex(rng, W);
            X[static_cast<std::size_t>(k + 1)] = random_subcomplex(rng, W);
            for (int t = k - 2; t >= 0; --t) {
                const bool up = oracle::pick(rng, 0, 1);
                fwd[static_cast<std::size_t>(t)] = up;
                X[static_cast<std::size_t>(t)] =
                    up ? random_subcomplex(rng, X[static_cast<std::size_t>(t + 1)])
                       : complex_union(X[static_cast<std::size_t>(t + 1)], random_subcomplex(rng, W));
            }
            for (int t = k + 2; t < m; ++t) {
                const bool up = oracle::pick(rng, 0, 1);
                fwd[static_cast<std::size_t>(t - 1)] = up;
                X[static_cast<std::size_t>(t)] =
                    up ? complex_union(X[static_cast<std::size_t>(t - 1)], random_subcomplex(rng, W))
                       : random_subcomplex(rng, X[static_cast<std::size_t>(t - 1)]);
            }

            auto assemble = [&](const simplicial_complex& middle, bool mid_up) {
                zigzag_diagram d;
                for (int t = 0; t < m; ++t)
                    d.spaces.push_back({t == k ? middle : X[static_cast<std::size_t>(t)], {}});
                d.forward = fwd;
                d.forward[static_cast<std::size_t>(k - 1)] = mid_up;
                d.forward[static_cast<std::size_t>(k)] = !mid_up;
                validate(d);
                pos_barcode bc;
                for (int p = 0; p <= 2; ++p)
                    for (auto& br : zigzag_positions(d, p)) bc.push_back(br);
                canonicalize(bc);
                return bc;
            };
            const auto inter =
                assemble(complex_intersection(X[static_cast<std::size_t>(k - 1)],
                                              X[static_cast<std::size_t>(k + 1)]),
                         false);
            const auto uni = assemble(complex_union(X[static_cast<std::size_t>(k - 1)],
                                                    X[static_cast<std::size_t>(k + 1)]),
                                      true);

            if (!pos_barcode_equal(diamond_move(inter, k, m - 1, true, true), uni)) {
                expect(false, "trial " + std::to_string(trial) + ": union barcode differs");
                break;
            }
            // The [k,k] intervals pair across the diamond with a degree shift.
            auto kk_mult = [&](const pos_barcode& bc, int p) {
                long total = 0;
                for (const auto& b : bc)
                    if (b.b == k && b.d == k && b.degree == p) total += b.mult;
                return total;
            };
            for (int p = 0; p <= 3; ++p)
                if (kk_mult(inter, p) != kk_mult(uni, p + 1)) {
                    expect(false, "trial " + std::to_string(trial) + ": [k,k] degree-" +
                                      std::to_string(p) + " pairing count differs");
                    break;
                }
            // Weak form: identical once the [k,k] intervals are removed.
            pos_barcode uni_no_kk;
            for (const auto& b : uni)
                if (!(b.b == k && b.d == k)) uni_no_kk.push_back(b);
            canonicalize(uni_no_kk);
            if (!pos_barcode_equal(diamond_move(inter, k, m - 1, false, true), uni_no_kk)) {
                expect(false, "trial " + std::to_string(trial) + ": weak form differs");
                break;
            }
        }
    });

    criterion(5, "extended essential classes count Betti numbers across the corpus", [] {
        int idx = 0;
        for (const instance& inst : corpus()) {
            const ep_barcode ep = extended_barcode_all(inst.K, inst.f, true);
            for (int p = 0; p <= inst.K.dim(); ++p) {
                long ext = 0;
                for (const ep_entry& e : ep.entries)
                    if (e.itv.degree == p && (e.itv.type == ep_type::ext_plus ||
                                              e.itv.type == ep_type::ext_minus))
                        ext += e.mult;
                const index_t betti = homology(inst.K, p).betti();
                if (ext != betti) {
                    expect(false, "instance " + std::to_string(idx) + " degree " +
                                      std::to_string(p) + ": " + std::to_string(ext) +
                                      " essential intervals vs Betti " + std::to_string(betti));
                }
            }
            ++idx;
        }
    });

    criterion(6, "both bottleneck distances are pseudometrics", [] {
        oracle::rng_t rng(5150);
        int triples = 0;
        while (triples < 1000) {
            const block_barcode A = random_metric_blocks(rng);
            const block_barcode B = jitter_blocks(rng, A);
            const block_barcode C = jitter_blocks(rng, A);
            expect(bottleneck_blocks(A, A, 0) == 0, "blocks: d(x,x) is not exactly zero");
            const value_t ab = bottleneck_blocks(A, B, 0);
            const value_t bc = bottleneck_blocks(B, C, 0);
            const value_t ac = bottleneck_blocks(A, C, 0);
            expect(ab == bottleneck_blocks(B, A, 0), "blocks: asymmetric distance");
            if (std::isinf(ab) || std::isinf(bc) || std::isinf(ac)) continue;
            expect(ac <= ab + bc + 1e-9, "blocks: triangle inequality fails");
            ++triples;
        }
        triples = 0;
        while (triples < 1000) {
            const strip_diagram A = random_metric_strip(rng);
            const strip_diagram B = jitter_strip(rng, A);
            const strip_diagram C = jitter_strip(rng, A);
            expect(bottleneck_strip(A, A) == 0, "strip: d(x,x) is not exactly zero");
            const value_t ab = bottleneck_strip(A, B);
            const value_t bc = bottleneck_strip(B, C);
            const value_t ac = bottleneck_strip(A, C);
            expect(ab == bottleneck_strip(B, A), "strip: asymmetric distance");
            if (std::isinf(ab) || std::isinf(bc) || std::isinf(ac)) continue;
            expect(ac <= ab + bc + 1e-9, "strip: triangle inequality fails");
            ++triples;
        }
    });

    criterion(7, "noise moves both distances by at most its sup norm", [] {
        oracle::rng_t rng(2020);
        std::uniform_real_distribution<value_t> noise(-0.1, 0.1);
        for (int trial = 0; trial < 50; ++trial) {
            const auto G =
                oracle::random_graph(rng, oracle::pick(rng, 3, 10), oracle::pick(rng, 2, 16));
            const auto f = oracle::random_values(rng, G);
            vertex_values g;
            do {
                g.clear();
                for (const auto& [v, x] : f) g[v] = x + noise(rng);
            } while (!is_injective(g));
            value_t delta = 0;
            for (const auto& [v, x] : f) delta = std::max(delta, std::abs(g.at(v) - x));

            const block_barcode bf = blocks_of_graph(G, f);
            const block_barcode bg = blocks_of_graph(G, g);
            std::set<int> degrees;
            for (const auto& e : bf.entries) degrees.insert(e.degree);
            for (const auto& e : bg.entries) degrees.insert(e.degree);
            for (int p : degrees) {
                const value_t d = bottleneck_blocks(bf, bg, p);
                if (!(d <= delta + 1e-9)) {
                    expect(false, "trial " + std::to_string(trial) + " degree " +
                                      std::to_string(p) + ": blocks distance " + std::to_string(d) +
                                      " above gap " + std::to_string(delta));
                }
            }

            const value_t ds = bottleneck_strip(ep_barcode_to_strip(extended_barcode_all(G, f)),
                                                ep_barcode_to_strip(extended_barcode_all(G, g)));
            if (!(ds <= delta + 1e-9)) {
                expect(false, "trial " + std::to_string(trial) + ": strip distance " +
                                  std::to_string(ds) + " above gap " + std::to_string(delta));
            }
        }
    });

    criterion(8, "strip charts: roundtrips, the planar oracle, the commuting triangle", [] {
        oracle::rng_t rng(808808);
        for (int trial = 0; trial < 10000; ++trial) {
            const strip_point p = random_point(rng);
            const auto [deg, iv] = interval_of(p);
            if (!(psi_inv(deg, iv) == p)) {
                expect(false, "point roundtrip differs at " + p.to_string());
                break;
            }
            const int d2 = static_cast<int>(oracle::pick(rng, -2, 3));
            const interval iv2 = random_interval(rng);
            const auto [d3, iv3] = interval_of(psi_inv(d2, iv2));
            if (!(d3 == d2 && iv3 == iv2)) {
                expect(false, "interval roundtrip differs at " + iv2.to_string());
                break;
            }
        }

        int mismatches = 0;
        for (int trial = 0; trial < 10000; ++trial) {
            strip_point p = random_point(rng), q = random_point(rng);
            const int mode = static_cast<int>(oracle::pick(rng, 0, 9));
            if (mode < 4) {
                q = same_square(rng, p);
            } else if (mode < 6) {
                // Adjacent faces: a closed interval one degree below an open one.
                const value_t a = -2 + 0.5 * static_cast<value_t>(oracle::pick(rng, 0, 8));
                const value_t b = a + 0.5 * static_cast<value_t>(oracle::pick(rng, 1, 6));
                const value_t c = -2 + 0.5 * static_cast<value_t>(oracle::pick(rng, 0, 8));
                const value_t d = c + 0.5 * static_cast<value_t>(oracle::pick(rng, 1, 6));
                const int deg = static_cast<int>(oracle::pick(rng, -1, 2));
                p = psi_inv(deg, {a, b, true, true});
                q = psi_inv(deg + 1, {c, d, false, false});
            }
            const value_t got = d_strip(p, q);
            const value_t want = oracle_d(p, q);
            const bool same = (std::isinf(got) && std::isinf(want)) ||
                              (!std::isinf(got) && !std::isinf(want) &&
                               std::abs(got - want) <= 1e-9);
            if (!same && ++mismatches == 1)
                expect(false,
                       "metric differs from the planar oracle: " + p.to_string() + " vs " +
                           q.to_string());
        }

        for (const instance& inst : corpus()) {
            const ep_barcode ep = extended_barcode_all(inst.K, inst.f, true);
            if (!(strip_to_lzz(ep_barcode_to_strip(ep)) == ep_to_lzz(ep))) {
                expect(false, "commuting triangle fails on a corpus instance");
                break;
            }
        }
    });

    criterion(9, "open blocks pair with corners one degree up, endpoints swapped", [] {
        int idx = 0;
        for (const instance& inst : corpus()) {
            if (inst.K.dim() > 1) continue;
            const block_barcode bb = blocks_of_graph(inst.K, inst.f);
            const phi_pairing pp = phi_bijection(bb);
            if (!pp.unpaired.empty())
                expect(false, "instance " + std::to_string(idx) + ": " +
                                  std::to_string(pp.unpaired.size()) + " unpaired diagnostics");
            std::map<std::tuple<int, value_t, value_t>, long> opens, corners;
            for (const block_entry& e : bb.entries) {
                if (e.blk.kind == block_kind::o)
                    opens[{e.degree + 1, e.blk.a, e.blk.b}] += e.mult;
                else if (e.blk.kind == block_kind::c2 && !e.blk.degenerate_corner())
                    corners[{e.degree, e.blk.a, e.blk.b}] += e.mult;
            }
            if (!(opens == corners))
                expect(false, "instance " + std::to_string(idx) +
                                  ": open blocks and corner blocks do not correspond");
            ++idx;
        }
    });

    criterion(10, "command-line contract: round-trip, exit codes, projections", [] {
        // Document round-trips through parse and emit.
        const std::string fixture_path = data_path("circle_extended.json");
        std::ifstream in(fixture_path, std::ios::binary);
        std::ostringstream ss;
        ss << in.rdbuf();
        const barcode_file bf = parse_barcode(ss.str());
        expect(parse_barcode(emit_barcode(bf)).extended == bf.extended,
               "parse after emit changed the barcode");
        expect(emit_barcode(parse_barcode(emit_barcode(bf))) == emit_barcode(bf),
               "emit is not idempotent");

        // Documented exit codes.
        expect(run_tda("barcode " + data_path("circle.json") + " --mode extended").code == 0,
               "success should exit 0");
        expect(run_tda("barcode " + data_path("malformed.json")).code == 2,
               "malformed input should exit 2");
        expect(run_tda("barcode " + data_path("noninjective.json")).code == 3,
               "tied values should exit 3");
        expect(run_tda("convert " + fixture_path + " --to blocks --out /tmp/tda_acc_blocks.json")
                       .code == 0,
               "conversion should exit 0");
        expect(run_tda("distance " + fixture_path + " /tmp/tda_acc_blocks.json --kind blocks")
                       .code == 4,
               "flavor mismatch should exit 4");

        // Eight projected directions of the unit square boundary, under a second.
        const auto t0 = clock_t_::now();
        const proc_result pr = run_tda("project " + data_path("square.json") + " --directions 8");
        const double dt = seconds_since(t0);
        expect(pr.code == 0, "projection failed");
        expect(dt < 1.0, "projection exceeded one second");
        const nlohmann::json doc = nlohmann::json::parse(pr.out);
        expect(doc.at("projections").size() == 8, "expected eight projections");
        for (const auto& p : doc.at("projections")) {
            long plus0 = 0, minus1 = 0;
            for (const auto& e : p.at("entries")) {
                if (e.at("type") == "ExtPlus" && e.at("degree") == 0)
                    plus0 += e.at("mult").get<long>();
                if (e.at("type") == "ExtMinus" && e.at("degree") == 1)
                    minus1 += e.at("mult").get<long>();
            }
            expect(plus0 == 1 && minus1 == 1,
                   "essential counts differ from the square's Betti numbers");
        }
    });

    std::printf("%d of 10 criteria failed\n", n_failed);
    return n_failed == 0 ? 0 : 1;
}

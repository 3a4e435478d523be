#include "tda/quiver.hpp"

#include <algorithm>
#include <cassert>

namespace tda {

void validate(const quiver_rep& q) {
    const int n = q.n_vertices();
    if (q.forward.size() + 1 != q.dims.size() || q.maps.size() != q.forward.size())
        fail(errc::shape_mismatch, "edge count does not match vertex count");
    for (int e = 0; e + 1 < n; ++e) {
        index_t dom = q.forward[e] ? q.dims[e] : q.dims[e + 1];
        index_t cod = q.forward[e] ? q.dims[e + 1] : q.dims[e];
        if (q.maps[e].n_cols() != dom || q.maps[e].n_rows != cod)
            fail(errc::shape_mismatch, "map " + std::to_string(e) + " is " +
                                           std::to_string(q.maps[e].n_rows) + "x" +
                                           std::to_string(q.maps[e].n_cols()) + ", expected " +
                                           std::to_string(cod) + "x" + std::to_string(dom));
        for (const auto& col : q.maps[e].cols)
            if (!col.empty() && col.back() >= cod)
                fail(errc::shape_mismatch, "entry beyond row count in map " + std::to_string(e));
    }
}

quiver_rep interval_module(const std::vector<bool>& orientation, int b, int d) {
    const int n = static_cast<int>(orientation.size()) + 1;
    if (b < 0 || d >= n || b > d)
        fail(errc::index_out_of_range,
             "interval [" + std::to_string(b) + ", " + std::to_string(d) + "] on " +
                 std::to_string(n) + " vertices");
    quiver_rep q;
    q.forward = orientation;
    q.dims.assign(n, 0);
    for (int i = b; i <= d; ++i) q.dims[i] = 1;
    for (int e = 0; e + 1 < n; ++e) {
        bool dom_in = orientation[e] ? (q.dims[e] == 1) : (q.dims[e + 1] == 1);
        bool cod_in = orientation[e] ? (q.dims[e + 1] == 1) : (q.dims[e] == 1);
        gf2_matrix m(cod_in ? 1 : 0, dom_in ? 1 : 0);
        if (dom_in && cod_in) m.cols[0] = {0};  // identity inside the interval
        q.maps.push_back(std::move(m));
    }
    return q;
}

quiver_rep direct_sum(const quiver_rep& a, const quiver_rep& b) {
    if (a.forward != b.forward)
        fail(errc::shape_mismatch, "direct sum needs equal orientations");
    quiver_rep q;
    q.forward = a.forward;
    for (std::size_t i = 0; i < a.dims.size(); ++i) q.dims.push_back(a.dims[i] + b.dims[i]);
    for (std::size_t e = 0; e < a.maps.size(); ++e) {
        index_t ra = a.maps[e].n_rows;
        index_t block_rows = ra + b.maps[e].n_rows;
        gf2_matrix m(block_rows, a.maps[e].n_cols() + b.maps[e].n_cols());
        for (index_t c = 0; c < a.maps[e].n_cols(); ++c) m.cols[c] = a.maps[e].cols[c];
        for (index_t c = 0; c < b.maps[e].n_cols(); ++c) {
            std::vector<index_t> col;
            for (index_t r : b.maps[e].cols[c]) col.push_back(r + ra);
            m.cols[a.maps[e].n_cols() + c] = std::move(col);
        }
        q.maps.push_back(std::move(m));
    }
    return q;
}

namespace {

// A thread is one interval summand under construction: born at position
// `birth`, currently represented by vector x in the space being processed.
struct thread {
    int birth;
    long priority;  // +birth for forward-edge births, -birth otherwise
    long seq;       // creation order, ties
    bitvec x;
    bool alive = true;
};

// Echelon basis with a parallel "shadow" combination used on backward edges
// to re-express survivors inside the image of the backward map.
struct echelon {
    struct row {
        bitvec v;
        index_t high;
        bitvec shadow;
    };
    std::vector<row> rows;
    index_t nbits, shadow_bits;

    echelon(index_t n, index_t sh) : nbits(n), shadow_bits(sh) {}

    // Reduce x in place; accumulates the shadows of the used rows into sh.
    void reduce(bitvec& x, bitvec& sh) const {
        index_t h = bitvec_high(x);
        while (h >= 0) {
            const row* hit = nullptr;
            for (const auto& r : rows)
                if (r.high == h) {
                    hit = &r;
                    break;
                }
            if (!hit) break;
            bitvec_xor(x, hit->v);
            if (!hit->shadow.empty()) bitvec_xor(sh, hit->shadow);
            index_t h2 = bitvec_high(x);
            assert(h2 < h);
            h = h2;
        }
    }

    bool insert(bitvec v, bitvec shadow) {
        bitvec sh_acc = make_bitvec(shadow_bits);
        reduce(v, sh_acc);
        if (bitvec_zero(v)) return false;
        if (!shadow.empty()) bitvec_xor(shadow, sh_acc);
        index_t h = bitvec_high(v);
        rows.push_back({std::move(v), h, std::move(shadow)});
        return true;
    }
};

}  // namespace

pos_barcode decompose(const quiver_rep& q) {
    validate(q);
    const int n = q.n_vertices();
    pos_barcode out;
    if (n == 0) return out;

    std::vector<thread> threads;
    long seq = 0;

    auto spawn = [&](int birth, long priority, bitvec x) {
        threads.push_back(thread{birth, priority, seq++, std::move(x), true});
    };

    // Position 0: every basis vector starts a thread.
    for (index_t k = 0; k < q.dims[0]; ++k) {
        bitvec e = make_bitvec(q.dims[0]);
        bit_set(e, k);
        spawn(0, 0, std::move(e));
    }

    std::vector<std::size_t> order;
    for (int edge = 0; edge + 1 < n; ++edge) {
        const index_t dim_next = q.dims[edge + 1];
        order.clear();
        for (std::size_t i = 0; i < threads.size(); ++i)
            if (threads[i].alive) order.push_back(i);
        std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
            if (threads[a].priority != threads[b].priority)
                return threads[a].priority < threads[b].priority;
            return threads[a].seq < threads[b].seq;
        });

        if (q.forward[edge]) {
            // Push thread vectors through f; a vector falling into the span of
            // earlier-processed images ends its interval here.
            echelon ech(dim_next, 0);
            for (std::size_t ti : order) {
                thread& t = threads[ti];
                bitvec y = gf2_apply(q.maps[edge], t.x);
                bitvec dummy;
                ech.reduce(y, dummy);
                if (bitvec_zero(y)) {
                    t.alive = false;
                    out.push_back({0, t.birth, edge, 1});
                } else {
                    t.x = y;
                    ech.insert(t.x, {});
                }
            }
            // Complete the surviving images to a basis of V_{edge+1}.
            for (index_t k = 0; k < dim_next; ++k) {
                bitvec e = make_bitvec(dim_next);
                bit_set(e, k);
                bitvec dummy;
                ech.reduce(e, dummy);
                if (!bitvec_zero(e)) {
                    ech.insert(e, {});
                    spawn(edge + 1, edge + 1, std::move(e));
                }
            }
        } else {
            // Backward map g : V_{edge+1} -> V_edge.  A thread vector
            // independent of im(g) and of the earlier-processed casualties has
            // no preimage to continue through: it dies here.  A dependent one
            // is rewritten inside im(g) (the shadow tracks its casualty part)
            // and continues on a preimage.
            const gf2_matrix& g = q.maps[edge];
            gf2_reduction gred = column_reduce(g);
            echelon ech(q.dims[edge], q.dims[edge]);
            for (const auto& col : gred.image_basis())
                ech.insert(sparse_to_bitvec(col, q.dims[edge]), {});
            for (std::size_t ti : order) {
                thread& t = threads[ti];
                bitvec r = t.x;
                bitvec sh = make_bitvec(q.dims[edge]);
                ech.reduce(r, sh);
                if (!bitvec_zero(r)) {
                    t.alive = false;
                    out.push_back({0, t.birth, edge, 1});
                    bitvec casualty = t.x;  // residual = im-part + (own vector + used shadows)
                    bitvec_xor(casualty, sh);
                    ech.insert(std::move(r), std::move(casualty));
                } else {
                    bitvec adjusted = t.x;
                    bitvec_xor(adjusted, sh);  // now inside im(g)
                    auto pre = gred.solve(bitvec_to_sparse(adjusted));
                    assert(pre.has_value());
                    t.x = sparse_to_bitvec(*pre, dim_next);
                }
            }
            // New intervals open on ker g.
            for (const auto& k : gred.kernel_basis())
                spawn(edge + 1, -static_cast<long>(edge + 1), sparse_to_bitvec(k, dim_next));
        }
    }

    for (const auto& t : threads)
        if (t.alive) out.push_back({0, t.birth, n - 1, 1});

    canonicalize(out);
    return out;
}

}  // namespace tda

#pragma once

// Independent reference implementations used to cross-check the library.
// Everything here is written against the plainest possible algorithm and
// shares no code with the modules under test.

#include <algorithm>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "tda/complex.hpp"
#include "tda/gf2.hpp"
#include "tda/quiver.hpp"

namespace oracle {

using tda::index_t;
using tda::value_t;

using dense_matrix = std::vector<std::vector<int>>;  // row major, entries 0/1

inline dense_matrix to_dense(const tda::gf2_matrix& m) {
    dense_matrix d(m.n_rows, std::vector<int>(m.cols.size(), 0));
    for (std::size_t c = 0; c < m.cols.size(); ++c)
        for (index_t r : m.cols[c]) d[r][c] = 1;
    return d;
}

inline tda::gf2_matrix from_dense(const dense_matrix& d, index_t n_rows, index_t n_cols) {
    tda::gf2_matrix m(n_rows, n_cols);
    for (index_t r = 0; r < n_rows; ++r)
        for (index_t c = 0; c < n_cols; ++c)
            if (d[r][c]) m.cols[c].push_back(r);
    return m;
}

// Plain row-echelon rank over GF(2), dense rows.
inline index_t dense_rank(dense_matrix a) {
    if (a.empty()) return 0;
    std::size_t n_rows = a.size(), n_cols = a[0].size();
    index_t rank = 0;
    std::size_t row = 0;
    for (std::size_t col = 0; col < n_cols && row < n_rows; ++col) {
        std::size_t piv = row;
        while (piv < n_rows && a[piv][col] == 0) ++piv;
        if (piv == n_rows) continue;
        std::swap(a[row], a[piv]);
        for (std::size_t r = 0; r < n_rows; ++r)
            if (r != row && a[r][col])
                for (std::size_t c = col; c < n_cols; ++c) a[r][c] ^= a[row][c];
        ++row;
        ++rank;
    }
    return rank;
}

inline index_t dense_rank(const tda::gf2_matrix& m) { return dense_rank(to_dense(m)); }

// Kernel basis via full row reduction, dense.
inline std::vector<std::vector<int>> dense_kernel(dense_matrix a, std::size_t n_cols) {
    std::size_t n_rows = a.size();
    std::vector<index_t> pivot_of_col(n_cols, -1);
    std::size_t row = 0;
    for (std::size_t col = 0; col < n_cols && row < n_rows; ++col) {
        std::size_t piv = row;
        while (piv < n_rows && a[piv][col] == 0) ++piv;
        if (piv == n_rows) continue;
        std::swap(a[row], a[piv]);
        for (std::size_t r = 0; r < n_rows; ++r)
            if (r != row && a[r][col])
                for (std::size_t c = 0; c < n_cols; ++c) a[r][c] ^= a[row][c];
        pivot_of_col[col] = static_cast<index_t>(row);
        ++row;
    }
    std::vector<std::vector<int>> basis;
    for (std::size_t free_col = 0; free_col < n_cols; ++free_col) {
        if (pivot_of_col[free_col] != -1) continue;
        std::vector<int> v(n_cols, 0);
        v[free_col] = 1;
        for (std::size_t col = 0; col < n_cols; ++col)
            if (pivot_of_col[col] != -1 && a[pivot_of_col[col]][free_col]) v[col] = 1;
        basis.push_back(std::move(v));
    }
    return basis;
}

// ---------------------------------------------------------------------------
// Random generators.
// ---------------------------------------------------------------------------

using rng_t = std::mt19937_64;

inline index_t pick(rng_t& rng, index_t lo, index_t hi) {  // inclusive
    return std::uniform_int_distribution<index_t>(lo, hi)(rng);
}

inline tda::gf2_matrix random_matrix(rng_t& rng, index_t rows, index_t cols, double density = 0.4) {
    tda::gf2_matrix m(rows, cols);
    std::bernoulli_distribution coin(density);
    for (index_t c = 0; c < cols; ++c)
        for (index_t r = 0; r < rows; ++r)
            if (coin(rng)) m.cols[c].push_back(r);
    return m;
}

// Random invertible matrix: product of elementary operations on the identity.
inline tda::gf2_matrix random_invertible(rng_t& rng, index_t n) {
    if (n == 0) return tda::gf2_matrix(0, 0);
    dense_matrix a(n, std::vector<int>(n, 0));
    for (index_t i = 0; i < n; ++i) a[i][i] = 1;
    index_t n_ops = 3 * n + 4;
    for (index_t k = 0; k < n_ops; ++k) {
        index_t i = pick(rng, 0, n - 1), j = pick(rng, 0, n - 1);
        if (i == j) continue;
        if (pick(rng, 0, 1)) {
            for (index_t c = 0; c < n; ++c) a[i][c] ^= a[j][c];  // row add
        } else {
            std::swap(a[i], a[j]);
        }
    }
    return from_dense(a, n, n);
}

// ---------------------------------------------------------------------------
// Generalized rank oracle for type-A representations: the multiplicity of the
// interval [b, d] equals an inclusion-exclusion over ranks of the composite
// (limit over [b, d]) -> (colimit over [b, d]).
// ---------------------------------------------------------------------------

inline index_t gen_rank(const tda::quiver_rep& q, int b, int d) {
    std::vector<index_t> offset(d - b + 2, 0);  // slot starts within the window
    for (int v = b; v <= d; ++v) offset[v - b + 1] = offset[v - b] + q.dims[v];
    index_t total = offset[d - b + 1];

    // Limit: kernel of the stacked compatibility constraints, one block per edge.
    index_t n_constraints = 0;
    for (int e = b; e < d; ++e) n_constraints += q.forward[e] ? q.dims[e + 1] : q.dims[e];
    dense_matrix constraints(n_constraints, std::vector<int>(total, 0));
    index_t row0 = 0;
    for (int e = b; e < d; ++e) {
        auto md = to_dense(q.maps[e]);
        index_t src = q.forward[e] ? e : e + 1, dst = q.forward[e] ? e + 1 : e;
        index_t rows = q.dims[dst];
        for (index_t r = 0; r < rows; ++r) {
            for (index_t c = 0; c < q.dims[src]; ++c)
                if (md[r][c]) constraints[row0 + r][offset[src - b] + c] ^= 1;
            constraints[row0 + r][offset[dst - b] + r] ^= 1;
        }
        row0 += rows;
    }
    auto lim = dense_kernel(constraints, total);

    // Colimit relations inside the direct sum of the window slots.
    std::vector<std::vector<int>> rel;
    for (int e = b; e < d; ++e) {
        auto md = to_dense(q.maps[e]);
        index_t src = q.forward[e] ? e : e + 1, dst = q.forward[e] ? e + 1 : e;
        for (index_t c = 0; c < q.dims[src]; ++c) {
            std::vector<int> v(total, 0);
            v[offset[src - b] + c] ^= 1;
            for (index_t r = 0; r < q.dims[dst]; ++r)
                if (md[r][c]) v[offset[dst - b] + r] ^= 1;
            rel.push_back(std::move(v));
        }
    }

    // Image of a limit element in the colimit: project to slot b, embed.
    std::vector<std::vector<int>> both = rel;
    for (const auto& l : lim) {
        std::vector<int> v(total, 0);
        for (index_t c = 0; c < q.dims[b]; ++c) v[c] = l[c];
        both.push_back(std::move(v));
    }

    auto as_cols = [&](const std::vector<std::vector<int>>& vs) {
        dense_matrix m(total, std::vector<int>(vs.size(), 0));
        for (std::size_t j = 0; j < vs.size(); ++j)
            for (index_t r = 0; r < total; ++r) m[r][j] = vs[j][r];
        return m;
    };
    return dense_rank(as_cols(both)) - dense_rank(as_cols(rel));
}

// Full interval multiset by Mobius inversion of gen_rank over containment.
inline tda::pos_barcode quiver_barcode(const tda::quiver_rep& q) {
    int n = q.n_vertices();
    auto r = [&](int b, int d) -> index_t {
        if (b < 0 || d > n - 1 || b > d) return 0;
        return gen_rank(q, b, d);
    };
    tda::pos_barcode out;
    for (int b = 0; b < n; ++b)
        for (int d = b; d < n; ++d) {
            index_t m = r(b, d) - r(b - 1, d) - r(b, d + 1) + r(b - 1, d + 1);
            if (m > 0) out.push_back({0, b, d, m});
        }
    tda::canonicalize(out);
    return out;
}

// ---------------------------------------------------------------------------
// Textbook persistence of a filtered complex: one global boundary matrix in
// filtration order, left-to-right reduction by lowest entry.
// Returns (birth index, death index or -1, degree) triples over the order.
// ---------------------------------------------------------------------------

struct filtration_cell {
    tda::simplex s;
    value_t value;
    int degree;
};

struct reduction_pair {
    index_t birth, death;  // positions in filtration order; death = -1 for essential
    int degree;
};

inline std::vector<reduction_pair> classic_reduction(const std::vector<filtration_cell>& cells) {
    index_t n = static_cast<index_t>(cells.size());
    std::map<tda::simplex, index_t> pos;
    for (index_t i = 0; i < n; ++i) pos[cells[i].s] = i;

    std::vector<std::set<index_t>> col(n);
    for (index_t i = 0; i < n; ++i) {
        const auto& s = cells[i].s;
        if (s.size() < 2) continue;
        for (std::size_t k = 0; k < s.size(); ++k) {
            tda::simplex face;
            for (std::size_t t = 0; t < s.size(); ++t)
                if (t != k) face.push_back(s[t]);
            col[i].insert(pos.at(face));
        }
    }

    std::vector<index_t> owner_of_low(n, -1);
    std::vector<bool> is_death(n, false);
    std::vector<reduction_pair> pairs;
    for (index_t j = 0; j < n; ++j) {
        while (!col[j].empty()) {
            index_t low = *col[j].rbegin();
            index_t other = owner_of_low[low];
            if (other == -1) break;
            for (index_t r : col[other]) {
                if (col[j].count(r))
                    col[j].erase(r);
                else
                    col[j].insert(r);
            }
        }
        if (!col[j].empty()) {
            index_t low = *col[j].rbegin();
            owner_of_low[low] = j;
            is_death[j] = true;
            pairs.push_back({low, j, cells[low].degree});
        }
    }
    for (index_t j = 0; j < n; ++j)
        if (!is_death[j] && owner_of_low[j] == -1)
            pairs.push_back({j, -1, cells[j].degree});
    return pairs;
}

// Cells of a complex ordered for the sublevel filtration of vertex values:
// by (max vertex value, dimension, lexicographic ids).
inline std::vector<filtration_cell> sublevel_filtration(const tda::simplicial_complex& K,
                                                        const tda::vertex_values& f) {
    std::vector<filtration_cell> cells;
    for (int p = 0; p <= K.dim(); ++p)
        for (const auto& s : K.by_dim[p]) {
            value_t v = -tda::inf;
            for (index_t u : s) v = std::max(v, f.at(u));
            cells.push_back({s, v, p});
        }
    std::sort(cells.begin(), cells.end(), [](const filtration_cell& a, const filtration_cell& b) {
        return std::tie(a.value, a.degree, a.s) < std::tie(b.value, b.degree, b.s);
    });
    return cells;
}

// ---------------------------------------------------------------------------
// Union-find component count.
// ---------------------------------------------------------------------------

struct union_find {
    std::map<index_t, index_t> parent;
    index_t find(index_t x) {
        auto it = parent.find(x);
        if (it == parent.end()) {
            parent[x] = x;
            return x;
        }
        if (it->second == x) return x;
        return it->second = find(it->second);
    }
    void unite(index_t a, index_t b) { parent[find(a)] = find(b); }
    index_t components() {
        std::set<index_t> roots;
        for (auto& [k, v] : parent) roots.insert(find(k));
        return static_cast<index_t>(roots.size());
    }
};

// Betti numbers of the open-window preimage of a function on a graph: the
// span of the in-window vertices plus one free arc per edge crossing the
// whole window.
inline std::pair<index_t, index_t> graph_window_betti(const tda::simplicial_complex& G,
                                                      const tda::vertex_values& f, value_t x,
                                                      value_t y) {
    union_find uf;
    index_t n_vert = 0, n_edge = 0, n_spanning = 0;
    for (const auto& s : G.by_dim[0]) {
        value_t v = f.at(s[0]);
        if (x < v && v < y) {
            uf.find(s[0]);
            ++n_vert;
        }
    }
    if (G.dim() >= 1)
        for (const auto& e : G.by_dim[1]) {
            value_t a = f.at(e[0]), b = f.at(e[1]);
            if (a > b) std::swap(a, b);
            bool a_in = x < a && a < y, b_in = x < b && b < y;
            if (a_in && b_in) {
                uf.unite(e[0], e[1]);
                ++n_edge;
            } else if (a <= x && y <= b) {
                // neither endpoint inside: the edge leaves an open arc behind
                ++n_spanning;
            }
        }
    index_t comp = uf.components();
    index_t b0 = comp + n_spanning;
    index_t b1 = n_edge - n_vert + comp;
    return {b0, b1};
}

// Random graph with n vertices (ids 0..n-1) and up to m distinct edges.
inline tda::simplicial_complex random_graph(rng_t& rng, index_t n, index_t m) {
    std::set<std::pair<index_t, index_t>> edges;
    for (index_t k = 0; k < m; ++k) {
        index_t a = pick(rng, 0, n - 1), b = pick(rng, 0, n - 1);
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        edges.insert({a, b});
    }
    std::vector<tda::simplex> top;
    for (index_t v = 0; v < n; ++v) top.push_back({v});
    for (auto& [a, b] : edges) top.push_back({a, b});
    return tda::build_complex(top);
}

inline tda::vertex_values random_values(rng_t& rng, const tda::simplicial_complex& K,
                                        value_t lo = -1.0, value_t hi = 1.0) {
    // Injective: shuffled evenly spaced values with a small jitter.
    auto ids = K.vertex_ids();
    std::vector<value_t> vals;
    index_t n = static_cast<index_t>(ids.size());
    for (index_t i = 0; i < n; ++i)
        vals.push_back(lo + (hi - lo) * (static_cast<value_t>(i) + 0.5) / static_cast<value_t>(n));
    std::shuffle(vals.begin(), vals.end(), rng);
    tda::vertex_values f;
    for (index_t i = 0; i < n; ++i) f[ids[i]] = vals[i];
    return f;
}

}  // namespace oracle

#include "tda/complex.hpp"

#include <algorithm>
#include <cassert>
#include <set>

namespace tda {

index_t simplicial_complex::index_of(int p, const simplex& s) const {
    if (p < 0 || p > dim()) return -1;
    const auto& list = by_dim[p];
    auto it = std::lower_bound(list.begin(), list.end(), s);
    if (it != list.end() && *it == s) return it - list.begin();
    return -1;
}

bool simplicial_complex::contains(const simplex& s) const {
    return index_of(static_cast<int>(s.size()) - 1, s) >= 0;
}

std::vector<index_t> simplicial_complex::vertex_ids() const {
    std::vector<index_t> out;
    if (by_dim.empty()) return out;
    out.reserve(by_dim[0].size());
    for (const auto& v : by_dim[0]) out.push_back(v[0]);
    return out;
}

simplicial_complex build_complex(const std::vector<simplex>& top) {
    std::vector<std::set<simplex>> acc;
    for (const auto& raw : top) {
        simplex s = raw;
        std::sort(s.begin(), s.end());
        if (std::adjacent_find(s.begin(), s.end()) != s.end())
            fail(errc::duplicate_vertex_in_simplex, "repeated vertex in simplex");
        if (s.empty()) continue;
        // close under faces: every nonempty subset
        const std::size_t n = s.size();
        for (std::size_t mask = 1; mask < (std::size_t(1) << n); ++mask) {
            simplex face;
            for (std::size_t b = 0; b < n; ++b)
                if (mask & (std::size_t(1) << b)) face.push_back(s[b]);
            std::size_t p = face.size() - 1;
            if (acc.size() <= p) acc.resize(p + 1);
            acc[p].insert(std::move(face));
        }
    }
    simplicial_complex K;
    for (auto& level : acc) K.by_dim.emplace_back(level.begin(), level.end());
    return K;
}

simplicial_complex span_subcomplex(const simplicial_complex& K,
                                   const std::function<bool(index_t)>& keep) {
    simplicial_complex out;
    for (const auto& level : K.by_dim) {
        std::vector<simplex> kept;
        for (const auto& s : level)
            if (std::all_of(s.begin(), s.end(), keep)) kept.push_back(s);
        out.by_dim.push_back(std::move(kept));
    }
    while (!out.by_dim.empty() && out.by_dim.back().empty()) out.by_dim.pop_back();
    return out;
}

bool is_subcomplex(const simplicial_complex& L, const simplicial_complex& K) {
    for (const auto& level : L.by_dim)
        for (const auto& s : level)
            if (!K.contains(s)) return false;
    return true;
}

simplicial_complex complex_union(const simplicial_complex& a, const simplicial_complex& b) {
    static const std::vector<simplex> empty_level;
    simplicial_complex out;
    int d = std::max(a.dim(), b.dim());
    for (int p = 0; p <= d; ++p) {
        std::vector<simplex> merged;
        const auto& xa = p <= a.dim() ? a.by_dim[p] : empty_level;
        const auto& xb = p <= b.dim() ? b.by_dim[p] : empty_level;
        std::set_union(xa.begin(), xa.end(), xb.begin(), xb.end(), std::back_inserter(merged));
        out.by_dim.push_back(std::move(merged));
    }
    while (!out.by_dim.empty() && out.by_dim.back().empty()) out.by_dim.pop_back();
    return out;
}

simplicial_complex complex_intersection(const simplicial_complex& a, const simplicial_complex& b) {
    simplicial_complex out;
    int d = std::min(a.dim(), b.dim());
    for (int p = 0; p <= d; ++p) {
        std::vector<simplex> common;
        std::set_intersection(a.by_dim[p].begin(), a.by_dim[p].end(), b.by_dim[p].begin(),
                              b.by_dim[p].end(), std::back_inserter(common));
        out.by_dim.push_back(std::move(common));
    }
    while (!out.by_dim.empty() && out.by_dim.back().empty()) out.by_dim.pop_back();
    return out;
}

relative_pair make_pair_checked(simplicial_complex K, simplicial_complex L) {
    if (!is_subcomplex(L, K))
        fail(errc::sub_not_contained, "L is not a subcomplex of K");
    return relative_pair{std::move(K), std::move(L)};
}

chain_complex make_chain_complex(const simplicial_complex& K) {
    chain_complex cc;
    int d = K.dim();
    for (int p = 0; p <= d; ++p) {
        gf2_matrix bd(K.size(p - 1), K.size(p));
        if (p > 0) {
            for (index_t c = 0; c < K.size(p); ++c) {
                const simplex& s = K.by_dim[p][c];
                std::vector<index_t> rows;
                for (std::size_t drop = 0; drop < s.size(); ++drop) {
                    simplex face;
                    for (std::size_t k = 0; k < s.size(); ++k)
                        if (k != drop) face.push_back(s[k]);
                    index_t r = K.index_of(p - 1, face);
                    assert(r >= 0);
                    rows.push_back(r);
                }
                std::sort(rows.begin(), rows.end());
                bd.cols[c] = std::move(rows);
            }
        }
        cc.boundary.push_back(std::move(bd));
    }
    // structural check: consecutive boundaries compose to zero
    for (int p = 1; p < static_cast<int>(cc.boundary.size()); ++p) {
        gf2_matrix z = gf2_multiply(cc.boundary[p - 1], cc.boundary[p]);
        for (const auto& col : z.cols) assert(col.empty());
        (void)z;
    }
    return cc;
}

namespace {

// Simplices of K \ L in degree p, in K's order.
std::vector<simplex> quotient_cells(const relative_pair& pr, int p) {
    std::vector<simplex> out;
    for (index_t i = 0; i < pr.K.size(p); ++i) {
        const simplex& s = pr.K.by_dim[p][i];
        if (!pr.L.contains(s)) out.push_back(s);
    }
    return out;
}

index_t cell_index(const std::vector<simplex>& cells, const simplex& s) {
    auto it = std::lower_bound(cells.begin(), cells.end(), s);
    if (it != cells.end() && *it == s) return it - cells.begin();
    return -1;
}

// Boundary of the quotient complex from degree p to p-1.
gf2_matrix quotient_boundary(const relative_pair& pr, const std::vector<simplex>& cells_lo,
                             const std::vector<simplex>& cells_hi, int p) {
    gf2_matrix bd(static_cast<index_t>(cells_lo.size()), static_cast<index_t>(cells_hi.size()));
    if (p <= 0) return bd;
    for (std::size_t c = 0; c < cells_hi.size(); ++c) {
        const simplex& s = cells_hi[c];
        std::vector<index_t> rows;
        for (std::size_t drop = 0; drop < s.size(); ++drop) {
            simplex face;
            for (std::size_t k = 0; k < s.size(); ++k)
                if (k != drop) face.push_back(s[k]);
            index_t r = cell_index(cells_lo, face);
            if (r >= 0) rows.push_back(r);  // faces inside L vanish in the quotient
        }
        std::sort(rows.begin(), rows.end());
        bd.cols[c] = std::move(rows);
    }
    return bd;
}

}  // namespace

homology_basis relative_homology(const relative_pair& pr, int p) {
    if (!is_subcomplex(pr.L, pr.K))
        fail(errc::sub_not_contained, "relative pair: L not contained in K");
    homology_basis st;
    st.pair = pr;
    st.p = p;
    st.cells = quotient_cells(pr, p);
    auto cells_lo = quotient_cells(pr, p - 1);
    auto cells_hi = quotient_cells(pr, p + 1);
    gf2_matrix bd_p = quotient_boundary(pr, cells_lo, st.cells, p);
    gf2_matrix bd_q = quotient_boundary(pr, st.cells, cells_hi, p + 1);

    auto cycles = column_reduce(bd_p).kernel_basis();
    auto boundaries = column_reduce(bd_q).image_basis();

    // Reduce [boundaries | cycles]; surviving cycle-block columns are a basis
    // of H_p(K, L), already expressed as cycles.
    gf2_matrix probe(static_cast<index_t>(st.cells.size()), 0);
    probe.cols = boundaries;
    for (const auto& z : cycles) probe.cols.push_back(z);
    gf2_reduction pr_red = column_reduce(probe);
    for (std::size_t j = boundaries.size(); j < probe.cols.size(); ++j)
        if (!pr_red.reduced.cols[j].empty()) st.basis.push_back(pr_red.reduced.cols[j]);

    gf2_matrix expr = bd_q;
    st.n_bdry_cols = expr.n_cols();
    for (const auto& z : st.basis) expr.cols.push_back(z);
    st.express = column_reduce(expr);
    return st;
}

homology_basis homology(const simplicial_complex& K, int p) {
    return relative_homology(relative_pair{K, simplicial_complex{}}, p);
}

std::vector<index_t> homology_basis::express_class(const std::vector<index_t>& cycle) const {
    auto sol = express.solve(cycle);
    if (!sol)
        fail(errc::basis_mismatch, "chain is not a cycle of the pair modulo boundaries");
    std::vector<index_t> coef;
    for (index_t c : *sol)
        if (c >= n_bdry_cols) coef.push_back(c - n_bdry_cols);
    std::sort(coef.begin(), coef.end());
    return coef;
}

gf2_matrix induced_map(const homology_basis& src, const homology_basis& dst) {
    if (!is_subcomplex(src.pair.K, dst.pair.K) || !is_subcomplex(src.pair.L, dst.pair.L))
        fail(errc::not_an_inclusion, "source pair is not included in destination pair");
    if (src.p != dst.p) fail(errc::shape_mismatch, "induced map needs equal degrees");
    gf2_matrix out(dst.betti(), src.betti());
    for (std::size_t j = 0; j < src.basis.size(); ++j) {
        std::vector<index_t> pushed;
        for (index_t idx : src.basis[j]) {
            const simplex& s = src.cells[idx];
            if (dst.pair.L.contains(s)) continue;  // dies in the quotient
            index_t t = cell_index(dst.cells, s);
            if (t < 0) fail(errc::not_an_inclusion, "cycle simplex missing from destination");
            pushed.push_back(t);
        }
        std::sort(pushed.begin(), pushed.end());
        out.cols[j] = dst.express_class(pushed);
    }
    return out;
}

std::pair<simplicial_complex, vertex_values> split_graph_at_levels(
    const simplicial_complex& G, const vertex_values& f, const std::vector<value_t>& levels) {
    if (G.dim() > 1)
        fail(errc::dimension_too_high, "level split needs a graph, got dimension " +
                                           std::to_string(G.dim()));
    std::vector<value_t> lv = levels;
    std::sort(lv.begin(), lv.end());
    lv.erase(std::unique(lv.begin(), lv.end()), lv.end());

    vertex_values out_f;
    index_t next_id = 0;
    for (index_t v : G.vertex_ids()) {
        auto it = f.find(v);
        if (it == f.end())
            fail(errc::index_out_of_range, "no value for vertex " + std::to_string(v));
        for (value_t s : lv)
            if (s == it->second)
                fail(errc::level_hits_vertex,
                     "level " + format_value(s) + " hits vertex " + std::to_string(v));
        out_f[v] = it->second;
        next_id = std::max(next_id, v + 1);
    }

    std::vector<simplex> edges;
    if (G.dim() >= 1) {
        for (const auto& e : G.by_dim[1]) {
            value_t fu = out_f.at(e[0]), fv = out_f.at(e[1]);
            index_t lo_v = e[0], hi_v = e[1];
            if (fu > fv) std::swap(lo_v, hi_v), std::swap(fu, fv);
            // levels strictly inside (fu, fv), ascending
            index_t prev = lo_v;
            for (value_t s : lv) {
                if (s <= fu) continue;
                if (s >= fv) break;
                index_t w = next_id++;
                out_f[w] = s;
                edges.push_back({prev, w});
                prev = w;
            }
            edges.push_back({prev, hi_v});
        }
    }
    std::vector<simplex> top = edges;
    if (!G.by_dim.empty())
        for (const auto& v : G.by_dim[0]) top.push_back(v);
    return {build_complex(top), std::move(out_f)};
}

}  // namespace tda

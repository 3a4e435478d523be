#include "tda/persistence.hpp"

#include <algorithm>
#include <set>

namespace tda {

bool is_injective(const vertex_values& f) {
    std::set<value_t> seen;
    for (auto& [v, val] : f)
        if (!seen.insert(val).second) return false;
    return true;
}

std::vector<value_t> critical_values(const vertex_values& f) {
    std::set<value_t> vals;
    for (auto& [v, val] : f) vals.insert(val);
    return {vals.begin(), vals.end()};
}

int critical_index(const std::vector<value_t>& crit, value_t v) {
    auto it = std::lower_bound(crit.begin(), crit.end(), v);
    if (it == crit.end() || *it != v)
        fail(errc::index_out_of_range, "value is not critical: " + format_value(v));
    return static_cast<int>(it - crit.begin()) + 1;
}

std::vector<index_t> vertex_order(const simplicial_complex& K, const vertex_values& f) {
    auto ids = K.vertex_ids();
    for (index_t v : ids)
        if (!f.count(v))
            fail(errc::index_out_of_range, "no value for vertex " + std::to_string(v));
    std::sort(ids.begin(), ids.end(),
              [&](index_t a, index_t b) { return std::make_pair(f.at(a), a) < std::make_pair(f.at(b), b); });
    return ids;
}

// ---------------------------------------------------------------------------
// Homology quivers of inclusion diagrams.
// ---------------------------------------------------------------------------

namespace {

quiver_rep homology_quiver(const std::vector<relative_pair>& spaces,
                           const std::vector<bool>& forward, int p) {
    std::vector<homology_basis> bases;
    bases.reserve(spaces.size());
    for (auto& pr : spaces) bases.push_back(relative_homology(pr, p));

    quiver_rep q;
    for (auto& h : bases) q.dims.push_back(h.betti());
    q.forward = forward;
    for (std::size_t e = 0; e + 1 < spaces.size(); ++e) {
        const auto& src = forward[e] ? bases[e] : bases[e + 1];
        const auto& dst = forward[e] ? bases[e + 1] : bases[e];
        q.maps.push_back(induced_map(src, dst));
    }
    return q;
}

relative_pair absolute(simplicial_complex K) { return {std::move(K), simplicial_complex{}}; }

}  // namespace

// ---------------------------------------------------------------------------
// Ordinary sublevel persistence.
// ---------------------------------------------------------------------------

graded_barcode ordinary_barcode(const simplicial_complex& K, const vertex_values& f, int p) {
    graded_barcode out;
    out.kind = flavor::ordinary;
    out.critical_values = critical_values(f);
    auto order = vertex_order(K, f);
    index_t n = static_cast<index_t>(order.size());
    if (n == 0) return out;

    std::vector<relative_pair> spaces;
    std::vector<bool> fwd(n, true);
    for (index_t t = 0; t <= n; ++t) {
        std::set<index_t> low(order.begin(), order.begin() + t);
        spaces.push_back(absolute(span_subcomplex(K, [&](index_t v) { return low.count(v) > 0; })));
    }
    auto bars = decompose(homology_quiver(spaces, fwd, p));

    for (auto& pb : bars) {
        // born entering position b, dead entering position d + 1
        value_t lo = f.at(order[pb.b - 1]);
        if (pb.d == n) {
            out.entries.push_back({p, {lo, inf, true, false}, pb.mult});
        } else {
            value_t hi = f.at(order[pb.d]);
            if (lo == hi) continue;  // empty half-open bar under ties
            out.entries.push_back({p, {lo, hi, true, false}, pb.mult});
        }
    }
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------
// Extended persistence.
// ---------------------------------------------------------------------------

extended_filtration_t extended_filtration(const simplicial_complex& K, const vertex_values& f) {
    extended_filtration_t out;
    out.order = vertex_order(K, f);
    index_t n = static_cast<index_t>(out.order.size());
    for (index_t t = 0; t <= n; ++t) {
        std::set<index_t> low(out.order.begin(), out.order.begin() + t);
        out.sublevels.push_back(span_subcomplex(K, [&](index_t v) { return low.count(v) > 0; }));
    }
    for (index_t j = 0; j <= n; ++j) {
        std::set<index_t> high(out.order.end() - j, out.order.end());
        out.pairs.push_back(
            {K, span_subcomplex(K, [&](index_t v) { return high.count(v) > 0; })});
    }
    return out;
}

ep_barcode extended_barcode(const simplicial_complex& K, const vertex_values& f, int p,
                            bool allow_ties) {
    if (!allow_ties && !is_injective(f))
        fail(errc::not_injective, "vertex values are not distinct");

    ep_barcode out;
    out.critical_values = critical_values(f);
    auto filt = extended_filtration(K, f);
    index_t n = static_cast<index_t>(filt.order.size());
    if (n == 0) return out;

    // Positions 0..2n: sublevels K_0..K_n, then pairs (K, L_1)..(K, L_n).
    std::vector<relative_pair> spaces;
    for (index_t t = 0; t <= n; ++t) spaces.push_back(absolute(filt.sublevels[t]));
    for (index_t j = 1; j <= n; ++j) spaces.push_back(filt.pairs[j]);
    std::vector<bool> fwd(spaces.size() - 1, true);
    auto bars = decompose(homology_quiver(spaces, fwd, p));

    auto vertex_value = [&](index_t t) { return f.at(filt.order[t - 1]); };  // t is 1-based
    for (auto& pb : bars) {
        // birth entering position b; death entering position d + 1
        bool birth_abs = pb.b <= n;
        value_t vb = birth_abs ? vertex_value(pb.b) : vertex_value(n - (pb.b - n) + 1);
        index_t death_pos = pb.d + 1;
        // position 2n carries H(K, K) = 0, so every interval dies before it
        bool death_abs = death_pos <= n;
        value_t vd = death_abs ? vertex_value(death_pos) : vertex_value(n - (death_pos - n) + 1);
        int bi = critical_index(out.critical_values, vb);
        int di = critical_index(out.critical_values, vd);

        ep_interval itv;
        itv.degree = p;
        if (birth_abs && death_abs) {
            if (bi == di) continue;  // empty bar under ties
            itv.type = ep_type::ord;
            itv.i = bi;
            itv.j = di;
        } else if (!birth_abs && !death_abs) {
            if (bi == di) continue;
            itv.type = ep_type::rel;
            itv.i = di;
            itv.j = bi;
        } else {  // born absolute, dies relative: essential
            if (bi <= di) {
                itv.type = ep_type::ext_plus;
                itv.i = bi;
                itv.j = di;
            } else {
                itv.type = ep_type::ext_minus;
                itv.i = di;
                itv.j = bi;
            }
        }
        check_ep_interval(itv, static_cast<int>(out.critical_values.size()));
        out.entries.push_back({itv, pb.mult});
    }
    out.canonicalize();
    return out;
}

ep_barcode extended_barcode_all(const simplicial_complex& K, const vertex_values& f,
                                bool allow_ties, bool parallel) {
    int top = std::max(K.dim(), 0);
    std::vector<ep_barcode> per_degree(top + 1);
#ifdef _OPENMP
    if (parallel) {
#pragma omp parallel for schedule(dynamic)
        for (int p = 0; p <= top; ++p) per_degree[p] = extended_barcode(K, f, p, allow_ties);
    } else
#endif
    {
        (void)parallel;
        for (int p = 0; p <= top; ++p) per_degree[p] = extended_barcode(K, f, p, allow_ties);
    }
    ep_barcode out;
    out.critical_values = critical_values(f);
    for (auto& bc : per_degree)
        out.entries.insert(out.entries.end(), bc.entries.begin(), bc.entries.end());
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------
// Zigzag diagrams.
// ---------------------------------------------------------------------------

void validate(const zigzag_diagram& d) {
    if (d.spaces.empty()) fail(errc::shape_mismatch, "empty diagram");
    if (d.forward.size() + 1 != d.spaces.size())
        fail(errc::shape_mismatch, "arrow count does not match space count");
    for (std::size_t e = 0; e + 1 < d.spaces.size(); ++e) {
        const auto& src = d.forward[e] ? d.spaces[e] : d.spaces[e + 1];
        const auto& dst = d.forward[e] ? d.spaces[e + 1] : d.spaces[e];
        if (!is_subcomplex(src.K, dst.K) || !is_subcomplex(src.L, dst.L))
            fail(errc::not_an_inclusion, "arrow " + std::to_string(e));
    }
}

pos_barcode zigzag_positions(const zigzag_diagram& d, int p) {
    validate(d);
    auto bars = decompose(homology_quiver(d.spaces, d.forward, p));
    for (auto& b : bars) b.degree = p;
    return bars;
}

graded_barcode zigzag_barcode(const zigzag_diagram& d, int p) {
    graded_barcode out;
    out.kind = flavor::zigzag;
    for (auto& pb : zigzag_positions(d, p))
        out.entries.push_back(
            {p, {static_cast<value_t>(pb.b), static_cast<value_t>(pb.d), true, true}, pb.mult});
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------
// Levelsets zigzag on graphs.
// ---------------------------------------------------------------------------

std::vector<value_t> regular_values(const std::vector<value_t>& criticals) {
    std::vector<value_t> s;
    if (criticals.empty()) return s;
    s.push_back(criticals.front() - 1);
    for (std::size_t i = 0; i + 1 < criticals.size(); ++i)
        s.push_back((criticals[i] + criticals[i + 1]) / 2);
    s.push_back(criticals.back() + 1);
    return s;
}

graded_barcode lzz_barcode_graph(const simplicial_complex& G, const vertex_values& f, int p,
                                 const std::vector<value_t>* regulars) {
    if (G.dim() > 1) fail(errc::dimension_too_high, "levelsets need a graph");
    graded_barcode out;
    out.kind = flavor::lzz;
    out.critical_values = critical_values(f);
    const auto& crit = out.critical_values;
    if (crit.empty()) return out;
    int m = static_cast<int>(crit.size());

    std::vector<value_t> s = regulars ? *regulars : regular_values(crit);
    if (static_cast<int>(s.size()) != m + 1)
        fail(errc::shape_mismatch, "need " + std::to_string(m + 1) + " regular values");
    for (int i = 0; i < m; ++i)
        if (!(s[i] < crit[i] && crit[i] < s[i + 1]))
            fail(errc::shape_mismatch, "regular values do not interleave the criticals");

    auto [S, g] = split_graph_at_levels(G, f, s);
    auto in_window = [&](value_t lo, value_t hi) {
        return span_subcomplex(S, [&](index_t v) {
            value_t x = g.at(v);
            return lo <= x && x <= hi;
        });
    };

    zigzag_diagram d;
    for (int i = 0; i <= m; ++i) {
        d.spaces.push_back(absolute(in_window(s[i], s[i])));
        if (i < m) d.spaces.push_back(absolute(in_window(s[i], s[i + 1])));
    }
    for (std::size_t e = 0; e + 1 < d.spaces.size(); ++e) d.forward.push_back(e % 2 == 0);

    // positions: even 2i carries the level s_i, odd 2i+1 the slab [s_i, s_{i+1}];
    // odd endpoints close on a critical, even endpoints stay open
    for (auto& pb : zigzag_positions(d, p)) {
        interval iv;
        if (pb.b % 2 == 1) {
            iv.lo = crit[(pb.b + 1) / 2 - 1];
            iv.lo_closed = true;
        } else {
            iv.lo = crit[pb.b / 2 - 1];
            iv.lo_closed = false;
        }
        if (pb.d % 2 == 1) {
            iv.hi = crit[(pb.d + 1) / 2 - 1];
            iv.hi_closed = true;
        } else {
            iv.hi = crit[pb.d / 2];
            iv.hi_closed = false;
        }
        out.entries.push_back({p, iv, pb.mult});
    }
    out.canonicalize();
    return out;
}

}  // namespace tda

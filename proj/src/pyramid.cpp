#include "tda/pyramid.hpp"

#include <algorithm>
#include <cstdlib>

namespace tda {

// ---------------------------------------------------------------------------
// Window-set algebra.
// ---------------------------------------------------------------------------

namespace {

window_set normalized(window_set w) {
    std::sort(w.begin(), w.end());
    window_set out;
    for (auto& [lo, hi] : w) {
        if (!out.empty() && lo <= out.back().second)
            out.back().second = std::max(out.back().second, hi);
        else
            out.push_back({lo, hi});
    }
    return out;
}

}  // namespace

window_set window_union(window_set a, const window_set& b) {
    a.insert(a.end(), b.begin(), b.end());
    return normalized(std::move(a));
}

window_set window_intersection(const window_set& a, const window_set& b) {
    window_set out;
    for (auto& u : a)
        for (auto& v : b) {
            int lo = std::max(u.first, v.first), hi = std::min(u.second, v.second);
            if (lo <= hi) out.push_back({lo, hi});
        }
    return normalized(std::move(out));
}

// ---------------------------------------------------------------------------
// Pyramid geometry.
// ---------------------------------------------------------------------------

namespace {

std::string window_set_str(const window_set& w, int n) {
    if (w.empty()) return "0";
    std::string s;
    for (auto& [i, j] : w) {
        if (!s.empty()) s += " u ";
        s += "X[" + std::to_string(i) + "," + std::to_string(j) + "]";
    }
    (void)n;
    return s;
}

}  // namespace

std::string pyramid_node::label() const {
    if (empty) return "0";
    std::string a = window_set_str(A, 0);
    if (B.empty()) return a;
    return "(" + a + ", " + window_set_str(B, 0) + ")";
}

bool pyramid::is_node(int x, int h) const {
    return x >= 0 && h >= 0 && x <= width() && h <= width() && ((x + h) & 1) == 1;
}

pyramid_node pyramid::node(int x, int h) const {
    if (!is_node(x, h))
        fail(errc::index_out_of_range,
             "no pyramid node at (" + std::to_string(x) + ", " + std::to_string(h) + ")");
    pyramid_node nd;
    nd.x = x;
    nd.h = h;
    const int w = width();
    if (h < x && x + h < w) {
        nd.face = pyr_face::south;
        nd.A = {{(x - h - 1) / 2, (x + h - 1) / 2}};
    } else if (h > x && x + h < w) {
        nd.face = pyr_face::west;
        nd.A = {{0, (x + h - 1) / 2}};
        nd.B = {{0, (h - x - 1) / 2}};
    } else if (h < x) {
        nd.face = pyr_face::east;
        nd.A = {{(x - h - 1) / 2, n}};
        nd.B = {{(4 * n + 3 - x - h) / 2, n}};
    } else {
        nd.face = pyr_face::north;
        int i = (h - x - 1) / 2, j = i + (w - h);
        nd.A = {{0, n}};
        nd.B = window_union({{0, i}}, {{j, n}});
    }
    nd.empty = nd.A == nd.B;
    return nd;
}

std::vector<pyramid_node> pyramid::nodes() const {
    std::vector<pyramid_node> out;
    for (int x = 0; x <= width(); ++x)
        for (int h = (x + 1) & 1 ? 1 : 0; h <= width(); h += 2) out.push_back(node(x, h));
    return out;
}

std::vector<std::pair<int, int>> pyramid::diamond_bottoms() const {
    std::vector<std::pair<int, int>> out;
    for (int x = 1; x <= width() - 1; ++x)
        for (int h = (x & 1) ? 0 : 1; h + 2 <= width(); h += 2) out.push_back({x, h});
    return out;
}

monotone_zigzag pyramid::southern() const {
    monotone_zigzag z;
    z.n = n;
    for (int x = 0; x <= width(); ++x) z.h.push_back((x & 1) ? 0 : 1);
    return z;
}

monotone_zigzag pyramid::extended() const {
    monotone_zigzag z;
    z.n = n;
    z.h.push_back(1);
    for (int x = 1; x <= width(); ++x) z.h.push_back(x - 1);
    return z;
}

monotone_zigzag pyramid::updown() const {
    monotone_zigzag z;
    z.n = n;
    z.h.push_back(1);
    for (int x = 1; x <= width() - 1; ++x) z.h.push_back(std::min(x - 1, 2 * n + 1 - x));
    z.h.push_back(1);
    return z;
}

pyramid build_pyramid(int n, int cap) {
    if (n < 1) fail(errc::index_out_of_range, "critical count must be >= 1");
    if (n > cap)
        fail(errc::too_large,
             "pyramid for n = " + std::to_string(n) + " exceeds the cap " + std::to_string(cap));
    return pyramid{n};
}

void validate(const pyramid& P, const monotone_zigzag& z) {
    const int w = P.width();
    if (z.n != P.n || static_cast<int>(z.h.size()) != w + 1)
        fail(errc::shape_mismatch, "path does not fit the pyramid");
    for (int x = 0; x <= w; ++x) {
        int h = z.h[static_cast<std::size_t>(x)];
        if (!P.is_node(x, h))
            fail(errc::shape_mismatch, "path leaves the lattice at x = " + std::to_string(x));
        if (x > 0 && std::abs(h - z.h[static_cast<std::size_t>(x - 1)]) != 1)
            fail(errc::shape_mismatch, "path backtracks at x = " + std::to_string(x));
    }
    if (z.h[0] != z.h[1] + 1 || z.h[static_cast<std::size_t>(w)] != z.h[static_cast<std::size_t>(w - 1)] + 1)
        fail(errc::shape_mismatch, "bookend heights must follow the interior");
}

// ---------------------------------------------------------------------------
// Diamond moves.
// ---------------------------------------------------------------------------

namespace {

// The shape involution at k; returns false when the bar is dropped (weak
// form [k,k]).  Only one clause can fire: death candidates have b <= k-1,
// birth candidates d >= k+1, and [k,k] is handled first.
bool move_bar(pos_bar& br, int k, bool with_degree_shift, bool to_union) {
    if (br.b == k && br.d == k) {
        if (!with_degree_shift) return false;
        br.degree += to_union ? 1 : -1;
    } else if (br.d == k - 1) {
        br.d = k;
    } else if (br.d == k) {
        br.d = k - 1;
    } else if (br.b == k + 1) {
        br.b = k;
    } else if (br.b == k) {
        br.b = k + 1;
    }
    return true;
}

}  // namespace

pos_barcode diamond_move(const pos_barcode& bc, int k, int last, bool with_degree_shift,
                         bool to_union) {
    if (k < 1 || k > last - 1)
        fail(errc::index_out_of_range, "diamond position " + std::to_string(k) +
                                           " not interior to 0.." + std::to_string(last));
    pos_barcode out;
    for (pos_bar br : bc) {
        if (br.b < 0 || br.d > last || br.b > br.d)
            fail(errc::index_out_of_range, "interval [" + std::to_string(br.b) + ", " +
                                               std::to_string(br.d) + "] off the diagram");
        if (move_bar(br, k, with_degree_shift, to_union)) out.push_back(br);
    }
    canonicalize(out);
    return out;
}

std::vector<std::pair<int, bool>> canonical_moves(const pyramid& P, const monotone_zigzag& from,
                                                  const monotone_zigzag& to) {
    validate(P, from);
    validate(P, to);
    const int w = P.width();
    std::vector<int> cur = from.h;
    const std::vector<int>& tgt = to.h;
    std::vector<std::pair<int, bool>> moves;
    auto valley = [&](int x) { return cur[x - 1] == cur[x] + 1 && cur[x + 1] == cur[x] + 1; };
    auto peak = [&](int x) { return cur[x - 1] == cur[x] - 1 && cur[x + 1] == cur[x] - 1; };
    while (cur != tgt) {
        int k = -1;
        bool raised = false;
        for (int x = 1; x <= w - 1 && k < 0; ++x) {
            if (cur[x] < tgt[x] && valley(x)) k = x, raised = true;
            else if (cur[x] > tgt[x] && peak(x)) k = x, raised = false;
        }
        if (k < 0) fail(errc::paths_not_connected, "no pending diamond between the paths");
        cur[static_cast<std::size_t>(k)] += raised ? 2 : -2;
        cur[0] = cur[1] + 1;
        cur[static_cast<std::size_t>(w)] = cur[static_cast<std::size_t>(w - 1)] + 1;
        moves.push_back({k, raised});
    }
    return moves;
}

std::vector<pos_bar> trace_interval(const pyramid& P, const monotone_zigzag& path1,
                                    const monotone_zigzag& path2, const pos_bar& start) {
    if (start.b < 0 || start.d > P.width() || start.b > start.d)
        fail(errc::index_out_of_range, "interval off the pyramid paths");
    std::vector<pos_bar> steps{start};
    for (auto [k, raised] : canonical_moves(P, path1, path2)) {
        pos_bar br = steps.back();
        move_bar(br, k, true, raised);
        steps.push_back(br);
    }
    return steps;
}

// ---------------------------------------------------------------------------
// Extended <-> levelsets dictionaries.
// ---------------------------------------------------------------------------

graded_barcode ep_to_lzz(const ep_barcode& bc) {
    graded_barcode out;
    out.kind = flavor::lzz;
    out.critical_values = bc.critical_values;
    const int n = static_cast<int>(bc.critical_values.size());
    for (auto& e : bc.entries) {
        check_ep_interval(e.itv, n);
        bar b;
        b.mult = e.mult;
        b.degree = e.itv.degree;
        b.iv.lo = bc.value(e.itv.i);
        b.iv.hi = bc.value(e.itv.j);
        switch (e.itv.type) {
            case ep_type::ord: b.iv.lo_closed = true, b.iv.hi_closed = false; break;
            case ep_type::rel: b.iv.lo_closed = false, b.iv.hi_closed = true; --b.degree; break;
            case ep_type::ext_plus: b.iv.lo_closed = true, b.iv.hi_closed = true; break;
            case ep_type::ext_minus: b.iv.lo_closed = false, b.iv.hi_closed = false; --b.degree; break;
        }
        if (b.degree < 0)
            fail(errc::malformed_ep_interval,
                 std::string(ep_type_name(e.itv.type)) + " interval in degree 0 has no levelsets image");
        out.entries.push_back(b);
    }
    out.canonicalize();
    return out;
}

namespace {

// critical_index, but a miss is the caller's malformed interval.
int critical_index_checked(const std::vector<value_t>& crit, value_t v) {
    auto it = std::lower_bound(crit.begin(), crit.end(), v);
    if (it == crit.end() || *it != v)
        fail(errc::malformed_interval, "endpoint is not a critical value: " + format_value(v));
    return static_cast<int>(it - crit.begin()) + 1;
}

}  // namespace

ep_barcode lzz_to_ep(const graded_barcode& bc) {
    if (bc.kind != flavor::lzz)
        fail(errc::flavor_mismatch, std::string("expected an lzz barcode, got ") + flavor_name(bc.kind));
    ep_barcode out;
    out.critical_values = bc.critical_values;
    for (auto& b : bc.entries) {
        if (!std::isfinite(b.iv.lo) || !std::isfinite(b.iv.hi))
            fail(errc::malformed_interval, "levelsets intervals are finite: " + b.iv.to_string());
        ep_entry e;
        e.mult = b.mult;
        e.itv.i = critical_index_checked(bc.critical_values, b.iv.lo);
        e.itv.j = critical_index_checked(bc.critical_values, b.iv.hi);
        e.itv.degree = b.degree;
        if (b.iv.lo_closed && b.iv.hi_closed) e.itv.type = ep_type::ext_plus;
        else if (b.iv.lo_closed) e.itv.type = ep_type::ord;
        else if (b.iv.hi_closed) e.itv.type = ep_type::rel, ++e.itv.degree;
        else e.itv.type = ep_type::ext_minus, ++e.itv.degree;
        if (e.itv.type != ep_type::ext_plus && e.itv.i >= e.itv.j)
            fail(errc::malformed_interval, "degenerate interval " + b.iv.to_string());
        out.entries.push_back(e);
    }
    out.canonicalize();
    return out;
}

// ---------------------------------------------------------------------------
// Position bookkeeping.
// ---------------------------------------------------------------------------

graded_barcode southern_to_values(const pos_barcode& bc, const std::vector<value_t>& criticals) {
    const int w = 2 * static_cast<int>(criticals.size()) + 2;
    graded_barcode out;
    out.kind = flavor::lzz;
    out.critical_values = criticals;
    auto crit = [&](int q) {
        if (q < 0 || q >= static_cast<int>(criticals.size()))
            fail(errc::index_out_of_range, "southern position outside the row");
        return criticals[static_cast<std::size_t>(q)];
    };
    for (auto& br : bc) {
        if (br.b < 1 || br.d > w - 1)
            fail(errc::index_out_of_range, "southern position outside the row");
        bar b;
        b.degree = br.degree;
        b.mult = br.mult;
        b.iv.lo_closed = br.b % 2 == 0;
        b.iv.lo = crit(br.b % 2 == 0 ? br.b / 2 - 1 : (br.b - 1) / 2 - 1);
        b.iv.hi_closed = br.d % 2 == 0;
        b.iv.hi = crit(br.d % 2 == 0 ? br.d / 2 - 1 : (br.d - 1) / 2);
        out.entries.push_back(b);
    }
    out.canonicalize();
    return out;
}

pos_barcode values_to_southern(const graded_barcode& bc) {
    pos_barcode out;
    for (auto& b : bc.entries) {
        if (!std::isfinite(b.iv.lo) || !std::isfinite(b.iv.hi))
            fail(errc::malformed_interval, "levelsets intervals are finite: " + b.iv.to_string());
        int i = critical_index_checked(bc.critical_values, b.iv.lo) - 1;
        int j = critical_index_checked(bc.critical_values, b.iv.hi) - 1;
        pos_bar br;
        br.degree = b.degree;
        br.mult = b.mult;
        br.b = b.iv.lo_closed ? 2 * (i + 1) : 2 * i + 3;
        br.d = b.iv.hi_closed ? 2 * (j + 1) : 2 * j + 1;
        if (br.b > br.d) fail(errc::malformed_interval, "degenerate interval " + b.iv.to_string());
        out.push_back(br);
    }
    canonicalize(out);
    return out;
}

pos_bar ep_to_diagonal(const ep_interval& e, int n, long mult) {
    check_ep_interval(e, n);
    int b = 0, d = 0;
    switch (e.type) {
        case ep_type::ord: b = e.i, d = e.j - 1; break;
        case ep_type::rel: b = 2 * n + 1 - e.j, d = 2 * n - e.i; break;
        case ep_type::ext_plus: b = e.i, d = 2 * n - e.j; break;
        case ep_type::ext_minus: b = e.j, d = 2 * n - e.i; break;
    }
    pos_bar br;
    br.degree = e.degree;
    br.mult = mult;
    br.b = b <= n ? b + 1 : b + 2;
    br.d = d < n ? d + 1 : d + 2;
    return br;
}

zigzag_diagram realize_on_graph(const pyramid& P, const monotone_zigzag& z,
                                const simplicial_complex& G, const vertex_values& f,
                                const std::vector<value_t>* regulars) {
    validate(P, z);
    auto crit = critical_values(f);
    if (static_cast<int>(crit.size()) != P.n)
        fail(errc::shape_mismatch, "function has " + std::to_string(crit.size()) +
                                       " critical values, pyramid expects " + std::to_string(P.n));
    auto regs = regulars ? *regulars : regular_values(crit);
    auto [split, g] = split_graph_at_levels(G, f, regs);
    auto realize = [&](const window_set& ws) {
        simplicial_complex out;
        for (auto& [i, j] : ws) {
            value_t lo = regs[static_cast<std::size_t>(i)], hi = regs[static_cast<std::size_t>(j)];
            out = complex_union(
                out, span_subcomplex(split, [&](index_t v) { return g.at(v) >= lo && g.at(v) <= hi; }));
        }
        return out;
    };
    zigzag_diagram d;
    for (int x = 0; x <= P.width(); ++x) {
        auto nd = P.node(x, z.h[static_cast<std::size_t>(x)]);
        d.spaces.push_back({realize(nd.A), realize(nd.B)});
        if (x > 0) d.forward.push_back(z.h[static_cast<std::size_t>(x)] > z.h[static_cast<std::size_t>(x - 1)]);
    }
    validate(d);
    return d;
}

}  // namespace tda

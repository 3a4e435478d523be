#include "tda/strip.hpp"

#include <algorithm>
#include <cmath>

#include "tda/pyramid.hpp"

namespace tda {

namespace {

template <class Entry, class Key>
void sort_merge(std::vector<Entry>& v, Key key, long Entry::*mult) {
    std::sort(v.begin(), v.end(), [&](const Entry& a, const Entry& b) { return key(a) < key(b); });
    std::vector<Entry> out;
    for (auto& e : v) {
        if (!out.empty() && key(out.back()) == key(e))
            out.back().*mult += e.*mult;
        else
            out.push_back(e);
    }
    std::erase_if(out, [&](const Entry& e) { return e.*mult == 0; });
    v = std::move(out);
}

// Endpoint distance on the extended line: equal (including equal infinities)
// is 0, one infinite end apart is +inf.
value_t ext_diff(value_t u, value_t v) {
    if (u == v) return 0;
    if (std::isinf(u) || std::isinf(v)) return inf;
    return std::abs(u - v);
}

}  // namespace

std::string strip_point::to_string() const {
    const interval iv = interval_of(*this).second;
    return std::string(strip_face_name(face)) + std::to_string(degree) + " " + iv.to_string();
}

void strip_diagram::canonicalize() {
    sort_merge(points, [](const strip_entry& e) { return e.pt.key(); }, &strip_entry::mult);
}

bool strip_diagram::operator==(const strip_diagram& o) const {
    strip_diagram a = *this, b = o;
    a.canonicalize();
    b.canonicalize();
    if (a.critical_values != b.critical_values) return false;
    if (a.points.size() != b.points.size()) return false;
    for (std::size_t k = 0; k < a.points.size(); ++k)
        if (!(a.points[k].pt == b.points[k].pt) || a.points[k].mult != b.points[k].mult)
            return false;
    return true;
}

strip_point apply_T(const strip_point& m) {
    strip_point out = m;
    ++out.degree;
    return out;
}

strip_point apply_T_inv(const strip_point& m) {
    strip_point out = m;
    --out.degree;
    return out;
}

bool level_pair::x_contains(value_t t) const {
    switch (face) {
        case strip_face::S: return a <= t && t <= b;
        case strip_face::W: return t >= a;
        case strip_face::E: return t <= b;
        case strip_face::N: return true;
    }
    return false;
}

bool level_pair::y_contains(value_t t) const {
    switch (face) {
        case strip_face::S: return false;
        case strip_face::W: return t >= b;
        case strip_face::E: return t <= a;
        case strip_face::N: return t <= a || t >= b;
    }
    return false;
}

std::string level_pair::to_string() const {
    switch (face) {
        case strip_face::S:
            return "([" + format_value(a) + ", " + format_value(b) + "], {})";
        case strip_face::W:
            return "([" + format_value(a) + ", inf), [" + format_value(b) + ", inf))";
        case strip_face::E:
            return "((-inf, " + format_value(b) + "], (-inf, " + format_value(a) + "])";
        case strip_face::N:
            return "(R, R \\ (" + format_value(a) + ", " + format_value(b) + "))";
    }
    return "?";
}

level_pair rho(const strip_point& m) {
    if (m.degree != 0)
        fail(errc::degree_not_normalized,
             "rho needs degree 0, got " + std::to_string(m.degree));
    return {m.face, m.a, m.b};
}

std::pair<int, interval> interval_of(const strip_point& m) {
    interval iv{m.a, m.b, false, false};
    switch (m.face) {
        case strip_face::S: iv.lo_closed = iv.hi_closed = true; break;
        case strip_face::W: iv.lo_closed = true; break;
        case strip_face::E: iv.hi_closed = true; break;
        case strip_face::N: break;
    }
    return {m.degree, iv};
}

strip_point psi_inv(int degree, const interval& iv) {
    if (!interval_valid(iv))
        fail(errc::malformed_interval, iv.to_string());
    strip_face face;
    if (iv.lo_closed && iv.hi_closed)
        face = strip_face::S;
    else if (iv.lo_closed)
        face = strip_face::W;
    else if (iv.hi_closed)
        face = strip_face::E;
    else
        face = strip_face::N;
    return {degree, face, iv.lo, iv.hi};
}

strip_diagram ep_barcode_to_strip(const ep_barcode& bc) {
    const graded_barcode lzz = ep_to_lzz(bc);
    strip_diagram D;
    D.critical_values = lzz.critical_values;
    for (const bar& br : lzz.entries)
        D.points.push_back({psi_inv(br.degree, br.iv), br.mult});
    D.canonicalize();
    return D;
}

graded_barcode strip_to_lzz(const strip_diagram& D) {
    graded_barcode bc;
    bc.kind = flavor::lzz;
    bc.critical_values = D.critical_values;
    for (const strip_entry& e : D.points) {
        auto [deg, iv] = interval_of(e.pt);
        bc.entries.push_back({deg, iv, e.mult});
    }
    bc.canonicalize();
    return bc;
}

value_t d_strip(const strip_point& s, const strip_point& t) {
    if (s.degree == t.degree) {
        if (s.face != t.face) return inf;
        return std::max(ext_diff(s.a, t.a), ext_diff(s.b, t.b));
    }
    // Across one degree step only the N triangle and the S triangle one copy
    // down share a chart square; crossing the diagonal swaps endpoint roles.
    const strip_point* n = nullptr;
    const strip_point* so = nullptr;
    if (s.degree == t.degree + 1) n = &s, so = &t;
    if (t.degree == s.degree + 1) n = &t, so = &s;
    if (!n || n->face != strip_face::N || so->face != strip_face::S) return inf;
    return std::max(ext_diff(n->a, so->b), ext_diff(n->b, so->a));
}

value_t boundary_cost(const strip_point& m) {
    // Only the half-open faces reach the band boundary; the closed and open
    // face triangles sit a full chart away from it.
    switch (m.face) {
        case strip_face::E: return std::isinf(m.a) ? inf : (m.b - m.a) / 2;
        case strip_face::W: return std::isinf(m.b) ? inf : (m.b - m.a) / 2;
        default: return inf;
    }
}

namespace {

// Perfect matching on the padded bipartite graph: every real point on
// either side may match a real partner (d_strip within eps) or its side's
// dummy pool (boundary within eps).  Kuhn's augmenting paths.
struct matcher {
    int nl, nr;
    std::vector<std::vector<int>> adj;  // left -> admissible rights
    std::vector<int> match_r;           // right -> left or -1
    std::vector<char> seen;

    bool augment(int l) {
        for (int r : adj[l]) {
            if (seen[r]) continue;
            seen[r] = 1;
            if (match_r[r] < 0 || augment(match_r[r])) {
                match_r[r] = l;
                return true;
            }
        }
        return false;
    }

    bool perfect() {
        match_r.assign(nr, -1);
        int size = 0;
        for (int l = 0; l < nl; ++l) {
            seen.assign(nr, 0);
            if (augment(l)) ++size;
        }
        return size == nl;
    }
};

}  // namespace

value_t bottleneck_strip(const strip_diagram& D1, const strip_diagram& D2) {
    std::vector<strip_point> left, right;
    for (const strip_entry& e : D1.points)
        left.insert(left.end(), e.mult, e.pt);
    for (const strip_entry& e : D2.points)
        right.insert(right.end(), e.mult, e.pt);

    const int nl = static_cast<int>(left.size());
    const int nr = static_cast<int>(right.size());

    std::vector<value_t> vl(nl), vr(nr);
    for (int i = 0; i < nl; ++i) vl[i] = boundary_cost(left[i]);
    for (int j = 0; j < nr; ++j) vr[j] = boundary_cost(right[j]);
    std::vector<std::vector<value_t>> cost(nl, std::vector<value_t>(nr));
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nr; ++j) cost[i][j] = d_strip(left[i], right[j]);

    std::vector<value_t> cand{0};
    for (value_t v : vl)
        if (std::isfinite(v)) cand.push_back(v);
    for (value_t v : vr)
        if (std::isfinite(v)) cand.push_back(v);
    for (const auto& row : cost)
        for (value_t v : row)
            if (std::isfinite(v)) cand.push_back(v);
    std::sort(cand.begin(), cand.end());
    cand.erase(std::unique(cand.begin(), cand.end()), cand.end());

    // Pad with dummies so feasibility is one perfect-matching test: left gets
    // nr dummies, right gets nl dummies, dummy-dummy pairs are free.
    auto feasible = [&](value_t eps) {
        matcher m;
        m.nl = nl + nr;
        m.nr = nr + nl;
        m.adj.assign(m.nl, {});
        for (int i = 0; i < nl; ++i) {
            for (int j = 0; j < nr; ++j)
                if (cost[i][j] <= eps) m.adj[i].push_back(j);
            if (vl[i] <= eps) m.adj[i].push_back(nr + i);
        }
        for (int j = 0; j < nr; ++j) {
            const int l = nl + j;
            if (vr[j] <= eps) m.adj[l].push_back(j);
            for (int i = 0; i < nl; ++i) m.adj[l].push_back(nr + i);
        }
        return m.perfect();
    };

    int lo = 0, hi = static_cast<int>(cand.size()) - 1;
    if (!feasible(cand[hi])) return inf;
    while (lo < hi) {
        int mid = lo + (hi - lo) / 2;
        if (feasible(cand[mid]))
            hi = mid;
        else
            lo = mid + 1;
    }
    return cand[lo];
}

}  // namespace tda

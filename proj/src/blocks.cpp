#include "tda/blocks.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "tda/persistence.hpp"

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

// Endpoints in written order: a corner [b, a] leads with its upper end.
std::pair<value_t, value_t> written(const block& B) {
    if (B.kind == block_kind::c2) return {B.b, B.a};
    return {B.a, B.b};
}

bool closed_shape(block_kind k) { return k == block_kind::c1 || k == block_kind::c2; }

bool same_shape(block_kind k1, block_kind k2) {
    return k1 == k2 || (closed_shape(k1) && closed_shape(k2));
}

}  // namespace

bool block::contains(value_t x, value_t y) const {
    switch (kind) {
        case block_kind::o: return a < x && y < b;
        case block_kind::co: return a < y && y < b;
        case block_kind::oc: return a < x && x < b;
        case block_kind::c1: return x < b && y > a;
        case block_kind::c2: return x < a && y > b;
    }
    return false;
}

std::string block::to_string() const {
    auto [u, v] = written(*this);
    bool lc = kind == block_kind::co || closed_shape(kind);
    bool hc = kind == block_kind::oc || closed_shape(kind);
    return std::string(lc ? "[" : "(") + format_value(u) + ", " + format_value(v) +
           (hc ? "]" : ")");
}

block block_of_interval(const interval& iv) {
    if (!interval_valid(iv))
        fail(errc::malformed_interval, "invalid interval: " + iv.to_string());
    block B{block_kind::o, iv.lo, iv.hi};
    if (iv.lo_closed && iv.hi_closed) {
        B.kind = iv.lo < iv.hi ? block_kind::c1 : block_kind::c2;
    } else if (iv.lo_closed) {
        B.kind = iv.hi == inf ? block_kind::c1 : block_kind::co;
    } else if (iv.hi_closed) {
        B.kind = iv.lo == -inf ? block_kind::c1 : block_kind::oc;
    } else {
        if (iv.lo == -inf && iv.hi == inf)
            B.kind = block_kind::c1;
        else if (iv.lo == -inf)
            B.kind = block_kind::co;
        else if (iv.hi == inf)
            B.kind = block_kind::oc;
        else
            B.kind = block_kind::o;
    }
    return B;
}

void block_barcode::canonicalize() {
    sort_merge(entries, [](const block_entry& e) { return e.key(); }, &block_entry::mult);
}

bool block_barcode::operator==(const block_barcode& o) const {
    block_barcode a = *this, b = o;
    a.canonicalize();
    b.canonicalize();
    if (a.entries.size() != b.entries.size()) return false;
    for (std::size_t k = 0; k < a.entries.size(); ++k)
        if (a.entries[k].key() != b.entries[k].key() || a.entries[k].mult != b.entries[k].mult)
            return false;
    return true;
}

block_barcode lzz_to_blocks(const graded_barcode& bc) {
    block_barcode out;
    for (const bar& e : bc.entries)
        out.entries.push_back({e.degree, block_of_interval(e.iv), e.mult});
    out.canonicalize();
    return out;
}

block_barcode blocks_of_graph(const simplicial_complex& K, const vertex_values& f) {
    block_barcode out;
    for (int p = 0; p <= 1; ++p) {
        graded_barcode lzz = lzz_barcode_graph(K, f, p);
        for (const bar& e : lzz.entries) {
            block B = block_of_interval(e.iv);
            out.entries.push_back({p, B, e.mult});
            if (B.kind == block_kind::o)
                out.entries.push_back({p + 1, block{block_kind::c2, B.a, B.b}, e.mult});
        }
    }
    out.canonicalize();
    return out;
}

value_t vanish_eps(const block& B) {
    switch (B.kind) {
        case block_kind::co:
        case block_kind::oc: return (B.b - B.a) / 2;
        case block_kind::o: return (B.b - B.a) / 4;
        case block_kind::c1:
        case block_kind::c2: return inf;
    }
    return inf;
}

value_t interleave_eps(const block& B1, const block& B2) {
    value_t shift = inf;
    if (same_shape(B1.kind, B2.kind)) {
        auto [u1, v1] = written(B1);
        auto [u2, v2] = written(B2);
        shift = std::max(ext_diff(u1, u2), ext_diff(v1, v2));
    }
    return std::min(shift, std::max(vanish_eps(B1), vanish_eps(B2)));
}

namespace {

// Perfect matching on the padded bipartite graph: every real block on
// either side may match a real partner (interleaving within eps) or its
// side's dummy pool (vanishing within eps).  Kuhn's augmenting paths.
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

value_t bottleneck_blocks(const block_barcode& B1, const block_barcode& B2, int degree) {
    std::vector<block> left, right;
    for (const block_entry& e : B1.entries)
        if (e.degree == degree)
            left.insert(left.end(), e.mult, e.blk);
    for (const block_entry& e : B2.entries)
        if (e.degree == degree)
            right.insert(right.end(), e.mult, e.blk);

    const int nl = static_cast<int>(left.size()), nr = static_cast<int>(right.size());
    if (nl == 0 && nr == 0) return 0;

    std::vector<value_t> vl(nl), vr(nr);
    for (int i = 0; i < nl; ++i) vl[i] = vanish_eps(left[i]);
    for (int j = 0; j < nr; ++j) vr[j] = vanish_eps(right[j]);
    std::vector<std::vector<value_t>> cost(nl, std::vector<value_t>(nr));
    for (int i = 0; i < nl; ++i)
        for (int j = 0; j < nr; ++j) cost[i][j] = interleave_eps(left[i], right[j]);

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

phi_pairing phi_bijection(const block_barcode& bc) {
    block_barcode in = bc;
    in.canonicalize();

    // Multiplicity of open blocks, keyed where their corner partner would be.
    std::map<std::tuple<int, value_t, value_t>, long> open_at;
    for (const block_entry& e : in.entries)
        if (e.blk.kind == block_kind::o) open_at[{e.degree + 1, e.blk.a, e.blk.b}] += e.mult;

    phi_pairing out;
    std::map<std::tuple<int, value_t, value_t>, long> paired;
    for (const block_entry& e : in.entries) {
        if (e.blk.kind == block_kind::c2 && !e.blk.degenerate_corner()) {
            auto key = std::make_tuple(e.degree, e.blk.a, e.blk.b);
            auto it = open_at.find(key);
            const long avail = it == open_at.end() ? 0 : it->second - paired[key];
            const long take = std::min(avail, e.mult);
            paired[key] += take;
            if (e.mult > take)
                out.unpaired.push_back({e.degree, e.blk, e.mult - take});
            if (take > 0)
                out.quotient.entries.push_back({e.degree, e.blk, e.mult - take});
            else
                out.quotient.entries.push_back(e);
        } else {
            out.quotient.entries.push_back(e);
        }
    }
    for (const block_entry& e : in.entries) {
        if (e.blk.kind != block_kind::o) continue;
        auto key = std::make_tuple(e.degree + 1, e.blk.a, e.blk.b);
        auto it = paired.find(key);
        const long used = it == paired.end() ? 0 : it->second;
        if (e.mult > used) out.unpaired.push_back({e.degree, e.blk, e.mult - used});
    }
    out.quotient.canonicalize();
    return out;
}

}  // namespace tda

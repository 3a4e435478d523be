#include "tda/gf2.hpp"

#include <algorithm>
#include <bit>
#include <cassert>

namespace tda {

index_t bitvec_high(const bitvec& v) {
    for (index_t w = static_cast<index_t>(v.size()) - 1; w >= 0; --w)
        if (v[w]) return (w << 6) + 63 - std::countl_zero(v[w]);
    return -1;
}

std::vector<index_t> bitvec_to_sparse(const bitvec& v) {
    std::vector<index_t> out;
    for (std::size_t w = 0; w < v.size(); ++w) {
        std::uint64_t word = v[w];
        while (word) {
            int b = std::countr_zero(word);
            out.push_back(static_cast<index_t>((w << 6) + b));
            word &= word - 1;
        }
    }
    return out;
}

bitvec sparse_to_bitvec(const std::vector<index_t>& s, index_t nbits) {
    bitvec v = make_bitvec(nbits);
    for (index_t i : s) bit_set(v, i);
    return v;
}

bool gf2_matrix::get(index_t r, index_t c) const {
    const auto& col = cols[c];
    return std::binary_search(col.begin(), col.end(), r);
}

void gf2_matrix::toggle(index_t r, index_t c) {
    auto& col = cols[c];
    auto it = std::lower_bound(col.begin(), col.end(), r);
    if (it != col.end() && *it == r)
        col.erase(it);
    else
        col.insert(it, r);
}

gf2_matrix gf2_matrix::identity(index_t n) {
    gf2_matrix m(n, n);
    for (index_t i = 0; i < n; ++i) m.cols[i] = {i};
    return m;
}

std::vector<index_t> gf2_add(const std::vector<index_t>& a, const std::vector<index_t>& b) {
    std::vector<index_t> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
        if (a[i] < b[j])
            out.push_back(a[i++]);
        else if (b[j] < a[i])
            out.push_back(b[j++]);
        else
            ++i, ++j;
    }
    out.insert(out.end(), a.begin() + i, a.end());
    out.insert(out.end(), b.begin() + j, b.end());
    return out;
}

gf2_matrix gf2_multiply(const gf2_matrix& a, const gf2_matrix& b) {
    if (a.n_cols() != b.n_rows)
        fail(errc::shape_mismatch, "multiply: " + std::to_string(a.n_cols()) + " cols vs " +
                                       std::to_string(b.n_rows) + " rows");
    gf2_matrix out(a.n_rows, b.n_cols());
    for (index_t j = 0; j < b.n_cols(); ++j) {
        std::vector<index_t> acc;
        for (index_t k : b.cols[j]) acc = gf2_add(acc, a.cols[k]);
        out.cols[j] = std::move(acc);
    }
    return out;
}

gf2_matrix gf2_transpose(const gf2_matrix& m) {
    gf2_matrix out(m.n_cols(), m.n_rows);
    for (index_t c = 0; c < m.n_cols(); ++c)
        for (index_t r : m.cols[c]) out.cols[r].push_back(c);
    return out;
}

bitvec gf2_apply(const gf2_matrix& m, const bitvec& x) {
    bitvec out = make_bitvec(m.n_rows);
    for (index_t c = 0; c < m.n_cols(); ++c)
        if (bit_get(x, c))
            for (index_t r : m.cols[c]) bit_set(out, r);
    return out;
}

namespace {

// Pivot columns touched this often get a cached dense copy; further additions
// into the accumulator then run word-wise instead of walking the sparse list.
constexpr index_t kDensifyHits = 4;

index_t high_from_word(const bitvec& v, index_t from_word) {
    for (index_t w = std::min<index_t>(from_word, static_cast<index_t>(v.size()) - 1); w >= 0; --w)
        if (v[w]) return (w << 6) + 63 - std::countl_zero(v[w]);
    return -1;
}

}  // namespace

gf2_reduction column_reduce(const gf2_matrix& m) {
    const index_t nr = m.n_rows, nc = m.n_cols();
    gf2_reduction red;
    red.reduced = gf2_matrix(nr, nc);
    red.ops = gf2_matrix::identity(nc);
    red.pivot_col_of_row.assign(static_cast<std::size_t>(nr), -1);

    std::vector<index_t> hits(static_cast<std::size_t>(nc), 0);
    std::vector<bitvec> dense_cache(static_cast<std::size_t>(nc));
    bitvec acc = make_bitvec(nr);

    for (index_t j = 0; j < nc; ++j) {
        std::fill(acc.begin(), acc.end(), 0);
        for (index_t r : m.cols[j]) bit_set(acc, r);
        std::vector<index_t> ops_j = std::move(red.ops.cols[j]);

        index_t low = bitvec_high(acc);
        while (low >= 0) {
            index_t piv = red.pivot_col_of_row[low];
            if (piv < 0) break;
            if (++hits[piv] >= kDensifyHits && dense_cache[piv].empty())
                dense_cache[piv] = sparse_to_bitvec(red.reduced.cols[piv], nr);
            if (!dense_cache[piv].empty())
                bitvec_xor(acc, dense_cache[piv]);
            else
                for (index_t r : red.reduced.cols[piv]) bit_set(acc, r);
            ops_j = gf2_add(ops_j, red.ops.cols[piv]);
            low = high_from_word(acc, low >> 6);
        }
        red.reduced.cols[j] = bitvec_to_sparse(acc);
        red.ops.cols[j] = std::move(ops_j);
        if (low >= 0) {
            red.pivot_col_of_row[low] = j;
            ++red.rank;
        }
    }
    return red;
}

std::optional<std::vector<index_t>> gf2_reduction::solve(const std::vector<index_t>& rhs) const {
    // Eliminate rhs against the reduced pivot columns; the used columns sum to
    // rhs, so x = ops * (indicator of used columns).
    bitvec r = sparse_to_bitvec(rhs, reduced.n_rows);
    std::vector<index_t> used;
    index_t low = bitvec_high(r);
    while (low >= 0) {
        index_t piv = pivot_col_of_row[low];
        if (piv < 0) return std::nullopt;
        for (index_t i : reduced.cols[piv]) bit_set(r, i);
        used.push_back(piv);
        low = high_from_word(r, low >> 6);
    }
    std::vector<index_t> x;
    for (index_t c : used) x = gf2_add(x, ops.cols[c]);
    return x;
}

std::vector<std::vector<index_t>> gf2_reduction::kernel_basis() const {
    std::vector<std::vector<index_t>> out;
    for (index_t j = 0; j < reduced.n_cols(); ++j)
        if (reduced.cols[j].empty()) out.push_back(ops.cols[j]);
    return out;
}

std::vector<std::vector<index_t>> gf2_reduction::image_basis() const {
    std::vector<std::vector<index_t>> out;
    for (index_t j = 0; j < reduced.n_cols(); ++j)
        if (!reduced.cols[j].empty()) out.push_back(reduced.cols[j]);
    return out;
}

index_t gf2_rank(const gf2_matrix& m) { return column_reduce(m).rank; }

std::optional<std::vector<index_t>> gf2_solve(const gf2_matrix& m,
                                              const std::vector<index_t>& rhs) {
    return column_reduce(m).solve(rhs);
}

}  // namespace tda

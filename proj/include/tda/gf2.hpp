#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "tda/errors.hpp"

namespace tda {

using index_t = std::int64_t;

// ---------------------------------------------------------------------------
// Dense bit vectors (64-bit words), used as row accumulators during
// elimination and as space vectors inside the representation decomposition.
// ---------------------------------------------------------------------------

using bitvec = std::vector<std::uint64_t>;

inline index_t bitvec_words(index_t nbits) { return (nbits + 63) / 64; }

inline bitvec make_bitvec(index_t nbits) { return bitvec(bitvec_words(nbits), 0); }

inline void bit_set(bitvec& v, index_t i) { v[i >> 6] ^= std::uint64_t(1) << (i & 63); }

inline bool bit_get(const bitvec& v, index_t i) {
    return (v[i >> 6] >> (i & 63)) & std::uint64_t(1);
}

inline void bitvec_xor(bitvec& a, const bitvec& b) {
    for (std::size_t w = 0; w < b.size(); ++w) a[w] ^= b[w];
}

inline bool bitvec_zero(const bitvec& v) {
    for (auto w : v)
        if (w) return false;
    return true;
}

// Highest set bit index, or -1 when zero.
index_t bitvec_high(const bitvec& v);

std::vector<index_t> bitvec_to_sparse(const bitvec& v);
bitvec sparse_to_bitvec(const std::vector<index_t>& s, index_t nbits);

// ---------------------------------------------------------------------------
// Sparse GF(2) matrices, column major: each column is a strictly increasing
// list of row indices carrying the nonzero entries.
// ---------------------------------------------------------------------------

struct gf2_matrix {
    index_t n_rows = 0;
    std::vector<std::vector<index_t>> cols;

    gf2_matrix() = default;
    gf2_matrix(index_t rows, index_t ncols) : n_rows(rows), cols(ncols) {}

    index_t n_cols() const { return static_cast<index_t>(cols.size()); }

    bool get(index_t r, index_t c) const;
    void toggle(index_t r, index_t c);  // flip one entry

    static gf2_matrix identity(index_t n);

    bool operator==(const gf2_matrix& o) const { return n_rows == o.n_rows && cols == o.cols; }
};

// Symmetric difference of two sorted index lists (GF(2) column addition).
std::vector<index_t> gf2_add(const std::vector<index_t>& a, const std::vector<index_t>& b);

gf2_matrix gf2_multiply(const gf2_matrix& a, const gf2_matrix& b);  // ShapeMismatch
gf2_matrix gf2_transpose(const gf2_matrix& m);

// Matrix * dense vector (vector over the column space).
bitvec gf2_apply(const gf2_matrix& m, const bitvec& x);

// ---------------------------------------------------------------------------
// Left-to-right column elimination.  Invariants on the result:
//   reduced = m * ops, ops invertible and upper triangular,
//   no two nonzero columns of `reduced` share the same lowest row,
//   rank = number of nonzero reduced columns.
// ---------------------------------------------------------------------------

struct gf2_reduction {
    gf2_matrix reduced;
    gf2_matrix ops;
    std::vector<index_t> pivot_col_of_row;  // low row -> reduced column, -1 if none
    index_t rank = 0;

    // Solve m x = rhs through the reduction; empty optional when insoluble.
    std::optional<std::vector<index_t>> solve(const std::vector<index_t>& rhs) const;

    // Basis of ker m: the ops columns sitting over zero reduced columns.
    std::vector<std::vector<index_t>> kernel_basis() const;

    // Sparse columns spanning im m (the nonzero reduced columns).
    std::vector<std::vector<index_t>> image_basis() const;
};

gf2_reduction column_reduce(const gf2_matrix& m);

index_t gf2_rank(const gf2_matrix& m);

std::optional<std::vector<index_t>> gf2_solve(const gf2_matrix& m,
                                              const std::vector<index_t>& rhs);

}  // namespace tda

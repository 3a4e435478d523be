#pragma once

#include <functional>
#include <map>
#include <vector>

#include "tda/barcode.hpp"
#include "tda/gf2.hpp"

namespace tda {

using simplex = std::vector<index_t>;  // strictly increasing vertex ids

// ---------------------------------------------------------------------------
// Finite simplicial complexes on integer vertex ids, stored per dimension in
// lexicographic order and closed under faces.
// ---------------------------------------------------------------------------

struct simplicial_complex {
    // by_dim[p] = sorted p-simplices; index into this list is the simplex id in degree p
    std::vector<std::vector<simplex>> by_dim;

    int dim() const { return static_cast<int>(by_dim.size()) - 1; }
    index_t size(int p) const {
        return (p < 0 || p > dim()) ? 0 : static_cast<index_t>(by_dim[p].size());
    }
    index_t index_of(int p, const simplex& s) const;  // -1 when absent
    bool contains(const simplex& s) const;
    std::vector<index_t> vertex_ids() const;

    bool operator==(const simplicial_complex& o) const { return by_dim == o.by_dim; }
};

// Close the given simplices under faces.  Vertex lists get sorted; a repeated
// vertex inside one simplex raises DuplicateVertexInSimplex.
simplicial_complex build_complex(const std::vector<simplex>& top);

// Full subcomplex spanned by the vertices satisfying `keep`.
simplicial_complex span_subcomplex(const simplicial_complex& K,
                                   const std::function<bool(index_t)>& keep);

bool is_subcomplex(const simplicial_complex& L, const simplicial_complex& K);

simplicial_complex complex_union(const simplicial_complex& a, const simplicial_complex& b);
simplicial_complex complex_intersection(const simplicial_complex& a, const simplicial_complex& b);

// ---------------------------------------------------------------------------
// Pairs (K, L) with L a subcomplex of K (L may be empty); homology is that of
// the quotient chain complex on the simplices of K \ L.
// ---------------------------------------------------------------------------

struct relative_pair {
    simplicial_complex K, L;
};

relative_pair make_pair_checked(simplicial_complex K, simplicial_complex L);  // SubNotContained

// Boundary matrices of K with rows/columns indexed by the per-dimension
// simplex order; boundary[p] maps degree p to degree p-1.  Construction
// verifies that consecutive boundaries compose to zero.
struct chain_complex {
    std::vector<gf2_matrix> boundary;  // boundary[0] has 0 rows
};

chain_complex make_chain_complex(const simplicial_complex& K);

// ---------------------------------------------------------------------------
// A computed homology basis in one degree of one pair, bundled with the
// elimination data needed to express further cycles in that basis.
// ---------------------------------------------------------------------------

struct homology_basis {
    relative_pair pair;
    int p = 0;
    std::vector<simplex> cells;                  // the p-simplices of K \ L, sorted
    std::vector<std::vector<index_t>> basis;     // representative cycles, sparse in `cells` indexing
    gf2_reduction express;                       // reduction of [boundary_{p+1} | basis]
    index_t n_bdry_cols = 0;                     // column count of the boundary block inside `express`

    index_t betti() const { return static_cast<index_t>(basis.size()); }

    // Coefficients of the class of `cycle` in `basis`; BasisMismatch when the
    // chain is not a cycle of (K, L) up to boundaries of this pair.
    std::vector<index_t> express_class(const std::vector<index_t>& cycle) const;
};

homology_basis homology(const simplicial_complex& K, int p);
homology_basis relative_homology(const relative_pair& pr, int p);

// Matrix of H_p(src) -> H_p(dst) induced by inclusion of pairs, in the two
// stored bases.  NotAnInclusion when src is not contained in dst degreewise.
gf2_matrix induced_map(const homology_basis& src, const homology_basis& dst);

// ---------------------------------------------------------------------------
// Function values on vertices.
// ---------------------------------------------------------------------------

using vertex_values = std::map<index_t, value_t>;

// Subdivide every edge of a graph (dim <= 1) at the given levels, assigning
// each new vertex the level it realizes.  Errors: DimensionTooHigh for
// dim > 1, LevelHitsVertex when a level equals some vertex value.
std::pair<simplicial_complex, vertex_values> split_graph_at_levels(
    const simplicial_complex& G, const vertex_values& f, const std::vector<value_t>& levels);

}  // namespace tda

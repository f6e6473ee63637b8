/**
 * Exact rational polyhedral engine for polytopes of the form
 *     P = { p in R^D : <row, p> >= 0 for every row }  intersected with
 *         { sum p = 1 },
 * where the D nonnegativity rows are always part of the system, so P is a
 * subset of the probability simplex and in particular bounded.
 *
 * Vertex enumeration runs the double description method on the homogeneous
 * cone { p : rows * p >= 0 }: the initial cone is the orthant with the
 * basis vectors as rays, the remaining rows are inserted one at a time, and
 * adjacency of rays is decided by the algebraic rank criterion. Every ray
 * is kept scaled to coordinate sum 1, which makes it a polytope vertex
 * directly. A brute-force enumerator over active-row subsets serves as an
 * independent oracle.
 */

#ifndef CEP_POLYHEDRA_HPP
#define CEP_POLYHEDRA_HPP

#include "cep/rational.hpp"

#include <boost/dynamic_bitset.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace cep {

using VertexSet = boost::dynamic_bitset<>;

/// Inequality description; one row per inequality <row, p> >= 0. The
/// equality sum(p) = 1 is implicit and always present.
struct HRep {
    RationalMatrix rows;

    std::int64_t dimension() const { return rows.cols(); }
    std::int64_t num_rows() const { return rows.rows(); }

    /// Just the D nonnegativity rows: the whole probability simplex.
    static HRep simplex(std::int64_t D);
};

/// Vertex description: exact points of the simplex, sorted lexicographically.
struct VRep {
    std::vector<RationalVector> vertices;

    bool empty() const { return vertices.empty(); }
    std::size_t size() const { return vertices.size(); }
};

/// Set equality of vertex lists (both canonically sorted).
bool set_equal(const VRep& a, const VRep& b);

/// All vertices of the polytope via double description; empty iff the
/// system is infeasible.
VRep enumerate_vertices(const HRep& h);

/// Independent oracle: solves every (D-1)-subset of rows together with
/// sum(p) = 1 by exact elimination and keeps the feasible solutions.
/// Intended for D <= 8.
VRep brute_force_vertices(const HRep& h);

/// Affine dimension of the vertex set; 0 for a single point.
/// Throws std::invalid_argument on an empty VRep.
int polytope_dimension(const VRep& v);

/// Facets of P, one representative row per supporting hyperplane.
struct Facets {
    std::vector<int> rows;               ///< representative row indices
    std::vector<int> multiplicities;     ///< rows sharing the same active set
    std::vector<VertexSet> active_sets;  ///< vertices on each facet
};

/// Rows whose active vertex set is a facet (a maximal proper face);
/// duplicate supporting rows are collapsed to one representative.
Facets irredundant_facets(const HRep& h, const VRep& v);

struct Face {
    VertexSet vertices;
    std::vector<int> active_rows;  ///< rows of h active on the whole face
    int dim = -1;                  ///< -1 for the empty face
};

/// The face lattice, graded by dimension from the empty face (dim -1) up to
/// the polytope itself.
struct FaceLattice {
    std::vector<Face> faces;  ///< sorted by (dim, vertex set)
    int dim = 0;              ///< dimension of the polytope
    std::vector<std::pair<int, int>> covers;  ///< (lower, upper) index pairs

    std::size_t num_faces() const { return faces.size(); }
};

/// All faces as intersections of facet vertex sets (breadth-first with
/// memoization), plus the empty face and the polytope itself.
FaceLattice face_lattice(const VRep& v, const Facets& facets, const HRep& h);

/// Face counts per dimension in the paper convention: leading 1 for the
/// empty face and trailing 1 for the polytope, e.g. (1,5,9,6,1).
std::vector<std::int64_t> f_vector(const FaceLattice& lattice);

/// Combinatorial type: canonical encoding of the vertex-facet incidence
/// structure. Equal keys iff the incidence matrices agree up to independent
/// row and column permutations.
struct CombinatorialType {
    std::string canonical_key;  ///< raw bytes; use key_hex() for display
    int dimension = 0;
    std::vector<std::int64_t> f_vector;

    std::string key_hex() const;

    bool operator==(const CombinatorialType& other) const
    {
        return canonical_key == other.canonical_key;
    }
    bool operator!=(const CombinatorialType& other) const { return !(*this == other); }
};

/// Canonical key by canonical labeling of the bipartite vertex-facet
/// incidence graph: iterative refinement, then full backtracking over the
/// refined classes, keeping the lexicographically minimal encoding.
CombinatorialType combinatorial_fingerprint(const VRep& v, const Facets& facets, const HRep& h);

/// Canonical form of an arbitrary 0/1 incidence structure given as bitsets
/// (one per vertex, over facets). Exposed for tests.
std::string canonical_incidence_key(const std::vector<VertexSet>& vertex_rows,
                                    std::size_t num_facets);

}  // namespace cep

#endif  // CEP_POLYHEDRA_HPP

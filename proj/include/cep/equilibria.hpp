/**
 * Game-level layer: assembles the correlated equilibrium polytope of a game,
 * flags Nash vertices (rank-one tensors), decides maximal dimension, and
 * checks the explicit sign-region descriptions available for (2 x n) games.
 */

#ifndef CEP_EQUILIBRIA_HPP
#define CEP_EQUILIBRIA_HPP

#include "cep/cone.hpp"
#include "cep/game.hpp"
#include "cep/polyhedra.hpp"

#include <string>
#include <vector>

namespace cep {

struct PolytopeReport {
    GameShape shape;
    VRep vertices;
    int dimension = 0;
    Facets facets;
    std::vector<std::int64_t> f_vector;
    CombinatorialType type;
    std::vector<bool> nash_flags;    ///< one per vertex
    bool is_maximal_dimension = false;  ///< dimension == D - 1

    int facet_count() const { return static_cast<int>(facets.rows.size()); }
    int nash_count() const;
};

/// Full pipeline: Y-substitution, A(Y), vertex enumeration, facets, face
/// lattice, fingerprint, Nash flags.
PolytopeReport correlated_polytope(const Game& game);

/// Same pipeline starting from a difference vector (must lie in the
/// correlated equilibrium space).
PolytopeReport polytope_of_differences(const DifferenceVector& y);

/// True iff p (a point of the probability simplex) is a rank-one tensor,
/// i.e. the outer product of its own marginal distributions. Throws
/// std::invalid_argument if p has a negative entry or does not sum to 1.
bool is_nash_vertex(const RationalVector& p, const GameShape& shape);

/// True iff the correlated equilibrium polytope of y has dimension D - 1.
/// Throws std::invalid_argument if y violates the space relations.
bool is_full_dimensional(const DifferenceVector& y);

/// Which of the four sign conditions that exclude maximal dimension for
/// (2 x n) games hold for y (ids 1-4, in the order: all first-player
/// differences positive; all negative; all second-player differences
/// against strategy n positive; all negative). Throws on non-(2 x n) shapes.
std::vector<int> check_forbidden_conditions(const DifferenceVector& y);

/// (2 x 2) only: y lies in one of the two open orthants that make up the
/// region of maximal dimension.
bool region_membership_2x2(const DifferenceVector& y);

/// Report serialization consumed by the CLI.
std::string report_to_json(const PolytopeReport& report);

}  // namespace cep

#endif  // CEP_EQUILIBRIA_HPP

/**
 * Oriented-matroid strata machinery: maximal minors of the symbolic matrix
 * A(Y), their factorization into a monomial times 2x2-minor binomials for
 * (2 x n) shapes, the irreducible components of the algebraic boundary, and
 * the region-count bound.
 *
 * Determinants are expanded recursively over the sparse variable entries
 * with memoization on (row set, column set) of the incentive block;
 * identity rows are eliminated up front. Row sets are indexed in the global
 * row order of the matrix.
 */

#ifndef CEP_STRATA_HPP
#define CEP_STRATA_HPP

#include "cep/cone.hpp"
#include "cep/game.hpp"
#include "cep/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <stdexcept>
#include <vector>

namespace cep {

/// Raised when a minor fails to factor as Theorem-5.5 form predicts; this
/// is a falsification signal, never silently accepted.
class FactorizationError : public std::runtime_error {
public:
    explicit FactorizationError(const std::string& what) : std::runtime_error(what) {}
};

struct MinorEntry {
    std::vector<int> rows;  ///< global row indices, ascending
    Polynomial det;
};

/// sign * x^monomial * prod(binomial_factors) reconstructs the minor.
struct MinorFactorization {
    int sign = 1;
    ExponentVector monomial;
    std::vector<Polynomial> binomial_factors;  ///< each a catalog 2x2 minor
};

/// Streaming enumeration of all C(D+N, D) maximal minors in ascending
/// row-set order (zero minors included). The cap guards the enumeration
/// size; shapes with D > max_ambient_dim are rejected.
void for_each_maximal_minor(const SymbolicMatrix& sym,
                            const std::function<void(const MinorEntry&)>& fn,
                            int max_ambient_dim = 8);

/// Collected variant of for_each_maximal_minor.
std::vector<MinorEntry> maximal_minors(const SymbolicMatrix& sym, int max_ambient_dim = 8);

/// All binomial 2x2 minors of A(Y), together with (for two-player shapes)
/// the 2x2 minors of each player's matrix of difference variables,
/// deduplicated up to sign. The two sets coincide for (2 x n) with n <= 3;
/// from n = 4 on, minors of A(Y) factor through binomials on disjoint
/// strategy pairs, which only the difference matrix provides.
std::vector<Polynomial> binomial_catalog(const SymbolicMatrix& sym);

/// Factor a nonzero maximal minor of a (2 x n) matrix as monomial content
/// times catalog binomials. Throws FactorizationError if the residual is
/// not +-1, and std::invalid_argument on the zero polynomial.
MinorFactorization factor_minor_2xn(const Polynomial& minor, const SymbolicMatrix& sym);

/// Irreducible components of the algebraic boundary for a (2 x n) shape:
/// the coordinate hyperplanes and binomials occurring as factors of nonzero
/// maximal minors, deduplicated up to sign. Coordinate components come
/// first in variable order, then binomials in canonical order.
std::vector<Polynomial> irreducible_components(const GameShape& shape,
                                               int max_second_player = 5);

/// Aggregate minor counts for any shape within the cap.
struct MinorStatistics {
    std::int64_t total = 0;
    std::int64_t zero = 0;
    std::int64_t nonzero = 0;
    int max_degree = 0;  ///< over nonzero minors
};

MinorStatistics minor_statistics(const SymbolicMatrix& sym, int max_ambient_dim = 8);

/// delta * (2*delta - 1)^(m-1) * (1 + 3*beta), exactly.
Integer strata_region_bound(std::int64_t delta, std::int64_t beta, std::int64_t m);

/// Exact evaluation with a shape check (variable count must match M).
Rational evaluate_polynomial(const Polynomial& p, const DifferenceVector& y);

}  // namespace cep

#endif  // CEP_STRATA_HPP

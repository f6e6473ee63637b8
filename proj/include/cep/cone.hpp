/**
 * Construction of the constraint matrix A(Y) of the correlated equilibrium
 * cone C(Y) = { p : A(Y) p >= 0 }, in numeric (exact rational) and symbolic
 * (polynomial entries) form.
 *
 * Row order is fixed: players ascending, ordered pairs (k,l), k != l, in
 * lexicographic order, then the D standard-basis rows. Columns follow the
 * global joint-strategy order of GameShape.
 */

#ifndef CEP_CONE_HPP
#define CEP_CONE_HPP

#include "cep/game.hpp"
#include "cep/polynomial.hpp"
#include "cep/rational.hpp"

#include <string>
#include <vector>

namespace cep {

struct RowLabel {
    enum class Kind { incentive, basis };
    Kind kind;
    int player = -1;  // incentive rows: the deviating player
    int from = -1;    // incentive rows: recommended strategy k
    int to = -1;      // incentive rows: deviation strategy l
    int coord = -1;   // basis rows: coordinate index

    std::string to_string() const;
};

/// A(Y) with exact rational entries: N incentive rows stacked over Id_D.
struct ConeMatrix {
    GameShape shape;
    RationalMatrix matrix;            // (D+N) x D
    std::vector<RowLabel> row_labels; // size D+N
};

/**
 * A(Y) with polynomial entries in the M difference variables. Entries are
 * stored in the same global row/column order as the numeric matrix, so
 * evaluating every entry at a DifferenceVector reproduces ConeMatrix
 * exactly. For (2 x n) shapes the row/column permutation that brings the
 * matrix into the block-diagonal arrangement is recorded alongside.
 */
struct SymbolicMatrix {
    GameShape shape;
    int rows = 0;
    int cols = 0;
    std::vector<Polynomial> entries;  // row-major, rows*cols
    std::vector<RowLabel> row_labels;

    // Block arrangement (only for (2 x n) shapes, empty otherwise):
    // block_row_order[r] / block_col_order[c] give the global row/column
    // shown at position (r, c) of the block form.
    std::vector<int> block_row_order;
    std::vector<int> block_col_order;

    const Polynomial& entry(int r, int c) const { return entries[r * cols + c]; }
    bool has_block_form() const { return !block_row_order.empty(); }
    const Polynomial& block_entry(int r, int c) const
    {
        return entry(block_row_order[r], block_col_order[c]);
    }
};

struct LabeledRow {
    RowLabel label;
    RationalRowVector row;
};

/// The N incentive rows U^{(i)}_{kl}, in the fixed row order.
std::vector<LabeledRow> build_u_rows(const DifferenceVector& y);

/// Stack the U rows over the identity block.
ConeMatrix build_constraint_matrix(const DifferenceVector& y);

/// A(Y) over the polynomial ring in M variables.
SymbolicMatrix symbolic_constraint_matrix(const GameShape& shape);

/// Evaluate every entry at y; equals build_constraint_matrix(y).matrix.
RationalMatrix evaluate_matrix(const SymbolicMatrix& sym, const DifferenceVector& y);

/// Names of the M polynomial variables in entry order.
std::vector<std::string> variable_names(const GameShape& shape);

}  // namespace cep

#endif  // CEP_CONE_HPP

#include "cep/cone.hpp"

namespace cep {

std::string RowLabel::to_string() const
{
    if (kind == Kind::basis)
        return "e" + std::to_string(coord + 1);
    return "U" + std::to_string(player + 1) + "(" + std::to_string(from + 1) + "," +
           std::to_string(to + 1) + ")";
}

std::vector<LabeledRow> build_u_rows(const DifferenceVector& y)
{
    const GameShape& shape = y.shape();
    const std::int64_t D = shape.dims().D;
    std::vector<LabeledRow> rows;
    for (int i = 0; i < shape.num_players(); ++i) {
        const std::int64_t opp_count = shape.num_opponent_profiles(i);
        for (int k = 0; k < shape.strategies(i); ++k) {
            for (int l = 0; l < shape.strategies(i); ++l) {
                if (l == k)
                    continue;
                LabeledRow r;
                r.label = RowLabel{RowLabel::Kind::incentive, i, k, l, -1};
                r.row = RationalRowVector::Zero(D);
                for (std::int64_t opp = 0; opp < opp_count; ++opp)
                    r.row(shape.joint_index(i, opp, k)) = y.value(i, opp, k, l);
                rows.push_back(std::move(r));
            }
        }
    }
    return rows;
}

ConeMatrix build_constraint_matrix(const DifferenceVector& y)
{
    const GameShape& shape = y.shape();
    const Dims d = shape.dims();
    ConeMatrix cone{shape, RationalMatrix::Zero(d.D + d.N, d.D), {}};

    std::vector<LabeledRow> u_rows = build_u_rows(y);
    for (std::int64_t r = 0; r < d.N; ++r) {
        cone.matrix.row(r) = u_rows[r].row;
        cone.row_labels.push_back(u_rows[r].label);
    }
    for (std::int64_t c = 0; c < d.D; ++c) {
        cone.matrix(d.N + c, c) = 1;
        cone.row_labels.push_back(RowLabel{RowLabel::Kind::basis, -1, -1, -1, static_cast<int>(c)});
    }
    return cone;
}

SymbolicMatrix symbolic_constraint_matrix(const GameShape& shape)
{
    const Dims d = shape.dims();
    const int M = static_cast<int>(d.M);
    SymbolicMatrix sym{shape};
    sym.rows = static_cast<int>(d.D + d.N);
    sym.cols = static_cast<int>(d.D);
    sym.entries.assign(static_cast<std::size_t>(sym.rows) * sym.cols, Polynomial(M));

    // A dummy vector gives access to the fixed variable indexing.
    DifferenceVector index(shape, std::vector<Rational>(d.M));

    int r = 0;
    for (int i = 0; i < shape.num_players(); ++i) {
        const std::int64_t opp_count = shape.num_opponent_profiles(i);
        for (int k = 0; k < shape.strategies(i); ++k) {
            for (int l = 0; l < shape.strategies(i); ++l) {
                if (l == k)
                    continue;
                for (std::int64_t opp = 0; opp < opp_count; ++opp) {
                    const std::int64_t col = shape.joint_index(i, opp, k);
                    const std::int64_t var =
                        (k < l) ? index.index_of(i, opp, k, l) : index.index_of(i, opp, l, k);
                    Polynomial entry = Polynomial::variable(M, static_cast<int>(var));
                    if (k > l)
                        entry = -entry;
                    sym.entries[r * sym.cols + col] = std::move(entry);
                }
                sym.row_labels.push_back(RowLabel{RowLabel::Kind::incentive, i, k, l, -1});
                ++r;
            }
        }
    }
    for (int c = 0; c < sym.cols; ++c) {
        sym.entries[(r + c) * sym.cols + c] = Polynomial::constant(M, 1);
        sym.row_labels.push_back(RowLabel{RowLabel::Kind::basis, -1, -1, -1, c});
    }

    // Block arrangement of the (2 x n) proof layout: columns grouped in
    // pairs (p_{1k}, p_{2k}) per second-player strategy k; incentive rows
    // already appear in block order; identity rows follow the columns.
    if (shape.num_players() == 2 && shape.strategies(0) == 2) {
        const int n = shape.strategies(1);
        for (int k = 0; k < n; ++k) {
            sym.block_col_order.push_back(k);
            sym.block_col_order.push_back(n + k);
        }
        for (int u = 0; u < d.N; ++u)
            sym.block_row_order.push_back(u);
        for (int c : sym.block_col_order)
            sym.block_row_order.push_back(static_cast<int>(d.N) + c);
    }
    return sym;
}

RationalMatrix evaluate_matrix(const SymbolicMatrix& sym, const DifferenceVector& y)
{
    RationalMatrix out(sym.rows, sym.cols);
    const std::vector<Rational>& point = y.entries();
    for (int r = 0; r < sym.rows; ++r)
        for (int c = 0; c < sym.cols; ++c)
            out(r, c) = sym.entry(r, c).evaluate(point);
    return out;
}

std::vector<std::string> variable_names(const GameShape& shape)
{
    const Dims d = shape.dims();
    DifferenceVector index(shape, std::vector<Rational>(d.M));
    std::vector<std::string> names;
    names.reserve(d.M);
    for (std::int64_t v = 0; v < d.M; ++v)
        names.push_back(index.variable_name(v));
    return names;
}

}  // namespace cep

#include "cep/strata.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <unordered_map>

namespace cep {

namespace {

/// Sparse view of the incentive block: per row, the (column, variable,
/// sign) triples, plus the column support mask.
struct IncentiveBlock {
    int num_rows = 0;  // N
    int num_cols = 0;  // D
    int num_vars = 0;  // M
    struct Entry {
        int col;
        int var;
        int sign;
    };
    std::vector<std::vector<Entry>> rows;
    std::vector<std::uint32_t> support;
};

IncentiveBlock incentive_block(const SymbolicMatrix& sym)
{
    const Dims d = sym.shape.dims();
    IncentiveBlock block;
    block.num_rows = static_cast<int>(d.N);
    block.num_cols = static_cast<int>(d.D);
    block.num_vars = static_cast<int>(d.M);
    block.rows.resize(block.num_rows);
    block.support.assign(block.num_rows, 0);
    for (int r = 0; r < block.num_rows; ++r) {
        for (int c = 0; c < block.num_cols; ++c) {
            const Polynomial& p = sym.entry(r, c);
            if (p.is_zero())
                continue;
            const Polynomial::Term& t = p.leading_term();
            int var = -1;
            for (int v = 0; v < block.num_vars; ++v)
                if (t.exponents[v] == 1)
                    var = v;
            block.rows[r].push_back({c, var, t.coefficient > 0 ? 1 : -1});
            block.support[r] |= (1u << c);
        }
    }
    return block;
}

/// Memoized determinant of the square submatrix of the incentive block with
/// the given row and column masks.
class MinorEngine {
public:
    explicit MinorEngine(const IncentiveBlock& block) : block_(block) {}

    const Polynomial& determinant(std::uint32_t rows, std::uint32_t cols)
    {
        const std::uint64_t key = (static_cast<std::uint64_t>(rows) << 32) | cols;
        auto it = memo_.find(key);
        if (it != memo_.end())
            return it->second;

        Polynomial det(block_.num_vars);
        if (rows == 0) {
            det = Polynomial::constant(block_.num_vars, 1);
        } else if (!structurally_zero(rows, cols)) {
            det = expand(rows, cols);
        }
        return memo_.emplace(key, std::move(det)).first->second;
    }

private:
    // rank bounds readable off the sparsity pattern: a column with no
    // support, or more rows than their combined column support, force a
    // zero determinant (the (2 x n) block-diagonal blocks hit the latter)
    bool structurally_zero(std::uint32_t rows, std::uint32_t cols) const
    {
        std::uint32_t covered = 0;
        for (int r = 0; r < block_.num_rows; ++r)
            if (rows & (1u << r))
                covered |= block_.support[r] & cols;
        if (covered != cols)
            return true;
        std::map<std::uint32_t, int> by_support;
        for (int r = 0; r < block_.num_rows; ++r)
            if (rows & (1u << r))
                ++by_support[block_.support[r] & cols];
        for (const auto& [support, count] : by_support) {
            if (support == 0)
                return true;
            if (count > std::popcount(support))
                return true;
        }
        return false;
    }

    Polynomial expand(std::uint32_t rows, std::uint32_t cols)
    {
        // expand along the column with the fewest nonzero entries
        int best_col = -1, best_count = block_.num_rows + 1;
        for (int c = 0; c < block_.num_cols; ++c) {
            if (!(cols & (1u << c)))
                continue;
            int count = 0;
            for (int r = 0; r < block_.num_rows; ++r)
                if ((rows & (1u << r)) && (block_.support[r] & (1u << c)))
                    ++count;
            if (count < best_count) {
                best_count = count;
                best_col = c;
            }
        }

        const int col_pos = std::popcount(cols & ((1u << best_col) - 1));
        Polynomial det(block_.num_vars);
        int row_pos = -1;
        for (int r = 0; r < block_.num_rows; ++r) {
            if (!(rows & (1u << r)))
                continue;
            ++row_pos;
            if (!(block_.support[r] & (1u << best_col)))
                continue;
            int sign = 0, var = -1;
            for (const IncentiveBlock::Entry& e : block_.rows[r]) {
                if (e.col == best_col) {
                    sign = e.sign;
                    var = e.var;
                    break;
                }
            }
            const Polynomial& sub =
                determinant(rows & ~(1u << r), cols & ~(1u << best_col));
            if (sub.is_zero())
                continue;
            ExponentVector e(block_.num_vars, 0);
            e[var] = 1;
            const int parity = ((row_pos + col_pos) % 2 == 0) ? 1 : -1;
            det += sub.times_term(e, Integer(parity * sign));
        }
        return det;
    }

    const IncentiveBlock& block_;
    std::unordered_map<std::uint64_t, Polynomial> memo_;
};

}  // namespace

void for_each_maximal_minor(const SymbolicMatrix& sym,
                            const std::function<void(const MinorEntry&)>& fn,
                            int max_ambient_dim)
{
    const Dims dm = sym.shape.dims();
    if (dm.D > max_ambient_dim)
        throw std::invalid_argument("shape " + sym.shape.to_string() +
                                    " exceeds the minor enumeration cap");
    const int total_rows = static_cast<int>(dm.D + dm.N);
    const int N = static_cast<int>(dm.N);
    const int D = static_cast<int>(dm.D);

    IncentiveBlock block = incentive_block(sym);
    MinorEngine engine(block);

    std::vector<int> subset(static_cast<std::size_t>(D));
    for (int i = 0; i < D; ++i)
        subset[static_cast<std::size_t>(i)] = i;

    MinorEntry entry;
    while (true) {
        entry.rows = subset;

        // Identity rows (sorted last within the subset) are eliminated
        // back-to-front; each contributes its (row position, column
        // position) parity and removes its coordinate column.
        int sign = 1;
        std::uint32_t u_rows = 0;
        std::vector<int> live_cols;
        for (int c = 0; c < D; ++c)
            live_cols.push_back(c);
        int live_row_count = D;
        for (int i = D - 1; i >= 0; --i) {
            const int r = subset[static_cast<std::size_t>(i)];
            if (r < N) {
                u_rows |= (1u << r);
                continue;
            }
            const auto cit = std::find(live_cols.begin(), live_cols.end(), r - N);
            const int col_pos = static_cast<int>(cit - live_cols.begin());
            --live_row_count;
            if ((live_row_count + col_pos) % 2 != 0)
                sign = -sign;
            live_cols.erase(cit);
        }
        std::uint32_t cols = 0;
        for (int c : live_cols)
            cols |= (1u << c);

        const Polynomial& det = engine.determinant(u_rows, cols);
        entry.det = (sign == 1) ? det : -det;
        fn(entry);

        int k = D - 1;
        while (k >= 0 && subset[static_cast<std::size_t>(k)] == total_rows - D + k)
            --k;
        if (k < 0)
            break;
        ++subset[static_cast<std::size_t>(k)];
        for (int j = k + 1; j < D; ++j)
            subset[static_cast<std::size_t>(j)] = subset[static_cast<std::size_t>(j - 1)] + 1;
    }
}

std::vector<MinorEntry> maximal_minors(const SymbolicMatrix& sym, int max_ambient_dim)
{
    std::vector<MinorEntry> out;
    for_each_maximal_minor(
        sym, [&out](const MinorEntry& e) { out.push_back(e); }, max_ambient_dim);
    return out;
}

std::vector<Polynomial> binomial_catalog(const SymbolicMatrix& sym)
{
    std::vector<Polynomial> catalog;
    for (int r1 = 0; r1 < sym.rows; ++r1) {
        for (int r2 = r1 + 1; r2 < sym.rows; ++r2) {
            for (int c1 = 0; c1 < sym.cols; ++c1) {
                for (int c2 = c1 + 1; c2 < sym.cols; ++c2) {
                    Polynomial det = sym.entry(r1, c1) * sym.entry(r2, c2) -
                                     sym.entry(r1, c2) * sym.entry(r2, c1);
                    if (det.num_terms() != 2)
                        continue;
                    det.normalize_sign();
                    catalog.push_back(std::move(det));
                }
            }
        }
    }

    // For two-player games, also take the 2x2 minors of each player's
    // matrix of difference variables, indexed (opponent strategy) x (pair).
    // Minors of rows from one block of A(Y) are of this form with the two
    // pairs sharing a strategy; from n = 4 on, maximal minors of A(Y) also
    // pick up factors with disjoint pairs, which come from this matrix but
    // not from A(Y) itself.
    const GameShape& shape = sym.shape;
    if (shape.num_players() == 2) {
        const Dims d = shape.dims();
        const int M = static_cast<int>(d.M);
        DifferenceVector index(shape, std::vector<Rational>(d.M));
        for (int i = 0; i < 2; ++i) {
            const std::int64_t opponents = shape.num_opponent_profiles(i);
            const std::int64_t pairs = shape.num_pairs(i);
            if (opponents < 2 || pairs < 2)
                continue;
            std::vector<std::pair<int, int>> pair_list;
            for (int k = 0; k < shape.strategies(i); ++k)
                for (int l = k + 1; l < shape.strategies(i); ++l)
                    pair_list.emplace_back(k, l);
            for (std::int64_t o1 = 0; o1 < opponents; ++o1) {
                for (std::int64_t o2 = o1 + 1; o2 < opponents; ++o2) {
                    for (std::size_t p = 0; p < pair_list.size(); ++p) {
                        for (std::size_t q = p + 1; q < pair_list.size(); ++q) {
                            auto v = [&](std::int64_t opp, std::size_t pr) {
                                return static_cast<int>(index.index_of(
                                    i, opp, pair_list[pr].first, pair_list[pr].second));
                            };
                            Polynomial det =
                                Polynomial::variable(M, v(o1, p)) *
                                    Polynomial::variable(M, v(o2, q)) -
                                Polynomial::variable(M, v(o1, q)) *
                                    Polynomial::variable(M, v(o2, p));
                            det.normalize_sign();
                            catalog.push_back(std::move(det));
                        }
                    }
                }
            }
        }
    }

    std::sort(catalog.begin(), catalog.end());
    catalog.erase(std::unique(catalog.begin(), catalog.end()), catalog.end());
    return catalog;
}

namespace {

MinorFactorization factor_against_catalog(const Polynomial& minor,
                                          const std::vector<Polynomial>& catalog)
{
    if (minor.is_zero())
        throw std::invalid_argument("cannot factor the zero polynomial");

    MinorFactorization out;
    const Integer content = minor.integer_content();
    out.monomial = minor.monomial_content();
    out.sign = content < 0 ? -1 : 1;

    if (abs(content) != 1)
        throw FactorizationError("integer content " + Integer(abs(content)).str() +
                                 " is not a unit; minor does not match the expected form");

    // strip the monomial content term by term
    Polynomial reduced(minor.num_variables());
    for (const Polynomial::Term& t : minor.terms()) {
        ExponentVector e = t.exponents;
        for (std::size_t i = 0; i < e.size(); ++i)
            e[i] = static_cast<unsigned char>(e[i] - out.monomial[i]);
        reduced += Polynomial::monomial(minor.num_variables(), std::move(e),
                                        out.sign * t.coefficient);
    }

    bool progress = true;
    while (!reduced.is_constant() && progress) {
        progress = false;
        for (const Polynomial& b : catalog) {
            while (true) {
                auto quotient = reduced.divide_exact(b);
                if (!quotient)
                    break;
                out.binomial_factors.push_back(b);
                reduced = std::move(*quotient);
                progress = true;
            }
        }
    }

    if (!(reduced == Polynomial::constant(minor.num_variables(), 1))) {
        if (reduced == Polynomial::constant(minor.num_variables(), -1)) {
            out.sign = -out.sign;
        } else {
            throw FactorizationError("residual is not a unit after catalog division");
        }
    }
    return out;
}

}  // namespace

MinorFactorization factor_minor_2xn(const Polynomial& minor, const SymbolicMatrix& sym)
{
    if (sym.shape.num_players() != 2 || sym.shape.strategies(0) != 2)
        throw std::invalid_argument("minor factorization applies to (2 x n) shapes");
    return factor_against_catalog(minor, binomial_catalog(sym));
}

std::vector<Polynomial> irreducible_components(const GameShape& shape, int max_second_player)
{
    if (shape.num_players() != 2 || shape.strategies(0) != 2)
        throw std::invalid_argument("component listing applies to (2 x n) shapes");
    if (shape.strategies(1) > max_second_player)
        throw std::invalid_argument("shape " + shape.to_string() +
                                    " exceeds the component cap");

    const SymbolicMatrix sym = symbolic_constraint_matrix(shape);
    const std::vector<Polynomial> catalog = binomial_catalog(sym);
    const int M = static_cast<int>(shape.dims().M);
    const int ambient = static_cast<int>(shape.dims().D);

    std::vector<bool> variable_seen(static_cast<std::size_t>(M), false);
    std::vector<Polynomial> binomials;
    auto collect = [&](const MinorEntry& entry) {
        if (entry.det.is_zero())
            return;
        const MinorFactorization f = factor_against_catalog(entry.det, catalog);
        for (int v = 0; v < M; ++v)
            if (f.monomial[static_cast<std::size_t>(v)] > 0)
                variable_seen[static_cast<std::size_t>(v)] = true;
        for (const Polynomial& b : f.binomial_factors)
            binomials.push_back(b);
    };
    for_each_maximal_minor(sym, collect, ambient);
    std::sort(binomials.begin(), binomials.end());
    binomials.erase(std::unique(binomials.begin(), binomials.end()), binomials.end());

    std::vector<Polynomial> components;
    for (int v = 0; v < M; ++v)
        if (variable_seen[static_cast<std::size_t>(v)])
            components.push_back(Polynomial::variable(M, v));
    for (Polynomial& b : binomials)
        components.push_back(std::move(b));
    return components;
}

MinorStatistics minor_statistics(const SymbolicMatrix& sym, int max_ambient_dim)
{
    MinorStatistics stats;
    for_each_maximal_minor(
        sym,
        [&stats](const MinorEntry& entry) {
            ++stats.total;
            if (entry.det.is_zero()) {
                ++stats.zero;
            } else {
                ++stats.nonzero;
                stats.max_degree = std::max(stats.max_degree, entry.det.total_degree());
            }
        },
        max_ambient_dim);
    return stats;
}

Integer strata_region_bound(std::int64_t delta, std::int64_t beta, std::int64_t m)
{
    if (delta < 1 || beta < 1 || m < 1)
        throw std::invalid_argument("region bound needs positive arguments");
    Integer result = delta;
    Integer base = 2 * Integer(delta) - 1;
    for (std::int64_t i = 0; i < m - 1; ++i)
        result *= base;
    result *= 1 + 3 * Integer(beta);
    return result;
}

Rational evaluate_polynomial(const Polynomial& p, const DifferenceVector& y)
{
    if (p.num_variables() != static_cast<int>(y.size()))
        throw std::invalid_argument("variable count does not match the shape");
    return p.evaluate(y.entries());
}

}  // namespace cep

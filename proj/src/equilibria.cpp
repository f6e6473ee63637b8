#include "cep/equilibria.hpp"

#include <json.hpp>

#include <stdexcept>

namespace cep {

int PolytopeReport::nash_count() const
{
    int count = 0;
    for (bool flag : nash_flags)
        count += flag ? 1 : 0;
    return count;
}

PolytopeReport polytope_of_differences(const DifferenceVector& y)
{
    const GameShape& shape = y.shape();
    const ConeMatrix cone = build_constraint_matrix(y);

    HRep h{cone.matrix};
    PolytopeReport report{shape, enumerate_vertices(h)};
    report.facets = irredundant_facets(h, report.vertices);
    const FaceLattice lattice = face_lattice(report.vertices, report.facets, h);
    report.dimension = lattice.dim;
    report.f_vector = f_vector(lattice);

    const std::size_t nV = report.vertices.size();
    const std::size_t nF = report.facets.active_sets.size();
    std::vector<VertexSet> incidence(nV, VertexSet(nF));
    for (std::size_t f = 0; f < nF; ++f)
        for (std::size_t r = report.facets.active_sets[f].find_first(); r != VertexSet::npos;
             r = report.facets.active_sets[f].find_next(r))
            incidence[r].set(f);
    report.type.canonical_key = canonical_incidence_key(incidence, nF);
    report.type.dimension = report.dimension;
    report.type.f_vector = report.f_vector;

    report.nash_flags.reserve(nV);
    for (const RationalVector& p : report.vertices.vertices)
        report.nash_flags.push_back(is_nash_vertex(p, shape));
    report.is_maximal_dimension = report.dimension == shape.dims().D - 1;
    return report;
}

PolytopeReport correlated_polytope(const Game& game)
{
    return polytope_of_differences(payoff_differences(game));
}

bool is_nash_vertex(const RationalVector& p, const GameShape& shape)
{
    Rational total = 0;
    for (Eigen::Index i = 0; i < p.size(); ++i) {
        if (p(i) < 0)
            throw std::invalid_argument("point has a negative entry");
        total += p(i);
    }
    if (total != 1)
        throw std::invalid_argument("point does not sum to 1");

    // marginal distribution of each player
    std::vector<std::vector<Rational>> marginals;
    for (int i = 0; i < shape.num_players(); ++i)
        marginals.emplace_back(shape.strategies(i), Rational(0));
    const std::int64_t D = shape.dims().D;
    for (std::int64_t joint = 0; joint < D; ++joint) {
        const std::vector<int> profile = shape.profile_of_index(joint);
        for (int i = 0; i < shape.num_players(); ++i)
            marginals[i][profile[i]] += p(joint);
    }

    // rank one iff p equals the outer product of its marginals
    for (std::int64_t joint = 0; joint < D; ++joint) {
        const std::vector<int> profile = shape.profile_of_index(joint);
        Rational prod = 1;
        for (int i = 0; i < shape.num_players(); ++i)
            prod *= marginals[i][profile[i]];
        if (prod != p(joint))
            return false;
    }
    return true;
}

bool is_full_dimensional(const DifferenceVector& y)
{
    if (!check_space_membership(y))
        throw std::invalid_argument("difference vector violates the space relations");
    const ConeMatrix cone = build_constraint_matrix(y);
    HRep h{cone.matrix};
    const VRep v = enumerate_vertices(h);
    return !v.empty() && polytope_dimension(v) == y.shape().dims().D - 1;
}

std::vector<int> check_forbidden_conditions(const DifferenceVector& y)
{
    const GameShape& shape = y.shape();
    if (shape.num_players() != 2 || shape.strategies(0) != 2)
        throw std::invalid_argument("forbidden-condition check needs a (2 x n) shape");
    const int n = shape.strategies(1);

    std::vector<int> matched;

    bool all_pos = true, all_neg = true;
    for (int k = 0; k < n; ++k) {
        const Rational v = y.value(0, k, 0, 1);
        all_pos = all_pos && v > 0;
        all_neg = all_neg && v < 0;
    }
    if (all_pos)
        matched.push_back(1);
    if (all_neg)
        matched.push_back(2);

    bool last_pos = true, last_neg = true;
    for (int j1 = 0; j1 < 2; ++j1) {
        for (int k = 0; k + 1 < n; ++k) {
            const Rational v = y.value(1, j1, k, n - 1);
            last_pos = last_pos && v > 0;
            last_neg = last_neg && v < 0;
        }
    }
    if (last_pos)
        matched.push_back(3);
    if (last_neg)
        matched.push_back(4);
    return matched;
}

bool region_membership_2x2(const DifferenceVector& y)
{
    const GameShape& shape = y.shape();
    if (shape.strategy_counts() != std::vector<int>{2, 2})
        throw std::invalid_argument("region check needs a (2 x 2) shape");
    const std::vector<Rational>& e = y.entries();
    const bool orthant_a = e[0] > 0 && e[1] < 0 && e[2] > 0 && e[3] < 0;
    const bool orthant_b = e[0] < 0 && e[1] > 0 && e[2] < 0 && e[3] > 0;
    return orthant_a || orthant_b;
}

std::string report_to_json(const PolytopeReport& report)
{
    nlohmann::json doc;
    doc["shape"] = report.shape.strategy_counts();
    nlohmann::json vertices = nlohmann::json::array();
    for (const RationalVector& v : report.vertices.vertices) {
        nlohmann::json point = nlohmann::json::array();
        for (Eigen::Index i = 0; i < v.size(); ++i)
            point.push_back(to_string(v(i)));
        vertices.push_back(point);
    }
    doc["vertices"] = vertices;
    doc["dimension"] = report.dimension;
    doc["f_vector"] = report.f_vector;
    doc["facets"] = report.facet_count();
    doc["type_key"] = report.type.key_hex();
    doc["nash_flags"] = report.nash_flags;
    doc["is_maximal_dimension"] = report.is_maximal_dimension;
    return doc.dump(2);
}

}  // namespace cep

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cep/cone.hpp"
#include "cep/game.hpp"
#include "cep/polyhedra.hpp"

#include <algorithm>
#include <numeric>

using namespace cep;

namespace {

Game fixture(const std::string& name)
{
    return load_game_file(std::string(CEP_FIXTURE_DIR) + "/" + name);
}

HRep hrep_of(const Game& game)
{
    return HRep{build_constraint_matrix(payoff_differences(game)).matrix};
}

RationalVector point(std::initializer_list<Rational> values)
{
    RationalVector p(static_cast<Eigen::Index>(values.size()));
    Eigen::Index i = 0;
    for (const Rational& v : values)
        p(i++) = v;
    return p;
}

VRep vrep_of(std::vector<RationalVector> points)
{
    std::sort(points.begin(), points.end(), [](const RationalVector& a, const RationalVector& b) {
        for (Eigen::Index i = 0; i < a.size(); ++i)
            if (a(i) != b(i))
                return a(i) < b(i);
        return false;
    });
    return VRep{std::move(points)};
}

/// Exhaustive bipartite-incidence isomorphism test (column permutations,
/// then multiset comparison of rows); the independent oracle for the
/// canonical fingerprint.
bool brute_force_incidence_isomorphic(const std::vector<VertexSet>& a_rows, std::size_t a_cols,
                                      const std::vector<VertexSet>& b_rows, std::size_t b_cols)
{
    if (a_rows.size() != b_rows.size() || a_cols != b_cols)
        return false;
    std::vector<std::size_t> perm(a_cols);
    std::iota(perm.begin(), perm.end(), 0);
    auto row_strings = [](const std::vector<VertexSet>& rows, std::size_t cols,
                          const std::vector<std::size_t>& p) {
        std::vector<std::string> out;
        for (const VertexSet& row : rows) {
            std::string s(cols, '0');
            for (std::size_t c = 0; c < cols; ++c)
                if (row.test(p[c]))
                    s[c] = '1';
            out.push_back(std::move(s));
        }
        std::sort(out.begin(), out.end());
        return out;
    };
    std::vector<std::size_t> identity(a_cols);
    std::iota(identity.begin(), identity.end(), 0);
    const std::vector<std::string> reference = row_strings(a_rows, a_cols, identity);
    do {
        if (row_strings(b_rows, b_cols, perm) == reference)
            return true;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return false;
}

std::vector<VertexSet> incidence_rows(const VRep& v, const Facets& facets)
{
    std::vector<VertexSet> rows(v.size(), VertexSet(facets.active_sets.size()));
    for (std::size_t f = 0; f < facets.active_sets.size(); ++f)
        for (std::size_t r = facets.active_sets[f].find_first(); r != VertexSet::npos;
             r = facets.active_sets[f].find_next(r))
            rows[r].set(f);
    return rows;
}

}  // namespace

TEST_CASE("traffic lights vertices match the published coordinates")
{
    const HRep h = hrep_of(fixture("traffic_lights.json"));
    const VRep v = enumerate_vertices(h);
    const VRep expected = vrep_of({
        point({0, 0, 1, 0}),
        point({0, 1, 0, 0}),
        point({Rational(1, 10000), Rational(99, 10000), Rational(99, 10000),
               Rational(9801, 10000)}),
        point({0, Rational(1, 101), Rational(1, 101), Rational(99, 101)}),
        point({Rational(1, 199), Rational(99, 199), Rational(99, 199), 0}),
    });
    CHECK(set_equal(v, expected));
    CHECK(set_equal(brute_force_vertices(h), expected));
}

TEST_CASE("the simplex has the basis vertices")
{
    const HRep h = HRep::simplex(4);
    const VRep v = enumerate_vertices(h);
    REQUIRE(v.size() == 4);
    const VRep expected = vrep_of(
        {point({1, 0, 0, 0}), point({0, 1, 0, 0}), point({0, 0, 1, 0}), point({0, 0, 0, 1})});
    CHECK(set_equal(v, expected));
    CHECK(set_equal(brute_force_vertices(h), expected));
}

TEST_CASE("prisoner's-dilemma-style hawk-dove collapses to one point")
{
    const HRep h = hrep_of(fixture("hawk_dove_V2_C1.json"));
    const VRep v = enumerate_vertices(h);
    REQUIRE(v.size() == 1);
    CHECK(v.vertices[0] == point({1, 0, 0, 0}));
    CHECK(set_equal(v, brute_force_vertices(h)));
    CHECK(polytope_dimension(v) == 0);
}

TEST_CASE("oracle equivalence on random (2,2) games")
{
    SplitRng rng(41);
    for (int trial = 0; trial < 20; ++trial) {
        const Game game = random_game(GameShape({2, 2}), 100, rng);
        const HRep h = hrep_of(game);
        CHECK(set_equal(enumerate_vertices(h), brute_force_vertices(h)));
    }
}

TEST_CASE("vertices satisfy every inequality exactly")
{
    SplitRng rng(42);
    const Game game = random_game(GameShape({2, 3}), 50, rng);
    const HRep h = hrep_of(game);
    const VRep v = enumerate_vertices(h);
    REQUIRE(!v.empty());
    for (const RationalVector& p : v.vertices) {
        Rational total = 0;
        for (Eigen::Index i = 0; i < p.size(); ++i) {
            CHECK(p(i) >= 0);
            total += p(i);
        }
        CHECK(total == 1);
        for (std::int64_t r = 0; r < h.num_rows(); ++r)
            CHECK(h.rows.row(r).dot(p) >= 0);
    }
}

TEST_CASE("dimension of the traffic lights polytope is 3")
{
    const VRep v = enumerate_vertices(hrep_of(fixture("traffic_lights.json")));
    CHECK(polytope_dimension(v) == 3);
}

TEST_CASE("a constant game fills the whole simplex")
{
    const GameShape shape({2, 2});
    const Game game(shape, std::vector<std::vector<Rational>>(2, std::vector<Rational>(4, 0)));
    const VRep v = enumerate_vertices(hrep_of(game));
    CHECK(v.size() == 4);
    CHECK(polytope_dimension(v) == 3);
}

TEST_CASE("dimension of an empty vertex set is an error")
{
    CHECK_THROWS_AS(polytope_dimension(VRep{}), std::invalid_argument);
}

TEST_CASE("facet counts")
{
    SUBCASE("traffic lights has 6 facets")
    {
        const HRep h = hrep_of(fixture("traffic_lights.json"));
        const VRep v = enumerate_vertices(h);
        CHECK(irredundant_facets(h, v).rows.size() == 6);
    }
    SUBCASE("hawk-dove V=2 C=4 has 6 facets")
    {
        const HRep h = hrep_of(fixture("hawk_dove_V2_C4.json"));
        const VRep v = enumerate_vertices(h);
        CHECK(irredundant_facets(h, v).rows.size() == 6);
    }
    SUBCASE("the simplex has its 4 coordinate facets")
    {
        const HRep h = HRep::simplex(4);
        const VRep v = enumerate_vertices(h);
        const Facets facets = irredundant_facets(h, v);
        CHECK(facets.rows.size() == 4);
        for (int m : facets.multiplicities)
            CHECK(m == 1);
    }
}

TEST_CASE("facet structure invariants on random games")
{
    SplitRng rng(43);
    for (const std::vector<int>& counts : {std::vector<int>{2, 2}, std::vector<int>{2, 3}}) {
        for (int trial = 0; trial < 10; ++trial) {
            const Game game = random_game(GameShape(counts), 100, rng);
            const HRep h = hrep_of(game);
            const VRep v = enumerate_vertices(h);
            const int dim = polytope_dimension(v);
            const Facets facets = irredundant_facets(h, v);
            if (dim == 0) {
                CHECK(facets.rows.empty());
                continue;
            }
            // every facet spans an affine hull of dimension dim - 1
            for (const VertexSet& set : facets.active_sets) {
                std::vector<RationalVector> members;
                for (std::size_t j = set.find_first(); j != VertexSet::npos; j = set.find_next(j))
                    members.push_back(v.vertices[j]);
                CHECK(polytope_dimension(VRep{members}) == dim - 1);
            }
            // every vertex lies in at least dim facets
            for (std::size_t j = 0; j < v.size(); ++j) {
                int on = 0;
                for (const VertexSet& set : facets.active_sets)
                    on += set.test(j) ? 1 : 0;
                CHECK(on >= dim);
            }
        }
    }
}

TEST_CASE("face lattice of the traffic lights bipyramid")
{
    const HRep h = hrep_of(fixture("traffic_lights.json"));
    const VRep v = enumerate_vertices(h);
    const Facets facets = irredundant_facets(h, v);
    const FaceLattice lattice = face_lattice(v, facets, h);
    CHECK(lattice.dim == 3);
    CHECK(f_vector(lattice) == std::vector<std::int64_t>{1, 5, 9, 6, 1});
}

TEST_CASE("face lattice of the simplex is Boolean")
{
    const HRep h = HRep::simplex(4);
    const VRep v = enumerate_vertices(h);
    const FaceLattice lattice = face_lattice(v, irredundant_facets(h, v), h);
    CHECK(f_vector(lattice) == std::vector<std::int64_t>{1, 4, 6, 4, 1});
    CHECK(lattice.num_faces() == 16);
}

TEST_CASE("face lattice of a maximal (2,3) polytope")
{
    // a difference vector inside the region of maximal dimension
    const DifferenceVector y(GameShape({2, 3}),
                             {Rational(1), Rational(1), Rational(-1), Rational(-3), Rational(-2),
                              Rational(1), Rational(2), Rational(1), Rational(-1)});
    const HRep h{build_constraint_matrix(y).matrix};
    const VRep v = enumerate_vertices(h);
    const FaceLattice lattice = face_lattice(v, irredundant_facets(h, v), h);
    CHECK(lattice.dim == 5);
    CHECK(f_vector(lattice) == std::vector<std::int64_t>{1, 11, 32, 40, 25, 8, 1});
}

TEST_CASE("f-vector of a point")
{
    const HRep h = hrep_of(fixture("hawk_dove_V2_C1.json"));
    const VRep v = enumerate_vertices(h);
    const FaceLattice lattice = face_lattice(v, irredundant_facets(h, v), h);
    CHECK(f_vector(lattice) == std::vector<std::int64_t>{1, 1});
}

TEST_CASE("lattices are intersection-closed and satisfy Euler's identity")
{
    SplitRng rng(44);
    for (const std::vector<int>& counts : {std::vector<int>{2, 2}, std::vector<int>{2, 3}}) {
        for (int trial = 0; trial < 8; ++trial) {
            const Game game = random_game(GameShape(counts), 100, rng);
            const HRep h = hrep_of(game);
            const VRep v = enumerate_vertices(h);
            const FaceLattice lattice = face_lattice(v, irredundant_facets(h, v), h);

            // closure under intersection
            for (std::size_t a = 0; a < lattice.faces.size(); ++a) {
                for (std::size_t b = a + 1; b < lattice.faces.size(); ++b) {
                    const VertexSet meet = lattice.faces[a].vertices & lattice.faces[b].vertices;
                    bool found = false;
                    for (const Face& f : lattice.faces)
                        found = found || f.vertices == meet;
                    CHECK(found);
                }
            }

            // alternating sum over nonempty faces equals 1
            std::int64_t alternating = 0;
            for (const Face& f : lattice.faces)
                if (f.dim >= 0)
                    alternating += (f.dim % 2 == 0) ? 1 : -1;
            CHECK(alternating == 1);

            // covers connect consecutive ranks only
            for (const auto& [lower, upper] : lattice.covers)
                CHECK(lattice.faces[static_cast<std::size_t>(upper)].dim ==
                      lattice.faces[static_cast<std::size_t>(lower)].dim + 1);
        }
    }
}

TEST_CASE("fingerprints identify the bipyramid across games")
{
    const HRep h1 = hrep_of(fixture("traffic_lights.json"));
    const VRep v1 = enumerate_vertices(h1);
    const CombinatorialType t1 = combinatorial_fingerprint(v1, irredundant_facets(h1, v1), h1);

    const HRep h2 = hrep_of(fixture("hawk_dove_V2_C4.json"));
    const VRep v2 = enumerate_vertices(h2);
    const CombinatorialType t2 = combinatorial_fingerprint(v2, irredundant_facets(h2, v2), h2);

    CHECK(t1 == t2);
    CHECK(t1.dimension == 3);
    CHECK(t1.f_vector == std::vector<std::int64_t>{1, 5, 9, 6, 1});

    const HRep hs = HRep::simplex(4);
    const VRep vs = enumerate_vertices(hs);
    const CombinatorialType ts = combinatorial_fingerprint(vs, irredundant_facets(hs, vs), hs);
    CHECK(t1 != ts);
}

TEST_CASE("canonical keys are invariant under row and column permutations")
{
    SplitRng rng(45);
    for (int trial = 0; trial < 30; ++trial) {
        const std::size_t nV = 3 + static_cast<std::size_t>(rng.uniform_int(0, 5));
        const std::size_t nF = 2 + static_cast<std::size_t>(rng.uniform_int(0, 4));
        std::vector<VertexSet> rows(nV, VertexSet(nF));
        for (std::size_t r = 0; r < nV; ++r)
            for (std::size_t f = 0; f < nF; ++f)
                if (rng.flip())
                    rows[r].set(f);

        std::vector<std::size_t> rp(nV), cp(nF);
        std::iota(rp.begin(), rp.end(), 0);
        std::iota(cp.begin(), cp.end(), 0);
        for (std::size_t i = nV - 1; i > 0; --i)
            std::swap(rp[i], rp[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i)))]);
        for (std::size_t i = nF - 1; i > 0; --i)
            std::swap(cp[i], cp[static_cast<std::size_t>(rng.uniform_int(0, static_cast<std::int64_t>(i)))]);

        std::vector<VertexSet> permuted(nV, VertexSet(nF));
        for (std::size_t r = 0; r < nV; ++r)
            for (std::size_t f = 0; f < nF; ++f)
                if (rows[rp[r]].test(cp[f]))
                    permuted[r].set(f);

        CHECK(canonical_incidence_key(rows, nF) == canonical_incidence_key(permuted, nF));
    }
}

TEST_CASE("fingerprint equality agrees with brute-force isomorphism search")
{
    // corpus: polytopes from fixtures and random games, all with <= 12 vertices
    std::vector<std::pair<std::vector<VertexSet>, std::size_t>> corpus;
    auto add_game = [&corpus](const Game& game) {
        const HRep h = hrep_of(game);
        const VRep v = enumerate_vertices(h);
        if (v.empty() || v.size() > 12)
            return;
        const Facets facets = irredundant_facets(h, v);
        if (facets.active_sets.size() > 7)
            return;  // keep the factorial oracle cheap
        corpus.emplace_back(incidence_rows(v, facets), facets.active_sets.size());
    };
    add_game(fixture("traffic_lights.json"));
    add_game(fixture("hawk_dove_V2_C4.json"));
    add_game(fixture("hawk_dove_V2_C1.json"));
    SplitRng rng(46);
    for (int trial = 0; trial < 12; ++trial)
        add_game(random_game(GameShape({2, 2}), 20, rng));
    for (int trial = 0; trial < 6; ++trial)
        add_game(random_game(GameShape({2, 3}), 20, rng));

    REQUIRE(corpus.size() >= 10);
    for (std::size_t a = 0; a < corpus.size(); ++a) {
        for (std::size_t b = a; b < corpus.size(); ++b) {
            const bool same_key = canonical_incidence_key(corpus[a].first, corpus[a].second) ==
                                  canonical_incidence_key(corpus[b].first, corpus[b].second);
            const bool isomorphic = brute_force_incidence_isomorphic(
                corpus[a].first, corpus[a].second, corpus[b].first, corpus[b].second);
            CHECK(same_key == isomorphic);
        }
    }
}

TEST_CASE("infeasible systems yield an empty vertex set")
{
    // p >= 0, sum p = 1 together with -p1 - p2 - p3 - p4 >= 0 cannot hold
    HRep h = HRep::simplex(4);
    h.rows.conservativeResize(5, 4);
    h.rows.row(4).setConstant(Rational(-1));
    CHECK(enumerate_vertices(h).empty());
    CHECK(brute_force_vertices(h).empty());
}

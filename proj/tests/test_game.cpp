#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cep/game.hpp"

#include <fstream>
#include <sstream>

using namespace cep;

namespace {

Game fixture(const std::string& name)
{
    return load_game_file(std::string(CEP_FIXTURE_DIR) + "/" + name);
}

}  // namespace

TEST_CASE("dims for the census shapes")
{
    CHECK(dims(GameShape({2, 2})).D == 4);
    CHECK(dims(GameShape({2, 2})).N == 4);
    CHECK(dims(GameShape({2, 2})).M == 4);

    CHECK(dims(GameShape({2, 3})).D == 6);
    CHECK(dims(GameShape({2, 3})).N == 8);
    CHECK(dims(GameShape({2, 3})).M == 9);

    CHECK(dims(GameShape({2, 2, 2})).D == 8);
    CHECK(dims(GameShape({2, 2, 2})).N == 6);
    CHECK(dims(GameShape({2, 2, 2})).M == 12);
}

TEST_CASE("dims grows strictly in every strategy count")
{
    const std::vector<std::vector<int>> shapes = {{2, 2}, {2, 3}, {3, 3}, {2, 2, 2}, {2, 3, 4}};
    for (const auto& counts : shapes) {
        const Dims base = dims(GameShape(counts));
        for (std::size_t i = 0; i < counts.size(); ++i) {
            std::vector<int> bumped = counts;
            ++bumped[i];
            const Dims larger = dims(GameShape(bumped));
            CHECK(larger.D > base.D);
            CHECK(larger.N > base.N);
            CHECK(larger.M > base.M);
        }
    }
}

TEST_CASE("loading the traffic lights document")
{
    const Game game = fixture("traffic_lights.json");
    CHECK(game.shape().strategy_counts() == std::vector<int>{2, 2});
    CHECK(game.payoff(0, 0) == Rational(-99));  // X1_11
    CHECK(game.payoff(0, 1) == Rational(1));    // X1_12
    CHECK(game.payoff(1, 2) == Rational(1));    // X2_21
    CHECK(game.payoff(1, 3) == Rational(0));    // X2_22
}

TEST_CASE("loading hawk-dove with fractional payoffs")
{
    const Game game = fixture("hawk_dove_V2_C1.json");
    CHECK(game.payoff(0, 0) == Rational(1, 2));
    CHECK(game.payoff(1, 0) == Rational(1, 2));

    const Game hd4 = fixture("hawk_dove_V2_C4.json");
    CHECK(hd4.payoff(0, 0) == Rational(-1));
    CHECK(hd4.payoff(0, 1) == Rational(2));
}

TEST_CASE("malformed documents are rejected")
{
    CHECK_THROWS_AS(load_game("{]"), ParseError);
    CHECK_THROWS_AS(load_game(R"({"strategies": [2, 2]})"), ParseError);
    // three entries for a (2,2) player tensor
    CHECK_THROWS_AS(
        load_game(R"({"strategies": [2, 2],
                      "payoffs": [[[1, 2, 3], [0, 0]], [[0, 0], [0, 0]]]})"),
        ParseError);
    CHECK_THROWS_AS(
        load_game(R"({"strategies": [2, 0],
                      "payoffs": [[[1], [1]], [[1], [1]]]})"),
        ParseError);
    // JSON floats are not accepted as exact rationals
    CHECK_THROWS_AS(
        load_game(R"({"strategies": [2, 2],
                      "payoffs": [[[0.5, 0], [0, 0]], [[0, 0], [0, 0]]]})"),
        ParseError);
    CHECK_THROWS_AS(
        load_game(R"({"strategies": [2, 2],
                      "payoffs": [[["x", 0], [0, 0]], [[0, 0], [0, 0]]]})"),
        ParseError);
}

TEST_CASE("rational string parsing")
{
    CHECK(*parse_rational("-99") == Rational(-99));
    CHECK(*parse_rational("3/4") == Rational(3, 4));
    CHECK(*parse_rational("-6/4") == Rational(-3, 2));
    CHECK(*parse_rational("0.25") == Rational(1, 4));
    CHECK(*parse_rational("-1.5") == Rational(-3, 2));
    CHECK(*parse_rational("+5") == Rational(5));
    CHECK(*parse_rational("+3/4") == Rational(3, 4));
    CHECK(*parse_rational("-.5") == Rational(-1, 2));
    CHECK(!parse_rational("1.").has_value());
    CHECK(!parse_rational("1/0").has_value());
    CHECK(!parse_rational("a/b").has_value());
    CHECK(!parse_rational("").has_value());
}

TEST_CASE("payoff differences of traffic lights")
{
    const DifferenceVector y = payoff_differences(fixture("traffic_lights.json"));
    CHECK(y.size() == 4);
    CHECK(y.value(0, 0, 0, 1) == Rational(-99));  // Y1_1(1,2)
    CHECK(y.value(0, 1, 0, 1) == Rational(1));    // Y1_2(1,2)
    CHECK(y.value(1, 0, 0, 1) == Rational(-99));  // Y2_1(1,2)
    CHECK(y.value(1, 1, 0, 1) == Rational(1));    // Y2_2(1,2)
}

TEST_CASE("payoff differences of hawk-dove V=2 C=4")
{
    const DifferenceVector y = payoff_differences(fixture("hawk_dove_V2_C4.json"));
    CHECK(y.value(0, 0, 0, 1) == Rational(-1));
    CHECK(y.value(0, 1, 0, 1) == Rational(1));
    CHECK(y.value(1, 0, 0, 1) == Rational(-1));
    CHECK(y.value(1, 1, 0, 1) == Rational(1));
}

TEST_CASE("constant games have zero differences")
{
    const GameShape shape({2, 2});
    std::vector<std::vector<Rational>> payoffs(2, std::vector<Rational>(4, Rational(0)));
    const DifferenceVector y = payoff_differences(Game(shape, payoffs));
    for (const Rational& v : y.entries())
        CHECK(v == 0);
}

TEST_CASE("antisymmetric lookups negate")
{
    SplitRng rng(11);
    const GameShape shape({3, 3});
    const DifferenceVector y = payoff_differences(random_game(shape, 50, rng));
    for (int i = 0; i < 2; ++i)
        for (std::int64_t opp = 0; opp < 3; ++opp)
            for (int k = 0; k < 3; ++k)
                for (int l = 0; l < 3; ++l)
                    if (k != l)
                        CHECK(y.value(i, opp, k, l) == -y.value(i, opp, l, k));
}

TEST_CASE("space membership")
{
    SUBCASE("any (2,2) vector is in the space")
    {
        const DifferenceVector y(GameShape({2, 2}),
                                 {Rational(3), Rational(-7), Rational(1), Rational(9)});
        CHECK(check_space_membership(y));
    }

    SUBCASE("explicit (2,3) triangle relation")
    {
        // entries: Y1_1, Y1_2, Y1_3, Y2_1(1,2), Y2_1(1,3), Y2_1(2,3),
        //          Y2_2(1,2), Y2_2(1,3), Y2_2(2,3)
        std::vector<Rational> values = {5, 5, 5, 1, 2, 1, 1, 2, 1};
        CHECK(check_space_membership(DifferenceVector(GameShape({2, 3}), values)));
        values[4] = 5;  // Y2_1(1,3) != Y2_1(1,2) + Y2_1(2,3)
        CHECK(!check_space_membership(DifferenceVector(GameShape({2, 3}), values)));
    }

    SUBCASE("differences of real games always satisfy the relations")
    {
        SplitRng rng(5);
        for (int trial = 0; trial < 50; ++trial) {
            CHECK(check_space_membership(payoff_differences(random_game(GameShape({2, 3}), 100, rng))));
            CHECK(check_space_membership(payoff_differences(random_game(GameShape({3, 4}), 100, rng))));
        }
    }
}

TEST_CASE("affine transforms")
{
    const Game game = fixture("traffic_lights.json");

    SUBCASE("identity transform")
    {
        const Game same = transform_affine(game, {1, 1}, {0, 0});
        for (int i = 0; i < 2; ++i)
            for (std::int64_t j = 0; j < 4; ++j)
                CHECK(same.payoff(i, j) == game.payoff(i, j));
    }

    SUBCASE("entrywise rescaling")
    {
        const Game scaled = transform_affine(game, {2, 3}, {5, -1});
        CHECK(scaled.payoff(0, 0) == Rational(-193));  // 2*(-99) + 5
        CHECK(scaled.payoff(1, 2) == Rational(2));     // 3*1 - 1
    }

    SUBCASE("nonpositive scale is rejected")
    {
        CHECK_THROWS_AS(transform_affine(game, {-1, 1}, {0, 0}), std::invalid_argument);
        CHECK_THROWS_AS(transform_affine(game, {0, 1}, {0, 0}), std::invalid_argument);
    }
}

TEST_CASE("game JSON round trip")
{
    SplitRng rng(3);
    const Game game = random_game(GameShape({2, 3}), 100, rng);
    const Game back = load_game(game_to_json(game));
    CHECK(back.shape() == game.shape());
    for (int i = 0; i < 2; ++i)
        for (std::int64_t j = 0; j < 6; ++j)
            CHECK(back.payoff(i, j) == game.payoff(i, j));
}

TEST_CASE("shape parsing")
{
    CHECK(GameShape::parse("2x3").strategy_counts() == std::vector<int>{2, 3});
    CHECK(GameShape::parse("2x2x2").strategy_counts() == std::vector<int>{2, 2, 2});
    CHECK_THROWS_AS(GameShape::parse("2"), ParseError);
    CHECK_THROWS_AS(GameShape::parse("2xfrog"), ParseError);
}

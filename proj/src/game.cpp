#include "cep/game.hpp"

#include <json.hpp>

#include <fstream>
#include <sstream>

namespace cep {

GameShape::GameShape(std::vector<int> strategy_counts) : counts_(std::move(strategy_counts))
{
    if (counts_.size() < 2)
        throw std::invalid_argument("a game needs at least 2 players");
    for (int d : counts_)
        if (d < 1)
            throw std::invalid_argument("every player needs at least one strategy");
}

Dims GameShape::dims() const
{
    Dims out{1, 0, 0};
    const int n = num_players();
    for (int i = 0; i < n; ++i)
        out.D *= counts_[i];
    for (int i = 0; i < n; ++i) {
        const std::int64_t d = counts_[i];
        out.N += d * (d - 1);
        out.M += (d * (d - 1) / 2) * num_opponent_profiles(i);
    }
    return out;
}

std::int64_t GameShape::profile_index(const std::vector<int>& profile) const
{
    std::int64_t flat = 0;
    for (int i = 0; i < num_players(); ++i)
        flat = flat * counts_[i] + profile[i];
    return flat;
}

std::vector<int> GameShape::profile_of_index(std::int64_t flat) const
{
    std::vector<int> profile(num_players());
    for (int i = num_players() - 1; i >= 0; --i) {
        profile[i] = static_cast<int>(flat % counts_[i]);
        flat /= counts_[i];
    }
    return profile;
}

std::int64_t GameShape::num_opponent_profiles(int player) const
{
    std::int64_t count = 1;
    for (int i = 0; i < num_players(); ++i)
        if (i != player)
            count *= counts_[i];
    return count;
}

std::int64_t GameShape::opponent_profile_index(int player, const std::vector<int>& others) const
{
    std::int64_t flat = 0;
    int pos = 0;
    for (int i = 0; i < num_players(); ++i) {
        if (i == player)
            continue;
        flat = flat * counts_[i] + others[pos++];
    }
    return flat;
}

std::vector<int> GameShape::opponent_profile_of_index(int player, std::int64_t flat) const
{
    std::vector<int> others(num_players() - 1);
    int pos = static_cast<int>(others.size()) - 1;
    for (int i = num_players() - 1; i >= 0; --i) {
        if (i == player)
            continue;
        others[pos--] = static_cast<int>(flat % counts_[i]);
        flat /= counts_[i];
    }
    return others;
}

std::int64_t GameShape::joint_index(int player, std::int64_t opponent_flat, int own) const
{
    const std::vector<int> others = opponent_profile_of_index(player, opponent_flat);
    std::vector<int> profile(num_players());
    int pos = 0;
    for (int i = 0; i < num_players(); ++i)
        profile[i] = (i == player) ? own : others[pos++];
    return profile_index(profile);
}

std::int64_t GameShape::num_pairs(int player) const
{
    const std::int64_t d = counts_[player];
    return d * (d - 1) / 2;
}

std::int64_t GameShape::pair_index(int player, int k, int l) const
{
    const std::int64_t d = counts_[player];
    return static_cast<std::int64_t>(k) * d - static_cast<std::int64_t>(k) * (k + 1) / 2 +
           (l - k - 1);
}

std::string GameShape::to_string() const
{
    std::string out;
    for (std::size_t i = 0; i < counts_.size(); ++i) {
        if (i > 0)
            out += 'x';
        out += std::to_string(counts_[i]);
    }
    return out;
}

GameShape GameShape::parse(const std::string& text)
{
    std::vector<int> counts;
    std::string token;
    std::istringstream in(text);
    while (std::getline(in, token, 'x')) {
        try {
            counts.push_back(std::stoi(token));
        } catch (const std::exception&) {
            throw ParseError("malformed shape: " + text);
        }
    }
    if (counts.size() < 2)
        throw ParseError("malformed shape: " + text);
    for (int d : counts)
        if (d < 1)
            throw ParseError("malformed shape: " + text);
    return GameShape(counts);
}

Game::Game(GameShape shape, std::vector<std::vector<Rational>> payoffs)
    : shape_(std::move(shape)), payoffs_(std::move(payoffs))
{
    const std::int64_t D = shape_.dims().D;
    if (static_cast<int>(payoffs_.size()) != shape_.num_players())
        throw std::invalid_argument("one payoff tensor per player expected");
    for (const auto& tensor : payoffs_)
        if (static_cast<std::int64_t>(tensor.size()) != D)
            throw std::invalid_argument("payoff tensor has wrong size");
}

DifferenceVector::DifferenceVector(GameShape shape, std::vector<Rational> entries)
    : shape_(std::move(shape)), entries_(std::move(entries))
{
    if (static_cast<std::int64_t>(entries_.size()) != shape_.dims().M)
        throw std::invalid_argument("difference vector has wrong size");
}

std::int64_t DifferenceVector::index_of(int player, std::int64_t opponent_flat, int k, int l) const
{
    std::int64_t offset = 0;
    for (int i = 0; i < player; ++i)
        offset += shape_.num_pairs(i) * shape_.num_opponent_profiles(i);
    return offset + opponent_flat * shape_.num_pairs(player) + shape_.pair_index(player, k, l);
}

Rational DifferenceVector::value(int player, std::int64_t opponent_flat, int k, int l) const
{
    if (k < l)
        return entries_[index_of(player, opponent_flat, k, l)];
    return -entries_[index_of(player, opponent_flat, l, k)];
}

std::string DifferenceVector::variable_name(std::int64_t flat) const
{
    for (int i = 0; i < shape_.num_players(); ++i) {
        const std::int64_t block = shape_.num_pairs(i) * shape_.num_opponent_profiles(i);
        if (flat >= block) {
            flat -= block;
            continue;
        }
        const std::int64_t opp = flat / shape_.num_pairs(i);
        std::int64_t pair = flat % shape_.num_pairs(i);
        int k = 0;
        while (pair >= shape_.strategies(i) - k - 1) {
            pair -= shape_.strategies(i) - k - 1;
            ++k;
        }
        const int l = k + 1 + static_cast<int>(pair);
        std::string name = "Y" + std::to_string(i + 1) + "_";
        const std::vector<int> others = shape_.opponent_profile_of_index(i, opp);
        for (int j : others)
            name += std::to_string(j + 1);
        name += "(" + std::to_string(k + 1) + "," + std::to_string(l + 1) + ")";
        return name;
    }
    throw std::out_of_range("variable index out of range");
}

Dims dims(const GameShape& shape)
{
    return shape.dims();
}

namespace {

using nlohmann::json;

Rational parse_payoff_entry(const json& value)
{
    if (value.is_number_integer())
        return Rational(static_cast<long long>(value.get<std::int64_t>()));
    if (value.is_string()) {
        if (auto r = parse_rational(value.get<std::string>()))
            return *r;
        throw ParseError("not a rational: \"" + value.get<std::string>() + "\"");
    }
    throw ParseError("payoff entries must be integers or rational strings");
}

// Walk the nested tensor (player-1-outermost nesting) and fill `flat` in
// joint-strategy order.
void parse_tensor(const json& node, const GameShape& shape, int depth, std::int64_t base,
                  std::vector<Rational>& flat)
{
    const int expected = shape.strategies(depth);
    if (!node.is_array() || static_cast<int>(node.size()) != expected)
        throw ParseError("payoff tensor level " + std::to_string(depth + 1) + " must have " +
                         std::to_string(expected) + " entries");
    for (int j = 0; j < expected; ++j) {
        const std::int64_t pos = base * expected + j;
        if (depth + 1 == shape.num_players())
            flat[pos] = parse_payoff_entry(node[j]);
        else
            parse_tensor(node[j], shape, depth + 1, pos, flat);
    }
}

json tensor_to_json(const Game& game, int player, int depth, std::int64_t base)
{
    const GameShape& shape = game.shape();
    json node = json::array();
    for (int j = 0; j < shape.strategies(depth); ++j) {
        const std::int64_t pos = base * shape.strategies(depth) + j;
        if (depth + 1 == shape.num_players())
            node.push_back(to_string(game.payoff(player, pos)));
        else
            node.push_back(tensor_to_json(game, player, depth + 1, pos));
    }
    return node;
}

}  // namespace

Game load_game(const std::string& json_text)
{
    json doc;
    try {
        doc = json::parse(json_text);
    } catch (const json::exception& e) {
        throw ParseError(std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object() || !doc.contains("strategies") || !doc.contains("payoffs"))
        throw ParseError("game document needs \"strategies\" and \"payoffs\"");

    const json& strategies = doc["strategies"];
    if (!strategies.is_array() || strategies.size() < 2)
        throw ParseError("\"strategies\" must list at least two players");
    std::vector<int> counts;
    for (const json& d : strategies) {
        if (!d.is_number_integer() || d.get<std::int64_t>() < 1)
            throw ParseError("strategy counts must be positive integers");
        counts.push_back(d.get<int>());
    }
    GameShape shape(std::move(counts));

    const json& payoffs = doc["payoffs"];
    if (!payoffs.is_array() || static_cast<int>(payoffs.size()) != shape.num_players())
        throw ParseError("\"payoffs\" must hold one tensor per player");

    const std::int64_t D = shape.dims().D;
    std::vector<std::vector<Rational>> tensors;
    for (int i = 0; i < shape.num_players(); ++i) {
        std::vector<Rational> flat(D);
        parse_tensor(payoffs[i], shape, 0, 0, flat);
        tensors.push_back(std::move(flat));
    }
    return Game(std::move(shape), std::move(tensors));
}

Game load_game_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in)
        throw ParseError("cannot open " + path);
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return load_game(buffer.str());
}

std::string game_to_json(const Game& game)
{
    json doc;
    doc["strategies"] = game.shape().strategy_counts();
    json tensors = json::array();
    for (int i = 0; i < game.shape().num_players(); ++i)
        tensors.push_back(tensor_to_json(game, i, 0, 0));
    doc["payoffs"] = tensors;
    return doc.dump();
}

DifferenceVector payoff_differences(const Game& game)
{
    const GameShape& shape = game.shape();
    std::vector<Rational> entries;
    entries.reserve(shape.dims().M);
    for (int i = 0; i < shape.num_players(); ++i) {
        const std::int64_t opp_count = shape.num_opponent_profiles(i);
        for (std::int64_t opp = 0; opp < opp_count; ++opp)
            for (int k = 0; k < shape.strategies(i); ++k)
                for (int l = k + 1; l < shape.strategies(i); ++l)
                    entries.push_back(game.payoff(i, shape.joint_index(i, opp, k)) -
                                      game.payoff(i, shape.joint_index(i, opp, l)));
    }
    return DifferenceVector(shape, std::move(entries));
}

bool check_space_membership(const DifferenceVector& y)
{
    const GameShape& shape = y.shape();
    for (int i = 0; i < shape.num_players(); ++i) {
        const int d = shape.strategies(i);
        if (d < 3)
            continue;
        const std::int64_t opp_count = shape.num_opponent_profiles(i);
        for (std::int64_t opp = 0; opp < opp_count; ++opp)
            for (int k = 0; k < d; ++k)
                for (int l = k + 1; l < d; ++l)
                    for (int t = l + 1; t < d; ++t)
                        if (y.value(i, opp, k, l) + y.value(i, opp, l, t) !=
                            y.value(i, opp, k, t))
                            return false;
    }
    return true;
}

Game transform_affine(const Game& game, const std::vector<Rational>& scales,
                      const std::vector<Rational>& shifts)
{
    const GameShape& shape = game.shape();
    if (static_cast<int>(scales.size()) != shape.num_players() ||
        static_cast<int>(shifts.size()) != shape.num_players())
        throw std::invalid_argument("one scale and one shift per player expected");
    for (const Rational& s : scales)
        if (s <= 0)
            throw std::invalid_argument("affine payoff scales must be positive");

    std::vector<std::vector<Rational>> payoffs;
    for (int i = 0; i < shape.num_players(); ++i) {
        std::vector<Rational> tensor = game.payoffs(i);
        for (Rational& x : tensor)
            x = scales[i] * x + shifts[i];
        payoffs.push_back(std::move(tensor));
    }
    return Game(shape, std::move(payoffs));
}

Game random_game(const GameShape& shape, std::int64_t payoff_range, SplitRng& rng)
{
    const std::int64_t D = shape.dims().D;
    std::vector<std::vector<Rational>> payoffs;
    for (int i = 0; i < shape.num_players(); ++i) {
        std::vector<Rational> tensor(D);
        for (std::int64_t j = 0; j < D; ++j)
            tensor[j] = Rational(static_cast<long long>(rng.uniform_int(-payoff_range, payoff_range)));
        payoffs.push_back(std::move(tensor));
    }
    return Game(shape, std::move(payoffs));
}

}  // namespace cep

/**
 * Normal-form games with exact rational payoffs, and the payoff-difference
 * vectors they induce.
 *
 * Index conventions (fixed once, used everywhere downstream):
 *  - all strategy indices are 0-based internally;
 *  - a pure joint strategy (j_1,...,j_n) maps to the flat column index in
 *    lexicographic order with j_1 slowest and j_n fastest;
 *  - difference entries are stored for ordered pairs k < l only; a lookup
 *    with k > l returns the exact negation of the stored value.
 */

#ifndef CEP_GAME_HPP
#define CEP_GAME_HPP

#include "cep/rational.hpp"
#include "cep/rng.hpp"

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cep {

/// Raised when a game document cannot be parsed or fails validation.
class ParseError : public std::runtime_error {
public:
    explicit ParseError(const std::string& what) : std::runtime_error(what) {}
};

/// Ambient sizes derived from the strategy counts.
struct Dims {
    std::int64_t D;  ///< number of pure joint strategies, prod d_i
    std::int64_t N;  ///< number of incentive constraints, sum d_i (d_i - 1)
    std::int64_t M;  ///< number of payoff-difference variables
};

class GameShape {
public:
    /// Strategy counts (d_1,...,d_n); requires n >= 2 and every d_i >= 1.
    explicit GameShape(std::vector<int> strategy_counts);

    int num_players() const { return static_cast<int>(counts_.size()); }
    int strategies(int player) const { return counts_[player]; }
    const std::vector<int>& strategy_counts() const { return counts_; }

    Dims dims() const;
    std::int64_t num_profiles() const { return dims().D; }

    /// Flat joint-strategy index for a full profile (j_1,...,j_n).
    std::int64_t profile_index(const std::vector<int>& profile) const;
    /// Inverse of profile_index.
    std::vector<int> profile_of_index(std::int64_t flat) const;

    /// Number of opponent profiles for a player, prod_{k != i} d_k.
    std::int64_t num_opponent_profiles(int player) const;
    /// Flat index of a profile with coordinate `player` removed
    /// (lexicographic, first remaining coordinate slowest).
    std::int64_t opponent_profile_index(int player, const std::vector<int>& others) const;
    std::vector<int> opponent_profile_of_index(int player, std::int64_t flat) const;

    /// Joint-strategy index obtained by inserting own strategy j into an
    /// opponent profile.
    std::int64_t joint_index(int player, std::int64_t opponent_flat, int own) const;

    /// Number of unordered strategy pairs for a player, C(d_i, 2).
    std::int64_t num_pairs(int player) const;
    /// Position of pair (k, l), k < l, in lexicographic pair order.
    std::int64_t pair_index(int player, int k, int l) const;

    bool operator==(const GameShape& other) const { return counts_ == other.counts_; }
    bool operator!=(const GameShape& other) const { return !(*this == other); }

    /// Render as "2x3", "2x2x2", ...
    std::string to_string() const;
    /// Parse "2x3"-style spellings; throws ParseError on malformed input.
    static GameShape parse(const std::string& text);

private:
    std::vector<int> counts_;
};

/**
 * A normal-form game: one rank-n payoff tensor of exact rationals per
 * player, stored flat in joint-strategy order.
 */
class Game {
public:
    Game(GameShape shape, std::vector<std::vector<Rational>> payoffs);

    const GameShape& shape() const { return shape_; }
    const std::vector<Rational>& payoffs(int player) const { return payoffs_[player]; }
    const Rational& payoff(int player, std::int64_t joint) const { return payoffs_[player][joint]; }

private:
    GameShape shape_;
    std::vector<std::vector<Rational>> payoffs_;
};

/**
 * The vector Y of payoff differences. Entries are indexed by
 * (player i; opponent profile; strategy pair k < l) and laid out flat with
 * player slowest, then opponent profile, then pair. This layout fixes the
 * variable order of every symbolic computation downstream.
 */
class DifferenceVector {
public:
    DifferenceVector(GameShape shape, std::vector<Rational> entries);

    const GameShape& shape() const { return shape_; }
    std::int64_t size() const { return static_cast<std::int64_t>(entries_.size()); }
    const std::vector<Rational>& entries() const { return entries_; }

    /// Flat position of the stored entry (i; opponent profile; k < l).
    std::int64_t index_of(int player, std::int64_t opponent_flat, int k, int l) const;

    /// Antisymmetric lookup: value for any ordered pair k != l.
    Rational value(int player, std::int64_t opponent_flat, int k, int l) const;

    const Rational& entry(std::int64_t flat) const { return entries_[flat]; }

    /// Human-readable variable name for a flat entry index, e.g. "Y1_2(1,2)".
    std::string variable_name(std::int64_t flat) const;

private:
    GameShape shape_;
    std::vector<Rational> entries_;
};

/// D = prod d_i, N = sum d_i(d_i-1), M = sum C(d_i,2) prod_{k != i} d_k.
Dims dims(const GameShape& shape);

/// Parse a JSON game document (see README for the schema).
Game load_game(const std::string& json_text);

/// Load from a file path; throws ParseError on IO failure as well.
Game load_game_file(const std::string& path);

/// Serialize a game back to its JSON document form.
std::string game_to_json(const Game& game);

/// The Y-substitution: every entry is a difference of two payoffs.
DifferenceVector payoff_differences(const Game& game);

/// True iff y satisfies the triangle relations Y(k,l) + Y(l,t) = Y(k,t)
/// for every player with at least 3 strategies (vacuously true otherwise).
bool check_space_membership(const DifferenceVector& y);

/// Payoff rescaling x -> scale_i * x + shift_i per player; scales must be
/// positive (throws std::invalid_argument otherwise).
Game transform_affine(const Game& game, const std::vector<Rational>& scales,
                      const std::vector<Rational>& shifts);

/// Uniform integer payoffs in [-payoff_range, payoff_range], all players.
Game random_game(const GameShape& shape, std::int64_t payoff_range, SplitRng& rng);

}  // namespace cep

#endif  // CEP_GAME_HPP

/**
 * Combinatorial-type censuses: sign-pattern enumeration over the strata
 * components for (2 x 3), seeded random-game sampling per shape, and the
 * probe for the smaller-game equivalence conjecture.
 *
 * All runs are deterministic given (seed, count): every task draws from an
 * independent stream derived from the seed and the task index, and results
 * are reduced in task order, so the output is byte-identical regardless of
 * the worker count.
 */

#ifndef CEP_CLASSIFY_HPP
#define CEP_CLASSIFY_HPP

#include "cep/equilibria.hpp"
#include "cep/game.hpp"
#include "cep/polynomial.hpp"

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace cep {

/// Strict sign assignment (+1/-1) to each irreducible boundary component.
struct SignPattern {
    std::vector<int> signs;
};

/// One observed combinatorial type.
struct TypeRecord {
    int dimension = 0;
    std::string key;  ///< raw canonical key bytes
    std::string key_hex;
    std::int64_t count = 0;
    std::vector<std::int64_t> f_vector;
    std::int64_t num_vertices = 0;
    /// JSON text: a game document ("{\"strategies\":...}") or a difference
    /// vector ("{\"y\":[...]}"), whichever produced the type first.
    std::string representative;
};

struct CensusTable {
    GameShape shape;
    std::uint64_t seed = 0;
    std::int64_t samples = 0;       ///< games drawn, or sign patterns tried
    std::int64_t payoff_range = 0;  ///< 0 when not payoff-sampled
    std::vector<TypeRecord> records;            ///< sorted by (dimension, key)
    std::vector<int> unresolved_patterns;       ///< classify runs only

    std::int64_t num_types() const { return static_cast<std::int64_t>(records.size()); }
    std::vector<int> dimensions() const;  ///< distinct dimensions, ascending
};

/// Find Y in the correlated equilibrium space with sign(f_i(Y)) as
/// prescribed for every boundary component f_i, by seeded rejection
/// sampling over the free coordinates; nullopt when the budget runs out.
/// (2 x 3) shapes only; throws std::invalid_argument on a zero sign.
std::optional<DifferenceVector> realize_sign_pattern(const SignPattern& pattern,
                                                     const GameShape& shape, int budget,
                                                     std::uint64_t seed);

/// Iterate all 2^12 sign patterns for (2 x 3); realized patterns contribute
/// the combinatorial type of their witness polytope.
CensusTable enumerate_sign_patterns_2x3(int budget_per_pattern, std::uint64_t seed,
                                        int jobs = 0);

/// Draw `count` games with integer payoffs uniform in [-range, range] and
/// aggregate polytope types per dimension.
CensusTable sample_census(const GameShape& shape, std::int64_t count, std::uint64_t seed,
                          std::int64_t payoff_range = 100, int jobs = 0);

struct ProbeMatch {
    std::string key_hex;
    int dimension = 0;
    std::int64_t count = 0;
    int matched_smaller_n = 0;  ///< the k with an equivalent maximal (2 x k) type
};

/// Result of the smaller-game equivalence probe for (2 x n).
struct ProbeReport {
    int n = 0;
    std::uint64_t seed = 0;
    std::int64_t count = 0;
    std::int64_t payoff_range = 0;
    CensusTable census;                    ///< the (2 x n) sample census
    std::vector<ProbeMatch> matches;       ///< non-maximal non-point types found
    std::vector<TypeRecord> counterexamples;  ///< types matching no smaller shape
};

/// Sample (2 x k) shapes for k < n to build the library of maximal types,
/// then check every non-maximal non-point (2 x n) type against it.
ProbeReport conjecture_probe_2xn(int n, std::int64_t count, std::uint64_t seed,
                                 std::int64_t payoff_range = 100, int jobs = 0);

/// Re-run a record's representative through the pipeline and check that it
/// reproduces the recorded type key.
bool verify_representative(const TypeRecord& record);

std::string census_to_csv(const CensusTable& table);
std::string census_to_json(const CensusTable& table);
std::string probe_to_json(const ProbeReport& report);

/// Deterministic work distribution helper used by the census runs.
void parallel_for(std::int64_t count, int jobs, const std::function<void(std::int64_t)>& fn);

}  // namespace cep

#endif  // CEP_CLASSIFY_HPP

#include "cep/classify.hpp"

#include "cep/rng.hpp"
#include "cep/strata.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <exception>
#include <map>
#include <mutex>
#include <thread>

namespace cep {

using nlohmann::json;

std::vector<int> CensusTable::dimensions() const
{
    std::vector<int> dims;
    for (const TypeRecord& r : records)
        if (dims.empty() || dims.back() != r.dimension)
            dims.push_back(r.dimension);
    return dims;
}

void parallel_for(std::int64_t count, int jobs, const std::function<void(std::int64_t)>& fn)
{
    if (jobs <= 0)
        jobs = static_cast<int>(std::thread::hardware_concurrency());
    jobs = static_cast<int>(std::max<std::int64_t>(1, std::min<std::int64_t>(jobs, count)));
    if (jobs == 1) {
        for (std::int64_t i = 0; i < count; ++i)
            fn(i);
        return;
    }

    std::atomic<std::int64_t> cursor{0};
    std::exception_ptr failure;
    std::mutex failure_mutex;
    std::vector<std::thread> pool;
    for (int t = 0; t < jobs; ++t) {
        pool.emplace_back([&]() {
            while (true) {
                const std::int64_t i = cursor.fetch_add(1);
                if (i >= count)
                    return;
                try {
                    fn(i);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(failure_mutex);
                    if (!failure)
                        failure = std::current_exception();
                    return;
                }
            }
        });
    }
    for (std::thread& t : pool)
        t.join();
    if (failure)
        std::rethrow_exception(failure);
}

namespace {

struct SampleResult {
    bool realized = false;
    int dimension = 0;
    std::string key;
    std::vector<std::int64_t> f_vector;
    std::int64_t num_vertices = 0;
    std::string representative;
};

SampleResult classify_report(const PolytopeReport& report, std::string representative)
{
    SampleResult out;
    out.realized = true;
    out.dimension = report.dimension;
    out.key = report.type.canonical_key;
    out.f_vector = report.f_vector;
    out.num_vertices = static_cast<std::int64_t>(report.vertices.size());
    out.representative = std::move(representative);
    return out;
}

std::string y_to_json(const DifferenceVector& y)
{
    json doc;
    doc["shape"] = y.shape().strategy_counts();
    json values = json::array();
    for (const Rational& r : y.entries())
        values.push_back(to_string(r));
    doc["y"] = values;
    return doc.dump();
}

std::string key_to_hex(const std::string& key)
{
    static const char* digits = "0123456789abcdef";
    std::string out;
    out.reserve(key.size() * 2);
    for (unsigned char c : key) {
        out.push_back(digits[c >> 4]);
        out.push_back(digits[c & 0xf]);
    }
    return out;
}

/// Reduce per-task results (in task order) into sorted records.
CensusTable reduce_results(GameShape shape, std::uint64_t seed, std::int64_t samples,
                           std::int64_t payoff_range, const std::vector<SampleResult>& slots)
{
    std::map<std::pair<int, std::string>, TypeRecord> acc;
    for (const SampleResult& slot : slots) {
        if (!slot.realized)
            continue;
        auto [it, fresh] = acc.try_emplace({slot.dimension, slot.key});
        TypeRecord& rec = it->second;
        if (fresh) {
            rec.dimension = slot.dimension;
            rec.key = slot.key;
            rec.key_hex = key_to_hex(slot.key);
            rec.f_vector = slot.f_vector;
            rec.num_vertices = slot.num_vertices;
            rec.representative = slot.representative;
        }
        ++rec.count;
    }

    CensusTable table{std::move(shape), seed, samples, payoff_range, {}, {}};
    for (auto& [key, rec] : acc)
        table.records.push_back(std::move(rec));
    return table;
}

const std::vector<Polynomial>& components_2x3()
{
    static const std::vector<Polynomial> components =
        irreducible_components(GameShape({2, 3}));
    return components;
}

}  // namespace

std::optional<DifferenceVector> realize_sign_pattern(const SignPattern& pattern,
                                                     const GameShape& shape, int budget,
                                                     std::uint64_t seed)
{
    if (shape.strategy_counts() != std::vector<int>{2, 3})
        throw std::invalid_argument("sign-pattern realization supports (2 x 3) only");
    if (budget < 1)
        throw std::invalid_argument("budget must be positive");
    const std::vector<Polynomial>& components = components_2x3();
    if (pattern.signs.size() != components.size())
        throw std::invalid_argument("pattern length must match the component count");
    for (int s : pattern.signs)
        if (s != 1 && s != -1)
            throw std::invalid_argument("pattern entries must be +1 or -1");

    // Free coordinates of the correlated equilibrium space: all three
    // first-player entries, and (1,2), (2,3) per second-player row; (1,3)
    // entries are derived through the triangle relation.
    static const int kFree[] = {0, 1, 2, 3, 5, 6, 8};
    static const int kDerived[][3] = {{4, 3, 5}, {7, 6, 8}};  // (target, a, b)

    SplitRng rng(seed);
    std::vector<Rational> y(9);
    for (int attempt = 0; attempt < budget; ++attempt) {
        for (int v : kFree) {
            const Rational magnitude(rng.uniform_int(1, 20), rng.uniform_int(1, 5));
            y[static_cast<std::size_t>(v)] = pattern.signs[static_cast<std::size_t>(v)] * magnitude;
        }
        bool ok = true;
        for (const auto& [target, a, b] : kDerived) {
            y[static_cast<std::size_t>(target)] =
                y[static_cast<std::size_t>(a)] + y[static_cast<std::size_t>(b)];
            const int sign = pattern.signs[static_cast<std::size_t>(target)];
            if (sign * y[static_cast<std::size_t>(target)] <= 0) {
                ok = false;
                break;
            }
        }
        for (std::size_t c = 9; ok && c < components.size(); ++c)
            ok = pattern.signs[c] * components[c].evaluate(y) > 0;
        if (ok)
            return DifferenceVector(shape, y);
    }
    return std::nullopt;
}

CensusTable enumerate_sign_patterns_2x3(int budget_per_pattern, std::uint64_t seed, int jobs)
{
    const GameShape shape({2, 3});
    const std::size_t num_components = components_2x3().size();
    const std::int64_t num_patterns = std::int64_t(1) << num_components;

    std::vector<SampleResult> slots(static_cast<std::size_t>(num_patterns));
    std::vector<char> unresolved(static_cast<std::size_t>(num_patterns), 0);

    parallel_for(num_patterns, jobs, [&](std::int64_t idx) {
        SignPattern pattern;
        pattern.signs.resize(num_components);
        for (std::size_t b = 0; b < num_components; ++b)
            pattern.signs[b] = (idx >> b) & 1 ? 1 : -1;
        const std::uint64_t pattern_seed = SplitRng(seed, static_cast<std::uint64_t>(idx)).next();
        auto witness = realize_sign_pattern(pattern, shape, budget_per_pattern, pattern_seed);
        if (!witness) {
            unresolved[static_cast<std::size_t>(idx)] = 1;
            return;
        }
        slots[static_cast<std::size_t>(idx)] =
            classify_report(polytope_of_differences(*witness), y_to_json(*witness));
    });

    CensusTable table = reduce_results(shape, seed, num_patterns, 0, slots);
    for (std::int64_t idx = 0; idx < num_patterns; ++idx)
        if (unresolved[static_cast<std::size_t>(idx)])
            table.unresolved_patterns.push_back(static_cast<int>(idx));
    return table;
}

CensusTable sample_census(const GameShape& shape, std::int64_t count, std::uint64_t seed,
                          std::int64_t payoff_range, int jobs)
{
    if (count < 1)
        throw std::invalid_argument("sample count must be positive");
    std::vector<SampleResult> slots(static_cast<std::size_t>(count));
    parallel_for(count, jobs, [&](std::int64_t idx) {
        SplitRng rng(seed, static_cast<std::uint64_t>(idx));
        const Game game = random_game(shape, payoff_range, rng);
        slots[static_cast<std::size_t>(idx)] =
            classify_report(correlated_polytope(game), game_to_json(game));
    });
    return reduce_results(shape, seed, count, payoff_range, slots);
}

ProbeReport conjecture_probe_2xn(int n, std::int64_t count, std::uint64_t seed,
                                 std::int64_t payoff_range, int jobs)
{
    if (n < 2 || n > 5)
        throw std::invalid_argument("probe supports 2 <= n <= 5");

    // library: maximal types of every smaller (2 x k)
    std::map<std::string, int> maximal_library;  // key -> k
    for (int k = 2; k < n; ++k) {
        const std::uint64_t sub_seed = SplitRng(seed, 1000 + static_cast<std::uint64_t>(k)).next();
        const CensusTable lib = sample_census(GameShape({2, k}), count, sub_seed,
                                              payoff_range, jobs);
        for (const TypeRecord& rec : lib.records)
            if (rec.dimension == 2 * k - 1)
                maximal_library.emplace(rec.key, k);
    }

    ProbeReport report{n,
                       seed,
                       count,
                       payoff_range,
                       sample_census(GameShape({2, n}), count, seed, payoff_range, jobs),
                       {},
                       {}};
    if (n == 2)
        return report;  // nothing smaller to compare against

    const int maximal_dim = 2 * n - 1;
    for (const TypeRecord& rec : report.census.records) {
        if (rec.dimension == 0 || rec.dimension == maximal_dim)
            continue;
        auto hit = maximal_library.find(rec.key);
        if (hit != maximal_library.end())
            report.matches.push_back(
                ProbeMatch{rec.key_hex, rec.dimension, rec.count, hit->second});
        else
            report.counterexamples.push_back(rec);
    }
    return report;
}

bool verify_representative(const TypeRecord& record)
{
    json doc = json::parse(record.representative);
    PolytopeReport report = [&]() {
        if (doc.contains("y")) {
            GameShape shape(doc["shape"].get<std::vector<int>>());
            std::vector<Rational> values;
            for (const json& v : doc["y"])
                values.push_back(*parse_rational(v.get<std::string>()));
            return polytope_of_differences(DifferenceVector(shape, std::move(values)));
        }
        return correlated_polytope(load_game(record.representative));
    }();
    return report.type.canonical_key == record.key && report.dimension == record.dimension;
}

std::string census_to_csv(const CensusTable& table)
{
    std::string out = "dimension,type_key,count\n";
    for (const TypeRecord& rec : table.records)
        out += std::to_string(rec.dimension) + "," + rec.key_hex + "," +
               std::to_string(rec.count) + "\n";
    return out;
}

namespace {

json record_to_json(const TypeRecord& rec)
{
    json item;
    item["dimension"] = rec.dimension;
    item["type_key"] = rec.key_hex;
    item["count"] = rec.count;
    item["f_vector"] = rec.f_vector;
    item["num_vertices"] = rec.num_vertices;
    item["representative"] = json::parse(rec.representative);
    return item;
}

}  // namespace

std::string census_to_json(const CensusTable& table)
{
    json doc;
    doc["shape"] = table.shape.strategy_counts();
    doc["seed"] = table.seed;
    doc["samples"] = table.samples;
    if (table.payoff_range > 0)
        doc["payoff_range"] = table.payoff_range;
    json types = json::array();
    for (const TypeRecord& rec : table.records)
        types.push_back(record_to_json(rec));
    doc["types"] = types;
    if (!table.unresolved_patterns.empty())
        doc["unresolved_patterns"] = table.unresolved_patterns;
    return doc.dump(2);
}

std::string probe_to_json(const ProbeReport& report)
{
    json doc;
    doc["n"] = report.n;
    doc["seed"] = report.seed;
    doc["count"] = report.count;
    doc["payoff_range"] = report.payoff_range;
    json matches = json::array();
    for (const ProbeMatch& m : report.matches) {
        json item;
        item["type_key"] = m.key_hex;
        item["dimension"] = m.dimension;
        item["count"] = m.count;
        item["matched_shape"] = "2x" + std::to_string(m.matched_smaller_n);
        matches.push_back(item);
    }
    doc["matches"] = matches;
    json counterexamples = json::array();
    for (const TypeRecord& rec : report.counterexamples)
        counterexamples.push_back(record_to_json(rec));
    doc["counterexamples"] = counterexamples;
    json dims = json::array();
    for (const TypeRecord& rec : report.census.records) {
        json item;
        item["dimension"] = rec.dimension;
        item["type_key"] = rec.key_hex;
        item["count"] = rec.count;
        dims.push_back(item);
    }
    doc["observed_types"] = dims;
    return doc.dump(2);
}

}  // namespace cep

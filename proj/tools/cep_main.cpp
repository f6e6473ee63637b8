// Command-line interface: polytope reports, strata dumps, sign-pattern
// classification, sampling censuses and the conjecture probe.
//
// Exit codes: 0 success, 2 malformed input document, 3 internal invariant
// violation (--verify mismatch), 4 unsupported shape or cap exceeded.

#include "cep/classify.hpp"
#include "cep/equilibria.hpp"
#include "cep/strata.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>

namespace {

constexpr int kExitOk = 0;
constexpr int kExitParse = 2;
constexpr int kExitInvariant = 3;
constexpr int kExitUnsupported = 4;

void write_output(const std::string& path, const std::string& content)
{
    if (path.empty()) {
        std::cout << content;
        if (!content.empty() && content.back() != '\n')
            std::cout << '\n';
        return;
    }
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot write " + path);
    out << content;
}

bool census_shape_allowed(const cep::GameShape& shape, bool allow_large)
{
    if (allow_large)
        return true;
    const std::vector<int>& d = shape.strategy_counts();
    if (d == std::vector<int>{2, 2, 2})
        return true;
    return d.size() == 2 && d[0] == 2 && d[1] <= 5;
}

int run_polytope(const std::string& in_path, const std::string& out_path, bool verify)
{
    cep::Game game = cep::load_game_file(in_path);
    cep::PolytopeReport report = cep::correlated_polytope(game);

    if (verify) {
        if (game.shape().dims().D > 8) {
            std::cerr << "--verify supports ambient dimension at most 8\n";
            return kExitUnsupported;
        }
        const cep::ConeMatrix cone = cep::build_constraint_matrix(cep::payoff_differences(game));
        const cep::HRep h{cone.matrix};
        const cep::VRep oracle = cep::brute_force_vertices(h);
        if (!cep::set_equal(report.vertices, oracle)) {
            std::cerr << "vertex enumeration disagrees with the brute-force oracle\n";
            return kExitInvariant;
        }
    }

    write_output(out_path, cep::report_to_json(report));
    return kExitOk;
}

int run_strata(const cep::GameShape& shape, const std::string& out_path, bool allow_large)
{
    const int ambient_cap = allow_large ? 12 : 8;
    const int component_cap = allow_large ? 6 : 5;
    if (shape.dims().D > ambient_cap) {
        std::cerr << "shape " << shape.to_string() << " exceeds the strata cap\n";
        return kExitUnsupported;
    }

    const cep::SymbolicMatrix sym = cep::symbolic_constraint_matrix(shape);
    const cep::MinorStatistics stats = cep::minor_statistics(sym, ambient_cap);

    nlohmann::json doc;
    doc["shape"] = shape.strategy_counts();
    doc["minors"] = {{"total", stats.total},
                     {"zero", stats.zero},
                     {"nonzero", stats.nonzero},
                     {"max_degree", stats.max_degree}};

    const bool two_by_n = shape.num_players() == 2 && shape.strategies(0) == 2 &&
                          shape.strategies(1) <= component_cap;
    doc["components_available"] = two_by_n;
    if (two_by_n) {
        const std::vector<cep::Polynomial> components =
            cep::irreducible_components(shape, component_cap);
        const std::vector<std::string> names = cep::variable_names(shape);
        nlohmann::json list = nlohmann::json::array();
        for (const cep::Polynomial& c : components) {
            nlohmann::json item;
            item["polynomial"] = c.to_string(names);
            nlohmann::json terms = nlohmann::json::array();
            for (const cep::Polynomial::Term& t : c.terms()) {
                nlohmann::json term;
                term["exponents"] = t.exponents;
                term["coeff"] = static_cast<std::int64_t>(t.coefficient);
                terms.push_back(term);
            }
            item["terms"] = terms;
            list.push_back(item);
        }
        doc["components"] = list;
        doc["variables"] = names;
    }
    write_output(out_path, doc.dump(2));
    return kExitOk;
}

int write_census(const cep::CensusTable& table, const std::string& out_prefix,
                 const std::string& format)
{
    if (out_prefix.empty()) {
        write_output("", format == "json" ? cep::census_to_json(table)
                                          : cep::census_to_csv(table));
        return kExitOk;
    }
    write_output(out_prefix + ".csv", cep::census_to_csv(table));
    write_output(out_prefix + ".json", cep::census_to_json(table));
    return kExitOk;
}

}  // namespace

int main(int argc, char** argv)
{
    CLI::App app{"correlated equilibrium polytopes: exact computation and census"};
    app.require_subcommand(1);

    std::string in_path, out_path, shape_text, format = "csv";
    std::uint64_t seed = 0;
    std::int64_t count = 1000, payoff_range = 100;
    int budget = 50000, jobs = 0, probe_n = 3;
    bool verify = false, allow_large = false;

    CLI::App* polytope = app.add_subcommand("polytope", "polytope report for a game document");
    polytope->add_option("--in", in_path, "game JSON document")->required();
    polytope->add_option("--out", out_path, "output path (default stdout)");
    polytope->add_flag("--verify", verify, "cross-check against the brute-force oracle");

    CLI::App* strata = app.add_subcommand("strata", "maximal minor counts and components");
    strata->add_option("--shape", shape_text, "game shape, e.g. 2x3 or 2x2x2")->required();
    strata->add_option("--out", out_path, "output path (default stdout)");
    strata->add_flag("--allow-large", allow_large, "lift the default shape caps");

    CLI::App* classify = app.add_subcommand("classify", "sign-pattern type enumeration (2x3)");
    classify->add_option("--shape", shape_text, "game shape (2x3)")->required();
    classify->add_option("--seed", seed, "RNG seed (default 0)");
    classify->add_option("--budget", budget, "attempts per sign pattern")
        ->check(CLI::PositiveNumber);
    classify->add_option("--jobs", jobs, "worker threads (default: all cores)")
        ->check(CLI::NonNegativeNumber);
    classify->add_option("--out", out_path, "output prefix (.csv and .json)");
    classify->add_option("--format", format, "stdout format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));

    CLI::App* sample = app.add_subcommand("sample", "random-game census for a shape");
    sample->add_option("--shape", shape_text, "game shape, e.g. 2x2")->required();
    sample->add_option("--count", count, "number of sampled games")
        ->check(CLI::PositiveNumber);
    sample->add_option("--seed", seed, "RNG seed (default 0)");
    sample->add_option("--range", payoff_range, "payoffs drawn from [-range, range]")
        ->check(CLI::PositiveNumber);
    sample->add_option("--jobs", jobs, "worker threads (default: all cores)")
        ->check(CLI::NonNegativeNumber);
    sample->add_option("--out", out_path, "output prefix (.csv and .json)");
    sample->add_option("--format", format, "stdout format: csv|json")
        ->check(CLI::IsMember({"csv", "json"}));
    sample->add_flag("--allow-large", allow_large, "lift the default shape caps");

    CLI::App* probe = app.add_subcommand("probe", "smaller-game equivalence probe for 2xn");
    probe->add_option("--n", probe_n, "second player strategy count (2..5)");
    probe->add_option("--shape", shape_text, "alternative to --n, e.g. 2x4");
    probe->add_option("--count", count, "number of sampled games per shape")
        ->check(CLI::PositiveNumber);
    probe->add_option("--seed", seed, "RNG seed (default 0)");
    probe->add_option("--range", payoff_range, "payoffs drawn from [-range, range]")
        ->check(CLI::PositiveNumber);
    probe->add_option("--jobs", jobs, "worker threads (default: all cores)")
        ->check(CLI::NonNegativeNumber);
    probe->add_option("--out", out_path, "output path (default stdout)");

    CLI11_PARSE(app, argc, argv);

    try {
        if (polytope->parsed())
            return run_polytope(in_path, out_path, verify);

        if (strata->parsed())
            return run_strata(cep::GameShape::parse(shape_text), out_path, allow_large);

        if (classify->parsed()) {
            const cep::GameShape shape = cep::GameShape::parse(shape_text);
            if (shape.strategy_counts() != std::vector<int>{2, 3}) {
                std::cerr << "classify supports shape 2x3\n";
                return kExitUnsupported;
            }
            return write_census(cep::enumerate_sign_patterns_2x3(budget, seed, jobs),
                                out_path, format);
        }

        if (sample->parsed()) {
            const cep::GameShape shape = cep::GameShape::parse(shape_text);
            if (!census_shape_allowed(shape, allow_large)) {
                std::cerr << "shape " << shape.to_string()
                          << " exceeds the census caps (use --allow-large)\n";
                return kExitUnsupported;
            }
            return write_census(cep::sample_census(shape, count, seed, payoff_range, jobs),
                                out_path, format);
        }

        if (probe->parsed()) {
            int n = probe_n;
            if (!shape_text.empty()) {
                const cep::GameShape shape = cep::GameShape::parse(shape_text);
                if (shape.num_players() != 2 || shape.strategies(0) != 2) {
                    std::cerr << "probe supports (2 x n) shapes\n";
                    return kExitUnsupported;
                }
                n = shape.strategies(1);
            }
            if (n < 2 || n > 5) {
                std::cerr << "probe supports 2 <= n <= 5\n";
                return kExitUnsupported;
            }
            write_output(out_path, cep::probe_to_json(
                                       cep::conjecture_probe_2xn(n, count, seed, payoff_range, jobs)));
            return kExitOk;
        }
    } catch (const cep::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitParse;
    } catch (const cep::FactorizationError& e) {
        std::cerr << "invariant violation: " << e.what() << "\n";
        return kExitInvariant;
    } catch (const std::invalid_argument& e) {
        std::cerr << "unsupported: " << e.what() << "\n";
        return kExitUnsupported;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return kExitOk;
}

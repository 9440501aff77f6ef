#include "toric/cli.hpp"

#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "toric/cohomology.hpp"
#include "toric/report.hpp"
#include "toric/schouten.hpp"

namespace toric {

namespace {

PoissonStructure resolve_poisson(const std::string& source, int n, unsigned long long seed) {
    if (source == "std") return standard_structure(n);
    if (source == "zero") return PoissonStructure(n);
    if (source == "random") return random_structure(n, seed);
    try {
        if (!source.empty() && source.front() == '@') {
            std::ifstream in(source.substr(1));
            if (!in) throw UsageError("cannot open poisson file " + source.substr(1));
            nlohmann::json j;
            in >> j;
            return poisson_from_json(j, n);
        }
        if (!source.empty() && (source.front() == '[' || source.front() == '{'))
            return poisson_from_json(nlohmann::json::parse(source), n);
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(std::string("invalid poisson structure: ") + e.what());
    }
    throw UsageError("unknown poisson source '" + source +
                     "' (expected std, zero, random, inline JSON or @file)");
}

}  // namespace

RunConfig parse_args(const std::vector<std::string>& args) {
    CLI::App app{"Poisson cohomology of toric structures on CP^n and C^n"};
    std::string space_name = "cpn";
    int dim = 0;
    std::string poisson = "std";
    int k = -1;
    std::string mode = "closed";
    std::int64_t degree_bound = -1;
    std::string format = "table";
    bool with_basis = false;
    unsigned long long seed = 1;
    std::string verify;

    app.add_option("--space", space_name, "ambient space")
        ->check(CLI::IsMember({"cpn", "cn"}));
    app.add_option("--dim", dim, "torus dimension n");
    app.add_option("--poisson", poisson, "std | zero | random | inline JSON | @file");
    app.add_option("--k", k, "maximal cohomology degree (default n)");
    app.add_option("--mode", mode, "closed | oracle | both")
        ->check(CLI::IsMember({"closed", "oracle", "both"}));
    app.add_option("--degree-bound", degree_bound, "affine weight exploration bound");
    app.add_option("--format", format, "table | json")->check(CLI::IsMember({"table", "json"}));
    app.add_flag("--basis", with_basis, "emit explicit basis monomials");
    app.add_option("--seed", seed, "seed for the random preset");
    app.add_option("--verify-report", verify, "re-canonicalize a JSON report file");

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        throw UsageError(e.what());
    }

    RunConfig config;
    if (!verify.empty()) {
        config.verify_report = verify;
        config.format = format == "json" ? RunConfig::Format::json : RunConfig::Format::table;
        return config;
    }

    if (dim < 1) throw UsageError("--dim must be a positive integer");
    if (dim > 8)
        throw UsageError("--dim is capped at 8: weight enumeration is exhaustive "
                         "(box search over [-1,n]^n resp. 2^n patterns)");
    config.space = space_name == "cpn" ? Space::cpn(dim) : Space::cn(dim);
    config.k_max = k < 0 ? dim : k;
    config.seed = seed;
    config.poisson_source = poisson;
    config.pi = resolve_poisson(poisson, dim, seed);
    if (mode == "closed")
        config.mode = RunConfig::Mode::closed;
    else if (mode == "oracle")
        config.mode = RunConfig::Mode::oracle;
    else
        config.mode = RunConfig::Mode::both;
    if (degree_bound >= 0) config.degree_bound = degree_bound;
    config.format = format == "json" ? RunConfig::Format::json : RunConfig::Format::table;
    config.with_basis = with_basis;

    if (!config.space.projective() && !config.degree_bound) {
        if (config.pi.is_zero())
            throw UsageError(
                "affine zero structure has infinite weight families at every degree; "
                "pass --degree-bound");
        if (config.mode != RunConfig::Mode::closed)
            throw UsageError("the affine oracle explores weights up to a bound; "
                             "pass --degree-bound");
    }
    return config;
}

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
    try {
        if (config.verify_report) {
            std::ifstream in(*config.verify_report);
            if (!in) throw UsageError("cannot open report file " + *config.verify_report);
            nlohmann::json j;
            in >> j;
            CohomologyReport report = report_from_json(j);
            if (config.format == RunConfig::Format::json)
                out << report_to_json(report).dump(2) << "\n";
            else
                out << report_to_table(report);
            return 0;
        }

        std::optional<CohomologyReport> engine, oracle;
        if (config.mode != RunConfig::Mode::oracle)
            engine = cohomology(config.space, config.pi, config.k_max, config.degree_bound,
                                config.with_basis);
        if (config.mode != RunConfig::Mode::closed)
            oracle = cohomology_oracle(config.space, config.pi, config.k_max,
                                       config.degree_bound);

        int code = 0;
        if (engine && oracle) {
            Diff diff = compare(*engine, *oracle);
            if (!diff.empty()) {
                err << "engine/oracle disagreement:\n";
                for (const auto& item : diff.items) err << "  " << item << "\n";
                code = 2;
            }
        }

        const CohomologyReport& primary = engine ? *engine : *oracle;
        if (config.format == RunConfig::Format::json)
            out << report_to_json(primary).dump(2) << "\n";
        else
            out << report_to_table(primary);
        return code;
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const MissingDegreeBound& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 1;
    }
}

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    try {
        return run(parse_args(args), out, err);
    } catch (const UsageError& e) {
        err << "usage error: " << e.what() << "\n";
        return 1;
    }
}

}  // namespace toric

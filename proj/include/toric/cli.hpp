#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "toric/toric_model.hpp"

namespace toric {

struct UsageError : std::runtime_error {
    explicit UsageError(const std::string& what) : std::runtime_error(what) {}
};

struct RunConfig {
    Space space{SpaceKind::projective, 2};
    PoissonStructure pi{2};
    std::string poisson_source = "std";
    int k_max = 2;
    enum class Mode { closed, oracle, both } mode = Mode::closed;
    std::optional<std::int64_t> degree_bound;
    enum class Format { table, json } format = Format::table;
    bool with_basis = false;
    unsigned long long seed = 1;
    std::optional<std::string> verify_report;
};

/// Parses and validates CLI arguments (without the program name). Rejects,
/// with a clear message, affine requests that are already known to hit
/// infinite families without a degree bound (the zero structure, and any
/// oracle run). Throws UsageError; exit code 1.
RunConfig parse_args(const std::vector<std::string>& args);

/// Exit codes: 0 success/agreement, 1 usage error, 2 engine/oracle
/// disagreement. Output is byte-deterministic for a given config.
int run(const RunConfig& config, std::ostream& out, std::ostream& err);

int cli_main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace toric

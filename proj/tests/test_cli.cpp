#include <catch2/catch_amalgamated.hpp>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "toric/cli.hpp"
#include "toric/cohomology.hpp"
#include "toric/report.hpp"
#include "toric/schouten.hpp"

using namespace toric;

namespace {

struct RunResult {
    int code;
    std::string out;
    std::string err;
};

RunResult run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    int code = cli_main(args, out, err);
    return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_args basics") {
    RunConfig c = parse_args({"--space", "cpn", "--dim", "2", "--poisson", "std", "--k", "2"});
    CHECK(c.space == Space::cpn(2));
    CHECK(c.pi == standard_structure(2));
    CHECK(c.k_max == 2);
    CHECK(c.mode == RunConfig::Mode::closed);
    CHECK(c.format == RunConfig::Format::table);

    RunConfig d = parse_args({"--space", "cn", "--dim", "3", "--poisson", "std",
                              "--degree-bound", "5", "--mode", "both", "--format", "json"});
    CHECK(d.space == Space::cn(3));
    CHECK(d.degree_bound == 5);
    CHECK(d.mode == RunConfig::Mode::both);
}

TEST_CASE("inline poisson JSON with antisymmetric completion") {
    RunConfig c = parse_args({"--space", "cpn", "--dim", "2", "--poisson",
                              "[{\"i\":1,\"j\":2,\"a\":\"1-i\"}]"});
    CHECK(c.pi.at(1, 2) == Scalar(Rational(1), Rational(-1)));
    CHECK(c.pi.at(2, 1) == Scalar(Rational(-1), Rational(1)));
}

TEST_CASE("parse errors") {
    CHECK_THROWS_AS(parse_args({"--space", "cn", "--dim", "2", "--poisson", "zero"}),
                    UsageError);
    CHECK_THROWS_AS(parse_args({"--space", "cn", "--dim", "2", "--poisson", "std",
                                "--mode", "oracle"}),
                    UsageError);
    CHECK_THROWS_AS(parse_args({"--space", "cpn", "--poisson", "std"}), UsageError);  // no dim
    CHECK_THROWS_AS(parse_args({"--space", "cpn", "--dim", "9", "--poisson", "std"}),
                    UsageError);
    CHECK_THROWS_AS(parse_args({"--space", "cpn", "--dim", "2", "--poisson", "bogus"}),
                    UsageError);
    CHECK_THROWS_AS(parse_args({"--space", "cpn", "--dim", "2", "--poisson",
                                "[{\"i\":1,\"j\":1,\"a\":\"1\"}]"}),
                    UsageError);
    CHECK_THROWS_AS(parse_args({"--space", "cpn", "--dim", "2", "--poisson",
                                "[{\"i\":1,\"j\":2,\"a\":\"1.5\"}]"}),
                    UsageError);
    CHECK_THROWS_AS(parse_args({"--unknown-flag"}), UsageError);
}

TEST_CASE("run exit codes and dims") {
    RunResult both = run_cli({"--space", "cpn", "--dim", "2", "--poisson", "std", "--k", "2",
                              "--mode", "both"});
    CHECK(both.code == 0);
    CHECK(both.out.find("k=0  dim 1") != std::string::npos);
    CHECK(both.out.find("k=1  dim 2") != std::string::npos);
    CHECK(both.out.find("k=2  dim 4") != std::string::npos);

    RunResult usage = run_cli({"--space", "cn", "--dim", "2", "--poisson", "zero"});
    CHECK(usage.code == 1);
    CHECK(usage.err.find("degree-bound") != std::string::npos);
}

TEST_CASE("affine run with bound and exit 0") {
    RunResult r = run_cli({"--space", "cn", "--dim", "2", "--poisson",
                           "[{\"i\":1,\"j\":2,\"a\":\"1\"}]", "--mode", "both",
                           "--degree-bound", "6"});
    CHECK(r.code == 0);
    CHECK(r.out.find("k=0  dim 1") != std::string::npos);
    CHECK(r.out.find("k=1  dim 2") != std::string::npos);
    CHECK(r.out.find("k=2  dim 2") != std::string::npos);
}

TEST_CASE("random preset is deterministic in the seed") {
    auto a = run_cli({"--space", "cpn", "--dim", "2", "--poisson", "random", "--seed", "7"});
    auto b = run_cli({"--space", "cpn", "--dim", "2", "--poisson", "random", "--seed", "7"});
    auto c = run_cli({"--space", "cpn", "--dim", "2", "--poisson", "random", "--seed", "8"});
    CHECK(a.out == b.out);
    CHECK(a.out != c.out);
}

TEST_CASE("json report round trip through --verify-report") {
    RunResult first = run_cli({"--space", "cpn", "--dim", "3", "--poisson", "std", "--basis",
                               "--format", "json"});
    REQUIRE(first.code == 0);

    std::string path = "cli_roundtrip_report.json";
    {
        std::ofstream f(path);
        f << first.out;
    }
    RunResult second = run_cli({"--verify-report", path, "--format", "json"});
    CHECK(second.code == 0);
    CHECK(second.out == first.out);

    RunResult table1 = run_cli({"--space", "cpn", "--dim", "3", "--poisson", "std", "--basis"});
    RunResult table2 = run_cli({"--verify-report", path});
    CHECK(table2.out == table1.out);
    std::remove(path.c_str());
}

TEST_CASE("basis printing uses the homogeneous monomial notation") {
    RunResult r = run_cli({"--space", "cpn", "--dim", "2", "--poisson", "std", "--basis"});
    CHECK(r.out.find("z0^-1 z1^-1 z2^2 · v1^v2") != std::string::npos);
    CHECK(r.out.find("v1^v2") != std::string::npos);

    RunResult a = run_cli({"--space", "cn", "--dim", "2", "--poisson",
                           "[{\"i\":1,\"j\":2,\"a\":\"1\"}]", "--degree-bound", "6",
                           "--basis"});
    CHECK(a.out.find("z1^-1 z2^-1 · v1^v2") != std::string::npos);

    RunResult b = run_cli({"--space", "cpn", "--dim", "3", "--poisson", "std", "--basis"});
    CHECK(b.out.find("· v0^v2") != std::string::npos);  // CP^3 H^2 frame part
    CHECK(b.out.find("· v1^v3") != std::string::npos);
}

TEST_CASE("CP^3 basis output lists the 11 degree-3 monomials") {
    RunResult r = run_cli({"--space", "cpn", "--dim", "3", "--poisson", "std", "--basis"});
    size_t count = 0, pos = 0;
    while ((pos = r.out.find("· v1^v2^v3", pos)) != std::string::npos) {
        ++count;
        ++pos;
    }
    // 10 weights with a nonconstant monomial part plus the bare v1^v2^v3
    CHECK(count == 10);
    CHECK(r.out.find("\n    v1^v2^v3\n") != std::string::npos);
    CHECK(r.out.find("z0^-1 z1^-1 z2^-1 z3^3 · v1^v2^v3") != std::string::npos);
    CHECK(r.out.find("z0^3 z1^-1 z2^-1 z3^-1 · v1^v2^v3") != std::string::npos);
}

TEST_CASE("poisson structure from a file") {
    std::string path = "cli_poisson_input.json";
    {
        std::ofstream f(path);
        f << "{\"n\":2,\"entries\":[{\"i\":1,\"j\":2,\"a\":\"2+i\"}]}";
    }
    RunConfig c = parse_args({"--space", "cn", "--dim", "2", "--poisson", "@" + path,
                              "--degree-bound", "6"});
    CHECK(c.pi.at(1, 2) == Scalar(Rational(2), Rational(1)));
    std::remove(path.c_str());

    CHECK_THROWS_AS(parse_args({"--space", "cpn", "--dim", "2", "--poisson", "@/nonexistent"}),
                    UsageError);
    // file n conflicting with --dim
    {
        std::ofstream f(path);
        f << "{\"n\":3,\"entries\":[]}";
    }
    CHECK_THROWS_AS(parse_args({"--space", "cpn", "--dim", "2", "--poisson", "@" + path}),
                    UsageError);
    std::remove(path.c_str());
}

TEST_CASE("json report carries the documented schema keys") {
    RunResult r = run_cli({"--space", "cpn", "--dim", "2", "--poisson", "std", "--format",
                           "json"});
    auto j = nlohmann::json::parse(r.out);
    CHECK(j.at("space").at("kind") == "projective");
    CHECK(j.at("space").at("n") == 2);
    REQUIRE(j.at("poisson").is_array());
    CHECK(j.at("poisson")[0].at("i") == 1);
    CHECK(j.at("poisson")[0].at("a") == "1");
    REQUIRE(j.at("H").is_array());
    CHECK(j.at("H")[0].at("k") == 0);
    CHECK(j.at("H")[0].at("dim") == 1);
    CHECK(j.at("H")[0].at("weights")[0].at("full") ==
          nlohmann::json(std::vector<int>{0, 0, 0}));
    CHECK(j.at("H")[0].at("weights")[0].at("mult") == 1);
}

TEST_CASE("both mode exits 2 exactly on a diff") {
    // a simulated disagreement: verify the plumbing via compare directly
    auto engine = cohomology(Space::cpn(2), standard_structure(2), 2);
    auto oracle = cohomology_oracle(Space::cpn(2), standard_structure(2), 2);
    CHECK(compare(engine, oracle).empty());
    oracle.H[1].dim = 99;
    CHECK_FALSE(compare(engine, oracle).empty());
}

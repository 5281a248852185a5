#include <sstream>

#include "doctest.h"
#include "powersum/cli.hpp"
#include "powersum/json_io.hpp"

using namespace powersum;

namespace {

struct CliRun {
    int code;
    std::string out;
    std::string err;
};

CliRun cli(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run_cli(args, out, err);
    return CliRun{code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("coeffs prints the row") {
    const CliRun r = cli({"coeffs", "--j", "2", "--n", "2"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 2 1\n");
}

TEST_CASE("coeffs oracle route") {
    const CliRun r = cli({"coeffs", "--j", "3", "--n", "2", "--oracle"});
    CHECK(r.code == 0);
    CHECK(r.out == "1 3 3 1\n");
}

TEST_CASE("sum with both methods reports the match") {
    const CliRun r = cli({"sum", "--k", "0", "--j", "2", "--n", "2", "--method", "both"});
    CHECK(r.code == 0);
    CHECK(r.out.find("S = 30") != std::string::npos);
    CHECK(r.out.find("S~ = 30") != std::string::npos);
    CHECK(r.out.find("match") != std::string::npos);
}

TEST_CASE("sum oracle refusal under a tight budget") {
    const CliRun r = cli({"sum", "--k", "0", "--j", "3", "--n", "3", "--method", "oracle",
                          "--budget", "10"});
    CHECK(r.code == 0);
    CHECK(r.out.find("refused") != std::string::npos);
    CHECK(r.out.find("165") != std::string::npos);
}

TEST_CASE("seq tables") {
    const CliRun genocchi = cli({"seq", "genocchi", "--upto", "12"});
    CHECK(genocchi.code == 0);
    CHECK(genocchi.out.find("G_2 = -1") != std::string::npos);
    CHECK(genocchi.out.find("G_12 = 2073") != std::string::npos);

    const CliRun g = cli({"seq", "g", "--upto", "5"});
    CHECK(g.code == 0);
    CHECK(g.out.find("g_5 = 630") != std::string::npos);

    const CliRun bern = cli({"seq", "bernoulli", "--upto", "4"});
    CHECK(bern.out.find("B_4 = -1/30") != std::string::npos);

    const CliRun tuenter = cli({"seq", "tuenter", "--upto", "3"});
    CHECK(tuenter.out.find("P_3(x) = 6*x^3 - 8*x^2 + 3*x") != std::string::npos);

    const CliRun venn = cli({"seq", "venn", "--upto", "7"});
    CHECK(venn.out.find("p=7 (prime): 1 2 3 2 1 | sum 9") != std::string::npos);
}

TEST_CASE("recover emits the polynomial") {
    const CliRun r = cli({"recover", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("P_2(t,x)") != std::string::npos);
    CHECK(r.out.find("verdict: pass") != std::string::npos);
}

TEST_CASE("verify subcommands exit zero on the verified ranges") {
    CHECK(cli({"verify", "conj1", "--kmax", "1", "--jmax", "2", "--nmax", "2"}).code == 0);
    CHECK(cli({"verify", "structure", "--k", "3"}).code == 0);
    CHECK(cli({"verify", "venn", "--k", "3"}).code == 0);
    CHECK(cli({"verify", "faulhaber", "--kmax", "5"}).code == 0);
    CHECK(cli({"verify", "conj43", "--k", "2", "--jmax", "4"}).code == 0);
}

TEST_CASE("usage errors exit 2") {
    CHECK(cli({}).code == 2);
    CHECK(cli({"nonsense"}).code == 2);
    CHECK(cli({"coeffs", "--j", "2"}).code == 2);                      // missing --n
    CHECK(cli({"coeffs", "--j", "2", "--n", "2", "--bogus"}).code == 2);
    CHECK(cli({"sum", "--k", "0", "--j", "1", "--n", "1", "--method", "guess"}).code == 2);
    const CliRun bad = cli({"verify", "conj1", "--kmax", "1", "--jmax", "0", "--nmax", "1"});
    CHECK(bad.code == 2);
    CHECK_FALSE(bad.err.empty());
}

TEST_CASE("help exits zero") {
    const CliRun r = cli({"--help"});
    CHECK(r.code == 0);
    CHECK(r.out.find("Subcommands") != std::string::npos);
}

TEST_CASE("json output is well formed and deterministic") {
    const CliRun a = cli({"verify", "all", "--kmax", "3", "--format", "json", "--parallel", "1"});
    const CliRun b = cli({"verify", "all", "--kmax", "3", "--format", "json", "--parallel", "4"});
    CHECK(a.code == 0);
    CHECK(b.code == 0);
    CHECK(a.out == b.out);

    const Json doc = Json::parse(a.out);
    CHECK(doc["tool"] == "powersum");
    CHECK(doc["version"] == std::string(kToolVersion));
    CHECK(doc["verdict"] == "pass");
    CHECK(doc["config"]["command"] == "verify all");
    CHECK(doc["config"]["kmax"] == 3);
    CHECK(doc["checks"].is_array());
    // the execution-detail parallelism must not leak into the report
    CHECK(a.out.find("parallel") == std::string::npos);
}

TEST_CASE("env variable overrides the default budget") {
    setenv("POWERSUM_BUDGET", "10", 1);
    const CliRun r = cli({"sum", "--k", "0", "--j", "3", "--n", "3", "--method", "oracle"});
    unsetenv("POWERSUM_BUDGET");
    CHECK(r.code == 0);
    CHECK(r.out.find("refused") != std::string::npos);
}

TEST_CASE("json mode for simple commands") {
    const CliRun r = cli({"coeffs", "--j", "2", "--n", "3", "--format", "json"});
    CHECK(r.code == 0);
    const Json doc = Json::parse(r.out);
    CHECK(doc["payload"]["values"] == Json::array({"1", "2", "3", "2", "1"}));
}

TEST_CASE("polynomial json encodings") {
    const UniPoly p(std::vector<ExactRational>{ExactRational(1, 2), ExactRational(0), ExactRational(3)});
    const Json pj = poly_json(p, "t");
    CHECK(pj == Json{{"var", "t"}, {"coeffs", Json::array({"1/2", "0", "3"})}});

    const RationalCoefficient rc{p, 2};
    const Json rj = rational_coefficient_json(rc);
    CHECK(rj["tExp"] == 2);
    CHECK(rj["num"] == pj);

    const Json xj = xpolynomial_json(XPolynomial({RationalCoefficient{}, rc}));
    CHECK(xj["var"] == "x");
    CHECK(xj["coeffs"].size() == 2);
    CHECK(xj["coeffs"][1] == rj);
}

TEST_CASE("recovered polynomial json embeds the x-polynomial encoding") {
    const CliRun r = cli({"recover", "--k", "2", "--format", "json"});
    REQUIRE(r.code == 0);
    const Json doc = Json::parse(r.out);
    const Json& rec = doc["payload"]["recovered"];
    CHECK(rec["k"] == 2);
    CHECK(rec["poly"]["coeffs"].size() == 3);
    CHECK(rec["poly"]["coeffs"][2]["num"]["coeffs"] == Json::array({"2"}));
    CHECK(rec["poly"]["coeffs"][1]["tExp"] == 1);
    CHECK(rec["validation"].is_array());
    CHECK_FALSE(rec["validation"].empty());
}

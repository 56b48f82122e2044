#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include <cstdio>
#include <fstream>
#include <random>
#include <sstream>

#include "pascaldet/commands.hpp"
#include "pascaldet/expr.hpp"

using namespace pascaldet;

namespace {

int run(const std::vector<std::string>& args, std::string* out_text = nullptr) {
    std::ostringstream out, err;
    const int code = run_command(args, out, err);
    if (out_text)
        *out_text = out.str();
    return code;
}

MPoly rand_poly(std::mt19937_64& rng) {
    std::uniform_int_distribution<int> nterms(0, 5);
    std::uniform_int_distribution<int> expd(0, 4);
    std::uniform_int_distribution<int> vard(0, 9);
    std::uniform_int_distribution<long> num(-9, 9);
    std::uniform_int_distribution<long> den(1, 6);
    MPoly p;
    const int k = nterms(rng);
    for (int i = 0; i < k; ++i) {
        ExpVec e{};
        e[static_cast<std::size_t>(vard(rng))] = static_cast<std::uint32_t>(expd(rng));
        e[static_cast<std::size_t>(vard(rng))] = static_cast<std::uint32_t>(expd(rng));
        p += MPoly::monomial(make_rational(num(rng), den(rng)), e);
    }
    return p;
}

} // namespace

TEST_CASE("expression parsing") {
    const MPoly rho = MPoly::variable(Var::rho), x = MPoly::variable(Var::x);
    CHECK(parse_poly("rho^2 + x*rho") == rho.pow(2) + x * rho);
    CHECK(parse_poly("(1+x)^3") == (MPoly(1) + x).pow(3));
    CHECK_THROWS_AS(parse_poly("x^(-1)"), NegativeExponent);
    CHECK_THROWS_AS(parse_poly("x^-1"), NegativeExponent);
    CHECK_THROWS_AS(parse_poly("y + 1"), UnknownVariable);
    CHECK_THROWS_AS(parse_poly("x +"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("(x"), SyntaxError);
    CHECK_THROWS_AS(parse_poly("x 1"), SyntaxError);
    CHECK(parse_poly("1/2*a") == MPoly(make_rational(1, 2)) * MPoly::variable(Var::a));
    CHECK(parse_poly("-x^2") == -(x.pow(2)));
    CHECK(parse_poly("2 - 3 - 4") == MPoly(-5));
}

TEST_CASE("parse after render is the identity") {
    std::mt19937_64 rng(0x10ad);
    for (int iter = 0; iter < 200; ++iter) {
        const MPoly p = rand_poly(rng);
        CHECK(parse_poly(p.str()) == p);
    }
}

TEST_CASE("report emission is stable single-line JSON") {
    Report r;
    r.case_id = "T1";
    r.n = 1;
    r.engine = "bareiss";
    r.status = Report::Status::pass;
    r.lhs = "1";
    r.rhs = "1";
    r.millis = 3;
    const std::string line = report_emit(r);
    CHECK(line ==
          "{\"case\":\"T1\",\"n\":1,\"engine\":\"bareiss\",\"status\":\"pass\","
          "\"lhs\":\"1\",\"rhs\":\"1\",\"millis\":3}");
    CHECK(line.find('\n') == std::string::npos);

    // a failing case still renders both polynomials fully
    r.status = Report::Status::fail;
    r.lhs = "x^2 + 2*x + 1";
    r.rhs = "x^2 + 1";
    const auto j = nlohmann::json::parse(report_emit(r));
    CHECK(j.at("status") == "fail");
    CHECK(j.at("lhs") == "x^2 + 2*x + 1");
    CHECK(j.at("rhs") == "x^2 + 1");
}

TEST_CASE("verify subcommand emits one parsable report per n") {
    std::string out;
    CHECK(run({"verify", "--theorem", "4", "--n-max", "3"}, &out) == 0);
    std::istringstream lines(out);
    std::string line;
    int count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        CHECK(j.at("case") == "T4");
        CHECK(j.at("status") == "pass");
        ++count;
        if (count == 3)
            CHECK(j.at("rhs") == "8");
    }
    CHECK(count == 3);
}

TEST_CASE("T3 report renders the expanded polynomial") {
    std::string out;
    CHECK(run({"verify", "--theorem", "3", "--n-max", "2"}, &out) == 0);
    CHECK(out.find("\"lhs\":\"x^4 + 4*x^3 + 6*x^2 + 4*x + 1\"") != std::string::npos);
}

TEST_CASE("det subcommand") {
    const char* path = "cli_det_input.json";
    {
        std::ofstream f(path);
        f << R"([["0","-1"],["1","0"]])";
    }
    std::string out;
    CHECK(run({"det", "--file", path}, &out) == 0);
    const auto j = nlohmann::json::parse(out);
    CHECK(j.at("lhs") == "1");
    CHECK(j.at("status") == "pass");
    std::remove(path);
}

TEST_CASE("det subcommand reports errors and exits 1") {
    const char* path = "cli_det_bad.json";
    {
        std::ofstream f(path);
        f << R"([["0","-1"],["1","zebra"]])";
    }
    std::string out;
    CHECK(run({"det", "--file", path}, &out) == 1);
    const auto j = nlohmann::json::parse(out);
    CHECK(j.at("status") == "error");
    std::remove(path);
    CHECK(run({"det", "--file", "no_such_file.json"}) == 1);
}

TEST_CASE("usage errors exit 2") {
    CHECK(run({"verify", "--theorem", "9", "--n-max", "1"}) == 2);
    CHECK(run({"verify"}) == 2);
    CHECK(run({"nonsense"}) == 2);
    CHECK(run({"verify", "--theorem", "1", "--n-max", "1", "--a", "3"}) == 2);
    CHECK(run({"verify", "--theorem", "2", "--n-max", "1", "--xy", "1,2"}) == 2);
    CHECK(run({"verify", "--theorem", "6", "--n-max", "1", "--xy", "12"}) == 2);
}

TEST_CASE("exit code agrees with the conjunction of report statuses") {
    std::string out;
    const int code = run({"lu", "--theorem", "4", "--n-max", "4"}, &out);
    std::istringstream lines(out);
    std::string line;
    bool all_pass = true;
    int count = 0;
    while (std::getline(lines, line)) {
        const auto j = nlohmann::json::parse(line);
        all_pass = all_pass && j.at("status") == "pass";
        ++count;
    }
    CHECK(count == 4);
    CHECK(code == (all_pass ? 0 : 1));
}

TEST_CASE("remaining subcommands run clean") {
    CHECK(run({"genfun", "--theorem", "2", "--order", "4"}) == 0);
    CHECK(run({"hyper-suite", "--samples", "5", "--seed", "7"}) == 0);
    CHECK(run({"proof-steps", "--n", "1"}) == 0);
    CHECK(run({"verify", "--theorem", "6", "--n-max", "2"}) == 0);
    CHECK(run({"verify", "--theorem", "6", "--n-max", "2", "--xy", "3,1"}) == 0);
    CHECK(run({"verify", "--theorem", "5", "--n-max", "3", "--a", "4"}) == 0);
    CHECK(run({"verify", "--theorem", "1", "--n-max", "3", "--engine", "condensation"}) == 0);
    std::string out;
    CHECK(run({"--help"}, &out) == 0);
    CHECK(out.find("verify") != std::string::npos);
}

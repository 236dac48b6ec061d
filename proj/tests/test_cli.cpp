#include "ggt/cli.hpp"
#include "ggt/error.hpp"
#include "ggt/serialize.hpp"

#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>

using ggt::cli::run;
using nlohmann::json;

namespace {

struct Outcome {
    int code = 0;
    std::string out;
    std::string err;
};

Outcome call(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

} // namespace

TEST_CASE("cli: weyl orders G2") {
    const auto r = call({"weyl", "orders", "--type", "G2", "--mode", "exact"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["results"]["maximal"] == json::array({6}));
    CHECK(j["results"]["weyl_order"] == 12);
    CHECK(j["version"] == ggt::cli::kVersion);
}

TEST_CASE("cli: metacyclic gamma_d") {
    const auto r = call({"group", "analyze", "--preset", "metacyclic", "--m", "6", "--p", "7", "--gamma-d", "6"});
    CHECK(r.code == 0);
    CHECK(json::parse(r.out)["results"]["gamma_d"]["order"] == 7);
}

TEST_CASE("cli: tame parameter q=5 p=3 n=1") {
    const auto r = call({"param", "tame", "--q", "5", "--p", "3", "--n", "1", "--json"});
    CHECK(r.code == 0);
    const auto j = json::parse(r.out);
    CHECK(j["results"]["image"]["order"] == 6);
    for (const auto& c : j["checks"])
        CHECK_MESSAGE(c["pass"].get<bool>(), c["name"].get<std::string>());
}

TEST_CASE("cli: exit codes") {
    CHECK(call({}).code == 2);
    CHECK(call({"nonsense"}).code == 2);
    CHECK(call({"weyl", "orders", "--type", "Z9"}).code == 2);
    CHECK(call({"group", "analyze", "--preset", "metacyclic", "--m", "4", "--p", "7"}).code == 2);
    CHECK(call({"weyl", "orders", "--type", "E8", "--mode", "exact"}).code == 3);
    CHECK(call({"primes", "--n", "1", "--ell", "2", "--t", "1", "--d", "1", "--ceiling", "4"}).code == 3);
    CHECK(call({"param", "tame", "--q", "7", "--p", "43", "--n", "3", "--bound", "100"}).code == 3);
    // A multiset that is not closed under inversion fails the palindromic check.
    CHECK(call({"eigs", "g2check", "--eigs", "1/7,1/7,0/1"}).code == 1);
    CHECK(call({"--help"}).code == 0);
}

TEST_CASE("cli: output is deterministic") {
    const std::vector<std::vector<std::string>> invocations = {
        {"weyl", "orders", "--type", "E6+A1", "--mode", "sampled", "--seed", "5", "--samples", "3000"},
        {"primes", "--n", "3", "--ell", "5", "--t", "3", "--d", "10"},
        {"wild", "so", "--m", "5"},
        {"param", "tame", "--q", "13", "--p", "157", "--n", "3"},
    };
    for (const auto& args : invocations) {
        const auto a = call(args);
        const auto b = call(args);
        CHECK(a.code == 0);
        CHECK(a.out == b.out);
    }
}

TEST_CASE("cli: reports round-trip") {
    for (const auto& args : std::vector<std::vector<std::string>>{
             {"orbit", "--tau", "1/7", "--q", "3"},
             {"wild", "g2"},
             {"minuscule", "--type", "G2"},
             {"eigs", "g2check", "--eigs", "1/7,-1/7,2/7,-2/7,4/7,-4/7,0/1"}}) {
        const auto r = call(args);
        REQUIRE(r.code == 0);
        const auto report = json::parse(r.out).get<ggt::cli::Report>();
        CHECK(!report.checks.empty());
        CHECK(ggt::cli::render_json(report) == r.out);
    }
}

TEST_CASE("cli: text format and --out") {
    const auto r = call({"minuscule", "--type", "C3", "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("PASS table") != std::string::npos);

    const std::string path = "ggt_cli_out_test.json";
    const auto w = call({"minuscule", "--type", "C3", "--out", path});
    CHECK(w.code == 0);
    CHECK(w.out.empty());
    std::ifstream f(path);
    const auto j = json::parse(f);
    CHECK(j["results"]["dim"] == 14);
    CHECK(j["results"]["zero_mult"] == 2);
    std::remove(path.c_str());
}

TEST_CASE("serialization round trips") {
    using namespace ggt;
    const auto cert = prime_search::find_pq({.n = 2, .ell = 3, .t = 2, .d = 5});
    CHECK(json(cert).get<prime_search::SearchCertificate>() == cert);

    const auto param = weil::build_tame_parameter_prime(7, 43, 3);
    const auto back = json(param).get<weil::TameParameter>();
    CHECK(back == param);
    CHECK(weil::check_tame_parameter(back).all());

    const auto real = weil::real_parameter({1, 2, 3});
    CHECK(json(real).get<weil::RealParameter>() == real);

    const auto os = roots::weyl_element_orders(roots::RootSystem::parse("A2+B2"), roots::Mode::Exact);
    const auto os2 = json(os).get<roots::OrderSet>();
    CHECK(os2.orders == os.orders);
    CHECK(os2.maximal == os.maximal);

    const auto orbit = frobenius_orbit(RootOfUnity(2, 9), 5);
    CHECK(json(orbit).get<FrobeniusOrbit>() == orbit);

    const auto rep = wild::verify_prop_two(wild::build_so_wild(5));
    CHECK(json(json(rep).get<wild::PropTwoReport>()) == json(rep));

    json bad = json(param);
    bad["inertia"]["perm"] = json::array({0, 1});
    bad["inertia"]["diag"] = json::array({"0/1", "0/1"});
    CHECK_THROWS_AS(bad.get<weil::TameParameter>(), ggt::DomainError);
}

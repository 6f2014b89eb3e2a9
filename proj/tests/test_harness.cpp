#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <string>

#include <nlohmann/json.hpp>

#include "qsim/harness.hpp"
#include "qsim/errors.hpp"

using namespace qsim;
using nlohmann::json;

namespace {

ErrorCode codeOf(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a qsim::Error");
    return ErrorCode::InvalidArity;
}

}  // namespace

TEST_CASE("validateConfig rejects unusable configurations") {
    RunConfig cfg;
    cfg.algo = RunConfig::Algo::Minima;
    cfg.table = {5, 3, 7, 1};

    SUBCASE("zero trials") {
        cfg.trials = 0;
        CHECK(codeOf([&] { validateConfig(cfg); }) == ErrorCode::InvalidArity);
    }
    SUBCASE("empty minima table") {
        cfg.table.clear();
        CHECK(codeOf([&] { validateConfig(cfg); }) == ErrorCode::InvalidArity);
    }
    SUBCASE("duplicate minima values") {
        cfg.table = {4, 2, 4};
        CHECK(codeOf([&] { validateConfig(cfg); }) == ErrorCode::DuplicateEntries);
    }
    SUBCASE("collision table too small") {
        cfg.algo = RunConfig::Algo::Collision;
        cfg.table = {1};
        cfg.modulus = 2;
        CHECK(codeOf([&] { validateConfig(cfg); }) == ErrorCode::InvalidCardinality);
    }
    SUBCASE("collision zero modulus") {
        cfg.algo = RunConfig::Algo::Collision;
        cfg.modulus = 0;
        CHECK(codeOf([&] { validateConfig(cfg); }) == ErrorCode::InvalidArity);
    }
    SUBCASE("unifsup M below 2") {
        cfg.algo = RunConfig::Algo::Unifsup;
        cfg.M = 1;
        CHECK(codeOf([&] { validateConfig(cfg); }) == ErrorCode::InvalidM);
    }
    SUBCASE("grover qubit count out of range") {
        cfg.algo = RunConfig::Algo::Grover;
        cfg.nQubits = 0;
        CHECK(codeOf([&] { validateConfig(cfg); }) == ErrorCode::CapacityExceeded);
    }
    SUBCASE("grover marks out of range") {
        cfg.algo = RunConfig::Algo::Grover;
        cfg.nQubits = 2;
        cfg.marks = 5;
        CHECK(codeOf([&] { validateConfig(cfg); }) == ErrorCode::InvalidMarks);
    }
    SUBCASE("grover target too wide") {
        cfg.algo = RunConfig::Algo::Grover;
        cfg.nQubits = 2;
        cfg.target = 4;
        CHECK(codeOf([&] { validateConfig(cfg); }) == ErrorCode::InvalidArity);
    }
    SUBCASE("randint zero bound") {
        cfg.algo = RunConfig::Algo::Randint;
        cfg.bound = 0;
        CHECK(codeOf([&] { validateConfig(cfg); }) == ErrorCode::InvalidArity);
    }
}

TEST_CASE("minima report over a fixed table") {
    RunConfig cfg;
    cfg.algo = RunConfig::Algo::Minima;
    cfg.table = {5, 3, 7, 1};
    cfg.seed = 42;
    cfg.trials = 200;

    const json report = runAndReport(cfg);
    CHECK(report.at("algorithm") == "minima");
    CHECK(report.at("trials") == 200);
    CHECK(report.at("results").size() == 200);
    CHECK(report.at("aggregate").at("successRate").get<double>() >= 0.9);
    for (const auto& rec : report.at("results"))
        if (rec.value("success", false)) CHECK(rec.at("outcome") == 1);
}

TEST_CASE("unifsup report dumps the amplitude vector") {
    RunConfig cfg;
    cfg.algo = RunConfig::Algo::Unifsup;
    cfg.M = 6;
    cfg.dumpAmps = true;

    const json report = runAndReport(cfg);
    const auto& rec = report.at("results").at(0);
    CHECK(rec.at("success") == true);
    const auto& amps = rec.at("amps");
    REQUIRE(amps.size() == 8);
    const double want = 1.0 / std::sqrt(6.0);
    for (int i = 0; i < 8; ++i) {
        const double re = amps.at(i).at(0).get<double>();
        const double im = amps.at(i).at(1).get<double>();
        CHECK(std::abs(re - (i < 6 ? want : 0.0)) < 1e-10);
        CHECK(std::abs(im) < 1e-12);
    }
}

TEST_CASE("grover report on a certain instance") {
    RunConfig cfg;
    cfg.algo = RunConfig::Algo::Grover;
    cfg.nQubits = 2;
    cfg.marks = 1;
    cfg.target = 3;
    cfg.trials = 10;
    cfg.seed = 5;

    const json report = runAndReport(cfg);
    CHECK(report.at("aggregate").at("successRate").get<double>() == 1.0);
    CHECK(report.at("aggregate").at("meanQueries").get<double>() == 1.0);
}

TEST_CASE("reports replay byte-identically apart from the wall clock") {
    RunConfig cfg;
    cfg.algo = RunConfig::Algo::Collision;
    cfg.table = {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12, 13, 14, 15};
    cfg.modulus = 8;
    cfg.r = 2;
    cfg.seed = 17;
    cfg.trials = 25;

    json a = runAndReport(cfg);
    json b = runAndReport(cfg);
    a.erase("ms");
    b.erase("ms");
    CHECK(a.dump() == b.dump());
}

#include "qsim/harness.hpp"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <numeric>
#include <sstream>

#include <nlohmann/json.hpp>

#include "qsim/collision.hpp"
#include "qsim/minima.hpp"
#include "qsim/unifsup.hpp"

namespace qsim {

using nlohmann::json;

const char* algoName(RunConfig::Algo algo) {
    switch (algo) {
        case RunConfig::Algo::Minima: return "minima";
        case RunConfig::Algo::Collision: return "collision";
        case RunConfig::Algo::Unifsup: return "unifsup";
        case RunConfig::Algo::Grover: return "grover";
        case RunConfig::Algo::Randint: return "randint";
    }
    return "unknown";
}

namespace {

int indexBits(std::uint64_t N) { return std::max(1, static_cast<int>(std::bit_width(N - 1))); }

std::vector<std::uint64_t> randomDistinctTable(int size, std::uint64_t seed) {
    std::mt19937_64 g(seed ^ 0x7261626c65ULL);  // decoupled from the machine stream
    std::vector<std::uint64_t> pool(static_cast<std::size_t>(size) * 4);
    std::iota(pool.begin(), pool.end(), 1);
    std::shuffle(pool.begin(), pool.end(), g);
    return {pool.begin(), pool.begin() + size};
}

json runMinimaTrial(const RunConfig& cfg, std::uint64_t trialSeed) {
    auto table = cfg.randomTableSize > 0 ? randomDistinctTable(cfg.randomTableSize, trialSeed)
                                         : cfg.table;
    const std::uint64_t trueMin = *std::min_element(table.begin(), table.end());
    Machine m(indexBits(table.size()) + 1, trialSeed);
    const MinimaResult res = durrHoyer(m, table);
    return {{"outcome", res.value},
            {"index", res.index},
            {"success", res.value == trueMin},
            {"queries", res.queries},
            {"rt", res.steps}};
}

json runCollisionTrial(const RunConfig& cfg, std::uint64_t trialSeed) {
    const std::uint64_t mod = cfg.modulus;
    CollisionInstance inst{cfg.table, [mod](std::uint64_t x) { return x % mod; }, cfg.r};
    Machine m(indexBits(cfg.table.size()) + 1, trialSeed);
    const CollisionResult res = findCollision(m, inst);
    const bool valid = res.first != res.second && res.first % mod == res.second % mod;
    return {{"collision", {res.first, res.second}},
            {"success", valid},
            {"queries", res.groverQueries},
            {"classicalEvals", res.classicalEvals},
            {"k", res.k},
            {"earlyExit", res.earlyExit}};
}

json runUnifsupTrial(const RunConfig& cfg, std::uint64_t trialSeed) {
    Machine m(std::bit_width(cfg.M - 1), trialSeed);
    prepareUniformM(m, cfg.M);
    const auto amps = m.amplitudes();
    const double want = 1.0 / std::sqrt(static_cast<double>(cfg.M));
    double maxError = 0.0;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        const double target = i < cfg.M ? want : 0.0;
        maxError = std::max(maxError, std::abs(amps[i] - Amplitude{target}));
    }
    json rec = {{"maxError", maxError}, {"success", maxError < 1e-10}, {"queries", 0}};
    if (cfg.dumpAmps) {
        json dump = json::array();
        for (const auto& a : amps) dump.push_back({a.real(), a.imag()});
        rec["amps"] = std::move(dump);
    }
    return rec;
}

json runGroverTrial(const RunConfig& cfg, std::uint64_t trialSeed) {
    Machine m(cfg.nQubits, trialSeed);
    const std::uint64_t target = cfg.target;
    const Oracle o{cfg.nQubits, [target](std::uint64_t x) { return x == target; },
                   OracleMode::Diagonal};
    const std::uint64_t outcome = grover(m, o, cfg.marks);
    return {{"outcome", outcome},
            {"success", outcome == cfg.target},
            {"queries", m.queryCount()}};
}

json runRandintTrial(const RunConfig& cfg, std::uint64_t trialSeed) {
    Machine m(cfg.bound > 1 ? std::bit_width(cfg.bound - 1) : 0, trialSeed);
    const std::uint64_t outcome = randomInt(m, cfg.bound);
    return {{"outcome", outcome}, {"success", outcome < cfg.bound}, {"queries", 0}};
}

json runTrial(const RunConfig& cfg, std::uint64_t trialSeed) {
    switch (cfg.algo) {
        case RunConfig::Algo::Minima: return runMinimaTrial(cfg, trialSeed);
        case RunConfig::Algo::Collision: return runCollisionTrial(cfg, trialSeed);
        case RunConfig::Algo::Unifsup: return runUnifsupTrial(cfg, trialSeed);
        case RunConfig::Algo::Grover: return runGroverTrial(cfg, trialSeed);
        case RunConfig::Algo::Randint: return runRandintTrial(cfg, trialSeed);
    }
    fail(ErrorCode::InvalidArity, "unknown algorithm");
}

json paramsOf(const RunConfig& cfg) {
    switch (cfg.algo) {
        case RunConfig::Algo::Minima:
            return cfg.randomTableSize > 0 ? json{{"randomTable", cfg.randomTableSize}}
                                           : json{{"table", cfg.table}};
        case RunConfig::Algo::Collision:
            return {{"table", cfg.table}, {"mod", cfg.modulus}, {"r", cfg.r}};
        case RunConfig::Algo::Unifsup:
            return {{"m", cfg.M}};
        case RunConfig::Algo::Grover:
            return {{"n", cfg.nQubits}, {"marks", cfg.marks}, {"target", cfg.target}};
        case RunConfig::Algo::Randint:
            return {{"bound", cfg.bound}};
    }
    return json::object();
}

}  // namespace

void validateConfig(const RunConfig& cfg) {
    if (cfg.trials < 1) fail(ErrorCode::InvalidArity, "trials must be at least 1");
    auto requireTableBits = [](std::uint64_t N) {
        if (N == 0) fail(ErrorCode::InvalidArity, "table is empty");
        if (indexBits(N) + 1 > Machine::kMaxQubits)
            fail(ErrorCode::CapacityExceeded, "table too large for the qubit cap");
    };
    switch (cfg.algo) {
        case RunConfig::Algo::Minima: {
            if (cfg.randomTableSize > 0) {
                requireTableBits(static_cast<std::uint64_t>(cfg.randomTableSize));
                break;
            }
            requireTableBits(cfg.table.size());
            auto sorted = cfg.table;
            std::sort(sorted.begin(), sorted.end());
            if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
                fail(ErrorCode::DuplicateEntries, "minima table values must be distinct");
            break;
        }
        case RunConfig::Algo::Collision:
            if (cfg.table.size() < 2)
                fail(ErrorCode::InvalidCardinality, "collision table needs at least 2 entries");
            requireTableBits(cfg.table.size());
            if (cfg.modulus == 0) fail(ErrorCode::InvalidArity, "modulus must be positive");
            break;
        case RunConfig::Algo::Unifsup:
            if (cfg.M < 2) fail(ErrorCode::InvalidM, "M must be at least 2");
            if (std::bit_width(cfg.M - 1) > Machine::kMaxQubits)
                fail(ErrorCode::CapacityExceeded, "M exceeds the qubit cap");
            break;
        case RunConfig::Algo::Grover:
            if (cfg.nQubits < 1 || cfg.nQubits > Machine::kMaxQubits)
                fail(ErrorCode::CapacityExceeded, "qubit count outside [1, cap]");
            if (cfg.marks < 1 || cfg.marks > (std::uint64_t{1} << cfg.nQubits))
                fail(ErrorCode::InvalidMarks, "marks outside [1, 2^n]");
            if (cfg.target >> cfg.nQubits)
                fail(ErrorCode::InvalidArity, "target does not fit in n qubits");
            break;
        case RunConfig::Algo::Randint:
            if (cfg.bound < 1) fail(ErrorCode::InvalidArity, "bound must be positive");
            if (cfg.bound > 1 && std::bit_width(cfg.bound - 1) > Machine::kMaxQubits)
                fail(ErrorCode::CapacityExceeded, "bound exceeds the qubit cap");
            break;
    }
}

json runAndReport(const RunConfig& cfg) {
    validateConfig(cfg);
    const auto start = std::chrono::steady_clock::now();

    json results = json::array();
    int successes = 0;
    double querySum = 0.0;
    for (int trial = 0; trial < cfg.trials; ++trial) {
        const std::uint64_t trialSeed = cfg.seed + static_cast<std::uint64_t>(trial);
        json rec;
        try {
            rec = runTrial(cfg, trialSeed);
        } catch (const Error& e) {
            rec = {{"error", errorName(e.code())}, {"success", false}, {"queries", 0}};
        }
        rec["trial"] = trial;
        rec["seed"] = trialSeed;
        if (rec.value("success", false)) ++successes;
        querySum += rec.value("queries", 0.0);
        results.push_back(std::move(rec));
    }

    const auto elapsed = std::chrono::duration<double, std::milli>(
                             std::chrono::steady_clock::now() - start)
                             .count();
    return {{"algorithm", algoName(cfg.algo)},
            {"seed", cfg.seed},
            {"trials", cfg.trials},
            {"params", paramsOf(cfg)},
            {"results", std::move(results)},
            {"aggregate",
             {{"successRate", static_cast<double>(successes) / cfg.trials},
              {"meanQueries", querySum / cfg.trials}}},
            {"ms", elapsed}};
}

std::string summarize(const json& report) {
    std::ostringstream out;
    out << report.at("algorithm").get<std::string>() << ": " << report.at("trials").get<int>()
        << " trial(s), seed " << report.at("seed").get<std::uint64_t>() << ", success rate "
        << report.at("aggregate").at("successRate").get<double>() << ", mean queries "
        << report.at("aggregate").at("meanQueries").get<double>();
    return out.str();
}

}  // namespace qsim

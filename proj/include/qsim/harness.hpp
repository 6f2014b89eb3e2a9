#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include <nlohmann/json_fwd.hpp>

namespace qsim {

// One CLI invocation's worth of configuration. Per-trial machines are seeded
// seed + trialIndex, so any single trial replays in isolation.
struct RunConfig {
    enum class Algo { Minima, Collision, Unifsup, Grover, Randint };

    Algo algo = Algo::Minima;
    std::uint64_t seed = 0;
    int trials = 1;

    std::vector<std::uint64_t> table;  // minima / collision
    int randomTableSize = 0;           // minima: fresh table per trial when > 0
    std::uint64_t modulus = 0;         // collision: F = x mod modulus
    std::uint64_t r = 0;               // collision: r-to-one claim
    std::uint64_t M = 0;               // unifsup
    bool dumpAmps = false;             // unifsup
    int nQubits = 0;                   // grover
    std::uint64_t marks = 1;           // grover
    std::uint64_t target = 0;          // grover
    std::uint64_t bound = 0;           // randint
};

const char* algoName(RunConfig::Algo algo);

// Validates cross-field constraints that CLI flag parsing cannot see.
// Throws qsim::Error on an unusable configuration.
void validateConfig(const RunConfig& cfg);

// Runs cfg.trials independent trials and assembles the report:
// {algorithm, seed, trials, params, results, aggregate, ms}. Per-trial
// algorithm errors are recorded as failed trials, not rethrown.
nlohmann::json runAndReport(const RunConfig& cfg);

// Human-readable one-paragraph summary of a report.
std::string summarize(const nlohmann::json& report);

}  // namespace qsim

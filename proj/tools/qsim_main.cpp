#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "qsim/errors.hpp"
#include "qsim/harness.hpp"

namespace {

std::vector<std::uint64_t> parseTable(const std::string& csv) {
    std::vector<std::uint64_t> table;
    std::stringstream in(csv);
    std::string item;
    while (std::getline(in, item, ',')) {
        if (item.empty()) throw CLI::ValidationError("--table", "empty entry in table list");
        std::size_t used = 0;
        table.push_back(std::stoull(item, &used));
        if (used != item.size())
            throw CLI::ValidationError("--table", "bad table entry '" + item + "'");
    }
    if (table.empty()) throw CLI::ValidationError("--table", "table list is empty");
    return table;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Seeded quantum algorithm harness: minima search, collision detection, "
                 "uniform superposition preparation, Grover search, quantum randint"};
    app.require_subcommand(1);

    qsim::RunConfig cfg;
    std::string tableCsv;
    bool emitJson = false;
    std::string outPath;

    app.add_option("--seed", cfg.seed, "Base RNG seed (trial i uses seed+i)")
        ->capture_default_str();
    app.add_option("--trials", cfg.trials, "Number of independent trials")
        ->check(CLI::PositiveNumber)
        ->capture_default_str();
    app.add_flag("--json", emitJson, "Emit the JSON report to stdout");
    app.add_option("--out", outPath, "Write the JSON report to a file");

    // Let --seed/--trials/--json/--out appear after the subcommand name too.
    app.fallthrough();

    auto* minima = app.add_subcommand("minima", "Unordered minimum search");
    minima->add_option("--table", tableCsv, "Comma-separated distinct values");
    minima->add_option("--random-table", cfg.randomTableSize,
                       "Fresh random distinct table of this size per trial")
        ->check(CLI::PositiveNumber);

    auto* collision = app.add_subcommand("collision", "Collision pair detection");
    collision->add_option("--table", tableCsv, "Comma-separated values")->required();
    collision->add_option("--mod", cfg.modulus, "F(x) = x mod <m>")
        ->required()
        ->check(CLI::PositiveNumber);
    collision->add_option("--r", cfg.r, "r-to-one claim (0 or 1 for arbitrary F)");

    auto* unifsup = app.add_subcommand("unifsup", "Uniform superposition over [0, M)");
    unifsup->add_option("--m", cfg.M, "Number of states M")->required();
    unifsup->add_flag("--dump-amps", cfg.dumpAmps, "Include the amplitude vector per trial");

    auto* grover = app.add_subcommand("grover", "Grover search for a single target value");
    grover->add_option("--n", cfg.nQubits, "Register width in qubits")->required();
    grover->add_option("--marks", cfg.marks, "Mark count fed to the iteration formula");
    grover->add_option("--target", cfg.target, "Marked basis value");

    auto* randint = app.add_subcommand("randint", "Quantum integer randomization");
    randint->add_option("--bound", cfg.bound, "Exclusive upper bound")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) == 0 ? 0 : 1;
    }

    try {
        if (minima->parsed()) {
            cfg.algo = qsim::RunConfig::Algo::Minima;
            if (!tableCsv.empty()) cfg.table = parseTable(tableCsv);
            if (cfg.table.empty() && cfg.randomTableSize <= 0) {
                std::cerr << "minima needs --table or --random-table\n";
                return 1;
            }
        } else if (collision->parsed()) {
            cfg.algo = qsim::RunConfig::Algo::Collision;
            cfg.table = parseTable(tableCsv);
        } else if (unifsup->parsed()) {
            cfg.algo = qsim::RunConfig::Algo::Unifsup;
        } else if (grover->parsed()) {
            cfg.algo = qsim::RunConfig::Algo::Grover;
        } else {
            cfg.algo = qsim::RunConfig::Algo::Randint;
        }
    } catch (const CLI::Error& e) {
        std::cerr << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "bad argument: " << e.what() << "\n";
        return 1;
    }

    nlohmann::json report;
    try {
        report = qsim::runAndReport(cfg);
    } catch (const qsim::Error& e) {
        std::cerr << "configuration error: " << e.what() << "\n";
        return 2;
    }

    if (!outPath.empty()) {
        std::ofstream out(outPath);
        if (!out) {
            std::cerr << "cannot write " << outPath << "\n";
            return 2;
        }
        out << report.dump(2) << "\n";
    }
    if (emitJson) {
        std::cout << report.dump() << "\n";
    } else {
        std::cout << qsim::summarize(report) << "\n";
    }
    return 0;
}

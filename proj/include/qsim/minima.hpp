#pragma once

#include <cstdint>
#include <vector>

#include "qsim/amplify.hpp"

namespace qsim {

struct MinimaResult {
    std::uint64_t value = 0;
    std::size_t index = 0;
    std::uint64_t steps = 0;    // rt: Hadamard-preparation plus Grover steps
    std::uint64_t queries = 0;  // oracle applications
    // Successive solution values, starting value included; strictly decreasing.
    std::vector<std::uint64_t> solutionTrace;
};

// Global step cap ceil(22.5*sqrt(N) + 1.4*(log2 N)^2).
std::uint64_t runtimeBudget(std::uint64_t N);

// Marks every in-range index x with table[x] <= solution; padding indices
// beyond the table are unmarked.
Oracle minimaOracle(std::uint64_t solution, const std::vector<std::uint64_t>& table);

// Staged exponential minimum search over a table of distinct values.
// Needs ceil(log2 N) + 1 qubits (one for the oracle ancilla).
MinimaResult durrHoyer(Machine& m, const std::vector<std::uint64_t>& table);

}  // namespace qsim

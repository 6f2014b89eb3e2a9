#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "qsim/amplify.hpp"

namespace qsim {

using ClassicalFn = std::function<std::uint64_t(std::uint64_t)>;

// r-to-one collision search instance; r of 0 or 1 means F is arbitrary.
struct CollisionInstance {
    std::vector<std::uint64_t> table;
    ClassicalFn F;
    std::uint64_t r = 0;
};

// Classical subset phase output: inputs[i] is a subset value, outputs[i] its
// image under F.
struct SubsetTables {
    std::vector<std::uint64_t> inputs;
    std::vector<std::uint64_t> outputs;
};

struct CollisionResult {
    std::uint64_t first = 0;
    std::uint64_t second = 0;
    std::uint64_t k = 0;              // subset cardinality
    std::uint64_t classicalEvals = 0; // F evaluations in the subset phase
    std::uint64_t groverQueries = 0;  // oracle applications
    bool earlyExit = false;           // collision already inside the subset
};

// Uniform integer in [0, bound) drawn by Hadamard superposition and
// measurement, rejecting out-of-range outcomes. bound must fit in 30 bits.
std::uint64_t randomInt(Machine& m, std::uint64_t bound);

// ceil(cbrt(N/r)) for r >= 2, otherwise 1 + randomInt(m, N); clamped to
// [2, N] either way.
std::uint64_t subsetCardinality(std::uint64_t N, std::uint64_t r, Machine& m);

// k table values at distinct positions, sampled via randomInt.
std::vector<std::uint64_t> generateSubset(Machine& m, const std::vector<std::uint64_t>& table,
                                          std::uint64_t k);

SubsetTables generateLists(const std::vector<std::uint64_t>& subset, std::uint64_t k,
                           const ClassicalFn& F);

// First pair (scan order i < j) with equal outputs and distinct inputs,
// returned as input values.
std::optional<std::pair<std::uint64_t, std::uint64_t>> checkDoubles(const SubsetTables& tables);

// Ancilla-based oracle over table indices: marks x when some subset entry
// shares F(table[x]) but differs from table[x].
Oracle collisionOracle(const SubsetTables& tables, const std::vector<std::uint64_t>& table,
                       const ClassicalFn& F);

// Full pipeline: subset phase, early exit on an in-subset collision,
// otherwise Grover over the membership oracle plus classical verification.
// Needs ceil(log2 N) + 1 qubits.
CollisionResult findCollision(Machine& m, const CollisionInstance& inst);

}  // namespace qsim

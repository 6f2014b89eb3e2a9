#pragma once

#include <cstdint>
#include <vector>

#include "qsim/machine.hpp"

namespace qsim {

// Binary decomposition of M driving the state preparation circuit.
struct SuperpositionPlan {
    std::uint64_t M = 0;
    int n = 0;                  // qubit count, ceil(log2 M)
    std::vector<int> mBin;      // binary digits of M, least significant first
    std::vector<int> locs;      // 1-bit positions, most significant first
    int k = 0;                  // number of 1-bits
};

SuperpositionPlan planFor(std::uint64_t M);

// Prepares (1/sqrt(M)) * sum_{j<M} |j> on a fresh ceil(log2 M)-qubit register.
// Conditional blocks are gate-native anti-controlled operations.
Register prepareUniformM(Machine& m, std::uint64_t M);

// Same output state, but every conditional block checks a dup-ed copy of its
// control qubit and releases it with forgetConditional afterwards.
// Needs one extra free qubit for the copies.
Register prepareUniformMWithForget(Machine& m, std::uint64_t M);

}  // namespace qsim

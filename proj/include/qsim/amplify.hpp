#pragma once

#include <cstdint>
#include <functional>

#include "qsim/machine.hpp"

namespace qsim {

enum class OracleMode { Diagonal, AncillaBased };

// Classical predicate over basis indices, applied as a +-1 diagonal phase
// operator. AncillaBased mode realizes it by compute-phase-uncompute through
// a flag ancilla; both modes act identically on the state.
struct Oracle {
    int arity = 0;
    std::function<bool(std::uint64_t)> predicate;
    OracleMode mode = OracleMode::Diagonal;
};

// H on every qubit of r: all 2^n amplitudes become 1/sqrt(2^n) on r.
void prepareUniform(Machine& m, const Register& r);

// Negates the amplitude of every basis state whose r value is marked.
// Increments the machine's oracle query counter by exactly one.
void applyOracle(Machine& m, const Oracle& o, const Register& r);

// Reflection about the uniform state, 2|psi><psi| - I on r.
void applyDiffusion(Machine& m, const Register& r);

// floor((pi/4) * sqrt(N/t)) Grover iterations for t marks among N states.
std::uint64_t groverIterations(std::uint64_t N, std::uint64_t t);

// Allocates a register, prepares the uniform state, runs the marks-aware
// number of oracle+diffusion iterations, measures, and returns the outcome.
std::uint64_t grover(Machine& m, const Oracle& o, std::uint64_t t);

}  // namespace qsim

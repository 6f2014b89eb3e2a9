#pragma once

#include <functional>

#include "qsim/machine.hpp"

namespace qsim {

// Basis-correlated copy: maps sum a_x |x>_src |0>_dst to sum a_x |x>_src |x>_dst.
// Returns the fresh destination register.
Register dup(Machine& m, const Register& src);

// Verifies that every nonzero-amplitude basis state has x equal to the
// expected value, then removes x from the state and frees its qubits.
// Raises ForgetMismatch (with a witness) otherwise.
void forgetConditional(Machine& m, const Register& x, std::uint64_t expected);

// Same, but x must equal the paired register's bits branchwise.
void forgetConditional(Machine& m, const Register& x, const Register& expected);

// Verifies that x is determined by the rest of the state: grouping basis
// states by the bits outside x, every group must carry exactly one x value.
// Raises ForgetUndetermined (with a witness pair) otherwise.
void forgetUnconditional(Machine& m, const Register& x);

// Allocates a width-qubit ancilla, runs body, replays the inverse of every
// basis-permutation gate the body applied to the ancilla (reverse order), and
// discards the ancilla via forgetConditional(ancilla, 0). Gates that would
// put the ancilla into superposition raise NotQfree.
void withAncilla(Machine& m, int width, const std::function<void(const Register&)>& body);

}  // namespace qsim

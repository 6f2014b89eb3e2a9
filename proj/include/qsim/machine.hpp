#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

#include "qsim/errors.hpp"

namespace qsim {

using Amplitude = std::complex<double>;

// A machine-global qubit index. Obtained from a Register; never constructed
// from thin air by callers.
struct Qubit {
    int index = -1;
};

// Ordered list of distinct qubit indices. Bit 0 of the register value is the
// first entry (least significant bit first).
class Register {
public:
    Register() = default;
    explicit Register(std::vector<int> qubits) : qubits_(std::move(qubits)) {}

    int width() const { return static_cast<int>(qubits_.size()); }
    Qubit operator[](int bit) const { return Qubit{qubits_.at(static_cast<std::size_t>(bit))}; }
    Register bit(int b) const { return Register({qubits_.at(static_cast<std::size_t>(b))}); }
    const std::vector<int>& qubits() const { return qubits_; }

private:
    std::vector<int> qubits_;
};

enum class Gate { H, X, Y, Z, RotX, RotY, RotZ };

// 2x2 unitary of a gate, row-major [m00, m01, m10, m11]. theta is ignored for
// the fixed gates.
std::array<Amplitude, 4> gateMatrix(Gate g, double theta);

// Dense statevector machine: qubit allocator, gate application, phase, and
// seeded measurement. Single-threaded; one seeded generator drives all
// randomness so runs replay exactly.
class Machine {
public:
    static constexpr int kMaxQubits = 26;

    Machine(int nQubits, std::uint64_t seed);

    Machine(const Machine&) = delete;
    Machine& operator=(const Machine&) = delete;
    Machine(Machine&&) = default;
    Machine& operator=(Machine&&) = default;

    int numQubits() const { return n_qubits_; }
    std::span<const Amplitude> amplitudes() const { return amps_; }
    int freeQubits() const;
    bool isLive(Qubit q) const;
    // Bits set at every currently-free qubit position.
    std::uint64_t freeMask() const;

    std::uint64_t queryCount() const { return query_counter_; }
    void countQuery() { ++query_counter_; }
    void resetQueryCount() { query_counter_ = 0; }

    std::mt19937_64& rng() { return rng_; }

    Register allocate(int k);

    void applyH(Qubit q) { applyGate(Gate::H, q); }
    void applyX(Qubit q) { applyGate(Gate::X, q); }
    void applyY(Qubit q) { applyGate(Gate::Y, q); }
    void applyZ(Qubit q) { applyGate(Gate::Z, q); }
    void applyRotX(Qubit q, double theta) { applyGate(Gate::RotX, q, theta); }
    void applyRotY(Qubit q, double theta) { applyGate(Gate::RotY, q, theta); }
    void applyRotZ(Qubit q, double theta) { applyGate(Gate::RotZ, q, theta); }

    void applyGate(Gate g, Qubit target, double theta = 0.0);
    // Applies g on target exactly on basis states where the control register
    // matches controlPolarity (bit i of the polarity pairs with controls[i]).
    void applyControlled(const Register& controls, Gate g, Qubit target,
                         std::uint64_t controlPolarity, double theta = 0.0);

    void applyGlobalPhase(double radians);
    void applyControlledPhase(const Register& controls, std::uint64_t controlPolarity,
                              double radians);
    // Diagonal +-1 operator: negates the amplitude of every basis state whose
    // value on r satisfies pred.
    void phaseFlip(const Register& r, const std::function<bool(std::uint64_t)>& pred);

    // Samples an outcome from the marginal distribution of r, collapses and
    // renormalizes, and consumes the register: its qubits return to the free
    // list in |0>.
    std::uint64_t measure(const Register& r);

    std::uint64_t valueAt(std::uint64_t basisIndex, const Register& r) const;
    std::uint64_t maskOf(const Register& r) const;

private:
    friend Register dup(Machine&, const Register&);
    friend void forgetConditional(Machine&, const Register&, std::uint64_t);
    friend void forgetConditional(Machine&, const Register&, const Register&);
    friend void forgetUnconditional(Machine&, const Register&);
    friend void withAncilla(Machine&, int, const std::function<void(const Register&)>&);

    struct RecordedGate {
        Gate g;
        int target;
        double theta;
        std::uint64_t ctrlMask;
        std::uint64_t ctrlVal;
    };
    struct AncillaScope {
        std::uint64_t mask;
        std::vector<RecordedGate> log;
    };

    void requireLive(Qubit q) const;
    void requireLive(const Register& r) const;
    void applyMatrix(int target, const std::array<Amplitude, 4>& u,
                     std::uint64_t ctrlMask, std::uint64_t ctrlVal);
    // Enforces the qfree discipline on tracked ancillas and records the
    // basis-permutation gates that must be undone.
    void noteGateOnAncilla(Gate g, int target, double theta,
                           std::uint64_t ctrlMask, std::uint64_t ctrlVal);
    void release(const Register& r);
    // Shared body of the forget operations; defined alongside them.
    void discardChecked(const Register& x,
                        const std::function<std::uint64_t(std::uint64_t)>& expectedOf,
                        ErrorCode mismatchCode);

    int n_qubits_ = 0;
    std::vector<Amplitude> amps_;
    std::vector<bool> allocated_;
    std::mt19937_64 rng_;
    std::uint64_t query_counter_ = 0;
    std::vector<AncillaScope> ancilla_scopes_;
};

}  // namespace qsim

#include "qsim/machine.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

namespace qsim {

const char* errorName(ErrorCode code) {
    switch (code) {
        case ErrorCode::CapacityExceeded: return "CapacityExceeded";
        case ErrorCode::OutOfQubits: return "OutOfQubits";
        case ErrorCode::InvalidArity: return "InvalidArity";
        case ErrorCode::DeadQubit: return "DeadQubit";
        case ErrorCode::OverlappingRegisters: return "OverlappingRegisters";
        case ErrorCode::NonFiniteAngle: return "NonFiniteAngle";
        case ErrorCode::ForgetMismatch: return "ForgetMismatch";
        case ErrorCode::ForgetUndetermined: return "ForgetUndetermined";
        case ErrorCode::NotQfree: return "NotQfree";
        case ErrorCode::ArityMismatch: return "ArityMismatch";
        case ErrorCode::InvalidMarks: return "InvalidMarks";
        case ErrorCode::DuplicateEntries: return "DuplicateEntries";
        case ErrorCode::BoundTooLarge: return "BoundTooLarge";
        case ErrorCode::InvalidCardinality: return "InvalidCardinality";
        case ErrorCode::NoCollisionFound: return "NoCollisionFound";
        case ErrorCode::InvalidM: return "InvalidM";
    }
    return "UnknownError";
}

std::array<Amplitude, 4> gateMatrix(Gate g, double theta) {
    const double s = 1.0 / std::numbers::sqrt2;
    const Amplitude i{0.0, 1.0};
    switch (g) {
        case Gate::H:
            return {Amplitude{s}, Amplitude{s}, Amplitude{s}, Amplitude{-s}};
        case Gate::X:
            return {Amplitude{0}, Amplitude{1}, Amplitude{1}, Amplitude{0}};
        case Gate::Y:
            return {Amplitude{0}, -i, i, Amplitude{0}};
        case Gate::Z:
            return {Amplitude{1}, Amplitude{0}, Amplitude{0}, Amplitude{-1}};
        case Gate::RotX: {
            const double c = std::cos(theta / 2.0), sn = std::sin(theta / 2.0);
            return {Amplitude{c}, -i * sn, -i * sn, Amplitude{c}};
        }
        case Gate::RotY: {
            const double c = std::cos(theta / 2.0), sn = std::sin(theta / 2.0);
            return {Amplitude{c}, Amplitude{-sn}, Amplitude{sn}, Amplitude{c}};
        }
        case Gate::RotZ: {
            const Amplitude e0 = std::polar(1.0, -theta / 2.0);
            const Amplitude e1 = std::polar(1.0, theta / 2.0);
            return {e0, Amplitude{0}, Amplitude{0}, e1};
        }
    }
    return {};
}

namespace {

bool isRotation(Gate g) { return g == Gate::RotX || g == Gate::RotY || g == Gate::RotZ; }

// True when theta is congruent to 0 or pi (mod 2*pi), i.e. the rotation is a
// basis permutation up to phase.
bool rotationIsPermutation(double theta) {
    const double half = std::remainder(theta, 2.0 * std::numbers::pi);
    return std::abs(half) < 1e-12 || std::abs(std::abs(half) - std::numbers::pi) < 1e-12;
}

}  // namespace

Machine::Machine(int nQubits, std::uint64_t seed) : n_qubits_(nQubits), rng_(seed) {
    if (nQubits < 0) fail(ErrorCode::InvalidArity, "negative qubit count");
    if (nQubits > kMaxQubits)
        fail(ErrorCode::CapacityExceeded,
             "requested " + std::to_string(nQubits) + " qubits, cap is " +
                 std::to_string(kMaxQubits));
    amps_.assign(std::uint64_t{1} << nQubits, Amplitude{0});
    amps_[0] = Amplitude{1};
    allocated_.assign(static_cast<std::size_t>(nQubits), false);
}

int Machine::freeQubits() const {
    return static_cast<int>(std::count(allocated_.begin(), allocated_.end(), false));
}

bool Machine::isLive(Qubit q) const {
    return q.index >= 0 && q.index < n_qubits_ && allocated_[static_cast<std::size_t>(q.index)];
}

std::uint64_t Machine::freeMask() const {
    std::uint64_t mask = 0;
    for (int q = 0; q < n_qubits_; ++q)
        if (!allocated_[static_cast<std::size_t>(q)]) mask |= std::uint64_t{1} << q;
    return mask;
}

void Machine::requireLive(Qubit q) const {
    if (!isLive(q))
        fail(ErrorCode::DeadQubit, "qubit " + std::to_string(q.index) + " is not live");
}

void Machine::requireLive(const Register& r) const {
    for (int q : r.qubits()) requireLive(Qubit{q});
}

Register Machine::allocate(int k) {
    if (k <= 0) fail(ErrorCode::InvalidArity, "allocation size must be positive");
    std::vector<int> picked;
    picked.reserve(static_cast<std::size_t>(k));
    for (int q = 0; q < n_qubits_ && static_cast<int>(picked.size()) < k; ++q)
        if (!allocated_[static_cast<std::size_t>(q)]) picked.push_back(q);
    if (static_cast<int>(picked.size()) < k)
        fail(ErrorCode::OutOfQubits, "need " + std::to_string(k) + " free qubits, have " +
                                         std::to_string(picked.size()));
    for (int q : picked) allocated_[static_cast<std::size_t>(q)] = true;
    return Register(std::move(picked));
}

void Machine::release(const Register& r) {
    for (int q : r.qubits()) allocated_[static_cast<std::size_t>(q)] = false;
}

std::uint64_t Machine::maskOf(const Register& r) const {
    std::uint64_t mask = 0;
    for (int q : r.qubits()) mask |= std::uint64_t{1} << q;
    return mask;
}

std::uint64_t Machine::valueAt(std::uint64_t basisIndex, const Register& r) const {
    std::uint64_t v = 0;
    const auto& qs = r.qubits();
    for (std::size_t b = 0; b < qs.size(); ++b)
        v |= ((basisIndex >> qs[b]) & 1u) << b;
    return v;
}

void Machine::applyMatrix(int target, const std::array<Amplitude, 4>& u,
                          std::uint64_t ctrlMask, std::uint64_t ctrlVal) {
    const std::uint64_t tmask = std::uint64_t{1} << target;
    const std::uint64_t size = amps_.size();
    for (std::uint64_t i = 0; i < size; ++i) {
        if (i & tmask) continue;
        if ((i & ctrlMask) != ctrlVal) continue;
        const std::uint64_t j = i | tmask;
        const Amplitude a = amps_[i], b = amps_[j];
        amps_[i] = u[0] * a + u[1] * b;
        amps_[j] = u[2] * a + u[3] * b;
    }
}

void Machine::noteGateOnAncilla(Gate g, int target, double theta,
                                std::uint64_t ctrlMask, std::uint64_t ctrlVal) {
    const std::uint64_t tmask = std::uint64_t{1} << target;
    for (auto& scope : ancilla_scopes_) {
        if (!(scope.mask & tmask)) continue;
        if (g == Gate::Z || g == Gate::RotZ) return;  // diagonal, nothing to undo
        if (g == Gate::H)
            fail(ErrorCode::NotQfree, "H on a tracked ancilla creates superposition");
        if (isRotation(g) && !rotationIsPermutation(theta))
            fail(ErrorCode::NotQfree, "non-permutation rotation on a tracked ancilla");
        scope.log.push_back({g, target, theta, ctrlMask, ctrlVal});
        return;
    }
}

void Machine::applyGate(Gate g, Qubit target, double theta) {
    requireLive(target);
    if (isRotation(g) && !std::isfinite(theta))
        fail(ErrorCode::NonFiniteAngle, "rotation angle is not finite");
    noteGateOnAncilla(g, target.index, theta, 0, 0);
    applyMatrix(target.index, gateMatrix(g, theta), 0, 0);
}

void Machine::applyControlled(const Register& controls, Gate g, Qubit target,
                              std::uint64_t controlPolarity, double theta) {
    requireLive(controls);
    requireLive(target);
    if (isRotation(g) && !std::isfinite(theta))
        fail(ErrorCode::NonFiniteAngle, "rotation angle is not finite");
    std::uint64_t ctrlMask = 0, ctrlVal = 0;
    const auto& qs = controls.qubits();
    for (std::size_t b = 0; b < qs.size(); ++b) {
        const std::uint64_t bit = std::uint64_t{1} << qs[b];
        if (qs[b] == target.index)
            fail(ErrorCode::OverlappingRegisters, "control register contains the target qubit");
        ctrlMask |= bit;
        if ((controlPolarity >> b) & 1u) ctrlVal |= bit;
    }
    noteGateOnAncilla(g, target.index, theta, ctrlMask, ctrlVal);
    applyMatrix(target.index, gateMatrix(g, theta), ctrlMask, ctrlVal);
}

void Machine::applyGlobalPhase(double radians) {
    if (!std::isfinite(radians)) fail(ErrorCode::NonFiniteAngle, "phase angle is not finite");
    const Amplitude f = std::polar(1.0, radians);
    for (auto& a : amps_) a *= f;
}

void Machine::applyControlledPhase(const Register& controls, std::uint64_t controlPolarity,
                                   double radians) {
    requireLive(controls);
    if (!std::isfinite(radians)) fail(ErrorCode::NonFiniteAngle, "phase angle is not finite");
    std::uint64_t ctrlMask = 0, ctrlVal = 0;
    const auto& qs = controls.qubits();
    for (std::size_t b = 0; b < qs.size(); ++b) {
        const std::uint64_t bit = std::uint64_t{1} << qs[b];
        ctrlMask |= bit;
        if ((controlPolarity >> b) & 1u) ctrlVal |= bit;
    }
    const Amplitude f = std::polar(1.0, radians);
    const std::uint64_t size = amps_.size();
    for (std::uint64_t i = 0; i < size; ++i)
        if ((i & ctrlMask) == ctrlVal) amps_[i] *= f;
}

void Machine::phaseFlip(const Register& r, const std::function<bool(std::uint64_t)>& pred) {
    requireLive(r);
    // Evaluate the predicate once per register value, not per basis state.
    const std::uint64_t values = std::uint64_t{1} << r.width();
    std::vector<bool> marked(values);
    for (std::uint64_t v = 0; v < values; ++v) marked[v] = pred(v);
    const std::uint64_t size = amps_.size();
    for (std::uint64_t i = 0; i < size; ++i)
        if (marked[valueAt(i, r)]) amps_[i] = -amps_[i];
}

std::uint64_t Machine::measure(const Register& r) {
    requireLive(r);
    const std::uint64_t rmask = maskOf(r);
    for (const auto& scope : ancilla_scopes_)
        if (scope.mask & rmask)
            fail(ErrorCode::NotQfree, "measurement of a tracked ancilla");

    // Sample a basis state from |amp|^2 and take its register value; this is
    // exactly the marginal distribution of r.
    const std::uint64_t size = amps_.size();
    const double u = std::uniform_real_distribution<double>(0.0, 1.0)(rng_);
    double cumulative = 0.0;
    std::uint64_t sampled = 0;
    bool found = false;
    for (std::uint64_t i = 0; i < size; ++i) {
        const double p = std::norm(amps_[i]);
        if (p <= 0.0) continue;
        cumulative += p;
        sampled = i;
        found = true;
        if (u < cumulative) break;
    }
    if (!found) fail(ErrorCode::DeadQubit, "measurement on an all-zero state");
    const std::uint64_t outcome = valueAt(sampled, r);

    // Collapse, renormalize, and park the measured qubits back at |0>.
    double keep = 0.0;
    for (std::uint64_t i = 0; i < size; ++i) {
        if (valueAt(i, r) != outcome) {
            amps_[i] = Amplitude{0};
        } else {
            keep += std::norm(amps_[i]);
        }
    }
    const double scale = 1.0 / std::sqrt(keep);
    for (std::uint64_t i = 0; i < size; ++i) {
        if (amps_[i] == Amplitude{0}) continue;
        const std::uint64_t home = i & ~rmask;
        if (home != i) {
            amps_[home] = amps_[i] * scale;
            amps_[i] = Amplitude{0};
        } else {
            amps_[i] *= scale;
        }
    }
    release(r);
    return outcome;
}

}  // namespace qsim

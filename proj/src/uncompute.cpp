#include "qsim/uncompute.hpp"

#include <cmath>
#include <string>
#include <unordered_map>

namespace qsim {

namespace {

// Amplitudes below this magnitude are floating-point dust and do not count as
// support when checking forget conditions.
constexpr double kDust = 1e-12;

}  // namespace

// Checks every supported basis state against expectedOf, then clears the x
// bits and frees the register.
void Machine::discardChecked(const Register& x,
                             const std::function<std::uint64_t(std::uint64_t)>& expectedOf,
                             ErrorCode mismatchCode) {
    requireLive(x);
    const std::uint64_t xmask = maskOf(x);
    const std::uint64_t size = amps_.size();

    for (std::uint64_t i = 0; i < size; ++i) {
        if (std::abs(amps_[i]) <= kDust) continue;
        const std::uint64_t v = valueAt(i, x);
        const std::uint64_t want = expectedOf(i);
        if (v != want)
            fail(mismatchCode, "basis state " + std::to_string(i) + " carries value " +
                                   std::to_string(v) + ", expected " + std::to_string(want));
    }

    double norm = 0.0;
    for (std::uint64_t i = 0; i < size; ++i) {
        if (std::abs(amps_[i]) <= kDust) {
            amps_[i] = Amplitude{0};
            continue;
        }
        const std::uint64_t home = i & ~xmask;
        norm += std::norm(amps_[i]);
        if (home != i) {
            amps_[home] = amps_[i];
            amps_[i] = Amplitude{0};
        }
    }
    // Dropping dust perturbs the norm by O(kDust^2); rescale anyway.
    const double scale = 1.0 / std::sqrt(norm);
    for (auto& a : amps_)
        if (a != Amplitude{0}) a *= scale;
    release(x);
}

Register dup(Machine& m, const Register& src) {
    m.requireLive(src);
    Register dst = m.allocate(src.width());
    for (int b = 0; b < src.width(); ++b)
        m.applyControlled(src.bit(b), Gate::X, dst[b], 1);
    return dst;
}

void forgetConditional(Machine& m, const Register& x, std::uint64_t expected) {
    if (x.width() < 64 && (expected >> x.width()) != 0)
        fail(ErrorCode::ForgetMismatch, "expected value " + std::to_string(expected) +
                                            " does not fit in " + std::to_string(x.width()) +
                                            " bits");
    m.discardChecked(x, [expected](std::uint64_t) { return expected; },
                     ErrorCode::ForgetMismatch);
}

void forgetConditional(Machine& m, const Register& x, const Register& expected) {
    m.requireLive(expected);
    if (expected.width() != x.width())
        fail(ErrorCode::ArityMismatch, "paired register width differs");
    m.discardChecked(x, [&m, &expected](std::uint64_t i) { return m.valueAt(i, expected); },
                     ErrorCode::ForgetMismatch);
}

void forgetUnconditional(Machine& m, const Register& x) {
    m.requireLive(x);
    const std::uint64_t xmask = m.maskOf(x);
    const auto amps = m.amplitudes();

    // Group supported basis states by the environment bits; each group must
    // carry a single x value or the discard would be an implicit measurement.
    std::unordered_map<std::uint64_t, std::uint64_t> envToValue;
    for (std::uint64_t i = 0; i < amps.size(); ++i) {
        if (std::abs(amps[i]) <= kDust) continue;
        const std::uint64_t env = i & ~xmask;
        const std::uint64_t v = m.valueAt(i, x);
        auto [it, inserted] = envToValue.emplace(env, v);
        if (!inserted && it->second != v)
            fail(ErrorCode::ForgetUndetermined,
                 "environment " + std::to_string(env) + " supports x=" +
                     std::to_string(it->second) + " and x=" + std::to_string(v));
    }
    m.discardChecked(x,
                     [&m, &envToValue, xmask](std::uint64_t i) {
                         return envToValue.at(i & ~xmask);
                     },
                     ErrorCode::ForgetUndetermined);
}

void withAncilla(Machine& m, int width, const std::function<void(const Register&)>& body) {
    if (width < 1) fail(ErrorCode::InvalidArity, "ancilla width must be positive");
    Register anc = m.allocate(width);
    m.ancilla_scopes_.push_back({m.maskOf(anc), {}});
    std::vector<Machine::RecordedGate> log;
    try {
        body(anc);
        log = std::move(m.ancilla_scopes_.back().log);
        m.ancilla_scopes_.pop_back();
    } catch (...) {
        m.ancilla_scopes_.pop_back();
        m.release(anc);
        throw;
    }
    for (auto it = log.rbegin(); it != log.rend(); ++it)
        m.applyMatrix(it->target, gateMatrix(it->g, -it->theta), it->ctrlMask, it->ctrlVal);
    forgetConditional(m, anc, 0);
}

}  // namespace qsim

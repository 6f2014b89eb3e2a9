#include "qsim/amplify.hpp"

#include <cmath>
#include <numbers>

#include "qsim/uncompute.hpp"

namespace qsim {

void prepareUniform(Machine& m, const Register& r) {
    for (int b = 0; b < r.width(); ++b) m.applyH(r[b]);
}

void applyOracle(Machine& m, const Oracle& o, const Register& r) {
    if (r.width() != o.arity)
        fail(ErrorCode::ArityMismatch, "oracle arity " + std::to_string(o.arity) +
                                           " vs register width " + std::to_string(r.width()));
    m.countQuery();
    if (o.mode == OracleMode::Diagonal) {
        m.phaseFlip(r, o.predicate);
        return;
    }
    // Compute-phase-uncompute: flip a flag ancilla on every marked basis
    // value, put the phase on the flag, and let withAncilla undo the writes.
    withAncilla(m, 1, [&](const Register& anc) {
        const std::uint64_t values = std::uint64_t{1} << o.arity;
        for (std::uint64_t x = 0; x < values; ++x)
            if (o.predicate(x)) m.applyControlled(r, Gate::X, anc[0], x);
        m.applyZ(anc[0]);
    });
}

void applyDiffusion(Machine& m, const Register& r) {
    prepareUniform(m, r);
    m.phaseFlip(r, [](std::uint64_t v) { return v != 0; });
    prepareUniform(m, r);
}

std::uint64_t groverIterations(std::uint64_t N, std::uint64_t t) {
    if (t < 1 || t > N)
        fail(ErrorCode::InvalidMarks, "mark count " + std::to_string(t) +
                                          " outside [1, " + std::to_string(N) + "]");
    return static_cast<std::uint64_t>(std::floor(
        (std::numbers::pi / 4.0) * std::sqrt(static_cast<double>(N) / static_cast<double>(t))));
}

std::uint64_t grover(Machine& m, const Oracle& o, std::uint64_t t) {
    Register r = m.allocate(o.arity);
    prepareUniform(m, r);
    const std::uint64_t N = std::uint64_t{1} << o.arity;
    const std::uint64_t iterations = groverIterations(N, t);
    for (std::uint64_t j = 0; j < iterations; ++j) {
        applyOracle(m, o, r);
        applyDiffusion(m, r);
    }
    return m.measure(r);
}

}  // namespace qsim

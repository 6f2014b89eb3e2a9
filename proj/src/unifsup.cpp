#include "qsim/unifsup.hpp"

#include <bit>
#include <cmath>

#include "qsim/uncompute.hpp"

namespace qsim {

SuperpositionPlan planFor(std::uint64_t M) {
    if (M < 2) fail(ErrorCode::InvalidM, "M must be at least 2");
    SuperpositionPlan plan;
    plan.M = M;
    plan.n = std::bit_width(M - 1);
    for (int b = 0; b < std::bit_width(M); ++b) plan.mBin.push_back((M >> b) & 1u);
    for (int b = std::bit_width(M) - 1; b >= 0; --b)
        if ((M >> b) & 1u) plan.locs.push_back(b);
    plan.k = static_cast<int>(plan.locs.size());
    return plan;
}

namespace {

// One conditional block: the given gates fire where the control qubit is 0.
// The gate-native path anti-controls on the qubit directly; the forget path
// anti-controls on a dup-ed copy that is checked and released afterwards.
template <typename Block>
void antiControlledBlock(Machine& m, Qubit control, bool useForget, Block&& block) {
    Register ctrl({control.index});
    if (!useForget) {
        block(ctrl);
        return;
    }
    Register copy = dup(m, ctrl);
    block(copy);
    forgetConditional(m, copy, ctrl);
}

Register prepareCore(Machine& m, std::uint64_t M, bool useForget) {
    if (M < 2) fail(ErrorCode::InvalidM, "M must be at least 2");

    if (std::has_single_bit(M)) {
        // Hadamard fast path for M = 2^n.
        const int n = std::countr_zero(M);
        Register q = m.allocate(n);
        for (int b = 0; b < n; ++b) m.applyH(q[b]);
        return q;
    }

    const auto plan = planFor(M);
    Register q = m.allocate(plan.n);

    // Set-bit positions, least significant first.
    std::vector<int> l(plan.locs.rbegin(), plan.locs.rend());
    const int k = plan.k;

    // Encode M minus its lowest power-of-two component.
    for (int j = 1; j < k; ++j) m.applyX(q[l[j]]);

    if (l[0] > 0)
        for (int b = 0; b < l[0]; ++b) m.applyH(q[b]);

    // Split amplitude between the first block of size 2^{l_0} and the rest.
    double mRunning = static_cast<double>(std::uint64_t{1} << l[0]);
    const double Md = static_cast<double>(M);
    m.applyRotY(q[l[1]], -2.0 * std::acos(std::sqrt(mRunning / Md)));

    antiControlledBlock(m, q[l[1]], useForget, [&](const Register& ctrl) {
        for (int b = l[0]; b < l[1]; ++b)
            m.applyControlled(ctrl, Gate::H, q[b], 0);
    });

    // Cyclic phase: peel one power-of-two block per round.
    for (int j = 1; j <= k - 2; ++j) {
        const double block = static_cast<double>(std::uint64_t{1} << l[j]);
        const double theta = -2.0 * std::acos(std::sqrt(block / (Md - mRunning)));
        antiControlledBlock(m, q[l[j]], useForget, [&](const Register& ctrl) {
            m.applyControlled(ctrl, Gate::RotY, q[l[j + 1]], 0, theta);
        });
        antiControlledBlock(m, q[l[j + 1]], useForget, [&](const Register& ctrl) {
            for (int b = l[j]; b < l[j + 1]; ++b)
                m.applyControlled(ctrl, Gate::H, q[b], 0);
        });
        mRunning += block;
    }
    return q;
}

}  // namespace

Register prepareUniformM(Machine& m, std::uint64_t M) { return prepareCore(m, M, false); }

Register prepareUniformMWithForget(Machine& m, std::uint64_t M) {
    return prepareCore(m, M, true);
}

}  // namespace qsim

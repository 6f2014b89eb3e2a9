#pragma once

#include <cmath>
#include <complex>
#include <random>
#include <span>
#include <vector>

#include "qsim/machine.hpp"

namespace testutil {

using qsim::Amplitude;

inline std::vector<Amplitude> snapshot(const qsim::Machine& m) {
    const auto amps = m.amplitudes();
    return {amps.begin(), amps.end()};
}

inline double stateNorm(std::span<const Amplitude> amps) {
    double s = 0.0;
    for (const auto& a : amps) s += std::norm(a);
    return s;
}

inline double maxDiff(std::span<const Amplitude> actual, std::span<const Amplitude> expected) {
    double d = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i)
        d = std::max(d, std::abs(actual[i] - expected[i]));
    return d;
}

// Elementwise distance after factoring out one common phase, anchored at the
// largest expected amplitude.
inline double maxDiffUpToPhase(std::span<const Amplitude> actual,
                               std::span<const Amplitude> expected) {
    std::size_t anchor = 0;
    for (std::size_t i = 0; i < expected.size(); ++i)
        if (std::abs(expected[i]) > std::abs(expected[anchor])) anchor = i;
    if (std::abs(expected[anchor]) < 1e-14 || std::abs(actual[anchor]) < 1e-14)
        return maxDiff(actual, expected);
    const Amplitude phase = (actual[anchor] / expected[anchor]) /
                            std::abs(actual[anchor] / expected[anchor]);
    double d = 0.0;
    for (std::size_t i = 0; i < actual.size(); ++i)
        d = std::max(d, std::abs(actual[i] - phase * expected[i]));
    return d;
}

// Applies `gates` random gates to r, drawn from H/X/Y/Z/rotations and their
// single-controlled variants.
inline void randomCircuit(qsim::Machine& m, const qsim::Register& r, int gates,
                          std::mt19937_64& g) {
    std::uniform_int_distribution<int> gatePick(0, 6);
    std::uniform_int_distribution<int> qubitPick(0, r.width() - 1);
    std::uniform_real_distribution<double> anglePick(-3.2, 3.2);
    std::bernoulli_distribution coin;
    for (int i = 0; i < gates; ++i) {
        const auto gate = static_cast<qsim::Gate>(gatePick(g));
        const int target = qubitPick(g);
        const double theta = anglePick(g);
        const bool controlled = r.width() > 1 && coin(g);
        if (!controlled) {
            m.applyGate(gate, r[target], theta);
            continue;
        }
        int control = qubitPick(g);
        while (control == target) control = qubitPick(g);
        m.applyControlled(r.bit(control), gate, r[target], coin(g) ? 1u : 0u, theta);
    }
}

}  // namespace testutil

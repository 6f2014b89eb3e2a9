#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>

#include "qsim/amplify.hpp"
#include "test_util.hpp"

using namespace qsim;
using testutil::maxDiff;
using testutil::snapshot;

namespace {

ErrorCode codeOf(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.code();
    }
    FAIL("expected a qsim::Error");
    return ErrorCode::InvalidArity;
}

double markedProbability(const Machine& m, const Register& r,
                         const std::function<bool(std::uint64_t)>& pred) {
    double p = 0.0;
    const auto amps = m.amplitudes();
    for (std::uint64_t i = 0; i < amps.size(); ++i)
        if (pred(m.valueAt(i, r))) p += std::norm(amps[i]);
    return p;
}

}  // namespace

TEST_CASE("prepareUniform") {
    Machine m(3, 0);
    Register r = m.allocate(3);
    prepareUniform(m, r);
    const double a = 1.0 / std::sqrt(8.0);
    for (const auto& amp : m.amplitudes()) CHECK(std::abs(amp - Amplitude{a}) < 1e-15);
    prepareUniform(m, r);  // involution back to |0..0>
    CHECK(std::abs(m.amplitudes()[0] - Amplitude{1}) < 1e-12);
}

TEST_CASE("applyOracle negates exactly the marked amplitudes") {
    Machine m(2, 0);
    Register r = m.allocate(2);
    prepareUniform(m, r);
    const Oracle o{2, [](std::uint64_t x) { return x == 2; }, OracleMode::Diagonal};
    applyOracle(m, o, r);
    CHECK(maxDiff(m.amplitudes(), std::vector<Amplitude>{0.5, 0.5, -0.5, 0.5}) < 1e-15);
    CHECK(m.queryCount() == 1);

    applyOracle(m, o, r);  // involution
    CHECK(maxDiff(m.amplitudes(), std::vector<Amplitude>{0.5, 0.5, 0.5, 0.5}) < 1e-15);
    CHECK(m.queryCount() == 2);

    Machine m2(1, 0);
    Register bad = m2.allocate(1);
    CHECK(codeOf([&] { applyOracle(m2, o, bad); }) == ErrorCode::ArityMismatch);
}

TEST_CASE("ancilla-based oracles equal diagonal oracles") {
    std::mt19937_64 g(77);
    for (int run = 0; run < 40; ++run) {
        const std::uint64_t markBits = g() & 0xff;
        auto pred = [markBits](std::uint64_t x) { return (markBits >> x) & 1u; };
        Machine m(4, run);
        Register r = m.allocate(3);
        testutil::randomCircuit(m, r, 15, g);
        auto reference = snapshot(m);

        applyOracle(m, Oracle{3, pred, OracleMode::AncillaBased}, r);
        for (std::uint64_t i = 0; i < reference.size(); ++i)
            if (pred(m.valueAt(i, r))) reference[i] = -reference[i];
        CHECK(maxDiff(m.amplitudes(), reference) < 1e-12);
    }
}

TEST_CASE("diffusion is the reflection about the uniform state") {
    SUBCASE("uniform state is a fixed point") {
        Machine m(3, 0);
        Register r = m.allocate(3);
        prepareUniform(m, r);
        const auto before = snapshot(m);
        applyDiffusion(m, r);
        CHECK(maxDiff(m.amplitudes(), before) < 1e-12);
    }
    SUBCASE("action on |00>") {
        Machine m(2, 0);
        Register r = m.allocate(2);
        applyDiffusion(m, r);
        CHECK(maxDiff(m.amplitudes(), std::vector<Amplitude>{-0.5, 0.5, 0.5, 0.5}) < 1e-12);
    }
    SUBCASE("involution") {
        std::mt19937_64 g(3);
        Machine m(3, 0);
        Register r = m.allocate(3);
        testutil::randomCircuit(m, r, 20, g);
        const auto before = snapshot(m);
        applyDiffusion(m, r);
        applyDiffusion(m, r);
        CHECK(maxDiff(m.amplitudes(), before) < 1e-12);
    }
}

TEST_CASE("groverIterations") {
    CHECK(groverIterations(4, 1) == 1);
    CHECK(groverIterations(16, 1) == 3);
    CHECK(groverIterations(16, 4) == 1);
    CHECK(codeOf([] { groverIterations(16, 0); }) == ErrorCode::InvalidMarks);
    CHECK(codeOf([] { groverIterations(16, 17); }) == ErrorCode::InvalidMarks);
}

TEST_CASE("grover finds a single mark on 2 qubits with certainty") {
    for (std::uint64_t seed = 0; seed < 20; ++seed) {
        Machine m(2, seed);
        const Oracle o{2, [](std::uint64_t x) { return x == 3; }, OracleMode::Diagonal};
        CHECK(grover(m, o, 1) == 3);
        CHECK(m.queryCount() == 1);
    }
}

TEST_CASE("grover with all states marked does no iterations") {
    Machine m(2, 5);
    const Oracle o{2, [](std::uint64_t) { return true; }, OracleMode::Diagonal};
    const std::uint64_t outcome = grover(m, o, 4);
    CHECK(outcome < 4);
    CHECK(m.queryCount() == 0);
}

TEST_CASE("marked probability follows the amplification closed form") {
    std::mt19937_64 g(123);
    for (int n : {2, 3, 4, 5}) {
        const std::uint64_t N = std::uint64_t{1} << n;
        for (std::uint64_t t : {std::uint64_t{1}, std::uint64_t{2}, std::uint64_t{4}}) {
            if (t > N) continue;
            // Random placement of the t marks.
            std::set<std::uint64_t> marks;
            while (marks.size() < t) marks.insert(g() % N);
            auto pred = [&marks](std::uint64_t x) { return marks.count(x) > 0; };
            const Oracle o{n, pred, OracleMode::Diagonal};

            Machine m(n, 0);
            Register r = m.allocate(n);
            prepareUniform(m, r);
            const double theta = std::asin(std::sqrt(static_cast<double>(t) / N));
            for (int j = 0; j <= 5; ++j) {
                const double expected = std::pow(std::sin((2 * j + 1) * theta), 2);
                CHECK(std::abs(markedProbability(m, r, pred) - expected) < 1e-9);
                applyOracle(m, o, r);
                applyDiffusion(m, r);
            }
        }
    }
}

TEST_CASE("n=4 single mark reaches the analytic success probability") {
    Machine m(4, 0);
    Register r = m.allocate(4);
    prepareUniform(m, r);
    const Oracle o{4, [](std::uint64_t x) { return x == 11; }, OracleMode::Diagonal};
    for (std::uint64_t j = 0; j < groverIterations(16, 1); ++j) {
        applyOracle(m, o, r);
        applyDiffusion(m, r);
    }
    const double p = markedProbability(m, r, [](std::uint64_t x) { return x == 11; });
    CHECK(std::abs(p - std::pow(std::sin(7.0 * std::asin(0.25)), 2)) < 1e-9);
    CHECK(p == doctest::Approx(0.9613).epsilon(1e-3));
}

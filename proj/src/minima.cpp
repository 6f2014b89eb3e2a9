#include "qsim/minima.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace qsim {

std::uint64_t runtimeBudget(std::uint64_t N) {
    const double lg = std::log2(static_cast<double>(N));
    return static_cast<std::uint64_t>(
        std::ceil(22.5 * std::sqrt(static_cast<double>(N)) + 1.4 * lg * lg));
}

Oracle minimaOracle(std::uint64_t solution, const std::vector<std::uint64_t>& table) {
    const std::uint64_t N = table.size();
    const int arity = std::max(1, static_cast<int>(std::bit_width(N - 1)));
    return Oracle{arity,
                  [solution, &table, N](std::uint64_t x) {
                      return x < N && table[x] <= solution;
                  },
                  OracleMode::AncillaBased};
}

MinimaResult durrHoyer(Machine& m, const std::vector<std::uint64_t>& table) {
    const std::uint64_t N = table.size();
    {
        auto sorted = table;
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
            fail(ErrorCode::DuplicateEntries, "table values must be distinct");
    }

    MinimaResult result;
    const std::uint64_t queriesBefore = m.queryCount();
    if (N == 1) {
        result.value = table[0];
        result.solutionTrace = {table[0]};
        return result;
    }

    const int n = std::bit_width(N - 1);
    const std::uint64_t budget = runtimeBudget(N);
    const double scheduleCap = std::sqrt(static_cast<double>(std::uint64_t{1} << n));

    std::size_t solutionIndex =
        std::uniform_int_distribution<std::size_t>(0, N - 1)(m.rng());
    std::uint64_t solution = table[solutionIndex];
    result.solutionTrace.push_back(solution);
    Oracle oracle = minimaOracle(solution, table);

    // Exponential Grover schedule: per round draw the iteration count
    // uniformly from {1..ceil(sched)}, growing sched by 8/7 on rounds that do
    // not improve the solution.
    double sched = 1.0;
    auto drawIterations = [&] {
        const auto cap = static_cast<std::uint64_t>(std::ceil(sched));
        return std::uniform_int_distribution<std::uint64_t>(1, cap)(m.rng());
    };

    std::uint64_t rt = 0;
    Register q = m.allocate(n);
    int stage = 0;
    std::uint64_t iterations = drawIterations();

    while (rt < budget) {
        if (stage < n) {
            m.applyH(q[stage]);
            ++stage;
            ++rt;
        } else if (stage < n + static_cast<int>(iterations)) {
            applyOracle(m, oracle, q);
            applyDiffusion(m, q);
            ++stage;
            ++rt;
        } else {
            const std::uint64_t y = m.measure(q);
            if (y < N && table[y] < solution) {
                solution = table[y];
                solutionIndex = y;
                result.solutionTrace.push_back(solution);
                oracle = minimaOracle(solution, table);
                sched = 1.0;
            } else {
                sched = std::min(sched * 8.0 / 7.0, scheduleCap);
            }
            q = m.allocate(n);
            stage = 0;
            iterations = drawIterations();
        }
    }

    const std::uint64_t y = m.measure(q);
    if (y < N && table[y] < solution) {
        solution = table[y];
        solutionIndex = y;
        result.solutionTrace.push_back(solution);
    }

    result.value = solution;
    result.index = solutionIndex;
    result.steps = rt;
    result.queries = m.queryCount() - queriesBefore;
    return result;
}

}  // namespace qsim

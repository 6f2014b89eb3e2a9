#include "qsim/collision.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <numeric>

namespace qsim {

std::uint64_t randomInt(Machine& m, std::uint64_t bound) {
    if (bound < 1) fail(ErrorCode::InvalidArity, "bound must be positive");
    const int bits = std::bit_width(bound - 1);
    if (bits > 30)
        fail(ErrorCode::BoundTooLarge, "bound needs " + std::to_string(bits) +
                                           " bits, limit is 30");
    if (bits == 0) return 0;
    for (;;) {
        Register r = m.allocate(bits);
        for (int b = 0; b < bits; ++b) m.applyH(r[b]);
        const std::uint64_t v = m.measure(r);
        if (v < bound) return v;
    }
}

std::uint64_t subsetCardinality(std::uint64_t N, std::uint64_t r, Machine& m) {
    if (N < 2) fail(ErrorCode::InvalidCardinality, "table must have at least 2 entries");
    std::uint64_t k;
    if (r >= 2) {
        k = static_cast<std::uint64_t>(
            std::ceil(std::cbrt(static_cast<double>(N) / static_cast<double>(r)) - 1e-9));
    } else {
        k = 1 + randomInt(m, N);
    }
    return std::clamp<std::uint64_t>(k, 2, N);
}

std::vector<std::uint64_t> generateSubset(Machine& m, const std::vector<std::uint64_t>& table,
                                          std::uint64_t k) {
    const std::uint64_t N = table.size();
    if (k < 2 || k > N)
        fail(ErrorCode::InvalidCardinality, "subset cardinality " + std::to_string(k) +
                                                " outside [2, " + std::to_string(N) + "]");
    // Partial Fisher-Yates over the index range, randomized quantum-side.
    std::vector<std::uint64_t> indices(N);
    std::iota(indices.begin(), indices.end(), 0);
    std::vector<std::uint64_t> subset;
    subset.reserve(k);
    for (std::uint64_t i = 0; i < k; ++i) {
        const std::uint64_t pick = i + randomInt(m, N - i);
        std::swap(indices[i], indices[pick]);
        subset.push_back(table[indices[i]]);
    }
    return subset;
}

SubsetTables generateLists(const std::vector<std::uint64_t>& subset, std::uint64_t k,
                           const ClassicalFn& F) {
    SubsetTables tables;
    tables.inputs.assign(subset.begin(), subset.begin() + static_cast<std::ptrdiff_t>(k));
    tables.outputs.reserve(k);
    for (std::uint64_t v : tables.inputs) tables.outputs.push_back(F(v));
    return tables;
}

std::optional<std::pair<std::uint64_t, std::uint64_t>> checkDoubles(const SubsetTables& tables) {
    for (std::size_t i = 0; i < tables.outputs.size(); ++i)
        for (std::size_t j = i + 1; j < tables.outputs.size(); ++j)
            if (tables.outputs[i] == tables.outputs[j] && tables.inputs[i] != tables.inputs[j])
                return std::make_pair(tables.inputs[i], tables.inputs[j]);
    return std::nullopt;
}

Oracle collisionOracle(const SubsetTables& tables, const std::vector<std::uint64_t>& table,
                       const ClassicalFn& F) {
    const std::uint64_t N = table.size();
    const int arity = std::max(1, static_cast<int>(std::bit_width(N - 1)));
    // Captures copies so the oracle outlives its construction arguments.
    auto predicate = [tables, table, F, N](std::uint64_t x) {
        if (x >= N) return false;
        const std::uint64_t fx = F(table[x]);
        for (std::size_t i = 0; i < tables.outputs.size(); ++i)
            if (tables.outputs[i] == fx && tables.inputs[i] != table[x]) return true;
        return false;
    };
    return Oracle{arity, predicate, OracleMode::AncillaBased};
}

CollisionResult findCollision(Machine& m, const CollisionInstance& inst) {
    const std::uint64_t N = inst.table.size();
    if (N < 2) fail(ErrorCode::InvalidCardinality, "table must have at least 2 entries");

    CollisionResult result;
    result.k = subsetCardinality(N, inst.r, m);
    const auto subset = generateSubset(m, inst.table, result.k);
    const auto tables = generateLists(subset, result.k, inst.F);
    result.classicalEvals = result.k;

    if (auto hit = checkDoubles(tables)) {
        result.first = hit->first;
        result.second = hit->second;
        result.earlyExit = true;
        return result;
    }

    const Oracle oracle = collisionOracle(tables, inst.table, inst.F);
    std::uint64_t t = inst.r >= 2 ? (inst.r - 1) * result.k : 1;
    t = std::min(t, std::uint64_t{1} << oracle.arity);

    const std::uint64_t queriesBefore = m.queryCount();
    const std::uint64_t pending = grover(m, oracle, t);
    result.groverQueries = m.queryCount() - queriesBefore;

    if (pending < N) {
        const std::uint64_t fp = inst.F(inst.table[pending]);
        for (std::uint64_t i = 0; i < result.k; ++i) {
            if (fp == tables.outputs[i] && inst.table[pending] != tables.inputs[i]) {
                result.first = inst.table[pending];
                result.second = tables.inputs[i];
                return result;
            }
        }
    }
    fail(ErrorCode::NoCollisionFound, "measured index " + std::to_string(pending) +
                                          " does not verify; retry with a new seed");
}

}  // namespace qsim

#include "mlt/bench.hpp"

#include <algorithm>
#include <chrono>
#include <limits>
#include <optional>
#include <stdexcept>

#include "mlt/linalg.hpp"

namespace mlt {

BenchResult bench_symmetrize(const LevelDims& shape, TransitionKind kind, std::size_t reps,
                             std::uint64_t seed) {
    if (reps == 0) throw std::invalid_argument("reps must be positive");
    using clock = std::chrono::steady_clock;
    auto seconds = [](clock::duration d) { return std::chrono::duration<double>(d).count(); };

    const ComplexMatrix t = to_dense(random_mltoeplitz(shape, seed));
    const TransitionPlan plan = build_transition(shape, kind);

    BenchResult result;
    result.dense_seconds = std::numeric_limits<double>::infinity();
    result.fast_seconds = std::numeric_limits<double>::infinity();
    std::optional<ComplexMatrix> dense_out;
    std::optional<ComplexMatrix> fast_out;
    for (std::size_t rep = 0; rep < reps; ++rep) {
        auto start = clock::now();
        const ComplexMatrix p = plan.dense();
        dense_out = matmul(adjoint(p), matmul(t, p));
        result.dense_seconds = std::min(result.dense_seconds, seconds(clock::now() - start));

        ApplyCounter counter;
        start = clock::now();
        fast_out = plan.apply(plan.apply(t, Side::Left, true, &counter), Side::Right, false, &counter);
        result.fast_seconds = std::min(result.fast_seconds, seconds(clock::now() - start));
        result.fast_multiply_adds = counter.multiply_adds;
    }
    result.deviation = max_abs_diff(*dense_out, *fast_out);
    return result;
}

}  // namespace mlt

#pragma once

#include <cstddef>
#include <cstdint>

#include "mlt/mltoeplitz.hpp"
#include "mlt/symmetrizer.hpp"

namespace mlt {

struct BenchResult {
    double dense_seconds = 0.0;  // best of reps
    double fast_seconds = 0.0;   // best of reps
    double deviation = 0.0;      // max |dense - fast| over entries
    std::uint64_t fast_multiply_adds = 0;
};

/// Times P^* T P for a random T of the given shape two ways: materializing
/// P and multiplying densely, and applying the Kronecker factors in place.
/// reps must be positive.
BenchResult bench_symmetrize(const LevelDims& shape, TransitionKind kind, std::size_t reps,
                             std::uint64_t seed);

}  // namespace mlt

#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "mlt/complex_matrix.hpp"
#include "mlt/mltoeplitz.hpp"

namespace mlt {

/// Which per-level unitary family builds the transition.
enum class TransitionKind {
    /// Parity-dependent pairing unitary: rows r <= m are (e_r + i e_{n+1-r})/sqrt2,
    /// rows r > m are (e_{n+1-r} - i e_r)/sqrt2, plus e_{m+1} as the middle
    /// row for odd n.
    ParityU,
    /// (I + iJ)/sqrt2 for every n.
    ExchangeV,
};

enum class Side { Left, Right };

/// n x n pairing unitary; n = 1 gives [[1]].
ComplexMatrix parity_unitary(std::size_t n);

/// (I_n + i J_n) / sqrt2.
ComplexMatrix exchange_unitary(std::size_t n);

ComplexMatrix level_unitary(std::size_t n, TransitionKind kind);

/// I_{n_p} (x) ... (x) B(n_level) (x) ... (x) I_{n_1}, materialized densely.
ComplexMatrix level_factor(const LevelDims& shape, std::size_t level, TransitionKind kind);

/// Tallies complex multiply-adds performed by TransitionPlan::apply.
struct ApplyCounter {
    std::uint64_t multiply_adds = 0;
};

/// One n_i x n_i Kronecker factor and the level slot it occupies.
struct LevelFactor {
    std::size_t level;
    ComplexMatrix block;
};

/// Product of per-level Kronecker factors. Factors in distinct slots commute,
/// so the product equals the Kronecker product of the blocks ordered
/// outermost level first. Levels without a factor act as identity.
class TransitionPlan {
public:
    TransitionPlan(LevelDims shape, TransitionKind kind, std::vector<LevelFactor> factors);

    const LevelDims& shape() const noexcept { return shape_; }
    TransitionKind kind() const noexcept { return kind_; }
    const std::vector<LevelFactor>& factors() const noexcept { return factors_; }

    /// The full s_p x s_p transition.
    ComplexMatrix dense() const;

    /// P x (Left) or x P (Right), with P replaced by its adjoint when
    /// `adjoint` is set. Each factor is applied along its tensor axis of the
    /// reshaped index, so no s_p x s_p operator is ever formed.
    ComplexMatrix apply(const ComplexMatrix& x, Side side, bool adjoint,
                        ApplyCounter* counter = nullptr) const;

    /// Plan restricted to the factors of levels 1..k.
    TransitionPlan leading(std::size_t k) const;

private:
    LevelDims shape_;
    TransitionKind kind_;
    std::vector<LevelFactor> factors_;
};

/// One factor per level, level 1 first.
TransitionPlan build_transition(const LevelDims& shape, TransitionKind kind);

/// P^* T P for the transition P of the given kind; complex symmetric.
ComplexMatrix symmetrize(const MultilevelToeplitz& t, TransitionKind kind);

/// Conjugation by the factors of levels 1..k only. k = 0 is the dense
/// expansion, k = p matches symmetrize.
ComplexMatrix symmetrize_partial(const MultilevelToeplitz& t, TransitionKind kind, std::size_t k);

/// Closed form of the exchange-family conjugation for a single level:
/// b_ij = (t_{i-j} + t_{j-i})/2 + i (t_{i+j-n-1} - t_{n+1-i-j})/2.
ComplexMatrix symmetrize_single_level(const MultilevelToeplitz& t);

}  // namespace mlt

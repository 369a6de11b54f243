#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "mlt/complex_matrix.hpp"
#include "mlt/linalg.hpp"

namespace mlt {

/// Level sizes (n_1, ..., n_p), innermost level first. Level 1 is the
/// fastest-varying index of the dense layout; level p selects the outermost
/// blocks.
class LevelDims {
public:
    explicit LevelDims(std::vector<std::size_t> dims);

    std::size_t levels() const noexcept { return dims_.size(); }

    /// n_i for 1 <= i <= p.
    std::size_t extent(std::size_t level) const;

    /// s_k = n_1 * ... * n_k, with s_0 = 1.
    std::size_t block_side(std::size_t k) const;

    std::size_t side() const noexcept { return block_side(dims_.size()); }

    /// Number of distinct offsets, prod (2 n_i - 1).
    std::size_t coeff_count() const noexcept;

    const std::vector<std::size_t>& dims() const noexcept { return dims_; }

    friend bool operator==(const LevelDims&, const LevelDims&) = default;

private:
    std::vector<std::size_t> dims_;
    std::vector<std::size_t> sides_;
};

/// Per-level offsets, ordered outermost first: (k_p, ..., k_1). Entry (i,j)
/// of a level carries offset i - j, so positive offsets sit below the
/// diagonal.
using Offset = std::vector<int>;

/// Compact p-level Toeplitz matrix: one coefficient per offset vector, stored
/// lexicographically over (k_p, ..., k_1) with k_1 varying fastest.
class MultilevelToeplitz {
public:
    /// All-zero coefficients.
    explicit MultilevelToeplitz(LevelDims shape);
    MultilevelToeplitz(LevelDims shape, std::vector<Complex> coeffs);

    const LevelDims& shape() const noexcept { return shape_; }
    std::span<const Complex> coeffs() const noexcept { return coeffs_; }
    std::span<Complex> coeffs() noexcept { return coeffs_; }

    Complex& at(std::span<const int> offset) { return coeffs_[index_of(offset)]; }
    const Complex& at(std::span<const int> offset) const { return coeffs_[index_of(offset)]; }
    Complex& at(std::initializer_list<int> offset) { return at(std::span{offset.begin(), offset.size()}); }
    const Complex& at(std::initializer_list<int> offset) const {
        return at(std::span{offset.begin(), offset.size()});
    }

    /// Storage index of an offset; throws std::out_of_range outside the
    /// valid hyper-rectangle.
    std::size_t index_of(std::span<const int> offset) const;
    Offset offset_of(std::size_t index) const;

    friend bool operator==(const MultilevelToeplitz&, const MultilevelToeplitz&) = default;

private:
    LevelDims shape_;
    std::vector<Complex> coeffs_;
};

ComplexMatrix to_dense(const MultilevelToeplitz& t);

/// Extracts the compact form from a dense matrix. Each coefficient comes from
/// the first row-major position realizing its offset; every other position
/// must agree within tol * max(1, max |a|) or NotToeplitz is thrown for the
/// worst offset.
MultilevelToeplitz from_dense(const ComplexMatrix& a, const LevelDims& shape, double tol = kDefaultTol);

StructureVerdict is_multilevel_toeplitz(const ComplexMatrix& a, const LevelDims& shape,
                                        double tol = kDefaultTol);

/// Coefficients with real and imaginary parts uniform in [-1, 1], drawn from
/// a 64-bit Mersenne Twister seeded with `seed`.
MultilevelToeplitz random_mltoeplitz(const LevelDims& shape, std::uint64_t seed);

}  // namespace mlt

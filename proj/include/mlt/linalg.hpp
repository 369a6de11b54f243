#pragma once

#include <cstddef>

#include "mlt/complex_matrix.hpp"

namespace mlt {

/// Default structure-check tolerance, scaled by max(1, max |entry|).
inline constexpr double kDefaultTol = 1e-10;

/// Outcome of a structure predicate. `defect` is the raw max-entry deviation;
/// `tol` is the threshold it was compared against after any scaling.
struct StructureVerdict {
    bool holds = false;
    double defect = 0.0;
    double tol = 0.0;

    explicit operator bool() const noexcept { return holds; }
};

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& a);
ComplexMatrix transpose(const ComplexMatrix& a);
ComplexMatrix conjugate(const ComplexMatrix& a);
ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix operator*(Complex s, const ComplexMatrix& a);

ComplexMatrix identity_matrix(std::size_t n);

/// Ones on the anti-diagonal, zeros elsewhere.
ComplexMatrix exchange_matrix(std::size_t n);

double max_abs(const ComplexMatrix& a);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& a);
Complex trace(const ComplexMatrix& a);

/// tol * max(1, max_abs(a)).
double scaled_tolerance(const ComplexMatrix& a, double tol);

/// Complex symmetry (a == a^T, no conjugation), relative to max(1, max |a|).
StructureVerdict is_symmetric(const ComplexMatrix& a, double tol = kDefaultTol);

/// Every block of the uniform block_side x block_side partition, off-diagonal
/// blocks included, equals its own transpose.
StructureVerdict is_blockwise_symmetric(const ComplexMatrix& a, std::size_t block_side,
                                        double tol = kDefaultTol);

/// max |a^* a - I| <= tol, unscaled.
StructureVerdict is_unitary(const ComplexMatrix& a, double tol = kDefaultTol);

}  // namespace mlt

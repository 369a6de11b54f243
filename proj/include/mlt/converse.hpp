#pragma once

#include <cstddef>
#include <vector>

#include "mlt/complex_matrix.hpp"
#include "mlt/linalg.hpp"
#include "mlt/mltoeplitz.hpp"
#include "mlt/symmetrizer.hpp"

namespace mlt {

/// p such that side == 2^p; throws NotPowerOfTwo otherwise (including side 1).
std::size_t binary_levels(std::size_t side);

/// Partitions a 2^p x 2^p matrix into 2^q x 2^q blocks ("q-level blocks")
/// and checks that each block's main anti-diagonal is constant. The defect
/// is the largest spread between two entries of one such anti-diagonal.
StructureVerdict has_q_level_constant_antidiagonals(const ComplexMatrix& s, std::size_t q,
                                                    double tol = kDefaultTol);

/// Every q-level block equals its own transpose.
StructureVerdict has_symmetric_q_level_blocks(const ComplexMatrix& s, std::size_t q,
                                              double tol = kDefaultTol);

struct AntiDiagReport {
    std::size_t levels = 0;
    /// Anti-diagonal defect for q = 1..levels (index q-1).
    std::vector<double> level_defects;
    double symmetry_defect = 0.0;
    bool symmetric = false;
    double tol = 0.0;  // after scaling

    bool passes() const;
};

/// Symmetry plus q-level anti-diagonal constancy for every q = 1..p.
AntiDiagReport check_antidiagonals(const ComplexMatrix& s, double tol = kDefaultTol);

/// The parity transition for level dims (2, ..., 2).
TransitionPlan binary_transition(std::size_t p);

/// Recovers T with S = P^* T P for the binary parity transition P.
///
/// Requires S symmetric with constant anti-diagonals at each level; those
/// conditions are necessary but, for p >= 3, not sufficient. The condition
/// that is also sufficient is that every q-level block (q < p) is itself
/// symmetric, and that is checked too.
///
/// Throws NotPowerOfTwo, NotSymmetric, NotConstantAntidiagonal (largest
/// failing q first) or NotBlockSymmetric.
MultilevelToeplitz desymmetrize(const ComplexMatrix& s, double tol = kDefaultTol);

}  // namespace mlt

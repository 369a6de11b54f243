#include "mlt/converse.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <string>

#include "mlt/errors.hpp"

namespace mlt {

namespace {

std::size_t checked_block_side(const ComplexMatrix& s, std::size_t q) {
    if (!s.is_square()) {
        throw ShapeMismatch("expected a square matrix");
    }
    const std::size_t p = binary_levels(s.rows());
    if (q == 0 || q > p) {
        throw std::out_of_range("block level q=" + std::to_string(q) + " outside 1.." + std::to_string(p));
    }
    return std::size_t{1} << q;
}

}  // namespace

std::size_t binary_levels(std::size_t side) {
    if (side < 2 || !std::has_single_bit(side)) {
        throw NotPowerOfTwo(side);
    }
    return static_cast<std::size_t>(std::countr_zero(side));
}

StructureVerdict has_q_level_constant_antidiagonals(const ComplexMatrix& s, std::size_t q, double tol) {
    const std::size_t b = checked_block_side(s, q);
    double defect = 0.0;
    for (std::size_t r0 = 0; r0 < s.rows(); r0 += b) {
        for (std::size_t c0 = 0; c0 < s.cols(); c0 += b) {
            for (std::size_t a = 0; a < b; ++a) {
                const Complex x = s(r0 + a, c0 + b - 1 - a);
                for (std::size_t a2 = a + 1; a2 < b; ++a2) {
                    defect = std::max(defect, std::abs(x - s(r0 + a2, c0 + b - 1 - a2)));
                }
            }
        }
    }
    const double threshold = scaled_tolerance(s, tol);
    return {defect <= threshold, defect, threshold};
}

StructureVerdict has_symmetric_q_level_blocks(const ComplexMatrix& s, std::size_t q, double tol) {
    return is_blockwise_symmetric(s, checked_block_side(s, q), tol);
}

bool AntiDiagReport::passes() const {
    return symmetric && std::all_of(level_defects.begin(), level_defects.end(),
                                    [this](double d) { return d <= tol; });
}

AntiDiagReport check_antidiagonals(const ComplexMatrix& s, double tol) {
    if (!s.is_square()) {
        throw ShapeMismatch("expected a square matrix");
    }
    AntiDiagReport report;
    report.levels = binary_levels(s.rows());
    const StructureVerdict sym = is_symmetric(s, tol);
    report.symmetric = sym.holds;
    report.symmetry_defect = sym.defect;
    report.tol = sym.tol;
    for (std::size_t q = 1; q <= report.levels; ++q) {
        report.level_defects.push_back(has_q_level_constant_antidiagonals(s, q, tol).defect);
    }
    return report;
}

TransitionPlan binary_transition(std::size_t p) {
    if (p == 0) throw std::invalid_argument("binary transition needs at least one level");
    return build_transition(LevelDims(std::vector<std::size_t>(p, 2)), TransitionKind::ParityU);
}

MultilevelToeplitz desymmetrize(const ComplexMatrix& s, double tol) {
    if (!s.is_square()) {
        throw ShapeMismatch("expected a square matrix");
    }
    const AntiDiagReport report = check_antidiagonals(s, tol);
    if (!report.symmetric) {
        throw NotSymmetric(report.symmetry_defect);
    }
    for (std::size_t q = report.levels; q >= 1; --q) {
        if (report.level_defects[q - 1] > report.tol) {
            throw NotConstantAntidiagonal(q, report.level_defects[q - 1]);
        }
    }
    for (std::size_t q = report.levels - 1; q >= 1; --q) {
        const StructureVerdict v = has_symmetric_q_level_blocks(s, q, tol);
        if (!v.holds) {
            throw NotBlockSymmetric(q, v.defect);
        }
    }
    const TransitionPlan plan = binary_transition(report.levels);
    const ComplexMatrix t = plan.apply(plan.apply(s, Side::Left, false), Side::Right, true);
    return from_dense(t, plan.shape(), tol);
}

}  // namespace mlt

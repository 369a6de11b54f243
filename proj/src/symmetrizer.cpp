#include "mlt/symmetrizer.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>
#include <string>

#include "mlt/errors.hpp"
#include "mlt/linalg.hpp"

namespace mlt {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kInvSqrt2 = 1.0 / std::numbers::sqrt2;

// y = (I_outer (x) m (x) I_stride) x, i.e. m acts on the index digit with
// the given stride. x is processed row-wise so the inner loop runs over
// contiguous columns.
ComplexMatrix apply_along_axis(const ComplexMatrix& x, const ComplexMatrix& m, std::size_t stride,
                               ApplyCounter* counter) {
    const std::size_t n = m.rows();
    const std::size_t span = stride * n;
    const std::size_t width = x.cols();
    ComplexMatrix y(x.rows(), width);
    std::uint64_t ops = 0;
    for (std::size_t outer = 0; outer < x.rows(); outer += span) {
        for (std::size_t inner = 0; inner < stride; ++inner) {
            const std::size_t base = outer + inner;
            for (std::size_t a = 0; a < n; ++a) {
                Complex* out = y.row(base + a * stride).data();
                for (std::size_t b = 0; b < n; ++b) {
                    const Complex s = m(a, b);
                    if (s == Complex{}) continue;
                    const double sr = s.real();
                    const double si = s.imag();
                    const Complex* in = x.row(base + b * stride).data();
                    for (std::size_t j = 0; j < width; ++j) {
                        const double xr = in[j].real();
                        const double xi = in[j].imag();
                        out[j] = {out[j].real() + sr * xr - si * xi, out[j].imag() + sr * xi + si * xr};
                    }
                    ops += width;
                }
            }
        }
    }
    if (counter) counter->multiply_adds += ops;
    return y;
}

}  // namespace

ComplexMatrix parity_unitary(std::size_t n) {
    if (n == 0) throw std::invalid_argument("unitary size must be positive");
    ComplexMatrix u(n, n);
    if (n == 1) {
        u(0, 0) = 1.0;
        return u;
    }
    const std::size_t m = n / 2;
    for (std::size_t r = 0; r < m; ++r) {
        const std::size_t mirror = n - 1 - r;
        u(r, r) = kInvSqrt2;
        u(r, mirror) = kI * kInvSqrt2;
        u(mirror, r) = kInvSqrt2;
        u(mirror, mirror) = -kI * kInvSqrt2;
    }
    if (n % 2 == 1) u(m, m) = 1.0;
    return u;
}

ComplexMatrix exchange_unitary(std::size_t n) {
    if (n == 0) throw std::invalid_argument("unitary size must be positive");
    ComplexMatrix v(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        v(r, r) += kInvSqrt2;
        v(r, n - 1 - r) += kI * kInvSqrt2;
    }
    return v;
}

ComplexMatrix level_unitary(std::size_t n, TransitionKind kind) {
    return kind == TransitionKind::ParityU ? parity_unitary(n) : exchange_unitary(n);
}

ComplexMatrix level_factor(const LevelDims& shape, std::size_t level, TransitionKind kind) {
    const std::size_t n = shape.extent(level);
    const std::size_t inner = shape.block_side(level - 1);
    const std::size_t outer = shape.side() / (inner * n);
    return kron(identity_matrix(outer), kron(level_unitary(n, kind), identity_matrix(inner)));
}

TransitionPlan::TransitionPlan(LevelDims shape, TransitionKind kind, std::vector<LevelFactor> factors)
    : shape_(std::move(shape)), kind_(kind), factors_(std::move(factors)) {
    std::sort(factors_.begin(), factors_.end(),
              [](const LevelFactor& a, const LevelFactor& b) { return a.level < b.level; });
    for (std::size_t i = 0; i < factors_.size(); ++i) {
        const auto& f = factors_[i];
        const std::size_t n = shape_.extent(f.level);
        if (f.block.rows() != n || f.block.cols() != n) {
            throw ShapeMismatch("factor for level " + std::to_string(f.level) + " must be " +
                                std::to_string(n) + "x" + std::to_string(n));
        }
        if (i > 0 && factors_[i - 1].level == f.level) {
            throw std::invalid_argument("duplicate factor for level " + std::to_string(f.level));
        }
    }
}

ComplexMatrix TransitionPlan::dense() const {
    ComplexMatrix out = identity_matrix(1);
    auto next = factors_.rbegin();
    for (std::size_t level = shape_.levels(); level >= 1; --level) {
        if (next != factors_.rend() && next->level == level) {
            out = kron(out, next->block);
            ++next;
        } else {
            out = kron(out, identity_matrix(shape_.extent(level)));
        }
    }
    return out;
}

ComplexMatrix TransitionPlan::apply(const ComplexMatrix& x, Side side, bool adjoint_op,
                                    ApplyCounter* counter) const {
    const std::size_t n = shape_.side();
    if (side == Side::Left) {
        if (x.rows() != n) {
            throw ShapeMismatch("apply: left operand needs " + std::to_string(n) + " rows, got " +
                                std::to_string(x.rows()));
        }
        ComplexMatrix cur = x;
        for (const auto& f : factors_) {
            const ComplexMatrix m = adjoint_op ? adjoint(f.block) : f.block;
            cur = apply_along_axis(cur, m, shape_.block_side(f.level - 1), counter);
        }
        return cur;
    }
    if (x.cols() != n) {
        throw ShapeMismatch("apply: right operand needs " + std::to_string(n) + " columns, got " +
                            std::to_string(x.cols()));
    }
    // x P = (P^T x^T)^T, and P^T (resp. conj P) factors blockwise.
    ComplexMatrix cur = transpose(x);
    for (const auto& f : factors_) {
        const ComplexMatrix m = adjoint_op ? conjugate(f.block) : transpose(f.block);
        cur = apply_along_axis(cur, m, shape_.block_side(f.level - 1), counter);
    }
    return transpose(cur);
}

TransitionPlan TransitionPlan::leading(std::size_t k) const {
    if (k > shape_.levels()) {
        throw std::out_of_range("level " + std::to_string(k) + " exceeds " + std::to_string(shape_.levels()));
    }
    std::vector<LevelFactor> kept;
    for (const auto& f : factors_) {
        if (f.level <= k) kept.push_back(f);
    }
    return TransitionPlan(shape_, kind_, std::move(kept));
}

TransitionPlan build_transition(const LevelDims& shape, TransitionKind kind) {
    std::vector<LevelFactor> factors;
    factors.reserve(shape.levels());
    for (std::size_t level = 1; level <= shape.levels(); ++level) {
        factors.push_back({level, level_unitary(shape.extent(level), kind)});
    }
    return TransitionPlan(shape, kind, std::move(factors));
}

ComplexMatrix symmetrize(const MultilevelToeplitz& t, TransitionKind kind) {
    return symmetrize_partial(t, kind, t.shape().levels());
}

ComplexMatrix symmetrize_partial(const MultilevelToeplitz& t, TransitionKind kind, std::size_t k) {
    const TransitionPlan plan = build_transition(t.shape(), kind).leading(k);
    const ComplexMatrix left = plan.apply(to_dense(t), Side::Left, true);
    return plan.apply(left, Side::Right, false);
}

ComplexMatrix symmetrize_single_level(const MultilevelToeplitz& t) {
    if (t.shape().levels() != 1) {
        throw ShapeMismatch("closed-form symmetrization needs a single-level matrix, got " +
                            std::to_string(t.shape().levels()) + " levels");
    }
    const int n = static_cast<int>(t.shape().side());
    auto coeff = [&t](int k) { return t.at({k}); };
    ComplexMatrix b(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
    for (int i = 1; i <= n; ++i) {
        for (int j = 1; j <= n; ++j) {
            b(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) =
                0.5 * (coeff(i - j) + coeff(j - i)) + 0.5 * kI * (coeff(i + j - n - 1) - coeff(n + 1 - i - j));
        }
    }
    return b;
}

}  // namespace mlt

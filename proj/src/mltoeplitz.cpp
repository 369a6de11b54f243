#include "mlt/mltoeplitz.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>
#include <string>

#include "mlt/errors.hpp"

namespace mlt {

namespace {

// Strides of each level in coefficient storage, level 1 first.
std::vector<std::size_t> coeff_strides(const LevelDims& shape) {
    std::vector<std::size_t> strides(shape.levels());
    std::size_t s = 1;
    for (std::size_t i = 0; i < shape.levels(); ++i) {
        strides[i] = s;
        s *= 2 * shape.dims()[i] - 1;
    }
    return strides;
}

// For a dense row/column index, sum_i digit_i * stride_i. The coefficient
// index of entry (r, c) is then key[r] - key[c] + base.
struct OffsetKeys {
    std::vector<std::ptrdiff_t> key;
    std::ptrdiff_t base = 0;
};

OffsetKeys offset_keys(const LevelDims& shape) {
    const auto strides = coeff_strides(shape);
    OffsetKeys out;
    out.key.assign(shape.side(), 0);
    for (std::size_t idx = 0; idx < shape.side(); ++idx) {
        std::size_t rest = idx;
        std::ptrdiff_t k = 0;
        for (std::size_t i = 0; i < shape.levels(); ++i) {
            const std::size_t n = shape.dims()[i];
            k += static_cast<std::ptrdiff_t>((rest % n) * strides[i]);
            rest /= n;
        }
        out.key[idx] = k;
    }
    for (std::size_t i = 0; i < shape.levels(); ++i) {
        out.base += static_cast<std::ptrdiff_t>((shape.dims()[i] - 1) * strides[i]);
    }
    return out;
}

void require_side(const ComplexMatrix& a, const LevelDims& shape) {
    if (!a.is_square() || a.rows() != shape.side()) {
        throw ShapeMismatch("matrix is " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) +
                            ", level dims describe side " + std::to_string(shape.side()));
    }
}

struct ScanResult {
    std::vector<Complex> coeffs;
    std::vector<double> defects;
};

ScanResult scan(const ComplexMatrix& a, const LevelDims& shape) {
    const OffsetKeys keys = offset_keys(shape);
    ScanResult out;
    out.coeffs.assign(shape.coeff_count(), Complex{});
    out.defects.assign(shape.coeff_count(), 0.0);
    std::vector<bool> seen(shape.coeff_count(), false);
    for (std::size_t r = 0; r < a.rows(); ++r) {
        for (std::size_t c = 0; c < a.cols(); ++c) {
            const auto idx = static_cast<std::size_t>(keys.key[r] - keys.key[c] + keys.base);
            if (!seen[idx]) {
                seen[idx] = true;
                out.coeffs[idx] = a(r, c);
            } else {
                out.defects[idx] = std::max(out.defects[idx], std::abs(a(r, c) - out.coeffs[idx]));
            }
        }
    }
    return out;
}

}  // namespace

LevelDims::LevelDims(std::vector<std::size_t> dims) : dims_(std::move(dims)) {
    if (dims_.empty()) {
        throw std::invalid_argument("level dims must name at least one level");
    }
    sides_.reserve(dims_.size() + 1);
    sides_.push_back(1);
    for (auto n : dims_) {
        if (n == 0) {
            throw std::invalid_argument("level sizes must be positive");
        }
        sides_.push_back(sides_.back() * n);
    }
}

std::size_t LevelDims::extent(std::size_t level) const {
    if (level == 0 || level > dims_.size()) {
        throw std::out_of_range("level " + std::to_string(level) + " outside 1.." +
                                std::to_string(dims_.size()));
    }
    return dims_[level - 1];
}

std::size_t LevelDims::block_side(std::size_t k) const {
    if (k > dims_.size()) {
        throw std::out_of_range("block level " + std::to_string(k) + " exceeds " +
                                std::to_string(dims_.size()));
    }
    return sides_[k];
}

std::size_t LevelDims::coeff_count() const noexcept {
    std::size_t count = 1;
    for (auto n : dims_) count *= 2 * n - 1;
    return count;
}

MultilevelToeplitz::MultilevelToeplitz(LevelDims shape)
    : shape_(std::move(shape)), coeffs_(shape_.coeff_count()) {}

MultilevelToeplitz::MultilevelToeplitz(LevelDims shape, std::vector<Complex> coeffs)
    : shape_(std::move(shape)), coeffs_(std::move(coeffs)) {
    if (coeffs_.size() != shape_.coeff_count()) {
        throw ShapeMismatch("expected " + std::to_string(shape_.coeff_count()) + " coefficients, got " +
                            std::to_string(coeffs_.size()));
    }
    for (const auto& z : coeffs_) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
            throw NonFiniteEntry("coefficients must be finite");
        }
    }
}

std::size_t MultilevelToeplitz::index_of(std::span<const int> offset) const {
    const std::size_t p = shape_.levels();
    if (offset.size() != p) {
        throw std::out_of_range("offset has " + std::to_string(offset.size()) + " components, expected " +
                                std::to_string(p));
    }
    std::size_t index = 0;
    std::size_t stride = 1;
    for (std::size_t level = 1; level <= p; ++level) {
        const int n = static_cast<int>(shape_.extent(level));
        const int k = offset[p - level];
        if (k <= -n || k >= n) {
            throw std::out_of_range("offset component " + std::to_string(k) + " outside level " +
                                    std::to_string(level) + " range");
        }
        index += static_cast<std::size_t>(k + n - 1) * stride;
        stride *= static_cast<std::size_t>(2 * n - 1);
    }
    return index;
}

Offset MultilevelToeplitz::offset_of(std::size_t index) const {
    if (index >= coeffs_.size()) {
        throw std::out_of_range("coefficient index out of range");
    }
    const std::size_t p = shape_.levels();
    Offset offset(p);
    for (std::size_t level = 1; level <= p; ++level) {
        const std::size_t width = 2 * shape_.extent(level) - 1;
        offset[p - level] = static_cast<int>(index % width) - static_cast<int>(shape_.extent(level) - 1);
        index /= width;
    }
    return offset;
}

ComplexMatrix to_dense(const MultilevelToeplitz& t) {
    const OffsetKeys keys = offset_keys(t.shape());
    const std::size_t n = t.shape().side();
    const auto coeffs = t.coeffs();
    ComplexMatrix out(n, n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c) {
            out(r, c) = coeffs[static_cast<std::size_t>(keys.key[r] - keys.key[c] + keys.base)];
        }
    }
    return out;
}

MultilevelToeplitz from_dense(const ComplexMatrix& a, const LevelDims& shape, double tol) {
    require_side(a, shape);
    ScanResult s = scan(a, shape);
    const double threshold = scaled_tolerance(a, tol);
    const auto worst = std::max_element(s.defects.begin(), s.defects.end());
    MultilevelToeplitz t(shape, std::move(s.coeffs));
    if (*worst > threshold) {
        throw NotToeplitz(t.offset_of(static_cast<std::size_t>(worst - s.defects.begin())), *worst);
    }
    return t;
}

StructureVerdict is_multilevel_toeplitz(const ComplexMatrix& a, const LevelDims& shape, double tol) {
    require_side(a, shape);
    const ScanResult s = scan(a, shape);
    const double defect = *std::max_element(s.defects.begin(), s.defects.end());
    const double threshold = scaled_tolerance(a, tol);
    return {defect <= threshold, defect, threshold};
}

MultilevelToeplitz random_mltoeplitz(const LevelDims& shape, std::uint64_t seed) {
    std::mt19937_64 gen(seed);
    // Top 53 bits -> [0, 1), mapped to [-1, 1]. Spelled out rather than using
    // uniform_real_distribution so files are identical across standard libraries.
    auto draw = [&gen] { return 2.0 * static_cast<double>(gen() >> 11) * 0x1.0p-53 - 1.0; };
    std::vector<Complex> coeffs(shape.coeff_count());
    for (auto& z : coeffs) {
        const double re = draw();
        const double im = draw();
        z = {re, im};
    }
    return MultilevelToeplitz(shape, std::move(coeffs));
}

}  // namespace mlt

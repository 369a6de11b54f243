#include "mlt/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "mlt/errors.hpp"

namespace mlt {

namespace {

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

void require_square(const ComplexMatrix& a, const char* op) {
    if (!a.is_square()) {
        throw ShapeMismatch(std::string(op) + ": matrix is " + std::to_string(a.rows()) + "x" +
                            std::to_string(a.cols()) + ", expected square");
    }
}

void require_same_shape(const ComplexMatrix& a, const ComplexMatrix& b, const char* op) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) {
        throw ShapeMismatch(std::string(op) + ": shapes differ");
    }
}

}  // namespace

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols)
    : ComplexMatrix(rows, cols, std::vector<Complex>(rows * cols)) {}

ComplexMatrix::ComplexMatrix(std::size_t rows, std::size_t cols, std::vector<Complex> data)
    : rows_(rows), cols_(cols), data_(std::move(data)) {
    if (rows_ == 0 || cols_ == 0) {
        throw ShapeMismatch("matrix dimensions must be positive");
    }
    if (data_.size() != rows_ * cols_) {
        throw ShapeMismatch("data length " + std::to_string(data_.size()) + " does not match " +
                            std::to_string(rows_) + "x" + std::to_string(cols_));
    }
    if (!std::all_of(data_.begin(), data_.end(), finite)) {
        throw NonFiniteEntry("matrix entries must be finite");
    }
}

ComplexMatrix ComplexMatrix::from_rows(std::initializer_list<std::initializer_list<Complex>> rows) {
    const std::size_t r = rows.size();
    const std::size_t c = r ? rows.begin()->size() : 0;
    std::vector<Complex> data;
    data.reserve(r * c);
    for (const auto& row : rows) {
        if (row.size() != c) {
            throw ShapeMismatch("ragged row list");
        }
        data.insert(data.end(), row.begin(), row.end());
    }
    return ComplexMatrix(r, c, std::move(data));
}

ComplexMatrix matmul(const ComplexMatrix& a, const ComplexMatrix& b) {
    if (a.cols() != b.rows()) {
        throw ShapeMismatch("matmul: inner dimensions " + std::to_string(a.cols()) + " and " +
                            std::to_string(b.rows()) + " differ");
    }
    const std::size_t n = b.cols();
    ComplexMatrix c(a.rows(), n);
    // i-k-j order with explicit real arithmetic; std::complex operator* pays
    // for Annex G inf/nan recovery that finite inputs never need.
    for (std::size_t i = 0; i < a.rows(); ++i) {
        Complex* out = c.row(i).data();
        for (std::size_t k = 0; k < a.cols(); ++k) {
            const Complex s = a(i, k);
            if (s == Complex{}) continue;
            const double sr = s.real();
            const double si = s.imag();
            const Complex* in = b.row(k).data();
            for (std::size_t j = 0; j < n; ++j) {
                const double br = in[j].real();
                const double bi = in[j].imag();
                out[j] = {out[j].real() + sr * br - si * bi, out[j].imag() + sr * bi + si * br};
            }
        }
    }
    return c;
}

ComplexMatrix adjoint(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = std::conj(a(i, j));
        }
    }
    return out;
}

ComplexMatrix transpose(const ComplexMatrix& a) {
    ComplexMatrix out(a.cols(), a.rows());
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            out(j, i) = a(i, j);
        }
    }
    return out;
}

ComplexMatrix conjugate(const ComplexMatrix& a) {
    ComplexMatrix out = a;
    for (auto& z : out.data()) z = std::conj(z);
    return out;
}

ComplexMatrix kron(const ComplexMatrix& a, const ComplexMatrix& b) {
    ComplexMatrix out(a.rows() * b.rows(), a.cols() * b.cols());
    for (std::size_t p = 0; p < a.rows(); ++p) {
        for (std::size_t q = 0; q < a.cols(); ++q) {
            const Complex s = a(p, q);
            if (s == Complex{}) continue;
            for (std::size_t r = 0; r < b.rows(); ++r) {
                for (std::size_t c = 0; c < b.cols(); ++c) {
                    out(p * b.rows() + r, q * b.cols() + c) = s * b(r, c);
                }
            }
        }
    }
    return out;
}

ComplexMatrix operator+(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "add");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] += b.data()[i];
    return out;
}

ComplexMatrix operator-(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "subtract");
    ComplexMatrix out = a;
    for (std::size_t i = 0; i < out.data().size(); ++i) out.data()[i] -= b.data()[i];
    return out;
}

ComplexMatrix operator*(Complex s, const ComplexMatrix& a) {
    ComplexMatrix out = a;
    for (auto& z : out.data()) z *= s;
    return out;
}

ComplexMatrix identity_matrix(std::size_t n) {
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, i) = 1.0;
    return out;
}

ComplexMatrix exchange_matrix(std::size_t n) {
    ComplexMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) out(i, n - 1 - i) = 1.0;
    return out;
}

double max_abs(const ComplexMatrix& a) {
    double m = 0.0;
    for (const auto& z : a.data()) m = std::max(m, std::abs(z));
    return m;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
    require_same_shape(a, b, "max_abs_diff");
    double m = 0.0;
    for (std::size_t i = 0; i < a.data().size(); ++i) {
        m = std::max(m, std::abs(a.data()[i] - b.data()[i]));
    }
    return m;
}

double frobenius_norm(const ComplexMatrix& a) {
    double s = 0.0;
    for (const auto& z : a.data()) s += std::norm(z);
    return std::sqrt(s);
}

Complex trace(const ComplexMatrix& a) {
    require_square(a, "trace");
    Complex s{};
    for (std::size_t i = 0; i < a.rows(); ++i) s += a(i, i);
    return s;
}

double scaled_tolerance(const ComplexMatrix& a, double tol) {
    return tol * std::max(1.0, max_abs(a));
}

StructureVerdict is_symmetric(const ComplexMatrix& a, double tol) {
    require_square(a, "is_symmetric");
    double defect = 0.0;
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = i + 1; j < a.cols(); ++j) {
            defect = std::max(defect, std::abs(a(i, j) - a(j, i)));
        }
    }
    const double threshold = scaled_tolerance(a, tol);
    return {defect <= threshold, defect, threshold};
}

StructureVerdict is_blockwise_symmetric(const ComplexMatrix& a, std::size_t block_side, double tol) {
    require_square(a, "is_blockwise_symmetric");
    if (block_side == 0 || a.rows() % block_side != 0) {
        throw ShapeMismatch("block side " + std::to_string(block_side) + " does not divide " +
                            std::to_string(a.rows()));
    }
    double defect = 0.0;
    for (std::size_t r0 = 0; r0 < a.rows(); r0 += block_side) {
        for (std::size_t c0 = 0; c0 < a.cols(); c0 += block_side) {
            for (std::size_t i = 0; i < block_side; ++i) {
                for (std::size_t j = i + 1; j < block_side; ++j) {
                    defect = std::max(defect, std::abs(a(r0 + i, c0 + j) - a(r0 + j, c0 + i)));
                }
            }
        }
    }
    const double threshold = scaled_tolerance(a, tol);
    return {defect <= threshold, defect, threshold};
}

StructureVerdict is_unitary(const ComplexMatrix& a, double tol) {
    require_square(a, "is_unitary");
    const ComplexMatrix gram = matmul(adjoint(a), a);
    const double defect = max_abs_diff(gram, identity_matrix(a.rows()));
    return {defect <= tol, defect, tol};
}

}  // namespace mlt

#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace mlt {

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

class ShapeMismatch : public Error {
public:
    using Error::Error;
};

class NonFiniteEntry : public Error {
public:
    using Error::Error;
};

/// A dense matrix does not have the requested multilevel Toeplitz structure.
/// `offset` is ordered outermost level first (k_p, ..., k_1).
class NotToeplitz : public Error {
public:
    NotToeplitz(std::vector<int> offset, double defect);

    const std::vector<int>& offset() const noexcept { return offset_; }
    double defect() const noexcept { return defect_; }

private:
    std::vector<int> offset_;
    double defect_;
};

class NotSymmetric : public Error {
public:
    explicit NotSymmetric(double defect);
    double defect() const noexcept { return defect_; }

private:
    double defect_;
};

/// Some q-level block has a non-constant main anti-diagonal.
class NotConstantAntidiagonal : public Error {
public:
    NotConstantAntidiagonal(std::size_t level, double defect);
    std::size_t level() const noexcept { return level_; }
    double defect() const noexcept { return defect_; }

private:
    std::size_t level_;
    double defect_;
};

/// Some q-level block is not itself symmetric.
class NotBlockSymmetric : public Error {
public:
    NotBlockSymmetric(std::size_t level, double defect);
    std::size_t level() const noexcept { return level_; }
    double defect() const noexcept { return defect_; }

private:
    std::size_t level_;
    double defect_;
};

class NotPowerOfTwo : public Error {
public:
    explicit NotPowerOfTwo(std::size_t side);
    std::size_t side() const noexcept { return side_; }

private:
    std::size_t side_;
};

/// Malformed matrix file contents.
class FormatError : public Error {
public:
    using Error::Error;
};

class IoError : public Error {
public:
    using Error::Error;
};

}  // namespace mlt

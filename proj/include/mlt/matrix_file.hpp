#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include "mlt/complex_matrix.hpp"
#include "mlt/mltoeplitz.hpp"

namespace mlt {

/// Contents of a matrix file: either a dense matrix or a compact multilevel
/// Toeplitz matrix.
///
/// Dense:      {"kind":"dense","rows":N,"cols":M,"data":[[re,im],...]}   (row-major)
/// Multilevel: {"kind":"mltoeplitz","dims":[n1,...,np],
///              "coeffs":[{"offset":[kp,...,k1],"value":[re,im]},...]}
///
/// Numbers are written with 17 significant digits so parsing returns the
/// identical doubles.
using MatrixFile = std::variant<ComplexMatrix, MultilevelToeplitz>;

std::string serialize(const ComplexMatrix& a);
std::string serialize(const MultilevelToeplitz& t);
std::string serialize(const MatrixFile& f);

/// Throws FormatError on malformed JSON or schema violations.
MatrixFile parse_matrix_file(std::string_view text);

/// Throws IoError when the file cannot be read, FormatError on bad contents.
MatrixFile read_matrix_file(const std::filesystem::path& path);

/// Throws IoError on write failure.
void write_matrix_file(const std::filesystem::path& path, const MatrixFile& f);

}  // namespace mlt

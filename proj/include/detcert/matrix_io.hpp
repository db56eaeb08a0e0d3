#pragma once

#include <string>
#include <string_view>

#include "detcert/binary_matrix.hpp"

namespace detcert {

// Wire formats for square matrices:
//   grid01 - lines of '0'/'1' characters, one row per line, square
//   gridpm - lines of '+'/'-' characters ('+' = +1, '-' = -1)
//   pbm    - ASCII PBM (P1); bit 1 (black) is entry 1, bit 0 (white) is
//            entry 0 in 0/1 mode and entry -1 in +/-1 mode
enum class MatrixFormat { Grid01, GridPm, Pbm };

// Returns the enum for "grid01" / "gridpm" / "pbm", throws
// std::invalid_argument otherwise.
MatrixFormat matrix_format_from_name(std::string_view name);
std::string_view matrix_format_name(MatrixFormat format);

Matrix01 parse_grid01(std::string_view text);
MatrixPM1 parse_gridpm(std::string_view text);
Matrix01 parse_pbm_01(std::string_view text);
MatrixPM1 parse_pbm_pm1(std::string_view text);

// Convenience dispatchers: Grid01/Pbm for 0/1 matrices, GridPm/Pbm for +/-1.
// Throw std::invalid_argument for a format that cannot carry the value set.
Matrix01 parse_matrix_01(std::string_view text, MatrixFormat format);
MatrixPM1 parse_matrix_pm1(std::string_view text, MatrixFormat format);

std::string serialize_grid01(const Matrix01& m);
std::string serialize_gridpm(const MatrixPM1& m);
std::string export_pbm(const Matrix01& m);
std::string export_pbm(const MatrixPM1& m);

std::string serialize_matrix(const Matrix01& m, MatrixFormat format);
std::string serialize_matrix(const MatrixPM1& m, MatrixFormat format);

}  // namespace detcert

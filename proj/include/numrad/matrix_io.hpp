#pragma once

#include <string>

#include "numrad/matrix.hpp"

namespace numrad {

// Parses a matrix from its JSON text form:
//   {"rows": n, "cols": m, "entries": [[re, im], ...]}
// with entries row-major. Parsing is strict: the entry count must equal
// n*m, rows/cols must be positive integers, and every component must be
// finite. Throws std::runtime_error describing the first problem found.
ComplexMatrix parse_matrix_json(const std::string& text);

// Inverse of parse_matrix_json (two-space indented, trailing newline).
std::string matrix_to_json(const ComplexMatrix& m);

// Reads and parses a matrix file; error messages carry the path.
ComplexMatrix load_matrix_file(const std::string& path);

// Reads a whole file into a string, throwing std::runtime_error if it
// cannot be opened. Shared by the matrix and edge-list loaders.
std::string read_text_file(const std::string& path);

} // namespace numrad

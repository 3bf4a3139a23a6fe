#pragma once

#include <filesystem>
#include <iosfwd>

#include "bmat/matrix.hpp"

namespace bmat {

// Matrix text format:
//
//   # optional comment lines anywhere
//   n
//   m11 m12 ... m1n
//   ...
//   mn1 mn2 ... mnn
//
// A file whose first data line contains a comma is read as CSV instead:
// n rows of n comma-separated values, n taken from the first row.
// Throws ParseError naming the 1-based line on malformed input.
SquareMatrix read_matrix(std::istream& in);
SquareMatrix read_matrix_file(const std::filesystem::path& path);

// Writes the whitespace format with shortest round-trip decimals.
void write_matrix(std::ostream& out, const SquareMatrix& m);

// One line of whitespace-separated decimals; `#` comment lines allowed.
Vector read_vector(std::istream& in);
Vector read_vector_file(const std::filesystem::path& path);

}  // namespace bmat

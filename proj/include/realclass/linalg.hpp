#pragma once

// Small dense matrices over Q.

#include <cstddef>
#include <vector>

#include "realclass/rational.hpp"

namespace realclass {

using Matrix = std::vector<std::vector<Rational>>;

Matrix identity_matrix(std::size_t n);
Matrix zero_matrix(std::size_t rows, std::size_t cols);
Matrix transpose(const Matrix& m);
Matrix multiply(const Matrix& a, const Matrix& b);
std::size_t rank(Matrix m);
Rational determinant(Matrix m);
// Throws std::invalid_argument when m is singular.
Matrix inverse(const Matrix& m);
bool is_symmetric(const Matrix& m);

}  // namespace realclass

// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "steklov/scalar.hpp"

namespace steklov {

using Matrix4 = std::array<std::array<Scalar, 4>, 4>;
using Vector4 = std::array<Scalar, 4>;

// Laplace expansion along complementary 2x2 minors.
Scalar det4(const Matrix4& m);

// Transposed cofactor matrix: m * adjugate4(m) = det4(m) * I.
Matrix4 adjugate4(const Matrix4& m);

// Null direction of a numerically singular matrix: the largest-magnitude
// column of the adjugate, scaled to unit max entry.
Vector4 null_vector(const Matrix4& m);

Matrix4 mat_mul(const Matrix4& a, const Matrix4& b);
Matrix4 identity4();

}  // namespace steklov

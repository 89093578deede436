// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <array>

#include "steklov/geometry.hpp"
#include "steklov/scalar.hpp"

namespace steklov {

// The four-dimensional radial solution space of Delta^2 u = 0 for a fixed
// spherical-harmonic degree k. The characteristic exponents are
// (k, 2-n-k, k+2, 4-n-k); coincidences force log branches.
enum class RadialRegime {
    log2_0,   // n=2, k=0: {1, log r, r^2, r^2 log r}
    log2_1,   // n=2, k=1: {r, 1/r, r^3, r log r}
    log4_0,   // n=4, k=0: {1, r^-2, r^2, log r}
    generic,  // all exponents distinct
};

struct BasisFunction {
    long exponent;
    bool with_log;
};

struct RadialFamily {
    Dimension n;
    int k;
    RadialRegime regime;
    std::array<BasisFunction, 4> basis;

    long tau() const { return static_cast<long>(k) * (n.value() + k - 2); }
};

RadialFamily radial_family(Dimension n, int k);

using Coeffs = std::array<Scalar, 4>;

// alpha, alpha', the radial part of the Laplacian
// lap = alpha'' + (n-1) alpha'/r - tau alpha/r^2, and its r-derivative.
struct RadialState {
    Scalar alpha;
    Scalar alpha_r;
    Scalar lap;
    Scalar lap_r;
};

RadialState eval_state(const RadialFamily& fam, const Coeffs& coeffs, const Scalar& r);
RadialState basis_state(const RadialFamily& fam, int which, const Scalar& r);

// (alpha, alpha', alpha'', alpha''') of one basis function.
std::array<Scalar, 4> basis_derivatives(const RadialFamily& fam, int which, const Scalar& r);

// Coefficients (c0..c4) of the radial operator
//   c4 r^4 a'''' + c3 r^3 a''' + c2 r^2 a'' + c1 r a' + c0 a
// obtained by composing the polar Laplacian with itself.
std::array<long, 5> euler_coefficients(Dimension n, int k);

// Value of the operator above on the span; `term_scale`, when given, receives
// the largest absolute contribution (for relative residual checks).
Scalar biharmonic_residual(const RadialFamily& fam, const Coeffs& coeffs, const Scalar& r,
                           Scalar* term_scale = nullptr);

}  // namespace steklov

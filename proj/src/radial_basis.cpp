// SPDX-License-Identifier: Apache-2.0
#include "steklov/radial_basis.hpp"

#include <stdexcept>

namespace steklov {

RadialFamily radial_family(Dimension n, int k) {
    if (k < 0) throw std::domain_error("harmonic degree must be >= 0");
    const long nn = n.value();
    RadialFamily fam{n, k, RadialRegime::generic, {}};
    if (nn == 2 && k == 0) {
        fam.regime = RadialRegime::log2_0;
        fam.basis = {{{0, false}, {0, true}, {2, false}, {2, true}}};
    } else if (nn == 2 && k == 1) {
        fam.regime = RadialRegime::log2_1;
        fam.basis = {{{1, false}, {-1, false}, {3, false}, {1, true}}};
    } else if (nn == 4 && k == 0) {
        fam.regime = RadialRegime::log4_0;
        fam.basis = {{{0, false}, {-2, false}, {2, false}, {0, true}}};
    } else {
        fam.basis = {{{k, false}, {2 - nn - k, false}, {k + 2, false}, {4 - nn - k, false}}};
    }
    return fam;
}

namespace {

// Falling factorials P_m(x) = x(x-1)...(x-m+1) and their x-derivatives;
// (r^x)^(m) = P_m(x) r^{x-m} and (r^x log r)^(m) = r^{x-m} (P_m(x) log r + P_m'(x)).
long falling(long x, int m) {
    long p = 1;
    for (int i = 0; i < m; ++i) p *= x - i;
    return p;
}

long falling_deriv(long x, int m) {
    // sum over which factor is differentiated
    long total = 0;
    for (int skip = 0; skip < m; ++skip) {
        long p = 1;
        for (int i = 0; i < m; ++i)
            if (i != skip) p *= x - i;
        total += p;
    }
    return total;
}

}  // namespace

std::array<Scalar, 4> basis_derivatives(const RadialFamily& fam, int which, const Scalar& r) {
    if (r <= 0) throw std::domain_error("radius must be positive");
    const BasisFunction b = fam.basis.at(which);
    const Scalar rx = pow_int(r, b.exponent);
    std::array<Scalar, 4> out;
    Scalar shift = rx;  // r^{x-m}
    if (!b.with_log) {
        for (int m = 0; m < 4; ++m) {
            out[m] = falling(b.exponent, m) * shift;
            shift /= r;
        }
    } else {
        const Scalar lg = log(r);
        for (int m = 0; m < 4; ++m) {
            out[m] = (falling(b.exponent, m) * lg + falling_deriv(b.exponent, m)) * shift;
            shift /= r;
        }
    }
    return out;
}

RadialState basis_state(const RadialFamily& fam, int which, const Scalar& r) {
    if (r <= 0) throw std::domain_error("radius must be positive");
    const BasisFunction b = fam.basis.at(which);
    const long n = fam.n.value();
    const long x = b.exponent;
    const long m = x * (x + n - 2) - fam.tau();  // lap(r^x) = m r^{x-2}
    const Scalar rx = pow_int(r, x);
    const Scalar rx1 = rx / r;
    const Scalar rx2 = rx1 / r;
    const Scalar rx3 = rx2 / r;
    RadialState s;
    if (!b.with_log) {
        s.alpha = rx;
        s.alpha_r = x * rx1;
        s.lap = m * rx2;
        s.lap_r = m * (x - 2) * rx3;
    } else {
        const Scalar lg = log(r);
        s.alpha = rx * lg;
        s.alpha_r = rx1 * (x * lg + 1);
        s.lap = rx2 * (m * lg + (2 * x + n - 2));
        s.lap_r = rx3 * (m * (x - 2) * lg + m + (x - 2) * (2 * x + n - 2));
    }
    return s;
}

RadialState eval_state(const RadialFamily& fam, const Coeffs& coeffs, const Scalar& r) {
    RadialState total{Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    for (int j = 0; j < 4; ++j) {
        if (coeffs[j] == 0) continue;
        const RadialState s = basis_state(fam, j, r);
        total.alpha += coeffs[j] * s.alpha;
        total.alpha_r += coeffs[j] * s.alpha_r;
        total.lap += coeffs[j] * s.lap;
        total.lap_r += coeffs[j] * s.lap_r;
    }
    return total;
}

std::array<long, 5> euler_coefficients(Dimension n, int k) {
    const long nn = n.value();
    const long tau = static_cast<long>(k) * (nn + k - 2);
    // r^4 L(L(a)) with L(a) = a'' + (n-1) a'/r - tau a/r^2
    return {tau * (tau + 2 * nn - 8),                  // a
            -(2 * tau * (nn - 3) + (nn - 1) * (nn - 3)),  // r a'
            (nn - 1) * (nn - 3) - 2 * tau,             // r^2 a''
            2 * (nn - 1),                              // r^3 a'''
            1};                                        // r^4 a''''
}

Scalar biharmonic_residual(const RadialFamily& fam, const Coeffs& coeffs, const Scalar& r,
                           Scalar* term_scale) {
    if (r <= 0) throw std::domain_error("radius must be positive");
    const auto c = euler_coefficients(fam.n, fam.k);

    // fourth derivative is not part of basis_derivatives; extend locally
    std::array<Scalar, 5> deriv{Scalar(0), Scalar(0), Scalar(0), Scalar(0), Scalar(0)};
    for (int j = 0; j < 4; ++j) {
        if (coeffs[j] == 0) continue;
        const auto d = basis_derivatives(fam, j, r);
        for (int m = 0; m < 4; ++m) deriv[m] += coeffs[j] * d[m];
        const BasisFunction b = fam.basis[j];
        const Scalar r4 = pow_int(r, b.exponent - 4);
        if (!b.with_log)
            deriv[4] += coeffs[j] * falling(b.exponent, 4) * r4;
        else
            deriv[4] +=
                coeffs[j] * (falling(b.exponent, 4) * log(r) + falling_deriv(b.exponent, 4)) * r4;
    }

    Scalar residual(0);
    Scalar scale(0);
    Scalar rm(1);
    for (int m = 0; m <= 4; ++m) {
        const Scalar term = c[m] * rm * deriv[m];
        residual += term;
        scale = std::max(scale, abs(term));
        rm *= r;
    }
    if (term_scale != nullptr) *term_scale = scale;
    return residual;
}

}  // namespace steklov

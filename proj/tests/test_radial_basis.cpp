// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "steklov/linalg.hpp"
#include "steklov/prng.hpp"
#include "steklov/radial_basis.hpp"
#include "support.hpp"

using namespace steklov;
using steklov::testing::rel_close;

namespace {

// Euler operator applied to r^y for an arbitrary real exponent; equals the
// characteristic polynomial at y times r^y.
Scalar euler_on_power(Dimension n, int k, const Scalar& y, const Scalar& r) {
    const auto c = euler_coefficients(n, k);
    Scalar total(0);
    Scalar fall(1);
    Scalar rm = pow_scalar(r, y);
    for (int m = 0; m <= 4; ++m) {
        total += c[m] * fall * rm;  // c_m r^m * P_m(y) r^{y-m}
        fall *= y - m;
        // rm stays r^y: the r^m factor cancels r^{y-m}
    }
    return total;
}

Scalar characteristic_poly(Dimension n, int k, const Scalar& y) {
    const long nn = n.value();
    return (y - k) * (y - (2 - nn - k)) * (y - (k + 2)) * (y - (4 - nn - k));
}

}  // namespace

TEST_SUITE("radial_basis") {
    TEST_CASE("regime selection and exponents") {
        const auto f20 = radial_family(Dimension(2), 0);
        CHECK(f20.regime == RadialRegime::log2_0);
        CHECK(f20.basis[0].exponent == 0);
        CHECK(f20.basis[1].with_log);
        CHECK(f20.basis[2].exponent == 2);
        CHECK(f20.basis[3].with_log);

        const auto f21 = radial_family(Dimension(2), 1);
        CHECK(f21.regime == RadialRegime::log2_1);
        CHECK(f21.basis[0].exponent == 1);
        CHECK(f21.basis[1].exponent == -1);
        CHECK(f21.basis[2].exponent == 3);
        CHECK((f21.basis[3].exponent == 1 && f21.basis[3].with_log));

        const auto f40 = radial_family(Dimension(4), 0);
        CHECK(f40.regime == RadialRegime::log4_0);
        CHECK(f40.basis[1].exponent == -2);
        CHECK((f40.basis[3].exponent == 0 && f40.basis[3].with_log));

        const auto f53 = radial_family(Dimension(5), 3);
        CHECK(f53.regime == RadialRegime::generic);
        CHECK(f53.basis[0].exponent == 3);
        CHECK(f53.basis[1].exponent == -6);
        CHECK(f53.basis[2].exponent == 5);
        CHECK(f53.basis[3].exponent == -4);

        // exactly one regime per (n, k); log regimes only at the known spots
        for (int n = 2; n <= 8; ++n)
            for (int k = 0; k <= 6; ++k) {
                const auto fam = radial_family(Dimension(n), k);
                const bool special =
                    (n == 2 && k == 0) || (n == 2 && k == 1) || (n == 4 && k == 0);
                CHECK((fam.regime == RadialRegime::generic) == !special);
                if (!special)
                    for (int i = 0; i < 4; ++i)
                        for (int j = i + 1; j < 4; ++j)
                            CHECK(fam.basis[i].exponent != fam.basis[j].exponent);
            }
    }

    TEST_CASE("eval_state pins") {
        const Scalar one(1);
        const auto f30 = radial_family(Dimension(3), 0);
        const RadialState constant = eval_state(f30, {one, Scalar(0), Scalar(0), Scalar(0)},
                                                Scalar("0.7"));
        CHECK(constant.alpha == 1);
        CHECK(constant.alpha_r == 0);
        CHECK(constant.lap == 0);
        CHECK(constant.lap_r == 0);

        for (auto [n, k] : {std::pair{3, 0}, {3, 2}, {5, 1}, {6, 4}}) {
            const auto fam = radial_family(Dimension(n), k);
            const RadialState s = eval_state(fam, {Scalar(0), Scalar(0), one, Scalar(0)}, one);
            CHECK(rel_close(s.lap, Scalar(2 * (n + 2 * k)), rel_tolerance(5)));
        }

        const auto f21 = radial_family(Dimension(2), 1);
        const RadialState s = eval_state(f21, {Scalar(0), Scalar(0), Scalar(0), one}, one);
        CHECK(s.alpha == 0);
        CHECK(s.alpha_r == 1);
        CHECK(s.lap == 2);

        CHECK_THROWS_AS(eval_state(f21, {one, one, one, one}, Scalar(0)), std::domain_error);
        CHECK_THROWS_AS(eval_state(f21, {one, one, one, one}, Scalar(-1)), std::domain_error);
    }

    TEST_CASE("eval_state is linear in the coefficients") {
        SplitMix64 rng(7);
        for (int n : {2, 4, 5})
            for (int k : {0, 1, 3}) {
                const auto fam = radial_family(Dimension(n), k);
                Coeffs a, b, sum;
                for (int i = 0; i < 4; ++i) {
                    a[i] = rng.uniform(Scalar(-2), Scalar(2));
                    b[i] = rng.uniform(Scalar(-2), Scalar(2));
                    sum[i] = a[i] + b[i];
                }
                const Scalar r = rng.uniform(Scalar("0.2"), Scalar("0.9"));
                const RadialState sa = eval_state(fam, a, r);
                const RadialState sb = eval_state(fam, b, r);
                const RadialState ss = eval_state(fam, sum, r);
                const Scalar tol = rel_tolerance(5);
                CHECK(rel_close(ss.alpha, sa.alpha + sb.alpha, tol));
                CHECK(rel_close(ss.alpha_r, sa.alpha_r + sb.alpha_r, tol));
                CHECK(rel_close(ss.lap, sa.lap + sb.lap, tol));
                CHECK(rel_close(ss.lap_r, sa.lap_r + sb.lap_r, tol));
            }
    }

    TEST_CASE("basis functions are independent: derivative matrix at r=1/2") {
        for (int n = 2; n <= 8; ++n)
            for (int k = 0; k <= 6; ++k) {
                const auto fam = radial_family(Dimension(n), k);
                Matrix4 w;
                for (int j = 0; j < 4; ++j) {
                    const auto d = basis_derivatives(fam, j, Scalar(1) / 2);
                    for (int i = 0; i < 4; ++i) w[i][j] = d[i];
                }
                CHECK(abs(det4(w)) > 0);
            }
    }

    TEST_CASE("biharmonic residual vanishes on the span") {
        SplitMix64 rng(11);
        for (int n = 2; n <= 8; ++n)
            for (int k = 0; k <= 6; ++k) {
                const auto fam = radial_family(Dimension(n), k);
                Coeffs ones{Scalar(1), Scalar(1), Scalar(1), Scalar(1)};
                Coeffs random;
                for (int i = 0; i < 4; ++i) random[i] = rng.uniform(Scalar(-3), Scalar(3));
                for (int tenths = 1; tenths <= 9; ++tenths) {
                    const Scalar r = Scalar(tenths) / 10;
                    for (const Coeffs& c : {ones, random}) {
                        Scalar scale;
                        const Scalar res = biharmonic_residual(fam, c, r, &scale);
                        CHECK(abs(res) <= rel_tolerance(10) * std::max(scale, Scalar(1)));
                    }
                }
            }
    }

    TEST_CASE("perturbed exponent leaves the kernel") {
        const Dimension n(3);
        const int k = 1;
        const Scalar y = Scalar(k) + Scalar(1) / 100;
        const Scalar r("0.3");
        const Scalar direct = euler_on_power(n, k, y, r);
        const Scalar expected = characteristic_poly(n, k, y) * pow_scalar(r, y);
        CHECK(rel_close(direct, expected, rel_tolerance(8)));
        CHECK(abs(direct) > Scalar("1e-4"));  // bounded away from zero

        // the characteristic roots themselves annihilate the operator
        for (const long root : {1L, -2L, 3L, 0L})
            CHECK(abs(euler_on_power(n, k, Scalar(root), r)) <= rel_tolerance(10));
    }
}

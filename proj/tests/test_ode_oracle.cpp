// SPDX-License-Identifier: Apache-2.0
#include <doctest.h>

#include "steklov/ode_oracle.hpp"
#include "support.hpp"

using namespace steklov;
using steklov::testing::rel_close;

namespace {

// fundamental matrix from the closed-form basis, in log-radius derivatives
Matrix4 closed_form_fundamental(Dimension n, int k, const Scalar& eps) {
    const auto fam = radial_family(n, k);
    const auto column = [&](int j, const Scalar& r) {
        const auto d = basis_derivatives(fam, j, r);
        Vector4 v;
        v[0] = d[0];
        v[1] = r * d[1];
        v[2] = r * d[1] + r * r * d[2];
        v[3] = r * d[1] + 3 * r * r * d[2] + r * r * r * d[3];
        return v;
    };
    Matrix4 v_eps, v_one;
    for (int j = 0; j < 4; ++j) {
        const Vector4 ce = column(j, eps);
        const Vector4 c1 = column(j, Scalar(1));
        for (int i = 0; i < 4; ++i) {
            v_eps[i][j] = ce[i];
            v_one[i][j] = c1[i];
        }
    }
    // v_one * v_eps^{-1} via the adjugate
    const Scalar det = det4(v_eps);
    Matrix4 inv = adjugate4(v_eps);
    for (auto& row : inv)
        for (auto& x : row) x /= det;
    return mat_mul(v_one, inv);
}

Scalar matrix_distance(const Matrix4& a, const Matrix4& b) {
    Scalar dist(0), scale(0);
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            dist = std::max(dist, abs(a[i][j] - b[i][j]));
            scale = std::max({scale, abs(a[i][j]), abs(b[i][j])});
        }
    return dist / scale;
}

}  // namespace

TEST_SUITE("ode_oracle") {
    TEST_CASE("shot determinant vanishes at known eigenvalues") {
        ShootingConfig cfg;
        {
            const AnnulusDomain dom{Dimension(3), Scalar("0.5")};
            const Scalar at_root = shoot_determinant(ProblemKind::type2, dom, 0, Scalar(4), cfg);
            const Scalar away = shoot_determinant(ProblemKind::type2, dom, 0, Scalar(3), cfg);
            CHECK(abs(at_root) <= Scalar("1e-18") * abs(away));
        }
        {
            const AnnulusDomain dom{Dimension(3), Scalar("0.5")};
            const Scalar at_zero = shoot_determinant(ProblemKind::type1, dom, 0, Scalar(0), cfg);
            const Scalar away = shoot_determinant(ProblemKind::type1, dom, 0, Scalar(5), cfg);
            CHECK(abs(at_zero) <= Scalar("1e-18") * abs(away));
        }
        {
            // between the two pencil roots the determinant stays away from zero
            const AnnulusDomain dom{Dimension(3), Scalar("0.5")};
            const auto roots = solve_pencil(extract_pencil(ProblemKind::type1, dom, 1));
            const Scalar mid = (roots.roots[0].value + roots.roots[1].value) / 2;
            const Scalar at_mid = shoot_determinant(ProblemKind::type1, dom, 1, mid, cfg);
            const Scalar at_root =
                shoot_determinant(ProblemKind::type1, dom, 1, roots.roots[0].value, cfg);
            CHECK(abs(at_mid) > Scalar("1e10") * abs(at_root));
        }
    }

    TEST_CASE("oracle eigenvalues agree with the pencil") {
        ShootingConfig cfg;
        {
            const AnnulusDomain dom{Dimension(3), Scalar("0.25")};
            const Scalar lam =
                oracle_eigenvalue(ProblemKind::type2, dom, 0, Scalar(2), Scalar(4), cfg);
            CHECK(abs(lam - Scalar(8) / 3) <= Scalar("1e-25"));
        }
        {
            const AnnulusDomain dom{Dimension(4), Scalar("0.1")};
            const auto roots = solve_pencil(extract_pencil(ProblemKind::type1, dom, 1));
            const Scalar lam =
                oracle_eigenvalue(ProblemKind::type1, dom, 1, Scalar(5), Scalar(7), cfg);
            CHECK(abs(lam - roots.roots[0].value) <= Scalar("1e-20"));
        }
        {
            const AnnulusDomain dom{Dimension(2), Scalar("0.3")};
            const auto roots = solve_pencil(extract_pencil(ProblemKind::type2, dom, 0));
            const Scalar hi = roots.roots[1].value;
            const Scalar lam = oracle_eigenvalue(ProblemKind::type2, dom, 0, hi - 1, hi + 1, cfg);
            CHECK(abs(lam - hi) <= Scalar("1e-20"));
        }
        {
            const AnnulusDomain dom{Dimension(3), Scalar("0.5")};
            CHECK_THROWS_AS(
                oracle_eigenvalue(ProblemKind::type2, dom, 0, Scalar(30), Scalar(40), cfg),
                std::runtime_error);
        }
    }

    TEST_CASE("cross-validation on a reduced box") {
        ShootingConfig cfg;
        for (const auto kind : {ProblemKind::type1, ProblemKind::type2})
            for (int n : {2, 4})
                for (int k : {0, 1}) {
                    const AnnulusDomain dom{Dimension(n), Scalar("0.5")};
                    const auto roots = solve_pencil(extract_pencil(kind, dom, k));
                    for (const auto& root : roots.roots) {
                        if (kind == ProblemKind::type1 && root.value == 0) continue;
                        const Scalar spread = std::max(abs(root.value) / 1000, Scalar("1e-3"));
                        const Scalar lam = oracle_eigenvalue(kind, dom, k, root.value - spread,
                                                             root.value + spread, cfg);
                        CHECK(abs(lam - root.value) <= Scalar("1e-20"));
                    }
                }
    }

    TEST_CASE("integrator converges at eighth order") {
        const Dimension n(3);
        const Scalar eps("0.5");
        const Matrix4 reference = shoot_fundamental(n, 1, eps, 8192);
        Scalar prev(0);
        for (const int steps : {128, 256, 512}) {
            const Matrix4 y = shoot_fundamental(n, 1, eps, steps);
            const Scalar err = matrix_distance(y, reference);
            if (prev > 0) CHECK(prev / err > 200);  // 2^8 = 256 per halving
            prev = err;
        }
    }

    TEST_CASE("transfer matrix reproduces the closed-form basis") {
        for (auto [n, k] : {std::pair{2, 0}, {3, 1}, {5, 2}}) {
            const Scalar eps("0.5");
            const Matrix4 shot = shoot_fundamental(Dimension(n), k, eps, 2048);
            const Matrix4 closed = closed_form_fundamental(Dimension(n), k, eps);
            CHECK(matrix_distance(shot, closed) <= Scalar("1e-18"));

            // Wronskian evolution: det of the transfer matrix is eps^{2(n-4)}
            const Scalar det = det4(shot);
            const Scalar expected = pow_int(eps, 2 * (n - 4));
            CHECK(rel_close(det, expected, Scalar("1e-15")));
        }
    }

    TEST_CASE("input validation") {
        CHECK_THROWS_AS(shoot_fundamental(Dimension(3), 1, Scalar("0.5"), 32), std::domain_error);
        CHECK_THROWS_AS(shoot_fundamental(Dimension(3), 1, Scalar("1.5"), 256),
                        std::domain_error);
        ShootingConfig cfg;
        const AnnulusDomain tiny{Dimension(3), Scalar("0.01")};
        CHECK_THROWS_AS(shoot_determinant(ProblemKind::type1, tiny, 1, Scalar(5), cfg),
                        std::domain_error);
        cfg.allow_tiny_eps = true;
        CHECK_NOTHROW(shoot_determinant(ProblemKind::type1, tiny, 1, Scalar(5), cfg));
    }
}

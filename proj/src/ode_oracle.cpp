// SPDX-License-Identifier: Apache-2.0
#include "steklov/ode_oracle.hpp"

#include <stdexcept>
#include <vector>

namespace steklov {

namespace {

// Companion matrix of the constant-coefficient form of the radial equation.
// Composing the polar Laplacian with itself in t = log r gives
//   (D^2 + (n-6) D + (8-2n-tau)) (D^2 + (n-2) D - tau) f = 0.
Matrix4 companion_matrix(Dimension n, int k) {
    const long nn = n.value();
    const long tau = static_cast<long>(k) * (nn + k - 2);
    const long q1c = 8 - 2 * nn - tau, q1b = nn - 6;
    const long q2c = -tau, q2b = nn - 2;
    const long e0 = q1c * q2c;
    const long e1 = q1c * q2b + q1b * q2c;
    const long e2 = q1c + q1b * q2b + q2c;
    const long e3 = q1b + q2b;

    Matrix4 m = identity4();
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) m[i][j] = Scalar(0);
    m[0][1] = m[1][2] = m[2][3] = 1;
    m[3][0] = Scalar(-e0);
    m[3][1] = Scalar(-e1);
    m[3][2] = Scalar(-e2);
    m[3][3] = Scalar(-e3);
    return m;
}

// Cooper--Verner 11-stage eighth-order explicit scheme; the tableau lives in
// Q(sqrt 21), evaluated at working precision.
struct Tableau {
    std::array<std::array<Scalar, 11>, 11> a{};
    std::array<Scalar, 11> b{};
};

Tableau cooper_verner() {
    const Scalar q = sqrt(Scalar(21));
    Tableau t;
    auto& a = t.a;
    a[1][0] = Scalar(1) / 2;
    a[2][0] = Scalar(1) / 4;
    a[2][1] = Scalar(1) / 4;
    a[3][0] = Scalar(1) / 7;
    a[3][1] = (-7 - 3 * q) / 98;
    a[3][2] = (21 + 5 * q) / 49;
    a[4][0] = (11 + q) / 84;
    a[4][2] = (18 + 4 * q) / 63;
    a[4][3] = (21 - q) / 252;
    a[5][0] = (5 + q) / 48;
    a[5][2] = (9 + q) / 36;
    a[5][3] = (-231 + 14 * q) / 360;
    a[5][4] = (63 - 7 * q) / 80;
    a[6][0] = (10 - q) / 42;
    a[6][2] = (-432 + 92 * q) / 315;
    a[6][3] = (633 - 145 * q) / 90;
    a[6][4] = (-504 + 115 * q) / 70;
    a[6][5] = (63 - 13 * q) / 35;
    a[7][0] = Scalar(1) / 14;
    a[7][4] = (14 - 3 * q) / 126;
    a[7][5] = (13 - 3 * q) / 63;
    a[7][6] = Scalar(1) / 9;
    a[8][0] = Scalar(1) / 32;
    a[8][4] = (91 - 21 * q) / 576;
    a[8][5] = Scalar(11) / 72;
    a[8][6] = (-385 - 75 * q) / 1152;
    a[8][7] = (63 + 13 * q) / 128;
    a[9][0] = Scalar(1) / 14;
    a[9][4] = Scalar(1) / 9;
    a[9][5] = (-733 - 147 * q) / 2205;
    a[9][6] = (515 + 111 * q) / 504;
    a[9][7] = (-51 - 11 * q) / 56;
    a[9][8] = (132 + 28 * q) / 245;
    a[10][4] = (-42 + 7 * q) / 18;
    a[10][5] = (-18 + 28 * q) / 45;
    a[10][6] = (-273 - 53 * q) / 72;
    a[10][7] = (301 + 53 * q) / 72;
    a[10][8] = (28 - 28 * q) / 45;
    a[10][9] = (49 - 7 * q) / 18;
    t.b[0] = Scalar(1) / 20;
    t.b[7] = Scalar(49) / 180;
    t.b[8] = Scalar(16) / 45;
    t.b[9] = Scalar(49) / 180;
    t.b[10] = Scalar(1) / 20;
    return t;
}

Matrix4 mat_scale_add(const Matrix4& base, const Matrix4& add, const Scalar& factor) {
    Matrix4 out = base;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] += factor * add[i][j];
    return out;
}

// One-step propagator of the autonomous linear system y' = M y: the RK stage
// recursion applied to the identity. Stepping is then matrix application.
Matrix4 step_propagator(const Matrix4& m, const Scalar& h) {
    const Tableau t = cooper_verner();
    std::array<Matrix4, 11> k;
    for (int i = 0; i < 11; ++i) {
        Matrix4 yi = identity4();
        for (int j = 0; j < i; ++j) {
            if (t.a[i][j] == 0) continue;
            yi = mat_scale_add(yi, k[j], h * t.a[i][j]);
        }
        k[i] = mat_mul(m, yi);
    }
    Matrix4 r = identity4();
    for (int i = 0; i < 11; ++i) {
        if (t.b[i] == 0) continue;
        r = mat_scale_add(r, k[i], h * t.b[i]);
    }
    return r;
}

bool finite(const Matrix4& m) {
    for (const auto& row : m)
        for (const auto& v : row)
            if (!isfinite(v)) return false;
    return true;
}

struct OracleSystem {
    ProblemKind kind;
    Dimension n;
    int k;
    Scalar eps;
    Matrix4 fundamental;

    // boundary rows at one endpoint from the state components of a solution
    // (alpha = f, alpha' = Df/r, lap = (D^2 f + (n-2) Df - tau f)/r^2,
    //  lap' = (D^3 f + (n-4) D^2 f - (tau+2n-4) Df + 2 tau f)/r^3)
    Scalar det_at(const Scalar& lambda) const {
        const long nn = n.value();
        const long tau = static_cast<long>(k) * (nn + k - 2);
        const Scalar e1 = eps, e2 = eps * eps, e3 = e2 * eps;

        Matrix4 rows;
        for (int j = 0; j < 4; ++j) {
            // initial data at r = eps is the identity basis e_j
            const Scalar f = (j == 0) ? 1 : 0;
            const Scalar df = (j == 1) ? 1 : 0;
            const Scalar d2f = (j == 2) ? 1 : 0;
            const Scalar d3f = (j == 3) ? 1 : 0;
            const Scalar alpha = f;
            const Scalar alpha_r = df / e1;
            const Scalar lap = (d2f + (nn - 2) * df - tau * f) / e2;
            const Scalar lap_r = (d3f + (nn - 4) * d2f - (tau + 2 * nn - 4) * df + 2 * tau * f) / e3;

            // integrated data at r = 1
            const Scalar F = fundamental[0][j];
            const Scalar DF = fundamental[1][j];
            const Scalar D2F = fundamental[2][j];
            const Scalar D3F = fundamental[3][j];
            const Scalar Alpha = F;
            const Scalar Alpha_r = DF;
            const Scalar Lap = D2F + (nn - 2) * DF - tau * F;
            const Scalar Lap_r = D3F + (nn - 4) * D2F - (tau + 2 * nn - 4) * DF + 2 * tau * F;

            if (kind == ProblemKind::type1) {
                rows[0][j] = alpha_r;
                rows[1][j] = -lap_r + lambda * alpha;
                rows[2][j] = Alpha_r;
                rows[3][j] = Lap_r + lambda * Alpha;
            } else {
                rows[0][j] = alpha;
                rows[1][j] = lap + lambda * alpha_r;
                rows[2][j] = Alpha;
                rows[3][j] = Lap - lambda * Alpha_r;
            }
        }
        return det4(rows);
    }
};

OracleSystem make_system(ProblemKind kind, const AnnulusDomain& dom, int k,
                         const ShootingConfig& cfg) {
    if (!cfg.allow_tiny_eps && dom.eps < Scalar(1) / 20)
        throw std::domain_error("oracle defaults to eps >= 0.05; set allow_tiny_eps to override");
    OracleSystem sys{kind, dom.n, k, dom.eps, {}};
    int steps = cfg.integration_steps;
    for (int attempt = 0;; ++attempt) {
        sys.fundamental = shoot_fundamental(dom.n, k, dom.eps, steps);
        if (finite(sys.fundamental)) return sys;
        if (attempt >= cfg.max_step_doublings)
            throw std::runtime_error("shooting integration overflowed after step refinement");
        steps *= 2;
    }
}

}  // namespace

Matrix4 shoot_fundamental(Dimension n, int k, const Scalar& eps, int steps) {
    if (!(eps > 0 && eps < 1)) throw std::domain_error("need 0 < eps < 1");
    if (steps < 64) throw std::domain_error("need at least 64 integration steps");
    const Matrix4 m = companion_matrix(n, k);
    const Scalar t0 = log(eps);
    const Scalar h = -t0 / steps;
    const Matrix4 r = step_propagator(m, h);
    Matrix4 y = identity4();
    for (int s = 0; s < steps; ++s) y = mat_mul(r, y);
    return y;
}

Scalar shoot_determinant(ProblemKind kind, const AnnulusDomain& dom, int k, const Scalar& lambda,
                         const ShootingConfig& cfg) {
    return make_system(kind, dom, k, cfg).det_at(lambda);
}

Scalar oracle_eigenvalue(ProblemKind kind, const AnnulusDomain& dom, int k, const Scalar& lo,
                         const Scalar& hi, const ShootingConfig& cfg) {
    if (!(lo < hi)) throw std::domain_error("bracket must satisfy lo < hi");
    const OracleSystem sys = make_system(kind, dom, k, cfg);

    Scalar a = lo, b = hi;
    Scalar fa = sys.det_at(a), fb = sys.det_at(b);
    if (fa == 0) return a;
    if (fb == 0) return b;
    if ((fa > 0) == (fb > 0))
        throw std::runtime_error("determinant does not change sign on the bracket");

    // Illinois variant: secant steps with stale-endpoint damping, bisection
    // fallback keeps the bracket shrinking
    int last_side = 0;
    for (int iter = 0; iter < 4000 && (b - a) > cfg.root_tolerance; ++iter) {
        Scalar mid = (fb != fa) ? (a - fa * (b - a) / (fb - fa)) : (a + b) / 2;
        const Scalar lo_guard = a + (b - a) / 1024;
        const Scalar hi_guard = b - (b - a) / 1024;
        if (!(mid > lo_guard && mid < hi_guard)) mid = (a + b) / 2;
        const Scalar fm = sys.det_at(mid);
        if (fm == 0) return mid;
        if ((fm > 0) == (fa > 0)) {
            a = mid;
            fa = fm;
            if (last_side == -1) fb /= 2;
            last_side = -1;
        } else {
            b = mid;
            fb = fm;
            if (last_side == +1) fa /= 2;
            last_side = +1;
        }
    }
    return (a + b) / 2;
}

}  // namespace steklov

// SPDX-License-Identifier: Apache-2.0
#include "steklov/linalg.hpp"

#include <stdexcept>

namespace steklov {

Scalar det4(const Matrix4& m) {
    const auto minor01 = [&m](int i, int j) { return m[0][i] * m[1][j] - m[0][j] * m[1][i]; };
    const auto minor23 = [&m](int i, int j) { return m[2][i] * m[3][j] - m[2][j] * m[3][i]; };
    return minor01(0, 1) * minor23(2, 3) - minor01(0, 2) * minor23(1, 3) +
           minor01(0, 3) * minor23(1, 2) + minor01(1, 2) * minor23(0, 3) -
           minor01(1, 3) * minor23(0, 2) + minor01(2, 3) * minor23(0, 1);
}

namespace {

Scalar det3(const Matrix4& m, const std::array<int, 3>& rows, const std::array<int, 3>& cols) {
    const auto& a = m[rows[0]];
    const auto& b = m[rows[1]];
    const auto& c = m[rows[2]];
    return a[cols[0]] * (b[cols[1]] * c[cols[2]] - b[cols[2]] * c[cols[1]]) -
           a[cols[1]] * (b[cols[0]] * c[cols[2]] - b[cols[2]] * c[cols[0]]) +
           a[cols[2]] * (b[cols[0]] * c[cols[1]] - b[cols[1]] * c[cols[0]]);
}

std::array<int, 3> others(int skip) {
    std::array<int, 3> out{};
    int w = 0;
    for (int i = 0; i < 4; ++i)
        if (i != skip) out[w++] = i;
    return out;
}

}  // namespace

Matrix4 adjugate4(const Matrix4& m) {
    Matrix4 adj;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            const Scalar cof = det3(m, others(i), others(j));
            adj[j][i] = ((i + j) % 2 == 0) ? cof : -cof;
        }
    return adj;
}

namespace {

// worst per-row relative annihilation of m by v
Scalar null_quality(const Matrix4& m, const Vector4& v) {
    Scalar worst(0);
    for (int i = 0; i < 4; ++i) {
        Scalar sum(0), scale(0);
        for (int j = 0; j < 4; ++j) {
            const Scalar term = m[i][j] * v[j];
            sum += term;
            scale = std::max(scale, abs(term));
        }
        worst = std::max(worst, (scale > 0) ? abs(sum) / scale : abs(sum));
    }
    return worst;
}

Vector4 normalized(Vector4 v) {
    Scalar vmax(0);
    for (const auto& x : v) vmax = std::max(vmax, abs(x));
    if (vmax == 0) throw std::runtime_error("null direction undetermined");
    for (auto& x : v) x /= vmax;
    return v;
}

// largest-magnitude adjugate column; each cofactor is scale-homogeneous in the
// rows and columns it uses, so wildly ranged entries are handled as-is
Vector4 adjugate_candidate(const Matrix4& m) {
    const Matrix4 adj = adjugate4(m);
    int best = 0;
    Scalar best_norm(-1);
    for (int j = 0; j < 4; ++j) {
        Scalar norm(0);
        for (int i = 0; i < 4; ++i) norm = std::max(norm, abs(adj[i][j]));
        if (norm > best_norm) {
            best_norm = norm;
            best = j;
        }
    }
    Vector4 v;
    for (int i = 0; i < 4; ++i) v[i] = adj[i][best];
    return normalized(v);
}

// full-pivot elimination on a row-balanced copy
Vector4 elimination_candidate(const Matrix4& m) {
    Matrix4 a = m;
    for (int i = 0; i < 4; ++i) {
        Scalar norm(0);
        for (int j = 0; j < 4; ++j) norm = std::max(norm, abs(a[i][j]));
        if (norm == 0) throw std::runtime_error("zero row; null direction undetermined");
        for (int j = 0; j < 4; ++j) a[i][j] /= norm;
    }
    std::array<bool, 4> used_row{}, used_col{};
    std::array<int, 3> pivot_row{}, pivot_col{};
    for (int step = 0; step < 3; ++step) {
        int pr = -1, pc = -1;
        Scalar best(-1);
        for (int i = 0; i < 4; ++i) {
            if (used_row[i]) continue;
            for (int j = 0; j < 4; ++j) {
                if (used_col[j]) continue;
                if (abs(a[i][j]) > best) {
                    best = abs(a[i][j]);
                    pr = i;
                    pc = j;
                }
            }
        }
        if (best == 0) throw std::runtime_error("rank below 3; null direction undetermined");
        used_row[pr] = used_col[pc] = true;
        pivot_row[step] = pr;
        pivot_col[step] = pc;
        for (int i = 0; i < 4; ++i) {
            if (i == pr || a[i][pc] == 0) continue;
            const Scalar f = a[i][pc] / a[pr][pc];
            for (int j = 0; j < 4; ++j) a[i][j] -= f * a[pr][j];
            a[i][pc] = 0;
        }
    }
    int free_col = 0;
    while (used_col[free_col]) ++free_col;
    Vector4 v;
    for (int j = 0; j < 4; ++j) v[j] = Scalar(0);
    v[free_col] = 1;
    for (int step = 0; step < 3; ++step)
        v[pivot_col[step]] = -a[pivot_row[step]][free_col] / a[pivot_row[step]][pivot_col[step]];
    return normalized(v);
}

}  // namespace

Vector4 null_vector(const Matrix4& m) {
    // two candidates with complementary failure modes; keep the one that
    // actually annihilates the rows better
    const Vector4 a = adjugate_candidate(m);
    const Vector4 b = elimination_candidate(m);
    return (null_quality(m, a) <= null_quality(m, b)) ? a : b;
}

Matrix4 mat_mul(const Matrix4& a, const Matrix4& b) {
    Matrix4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) {
            Scalar s(0);
            for (int k = 0; k < 4; ++k) s += a[i][k] * b[k][j];
            out[i][j] = s;
        }
    return out;
}

Matrix4 identity4() {
    Matrix4 out;
    for (int i = 0; i < 4; ++i)
        for (int j = 0; j < 4; ++j) out[i][j] = Scalar(i == j ? 1 : 0);
    return out;
}

}  // namespace steklov
